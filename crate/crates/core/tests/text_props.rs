mod strategies;

use std::str::FromStr;

use gradweyl::cideal::{ideal_normalize, GradedIdeal};
use gradweyl::cmod::{Module, ProjMod, SimpleMod};
use gradweyl::cring::{AlmostAut, CElement};
use gradweyl::k0::{class_of, K0Elem};
use gradweyl::pic::PicElem;
use gradweyl::weyl::{PElem, WeylElem};
use gradweyl::{Error, FinSet, Isometry, Poly};
use proptest::prelude::*;
use strategies::*;

fn reparses<T>(v: &T) -> bool
where
    T: FromStr<Err = Error> + std::fmt::Display + PartialEq,
{
    T::from_str(&v.to_string()).map(|w| w == *v).unwrap_or(false)
}

proptest! {
    #[test]
    fn algebra_elements_reparse(c in celement(), w in weyl(), p in poly(4), j in finset(4, 30)) {
        prop_assert!(reparses(&c));
        prop_assert!(reparses(&w));
        prop_assert!(reparses(&p));
        prop_assert!(reparses(&j));
        let e = PElem::term(j.len() as i64 - 2, c);
        prop_assert!(reparses(&e));
    }

    #[test]
    fn group_elements_reparse(f in pic(), h in isometry(40)) {
        prop_assert!(reparses(&f));
        prop_assert!(reparses(&h));
        prop_assert!(reparses(&AlmostAut::from_index_map(h)));
    }

    #[test]
    fn module_data_reparses(ts in prop::collection::vec(finset(3, 4), 0..=3), n in -9i64..=9, g in prop::collection::vec((nonzero_poly(2), finset(2, 3)), 0..=2)) {
        let p = ProjMod::new(ts);
        let m = Module::new(p.clone(), [SimpleMod::X(n), SimpleMod::Y(-n)]);
        prop_assert!(reparses(&p));
        prop_assert!(reparses(&m));
        prop_assert!(reparses(&class_of(&m)));
        let ideal: GradedIdeal = ideal_normalize(&g).unwrap();
        prop_assert!(reparses(&ideal));
    }

    /// Arbitrary input never panics, and parse errors point inside the input.
    #[test]
    fn garbage_is_rejected_with_a_position(s in "[xyzu0-9{},+*()^/ -]{0,16}") {
        for r in [
            CElement::from_str(&s).err(),
            WeylElem::from_str(&s).err(),
            K0Elem::from_str(&s).err(),
            PicElem::from_str(&s).err(),
            FinSet::from_str(&s).err(),
            Isometry::from_str(&s).err(),
            Poly::from_str(&s).err(),
        ].into_iter().flatten() {
            if let Error::Parse(e) = r {
                prop_assert!(e.position <= s.len());
            }
        }
    }
}
