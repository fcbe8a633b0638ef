mod strategies;

use gradweyl::cring::CElement;
use gradweyl::weyl::{
    b_from_c, c_from_b, iota_component, iota_ideal, monomial_product, PElem, WeylElem,
};
use gradweyl::{h_poly, Poly};
use proptest::prelude::*;
use strategies::*;

fn pelem() -> impl Strategy<Value = PElem> {
    prop::collection::vec((-3i64..=3, celement()), 0..=3).prop_map(|ts| {
        ts.into_iter()
            .fold(PElem::zero(), |acc, (n, c)| &acc + &PElem::term(n, c))
    })
}

proptest! {
    #[test]
    fn weyl_is_a_ring(a in weyl(), b in weyl(), c in weyl()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &WeylElem::one(), a.clone());
        let jacobi = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a)))
            + &c.commutator(&a.commutator(&b));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn monomials_multiply_by_the_table(a in 0u32..=5, k in 0u32..=5) {
        let (a, k) = (i64::from(a), i64::from(k));
        let x = WeylElem::x().pow(a as u32);
        let y = WeylElem::y().pow(k as u32);
        prop_assert_eq!(&x * &y, WeylElem::term(a - k, monomial_product(a, -k)));
        prop_assert_eq!(&y * &x, WeylElem::term(a - k, monomial_product(-k, a)));
    }

    #[test]
    fn degrees_add(m in -4i64..=4, n in -4i64..=4, f in nonzero_poly(2), g in nonzero_poly(2)) {
        let prod = &WeylElem::term(m, f) * &WeylElem::term(n, g);
        prop_assert!(prod.is_zero() || prod.is_homogeneous() == Some(m + n));
    }

    /// `(ι_J A)_0 = h_J·k[z]`, and every generator of `ι_n A` lies in `ι_n A`.
    #[test]
    fn iota_components(j in finset(4, 6), n in -6i64..=6) {
        prop_assert_eq!(iota_component(&j, 0), h_poly(&j));
        let single = gradweyl::FinSet::singleton(n);
        for g in iota_ideal(n) {
            let d = g.is_homogeneous().unwrap();
            prop_assert!(iota_component(&single, d).divides(&g.component(d)));
        }
    }

    #[test]
    fn z_acts_through_the_shifted_polynomial(n in -5i64..=5, c in celement()) {
        let p = PElem::term(n, c.clone());
        prop_assert_eq!(p.left_act(&WeylElem::z()), PElem::term(n, c.mul_poly(&Poly::linear_root(n))));
    }

    #[test]
    fn bimodule_is_a_left_module(p in pelem(), a in weyl(), b in weyl()) {
        prop_assert_eq!(p.left_act(&b).left_act(&a), p.left_act(&(&a * &b)));
        prop_assert_eq!(p.left_act(&(&a + &b)), &p.left_act(&a) + &p.left_act(&b));
    }

    #[test]
    fn x_then_y_is_z_on_the_bimodule(p in pelem()) {
        let xy = &WeylElem::x() * &WeylElem::y();
        prop_assert_eq!(p.left_act(&WeylElem::y()).left_act(&WeylElem::x()), p.left_act(&xy));
    }

    #[test]
    fn b_and_c_correspond(c in celement()) {
        let b = b_from_c(&c);
        let back = b.iter().try_fold(CElement::zero(), |acc, t| c_from_b(t).map(|e| &acc + &e)).unwrap();
        prop_assert_eq!(back, c.clone());
        prop_assert_eq!(b.len(), c.num_terms());
    }
}
