mod strategies;

use gradweyl::cmod::{
    ext1_dim, generates, proj_canonical_chain, proj_iso, surjects_onto_twist, tensor, Module,
    ProjMod, SimpleMod,
};
use gradweyl::k0::{class_of, class_of_proj, class_of_simple, K0Elem};
use gradweyl::pic::PicElem;
use gradweyl::FinSet;
use num_bigint::BigInt;
use proptest::prelude::*;
use strategies::*;

fn proj() -> impl Strategy<Value = ProjMod> {
    prop::collection::vec(finset(3, 4), 1..=4).prop_map(ProjMod::new)
}

fn special() -> impl Strategy<Value = SimpleMod> {
    (any::<bool>(), -8i64..=8).prop_map(|(x, n)| if x { SimpleMod::X(n) } else { SimpleMod::Y(n) })
}

fn module() -> impl Strategy<Value = Module> {
    (proj(), prop::collection::vec(special(), 0..=3)).prop_map(|(p, s)| Module::new(p, s))
}

fn k0() -> impl Strategy<Value = K0Elem> {
    (-5i64..=5, prop::collection::btree_map(-4i64..=4, -5i64..=5, 0..=4)).prop_map(|(c, pts)| {
        pts.into_iter().fold(K0Elem::constant(BigInt::from(c)), |acc, (m, a)| {
            &acc + &K0Elem::u(m).scale(&BigInt::from(a))
        })
    })
}

proptest! {
    #[test]
    fn canonical_chain_is_a_nested_representative(p in proj()) {
        let chain = proj_canonical_chain(&p);
        prop_assert!(proj_iso(&p, &chain));
        let ts = chain.twists();
        prop_assert!(ts.iter().all(|a| ts.iter().all(|b| a.is_subset(b) || b.is_subset(a))));
        prop_assert_eq!(proj_canonical_chain(&chain), chain);
    }

    #[test]
    fn tensor_of_projectives_matches_k0(p in proj(), q in proj()) {
        let pq = p.tensor(&q);
        prop_assert!(proj_iso(&pq, &q.tensor(&p)));
        prop_assert_eq!(class_of_proj(&pq), &class_of_proj(&p) * &class_of_proj(&q));
    }

    #[test]
    fn tensor_with_c_is_identity(m in module()) {
        let c = Module::from(ProjMod::free(1));
        prop_assert_eq!(tensor(&c, &m).unwrap(), m.clone());
        prop_assert_eq!(class_of(&tensor(&m, &c).unwrap()), class_of(&m));
    }

    #[test]
    fn twisting_is_an_involution(s in special(), j in finset(4, 8)) {
        prop_assert_eq!(s.twist(&j).twist(&j), s.clone());
        let cj = Module::from(ProjMod::twist_of_c(j.clone()));
        prop_assert_eq!(tensor(&cj, &Module::from(s.clone())).unwrap(), Module::from(s.twist(&j)));
        prop_assert_eq!(class_of_simple(&s.twist(&j)), &class_of(&cj) * &class_of_simple(&s));
    }

    #[test]
    fn two_term_generation_is_surjection(i in finset(3, 4), j in finset(3, 4), k in finset(3, 4)) {
        prop_assert_eq!(generates(&[i.clone(), j.clone()], &k).unwrap(), surjects_onto_twist(&i, &j, &k));
        prop_assert!(generates(std::slice::from_ref(&k), &k).unwrap());
    }

    #[test]
    fn ext_is_symmetric(s in special(), t in special()) {
        prop_assume!(s != t);
        prop_assert_eq!(ext1_dim(&s, &t).unwrap(), ext1_dim(&t, &s).unwrap());
    }

    #[test]
    fn k0_is_a_commutative_ring(a in k0(), b in k0(), c in k0()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &K0Elem::one(), a.clone());
        prop_assert_eq!((&a * &b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn rank_zero_part_is_spanned_by_x_classes(a in k0(), b in k0()) {
        let p = &a - &K0Elem::constant(a.rank());
        let coords = p.p_decompose().unwrap();
        let rebuilt = coords.iter().fold(K0Elem::zero(), |acc, (m, c)| {
            &acc + &class_of_simple(&SimpleMod::X(*m)).scale(c)
        });
        prop_assert_eq!(rebuilt, p.clone());
        prop_assert!((&p * &b).rank() == BigInt::from(0));
    }

    #[test]
    fn pic_action_is_additive(f in pic(), m in module(), n in module()) {
        let sum = m.direct_sum(&n);
        prop_assert_eq!(f.act_module(&sum).unwrap(), f.act_module(&m).unwrap().direct_sum(&f.act_module(&n).unwrap()));
        let classes = &class_of(&m) + &class_of(&n);
        prop_assert_eq!(f.act_k0(&classes).unwrap(), class_of(&f.act_module(&sum).unwrap()));
    }

    #[test]
    fn pic_inverse_undoes_action(f in pic(), s in special()) {
        let inv = f.invert().unwrap();
        prop_assert_eq!(inv.act_simple(&f.act_simple(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn twists_form_a_normal_subgroup(f in pic(), j in finset(3, 5)) {
        let t = PicElem::twist_by(j);
        let conj = f.compose(&t).unwrap().compose(&f.invert().unwrap()).unwrap();
        prop_assert!(conj.project().is_identity());
    }
}

#[test]
fn twist_of_module_by_empty_set_is_identity() {
    let m = Module::new(ProjMod::free(2), [SimpleMod::X(1)]);
    assert_eq!(m.twist(&FinSet::empty()), m);
}
