//! Shrinkable proptest strategies for the core types.
#![allow(dead_code)]

use gradweyl::cring::CElement;
use gradweyl::pic::PicElem;
use gradweyl::weyl::WeylElem;
use gradweyl::{FinSet, Isometry, Poly};
use proptest::prelude::*;

pub fn finset(max_len: usize, bound: i64) -> impl Strategy<Value = FinSet> {
    prop::collection::btree_set(-bound..=bound, 0..=max_len).prop_map(FinSet::from_iter)
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 1..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

pub fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn celement() -> impl Strategy<Value = CElement> {
    prop::collection::vec((poly(2), finset(3, 4)), 0..=3).prop_map(|ts| {
        ts.into_iter()
            .fold(CElement::zero(), |acc, (f, j)| &acc + &CElement::term(f, j))
    })
}

pub fn homogeneous() -> impl Strategy<Value = (CElement, FinSet)> {
    (nonzero_poly(2), finset(3, 4)).prop_map(|(f, j)| (CElement::term(f, j.clone()), j))
}

pub fn isometry(bound: i64) -> impl Strategy<Value = Isometry> {
    (any::<bool>(), -bound..=bound).prop_map(|(flip, d)| {
        if flip {
            Isometry::reflection(d)
        } else {
            Isometry::translation(d)
        }
    })
}

pub fn pic() -> impl Strategy<Value = PicElem> {
    (finset(3, 5), isometry(5)).prop_map(|(j, h)| PicElem::new(j, h))
}

pub fn weyl() -> impl Strategy<Value = WeylElem> {
    prop::collection::vec((-3i64..=3, poly(2)), 0..=3).prop_map(|ts| {
        ts.into_iter()
            .fold(WeylElem::zero(), |acc, (n, f)| &acc + &WeylElem::term(n, f))
    })
}
