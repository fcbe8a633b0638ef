//! Seeded random samplers shared by the integration suites.
#![allow(dead_code)]

use gradweyl::cmod::{ProjMod, SimpleMod};
use gradweyl::cring::{AlmostAut, CElement};
use gradweyl::pic::PicElem;
use gradweyl::weyl::{PElem, WeylElem};
use gradweyl::{rat, rat_frac, FinSet, Isometry, Poly};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn finset<R: Rng>(r: &mut R, max_len: usize, lo: i64, hi: i64) -> FinSet {
    let len = r.gen_range(0..=max_len);
    FinSet::from_iter_unsorted((0..len).map(|_| r.gen_range(lo..=hi)))
}

/// Small integer coefficients, possibly zero.
pub fn poly<R: Rng>(r: &mut R, max_deg: usize) -> Poly {
    let deg = r.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=deg).map(|_| rat(r.gen_range(-3..=3))).collect())
}

pub fn nonzero_poly<R: Rng>(r: &mut R, max_deg: usize) -> Poly {
    loop {
        let p = poly(r, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Nonzero, biased towards products of `z - r` with small integer `r`,
/// sometimes times `z² + 1` or a rational constant.
pub fn structured_poly<R: Rng>(r: &mut R, max_deg: usize) -> Poly {
    if r.gen_bool(0.4) {
        return nonzero_poly(r, max_deg);
    }
    let mut p = Poly::constant(rat_frac(r.gen_range(1..=3) * if r.gen_bool(0.5) { 1 } else { -1 }, r.gen_range(1..=2)));
    let mut deg = 0;
    if max_deg >= 2 && r.gen_bool(0.25) {
        p = &p * &Poly::from_ints(&[1, 0, 1]);
        deg += 2;
    }
    let linear = r.gen_range(0..=max_deg - deg);
    for _ in 0..linear {
        p = &p * &Poly::linear_root(r.gen_range(-4..=4));
    }
    p
}

pub fn celement<R: Rng>(r: &mut R, max_terms: usize, max_set: usize, max_deg: usize) -> CElement {
    (0..r.gen_range(0..=max_terms)).fold(CElement::zero(), |acc, _| {
        &acc + &CElement::term(poly(r, max_deg), finset(r, max_set, -5, 5))
    })
}

pub fn homogeneous<R: Rng>(r: &mut R, max_set: usize, max_deg: usize) -> (CElement, FinSet) {
    let d = finset(r, max_set, -5, 5);
    (CElement::term(nonzero_poly(r, max_deg), d.clone()), d)
}

pub fn isometry<R: Rng>(r: &mut R, max_shift: i64) -> Isometry {
    let d = r.gen_range(-max_shift..=max_shift);
    if r.gen_bool(0.5) {
        Isometry::translation(d)
    } else {
        Isometry::reflection(d)
    }
}

pub fn aut<R: Rng>(r: &mut R, max_shift: i64) -> AlmostAut {
    AlmostAut::from_index_map(isometry(r, max_shift))
}

pub fn pic<R: Rng>(r: &mut R) -> PicElem {
    PicElem::new(finset(r, 3, -5, 5), isometry(r, 5))
}

pub fn proj<R: Rng>(r: &mut R, max_rank: usize, max_set: usize) -> ProjMod {
    let rank = r.gen_range(1..=max_rank);
    ProjMod::new((0..rank).map(|_| finset(r, max_set, -4, 4)))
}

pub fn special<R: Rng>(r: &mut R, bound: i64) -> SimpleMod {
    let n = r.gen_range(-bound..=bound);
    if r.gen_bool(0.5) {
        SimpleMod::X(n)
    } else {
        SimpleMod::Y(n)
    }
}

pub fn simple<R: Rng>(r: &mut R, bound: i64) -> SimpleMod {
    if r.gen_bool(0.2) {
        let den = *[2i64, 3, 5].choose(r).expect("nonempty");
        let num = r.gen_range(1..den) + den * r.gen_range(-bound..=bound);
        SimpleMod::ordinary(rat_frac(num, den)).expect("non-integer")
    } else {
        special(r, bound)
    }
}

pub fn weyl<R: Rng>(r: &mut R, max_terms: usize, max_degree: i64, max_poly: usize) -> WeylElem {
    (0..r.gen_range(0..=max_terms)).fold(WeylElem::zero(), |acc, _| {
        &acc + &WeylElem::term(r.gen_range(-max_degree..=max_degree), poly(r, max_poly))
    })
}

pub fn pelem<R: Rng>(r: &mut R, max_terms: usize) -> PElem {
    (0..r.gen_range(0..=max_terms)).fold(PElem::zero(), |acc, _| {
        &acc + &PElem::term(r.gen_range(-4..=4), celement(r, 2, 2, 2))
    })
}
