//! The `A`–`C` bimodule `P = ⊕_n e_n·C`, bigraded by `P_{(n,I)} = e_n·C_{I⊕[n]}`.
//!
//! The left action is generated by `x·e_n c = e_{n+1}·c·x_{n+1}` and
//! `y·e_n c = e_{n-1}·c·x_n`; consequently `f(z)·e_n c = e_n·c·f(z - n)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::cring::CElement;
use crate::foundation::{interval, rat, FinSet, Poly};

use super::algebra::WeylElem;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PElem {
    comps: BTreeMap<i64, CElement>,
}

impl PElem {
    pub fn zero() -> Self {
        PElem::default()
    }

    /// `e_n·c`.
    pub fn term(n: i64, c: CElement) -> Self {
        let mut comps = BTreeMap::new();
        if !c.is_zero() {
            comps.insert(n, c);
        }
        PElem { comps }
    }

    /// The generator `e_n`.
    pub fn e(n: i64) -> Self {
        PElem::term(n, CElement::one())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, n: i64) -> CElement {
        self.comps.get(&n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CElement)> {
        self.comps.iter().map(|(n, c)| (*n, c))
    }

    fn add_term(&mut self, n: i64, c: CElement) {
        if c.is_zero() {
            return;
        }
        let merged = match self.comps.remove(&n) {
            Some(d) => &d + &c,
            None => c,
        };
        if !merged.is_zero() {
            self.comps.insert(n, merged);
        }
    }

    fn map_terms(&self, f: impl Fn(i64, &CElement) -> (i64, CElement)) -> PElem {
        let mut out = PElem::zero();
        for (n, c) in &self.comps {
            let (m, d) = f(*n, c);
            out.add_term(m, d);
        }
        out
    }

    fn act_x(&self) -> PElem {
        self.map_terms(|n, c| (n + 1, c * &CElement::x(n + 1)))
    }

    fn act_y(&self) -> PElem {
        self.map_terms(|n, c| (n - 1, c * &CElement::x(n)))
    }

    fn act_poly(&self, f: &Poly) -> PElem {
        self.map_terms(|n, c| (n, c.mul_poly(&f.shift(-n))))
    }

    /// `a·p`.
    pub fn left_act(&self, a: &WeylElem) -> PElem {
        let mut out = PElem::zero();
        for (k, f) in a.terms() {
            // a term is m_k·f(z), so f acts first
            let mut acc = self.act_poly(f);
            for _ in 0..k.unsigned_abs() {
                acc = if k > 0 { acc.act_x() } else { acc.act_y() };
            }
            out = &out + &acc;
        }
        out
    }

    /// `p·c`.
    pub fn right_act(&self, c: &CElement) -> PElem {
        self.map_terms(|n, d| (n, d * c))
    }

    /// The bidegrees `(n, K ⊕ [n])` of the homogeneous terms `e_n·f·x_K`.
    pub fn bidegrees(&self) -> BTreeSet<(i64, FinSet)> {
        self.comps
            .iter()
            .flat_map(|(n, c)| {
                let shift = interval(*n);
                c.terms().map(move |(k, _)| (*n, k.xor(&shift)))
            })
            .collect()
    }

    pub fn scale_int(&self, c: i64) -> PElem {
        self.map_terms(|n, d| (n, d.scale(&rat(c))))
    }
}

impl<'a> Add<&'a PElem> for &'a PElem {
    type Output = PElem;
    fn add(self, rhs: &PElem) -> PElem {
        let mut out = self.clone();
        for (n, c) in &rhs.comps {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl Neg for &PElem {
    type Output = PElem;
    fn neg(self) -> PElem {
        self.map_terms(|n, c| (n, -c))
    }
}

impl<'a> Sub<&'a PElem> for &'a PElem {
    type Output = PElem;
    fn sub(self, rhs: &PElem) -> PElem {
        self + &(-rhs)
    }
}

impl fmt::Display for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (n, c)) in self.comps.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "e[{n}]*({c})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PElem({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fs;

    #[test]
    fn generator_rules() {
        assert_eq!(PElem::e(0).left_act(&WeylElem::x()), PElem::term(1, CElement::x(1)));
        assert_eq!(PElem::e(0).left_act(&WeylElem::y()), PElem::term(-1, CElement::x(0)));
    }

    #[test]
    fn commutator_acts_as_identity() {
        let (x, y) = (WeylElem::x(), WeylElem::y());
        let comm = x.commutator(&y);
        let p = &PElem::term(2, CElement::term(Poly::z(), fs![1, 5]))
            + &PElem::term(-3, CElement::x(0));
        assert_eq!(p.left_act(&comm), p);
    }

    #[test]
    fn z_acts_by_shifted_polynomial() {
        let p = PElem::e(3);
        assert_eq!(
            p.left_act(&WeylElem::z()),
            PElem::term(3, CElement::from_poly(Poly::linear_root(3)))
        );
    }

    #[test]
    fn power_closed_forms() {
        for l in 0..=6u32 {
            for m in -6..=6i64 {
                let li = i64::from(l);
                let up = PElem::e(m).left_act(&WeylElem::x().pow(l));
                let deg = interval(li + m).xor(&interval(m));
                assert_eq!(up, PElem::term(li + m, CElement::x_set(&deg)));
                let down = PElem::e(m).left_act(&WeylElem::y().pow(l));
                let deg = interval(m - li).xor(&interval(m));
                assert_eq!(down, PElem::term(m - li, CElement::x_set(&deg)));
            }
        }
    }

    #[test]
    fn bidegree_of_generator_image() {
        let p = PElem::e(0).left_act(&WeylElem::x());
        // e_1·x_1 has bidegree (1, {1} ⊕ [1]) = (1, {})
        assert_eq!(p.bidegrees(), BTreeSet::from([(1, fs![])]));
    }

    #[test]
    fn display() {
        let p = &PElem::term(0, CElement::x(1)) + &PElem::term(-1, CElement::from_poly(Poly::linear_root(2)));
        assert_eq!(p.to_string(), "e[-1]*((z-2)*x{}) + e[0]*(x{1})");
    }
}
