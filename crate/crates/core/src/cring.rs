//! The `Z_fin`-graded ring `C = k[z][x_n : n ∈ Z] / (x_n² = z - n)`.
//!
//! Every element is stored as `Σ_J f_J(z)·x_J` with `x_J = ∏_{j∈J} x_j`;
//! products are reduced with `x_I·x_J = h_{I∩J}·x_{I⊕J}`.
//!
//! The module also carries the almost-automorphisms generated by the
//! automorphism `τ` (`x_n ↦ x_{n-1}`, `z ↦ z+1`) and the almost-automorphism
//! `φ` (`x_n ↦ x_{-n}`, `z ↦ -z`, cocycle `(-1)^{|I∩J|}`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::foundation::{cocycle_sign, h_poly, rat, FinSet, Isometry, Poly, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CElement {
    terms: BTreeMap<FinSet, Poly>,
}

impl CElement {
    pub fn zero() -> Self {
        CElement::default()
    }

    pub fn one() -> Self {
        CElement::term(Poly::one(), FinSet::empty())
    }

    /// `f·x_J`.
    pub fn term(f: Poly, degree: FinSet) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(degree, f);
        }
        CElement { terms }
    }

    pub fn from_poly(f: Poly) -> Self {
        CElement::term(f, FinSet::empty())
    }

    pub fn x(n: i64) -> Self {
        CElement::term(Poly::one(), FinSet::singleton(n))
    }

    pub fn x_set(j: &FinSet) -> Self {
        CElement::term(Poly::one(), j.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FinSet, &Poly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x_I`, zero when absent.
    pub fn component(&self, degree: &FinSet) -> Poly {
        self.terms.get(degree).cloned().unwrap_or_default()
    }

    /// The unique degree when the element has exactly one nonzero component.
    pub fn is_homogeneous(&self) -> Option<FinSet> {
        if self.terms.len() == 1 {
            self.terms.keys().next().cloned()
        } else {
            None
        }
    }

    fn add_term(&mut self, degree: FinSet, f: Poly) {
        if f.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&degree) {
            Some(g) => &g + &f,
            None => f,
        };
        if !merged.is_zero() {
            self.terms.insert(degree, merged);
        }
    }

    pub fn scale(&self, c: &Rational) -> CElement {
        self.mul_poly(&Poly::constant(c.clone()))
    }

    /// Multiplication by an element of `C_φ = k[z]`.
    pub fn mul_poly(&self, f: &Poly) -> CElement {
        let mut out = CElement::zero();
        for (d, g) in &self.terms {
            out.add_term(d.clone(), g * f);
        }
        out
    }

    pub fn pow(&self, e: u32) -> CElement {
        (0..e).fold(CElement::one(), |acc, _| &acc * self)
    }

    /// Union of the degrees of all components.
    pub fn support(&self) -> FinSet {
        self.terms
            .keys()
            .fold(FinSet::empty(), |acc, d| acc.union(d))
    }
}

impl<'a> Add<&'a CElement> for &'a CElement {
    type Output = CElement;
    fn add(self, rhs: &CElement) -> CElement {
        let mut out = self.clone();
        for (d, f) in &rhs.terms {
            out.add_term(d.clone(), f.clone());
        }
        out
    }
}

impl<'a> Sub<&'a CElement> for &'a CElement {
    type Output = CElement;
    fn sub(self, rhs: &CElement) -> CElement {
        self + &(-rhs)
    }
}

impl Neg for &CElement {
    type Output = CElement;
    fn neg(self) -> CElement {
        CElement {
            terms: self.terms.iter().map(|(d, f)| (d.clone(), -f)).collect(),
        }
    }
}

impl<'a> Mul<&'a CElement> for &'a CElement {
    type Output = CElement;
    fn mul(self, rhs: &CElement) -> CElement {
        let mut out = CElement::zero();
        for (i, f) in &self.terms {
            for (j, g) in &rhs.terms {
                let square = h_poly(&i.intersect(j));
                out.add_term(i.xor(j), &(f * g) * &square);
            }
        }
        out
    }
}

impl Add for CElement {
    type Output = CElement;
    fn add(self, rhs: CElement) -> CElement {
        &self + &rhs
    }
}

impl Sub for CElement {
    type Output = CElement;
    fn sub(self, rhs: CElement) -> CElement {
        &self - &rhs
    }
}

impl Mul for CElement {
    type Output = CElement;
    fn mul(self, rhs: CElement) -> CElement {
        &self * &rhs
    }
}

impl Neg for CElement {
    type Output = CElement;
    fn neg(self) -> CElement {
        -&self
    }
}

/// Writes `f·x_J` in the shared term grammar: `x{J}` when `f = 1`, else `(f)*x{J}`.
pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, coeff: &Poly, degree: &FinSet) -> fmt::Result {
    if coeff.is_one() {
        write!(f, "x{degree}")
    } else {
        write!(f, "({})*x{degree}", coeff.compact())
    }
}

impl fmt::Display for CElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write_term(f, c, d)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CElement({self})")
    }
}

/// An element of the subgroup of almost-automorphisms generated by `τ` and `φ`.
///
/// It is determined by its index map `u`: `α(f(z)·x_J) = α(f)·x_{u(J)}` where
/// `α(z - n) = ε·(z - u(n))`. The cocycle is `(-1)^{|I∩J|}` exactly when `u`
/// reverses orientation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlmostAut {
    index_map: Isometry,
}

impl AlmostAut {
    pub fn identity() -> Self {
        AlmostAut {
            index_map: Isometry::IDENTITY,
        }
    }

    pub fn tau() -> Self {
        AlmostAut::tau_pow(1)
    }

    pub fn tau_pow(e: i64) -> Self {
        AlmostAut {
            index_map: Isometry::translation(-e),
        }
    }

    pub fn phi() -> Self {
        AlmostAut {
            index_map: Isometry::reflection(0),
        }
    }

    pub fn from_index_map(index_map: Isometry) -> Self {
        AlmostAut { index_map }
    }

    /// `u` with `α(x_n) = x_{u(n)}`; this is also the grading automorphism `ᾱ`.
    pub fn index_map(&self) -> Isometry {
        self.index_map
    }

    pub fn cocycle_on(&self) -> bool {
        self.index_map.epsilon() == -1
    }

    /// `λ_{I,J}`.
    pub fn cocycle(&self, i: &FinSet, j: &FinSet) -> i32 {
        if self.cocycle_on() {
            cocycle_sign(i, j)
        } else {
            1
        }
    }

    /// The induced permutation of simple indices, `u^{-1}`: `α_* X_n ≅ X_{u^{-1}(n)}`.
    pub fn simple_action(&self) -> Isometry {
        self.index_map.invert()
    }

    /// `(e, has_phi)` with `self = τ^e` or `self = τ^e ∘ φ`.
    pub fn canonical_word(&self) -> (i64, bool) {
        (-self.index_map.shift(), self.cocycle_on())
    }

    pub fn apply_poly(&self, f: &Poly) -> Poly {
        let eps = rat(self.index_map.epsilon());
        let b = -&eps * rat(self.index_map.shift());
        f.compose_affine(&eps, &b)
    }

    pub fn apply_degree(&self, degree: &FinSet) -> Result<FinSet> {
        self.index_map.try_apply_set(degree)
    }

    pub fn apply(&self, c: &CElement) -> Result<CElement> {
        let mut out = CElement::zero();
        for (d, f) in c.terms() {
            out.add_term(self.apply_degree(d)?, self.apply_poly(f));
        }
        Ok(out)
    }

    /// `self ∘ other`. The cocycle of the composite is the product of the two
    /// cocycles after transport by `ō`, which in this family is again determined
    /// by orientation.
    pub fn compose(&self, other: &AlmostAut) -> AlmostAut {
        AlmostAut {
            index_map: self.index_map.compose(&other.index_map),
        }
    }

    pub fn invert(&self) -> AlmostAut {
        AlmostAut {
            index_map: self.index_map.invert(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.index_map.is_identity()
    }
}

impl fmt::Display for AlmostAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, phi) = self.canonical_word();
        let tau = match e {
            0 => None,
            1 => Some("tau".to_string()),
            e => Some(format!("tau^{e}")),
        };
        match (tau, phi) {
            (None, false) => f.write_str("id"),
            (None, true) => f.write_str("phi"),
            (Some(t), false) => f.write_str(&t),
            (Some(t), true) => write!(f, "{t}*phi"),
        }
    }
}

/// The twisted right action on `φ_* M`: for `c ∈ C_I` acting on `φ_* m` of
/// degree `J` in `φ_* M` (so `m ∈ M_{-J}`), returns `((-1)^{|I∩J|}, φ(c))`,
/// meaning `(φ_* m)·c = (-1)^{|I∩J|} φ_*(m·φ(c))`.
pub fn phi_star_module_action(module_degree: &FinSet, c: &CElement) -> Result<(i32, CElement)> {
    let i = c.is_homogeneous().ok_or(Error::NotHomogeneous)?;
    let image = AlmostAut::phi().apply(c)?;
    Ok((cocycle_sign(&i, module_degree), image))
}
