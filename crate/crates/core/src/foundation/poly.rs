//! Dense univariate polynomials in `z` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::finset::FinSet;
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial `Σ c_k z^k`. Coefficients are stored low degree first with no
/// trailing zeros, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn z() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `z - a` for an integer `a`.
    pub fn linear_root(a: i64) -> Self {
        Poly::from_coeffs(vec![rat(-a), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Normalizes to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `f(a·z + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Poly {
        let lin = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &lin) + &Poly::constant(c.clone()))
    }

    /// `f(z + b)`.
    pub fn shift(&self, b: i64) -> Poly {
        self.compose_affine(&Rational::one(), &rat(b))
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dl = divisor.leading().ok_or(Error::ZeroPolynomial)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// Exact quotient; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({divisor})")))
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Monic least common multiple; zero if either argument is zero.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        (self * &other.div_exact(&g).expect("gcd divides")).monic()
    }

    /// Primitive integer polynomial with the same roots (content cleared).
    fn integer_primitive(&self) -> Vec<BigInt> {
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &content).collect()
    }

    /// All integer roots, repeated according to multiplicity, ascending.
    pub fn integer_roots(&self) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut p = self.integer_primitive();
        let mut roots = Vec::new();
        while p.len() > 1 && p[0].is_zero() {
            p.remove(0);
            roots.push(0);
        }
        if p.len() > 1 {
            let bound = root_bound(&p);
            let mut r: i64 = 1;
            while r <= bound && p.len() > 1 {
                for cand in [r, -r] {
                    while p.len() > 1 && (&p[0] % BigInt::from(cand)).is_zero() {
                        match deflate(&p, cand) {
                            Some(q) => {
                                p = q;
                                roots.push(cand);
                            }
                            None => break,
                        }
                    }
                }
                r += 1;
            }
        }
        roots.sort_unstable();
        Ok(roots)
    }
}

/// An integer `B` with every complex root of `p` of modulus at most `B`,
/// found by doubling until `|a_{n-i}| ≤ |a_n|·(B/2)^i` holds for all `i`.
fn root_bound(p: &[BigInt]) -> i64 {
    let n = p.len() - 1;
    let lead = p[n].abs();
    let mut half = BigInt::one();
    let mut b: i64 = 2;
    'outer: loop {
        let mut power = lead.clone();
        for i in 1..=n {
            power = &power * &half;
            if p[n - i].abs() > power {
                half *= 2;
                b = match b.checked_mul(2) {
                    Some(v) => v,
                    None => return i64::MAX / 2,
                };
                continue 'outer;
            }
        }
        return b;
    }
}

/// Divides by `z - r` if `r` is a root.
fn deflate(p: &[BigInt], r: i64) -> Option<Vec<BigInt>> {
    let r = BigInt::from(r);
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for k in (0..=n).rev() {
        let v = &p[k] + &carry * &r;
        if k == 0 {
            return v.is_zero().then_some(q);
        }
        q[k - 1] = v.clone();
        carry = v;
    }
    None
}

/// `h_J = ∏_{j ∈ J} (z - j)`.
pub fn h_poly(j: &FinSet) -> Poly {
    j.iter()
        .fold(Poly::one(), |acc, n| &acc * &Poly::linear_root(n))
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Poly {
    fn write_terms(&self, f: &mut fmt::Formatter<'_>, spaced: bool) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if spaced {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }

    /// Rendering without spaces, used when a polynomial is embedded in a larger term.
    pub fn compact(&self) -> String {
        struct Compact<'a>(&'a Poly);
        impl fmt::Display for Compact<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write_terms(f, false)
            }
        }
        Compact(self).to_string()
    }

    /// Integer value of a constant polynomial, if it is one.
    pub fn as_integer_constant(&self) -> Option<i64> {
        match self.coeffs.as_slice() {
            [] => Some(0),
            [c] if c.is_integer() => c.to_integer().to_i64(),
            _ => None,
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, true)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fs;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_poly(&fs![]), Poly::one());
        assert_eq!(h_poly(&fs![1]), p(&[-1, 1]));
        assert_eq!(h_poly(&fs![1, 2]), p(&[2, -3, 1]));
    }

    #[test]
    fn integer_root_examples() {
        assert_eq!(p(&[2, -3, 1]).integer_roots().unwrap(), vec![1, 2]);
        assert_eq!(p(&[1, 0, 1]).integer_roots().unwrap(), Vec::<i64>::new());
        assert_eq!(Poly::z().integer_roots().unwrap(), vec![0]);
        assert_eq!(Poly::zero().integer_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn integer_roots_with_multiplicity_and_rational_factor() {
        // (z-3)^2 (z+4) (2z - 1) z
        let f = &(&(&Poly::linear_root(3).pow(2) * &Poly::linear_root(-4)) * &p(&[-1, 2])) * &Poly::z();
        assert_eq!(f.integer_roots().unwrap(), vec![-4, 0, 3, 3]);
        // scaling by 1/7 does not change roots
        assert_eq!(f.scale(&rat_frac(1, 7)).integer_roots().unwrap(), vec![-4, 0, 3, 3]);
    }

    #[test]
    fn gcd_lcm_divexact() {
        let a = Poly::linear_root(1);
        let b = &Poly::linear_root(1) * &Poly::linear_root(2);
        assert_eq!(a.gcd(&b), a);
        assert_eq!(b.div_exact(&Poly::linear_root(2)).unwrap(), a);
        assert!(matches!(b.div_exact(&Poly::linear_root(3)), Err(Error::InexactDivision(_))));
        assert_eq!(a.lcm(&b), b);
        assert!(p(&[3, 6]).gcd(&p(&[2, 4])).is_monic());
    }

    #[test]
    fn gcd_of_h_is_h_of_intersection() {
        let (i, j) = (fs![-2, 1, 4], fs![1, 3, 4, 7]);
        assert_eq!(h_poly(&i).gcd(&h_poly(&j)), h_poly(&i.intersect(&j)));
        assert_eq!(h_poly(&i).lcm(&h_poly(&j)), h_poly(&i.union(&j)));
    }

    #[test]
    fn display_forms() {
        let f = Poly::from_coeffs(vec![rat_frac(1, 2), rat(-3), rat(1)]);
        assert_eq!(f.to_string(), "z^2 - 3*z + 1/2");
        assert_eq!(f.compact(), "z^2-3*z+1/2");
        assert_eq!(p(&[-1, 1]).compact(), "z-1");
        assert_eq!(p(&[0, -2]).to_string(), "-2*z");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn affine_composition() {
        // f(z) = z^2 - 1 ; f(-z + 2) = z^2 - 4z + 3
        let f = p(&[-1, 0, 1]);
        assert_eq!(f.compose_affine(&rat(-1), &rat(2)), p(&[3, -4, 1]));
        assert_eq!(p(&[-1, 1]).shift(1), Poly::z());
    }
}
