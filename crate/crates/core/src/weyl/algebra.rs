use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::foundation::{Poly, Rational};

/// An element `Σ_n m_n·f_n(z)` of `A`, where `m_n = x^n` for `n ≥ 0` and
/// `m_n = y^{-n}` for `n < 0`, and `z = xy`. Polynomials sit on the right.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylElem {
    comps: BTreeMap<i64, Poly>,
}

/// `∏_{i=lo}^{hi} (z + i)`, empty product `1`.
fn rising(lo: i64, hi: i64) -> Poly {
    (lo..=hi).fold(Poly::one(), |acc, i| &acc * &Poly::linear_root(-i))
}

/// `m_a·m_b = m_{a+b}·p(z)`; returns `p`.
pub fn monomial_product(a: i64, b: i64) -> Poly {
    if a >= 0 && b >= 0 || a <= 0 && b <= 0 {
        return Poly::one();
    }
    if a > 0 {
        // x^a y^k
        let k = -b;
        if a >= k {
            rising(0, k - 1)
        } else {
            rising(k - a, k - 1)
        }
    } else {
        // y^k x^b
        let k = -a;
        if k >= b {
            rising(-b, -1)
        } else {
            rising(-b, -(b - k) - 1)
        }
    }
}

/// The left `z`-action `z·m = m·(z - j)` on a degree-`j` element of a graded
/// right `A`-module with `k[z]`-coordinate `f`.
pub fn z_left_action(j: i64, f: &Poly) -> Poly {
    f * &Poly::linear_root(j)
}

impl WeylElem {
    pub fn zero() -> Self {
        WeylElem::default()
    }

    pub fn one() -> Self {
        WeylElem::term(0, Poly::one())
    }

    /// `m_n·f(z)`.
    pub fn term(n: i64, f: Poly) -> Self {
        let mut comps = BTreeMap::new();
        if !f.is_zero() {
            comps.insert(n, f);
        }
        WeylElem { comps }
    }

    pub fn x() -> Self {
        WeylElem::term(1, Poly::one())
    }

    pub fn y() -> Self {
        WeylElem::term(-1, Poly::one())
    }

    pub fn z() -> Self {
        WeylElem::term(0, Poly::z())
    }

    pub fn from_poly(f: Poly) -> Self {
        WeylElem::term(0, f)
    }

    pub fn constant(c: Rational) -> Self {
        WeylElem::from_poly(Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, n: i64) -> Poly {
        self.comps.get(&n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly)> {
        self.comps.iter().map(|(n, f)| (*n, f))
    }

    pub fn is_homogeneous(&self) -> Option<i64> {
        match self.comps.len() {
            1 => self.comps.keys().next().copied(),
            _ => None,
        }
    }

    fn add_term(&mut self, n: i64, f: Poly) {
        if f.is_zero() {
            return;
        }
        let merged = match self.comps.remove(&n) {
            Some(g) => &g + &f,
            None => f,
        };
        if !merged.is_zero() {
            self.comps.insert(n, merged);
        }
    }

    pub fn pow(&self, e: u32) -> WeylElem {
        (0..e).fold(WeylElem::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Rational) -> WeylElem {
        let mut out = WeylElem::zero();
        for (n, f) in &self.comps {
            out.add_term(*n, f.scale(c));
        }
        out
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &WeylElem) -> WeylElem {
        &(self * other) - &(other * self)
    }
}

impl<'a> Add<&'a WeylElem> for &'a WeylElem {
    type Output = WeylElem;
    fn add(self, rhs: &WeylElem) -> WeylElem {
        let mut out = self.clone();
        for (n, f) in &rhs.comps {
            out.add_term(*n, f.clone());
        }
        out
    }
}

impl Neg for &WeylElem {
    type Output = WeylElem;
    fn neg(self) -> WeylElem {
        WeylElem {
            comps: self.comps.iter().map(|(n, f)| (*n, -f)).collect(),
        }
    }
}

impl<'a> Sub<&'a WeylElem> for &'a WeylElem {
    type Output = WeylElem;
    fn sub(self, rhs: &WeylElem) -> WeylElem {
        self + &(-rhs)
    }
}

/// `(m_a f)(m_b g) = m_a m_b f(z - b) g`, using `f(z)·m_b = m_b·f(z - b)`.
impl<'a> Mul<&'a WeylElem> for &'a WeylElem {
    type Output = WeylElem;
    fn mul(self, rhs: &WeylElem) -> WeylElem {
        let mut out = WeylElem::zero();
        for (a, f) in &self.comps {
            for (b, g) in &rhs.comps {
                let coeff = &(&monomial_product(*a, *b) * &f.shift(-*b)) * g;
                out.add_term(a + b, coeff);
            }
        }
        out
    }
}

impl Add for WeylElem {
    type Output = WeylElem;
    fn add(self, rhs: WeylElem) -> WeylElem {
        &self + &rhs
    }
}

impl Sub for WeylElem {
    type Output = WeylElem;
    fn sub(self, rhs: WeylElem) -> WeylElem {
        &self - &rhs
    }
}

impl Mul for WeylElem {
    type Output = WeylElem;
    fn mul(self, rhs: WeylElem) -> WeylElem {
        &self * &rhs
    }
}

impl Neg for WeylElem {
    type Output = WeylElem;
    fn neg(self) -> WeylElem {
        -&self
    }
}

impl fmt::Display for WeylElem {
    /// Highest degree first; degree zero prints as `(f)`, others as
    /// `x^n*(f)` or `y^n*(f)` with the polynomial omitted when it is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (n, p)) in self.comps.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono = match *n {
                0 => None,
                1 => Some("x".to_string()),
                -1 => Some("y".to_string()),
                n if n > 0 => Some(format!("x^{n}")),
                n => Some(format!("y^{}", -n)),
            };
            match (mono, p.is_one()) {
                (None, _) => write!(f, "({})", p.compact())?,
                (Some(m), true) => f.write_str(&m)?,
                (Some(m), false) => write!(f, "{m}*({})", p.compact())?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElem({self})")
    }
}
