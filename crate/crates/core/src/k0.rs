//! The Grothendieck ring `K₀(gr C)`.
//!
//! It is the quotient of the group ring `Z[Z_fin]` (basis `u_I`, product
//! `u_I·u_J = u_{I⊕J}`) by the relations `u_I + u_J = u_{I∩J} + u_{I∪J}`.
//! The classes `1 = [C]` and `u_m = [C({m})]` form a `Z`-basis, with
//! `u_m² = 1` and `u_m·u_n = u_m + u_n - 1` for `m ≠ n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cmod::{Module, ProjMod, SimpleMod};
use crate::error::{Error, Result};
use crate::foundation::FinSet;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigInt>, k: K, delta: BigInt) {
    *map.entry(k).or_insert_with(BigInt::zero) += delta;
}

fn prune<K: Ord>(map: &mut BTreeMap<K, BigInt>) {
    map.retain(|_, v| !v.is_zero());
}

/// A formal integer combination of the `u_I`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct GroupRingExpr {
    terms: BTreeMap<FinSet, BigInt>,
}

impl GroupRingExpr {
    pub fn zero() -> Self {
        GroupRingExpr::default()
    }

    pub fn u(i: FinSet) -> Self {
        GroupRingExpr::term(BigInt::one(), i)
    }

    pub fn term(c: BigInt, i: FinSet) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, i, c);
        prune(&mut terms);
        GroupRingExpr { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FinSet, &BigInt)> {
        self.terms.iter()
    }
}

impl Add<&GroupRingExpr> for &GroupRingExpr {
    type Output = GroupRingExpr;
    fn add(self, rhs: &GroupRingExpr) -> GroupRingExpr {
        let mut terms = self.terms.clone();
        for (i, c) in &rhs.terms {
            accumulate(&mut terms, i.clone(), c.clone());
        }
        prune(&mut terms);
        GroupRingExpr { terms }
    }
}

impl Neg for &GroupRingExpr {
    type Output = GroupRingExpr;
    fn neg(self) -> GroupRingExpr {
        GroupRingExpr {
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }
}

impl Sub<&GroupRingExpr> for &GroupRingExpr {
    type Output = GroupRingExpr;
    fn sub(self, rhs: &GroupRingExpr) -> GroupRingExpr {
        self + &(-rhs)
    }
}

impl Mul<&GroupRingExpr> for &GroupRingExpr {
    type Output = GroupRingExpr;
    fn mul(self, rhs: &GroupRingExpr) -> GroupRingExpr {
        let mut terms = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                accumulate(&mut terms, i.xor(j), a * b);
            }
        }
        prune(&mut terms);
        GroupRingExpr { terms }
    }
}

/// An element `c·1 + Σ_m c_m·u_m` of `K₀(gr C)` in basis coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct K0Elem {
    unit: BigInt,
    points: BTreeMap<i64, BigInt>,
}

impl K0Elem {
    pub fn zero() -> Self {
        K0Elem::default()
    }

    pub fn one() -> Self {
        K0Elem::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        K0Elem {
            unit: c,
            points: BTreeMap::new(),
        }
    }

    /// `u_m = [C({m})]`.
    pub fn u(m: i64) -> Self {
        K0Elem {
            unit: BigInt::zero(),
            points: BTreeMap::from([(m, BigInt::one())]),
        }
    }

    pub fn unit_coeff(&self) -> &BigInt {
        &self.unit
    }

    /// Coefficient of `u_m`.
    pub fn point_coeff(&self, m: i64) -> BigInt {
        self.points.get(&m).cloned().unwrap_or_default()
    }

    pub fn point_coeffs(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.points.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.points.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> K0Elem {
        let mut points: BTreeMap<i64, BigInt> =
            self.points.iter().map(|(m, v)| (*m, v * c)).collect();
        prune(&mut points);
        K0Elem {
            unit: &self.unit * c,
            points,
        }
    }

    pub fn rank(&self) -> BigInt {
        self.points.values().fold(self.unit.clone(), |acc, c| acc + c)
    }

    /// Coordinates in the basis `[X_m]` of the rank-zero ideal `𝔭`:
    /// returns `c` with `self = Σ c_m·[X_m]`.
    pub fn p_decompose(&self) -> Result<BTreeMap<i64, BigInt>> {
        if !self.rank().is_zero() {
            return Err(Error::InvalidArgument(format!(
                "{self} has rank {} and is not in the rank-zero ideal",
                self.rank()
            )));
        }
        Ok(self.points.iter().map(|(m, c)| (*m, -c)).collect())
    }
}

impl Add<&K0Elem> for &K0Elem {
    type Output = K0Elem;
    fn add(self, rhs: &K0Elem) -> K0Elem {
        let mut points = self.points.clone();
        for (m, c) in &rhs.points {
            accumulate(&mut points, *m, c.clone());
        }
        prune(&mut points);
        K0Elem {
            unit: &self.unit + &rhs.unit,
            points,
        }
    }
}

impl Neg for &K0Elem {
    type Output = K0Elem;
    fn neg(self) -> K0Elem {
        self.scale(&-BigInt::one())
    }
}

impl Sub<&K0Elem> for &K0Elem {
    type Output = K0Elem;
    fn sub(self, rhs: &K0Elem) -> K0Elem {
        self + &(-rhs)
    }
}

/// Bilinear extension of the basis table, evaluated in closed form: with
/// `A = Σ a_m`, `B = Σ b_m`, `S = Σ a_m b_m` the constant term is
/// `a₀b₀ - AB + 2S` and the `u_k` coefficient is
/// `a₀b_k + b₀a_k + a_k(B - b_k) + b_k(A - a_k)`.
impl Mul<&K0Elem> for &K0Elem {
    type Output = K0Elem;
    fn mul(self, rhs: &K0Elem) -> K0Elem {
        let sum_a: BigInt = self.points.values().sum();
        let sum_b: BigInt = rhs.points.values().sum();
        let s: BigInt = self
            .points
            .iter()
            .filter_map(|(m, a)| rhs.points.get(m).map(|b| a * b))
            .sum();
        let unit = &self.unit * &rhs.unit - &sum_a * &sum_b + BigInt::from(2) * s;
        let mut points = BTreeMap::new();
        for m in self.points.keys().chain(rhs.points.keys()) {
            if points.contains_key(m) {
                continue;
            }
            let a = self.point_coeff(*m);
            let b = rhs.point_coeff(*m);
            let c = &self.unit * &b + &rhs.unit * &a + &a * (&sum_b - &b) + &b * (&sum_a - &a);
            points.insert(*m, c);
        }
        prune(&mut points);
        K0Elem { unit, points }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(K0Elem, Add add, Sub sub, Mul mul);
forward_owned!(GroupRingExpr, Add add, Sub sub, Mul mul);

impl fmt::Display for K0Elem {
    /// Positive terms first (constant, then ascending `u_m`), then negative
    /// terms (ascending `u_m`, then constant). Negative indices print as `u{-1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<(bool, String)> = Vec::new();
        let unit = (!self.unit.is_zero())
            .then(|| (self.unit.is_negative(), self.unit.abs().to_string()));
        let point = |m: &i64, c: &BigInt| {
            let mag = c.abs();
            let name = if *m < 0 { format!("u{{{m}}}") } else { format!("u{m}") };
            let body = if mag.is_one() { name } else { format!("{mag}*{name}") };
            (c.is_negative(), body)
        };
        if let Some(u) = unit.clone().filter(|u| !u.0) {
            parts.push(u);
        }
        parts.extend(self.points.iter().filter(|(_, c)| c.is_positive()).map(|(m, c)| point(m, c)));
        parts.extend(self.points.iter().filter(|(_, c)| c.is_negative()).map(|(m, c)| point(m, c)));
        if let Some(u) = unit.filter(|u| u.0) {
            parts.push(u);
        }
        for (k, (neg, body)) in parts.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for K0Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0Elem({self})")
    }
}

/// `[C(I)] = Σ_{i∈I} u_i - (|I| - 1)`.
pub fn class_of_twist(i: &FinSet) -> K0Elem {
    K0Elem {
        unit: BigInt::one() - BigInt::from(i.len()),
        points: i.iter().map(|n| (n, BigInt::one())).collect(),
    }
}

/// The image of a group-ring expression in `K₀(gr C)`.
pub fn k0_reduce(e: &GroupRingExpr) -> K0Elem {
    e.terms()
        .fold(K0Elem::zero(), |acc, (i, c)| &acc + &class_of_twist(i).scale(c))
}

pub fn k0_mul(a: &K0Elem, b: &K0Elem) -> K0Elem {
    a * b
}

pub fn class_of_proj(p: &ProjMod) -> K0Elem {
    p.twists()
        .iter()
        .fold(K0Elem::zero(), |acc, i| &acc + &class_of_twist(i))
}

/// `[X_n] = 1 - u_n`, `[Y_n] = u_n - 1`, `[O_λ] = 0`.
pub fn class_of_simple(s: &SimpleMod) -> K0Elem {
    match s {
        SimpleMod::X(n) => &K0Elem::one() - &K0Elem::u(*n),
        SimpleMod::Y(n) => &K0Elem::u(*n) - &K0Elem::one(),
        SimpleMod::O(_) => K0Elem::zero(),
    }
}

pub fn class_of(m: &Module) -> K0Elem {
    m.simples()
        .iter()
        .fold(class_of_proj(m.projective()), |acc, s| &acc + &class_of_simple(s))
}
