//! Graded ideals of `C` in principal normal form.
//!
//! Every graded ideal is `(d·x_J)` for a unique monic `d` and `J ∈ Z_fin`.
//! Its degree-`K` component is `d·h_{J-K}·k[z]·x_K`, so an ideal is pinned down
//! by the family of component generators `g_K`. Normalization computes `g_K`
//! for the input generators, reads off `(d, J)` and then checks the whole
//! family against the closed form.

use std::fmt;

use crate::cring::CElement;
use crate::error::{Error, Result};
use crate::foundation::{h_poly, FinSet, Poly};

/// Above this many indices the component check only visits the structured
/// subsets `∅`, `U`, the singletons and their complements.
const FULL_CHECK_LIMIT: usize = 14;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GradedIdeal {
    Zero,
    /// `(d·x_J)` with `d` monic.
    Principal { d: Poly, j: FinSet },
}

impl GradedIdeal {
    /// `(d·x_J)`; `d` is rescaled to be monic.
    pub fn principal(d: Poly, j: FinSet) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(GradedIdeal::Principal { d: d.monic(), j })
    }

    /// The ideal `(x_J)`.
    pub fn twist(j: FinSet) -> Self {
        GradedIdeal::Principal { d: Poly::one(), j }
    }

    pub fn unit() -> Self {
        GradedIdeal::twist(FinSet::empty())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, GradedIdeal::Zero)
    }

    pub fn generator(&self) -> CElement {
        match self {
            GradedIdeal::Zero => CElement::zero(),
            GradedIdeal::Principal { d, j } => CElement::term(d.clone(), j.clone()),
        }
    }

    /// Monic generator of the degree-`K` component over `k[z]`; `None` for the zero ideal.
    pub fn component_generator(&self, k: &FinSet) -> Option<Poly> {
        match self {
            GradedIdeal::Zero => None,
            GradedIdeal::Principal { d, j } => Some(d * &h_poly(&j.diff(k))),
        }
    }

    pub fn contains(&self, c: &CElement) -> bool {
        c.terms().all(|(deg, f)| match self.component_generator(deg) {
            None => false,
            Some(g) => g.divides(f),
        })
    }

    pub fn contains_ideal(&self, other: &GradedIdeal) -> bool {
        self.contains(&other.generator())
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradedIdeal::Zero => f.write_str("0"),
            GradedIdeal::Principal { d, j } => write!(f, "({})*x{j}", d.compact()),
        }
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedIdeal({self})")
    }
}

fn check_subsets(u: &FinSet) -> Vec<FinSet> {
    if u.len() <= FULL_CHECK_LIMIT {
        return u.subsets().collect();
    }
    let mut out = vec![FinSet::empty(), u.clone()];
    for n in u.iter() {
        let single = FinSet::singleton(n);
        out.push(u.diff(&single));
        out.push(single);
    }
    out
}

/// Recovers `(d, J)` from a component-generator family indexed by subsets of `u`.
fn from_components(u: &FinSet, component: impl Fn(&FinSet) -> Poly) -> Result<GradedIdeal> {
    let d = component(u);
    let g_empty = component(&FinSet::empty());
    let quotient = g_empty.div_exact(&d).map_err(|_| {
        Error::Consistency(format!("component of degree {{}} is not a multiple of {d}"))
    })?;
    let roots = quotient.integer_roots()?;
    let j = FinSet::from_iter_unsorted(roots.iter().copied());
    if j.len() != roots.len() || h_poly(&j) != quotient {
        return Err(Error::Consistency(format!(
            "component quotient {quotient} is not a product of distinct linear factors"
        )));
    }
    if !j.is_subset(u) {
        return Err(Error::Consistency(format!("twist {j} escapes the index support {u}")));
    }
    for k in check_subsets(u) {
        let expected = &d * &h_poly(&j.diff(&k));
        if component(&k) != expected {
            return Err(Error::Consistency(format!(
                "degree-{k} component is not generated by {expected}"
            )));
        }
    }
    Ok(GradedIdeal::Principal { d, j })
}

/// Normal form of the ideal generated by the homogeneous elements `f_i·x_{I_i}`.
/// Zero generators contribute nothing.
pub fn ideal_normalize(gens: &[(Poly, FinSet)]) -> Result<GradedIdeal> {
    let gens: Vec<&(Poly, FinSet)> = gens.iter().filter(|(f, _)| !f.is_zero()).collect();
    if gens.is_empty() {
        return Ok(GradedIdeal::Zero);
    }
    let u = gens.iter().fold(FinSet::empty(), |acc, (_, i)| acc.union(i));
    from_components(&u, |k| {
        gens.iter()
            .fold(Poly::zero(), |acc, (f, i)| acc.gcd(&(f * &h_poly(&i.diff(k)))))
    })
}

/// Normal form of the ideal generated by arbitrary elements: each element
/// contributes every one of its homogeneous components.
pub fn ideal_from_elements(elems: &[CElement]) -> Result<GradedIdeal> {
    let gens: Vec<(Poly, FinSet)> = elems
        .iter()
        .flat_map(|c| c.terms().map(|(d, f)| (f.clone(), d.clone())))
        .collect();
    ideal_normalize(&gens)
}

pub fn ideal_member(c: &CElement, a: &GradedIdeal) -> bool {
    a.contains(c)
}

pub fn ideal_sum(a: &GradedIdeal, b: &GradedIdeal) -> Result<GradedIdeal> {
    let gens: Vec<(Poly, FinSet)> = [a, b]
        .into_iter()
        .filter_map(|i| match i {
            GradedIdeal::Zero => None,
            GradedIdeal::Principal { d, j } => Some((d.clone(), j.clone())),
        })
        .collect();
    ideal_normalize(&gens)
}

pub fn ideal_product(a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
    match (a, b) {
        (GradedIdeal::Principal { d, j }, GradedIdeal::Principal { d: e, j: l }) => {
            GradedIdeal::Principal {
                d: (&(d * e) * &h_poly(&j.intersect(l))).monic(),
                j: j.xor(l),
            }
        }
        _ => GradedIdeal::Zero,
    }
}

pub fn ideal_intersect(a: &GradedIdeal, b: &GradedIdeal) -> Result<GradedIdeal> {
    match (a, b) {
        (GradedIdeal::Principal { j, .. }, GradedIdeal::Principal { j: l, .. }) => {
            let u = j.union(l);
            from_components(&u, |k| {
                let ga = a.component_generator(k).expect("principal");
                let gb = b.component_generator(k).expect("principal");
                ga.lcm(&gb)
            })
        }
        _ => Ok(GradedIdeal::Zero),
    }
}
