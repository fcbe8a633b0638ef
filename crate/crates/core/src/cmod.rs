//! The catalog of graded `C`-modules: finitely generated projectives
//! `⊕ C(I_r)`, the special simples `X_n = C/(x_n)` and `Y_n = X_n({n})`, and
//! the ordinary simples `O_λ = C/(z - λ)` with `λ ∉ Z`.

use std::collections::BTreeMap;
use std::fmt;

use crate::cring::CElement;
use crate::error::{Error, Result};
use crate::foundation::{FinSet, Rational};

/// `⊕_r C(I_r)`, summands kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ProjMod {
    twists: Vec<FinSet>,
}

impl ProjMod {
    pub fn new<I: IntoIterator<Item = FinSet>>(twists: I) -> Self {
        let mut twists: Vec<FinSet> = twists.into_iter().collect();
        twists.sort();
        ProjMod { twists }
    }

    pub fn free(rank: usize) -> Self {
        ProjMod::new(std::iter::repeat_n(FinSet::empty(), rank))
    }

    pub fn twist_of_c(i: FinSet) -> Self {
        ProjMod { twists: vec![i] }
    }

    pub fn twists(&self) -> &[FinSet] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty()
    }

    /// The integer multiset `I_1 ⊞ ⋯ ⊞ I_r`, a complete isomorphism invariant
    /// together with the rank.
    pub fn multiset(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for i in &self.twists {
            for n in i.iter() {
                *m.entry(n).or_insert(0) += 1;
            }
        }
        m
    }

    pub fn direct_sum(&self, other: &ProjMod) -> ProjMod {
        ProjMod::new(self.twists.iter().chain(&other.twists).cloned())
    }

    pub fn twist(&self, j: &FinSet) -> ProjMod {
        ProjMod::new(self.twists.iter().map(|i| i.xor(j)))
    }

    pub fn tensor(&self, other: &ProjMod) -> ProjMod {
        ProjMod::new(
            self.twists
                .iter()
                .flat_map(|i| other.twists.iter().map(move |j| i.xor(j))),
        )
    }
}

impl fmt::Display for ProjMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twists.is_empty() {
            return f.write_str("0");
        }
        for (k, i) in self.twists.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ProjMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjMod({self})")
    }
}

/// A rational that is not an integer; the parameter of an ordinary simple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NonInteger(Rational);

impl NonInteger {
    pub fn new(lambda: Rational) -> Result<Self> {
        if lambda.is_integer() {
            Err(Error::InvalidArgument(format!(
                "O(λ) needs a non-integer λ, got {lambda}"
            )))
        } else {
            Ok(NonInteger(lambda))
        }
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleMod {
    X(i64),
    Y(i64),
    O(NonInteger),
}

impl SimpleMod {
    pub fn ordinary(lambda: Rational) -> Result<Self> {
        NonInteger::new(lambda).map(SimpleMod::O)
    }

    pub fn is_special(&self) -> bool {
        !matches!(self, SimpleMod::O(_))
    }

    /// The index `n` of `X_n` or `Y_n`.
    pub fn special_index(&self) -> Option<i64> {
        match self {
            SimpleMod::X(n) | SimpleMod::Y(n) => Some(*n),
            SimpleMod::O(_) => None,
        }
    }

    /// `dim_k S_I`.
    pub fn component_dim(&self, i: &FinSet) -> usize {
        match self {
            SimpleMod::X(n) => usize::from(!i.contains(*n)),
            SimpleMod::Y(n) => usize::from(i.contains(*n)),
            SimpleMod::O(_) => 1,
        }
    }

    pub fn twist(&self, j: &FinSet) -> SimpleMod {
        match self {
            SimpleMod::X(n) if j.contains(*n) => SimpleMod::Y(*n),
            SimpleMod::Y(n) if j.contains(*n) => SimpleMod::X(*n),
            s => s.clone(),
        }
    }
}

impl fmt::Display for SimpleMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleMod::X(n) => write!(f, "X({n})"),
            SimpleMod::Y(n) => write!(f, "Y({n})"),
            SimpleMod::O(l) => write!(f, "O({})", l.0),
        }
    }
}

impl fmt::Debug for SimpleMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A direct sum of a projective and finitely many catalog simples.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Module {
    proj: ProjMod,
    simples: Vec<SimpleMod>,
}

impl Module {
    pub fn zero() -> Self {
        Module::default()
    }

    pub fn new<I: IntoIterator<Item = SimpleMod>>(proj: ProjMod, simples: I) -> Self {
        let mut simples: Vec<SimpleMod> = simples.into_iter().collect();
        simples.sort();
        Module { proj, simples }
    }

    pub fn projective(&self) -> &ProjMod {
        &self.proj
    }

    pub fn simples(&self) -> &[SimpleMod] {
        &self.simples
    }

    pub fn is_zero(&self) -> bool {
        self.proj.is_zero() && self.simples.is_empty()
    }

    /// The module itself when it is a single simple.
    pub fn as_simple(&self) -> Option<&SimpleMod> {
        match (self.proj.is_zero(), self.simples.as_slice()) {
            (true, [s]) => Some(s),
            _ => None,
        }
    }

    pub fn as_projective(&self) -> Option<&ProjMod> {
        self.simples.is_empty().then_some(&self.proj)
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        Module::new(
            self.proj.direct_sum(&other.proj),
            self.simples.iter().chain(&other.simples).cloned(),
        )
    }

    pub fn twist(&self, j: &FinSet) -> Module {
        Module::new(self.proj.twist(j), self.simples.iter().map(|s| s.twist(j)))
    }
}

impl From<ProjMod> for Module {
    fn from(proj: ProjMod) -> Self {
        Module {
            proj,
            simples: Vec::new(),
        }
    }
}

impl From<SimpleMod> for Module {
    fn from(s: SimpleMod) -> Self {
        Module {
            proj: ProjMod::default(),
            simples: vec![s],
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .proj
            .twists()
            .iter()
            .map(|i| format!("C{i}"))
            .chain(self.simples.iter().map(SimpleMod::to_string))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({self})")
    }
}

/// `dim hom(C(I), S)`, which equals `dim S_I`.
pub fn hom_dim(i: &FinSet, s: &SimpleMod) -> usize {
    s.component_dim(i)
}

pub fn simple_component_dim(s: &SimpleMod, i: &FinSet) -> usize {
    s.component_dim(i)
}

/// Tensor of two special simples: `X_i⊗X_j = Y_i⊗Y_j = δ_ij X_i`, `X_i⊗Y_j = δ_ij Y_j`.
fn tensor_simples(s: &SimpleMod, t: &SimpleMod) -> Result<Option<SimpleMod>> {
    use SimpleMod::*;
    match (s, t) {
        (O(_), _) | (_, O(_)) => Err(Error::Unsupported(format!(
            "tensor of {s} with {t} is outside the special table"
        ))),
        _ if s.special_index() != t.special_index() => Ok(None),
        (X(n), X(_)) | (Y(n), Y(_)) => Ok(Some(X(*n))),
        (X(n), Y(_)) | (Y(n), X(_)) => Ok(Some(Y(*n))),
    }
}

/// `M ⊗_C N`, extended biadditively over the direct-sum decomposition.
pub fn tensor(m: &Module, n: &Module) -> Result<Module> {
    let mut simples = Vec::new();
    for i in m.proj.twists() {
        simples.extend(n.simples.iter().map(|s| s.twist(i)));
    }
    for j in n.proj.twists() {
        simples.extend(m.simples.iter().map(|s| s.twist(j)));
    }
    for s in &m.simples {
        for t in &n.simples {
            simples.extend(tensor_simples(s, t)?);
        }
    }
    Ok(Module::new(m.proj.tensor(&n.proj), simples))
}

pub fn proj_iso(p: &ProjMod, q: &ProjMod) -> bool {
    p.rank() == q.rank() && p.multiset() == q.multiset()
}

/// The isomorphic representative `C(I_1) ⊕ ⋯ ⊕ C(I_r)` with
/// `I_1 ⊇ I_2 ⊇ ⋯`, where `I_k` collects the integers of multiplicity `≥ k`.
pub fn proj_canonical_chain(p: &ProjMod) -> ProjMod {
    let mult = p.multiset();
    ProjMod::new((1..=p.rank()).map(|k| {
        mult.iter()
            .filter(|(_, &c)| c >= k)
            .map(|(&n, _)| n)
            .collect::<FinSet>()
    }))
}

/// Whether a degree-zero surjection `C x_I ⊕ C x_J → C x_K` exists.
pub fn surjects_onto_twist(i: &FinSet, j: &FinSet, k: &FinSet) -> bool {
    i.intersect(j).is_subset(k) && k.is_subset(&i.union(j))
}

/// Whether `C(K)` is a quotient of a finite sum of the `C(I)`, `I ∈ S`.
pub fn generates(s: &[FinSet], k: &FinSet) -> Result<bool> {
    let (first, rest) = s
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("generating family must be nonempty".into()))?;
    let meet = rest.iter().fold(first.clone(), |acc, i| acc.intersect(i));
    let join = rest.iter().fold(first.clone(), |acc, i| acc.union(i));
    Ok(meet.is_subset(k) && k.is_subset(&join))
}

/// `hom(C(I), C(J))` is free of rank one over `k[z]` on `c ↦ c·x_{I⊕J}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomGenerator {
    pub degree: FinSet,
    pub multiplier: CElement,
}

pub fn hom_proj_proj(i: &FinSet, j: &FinSet) -> HomGenerator {
    let degree = i.xor(j);
    HomGenerator {
        multiplier: CElement::x_set(&degree),
        degree,
    }
}

/// `dim Ext¹(S, T)` for non-isomorphic special simples.
pub fn ext1_dim(s: &SimpleMod, t: &SimpleMod) -> Result<usize> {
    if !s.is_special() || !t.is_special() {
        return Err(Error::Unsupported(format!(
            "ext¹({s}, {t}) involves an ordinary simple"
        )));
    }
    if s == t {
        return Err(Error::Unsupported(format!("self-extensions of {s} are not tabulated")));
    }
    Ok(usize::from(s.special_index() == t.special_index()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rat_frac;
    use crate::fs;

    fn proj(sets: &[FinSet]) -> ProjMod {
        ProjMod::new(sets.iter().cloned())
    }

    #[test]
    fn hom_dim_examples() {
        assert_eq!(hom_dim(&fs![1, 2], &SimpleMod::X(1)), 0);
        assert_eq!(hom_dim(&fs![1, 2], &SimpleMod::X(3)), 1);
        assert_eq!(hom_dim(&fs![], &SimpleMod::Y(5)), 0);
        assert_eq!(hom_dim(&fs![4], &SimpleMod::ordinary(rat_frac(1, 2)).unwrap()), 1);
    }

    #[test]
    fn ordinary_rejects_integers() {
        assert!(SimpleMod::ordinary(rat_frac(4, 2)).is_err());
    }

    #[test]
    fn twist_examples() {
        assert_eq!(SimpleMod::X(3).twist(&fs![3]), SimpleMod::Y(3));
        assert_eq!(SimpleMod::Y(3).twist(&fs![3]), SimpleMod::X(3));
        assert_eq!(proj(&[fs![1]]).twist(&fs![1, 2]), proj(&[fs![2]]));
        let o = SimpleMod::ordinary(rat_frac(1, 3)).unwrap();
        assert_eq!(o.twist(&fs![0, 1]), o);
    }

    #[test]
    fn tensor_examples() {
        let x2 = Module::from(SimpleMod::X(2));
        let y2 = Module::from(SimpleMod::Y(2));
        assert_eq!(tensor(&x2, &y2).unwrap(), y2);
        let x1 = Module::from(SimpleMod::X(1));
        assert!(tensor(&x1, &x2).unwrap().is_zero());
        let c1 = Module::from(proj(&[fs![1]]));
        assert_eq!(tensor(&c1, &x1).unwrap(), Module::from(SimpleMod::Y(1)));
        assert_eq!(tensor(&y2, &y2).unwrap(), x2);
        let o = Module::from(SimpleMod::ordinary(rat_frac(1, 2)).unwrap());
        assert!(matches!(tensor(&o, &x1), Err(Error::Unsupported(_))));
        assert_eq!(tensor(&c1, &o).unwrap(), o);
    }

    #[test]
    fn proj_iso_examples() {
        assert!(proj_iso(&proj(&[fs![1], fs![2]]), &proj(&[fs![1, 2], fs![]])));
        assert!(!proj_iso(&proj(&[fs![1]]), &proj(&[fs![2]])));
        assert!(!proj_iso(&ProjMod::free(2), &proj(&[fs![1], fs![1]])));
    }

    #[test]
    fn canonical_chain_examples() {
        assert_eq!(
            proj_canonical_chain(&proj(&[fs![1], fs![2]])),
            proj(&[fs![1, 2], fs![]])
        );
        assert_eq!(
            proj_canonical_chain(&proj(&[fs![1, 2], fs![2, 3]])),
            proj(&[fs![1, 2, 3], fs![2]])
        );
        assert_eq!(proj_canonical_chain(&ProjMod::free(1)), ProjMod::free(1));
    }

    #[test]
    fn surjection_and_generation() {
        assert!(surjects_onto_twist(&fs![1], &fs![2], &fs![1, 2]));
        assert!(!surjects_onto_twist(&fs![1], &fs![2], &fs![3]));
        assert!(surjects_onto_twist(&fs![4], &fs![4], &fs![4]));
        assert!(generates(&[fs![1], fs![2]], &fs![1, 2]).unwrap());
        assert!(generates(&[fs![1, 2], fs![2, 3]], &fs![2]).unwrap());
        assert!(!generates(&[fs![1]], &fs![]).unwrap());
        assert!(generates(&[], &fs![]).is_err());
    }

    #[test]
    fn hom_between_twists() {
        assert_eq!(hom_proj_proj(&fs![3], &fs![3]).multiplier, CElement::one());
        assert_eq!(hom_proj_proj(&fs![1], &fs![2]).multiplier, CElement::x_set(&fs![1, 2]));
        assert_eq!(hom_proj_proj(&fs![], &fs![5]).degree, fs![5]);
    }

    #[test]
    fn ext1_examples() {
        assert_eq!(ext1_dim(&SimpleMod::X(3), &SimpleMod::Y(3)).unwrap(), 1);
        assert_eq!(ext1_dim(&SimpleMod::X(3), &SimpleMod::Y(4)).unwrap(), 0);
        assert_eq!(ext1_dim(&SimpleMod::X(3), &SimpleMod::X(4)).unwrap(), 0);
        assert!(ext1_dim(&SimpleMod::X(3), &SimpleMod::X(3)).is_err());
    }

    #[test]
    fn component_dims() {
        assert_eq!(simple_component_dim(&SimpleMod::X(1), &fs![]), 1);
        assert_eq!(simple_component_dim(&SimpleMod::Y(1), &fs![]), 0);
        let o = SimpleMod::ordinary(rat_frac(1, 2)).unwrap();
        assert_eq!(simple_component_dim(&o, &fs![3]), 1);
    }

    #[test]
    fn display() {
        let m = Module::new(proj(&[fs![2], fs![1]]), [SimpleMod::Y(-1), SimpleMod::X(3)]);
        assert_eq!(m.to_string(), "C{1} + C{2} + X(3) + Y(-1)");
        assert_eq!(Module::zero().to_string(), "0");
        assert_eq!(SimpleMod::ordinary(rat_frac(-3, 2)).unwrap().to_string(), "O(-3/2)");
    }
}
