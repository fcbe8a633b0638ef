//! The Picard group of graded `C`-modules in canonical form `(J, h)`.
//!
//! `(J, h)` stands for the autoequivalence `(J) ∘ α_*` where `α` is the
//! almost-automorphism whose induced permutation of simple indices is `h`.
//! The twist is applied last. Composition is
//! `(J₁, h₁)·(J₂, h₂) = (J₁ ⊕ h₁(J₂), h₁h₂)` and realizes
//! `1 → Z_fin → Pic → Iso(Z) → 1` as a semidirect product.

use std::fmt;

use crate::cmod::{Module, NonInteger, ProjMod, SimpleMod};
use crate::cring::AlmostAut;
use crate::error::Result;
use crate::foundation::{rat, FinSet, Isometry};
use crate::k0::{class_of_twist, K0Elem};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PicElem {
    twist: FinSet,
    action: Isometry,
}

/// A letter of a word in the generators of the Picard group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PicGenerator {
    /// `τ_*`: `X_n ↦ X_{n+1}`.
    Tau,
    /// `φ_*`: `X_n ↦ X_{-n}`.
    Phi,
    /// The twist functor `(J)`.
    Twist(FinSet),
}

impl PicElem {
    pub fn new(twist: FinSet, action: Isometry) -> Self {
        PicElem { twist, action }
    }

    pub fn identity() -> Self {
        PicElem::new(FinSet::empty(), Isometry::IDENTITY)
    }

    pub fn tau() -> Self {
        PicElem::from_aut(&AlmostAut::tau())
    }

    pub fn phi() -> Self {
        PicElem::from_aut(&AlmostAut::phi())
    }

    pub fn twist_by(j: FinSet) -> Self {
        PicElem::new(j, Isometry::IDENTITY)
    }

    /// The class of `α_*`.
    pub fn from_aut(alpha: &AlmostAut) -> Self {
        PicElem::new(FinSet::empty(), alpha.simple_action())
    }

    pub fn generator(g: &PicGenerator) -> Self {
        match g {
            PicGenerator::Tau => PicElem::tau(),
            PicGenerator::Phi => PicElem::phi(),
            PicGenerator::Twist(j) => PicElem::twist_by(j.clone()),
        }
    }

    pub fn twist(&self) -> &FinSet {
        &self.twist
    }

    pub fn action(&self) -> Isometry {
        self.action
    }

    /// `(J, α)` with `self ≅ (J) ∘ α_*`.
    pub fn canonical_factors(&self) -> (FinSet, AlmostAut) {
        (
            self.twist.clone(),
            AlmostAut::from_index_map(self.action.invert()),
        )
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &PicElem) -> Result<PicElem> {
        let moved = self.action.try_apply_set(&other.twist)?;
        Ok(PicElem::new(
            self.twist.xor(&moved),
            self.action.compose(&other.action),
        ))
    }

    pub fn invert(&self) -> Result<PicElem> {
        let inv = self.action.invert();
        Ok(PicElem::new(inv.try_apply_set(&self.twist)?, inv))
    }

    pub fn project(&self) -> Isometry {
        self.action
    }

    pub fn is_identity(&self) -> bool {
        self.twist.is_empty() && self.action.is_identity()
    }

    pub fn act_simple(&self, s: &SimpleMod) -> Result<SimpleMod> {
        Ok(match s {
            SimpleMod::X(n) => SimpleMod::X(self.action.try_apply(*n)?).twist(&self.twist),
            SimpleMod::Y(n) => SimpleMod::Y(self.action.try_apply(*n)?).twist(&self.twist),
            SimpleMod::O(l) => {
                let moved = rat(self.action.epsilon()) * l.value() + rat(self.action.shift());
                SimpleMod::O(NonInteger::new(moved)?)
            }
        })
    }

    pub fn act_proj(&self, p: &ProjMod) -> Result<ProjMod> {
        let twists = p
            .twists()
            .iter()
            .map(|i| Ok(self.action.try_apply_set(i)?.xor(&self.twist)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProjMod::new(twists))
    }

    pub fn act_module(&self, m: &Module) -> Result<Module> {
        let simples = m
            .simples()
            .iter()
            .map(|s| self.act_simple(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Module::new(self.act_proj(m.projective())?, simples))
    }

    /// Additive extension of `[C(I)] ↦ [C(h(I) ⊕ J)]`.
    pub fn act_k0(&self, a: &K0Elem) -> Result<K0Elem> {
        let twist_class = |i: &FinSet| -> Result<K0Elem> {
            Ok(class_of_twist(&self.action.try_apply_set(i)?.xor(&self.twist)))
        };
        // 1 = [C({})] and u_m = [C({m})]
        let mut out = twist_class(&FinSet::empty())?.scale(a.unit_coeff());
        for (m, c) in a.point_coeffs() {
            out = &out + &twist_class(&FinSet::singleton(m))?.scale(c);
        }
        Ok(out)
    }
}

/// The autoequivalence obtained by applying the letters of `word` in order.
pub fn pic_from_generators(word: &[PicGenerator]) -> Result<PicElem> {
    word.iter()
        .try_fold(PicElem::identity(), |acc, g| PicElem::generator(g).compose(&acc))
}

impl fmt::Display for PicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.twist, self.action)
    }
}

impl fmt::Display for PicGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PicGenerator::Tau => f.write_str("tau"),
            PicGenerator::Phi => f.write_str("phi"),
            PicGenerator::Twist(j) => write!(f, "twist{j}"),
        }
    }
}
