//! Simple graded `A`-modules and the dictionary with graded `C`-modules.
//!
//! `X = A/xA` and `Y = (A/yA)(-1)`; `X(n)` is nonzero exactly in degrees
//! `m ≤ -n` and `Y(n)` exactly in degrees `m ≥ 1 - n`. The equivalence
//! `H(P, -)` sends `X_n` to `Y(n)` for `n > 0` and to `X(n)` for `n ≤ 0`.

use std::collections::BTreeMap;
use std::fmt;

use crate::cmod::SimpleMod;
use crate::error::{Error, Result};
use crate::foundation::{FinSet, Isometry};
use crate::pic::{PicElem, PicGenerator};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ASimple {
    X(i64),
    Y(i64),
}

impl ASimple {
    pub fn index(&self) -> i64 {
        match self {
            ASimple::X(n) | ASimple::Y(n) => *n,
        }
    }

    /// Whether the degree-`m` component is nonzero.
    pub fn is_nonzero_in_degree(&self, m: i64) -> bool {
        match self {
            ASimple::X(n) => m <= -n,
            ASimple::Y(n) => m >= 1 - n,
        }
    }

    fn swapped(&self) -> ASimple {
        match self {
            ASimple::X(n) => ASimple::Y(*n),
            ASimple::Y(n) => ASimple::X(*n),
        }
    }
}

impl fmt::Display for ASimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ASimple::X(n) => write!(f, "X({n})"),
            ASimple::Y(n) => write!(f, "Y({n})"),
        }
    }
}

impl fmt::Debug for ASimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generators of the autoequivalences of graded `A`-modules used by the dictionary.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum AGenerator {
    /// The degree shift `(k)`: `X(n) ↦ X(n+k)`.
    Shift(i64),
    /// `ι_J`, interchanging `X(j)` and `Y(j)` for `j ∈ J`.
    Iota(FinSet),
    /// `σ_*` for the antipodal automorphism: `X(n) ↦ Y(1-n)`, `Y(n) ↦ X(1-n)`.
    Sigma,
}

impl fmt::Display for AGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AGenerator::Shift(k) => write!(f, "shift({k})"),
            AGenerator::Iota(j) => write!(f, "iota{j}"),
            AGenerator::Sigma => f.write_str("sigma"),
        }
    }
}

pub fn match_simple_c_to_a(s: &SimpleMod) -> Result<ASimple> {
    match s {
        SimpleMod::X(n) if *n > 0 => Ok(ASimple::Y(*n)),
        SimpleMod::X(n) => Ok(ASimple::X(*n)),
        SimpleMod::Y(n) if *n > 0 => Ok(ASimple::X(*n)),
        SimpleMod::Y(n) => Ok(ASimple::Y(*n)),
        SimpleMod::O(_) => Err(Error::Unsupported(format!(
            "{s} is not special and has no counterpart in the simple table"
        ))),
    }
}

pub fn match_simple_a_to_c(t: &ASimple) -> SimpleMod {
    match *t {
        ASimple::Y(n) if n > 0 => SimpleMod::X(n),
        ASimple::Y(n) => SimpleMod::Y(n),
        ASimple::X(n) if n > 0 => SimpleMod::Y(n),
        ASimple::X(n) => SimpleMod::X(n),
    }
}

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

pub fn a_act_simple(g: &AGenerator, t: &ASimple) -> Result<ASimple> {
    match g {
        AGenerator::Shift(k) => {
            let n = t.index().checked_add(*k).ok_or_else(|| overflow("shift"))?;
            Ok(match t {
                ASimple::X(_) => ASimple::X(n),
                ASimple::Y(_) => ASimple::Y(n),
            })
        }
        AGenerator::Iota(j) if j.contains(t.index()) => Ok(t.swapped()),
        AGenerator::Iota(_) => Ok(*t),
        AGenerator::Sigma => {
            let n = Isometry::reflection(1).try_apply(t.index())?;
            Ok(match t {
                ASimple::X(_) => ASimple::Y(n),
                ASimple::Y(_) => ASimple::X(n),
            })
        }
    }
}

/// Applies the letters of `word` in order.
pub fn a_act_word(word: &[AGenerator], t: &ASimple) -> Result<ASimple> {
    word.iter().try_fold(*t, |acc, g| a_act_simple(g, &acc))
}

/// The `A`-side word realizing a Picard generator under the dictionary.
pub fn translate_generator(g: &PicGenerator) -> Vec<AGenerator> {
    match g {
        PicGenerator::Twist(j) => vec![AGenerator::Iota(j.clone())],
        PicGenerator::Tau => vec![AGenerator::Shift(1), AGenerator::Iota(FinSet::singleton(1))],
        PicGenerator::Phi => vec![
            AGenerator::Sigma,
            AGenerator::Iota(FinSet::singleton(1)),
            AGenerator::Shift(-1),
        ],
    }
}

/// The permutation of `{X(n), Y(n) : |n| ≤ window}` induced by an autoequivalence.
pub type ActionTable = BTreeMap<ASimple, ASimple>;

fn window_simples(window: i64) -> impl Iterator<Item = ASimple> {
    (-window..=window).flat_map(|n| [ASimple::X(n), ASimple::Y(n)])
}

/// `F` transported to the `A` side: `T ↦ H(P, F·H⁻¹(T))`.
pub fn bridge_autoequiv(f: &PicElem, window: i64) -> Result<ActionTable> {
    window_simples(window)
        .map(|t| {
            let image = f.act_simple(&match_simple_a_to_c(&t))?;
            Ok((t, match_simple_c_to_a(&image)?))
        })
        .collect()
}

pub fn word_table(word: &[AGenerator], window: i64) -> Result<ActionTable> {
    window_simples(window)
        .map(|t| Ok((t, a_act_word(word, &t)?)))
        .collect()
}

/// `X(m)⊗X(n) = X(m+n)`, `Y(m)⊗Y(n) = Y(m+n-1)`, `X(m)⊗Y(n) = Y(m+n)`.
pub fn a_tensor_simple(s: &ASimple, t: &ASimple) -> Result<ASimple> {
    let sum = s
        .index()
        .checked_add(t.index())
        .ok_or_else(|| overflow("tensor index"))?;
    Ok(match (s, t) {
        (ASimple::X(_), ASimple::X(_)) => ASimple::X(sum),
        (ASimple::Y(_), ASimple::Y(_)) => ASimple::Y(sum - 1),
        _ => ASimple::Y(sum),
    })
}

/// `dim Ext¹(S, T)` for non-isomorphic simples.
pub fn ext1_dim_a(s: &ASimple, t: &ASimple) -> Result<usize> {
    if s == t {
        return Err(Error::Unsupported(format!("self-extensions of {s} are not tabulated")));
    }
    Ok(usize::from(s.index() == t.index()))
}
