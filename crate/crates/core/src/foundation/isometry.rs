use std::fmt;

use super::finset::FinSet;
use crate::error::{Error, Result};

/// An isometry `n ↦ εn + d` of the integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Isometry {
    epsilon: i8,
    shift: i64,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        epsilon: 1,
        shift: 0,
    };

    pub fn new(epsilon: i64, shift: i64) -> Result<Self> {
        match epsilon {
            1 | -1 => Ok(Isometry {
                epsilon: epsilon as i8,
                shift,
            }),
            _ => Err(Error::InvalidArgument(format!(
                "isometry sign must be 1 or -1, got {epsilon}"
            ))),
        }
    }

    pub fn translation(d: i64) -> Self {
        Isometry { epsilon: 1, shift: d }
    }

    /// `n ↦ -n + d`.
    pub fn reflection(d: i64) -> Self {
        Isometry {
            epsilon: -1,
            shift: d,
        }
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon as i64
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn try_apply(&self, n: i64) -> Result<i64> {
        let scaled = if self.epsilon == 1 {
            Some(n)
        } else {
            n.checked_neg()
        };
        scaled
            .and_then(|s| s.checked_add(self.shift))
            .ok_or_else(|| Error::Overflow(format!("isometry {self} at {n}")))
    }

    /// Panics on `i64` overflow; use [`Isometry::try_apply`] near the range limits.
    pub fn apply(&self, n: i64) -> i64 {
        self.try_apply(n).expect("isometry application overflowed")
    }

    pub fn try_apply_set(&self, set: &FinSet) -> Result<FinSet> {
        set.iter()
            .map(|n| self.try_apply(n))
            .collect::<Result<Vec<_>>>()
            .map(FinSet::from_iter_unsorted)
    }

    pub fn apply_set(&self, set: &FinSet) -> FinSet {
        self.try_apply_set(set).expect("isometry application overflowed")
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            epsilon: self.epsilon * other.epsilon,
            shift: self.epsilon as i64 * other.shift + self.shift,
        }
    }

    pub fn invert(&self) -> Isometry {
        // n = ε m + d  ⇒  m = ε n - ε d
        Isometry {
            epsilon: self.epsilon,
            shift: -(self.epsilon as i64) * self.shift,
        }
    }
}

impl Default for Isometry {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.epsilon == 1 { "n->n" } else { "n->-n" })?;
        match self.shift {
            0 => Ok(()),
            d if d > 0 => write!(f, "+{d}"),
            d => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_example() {
        assert_eq!(Isometry::reflection(1).apply(3), -2);
    }

    #[test]
    fn compose_matches_pointwise() {
        let up = Isometry::translation(1);
        let neg = Isometry::reflection(0);
        let c = up.compose(&neg);
        for n in -2..=2 {
            assert_eq!(c.apply(n), up.apply(neg.apply(n)));
        }
        assert_eq!(c, Isometry::reflection(1));
    }

    #[test]
    fn reflection_is_self_inverse() {
        let r = Isometry::reflection(1);
        assert_eq!(r.invert(), r);
        for n in -2..=2 {
            assert_eq!(r.apply(r.apply(n)), n);
        }
    }

    #[test]
    fn inverse_of_translation() {
        let t = Isometry::translation(5);
        assert_eq!(t.invert(), Isometry::translation(-5));
        assert!(t.compose(&t.invert()).is_identity());
    }

    #[test]
    fn display() {
        assert_eq!(Isometry::translation(3).to_string(), "n->n+3");
        assert_eq!(Isometry::reflection(1).to_string(), "n->-n+1");
        assert_eq!(Isometry::reflection(-4).to_string(), "n->-n-4");
        assert_eq!(Isometry::IDENTITY.to_string(), "n->n");
    }

    #[test]
    fn rejects_bad_sign() {
        assert!(Isometry::new(2, 0).is_err());
    }

    #[test]
    fn overflow_reported() {
        assert!(Isometry::translation(1).try_apply(i64::MAX).is_err());
        assert!(Isometry::reflection(0).try_apply(i64::MIN).is_err());
    }
}
