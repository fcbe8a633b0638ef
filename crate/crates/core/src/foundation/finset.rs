//! Finite subsets of the integers, viewed as elements of the Boolean group
//! `Z_fin` under symmetric difference.

use std::fmt;

use crate::error::{Error, Result};

/// A finite set of integers stored as a strictly increasing vector.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet {
    elems: Vec<i64>,
}

impl FinSet {
    pub fn empty() -> Self {
        FinSet { elems: Vec::new() }
    }

    pub fn singleton(n: i64) -> Self {
        FinSet { elems: vec![n] }
    }

    /// Builds a set from arbitrary integers; duplicates collapse.
    pub fn from_iter_unsorted<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut elems: Vec<i64> = iter.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        FinSet { elems }
    }

    /// Builds a set from a slice, treating repeated entries as a multiset
    /// reduced mod 2, i.e. the `⊕`-sum of the singletons.
    pub fn xor_of<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut elems: Vec<i64> = iter.into_iter().collect();
        elems.sort_unstable();
        let mut out = Vec::with_capacity(elems.len());
        let mut i = 0;
        while i < elems.len() {
            let mut j = i;
            while j < elems.len() && elems[j] == elems[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                out.push(elems[i]);
            }
            i = j;
        }
        FinSet { elems: out }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.elems.binary_search(&n).is_ok()
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.elems.iter().all(|n| other.contains(*n))
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    fn merge(&self, other: &FinSet, keep_left: bool, keep_both: bool, keep_right: bool) -> FinSet {
        let (a, b) = (&self.elems, &other.elems);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                if keep_left {
                    out.push(a[i]);
                }
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                if keep_right {
                    out.push(b[j]);
                }
                j += 1;
            } else {
                if keep_both {
                    out.push(a[i]);
                }
                i += 1;
                j += 1;
            }
        }
        FinSet { elems: out }
    }

    /// Symmetric difference `I ⊕ J`, the group law of `Z_fin`.
    pub fn xor(&self, other: &FinSet) -> FinSet {
        self.merge(other, true, false, true)
    }

    pub fn intersect(&self, other: &FinSet) -> FinSet {
        self.merge(other, false, true, false)
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        self.merge(other, true, true, true)
    }

    pub fn diff(&self, other: &FinSet) -> FinSet {
        self.merge(other, true, false, false)
    }

    /// `n + I`. Fails instead of wrapping when an element leaves the `i64` range.
    pub fn translate(&self, n: i64) -> Result<FinSet> {
        let elems = self
            .elems
            .iter()
            .map(|&e| {
                e.checked_add(n)
                    .ok_or_else(|| Error::Overflow(format!("{e} + {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FinSet { elems })
    }

    /// `n·I` for `n = ±1`. General scaling is rejected.
    pub fn scale(&self, n: i64) -> Result<FinSet> {
        match n {
            1 => Ok(self.clone()),
            -1 => {
                let elems = self
                    .elems
                    .iter()
                    .rev()
                    .map(|&e| {
                        e.checked_neg()
                            .ok_or_else(|| Error::Overflow(format!("-({e})")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(FinSet { elems })
            }
            _ => Err(Error::InvalidArgument(format!(
                "scale factor must be 1 or -1, got {n}"
            ))),
        }
    }

    pub fn neg(&self) -> Result<FinSet> {
        self.scale(-1)
    }

    /// Every subset of `self`, in no particular order. Callers keep `self` small.
    pub fn subsets(&self) -> impl Iterator<Item = FinSet> + '_ {
        let n = self.elems.len();
        assert!(n < 63, "too many elements to enumerate subsets");
        (0u64..(1u64 << n)).map(move |mask| FinSet {
            elems: (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| self.elems[b])
                .collect(),
        })
    }
}

/// The interval `[n]`: `{1..n}` for `n ≥ 1`, empty for `n = 0`, `{n+1..0}` for `n ≤ -1`.
pub fn interval(n: i64) -> FinSet {
    let elems = if n >= 1 {
        (1..=n).collect()
    } else if n == 0 {
        Vec::new()
    } else {
        (n + 1..=0).collect()
    };
    FinSet { elems }
}

/// The normalized 2-cocycle `(-1)^{|I ∩ J|}`.
pub fn cocycle_sign(i: &FinSet, j: &FinSet) -> i32 {
    if i.intersect(j).len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl FromIterator<i64> for FinSet {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        FinSet::from_iter_unsorted(iter)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elems.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[macro_export]
macro_rules! fs {
    () => { $crate::FinSet::empty() };
    ($($e:expr),+ $(,)?) => { $crate::FinSet::from_iter_unsorted([$($e as i64),+]) };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_examples() {
        assert_eq!(fs![1, 2].xor(&fs![2, 3]), fs![1, 3]);
        let i = fs![4, -1, 7];
        assert_eq!(i.xor(&i), fs![]);
        assert_eq!(fs![].xor(&fs![5]), fs![5]);
    }

    #[test]
    fn set_operations() {
        let (i, j) = (fs![1, 2], fs![2, 3]);
        assert_eq!(i.intersect(&j), fs![2]);
        assert_eq!(i.union(&j), fs![1, 2, 3]);
        assert_eq!(i.diff(&j), fs![1]);
        assert_eq!(i.diff(&j), i.xor(&i.intersect(&j)));
        assert_eq!(i.intersect(&fs![]), fs![]);
        assert_eq!(i.union(&fs![]), i);
        assert_eq!(i.diff(&fs![]), i);
    }

    #[test]
    fn translate_and_scale() {
        assert_eq!(fs![1, 3].translate(2).unwrap(), fs![3, 5]);
        assert_eq!(fs![1, 3].scale(-1).unwrap(), fs![-3, -1]);
        assert_eq!(fs![].translate(7).unwrap(), fs![]);
        assert!(matches!(fs![1].scale(2), Err(Error::InvalidArgument(_))));
        assert!(matches!(fs![i64::MAX].translate(1), Err(Error::Overflow(_))));
    }

    #[test]
    fn intervals() {
        assert_eq!(interval(2), fs![1, 2]);
        assert_eq!(interval(0), fs![]);
        assert_eq!(interval(-2), fs![-1, 0]);
    }

    #[test]
    fn cocycle_examples() {
        assert_eq!(cocycle_sign(&fs![], &fs![3, 4]), 1);
        assert_eq!(cocycle_sign(&fs![1], &fs![1]), -1);
        assert_eq!(cocycle_sign(&fs![1, 2], &fs![2, 3]), -1);
    }

    #[test]
    fn xor_of_cancels_pairs() {
        assert_eq!(FinSet::xor_of([1, 2, 2, 3, 1, 1]), fs![1, 3]);
    }

    #[test]
    fn subsets_count() {
        assert_eq!(fs![1, 2, 3].subsets().count(), 8);
    }
}
