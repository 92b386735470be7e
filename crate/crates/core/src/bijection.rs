//! The correspondence between partitions of `2m` with cyclicity index 0 and
//! partitions of `m` into triangular numbers `t_i = i(i+1)/2`.
//!
//! Going forward, a zero-index partition `(n_1, ..., n_r)` satisfies
//! `n_1 = n_2 + 3 n_3 + ... + (2r-3) n_r`, so
//! `2m = sum_{i=2}^{r} 2 t_{i-1} (n_i - n_{i+1})` with `n_{r+1} = 0`. The
//! differences become the multiplicities of `t_{i-1}`. Going back, the parts
//! are suffix sums of the multiplicities and `n_1` is recovered from the
//! zero-index condition.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `t_i = i(i+1)/2`.
pub fn triangular(i: u64) -> u64 {
    i * (i + 1) / 2
}

/// The index `i` with `t_i = value`, if `value` is a positive triangular number.
pub fn triangular_index(value: u64) -> Option<u64> {
    if value == 0 {
        return None;
    }
    let disc = 8 * value as u128 + 1;
    let root = disc.sqrt();
    (root * root == disc).then(|| ((root - 1) / 2) as u64)
}

/// A multiset of triangular numbers, stored as multiplicities `c_i` keyed by
/// the index `i` (not by `t_i`). Only positive multiplicities are kept.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TriangularMultiset {
    counts: BTreeMap<u64, u64>,
}

impl TriangularMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// From `(index, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_multiplicities<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut out = Self::new();
        for (i, c) in pairs {
            out.add(i, c);
        }
        out
    }

    /// From a list of triangular values such as `[1, 3, 3]`.
    pub fn from_values(values: &[u64]) -> Result<Self> {
        let mut out = Self::new();
        for &v in values {
            let i = triangular_index(v).ok_or(Error::NotTriangular(v))?;
            out.add(i, 1);
        }
        Ok(out)
    }

    fn add(&mut self, index: u64, count: u64) {
        assert!(index >= 1, "triangular indices start at 1");
        if count > 0 {
            *self.counts.entry(index).or_insert(0) += count;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Multiplicity `c_i` of `t_i`.
    pub fn multiplicity(&self, index: u64) -> u64 {
        self.counts.get(&index).copied().unwrap_or(0)
    }

    /// `(i, c_i)` pairs with `c_i > 0`, ascending in `i`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&i, &c)| (i, c))
    }

    /// Largest index with a positive multiplicity.
    pub fn max_index(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    /// `m = sum c_i t_i`.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|(&i, &c)| c * triangular(i)).sum()
    }

    /// The triangular values with repetition, smallest first.
    pub fn values_ascending(&self) -> Vec<u64> {
        self.counts.iter().flat_map(|(&i, &c)| std::iter::repeat_n(triangular(i), c as usize)).collect()
    }

    /// The triangular values with repetition, largest first.
    pub fn values_descending(&self) -> Vec<u64> {
        let mut v = self.values_ascending();
        v.reverse();
        v
    }
}

impl fmt::Display for TriangularMultiset {
    /// Comma-joined values, smallest first: `1,1,1,1,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values_ascending().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Sends a partition of `2m` with cyclicity index 0 to a partition of `m`
/// into triangular numbers: `t_{i-1}` gets multiplicity `n_i - n_{i+1}` for
/// `i = 2..=r`.
pub fn zero_to_triangular(lambda: &Partition) -> Result<TriangularMultiset> {
    let index = lambda.cyclicity_index().value();
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if index != 0 {
        return Err(Error::NonzeroCyclicity { partition: format!("({lambda})"), index });
    }
    let parts = lambda.parts();
    let mut out = TriangularMultiset::new();
    for i in 1..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        out.add(i as u64, parts[i] - next);
    }
    Ok(out)
}

/// Inverse of [`zero_to_triangular`]. With `s` the largest index used and
/// `r = s + 1`: `n_i = c_{i-1} + ... + c_s` for `2 <= i <= r`, and
/// `n_1 = sum_{i=2}^{r} (2i - 3) n_i`.
pub fn triangular_to_zero(t: &TriangularMultiset) -> Result<Partition> {
    let s = t.max_index().ok_or(Error::EmptyMultiset)? as usize;
    let mut tail = vec![0u64; s];
    let mut running = 0u64;
    for j in (1..=s).rev() {
        running += t.multiplicity(j as u64);
        tail[j - 1] = running;
    }
    // tail[k] is n_{k+2}
    let first: u64 = tail.iter().enumerate().map(|(k, &n)| (2 * (k as u64 + 2) - 3) * n).sum();
    let mut parts = Vec::with_capacity(s + 1);
    parts.push(first);
    parts.extend(tail);
    Ok(Partition::from_canonical(parts))
}

/// Every partition of `m` into triangular numbers, in reverse lexicographic
/// order of the descending value sequence: `(6), (3,3), (3,1,1,1), (1,...,1)`.
/// For `m = 0` the single empty multiset is returned.
pub fn triangular_partitions(m: u64) -> Vec<TriangularMultiset> {
    fn walk(rest: u64, max_index: u64, chosen: &mut Vec<u64>, out: &mut Vec<TriangularMultiset>) {
        if rest == 0 {
            out.push(TriangularMultiset::from_multiplicities(chosen.iter().map(|&i| (i, 1))));
            return;
        }
        for i in (1..=max_index).rev() {
            if triangular(i) <= rest {
                chosen.push(i);
                walk(rest - triangular(i), i, chosen, out);
                chosen.pop();
            }
        }
    }

    let mut top = 0;
    while triangular(top + 1) <= m {
        top += 1;
    }
    let mut out = Vec::new();
    walk(m, top, &mut Vec::new(), &mut out);
    out
}
