//! Integer partitions, the cyclicity index, and the length and part bounds
//! for attainable partitions.
//!
//! A partition `(n_1, ..., n_r)` with `n_1 >= ... >= n_r >= 1` names the
//! abelian p-group `Z/p^{n_1} x ... x Z/p^{n_r}`. Its cyclicity index
//! `c = sum (3 - 2i) n_i` measures how far that group is from cyclic, and the
//! partition is *attainable* when `c >= 0`.

use std::fmt;

use num_integer::Roots;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition in canonical (weakly decreasing, positive) form.
///
/// The empty partition exists only as the value of `partitions(0)` so that
/// counting conventions like `a(0) = 1` fall out of enumeration; the addition
/// operations reject it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

/// Signed cyclicity index of a partition.
///
/// Stored as `i128`: `|c| <= 2 r n`, and any partition that fits in memory
/// has `r < 2^40`, so the value cannot overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CyclicityIndex(i128);

impl CyclicityIndex {
    pub fn value(self) -> i128 {
        self.0
    }

    pub fn is_nonnegative(self) -> bool {
        self.0 >= 0
    }
}

impl fmt::Display for CyclicityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<CyclicityIndex> for i128 {
    fn from(c: CyclicityIndex) -> i128 {
        c.0
    }
}

impl Partition {
    /// Builds a partition from parts in any order. Parts are sorted into
    /// weakly decreasing order; zero parts and an empty list are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        parts.iter().try_fold(0u64, |acc, &p| acc.checked_add(p)).ok_or(Error::Overflow)?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parses signed input, rejecting nonpositive parts before canonicalizing.
    pub fn from_signed<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = i128>,
    {
        let parts =
            parts
                .into_iter()
                .map(|p| {
                    if p <= 0 {
                        Err(Error::NonPositivePart(p))
                    } else {
                        u64::try_from(p).map_err(|_| Error::Overflow)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Wraps parts already known to be canonical. Used by the enumerator.
    pub(crate) fn from_canonical(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    /// `(n)`, the partition naming the cyclic group.
    pub fn single(n: u64) -> Result<Self> {
        Partition::new(vec![n])
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn ones(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPartition);
        }
        Partition::new(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicities of the distinct parts, largest part first.
    pub fn multiplicities(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `c = sum_{i=1}^{r} (3 - 2i) n_i`. The empty partition has index 0.
    pub fn cyclicity_index(&self) -> CyclicityIndex {
        let c = self.parts.iter().enumerate().map(|(i, &p)| (1 - 2 * i as i128) * p as i128).sum();
        CyclicityIndex(c)
    }

    pub fn is_attainable(&self) -> bool {
        self.cyclicity_index().is_nonnegative()
    }

    /// `(n_1 + 1, n_2, ..., n_r)`; raises the cyclicity index by one.
    pub fn primary_addition(&self) -> Result<Partition> {
        let mut parts = self.parts.clone();
        let first = parts.first_mut().ok_or(Error::EmptyPartition)?;
        *first = first.checked_add(1).ok_or(Error::Overflow)?;
        Ok(Partition { parts })
    }

    /// `(n_1, n_2 + 1, n_3, ..., n_r)`, defined when `r >= 2` and `n_1 != n_2`;
    /// lowers the cyclicity index by one.
    pub fn secondary_addition(&self) -> Result<Partition> {
        match self.parts.as_slice() {
            [a, b, ..] if a != b => {
                let mut parts = self.parts.clone();
                parts[1] += 1;
                Ok(Partition { parts })
            }
            _ => Err(Error::SecondaryAdditionUndefined(format!("({self})"))),
        }
    }

    /// Whether `n_k <= n / (k(k-1))` holds for every `2 <= k <= r`.
    pub fn satisfies_part_bound(&self) -> bool {
        let n = self.size() as u128;
        self.parts.iter().enumerate().skip(1).all(|(i, &p)| {
            let k = i as u128 + 1;
            p as u128 * k * (k - 1) <= n
        })
    }
}

impl fmt::Display for Partition {
    /// Comma-joined parts, e.g. `8,5,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Ok(Partition::empty());
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.parts
    }
}

/// Cyclicity index of `lambda`.
pub fn cyclicity_index(lambda: &Partition) -> CyclicityIndex {
    lambda.cyclicity_index()
}

/// Whether `lambda` is attainable, i.e. has nonnegative cyclicity index.
pub fn is_attainable(lambda: &Partition) -> bool {
    lambda.is_attainable()
}

/// Greatest `r` with `r(r-1) <= n`, which is the longest possible attainable
/// partition of `n`. Equals `floor((sqrt(4n+1) + 1) / 2)`, evaluated with an
/// integer square root.
pub fn max_attainable_length(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let root = (4 * n as u128 + 1).sqrt();
    Ok(root.div_ceil(2) as u64)
}

/// `(n - r + 1, 1, ..., 1)` with `r = max_attainable_length(n)`: an
/// attainable partition of maximal length.
pub fn extremal_long_partition(n: u64) -> Result<Partition> {
    let r = max_attainable_length(n)?;
    let mut parts = vec![1; r as usize];
    parts[0] = n - r + 1;
    Ok(Partition::from_canonical(parts))
}

/// `(m, m)` for `n = 2m` and `(m + 1, m)` for `n = 2m + 1` (`(1)` for `n = 1`),
/// an attainable partition of least cyclicity index.
pub fn min_cyclicity_partition(n: u64) -> Result<Partition> {
    match n {
        0 => Err(Error::ZeroSize),
        1 => Ok(Partition::from_canonical(vec![1])),
        _ => {
            let m = n / 2;
            Ok(Partition::from_canonical(vec![n - m, m]))
        }
    }
}

/// `n / (k(k-1))`, the upper bound on the `k`-th part of an attainable
/// partition of `n`.
pub fn part_bound(n: u64, k: u64) -> Result<Ratio<u128>> {
    if k < 2 {
        return Err(Error::PartIndexTooSmall(k));
    }
    let k = k as u128;
    Ok(Ratio::new(n as u128, k * (k - 1)))
}
