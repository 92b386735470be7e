//! Brute-force enumeration of partitions and the counting sequences
//! `a(n)` (attainable partitions), `z0(n)` (cyclicity index zero) and
//! `z(m) = z0(2m)`.
//!
//! Everything here counts by walking every partition, so it is the reference
//! the generating-function and bijection code is checked against.

use serde::Serialize;

use crate::partition::Partition;

/// Iterator over all partitions of `n` in reverse lexicographic order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
///
/// For `n = 0` it yields the empty partition once.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Partitions {
    pub fn new(n: u64) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { current: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_canonical(current.clone());

        let mut parts = current;
        let mut ones = 0u64;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            let mut rest = ones + 1;
            while rest > 0 {
                let chunk = rest.min(cap);
                parts.push(chunk);
                rest -= chunk;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}

/// Every partition of `n`, in reverse lexicographic order.
pub fn partitions(n: u64) -> Partitions {
    Partitions::new(n)
}

/// Attainable partitions of `n`, in the order of [`partitions`].
pub fn attainable_partitions(n: u64) -> Vec<Partition> {
    partitions(n).filter(Partition::is_attainable).collect()
}

/// Partitions of `n` with cyclicity index 0, in the order of [`partitions`].
pub fn zero_cyclicity_partitions(n: u64) -> Vec<Partition> {
    partitions(n).filter(|p| p.cyclicity_index().value() == 0).collect()
}

/// `a(n)`, with `a(0) = 1`.
pub fn count_attainable(n: u64) -> u64 {
    partitions(n).filter(Partition::is_attainable).count() as u64
}

/// `z0(n)`, with `z0(0) = 1`.
pub fn count_zero_cyclicity(n: u64) -> u64 {
    partitions(n).filter(|p| p.cyclicity_index().value() == 0).count() as u64
}

/// `z(m) = z0(2m)`.
pub fn z(m: u64) -> u64 {
    count_zero_cyclicity(2 * m)
}

/// `a(0..=upto)` and `z0(0..=upto)` from one pass over each `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountsTable {
    pub upto: u64,
    pub a: Vec<u64>,
    pub z0: Vec<u64>,
}

impl CountsTable {
    pub fn compute(upto: u64) -> Self {
        let (a, z0) = (0..=upto)
            .map(|n| {
                partitions(n).fold((0u64, 0u64), |(a, z), p| {
                    let c = p.cyclicity_index().value();
                    (a + u64::from(c >= 0), z + u64::from(c == 0))
                })
            })
            .unzip();
        CountsTable { upto, a, z0 }
    }

    /// `z(m)` for `0 <= m <= upto / 2`.
    pub fn z(&self) -> Vec<u64> {
        self.z0.iter().step_by(2).copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(list: &[Partition]) -> Vec<Vec<u64>> {
        list.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn partitions_of_four_in_order() {
        let all: Vec<_> = partitions(4).collect();
        assert_eq!(parts(&all), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn partitions_of_zero() {
        let all: Vec<_> = partitions(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
        assert_eq!(count_attainable(0), 1);
        assert_eq!(count_zero_cyclicity(0), 1);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(1).count(), 1);
        assert_eq!(partitions(20).count(), 627);
    }

    #[test]
    fn reverse_lex_strictly_decreasing() {
        let all: Vec<_> = partitions(12).collect();
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        assert!(all.iter().all(|p| p.size() == 12));
    }

    #[test]
    fn attainable_of_six() {
        assert_eq!(parts(&attainable_partitions(6)), vec![vec![6], vec![5, 1], vec![4, 2], vec![4, 1, 1], vec![3, 3]]);
    }

    #[test]
    fn attainable_of_two() {
        // Recomputed from the definition; (2) and (1,1) both have c >= 0.
        assert_eq!(parts(&attainable_partitions(2)), vec![vec![2], vec![1, 1]]);
    }

    #[test]
    fn sequence_values() {
        let expected_a = [1, 1, 2, 2, 3, 3, 5, 5, 7, 7, 9, 9, 13, 13, 17, 17];
        for (n, &a) in expected_a.iter().enumerate() {
            assert_eq!(count_attainable(n as u64), a, "a({n})");
        }
        assert_eq!(z(6), 4);
        assert_eq!(
            parts(&zero_cyclicity_partitions(12)),
            vec![vec![9, 1, 1, 1], vec![8, 2, 2], vec![7, 4, 1], vec![6, 6]]
        );
        assert_eq!(count_zero_cyclicity(7), 0);
    }

    #[test]
    fn counts_table_matches_pointwise() {
        let t = CountsTable::compute(16);
        for n in 0..=16 {
            assert_eq!(t.a[n as usize], count_attainable(n));
            assert_eq!(t.z0[n as usize], count_zero_cyclicity(n));
        }
        assert_eq!(t.z(), vec![1, 1, 1, 2, 2, 2, 4, 4, 4]);
    }
}
