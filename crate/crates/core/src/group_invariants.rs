//! Invariants of the abelian p-group `G_λ(p) = Z/p^{n_1} x ... x Z/p^{n_r}`:
//! the order of its automorphism group, its Cohen-Lenstra weight among groups
//! of the same order, and the heuristic predictions for how often it occurs
//! as the p-part of an imaginary quadratic class group.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::enumerate::partitions;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default value of the constant in the predicted-count asymptotics.
pub const DEFAULT_CONSTANT: f64 = 11.317;

/// Trial-division primality test; intended for the small primes used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

/// An odd prime `p` together with a nonempty partition `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PGroupShape {
    p: u64,
    partition: Partition,
}

impl PGroupShape {
    pub fn new(p: u64, partition: Partition) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if partition.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(PGroupShape { p, partition })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// `n` with `|G| = p^n`.
    pub fn weight(&self) -> u64 {
        self.partition.size()
    }

    /// `|G| = p^n`.
    pub fn group_order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.weight())
    }
}

/// `|Aut(G_λ(p))| = p^{2n - c(λ)} prod_i prod_{j=1}^{m_i} (1 - p^{-j})`, kept
/// in factored form; `m_i` runs over the multiplicities of the distinct parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutOrderFactored {
    pub p: u64,
    /// `2n - c(λ)`.
    pub exponent: i128,
    /// `(part, multiplicity)` for each distinct part, largest first.
    pub unit_factors: Vec<(u64, usize)>,
}

impl AutOrderFactored {
    fn unit_exponent_sum(&self) -> i128 {
        self.unit_factors.iter().map(|&(_, m)| (m * (m + 1) / 2) as i128).sum()
    }

    /// Exact integer value via
    /// `p^{exponent - sum_i m_i(m_i+1)/2} * prod_i prod_j (p^j - 1)`.
    pub fn value(&self) -> BigUint {
        let shift = self.exponent - self.unit_exponent_sum();
        let shift = u64::try_from(shift).expect("automorphism order has nonnegative p-adic valuation");
        let p = BigUint::from(self.p);
        let mut out = p.clone().pow(shift);
        for &(_, m) in &self.unit_factors {
            let mut pj = BigUint::one();
            for _ in 0..m {
                pj *= &p;
                out *= &pj - 1u32;
            }
        }
        out
    }

    /// The same quantity evaluated literally as a product of rationals.
    pub fn rational_value(&self) -> BigRational {
        let p = BigInt::from(self.p);
        let base = BigRational::from_integer(p.clone());
        let mut out = base.clone().pow(self.exponent as i32);
        for &(_, m) in &self.unit_factors {
            for j in 1..=m as i32 {
                out *= BigRational::one() - base.clone().pow(-j);
            }
        }
        out
    }
}

/// Factored automorphism-group order of `G_λ(p)`.
pub fn aut_order_factored(shape: &PGroupShape) -> AutOrderFactored {
    let n = shape.weight() as i128;
    let c = shape.partition.cyclicity_index().value();
    AutOrderFactored { p: shape.p, exponent: 2 * n - c, unit_factors: shape.partition.multiplicities() }
}

/// `|Aut(G_λ(p))|` as an exact integer.
pub fn aut_order(shape: &PGroupShape) -> BigUint {
    aut_order_factored(shape).value()
}

/// `P(G_λ(p))` for every partition `λ` of `n`, in reverse lexicographic order.
/// The weights are `(1/|Aut G|) / sum_{G'} 1/|Aut G'|` over all abelian groups
/// of order `p^n` and sum to 1.
pub fn cohen_lenstra_distribution(p: u64, n: u64) -> Result<Vec<(Partition, BigRational)>> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let inverses: Vec<(Partition, BigRational)> = partitions(n)
        .map(|lambda| {
            let shape = PGroupShape { p, partition: lambda };
            let aut = BigInt::from(aut_order(&shape));
            (shape.partition, BigRational::new(BigInt::one(), aut))
        })
        .collect();
    let total: BigRational = inverses.iter().map(|(_, w)| w).sum();
    Ok(inverses.into_iter().map(|(lambda, w)| (lambda, w / &total)).collect())
}

/// Cohen-Lenstra weight `P(G_λ(p))`, an exact rational in `(0, 1]`.
pub fn cohen_lenstra_weight(shape: &PGroupShape) -> BigRational {
    let n = shape.weight();
    let total: BigRational = partitions(n)
        .map(|lambda| {
            let other = PGroupShape { p: shape.p, partition: lambda };
            BigRational::new(BigInt::one(), BigInt::from(aut_order(&other)))
        })
        .sum();
    let own = BigRational::new(BigInt::one(), BigInt::from(aut_order(shape)));
    own / total
}

/// `c(λ) - n`, the exponent in `P(G_λ(p)) ~ p^{c(λ) - n}`.
pub fn weight_asymptotic_exponent(lambda: &Partition) -> i128 {
    lambda.cyclicity_index().value() - lambda.size() as i128
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionKind {
    /// `c > 0`: expected count for a single prime.
    Pointwise,
    /// `c = 0`: expected count summed over primes up to a cutoff.
    Cumulative,
    /// `c < 0`: only finitely many primes expected; no number attached.
    Finite,
}

/// A heuristic prediction. `value` is `None` exactly when `kind` is `Finite`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Prediction {
    pub cyclicity: i128,
    pub weight: u64,
    pub constant: f64,
    pub kind: PredictionKind,
    pub value: Option<f64>,
}

/// `(C/n) * p^c / ln p` for `c(λ) > 0`; a `Finite` prediction for `c(λ) < 0`.
pub fn predicted_count(shape: &PGroupShape, constant: f64) -> Result<Prediction> {
    let c = shape.partition.cyclicity_index().value();
    let n = shape.weight();
    let mut out = Prediction { cyclicity: c, weight: n, constant, kind: PredictionKind::Finite, value: None };
    match c {
        c if c < 0 => Ok(out),
        0 => Err(Error::WrongCyclicitySign { operation: "predicted_count", expected: "> 0", actual: c }),
        c => {
            let p = shape.p as f64;
            out.kind = PredictionKind::Pointwise;
            out.value = Some(constant / n as f64 * p.powf(c as f64) / p.ln());
            Ok(out)
        }
    }
}

/// `(C/n) * x / (ln x)^2` for `c(λ) = 0` and `x > 1`, estimating the number
/// of fields summed over primes `p <= x`; a `Finite` prediction for `c(λ) < 0`.
pub fn predicted_cumulative(lambda: &Partition, x: f64, constant: f64) -> Result<Prediction> {
    let c = lambda.cyclicity_index().value();
    let n = lambda.size();
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut out = Prediction { cyclicity: c, weight: n, constant, kind: PredictionKind::Finite, value: None };
    match c {
        c if c < 0 => Ok(out),
        0 => {
            if x.is_nan() || x <= 1.0 {
                return Err(Error::CutoffTooSmall(x.to_string()));
            }
            out.kind = PredictionKind::Cumulative;
            out.value = Some(constant / n as f64 * x / x.ln().powi(2));
            Ok(out)
        }
        c => Err(Error::WrongCyclicitySign { operation: "predicted_cumulative", expected: "= 0", actual: c }),
    }
}
