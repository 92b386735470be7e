//! Truncated power series with exact integer coefficients, and the three
//! infinite products behind the counting sequences:
//!
//! * `A(q) = 1/(1-q) * prod_{i>=1} 1/(1 - q^{i(i+1)})` counts attainable partitions,
//! * `prod_{i>=1} 1/(1 - q^{i(i+1)})` counts partitions with cyclicity index 0,
//! * `prod_{i>=1} 1/(1 - q^{i(i+1)/2})` counts partitions into triangular numbers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A power series in `q` truncated after `q^N`; `coeffs[i]` is the coefficient
/// of `q^i` and `coeffs.len() == N + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// The constant series `1`.
    pub fn one(truncation: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); truncation + 1];
        coeffs[0] = BigInt::one();
        PowerSeries { coeffs }
    }

    /// Builds a series from coefficients `c_0, ..., c_N`.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        assert!(!coeffs.is_empty(), "a power series keeps at least q^0");
        PowerSeries { coeffs }
    }

    /// Highest retained exponent `N`.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// Coefficients as `u64`, or `None` if one is negative or too large.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| u64::try_from(c).ok()).collect()
    }

    /// Keeps only the terms up to `q^n` (`n <= N`).
    pub fn truncate(&self, n: usize) -> PowerSeries {
        assert!(n <= self.truncation());
        PowerSeries { coeffs: self.coeffs[..=n].to_vec() }
    }

    /// Cauchy product truncated at the shared `N`.
    pub fn multiply(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if self.truncation() != other.truncation() {
            return Err(Error::MismatchedTruncation { left: self.truncation(), right: other.truncation() });
        }
        let n = self.truncation();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Multiplies in place by `1/(1 - q^k)` using `c[j] += c[j-k]`, ascending.
    pub fn divide_by_one_minus_qk(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        for j in k..self.coeffs.len() {
            let prev = self.coeffs[j - k].clone();
            self.coeffs[j] += prev;
        }
        Ok(())
    }

    /// Multiplies by `1 - q^k`.
    pub fn multiply_one_minus_qk(&self, k: usize) -> Result<PowerSeries> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut coeffs = self.coeffs.clone();
        for j in (k..coeffs.len()).rev() {
            let prev = coeffs[j - k].clone();
            coeffs[j] -= prev;
        }
        Ok(PowerSeries { coeffs })
    }

    /// Substitutes `q -> q^factor`, truncating at `factor * N`.
    pub fn dilate(&self, factor: usize) -> PowerSeries {
        let n = self.truncation() * factor;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * factor] = c.clone();
        }
        PowerSeries { coeffs }
    }
}

impl fmt::Display for PowerSeries {
    /// Comma-joined coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for PowerSeries {
    /// Coefficients as decimal strings, so large values survive JSON readers.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// `1/(1 - q^k)` truncated at `q^n`: ones at multiples of `k`.
pub fn inverse_one_minus_qk(k: usize, n: usize) -> Result<PowerSeries> {
    let mut s = PowerSeries::one(n);
    s.divide_by_one_minus_qk(k)?;
    Ok(s)
}

/// `prod_{i>=1} 1/(1 - q^{f(i)})` for an increasing exponent map `f`, taking
/// only the factors with `f(i) <= n`; the rest cannot reach `q^n`.
fn product_of_geometric(n: usize, exponent: impl Fn(usize) -> usize) -> PowerSeries {
    let mut s = PowerSeries::one(n);
    for k in (1..).map(exponent).take_while(|&k| k <= n) {
        s.divide_by_one_minus_qk(k).expect("exponents are positive");
    }
    s
}

/// `prod_{i>=1} 1/(1 - q^{i(i+1)/2})`; the coefficient of `q^m` is the number
/// of partitions of `m` into triangular numbers, which is `z(m)`.
pub fn triangular_series(n: usize) -> PowerSeries {
    product_of_geometric(n, |i| i * (i + 1) / 2)
}

/// `prod_{i>=1} 1/(1 - q^{i(i+1)})`; the coefficient of `q^n` is `z0(n)`.
pub fn zero_cyclicity_series(n: usize) -> PowerSeries {
    product_of_geometric(n, |i| i * (i + 1))
}

/// `1/(1-q) * prod_{i>=1} 1/(1 - q^{i(i+1)})`; the coefficient of `q^n` is
/// `a(n)`, the number of attainable partitions of `n`.
pub fn attainable_series(n: usize) -> PowerSeries {
    let mut s = zero_cyclicity_series(n);
    s.divide_by_one_minus_qk(1).expect("exponent is positive");
    s
}
