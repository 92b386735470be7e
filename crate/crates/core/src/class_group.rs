//! Class groups of imaginary quadratic fields, computed with reduced
//! positive-definite binary quadratic forms `ax^2 + bxy + cy^2`.
//!
//! Every form class of discriminant `D < 0` has exactly one reduced
//! representative, so the class group is the list of reduced primitive forms
//! under Dirichlet composition. Its p-Sylow subgroups are recovered by
//! counting `q^k`-torsion over the whole list.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::{Integer, Roots};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_invariants::is_odd_prime;
use crate::partition::Partition;

/// Largest `|D|` accepted. Squarefreeness is decided by trial division and
/// reduced forms are found by a scan over `a <= sqrt(|D|/3)`.
pub const MAX_DISCRIMINANT_ABS: i64 = 10_000_000_000;

/// A positive-definite binary quadratic form `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let f = QuadForm { a, b, c };
        if a <= 0 || f.discriminant_wide() >= 0 {
            return Err(Error::NotPositiveDefinite { a, b, c });
        }
        Ok(f)
    }

    fn discriminant_wide(&self) -> i128 {
        self.b as i128 * self.b as i128 - 4 * self.a as i128 * self.c as i128
    }

    /// `b^2 - 4ac`.
    pub fn discriminant(&self) -> i64 {
        self.discriminant_wide() as i64
    }

    /// The identity class `(1, b0, (b0^2 - D)/4)` with `b0 = D mod 2`.
    pub fn principal(d: i64) -> Result<Self> {
        check_discriminant(d)?;
        let b = d.rem_euclid(2);
        Ok(QuadForm { a: 1, b, c: (b * b - d) / 4 })
    }

    /// `|b| <= a <= c`, with `b >= 0` when `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let QuadForm { a, b, c } = *self;
        b.abs() <= a && a <= c && !(b < 0 && (b.abs() == a || a == c))
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// The reduced form equivalent to `self`.
    pub fn reduce(self) -> QuadForm {
        let (mut a, mut b, mut c) = (self.a as i128, self.b as i128, self.c as i128);
        normalize(&mut a, &mut b, &mut c);
        while a > c || (a == c && b < 0) {
            std::mem::swap(&mut a, &mut c);
            b = -b;
            normalize(&mut a, &mut b, &mut c);
        }
        QuadForm { a: a as i64, b: b as i64, c: c as i64 }
    }

    /// `(a, -b, c)` reduced: the inverse class.
    pub fn opposite(self) -> QuadForm {
        QuadForm { a: self.a, b: -self.b, c: self.c }.reduce()
    }

    /// Reduced representative of the product class.
    pub fn compose(&self, other: &QuadForm) -> Result<QuadForm> {
        let (d1, d2) = (self.discriminant(), other.discriminant());
        if d1 != d2 {
            return Err(Error::MismatchedDiscriminant { left: d1, right: d2 });
        }
        Ok(compose_unchecked(self, other, d1 as i128))
    }

    /// `self^e` by square-and-multiply.
    pub fn pow(&self, mut e: u64) -> QuadForm {
        let d = self.discriminant_wide();
        let mut base = self.reduce();
        let b0 = d.rem_euclid(2) as i64;
        let mut acc = QuadForm { a: 1, b: b0, c: ((b0 as i128 * b0 as i128 - d) / 4) as i64 };
        while e > 0 {
            if e & 1 == 1 {
                acc = compose_unchecked(&acc, &base, d);
            }
            e >>= 1;
            if e > 0 {
                base = compose_unchecked(&base, &base, d);
            }
        }
        acc
    }

    pub fn is_principal(&self) -> bool {
        self.a == 1
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Moves `b` into `(-a, a]` with `a` fixed.
fn normalize(a: &mut i128, b: &mut i128, c: &mut i128) {
    if -*a < *b && *b <= *a {
        return;
    }
    let r = Integer::div_floor(&(*a - *b), &(2 * *a));
    *c += r * r * *a + r * *b;
    *b += 2 * r * *a;
}

/// Extended gcd: `(g, x, y)` with `x a + y b = g >= 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = Integer::div_floor(&r0, &r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Dirichlet composition. With `e = gcd(a1, a2, (b1+b2)/2) = u a1 + v a2 + w (b1+b2)/2`:
/// `a3 = a1 a2 / e^2`, `b3 = (u a1 b2 + v a2 b1 + w (b1 b2 + D)/2) / e mod 2 a3`.
fn compose_unchecked(f: &QuadForm, g: &QuadForm, d: i128) -> QuadForm {
    let (a1, b1) = (f.a as i128, f.b as i128);
    let (a2, b2) = (g.a as i128, g.b as i128);
    let s = (b1 + b2) / 2;
    let (d1, x1, y1) = ext_gcd(a1, a2);
    let (e, x2, w) = ext_gcd(d1, s);
    let (u, v) = (x2 * x1, x2 * y1);

    let a3 = a1 * a2 / (e * e);
    let numerator = u * a1 * b2 + v * a2 * b1 + w * ((b1 * b2 + d) / 2);
    debug_assert_eq!(numerator % e, 0);
    let mut b3 = (numerator / e).rem_euclid(2 * a3);
    if b3 > a3 {
        b3 -= 2 * a3;
    }
    let c3 = (b3 * b3 - d) / (4 * a3);
    debug_assert_eq!(b3 * b3 - 4 * a3 * c3, d);
    QuadForm { a: a3 as i64, b: b3 as i64, c: c3 as i64 }.reduce()
}

fn check_discriminant(d: i64) -> Result<()> {
    if d >= 0 {
        return Err(Error::NonNegativeDiscriminant(d));
    }
    if d < -MAX_DISCRIMINANT_ABS {
        return Err(Error::DiscriminantTooLarge(d));
    }
    if !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::NotDiscriminant(d));
    }
    Ok(())
}

fn is_squarefree(mut m: u64) -> bool {
    let mut q = 2u64;
    while q * q <= m {
        if m.is_multiple_of(q) {
            m /= q;
            if m.is_multiple_of(q) {
                return false;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    true
}

/// Whether `D < 0` is the discriminant of an imaginary quadratic field:
/// `D = 1 mod 4` squarefree, or `D = 4m` with `m = 2, 3 mod 4` squarefree.
pub fn is_fundamental_discriminant(d: i64) -> Result<bool> {
    if d >= 0 {
        return Err(Error::NonNegativeDiscriminant(d));
    }
    if d < -MAX_DISCRIMINANT_ABS {
        return Err(Error::DiscriminantTooLarge(d));
    }
    Ok(match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    })
}

/// Reduced primitive forms of discriminant `D`, for any `D < 0` with
/// `D = 0, 1 mod 4`. Sorted by `a`, then `|b|`, positive `b` first; the
/// principal form comes first.
pub fn reduced_forms_any(d: i64) -> Result<Vec<QuadForm>> {
    check_discriminant(d)?;
    let dw = d as i128;
    let a_max = ((-dw) / 3).sqrt();
    let mut out = Vec::new();
    for a in 1..=a_max {
        let four_a = 4 * a;
        // b has the parity of D and satisfies |b| <= a; scan b >= 0 and mirror
        let mut b = dw.rem_euclid(2);
        while b <= a {
            let num = b * b - dw;
            if num % four_a == 0 {
                let c = num / four_a;
                if c >= a {
                    let f = QuadForm { a: a as i64, b: b as i64, c: c as i64 };
                    if f.is_primitive() {
                        out.push(f);
                        let mirror = QuadForm { b: -f.b, ..f };
                        if b != 0 && mirror.is_reduced() {
                            out.push(mirror);
                        }
                    }
                }
            }
            b += 2;
        }
    }
    Ok(out)
}

/// Reduced forms of a fundamental discriminant `D`, one per ideal class.
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    if !is_fundamental_discriminant(d)? {
        return Err(Error::NotFundamental(d));
    }
    reduced_forms_any(d)
}

/// `h(D)`, the number of reduced forms.
pub fn class_number(d: i64) -> Result<u64> {
    reduced_forms(d).map(|f| f.len() as u64)
}

/// Prime factorization by trial division, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            let mut e = 0;
            while n.is_multiple_of(q) {
                n /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Class number and Sylow decomposition of the form class group of `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGroupStructure {
    pub discriminant: i64,
    pub class_number: u64,
    /// `q -> λ_q` with the `q`-part isomorphic to `Z/q^{λ_1} x ...`.
    pub sylow: BTreeMap<u64, Partition>,
}

impl ClassGroupStructure {
    /// The partition of the `p`-Sylow subgroup; empty when `p` does not divide `h`.
    pub fn sylow_partition(&self, p: u64) -> Partition {
        self.sylow.get(&p).cloned().unwrap_or_else(Partition::empty)
    }

    /// Invariant factors `d_1 | d_2 | ...` of the whole group, largest first.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let len = self.sylow.values().map(Partition::len).max().unwrap_or(0);
        (0..len)
            .map(|i| {
                self.sylow.iter().map(|(&q, lambda)| lambda.parts().get(i).map_or(1, |&e| q.pow(e as u32))).product()
            })
            .collect()
    }
}

/// Recovers `λ_q` for each prime `q | h` from the torsion counts
/// `T_k = #{f : f^{q^k} = 1}`: the number of parts `>= k` is `log_q(T_k / T_{k-1})`.
fn sylow_from_forms(forms: &[QuadForm]) -> BTreeMap<u64, Partition> {
    let h = forms.len() as u64;
    let mut sylow = BTreeMap::new();
    for (q, e) in factorize(h) {
        let full = q.pow(e);
        let mut current: Vec<QuadForm> = forms.to_vec();
        let mut prev = 1u64;
        let mut parts_at_least = Vec::new();
        while prev < full {
            current.iter_mut().for_each(|f| *f = f.pow(q));
            let torsion = current.iter().filter(|f| f.is_principal()).count() as u64;
            let ratio = torsion / prev;
            assert_eq!(ratio * prev, torsion, "torsion counts must be nested");
            let mut k = 0usize;
            let mut r = ratio;
            while r > 1 {
                assert_eq!(r % q, 0, "torsion ratio must be a power of {q}");
                r /= q;
                k += 1;
            }
            assert!(k > 0, "q-torsion stalled before reaching q^e");
            parts_at_least.push(k);
            prev = torsion;
        }
        // conjugate: λ_j = #{k : parts_at_least[k] >= j}
        let len = parts_at_least[0];
        let parts = (1..=len).map(|j| parts_at_least.iter().filter(|&&c| c >= j).count() as u64).collect();
        sylow.insert(q, Partition::new(parts).expect("nonempty positive parts"));
    }
    sylow
}

/// Class number and Sylow partitions for a fundamental discriminant.
pub fn class_group_structure(d: i64) -> Result<ClassGroupStructure> {
    let forms = reduced_forms(d)?;
    Ok(structure_of(d, &forms))
}

/// As [`class_group_structure`] but for any negative discriminant, using the
/// primitive forms.
pub fn class_group_structure_any(d: i64) -> Result<ClassGroupStructure> {
    let forms = reduced_forms_any(d)?;
    Ok(structure_of(d, &forms))
}

fn structure_of(d: i64, forms: &[QuadForm]) -> ClassGroupStructure {
    ClassGroupStructure { discriminant: d, class_number: forms.len() as u64, sylow: sylow_from_forms(forms) }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Range {
    pub from: i64,
    pub to: i64,
}

/// Number of scanned fields whose `p`-Sylow subgroup is `G_λ(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub p: u64,
    /// Comma-joined parts.
    pub lambda: String,
    pub n: u64,
    pub cyclicity: i128,
    pub count: u64,
}

/// Per-prime counts of fields not covered by a tally row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeSummary {
    pub p: u64,
    /// `p` does not divide `h`.
    pub trivial: u64,
    /// `p`-Sylow of order greater than `p^{n_max}`.
    pub beyond_nmax: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HistogramEntry {
    pub h: u64,
    pub count: u64,
}

/// Results of scanning a range of fundamental discriminants. For every prime,
/// `trivial + beyond_nmax + sum of its tally counts = scanned`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub range: Range,
    pub primes: Vec<u64>,
    pub n_max: u64,
    pub scanned: u64,
    pub tallies: Vec<Tally>,
    pub prime_summaries: Vec<PrimeSummary>,
    pub class_number_histogram: Vec<HistogramEntry>,
}

impl SurveyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Tab-separated tables separated by blank lines: range, tallies,
    /// per-prime summaries, class-number histogram.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("from\tto\tscanned\tn_max\n");
        out.push_str(&format!("{}\t{}\t{}\t{}\n", self.range.from, self.range.to, self.scanned, self.n_max));
        out.push_str("\np\tlambda\tn\tc\tcount\n");
        for t in &self.tallies {
            out.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", t.p, t.lambda, t.n, t.cyclicity, t.count));
        }
        out.push_str("\np\ttrivial\tbeyond_nmax\n");
        for s in &self.prime_summaries {
            out.push_str(&format!("{}\t{}\t{}\n", s.p, s.trivial, s.beyond_nmax));
        }
        out.push_str("\nh\tcount\n");
        for e in &self.class_number_histogram {
            out.push_str(&format!("{}\t{}\n", e.h, e.count));
        }
        out
    }
}

/// Scans the fundamental discriminants in `[from, to]`, tallying for each
/// prime `p` in `primes` the `p`-Sylow partitions of size at most `n_max`,
/// and the class numbers. Discriminants are processed in parallel; the
/// report does not depend on scheduling.
pub fn survey(from: i64, to: i64, primes: &[u64], n_max: u64) -> Result<SurveyReport> {
    if from > to {
        return Err(Error::InvalidRange { from, to });
    }
    if to >= 0 {
        return Err(Error::NonNegativeDiscriminant(to));
    }
    if from < -MAX_DISCRIMINANT_ABS {
        return Err(Error::DiscriminantTooLarge(from));
    }
    if let Some(&p) = primes.iter().find(|&&p| !is_odd_prime(p)) {
        return Err(Error::NotOddPrime(p));
    }
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();

    let structures: Vec<ClassGroupStructure> = (from..=to)
        .into_par_iter()
        .filter(|&d| is_fundamental_discriminant(d).unwrap_or(false))
        .map(|d| class_group_structure(d).expect("fundamental discriminant in range"))
        .collect();

    let mut tallies: BTreeMap<(u64, u64, std::cmp::Reverse<Partition>), u64> = BTreeMap::new();
    let mut summaries: BTreeMap<u64, (u64, u64)> = primes.iter().map(|&p| (p, (0, 0))).collect();
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for s in &structures {
        *histogram.entry(s.class_number).or_insert(0) += 1;
        for &p in &primes {
            let lambda = s.sylow_partition(p);
            let summary = summaries.get_mut(&p).expect("prime registered");
            if lambda.is_empty() {
                summary.0 += 1;
            } else if lambda.size() > n_max {
                summary.1 += 1;
            } else {
                let key = (p, lambda.size(), std::cmp::Reverse(lambda));
                *tallies.entry(key).or_insert(0) += 1;
            }
        }
    }

    Ok(SurveyReport {
        range: Range { from, to },
        primes,
        n_max,
        scanned: structures.len() as u64,
        tallies: tallies
            .into_iter()
            .map(|((p, n, std::cmp::Reverse(lambda)), count)| Tally {
                p,
                lambda: lambda.to_string(),
                n,
                cyclicity: lambda.cyclicity_index().value(),
                count,
            })
            .collect(),
        prime_summaries: summaries
            .into_iter()
            .map(|(p, (trivial, beyond_nmax))| PrimeSummary { p, trivial, beyond_nmax })
            .collect(),
        class_number_histogram: histogram.into_iter().map(|(h, count)| HistogramEntry { h, count }).collect(),
    })
}
