//! Closed-form graded Frobenius images and Hilbert series.
//!
//! Everything here is computed in Schur-basis arithmetic from
//! [`even_plethysm`] and the Pieri rule; nothing enumerates a locus except
//! [`lds_histogram_pm`], which is the statistic side of the perfect matching
//! Hilbert series.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::loci::{self, LocusKind, LocusSpec};
use crate::rsk::{self, count_syt};
use crate::symfunc::{even_partitions, even_plethysm, pieri_multiply, FirstRow, Partition, QPoly, SchurSeries};

/// `(2d-1)!!`. The empty product at `d = 0` gives the convention `(-1)!! = 1`.
pub fn odd_double_factorial(d: usize) -> BigUint {
    (1..=d as u64).fold(BigUint::one(), |acc, k| acc * (2 * k - 1))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k as u64).fold(BigUint::one(), |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// `s_d[s_2] · s_b` for `d ≥ -1`; the `d = -1` case is the convention
/// `s_{-1} := 0`.
fn plethysm_times_row(d: isize, b: usize) -> SchurSeries {
    if d < 0 {
        return SchurSeries::zero((2 * d + b as isize).max(0) as usize);
    }
    pieri_multiply(&even_plethysm(d as usize), b)
}

/// Keeps terms with `λ_1 ≤ bound`; a negative bound keeps nothing.
fn truncate_signed(s: &SchurSeries, bound: isize) -> SchurSeries {
    if bound < 0 {
        SchurSeries::zero(s.degree_n())
    } else {
        s.truncate_first_row(FirstRow::AtMost(bound as usize))
    }
}

fn dimension_series(s: &SchurSeries) -> QPoly {
    s.weighted_sum(|l| BigInt::from(count_syt(l)))
}

fn require_fixed_count(n: usize, a: usize) -> Result<usize> {
    LocusSpec::new(LocusKind::FixedCount(a), n)?;
    Ok((n - a) / 2)
}

fn require_even(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return domain(format!("perfect matchings need even n, got {n}"));
    }
    Ok(())
}

/// `Σ_k q^k · s_k[s_2] · s_{n-2k}`.
pub fn grfrob_matchings(n: usize) -> SchurSeries {
    let mut out = SchurSeries::zero(n);
    for k in 0..=n / 2 {
        out += &pieri_multiply(&even_plethysm(k), n - 2 * k).shifted(k);
    }
    out
}

/// `Σ_d C(n, 2d) · (2d-1)!! · q^d`.
pub fn hilb_matchings(n: usize) -> QPoly {
    QPoly::new(
        (0..=n / 2)
            .map(|d| BigInt::from(binomial(n, 2 * d) * odd_double_factorial(d)))
            .collect(),
    )
}

/// `Σ q^{(n-λ_1)/2} s_λ` over even `λ ⊢ n`.
pub fn grfrob_pm(n: usize) -> Result<SchurSeries> {
    require_even(n)?;
    let mut out = SchurSeries::zero(n);
    for lambda in even_partitions(n) {
        let grade = (n - lambda.first_row()) / 2;
        out.accumulate(grade, lambda, BigInt::one());
    }
    Ok(out)
}

/// `Σ q^{(n-λ_1)/2} |SYT(λ)|` over even `λ ⊢ n`.
pub fn hilb_pm(n: usize) -> Result<QPoly> {
    Ok(histogram_pm(n)?.to_qpoly())
}

/// Exact coefficient table of a Hilbert series, keyed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeHistogram {
    pub n: usize,
    pub counts: BTreeMap<usize, BigUint>,
}

impl DegreeHistogram {
    pub fn new(n: usize) -> Self {
        DegreeHistogram { n, counts: BTreeMap::new() }
    }

    pub fn add(&mut self, degree: usize, count: &BigUint) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(degree).or_default() += count;
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn to_qpoly(&self) -> QPoly {
        let mut q = QPoly::zero();
        for (&d, c) in &self.counts {
            q.add_term(d, &BigInt::from(c.clone()));
        }
        q
    }

    /// Fails on a negative coefficient.
    pub fn from_qpoly(n: usize, q: &QPoly) -> Result<Self> {
        let mut h = DegreeHistogram::new(n);
        for (d, c) in q.coefficients().iter().enumerate() {
            let c = c
                .to_biguint()
                .ok_or_else(|| Error::Domain(format!("negative coefficient {c} at degree {d}")))?;
            h.add(d, &c);
        }
        Ok(h)
    }
}

/// Histogram of `(n - lds(w)) / 2` over the perfect matchings `w ∈ PM_n`,
/// by enumeration. Refuses `n > max_n`.
pub fn lds_histogram_pm(n: usize, max_n: usize) -> Result<DegreeHistogram> {
    require_even(n)?;
    if n > max_n {
        return Err(Error::Resource(format!("enumerating PM_{n} exceeds the bound n ≤ {max_n}")));
    }
    let spec = LocusSpec::new(LocusKind::PerfectMatchings, n)?;
    let mut h = DegreeHistogram::new(n);
    for w in loci::enumerate(&spec)? {
        let l = rsk::lds(&w.to_word());
        h.add((n - l) / 2, &BigUint::one());
    }
    Ok(h)
}

/// Closed-form graded Frobenius image of the fixed-point-count locus
/// `M_{n,a}`:
/// `Σ_d q^d {s_d[s_2] s_{n-2d} - s_{d-1}[s_2] s_{n-2d+2}}_{λ_1 ≤ n-2d+a}`.
///
/// The subtraction is carried out with signed coefficients; a negative
/// coefficient in the result is reported as an invariant violation.
pub fn grfrob_conjugacy(n: usize, a: usize) -> Result<SchurSeries> {
    let top = require_fixed_count(n, a)?;
    let mut out = SchurSeries::zero(n);
    for d in 0..=top {
        let di = d as isize;
        let diff = &plethysm_times_row(di, n - 2 * d) - &plethysm_times_row(di - 1, n - 2 * d + 2);
        out += &diff.truncate_first_row(FirstRow::AtMost(n - 2 * d + a)).shifted(d);
    }
    if !out.is_nonnegative() {
        return Err(Error::Invariant(format!("graded Frobenius image of M_{{{n},{a}}} has a negative coefficient: {out}")));
    }
    Ok(out)
}

/// Dimension series of [`grfrob_conjugacy`].
pub fn hilb_conjugacy(n: usize, a: usize) -> Result<QPoly> {
    Ok(dimension_series(&grfrob_conjugacy(n, a)?))
}

/// `s_{(n-a)/2}[s_2] · s_a`, the Frobenius image of the permutation module
/// on `M_{n,a}`.
pub fn ungraded_frob_conjugacy(n: usize, a: usize) -> Result<SchurSeries> {
    let k = require_fixed_count(n, a)?;
    Ok(pieri_multiply(&even_plethysm(k), a))
}

/// Closed form for `⟨s_λ⟩ s_d[s_2] · s_a`.
///
/// Writing the distinct part values of `λ` as `λ_1 > ... > λ_m` (with
/// `λ_{m+1} = 0`) and `δ_i = λ_i mod 2`, this is the coefficient of
/// `q^{(a - Σδ_i)/2}` in `Π_i [⌊λ_i/2⌋ - ⌈λ_{i+1}/2⌉ + 1]_q`, except that
/// the coefficient is 0 when an odd value occurs more than once: every row
/// but the last of a block of equal rows is untouched by a horizontal strip,
/// so the inner shape would keep an odd row.
pub fn even_strip_coefficient(lambda: &Partition, a: usize, d: usize) -> Result<BigUint> {
    if lambda.size() != a + 2 * d {
        return domain(format!("{lambda} is not a partition of {}", a + 2 * d));
    }
    if lambda.multiplicities().iter().any(|&(p, m)| p % 2 == 1 && m > 1) {
        return Ok(BigUint::zero());
    }
    let mut distinct: Vec<usize> = lambda.multiplicities().into_iter().map(|(p, _)| p).collect();
    let odd: usize = distinct.iter().filter(|&&p| p % 2 == 1).count();
    if odd > a || (a - odd) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let target = (a - odd) / 2;
    distinct.push(0);

    // coefficients of the product of q-integers, truncated above the target
    let mut poly = vec![BigUint::zero(); target + 1];
    poly[0] = BigUint::one();
    for w in distinct.windows(2) {
        let top = w[0] / 2 - w[1].div_ceil(2);
        let mut next = vec![BigUint::zero(); target + 1];
        for (e, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..=top.min(target - e) {
                next[e + j] += c;
            }
        }
        poly = next;
    }
    Ok(poly.swap_remove(target))
}

/// Checks the first-row stratification identity
/// `Σ_d {s_d[s_2] s_{n-2d} - s_{d-1}[s_2] s_{n-2d+2}}_{λ_1 ≤ n-2d+a} = s_{(n-a)/2}[s_2] s_a`.
pub fn check_stratification_identity(n: usize, a: usize) -> Result<bool> {
    let top = require_fixed_count(n, a)?;
    let mut lhs = SchurSeries::zero(n);
    for d in 0..=top {
        let di = d as isize;
        let diff = &plethysm_times_row(di, n - 2 * d) - &plethysm_times_row(di - 1, n - 2 * d + 2);
        lhs += &diff.truncate_first_row(FirstRow::AtMost(n - 2 * d + a));
    }
    Ok(lhs.at_q1() == ungraded_frob_conjugacy(n, a)?)
}

/// Checks
/// `Σ_d ({X_d}_{λ_1 ≤ 2(n-2d)} + {X_d}_{λ_1 ≤ 2(n-2d)-2}) = Σ_d X_d`
/// where `X_d = s_d[s_2] s_{n-2d}`.
pub fn check_truncation_identity(n: usize) -> bool {
    let mut lhs = SchurSeries::zero(n);
    let mut rhs = SchurSeries::zero(n);
    for d in 0..=n / 2 {
        let x = plethysm_times_row(d as isize, n - 2 * d);
        let bound = 2 * (n - 2 * d) as isize;
        lhs += &truncate_signed(&x, bound);
        lhs += &truncate_signed(&x, bound - 2);
        rhs += &x;
    }
    lhs == rhs
}

/// Coefficient table of [`hilb_matchings`]; closed form, no enumeration.
pub fn histogram_matchings(n: usize) -> DegreeHistogram {
    let mut h = DegreeHistogram::new(n);
    for d in 0..=n / 2 {
        h.add(d, &(binomial(n, 2 * d) * odd_double_factorial(d)));
    }
    h
}

/// Coefficient table of [`hilb_pm`] from hook-length counts over the even
/// partitions of `n`.
pub fn histogram_pm(n: usize) -> Result<DegreeHistogram> {
    require_even(n)?;
    let counts = even_partitions(n)
        .par_iter()
        .fold(BTreeMap::<usize, BigUint>::new, |mut acc, lambda| {
            *acc.entry((n - lambda.first_row()) / 2).or_default() += count_syt(lambda);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (d, c) in b {
                *a.entry(d).or_default() += c;
            }
            a
        });
    Ok(DegreeHistogram { n, counts })
}
