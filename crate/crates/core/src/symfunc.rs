//! Partitions and the degree-`n` Schur basis.
//!
//! A [`SchurSeries`] is a finite integer combination of `q^d s_λ` with every
//! `λ` of the same size. It is the value type of every graded Frobenius
//! image in the crate. [`QPoly`] is the matching coefficient type of Hilbert
//! series.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// An integer partition, stored weakly decreasing with no zero parts.
///
/// The derived order is reverse lexicographic: `(4) < (3,1) < (2,2) < ...`,
/// so sorted containers list the one-row partition first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.contains(&0) {
            return domain(format!("parts {parts:?} contain an interior zero"));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_1`, or 0 for the empty partition.
    pub fn first_row(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// True when every part is even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first_row();
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        if k == 0 {
            return Self::empty();
        }
        Partition { parts: self.parts.iter().map(|p| p * k).collect() }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// Parts beyond the length read as zero.
    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` whose parts are all even, in reverse lexicographic order.
pub fn even_partitions(n: usize) -> Vec<Partition> {
    if n % 2 == 1 {
        return Vec::new();
    }
    enumerate_partitions(n / 2).iter().map(|mu| mu.scaled(2)).collect()
}

/// Partitions `ν ⊇ λ` such that `ν/λ` is a horizontal strip of `b` boxes.
pub fn horizontal_strips(lambda: &Partition, b: usize) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > lambda.len() {
            if remaining == 0 {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition::from_sorted(parts));
            }
            return;
        }
        let low = lambda[row];
        let cap = if row == 0 { low + remaining } else { lambda[row - 1] };
        for v in (low..=cap.min(low + remaining)).rev() {
            cur.push(v);
            go(lambda, row + 1, remaining - (v - low), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, b, &mut Vec::new(), &mut out);
    out
}

/// Predicates on the first row length used by truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FirstRow {
    AtMost(usize),
    Exactly(usize),
    /// Inclusive range `lo ≤ λ_1 ≤ hi`.
    Between(usize, usize),
}

impl FirstRow {
    pub fn admits(&self, lambda: &Partition) -> bool {
        let l1 = lambda.first_row();
        match *self {
            FirstRow::AtMost(a) => l1 <= a,
            FirstRow::Exactly(a) => l1 == a,
            FirstRow::Between(lo, hi) => lo <= l1 && l1 <= hi,
        }
    }
}

/// Polynomial in `q` with big-integer coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients from `q^0` up to the degree.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add_term(&mut self, d: usize, c: &BigInt) {
        if self.coeffs.len() <= d {
            self.coeffs.resize(d + 1, BigInt::zero());
        }
        self.coeffs[d] += c;
        self.trim();
    }

    /// `c_i^2 ≥ c_{i-1} c_{i+1}` at every interior index.
    pub fn is_log_concave(&self) -> bool {
        self.coeffs.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (d, c) in rhs.coeffs.iter().enumerate() {
            out.add_term(d, c);
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let mag = c.abs();
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{d}")?,
                (_, false) => write!(f, "{mag}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// A `q`-graded integer combination of Schur functions `s_λ`, `|λ| = n`.
///
/// Only nonzero terms are stored, so structural equality is mathematical
/// equality. Terms iterate by grade, then partition in reverse lexicographic
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurSeries {
    degree_n: usize,
    terms: BTreeMap<(usize, Partition), BigInt>,
}

impl SchurSeries {
    pub fn zero(degree_n: usize) -> Self {
        SchurSeries { degree_n, terms: BTreeMap::new() }
    }

    /// `q^grade · s_λ`.
    pub fn schur(grade: usize, lambda: Partition) -> Self {
        let mut s = Self::zero(lambda.size());
        s.terms.insert((grade, lambda), BigInt::one());
        s
    }

    pub fn from_terms<I>(degree_n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Partition, BigInt)>,
    {
        let mut s = Self::zero(degree_n);
        for (d, lambda, c) in terms {
            s.add_term(d, lambda, c)?;
        }
        Ok(s)
    }

    pub fn degree_n(&self) -> usize {
        self.degree_n
    }

    pub fn add_term(&mut self, grade: usize, lambda: Partition, coeff: BigInt) -> Result<()> {
        if lambda.size() != self.degree_n {
            return domain(format!("{lambda} is not a partition of {}", self.degree_n));
        }
        self.accumulate(grade, lambda, coeff);
        Ok(())
    }

    pub(crate) fn accumulate(&mut self, grade: usize, lambda: Partition, coeff: BigInt) {
        debug_assert_eq!(lambda.size(), self.degree_n);
        if coeff.is_zero() {
            return;
        }
        let key = (grade, lambda);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// The coefficient of `q^grade s_λ`, zero when absent.
    pub fn coefficient(&self, grade: usize, lambda: &Partition) -> Result<BigInt> {
        if lambda.size() != self.degree_n {
            return domain(format!("{lambda} is not a partition of {}", self.degree_n));
        }
        Ok(self.terms.get(&(grade, lambda.clone())).cloned().unwrap_or_default())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Partition, &BigInt)> {
        self.terms.iter().map(|((d, l), c)| (*d, l, c))
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn grades(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|(d, _)| *d).collect()
    }

    pub fn max_grade(&self) -> Option<usize> {
        self.terms.keys().map(|(d, _)| *d).max()
    }

    /// The grade-`d` piece, moved to grade 0.
    pub fn grade(&self, d: usize) -> SchurSeries {
        let terms = self
            .terms
            .iter()
            .filter(|((g, _), _)| *g == d)
            .map(|((_, l), c)| ((0, l.clone()), c.clone()))
            .collect();
        SchurSeries { degree_n: self.degree_n, terms }
    }

    /// Every term raised by `k` grades.
    pub fn shifted(&self, k: usize) -> SchurSeries {
        let terms = self.terms.iter().map(|((g, l), c)| ((g + k, l.clone()), c.clone())).collect();
        SchurSeries { degree_n: self.degree_n, terms }
    }

    /// Evaluation at `q = 1`: all grades collapsed onto grade 0.
    pub fn at_q1(&self) -> SchurSeries {
        let mut out = SchurSeries::zero(self.degree_n);
        for ((_, l), c) in &self.terms {
            out.accumulate(0, l.clone(), c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Drops every term whose partition fails `pred`.
    pub fn truncate_first_row(&self, pred: FirstRow) -> SchurSeries {
        let terms = self
            .terms
            .iter()
            .filter(|((_, l), _)| pred.admits(l))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        SchurSeries { degree_n: self.degree_n, terms }
    }

    /// `Σ coeff · weight(λ) · q^grade`.
    pub fn weighted_sum<F>(&self, mut weight: F) -> QPoly
    where
        F: FnMut(&Partition) -> BigInt,
    {
        let mut out = QPoly::zero();
        for ((d, l), c) in &self.terms {
            out.add_term(*d, &(c * weight(l)));
        }
        out
    }

    fn check_same_degree(&self, other: &SchurSeries) {
        assert_eq!(
            self.degree_n, other.degree_n,
            "cannot combine Schur series of degrees {} and {}",
            self.degree_n, other.degree_n
        );
    }
}

impl AddAssign<&SchurSeries> for SchurSeries {
    fn add_assign(&mut self, rhs: &SchurSeries) {
        self.check_same_degree(rhs);
        for ((d, l), c) in &rhs.terms {
            self.accumulate(*d, l.clone(), c.clone());
        }
    }
}

impl SubAssign<&SchurSeries> for SchurSeries {
    fn sub_assign(&mut self, rhs: &SchurSeries) {
        self.check_same_degree(rhs);
        for ((d, l), c) in &rhs.terms {
            self.accumulate(*d, l.clone(), -c);
        }
    }
}

impl Add for &SchurSeries {
    type Output = SchurSeries;

    fn add(self, rhs: &SchurSeries) -> SchurSeries {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SchurSeries {
    type Output = SchurSeries;

    fn sub(self, rhs: &SchurSeries) -> SchurSeries {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SchurSeries {
    type Output = SchurSeries;

    fn neg(self) -> SchurSeries {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        SchurSeries { degree_n: self.degree_n, terms }
    }
}

impl fmt::Display for SchurSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first_grade = true;
        for d in self.grades() {
            if !first_grade {
                write!(f, " + ")?;
            }
            first_grade = false;
            write!(f, "q^{d}·(")?;
            let mut first = true;
            for ((_, l), c) in self.terms.iter().filter(|((g, _), _)| *g == d) {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if c.is_one() {
                    write!(f, "s{l}")?;
                } else {
                    write!(f, "{c}·s{l}")?;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Pieri rule: multiplies every term by `s_b`, keeping grades.
pub fn pieri_multiply(series: &SchurSeries, b: usize) -> SchurSeries {
    let mut out = SchurSeries::zero(series.degree_n() + b);
    for (d, lambda, c) in series.terms() {
        for nu in horizontal_strips(lambda, b) {
            out.accumulate(d, nu, c.clone());
        }
    }
    out
}

/// `s_d[s_2]`: the multiplicity-free sum of `s_λ` over even `λ ⊢ 2d`, at
/// grade 0.
pub fn even_plethysm(d: usize) -> SchurSeries {
    let mut out = SchurSeries::zero(2 * d);
    for lambda in even_partitions(2 * d) {
        out.accumulate(0, lambda, BigInt::one());
    }
    out
}
