//! Exact linear algebra used by the oracle: incremental row echelon forms
//! over the integers (fraction-free) and over fields, and a fraction-free
//! determinant/adjugate for Gram matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Incremental echelon form of integer row vectors, kept primitive.
///
/// Each stored row has a pivot (its first nonzero entry) and is zero in the
/// pivot columns of every row stored before it, so reducing a new vector
/// against the rows in insertion order decides membership in their span.
#[derive(Debug, Clone, Default)]
pub struct IntegerEchelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntegerEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` and keep it if it is independent. Returns whether the rank
    /// grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = &row[*pivot];
            let b = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * a - &b * r;
            }
            make_primitive(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// The arithmetic the sparse echelon needs.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self) -> Self;
    fn from_rational(q: &BigRational) -> Result<Self>;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_rational(q: &BigRational) -> Result<Self> {
        Ok(q.clone())
    }
}

/// Integers modulo the Mersenne prime `2^61 - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    pub const MODULUS: u64 = (1 << 61) - 1;

    pub fn new(v: u64) -> Self {
        Fp(v % Self::MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce(x: u128) -> u64 {
        let p = Self::MODULUS as u128;
        let folded = (x & p) + (x >> 61);
        let folded = (folded & p) + (folded >> 61);
        (folded % p) as u64
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn from_bigint(v: &BigInt) -> Fp {
        let m = BigInt::from(Self::MODULUS);
        Fp(v.mod_floor(&m).to_u64().expect("residue fits in u64"))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp::new(self.0 + other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp::new(self.0 + Self::MODULUS - other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(Self::reduce(self.0 as u128 * other.0 as u128))
    }
    fn inv(&self) -> Self {
        self.pow(Self::MODULUS - 2)
    }
    fn from_rational(q: &BigRational) -> Result<Self> {
        let den = Fp::from_bigint(q.denom());
        if den.is_zero() {
            return Err(Error::Resource(format!("denominator of {q} vanishes modulo {}", Self::MODULUS)));
        }
        Ok(Fp::from_bigint(q.numer()).mul(&den.inv()))
    }
}

/// A sparse vector: `(column, value)` pairs, strictly increasing columns and
/// no stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// `a - c·b` for sparse vectors.
fn sub_scaled<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, F::zero().sub(&c.mul(&b[j].1))));
            j += 1;
        } else {
            let v = a[i].1.sub(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental echelon form of sparse vectors over a field. Stored rows are
/// monic and keyed by their leading column.
#[derive(Debug, Clone)]
pub struct SparseEchelon<F: Field> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for SparseEchelon<F> {
    fn default() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading columns of the stored rows, ascending.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Returns whether `v` was independent of the stored rows.
    pub fn insert(&mut self, mut v: SparseVec<F>) -> bool {
        v.retain(|(_, x)| !x.is_zero());
        while let Some((lead, c)) = v.first().cloned() {
            match self.rows.get(&lead) {
                Some(row) => v = sub_scaled(&v, &c, row),
                None => {
                    let inv = c.inv();
                    let monic = v.into_iter().map(|(k, x)| (k, x.mul(&inv))).collect();
                    self.rows.insert(lead, monic);
                    return true;
                }
            }
        }
        false
    }

    /// Fully reduce the stored rows so each pivot column is zero in every
    /// other row.
    pub fn into_reduced(self) -> BTreeMap<usize, SparseVec<F>> {
        let mut done: BTreeMap<usize, SparseVec<F>> = BTreeMap::new();
        for (lead, mut row) in self.rows.into_iter().rev() {
            let mut k = 1;
            while k < row.len() {
                let (col, c) = row[k].clone();
                if let Some(r) = done.get(&col) {
                    row = sub_scaled(&row, &c, r);
                } else {
                    k += 1;
                }
            }
            done.insert(lead, row);
        }
        done
    }
}

/// Determinant and adjugate of a square integer matrix by fraction-free
/// Gauss–Jordan elimination on `[A | I]`. Every division is exact. Requires
/// nonzero leading principal minors (true for Gram matrices of independent
/// vectors); otherwise returns an invariant error.
pub fn bareiss_adjugate(a: &[Vec<BigInt>]) -> Result<(BigInt, Vec<Vec<BigInt>>)> {
    let r = a.len();
    if r == 0 {
        return Ok((BigInt::one(), Vec::new()));
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut ext = row.clone();
            ext.extend((0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            ext
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..r {
        let pivot = m[k][k].clone();
        if pivot.is_zero() {
            return Err(Error::Invariant(format!("zero leading minor at step {k}")));
        }
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = (&pivot * &*x - &factor * p) / &prev;
            }
        }
        prev = pivot;
    }
    // The left block is now det(A)·I and the right block adj(A).
    let det = prev;
    let mut adj = Vec::with_capacity(r);
    for (k, mut row) in m.into_iter().enumerate() {
        if row[k] != det {
            return Err(Error::Invariant("fraction-free elimination lost the determinant".into()));
        }
        adj.push(row.split_off(r));
    }
    Ok((det, adj))
}
