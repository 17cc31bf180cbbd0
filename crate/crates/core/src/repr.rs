//! Character theory of the symmetric group: the character table, the
//! Frobenius correspondence between Schur expansions and class functions,
//! Kronecker (inner tensor) products and equivariant log-concavity.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::rsk::factorial;
use crate::symfunc::{enumerate_partitions, Partition, SchurSeries};

/// Default largest `n` for which a character table is built.
pub const DEFAULT_TABLE_BOUND: usize = 15;

/// `χ^λ(μ)` for all `λ, μ ⊢ n`, with class sizes.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[λ][μ]`
    values: Vec<Vec<i64>>,
    class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in reverse lexicographic order; they index both the
    /// irreducibles and the classes.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.position(lambda)?][self.position(mu)?])
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[i64]> {
        self.position(lambda).map(|i| self.values[i].as_slice())
    }

    pub fn class_size(&self, mu: &Partition) -> Option<&BigUint> {
        self.position(mu).map(|i| &self.class_sizes[i])
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn group_order(&self) -> BigUint {
        factorial(self.n)
    }
}

/// `|K_μ| = n! / Π_i i^{m_i} m_i!`.
pub fn class_size(mu: &Partition) -> BigUint {
    let z = mu
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (part, mult)| acc * BigUint::from(part).pow(mult as u32) * factorial(mult));
    factorial(mu.size()) / z
}

/// Murnaghan–Nakayama on beta-sets: removing a rim hook of length `r` moves
/// one bead from `b` to `b - r`, with sign `(-1)^{#beads strictly between}`.
struct MnEvaluator<'a> {
    mu: &'a [usize],
    memo: HashMap<(Vec<usize>, usize), i64>,
}

impl MnEvaluator<'_> {
    fn eval(&mut self, lambda: &[usize], k: usize) -> i64 {
        if k == self.mu.len() {
            return i64::from(lambda.is_empty());
        }
        if let Some(&v) = self.memo.get(&(lambda.to_vec(), k)) {
            return v;
        }
        let r = self.mu[k];
        let len = lambda.len();
        let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0i64;
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let between = beta.iter().filter(|&&c| target < c && c < b).count();
            let mut moved = beta.clone();
            moved[i] = target;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let mut shape: Vec<usize> = moved.iter().enumerate().map(|(j, &c)| c + j + 1 - len).collect();
            while shape.last() == Some(&0) {
                shape.pop();
            }
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(&shape, k + 1);
        }
        self.memo.insert((lambda.to_vec(), k), total);
        total
    }
}

/// The exact character table of `S_n`. Refuses `n > bound`.
pub fn character_table(n: usize, bound: usize) -> Result<CharacterTable> {
    if n > bound {
        return Err(Error::Resource(format!("character table of S_{n} exceeds the bound n ≤ {bound}")));
    }
    let partitions = enumerate_partitions(n);
    let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut values = vec![vec![0i64; partitions.len()]; partitions.len()];
    for (j, mu) in partitions.iter().enumerate() {
        let mut mn = MnEvaluator { mu: mu.parts(), memo: HashMap::new() };
        for (i, lambda) in partitions.iter().enumerate() {
            values[i][j] = mn.eval(lambda.parts(), 0);
        }
    }
    let class_sizes = partitions.iter().map(class_size).collect();
    Ok(CharacterTable { n, partitions, index, values, class_sizes })
}

/// Shared, lazily built tables for `n ≤ DEFAULT_TABLE_BOUND`.
pub fn cached_table(n: usize) -> Result<Arc<CharacterTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("character table cache poisoned").get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(character_table(n, DEFAULT_TABLE_BOUND)?);
    let mut guard = cache.lock().expect("character table cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(table)))
}

/// The table of `S_n` under an explicit bound, shared when it is within the
/// default bound.
pub fn table(n: usize, bound: usize) -> Result<Arc<CharacterTable>> {
    if n > bound {
        return Err(Error::Resource(format!("character table of S_{n} exceeds the bound n ≤ {bound}")));
    }
    if n <= DEFAULT_TABLE_BOUND {
        cached_table(n)
    } else {
        Ok(Arc::new(character_table(n, bound)?))
    }
}

/// A rational-valued function on the conjugacy classes of `S_n`, keyed by
/// cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        let values = enumerate_partitions(n).into_iter().map(|mu| (mu, BigRational::zero())).collect();
        ClassFunction { n, values }
    }

    /// Every partition of `n` must be a key.
    pub fn new(n: usize, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        let parts = enumerate_partitions(n);
        if values.len() != parts.len() || parts.iter().any(|p| !values.contains_key(p)) {
            return domain(format!("class function keys are not exactly the partitions of {n}"));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mu: &Partition) -> Option<&BigRational> {
        self.values.get(mu)
    }

    pub fn set(&mut self, mu: &Partition, v: BigRational) -> Result<()> {
        match self.values.get_mut(mu) {
            Some(slot) => {
                *slot = v;
                Ok(())
            }
            None => domain(format!("{mu} is not a partition of {}", self.n)),
        }
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.values.iter()
    }

    /// Value at the identity class.
    pub fn degree(&self) -> BigRational {
        self.values[&Partition::column(self.n)].clone()
    }

    pub fn pointwise_product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return domain(format!("class functions on S_{} and S_{}", self.n, other.n));
        }
        let values = self.values.iter().map(|(mu, v)| (mu.clone(), v * &other.values[mu])).collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn sum(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return domain(format!("class functions on S_{} and S_{}", self.n, other.n));
        }
        let values = self.values.iter().map(|(mu, v)| (mu.clone(), v + &other.values[mu])).collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn difference(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return domain(format!("class functions on S_{} and S_{}", self.n, other.n));
        }
        let values = self.values.iter().map(|(mu, v)| (mu.clone(), v - &other.values[mu])).collect();
        Ok(ClassFunction { n: self.n, values })
    }
}

fn check_table(table: &CharacterTable, n: usize) -> Result<()> {
    if table.n != n {
        return domain(format!("character table of S_{} used for degree {n}", table.n));
    }
    Ok(())
}

/// `Σ c_λ χ^λ` for a single-grade Schur series.
pub fn schur_to_class_function(table: &CharacterTable, s: &SchurSeries) -> Result<ClassFunction> {
    check_table(table, s.degree_n())?;
    if s.grades().len() > 1 {
        return domain("expected a Schur series concentrated in one grade");
    }
    let mut acc = vec![BigInt::zero(); table.partitions.len()];
    for (_, lambda, c) in s.terms() {
        let row = &table.values[table.index[lambda]];
        for (slot, &chi) in acc.iter_mut().zip(row) {
            *slot += c * chi;
        }
    }
    let values = table
        .partitions
        .iter()
        .zip(acc)
        .map(|(mu, v)| (mu.clone(), BigRational::from_integer(v)))
        .collect();
    Ok(ClassFunction { n: s.degree_n(), values })
}

/// Multiplicities `⟨f, χ^λ⟩ = (1/n!) Σ_μ |K_μ| f(μ) χ^λ(μ)` as a grade-0
/// Schur series. A non-integral multiplicity means `f` was not a virtual
/// character and is a domain error.
pub fn decompose_class_function(table: &CharacterTable, f: &ClassFunction) -> Result<SchurSeries> {
    check_table(table, f.n)?;
    let order = BigRational::from_integer(BigInt::from(table.group_order()));
    let weighted: Vec<BigRational> = table
        .partitions
        .iter()
        .zip(&table.class_sizes)
        .map(|(mu, size)| &f.values[mu] * BigRational::from_integer(BigInt::from(size.clone())))
        .collect();
    let mut out = SchurSeries::zero(f.n);
    for (lambda, row) in table.partitions.iter().zip(&table.values) {
        let mut inner = BigRational::zero();
        for (w, &chi) in weighted.iter().zip(row) {
            if chi != 0 {
                inner += w * BigRational::from_integer(BigInt::from(chi));
            }
        }
        inner /= &order;
        if !inner.is_integer() {
            return domain(format!("multiplicity of {lambda} is {inner}, not an integer"));
        }
        out.accumulate(0, lambda.clone(), inner.to_integer());
    }
    Ok(out)
}

/// Decomposition of the inner tensor product of two grade-0 modules.
pub fn kronecker_multiplicities(table: &CharacterTable, a: &SchurSeries, b: &SchurSeries) -> Result<SchurSeries> {
    if a.degree_n() != b.degree_n() {
        return domain(format!("Kronecker product of degrees {} and {}", a.degree_n(), b.degree_n()));
    }
    let fa = schur_to_class_function(table, a)?;
    let fb = schur_to_class_function(table, b)?;
    decompose_class_function(table, &fa.pointwise_product(&fb)?)
}

/// Outcome of [`equivariant_log_concave`]. On failure `witness` names the
/// interior grade and the irreducible whose multiplicity in
/// `V_{d-1} ⊗ V_{d+1}` exceeds its multiplicity in `V_d ⊗ V_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogConcavity {
    pub holds: bool,
    pub witness: Option<(usize, Partition)>,
}

/// Equivariant log-concavity of the graded pieces `V_0, ..., V_m` of a
/// graded module: for every interior grade `d` the multiplicities of
/// `V_{d-1} ⊗ V_{d+1}` are dominated by those of `V_d ⊗ V_d`.
pub fn equivariant_log_concave(table: &CharacterTable, series: &SchurSeries) -> Result<LogConcavity> {
    let Some(top) = series.max_grade() else {
        return Ok(LogConcavity { holds: true, witness: None });
    };
    let pieces: Vec<SchurSeries> = (0..=top).map(|d| series.grade(d)).collect();
    for d in 1..top {
        let outer = kronecker_multiplicities(table, &pieces[d - 1], &pieces[d + 1])?;
        let middle = kronecker_multiplicities(table, &pieces[d], &pieces[d])?;
        for (_, lambda, c) in outer.terms() {
            if c.is_positive() && c > &middle.coefficient(0, lambda)? {
                return Ok(LogConcavity { holds: false, witness: Some((d, lambda.clone())) });
            }
        }
    }
    Ok(LogConcavity { holds: true, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s2_table() {
        let t = character_table(2, 15).unwrap();
        assert_eq!(t.row(&p(&[2])).unwrap(), &[1, 1]);
        assert_eq!(t.row(&p(&[1, 1])).unwrap(), &[-1, 1]);
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=8 {
            let t = character_table(n, 15).unwrap();
            for mu in t.partitions() {
                assert_eq!(t.value(&Partition::row(n), mu), Some(1));
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(t.value(&Partition::column(n), mu), Some(sign));
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(character_table(16, 15), Err(Error::Resource(_))));
    }

    #[test]
    fn known_s4_values() {
        let t = character_table(4, 15).unwrap();
        // χ^{(2,2)} on classes (4),(3,1),(2,2),(2,1,1),(1^4)
        assert_eq!(t.row(&p(&[2, 2])).unwrap(), &[0, -1, 2, 0, 2]);
        assert_eq!(t.row(&p(&[3, 1])).unwrap(), &[-1, 0, -1, 1, 3]);
    }

    #[test]
    fn frobenius_round_trip_examples() {
        let t = character_table(4, 15).unwrap();
        let trivial = schur_to_class_function(&t, &SchurSeries::schur(0, Partition::row(4))).unwrap();
        assert!(trivial.values().all(|(_, v)| v.is_one()));
        assert_eq!(decompose_class_function(&t, &trivial).unwrap(), SchurSeries::schur(0, Partition::row(4)));
        let zero = schur_to_class_function(&t, &SchurSeries::zero(4)).unwrap();
        assert_eq!(zero, ClassFunction::zero(4));
    }

    #[test]
    fn regular_character_decomposes_by_dimension() {
        let t = character_table(5, 15).unwrap();
        let mut reg = ClassFunction::zero(5);
        reg.set(&Partition::column(5), BigRational::from_integer(BigInt::from(120))).unwrap();
        let s = decompose_class_function(&t, &reg).unwrap();
        for lambda in t.partitions() {
            let dim = BigInt::from(crate::rsk::count_syt(lambda));
            assert_eq!(s.coefficient(0, lambda).unwrap(), dim);
        }
    }

    #[test]
    fn non_character_is_rejected() {
        let t = character_table(3, 15).unwrap();
        let mut f = ClassFunction::zero(3);
        f.set(&Partition::column(3), BigRational::one()).unwrap();
        assert!(matches!(decompose_class_function(&t, &f), Err(Error::Domain(_))));
    }

    #[test]
    fn kronecker_examples() {
        let t = character_table(3, 15).unwrap();
        let s21 = SchurSeries::schur(0, p(&[2, 1]));
        let expected = SchurSeries::from_terms(
            3,
            [(0, p(&[3]), BigInt::one()), (0, p(&[2, 1]), BigInt::one()), (0, p(&[1, 1, 1]), BigInt::one())],
        )
        .unwrap();
        assert_eq!(kronecker_multiplicities(&t, &s21, &s21).unwrap(), expected);
        let sign = SchurSeries::schur(0, Partition::column(3));
        assert_eq!(kronecker_multiplicities(&t, &sign, &sign).unwrap(), SchurSeries::schur(0, Partition::row(3)));
        let triv = SchurSeries::schur(0, Partition::row(3));
        assert_eq!(kronecker_multiplicities(&t, &triv, &s21).unwrap(), s21);
    }

    #[test]
    fn log_concavity_examples() {
        let t = character_table(4, 15).unwrap();
        let single = SchurSeries::schur(0, p(&[2, 2]));
        assert!(equivariant_log_concave(&t, &single).unwrap().holds);
        // V_0 = V_2 = s_4 with V_1 = 0 is not log-concave.
        let gap = &SchurSeries::schur(0, Partition::row(4)) + &SchurSeries::schur(2, Partition::row(4));
        let verdict = equivariant_log_concave(&t, &gap).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness, Some((1, Partition::row(4))));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=9 {
            let t = character_table(n, 15).unwrap();
            let total: BigUint = t.class_sizes().iter().sum();
            assert_eq!(total, t.group_order());
        }
    }
}
