//! Brute-force ground truth for the orbit harmonics quotients.
//!
//! Monomials are evaluated on the points of a locus; the rank of the
//! evaluations of degree at most `d` gives the graded Hilbert function, and
//! traces of the conjugation action on the nested spans give the graded
//! character.

pub mod ideal;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::linalg::{bareiss_adjugate, Fp, IntegerEchelon, SparseEchelon};
use crate::loci::{conjugate_involution, enumerate, Involution, LocusKind, LocusSpec};
use crate::repr::{class_size, decompose_class_function, table, CharacterTable, ClassFunction};
use crate::rsk::{factorial, PermutationWord};
use crate::symfunc::{enumerate_partitions, Partition, QPoly, SchurSeries};

pub use ideal::{
    compare_ideal_vs_gr, ideal_generators, ideal_hilbert_truncated, search_strict_containment, DegreeComparison,
    GeneratorFamily, IdealComparison, IdealGeneratorSet, IdealKind, Polynomial, Verdict,
};

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ArithmeticMode {
    /// Fraction-free elimination over the integers.
    #[default]
    Exact,
    /// Elimination modulo `2^61 - 1`, re-verified exactly for small `n`.
    Modular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` the oracle accepts.
    pub max_n: usize,
    pub mode: ArithmeticMode,
    /// In modular mode, ranks are recomputed exactly up to this `n`.
    pub verify_exact_up_to: usize,
    /// Largest `n` for character tables.
    pub table_bound: usize,
    /// Largest number of monomial columns materialized at once.
    pub max_columns: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n: 6,
            mode: ArithmeticMode::Exact,
            verify_exact_up_to: 5,
            table_bound: crate::repr::DEFAULT_TABLE_BOUND,
            max_columns: 2_000_000,
        }
    }
}

impl OracleConfig {
    fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::Resource(format!("oracle bound is n ≤ {}, got n = {n}", self.max_n)));
        }
        Ok(())
    }
}

/// One degree beyond the largest degree the quotient can live in.
pub fn default_max_deg(n: usize) -> usize {
    n / 2 + 1
}

/// A monomial in the `n²` variables `x_{i,j}`, stored as the sorted multiset
/// of row-major variable indices `(i-1)·n + (j-1)`.
///
/// Ordered by degree, then lexicographically on the index list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIndex {
    n: usize,
    vars: Vec<usize>,
}

impl MonomialIndex {
    pub fn one(n: usize) -> Self {
        MonomialIndex { n, vars: Vec::new() }
    }

    pub fn variable(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::new(n, [(i, j)])
    }

    /// The product of the given variables (with repetition).
    pub fn new(n: usize, vars: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut idx = Vec::new();
        for (i, j) in vars {
            if i == 0 || j == 0 || i > n || j > n {
                return domain(format!("x_{{{i},{j}}} is not a variable of the {n}×{n} matrix"));
            }
            idx.push((i - 1) * n + (j - 1));
        }
        idx.sort_unstable();
        Ok(MonomialIndex { n, vars: idx })
    }

    pub(crate) fn from_indices(n: usize, mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        MonomialIndex { n, vars }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.vars
    }

    /// The variables `(i, j)`, 1-based, with repetition.
    pub fn variables(&self) -> Vec<(usize, usize)> {
        self.vars.iter().map(|&v| (v / self.n + 1, v % self.n + 1)).collect()
    }

    pub fn exponents(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for v in self.variables() {
            *out.entry(v).or_insert(0) += 1;
        }
        out
    }

    pub fn mul(&self, other: &MonomialIndex) -> MonomialIndex {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(&other.vars);
        Self::from_indices(self.n, vars)
    }
}

impl Ord for MonomialIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.vars.len(), &self.vars, self.n).cmp(&(other.vars.len(), &other.vars, other.n))
    }
}

impl PartialOrd for MonomialIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|((i, j), e)| if e == 1 { format!("x_{{{i},{j}}}") } else { format!("x_{{{i},{j}}}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for MonomialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All nondecreasing sequences of length `d` over `0..num_vars`, in
/// lexicographic order.
pub(crate) fn multisets(num_vars: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, num_vars: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..num_vars {
            cur.push(v);
            go(v, num_vars, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, num_vars, d, &mut Vec::with_capacity(d), &mut out);
    out
}

/// Monomials of degree exactly `d` in the `n²` variables, in order.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<MonomialIndex> {
    multisets(n * n, d).into_iter().map(|vars| MonomialIndex { n, vars }).collect()
}

/// `C(n² + d, d)`: the number of monomials of degree at most `d`.
fn monomial_count(n: usize, max_deg: usize) -> Option<usize> {
    let mut c: u128 = 1;
    for k in 1..=max_deg as u128 {
        c = c * (n as u128 * n as u128 + k) / k;
        if c > usize::MAX as u128 {
            return None;
        }
    }
    Some(c as usize)
}

type Bits = Vec<u64>;

fn bit(bits: &[u64], k: usize) -> bool {
    bits[k / 64] >> (k % 64) & 1 == 1
}

fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

/// Values of every monomial of degree at most `max_deg` on every point of a
/// locus. A permutation matrix has 0/1 entries, so each column is stored as
/// the set of points where the monomial equals 1.
#[derive(Debug, Clone)]
pub struct EvaluationMatrix {
    spec: LocusSpec,
    max_deg: usize,
    points: Vec<Involution>,
    monomials: Vec<MonomialIndex>,
    columns: Vec<Bits>,
}

impl EvaluationMatrix {
    pub fn spec(&self) -> LocusSpec {
        self.spec
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn points(&self) -> &[Involution] {
        &self.points
    }

    pub fn monomials(&self) -> &[MonomialIndex] {
        &self.monomials
    }

    pub fn num_rows(&self) -> usize {
        self.points.len()
    }

    pub fn num_cols(&self) -> usize {
        self.monomials.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(bit(&self.columns[col], row))
    }

    pub fn column(&self, col: usize) -> Vec<u8> {
        (0..self.num_rows()).map(|r| self.entry(r, col)).collect()
    }

    fn bits(&self, col: usize) -> &[u64] {
        &self.columns[col]
    }
}

pub fn evaluation_matrix(spec: &LocusSpec, max_deg: usize, cfg: &OracleConfig) -> Result<EvaluationMatrix> {
    spec.validate()?;
    cfg.check_n(spec.n)?;
    let n = spec.n;
    match monomial_count(n, max_deg) {
        Some(c) if c <= cfg.max_columns => {}
        _ => {
            return Err(Error::Resource(format!(
                "more than {} monomials of degree ≤ {max_deg} in {} variables",
                cfg.max_columns,
                n * n
            )))
        }
    }
    let points = enumerate(spec)?;
    let words = points.len().div_ceil(64).max(1);
    // variable x_{i,j} is 1 exactly at the points w with w(i) = j
    let mut var_bits = vec![vec![0u64; words]; n * n];
    for (k, w) in points.iter().enumerate() {
        let word = w.to_word();
        for i in 1..=n {
            let v = (i - 1) * n + (word.image(i) - 1);
            var_bits[v][k / 64] |= 1 << (k % 64);
        }
    }
    let mut all = vec![0u64; words];
    for k in 0..points.len() {
        all[k / 64] |= 1 << (k % 64);
    }
    let mut monomials = Vec::new();
    let mut columns = Vec::new();
    for d in 0..=max_deg {
        for m in monomials_of_degree(n, d) {
            let mut col = all.clone();
            for &v in m.indices() {
                for (c, b) in col.iter_mut().zip(&var_bits[v]) {
                    *c &= b;
                }
            }
            monomials.push(m);
            columns.push(col);
        }
    }
    Ok(EvaluationMatrix { spec: *spec, max_deg, points, monomials, columns })
}

/// Ranks of the nested evaluation spans and a compatible basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFiltration {
    /// `ranks[d] = rank(E_{≤d})`.
    pub ranks: Vec<usize>,
    /// Column indices of a basis of the full span; the first `ranks[d]` of
    /// them span `E_{≤d}`.
    pub basis: Vec<usize>,
}

impl RankFiltration {
    /// `dim R_d = rank(E_{≤d}) - rank(E_{≤d-1})`.
    pub fn hilbert(&self) -> QPoly {
        let mut prev = 0;
        let coeffs = self
            .ranks
            .iter()
            .map(|&r| {
                let d = r - prev;
                prev = r;
                BigInt::from(d)
            })
            .collect();
        QPoly::new(coeffs)
    }
}

trait RankBackend {
    fn insert_bits(&mut self, bits: &[u64], len: usize) -> bool;
}

impl RankBackend for IntegerEchelon {
    fn insert_bits(&mut self, bits: &[u64], len: usize) -> bool {
        self.insert((0..len).map(|k| BigInt::from(u8::from(bit(bits, k)))).collect())
    }
}

impl RankBackend for SparseEchelon<Fp> {
    fn insert_bits(&mut self, bits: &[u64], len: usize) -> bool {
        self.insert((0..len).filter(|&k| bit(bits, k)).map(|k| (k, Fp::new(1))).collect())
    }
}

fn filtration_with<B: RankBackend>(m: &EvaluationMatrix, mut backend: B) -> RankFiltration {
    let full = m.num_rows();
    let mut seen: HashSet<&[u64]> = HashSet::new();
    let mut basis = Vec::new();
    let mut ranks = vec![0; m.max_deg + 1];
    for (col, mono) in m.monomials.iter().enumerate() {
        if basis.len() == full {
            break;
        }
        let bits = m.bits(col);
        if bits.iter().any(|&w| w != 0) && seen.insert(bits) && backend.insert_bits(bits, full) {
            basis.push(col);
            ranks[mono.degree()] += 1;
        }
    }
    for d in 1..ranks.len() {
        ranks[d] += ranks[d - 1];
    }
    RankFiltration { ranks, basis }
}

pub fn rank_filtration(m: &EvaluationMatrix, cfg: &OracleConfig) -> Result<RankFiltration> {
    match cfg.mode {
        ArithmeticMode::Exact => Ok(filtration_with(m, IntegerEchelon::new())),
        ArithmeticMode::Modular => {
            let fast = filtration_with(m, SparseEchelon::<Fp>::new());
            if m.spec.n <= cfg.verify_exact_up_to {
                let exact = filtration_with(m, IntegerEchelon::new());
                if exact != fast {
                    return Err(Error::Invariant(format!(
                        "modular ranks {:?} disagree with exact ranks {:?}",
                        fast.ranks, exact.ranks
                    )));
                }
            }
            Ok(fast)
        }
    }
}

pub fn graded_hilbert_oracle(spec: &LocusSpec, max_deg: usize, cfg: &OracleConfig) -> Result<QPoly> {
    let m = evaluation_matrix(spec, max_deg, cfg)?;
    Ok(rank_filtration(&m, cfg)?.hilbert())
}

/// The permutation with cycles `(1 2 … μ_1)(μ_1+1 …)…` on consecutive
/// blocks.
pub fn class_representative(mu: &Partition) -> PermutationWord {
    let mut images = Vec::with_capacity(mu.size());
    let mut start = 1;
    for &len in mu.parts() {
        for k in 0..len {
            images.push(start + (k + 1) % len);
        }
        start += len;
    }
    PermutationWord::new(images).expect("consecutive cycles form a permutation")
}

/// The conjugation action of each class representative on the point indices.
fn point_actions(points: &[Involution], n: usize) -> Result<Vec<(Partition, Vec<usize>)>> {
    let index: HashMap<&Involution, usize> = points.iter().enumerate().map(|(k, w)| (w, k)).collect();
    enumerate_partitions(n)
        .into_iter()
        .map(|mu| {
            let g = class_representative(&mu);
            let perm = points
                .iter()
                .map(|w| {
                    let image = conjugate_involution(&g, w)?;
                    index
                        .get(&image)
                        .copied()
                        .ok_or_else(|| Error::Invariant(format!("locus is not closed under conjugation at {w}")))
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok((mu, perm))
        })
        .collect()
}

fn permute_bits(bits: &[u64], perm: &[usize]) -> Bits {
    let mut out = vec![0u64; bits.len()];
    for (k, &target) in perm.iter().enumerate() {
        if bit(bits, k) {
            out[target / 64] |= 1 << (target % 64);
        }
    }
    out
}

/// Character of the span of the first `r` basis columns: for `B` the basis
/// and `G = BᵀB`, `tr(ρ(g)|_W) = tr(G⁻¹ Bᵀ ρ(g) B)`.
fn span_character(
    m: &EvaluationMatrix,
    basis: &[usize],
    actions: &[(Partition, Vec<usize>)],
) -> Result<Vec<BigRational>> {
    let r = basis.len();
    if r == 0 {
        return Ok(vec![BigRational::zero(); actions.len()]);
    }
    if r == m.num_rows() {
        return Ok(actions
            .iter()
            .map(|(_, perm)| {
                let fixed = perm.iter().enumerate().filter(|(k, &t)| *k == t).count();
                BigRational::from_integer(BigInt::from(fixed))
            })
            .collect());
    }
    let cols: Vec<&[u64]> = basis.iter().map(|&c| m.bits(c)).collect();
    let gram: Vec<Vec<BigInt>> =
        cols.iter().map(|a| cols.iter().map(|b| BigInt::from(popcount_and(a, b))).collect()).collect();
    let (det, adj) = bareiss_adjugate(&gram)?;
    actions
        .par_iter()
        .map(|(_, perm)| {
            let moved: Vec<Bits> = cols.iter().map(|c| permute_bits(c, perm)).collect();
            let mut total = BigInt::zero();
            for (i, adj_row) in adj.iter().enumerate() {
                for (j, a) in adj_row.iter().enumerate() {
                    let h = popcount_and(cols[j], &moved[i]);
                    if h != 0 && !a.is_zero() {
                        total += a * h;
                    }
                }
            }
            Ok(BigRational::new(total, det.clone()))
        })
        .collect()
}

/// Characters of the graded pieces `R_0, …, R_{max_deg}`, as vectors over
/// the classes of `actions`.
fn graded_characters(
    m: &EvaluationMatrix,
    filtration: &RankFiltration,
    actions: &[(Partition, Vec<usize>)],
) -> Result<Vec<Vec<BigInt>>> {
    let mut prev = vec![BigRational::zero(); actions.len()];
    let mut prev_rank = 0;
    let mut out = Vec::with_capacity(filtration.ranks.len());
    for &r in &filtration.ranks {
        let cur = if r == prev_rank { prev.clone() } else { span_character(m, &filtration.basis[..r], actions)? };
        let diff = cur
            .iter()
            .zip(&prev)
            .map(|(a, b)| {
                let v = a - b;
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::Invariant(format!("graded character value {v} is not an integer")))
                }
            })
            .collect::<Result<Vec<BigInt>>>()?;
        out.push(diff);
        prev = cur;
        prev_rank = r;
    }
    Ok(out)
}

fn to_class_function(n: usize, actions: &[(Partition, Vec<usize>)], values: Vec<BigInt>) -> Result<ClassFunction> {
    let map = actions.iter().zip(values).map(|((mu, _), v)| (mu.clone(), BigRational::from_integer(v))).collect();
    ClassFunction::new(n, map)
}

/// The character of `R(Z)_d` as a class function.
pub fn graded_character_oracle(spec: &LocusSpec, d: usize, cfg: &OracleConfig) -> Result<ClassFunction> {
    let m = evaluation_matrix(spec, d, cfg)?;
    let filtration = rank_filtration(&m, cfg)?;
    let actions = point_actions(m.points(), spec.n)?;
    let mut chars = graded_characters(&m, &filtration, &actions)?;
    to_class_function(spec.n, &actions, chars.swap_remove(d))
}

/// The graded Frobenius image of `R(Z)` through degree `max_deg`.
pub fn grfrob_oracle(spec: &LocusSpec, max_deg: usize, cfg: &OracleConfig) -> Result<SchurSeries> {
    let m = evaluation_matrix(spec, max_deg, cfg)?;
    let filtration = rank_filtration(&m, cfg)?;
    let actions = point_actions(m.points(), spec.n)?;
    let chars = graded_characters(&m, &filtration, &actions)?;
    let t = table(spec.n, cfg.table_bound)?;
    let mut out = SchurSeries::zero(spec.n);
    for (d, values) in chars.into_iter().enumerate() {
        let f = to_class_function(spec.n, &actions, values)?;
        let piece = decompose_class_function(&t, &f).map_err(|e| Error::Invariant(e.to_string()))?;
        if !piece.is_nonnegative() {
            return Err(Error::Invariant(format!("negative multiplicity in degree {d}")));
        }
        out += &piece.shifted(d);
    }
    Ok(out)
}

/// Whether `η_j = Σ_{σ ∈ S_j} σ` annihilates the degree-`d` piece of
/// `R(M_{n,a})`. Computed as the dimension of the `S_j`-invariants of the
/// oracle character, `Σ_{μ ⊢ j} χ(μ ∪ 1^{n-j}) / z_μ`.
pub fn eta_annihilation_check(n: usize, a: usize, d: usize, j: usize, cfg: &OracleConfig) -> Result<bool> {
    let spec = LocusSpec::new(LocusKind::FixedCount(a), n)?;
    if j + 2 * d <= n + a {
        return domain(format!("need j > n - 2d + a, got j = {j} with n = {n}, a = {a}, d = {d}"));
    }
    if j > n {
        return Ok(true);
    }
    let chi = graded_character_oracle(&spec, d, cfg)?;
    let mut invariants = BigRational::zero();
    for mu in enumerate_partitions(j) {
        let mut parts = mu.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, n - j));
        let class = Partition::new(parts)?;
        let weight = BigRational::new(BigInt::from(class_size(&mu)), BigInt::from(factorial(j)));
        invariants += chi.get(&class).expect("class function is total") * weight;
    }
    if invariants.is_negative() || !invariants.is_integer() {
        return Err(Error::Invariant(format!("invariant dimension {invariants} is not a natural number")));
    }
    Ok(invariants.is_zero())
}

/// Character table used by the oracle, exposed for callers that decompose
/// oracle output themselves.
pub fn oracle_table(n: usize, cfg: &OracleConfig) -> Result<Arc<CharacterTable>> {
    table(n, cfg.table_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{grfrob_matchings, grfrob_pm};

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn monomial_order_and_display() {
        let ms = monomials_of_degree(2, 2);
        assert_eq!(ms.len(), 10);
        assert_eq!(ms[0].to_string(), "x_{1,1}^2");
        assert_eq!(ms[1].to_string(), "x_{1,1} x_{1,2}");
        assert!(MonomialIndex::one(2) < ms[0]);
        assert!(MonomialIndex::variable(2, 2, 2).unwrap() < ms[0]);
        assert!(MonomialIndex::variable(2, 3, 1).is_err());
    }

    #[test]
    fn evaluation_matrix_examples() {
        let spec = LocusSpec::all(2);
        let m = evaluation_matrix(&spec, 1, &cfg()).unwrap();
        assert_eq!(m.num_rows(), 2);
        assert_eq!(m.num_cols(), 5);
        assert_eq!(m.column(0), vec![1, 1]);
        let x12 = m.monomials().iter().position(|x| x.to_string() == "x_{1,2}").unwrap();
        let transposition = m.points().iter().position(|w| w.num_pairs() == 1).unwrap();
        for r in 0..2 {
            assert_eq!(m.entry(r, x12), u8::from(r == transposition));
        }
        let big = LocusSpec::all(7);
        assert!(matches!(evaluation_matrix(&big, 1, &cfg()), Err(Error::Resource(_))));
    }

    #[test]
    fn hilbert_examples() {
        let h = graded_hilbert_oracle(&LocusSpec::all(4), 3, &cfg()).unwrap();
        assert_eq!(h, QPoly::from_i64s(&[1, 6, 3]));
        let pm = LocusSpec::new(LocusKind::PerfectMatchings, 4).unwrap();
        assert_eq!(graded_hilbert_oracle(&pm, 3, &cfg()).unwrap(), QPoly::from_i64s(&[1, 2]));
        let one = LocusSpec::new(LocusKind::FixedCount(4), 4).unwrap();
        assert_eq!(graded_hilbert_oracle(&one, 3, &cfg()).unwrap(), QPoly::one());
    }

    #[test]
    fn modular_mode_agrees() {
        let modular = OracleConfig { mode: ArithmeticMode::Modular, ..cfg() };
        let spec = LocusSpec::all(5);
        assert_eq!(
            graded_hilbert_oracle(&spec, 3, &modular).unwrap(),
            graded_hilbert_oracle(&spec, 3, &cfg()).unwrap()
        );
    }

    #[test]
    fn class_representatives() {
        assert_eq!(class_representative(&p(&[3, 2, 1])).images(), &[2, 3, 1, 5, 4, 6]);
        assert_eq!(class_representative(&Partition::column(3)), PermutationWord::identity(3));
    }

    #[test]
    fn character_examples() {
        let spec = LocusSpec::new(LocusKind::PerfectMatchings, 4).unwrap();
        let chi0 = graded_character_oracle(&spec, 0, &cfg()).unwrap();
        assert!(chi0.values().all(|(_, v)| *v == BigRational::from_integer(BigInt::from(1))));
        let t = table(4, 15).unwrap();
        let chi1 = graded_character_oracle(&spec, 1, &cfg()).unwrap();
        assert_eq!(decompose_class_function(&t, &chi1).unwrap(), SchurSeries::schur(0, p(&[2, 2])));
    }

    #[test]
    fn grfrob_examples() {
        let m3 = grfrob_oracle(&LocusSpec::all(3), 2, &cfg()).unwrap();
        assert_eq!(m3, grfrob_matchings(3));
        let pm4 = LocusSpec::new(LocusKind::FixedCount(0), 4).unwrap();
        let s = grfrob_oracle(&pm4, 3, &cfg()).unwrap();
        assert_eq!(s, &SchurSeries::schur(0, p(&[4])) + &SchurSeries::schur(1, p(&[2, 2])));
        assert_eq!(s, grfrob_pm(4).unwrap());
    }

    #[test]
    fn eta_examples() {
        assert!(eta_annihilation_check(4, 0, 1, 4, &cfg()).unwrap());
        assert!(eta_annihilation_check(5, 1, 2, 3, &cfg()).unwrap());
        assert!(eta_annihilation_check(4, 4, 0, 9, &cfg()).unwrap());
        assert!(matches!(eta_annihilation_check(4, 0, 1, 2, &cfg()), Err(Error::Domain(_))));
    }
}
