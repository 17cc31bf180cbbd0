//! Explicit generating sets for the matching ideals and truncated Hilbert
//! functions of the quotients they define.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{default_max_deg, graded_hilbert_oracle, multisets, ArithmeticMode, MonomialIndex, OracleConfig};
use crate::error::{domain, Error, Result};
use crate::linalg::{self, Fp, SparseEchelon, SparseVec};
use crate::loci::{LocusKind, LocusSpec};
use crate::symfunc::QPoly;

/// Which ideal a generator set instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// `I^M_n`.
    Matchings,
    /// `I^PM_n = I^M_n + (x_{i,i})`.
    PerfectMatchings,
    /// `I^M_{n,a} = I^M_n + (Σ x_{i,i}) + (Π_{i∈S} x_{i,i} : |S| > a)`.
    FixedCount(usize),
}

impl IdealKind {
    /// The locus whose associated graded ideal contains this ideal.
    pub fn locus(&self, n: usize) -> Result<LocusSpec> {
        let kind = match *self {
            IdealKind::Matchings => LocusKind::AllInvolutions,
            IdealKind::PerfectMatchings => LocusKind::PerfectMatchings,
            IdealKind::FixedCount(a) => LocusKind::FixedCount(a),
        };
        LocusSpec::new(kind, n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorFamily {
    RowSum,
    ColumnSum,
    RowProduct,
    ColumnProduct,
    SymmetricDifference,
    Diagonal,
    DiagonalSum,
    DiagonalProduct,
}

/// A polynomial with integer coefficients in the variables `x_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<MonomialIndex, i64>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (MonomialIndex, i64)>) -> Result<Self> {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: MonomialIndex, c: i64) -> Result<()> {
        if m.n() != self.n {
            return domain(format!("monomial over {}×{} added to a polynomial over {}×{}", m.n(), m.n(), self.n, self.n));
        }
        let slot = self.terms.entry(m.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&m);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialIndex, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(MonomialIndex::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(MonomialIndex::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let sep = if k > 0 { " " } else { "" };
            let space = if k > 0 { " " } else { "" };
            let mag = c.unsigned_abs();
            if mag == 1 && m.degree() > 0 {
                write!(f, "{sep}{sign}{space}{m}")?;
            } else {
                write!(f, "{sep}{sign}{space}{mag}·{m}")?;
            }
        }
        Ok(())
    }
}

/// A list of homogeneous generators, tagged with the family each belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGeneratorSet {
    kind: Option<IdealKind>,
    n: usize,
    generators: Vec<(GeneratorFamily, Polynomial)>,
}

impl IdealGeneratorSet {
    /// A generator set not tied to one of the named ideals. Every generator
    /// must be homogeneous and live over the `n×n` matrix.
    pub fn custom(n: usize, generators: Vec<(GeneratorFamily, Polynomial)>) -> Result<Self> {
        for (_, g) in &generators {
            if g.n != n {
                return domain(format!("generator {g} is not over the {n}×{n} matrix"));
            }
            if !g.is_homogeneous() {
                return domain(format!("generator {g} is not homogeneous"));
            }
        }
        Ok(IdealGeneratorSet { kind: None, n, generators })
    }

    pub fn kind(&self) -> Option<IdealKind> {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(GeneratorFamily, Polynomial)] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn count(&self, family: GeneratorFamily) -> usize {
        self.generators.iter().filter(|(f, _)| *f == family).count()
    }
}

fn var(n: usize, i: usize, j: usize) -> MonomialIndex {
    MonomialIndex::variable(n, i, j).expect("indices are in range")
}

fn monomial(n: usize, vars: impl IntoIterator<Item = (usize, usize)>) -> MonomialIndex {
    MonomialIndex::new(n, vars).expect("indices are in range")
}

fn linear(n: usize, terms: impl IntoIterator<Item = ((usize, usize), i64)>) -> Polynomial {
    Polynomial::from_terms(n, terms.into_iter().map(|((i, j), c)| (var(n, i, j), c))).expect("same matrix size")
}

fn single(n: usize, m: MonomialIndex) -> Polynomial {
    Polynomial::from_terms(n, [(m, 1)]).expect("same matrix size")
}

/// `k`-element subsets of `1..=n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    multisets(n, k)
        .into_iter()
        .filter(|s| s.windows(2).all(|w| w[0] < w[1]))
        .map(|s| s.into_iter().map(|v| v + 1).collect())
        .collect()
}

/// The generators of the named ideal.
///
/// Row and column products are listed for distinct positions only: squares
/// `x_{i,j}²` already lie in the ideal generated by a row sum and the
/// products of distinct positions. Likewise only the `(a+1)`-fold diagonal
/// products are listed, larger ones being multiples of them.
pub fn ideal_generators(kind: IdealKind, n: usize) -> Result<IdealGeneratorSet> {
    kind.locus(n)?;
    use GeneratorFamily::*;
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.push((RowSum, linear(n, (1..=n).map(|j| ((i, j), 1)))));
    }
    for j in 1..=n {
        gens.push((ColumnSum, linear(n, (1..=n).map(|i| ((i, j), 1)))));
    }
    for i in 1..=n {
        for pair in subsets(n, 2) {
            gens.push((RowProduct, single(n, monomial(n, [(i, pair[0]), (i, pair[1])]))));
        }
    }
    for j in 1..=n {
        for pair in subsets(n, 2) {
            gens.push((ColumnProduct, single(n, monomial(n, [(pair[0], j), (pair[1], j)]))));
        }
    }
    for pair in subsets(n, 2) {
        let (i, j) = (pair[0], pair[1]);
        gens.push((SymmetricDifference, linear(n, [((i, j), 1), ((j, i), -1)])));
    }
    match kind {
        IdealKind::Matchings => {}
        IdealKind::PerfectMatchings => {
            for i in 1..=n {
                gens.push((Diagonal, linear(n, [((i, i), 1)])));
            }
        }
        IdealKind::FixedCount(a) => {
            gens.push((DiagonalSum, linear(n, (1..=n).map(|i| ((i, i), 1)))));
            for s in subsets(n, a + 1) {
                gens.push((DiagonalProduct, single(n, monomial(n, s.iter().map(|&i| (i, i))))));
            }
        }
    }
    Ok(IdealGeneratorSet { kind: Some(kind), n, generators: gens })
}

/// A polynomial in the free variables left after eliminating the linear
/// generators, keyed by sorted free-variable index lists.
type Reduced = BTreeMap<Vec<usize>, BigRational>;

fn multiply(a: &Reduced, b: &Reduced) -> Reduced {
    let mut out = Reduced::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = ma.clone();
            m.extend_from_slice(mb);
            m.sort_unstable();
            let slot = out.entry(m).or_insert_with(BigRational::zero);
            *slot += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Hilbert function of `C[x] / (gens)` in degrees `0..=max_deg`.
///
/// Linear generators are eliminated first; the remaining generators are
/// rewritten in the surviving variables, and the ideal's degree-`d` part is
/// built as `x_k · I_{d-1}` plus the degree-`d` generators.
pub fn ideal_hilbert_truncated(gens: &IdealGeneratorSet, max_deg: usize, mode: ArithmeticMode) -> Result<QPoly> {
    match mode {
        ArithmeticMode::Exact => hilbert_over::<BigRational>(gens, max_deg),
        ArithmeticMode::Modular => hilbert_over::<Fp>(gens, max_deg),
    }
}

const MAX_IDEAL_COLUMNS: usize = 5_000_000;

fn hilbert_over<F: linalg::Field>(gens: &IdealGeneratorSet, max_deg: usize) -> Result<QPoly> {
    let n = gens.n;
    let num_vars = n * n;
    let nonzero: Vec<&Polynomial> = gens.generators.iter().map(|(_, g)| g).filter(|g| !g.is_zero()).collect();
    if nonzero.iter().any(|g| g.degree() == Some(0)) {
        return Ok(QPoly::zero());
    }

    let mut linear_span = SparseEchelon::<BigRational>::new();
    for g in nonzero.iter().filter(|g| g.degree() == Some(1)) {
        let v: SparseVec<BigRational> =
            g.terms().map(|(m, c)| (m.indices()[0], BigRational::from_integer(BigInt::from(c)))).collect();
        linear_span.insert(v);
    }
    let eliminated = linear_span.into_reduced();
    let free: Vec<usize> = (0..num_vars).filter(|v| !eliminated.contains_key(v)).collect();
    let free_index: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let f = free.len();

    // each variable as a linear form in the free variables
    let substitute = |v: usize| -> Reduced {
        match eliminated.get(&v) {
            None => Reduced::from([(vec![free_index[&v]], BigRational::one())]),
            Some(row) => row.iter().skip(1).map(|(k, c)| (vec![free_index[k]], -c.clone())).collect(),
        }
    };

    let mut higher: BTreeMap<usize, Vec<Reduced>> = BTreeMap::new();
    for g in nonzero.iter().filter(|g| g.degree() > Some(1)) {
        let mut total = Reduced::new();
        for (m, c) in g.terms() {
            let mut prod = Reduced::from([(Vec::new(), BigRational::from_integer(BigInt::from(c)))]);
            for &v in m.indices() {
                prod = multiply(&prod, &substitute(v));
            }
            for (k, x) in prod {
                *total.entry(k).or_insert_with(BigRational::zero) += x;
            }
        }
        total.retain(|_, c| !c.is_zero());
        if !total.is_empty() {
            higher.entry(g.degree().expect("nonzero")).or_default().push(total);
        }
    }

    let mut coeffs = vec![BigInt::one()];
    if max_deg >= 1 {
        coeffs.push(BigInt::from(f));
    }
    // basis of the ideal in the previous degree, over that degree's columns
    let mut prev_monomials: Vec<Vec<usize>> = (0..f).map(|k| vec![k]).collect();
    let mut prev_basis: Vec<SparseVec<F>> = Vec::new();
    for d in 2..=max_deg {
        let monomials = multisets(f, d);
        if monomials.len() > MAX_IDEAL_COLUMNS {
            return Err(Error::Resource(format!("{} monomials of degree {d} in {f} variables", monomials.len())));
        }
        let column: HashMap<&[usize], usize> = monomials.iter().enumerate().map(|(k, m)| (m.as_slice(), k)).collect();
        let mut echelon = SparseEchelon::<F>::new();
        let push = |entries: Vec<(usize, F)>, echelon: &mut SparseEchelon<F>| {
            let mut v = entries;
            v.sort_unstable_by_key(|(k, _)| *k);
            echelon.insert(v);
        };
        for g in higher.get(&d).into_iter().flatten() {
            let entries = g
                .iter()
                .map(|(m, c)| Ok((column[m.as_slice()], F::from_rational(c)?)))
                .collect::<Result<Vec<_>>>()?;
            push(entries, &mut echelon);
        }
        for row in &prev_basis {
            if echelon.rank() == monomials.len() {
                break;
            }
            for x in 0..f {
                let entries = row
                    .iter()
                    .map(|(k, c)| {
                        let mut m = prev_monomials[*k].clone();
                        m.push(x);
                        m.sort_unstable();
                        (column[m.as_slice()], c.clone())
                    })
                    .collect();
                push(entries, &mut echelon);
            }
        }
        coeffs.push(BigInt::from(monomials.len() - echelon.rank()));
        prev_basis = echelon.into_reduced().into_values().collect();
        prev_monomials = monomials;
    }
    Ok(QPoly::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: usize,
    /// Dimension of the quotient by the explicit ideal.
    pub ideal: BigInt,
    /// Dimension of the orbit harmonics quotient.
    pub oracle: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unequal { first_degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealComparison {
    pub kind: IdealKind,
    pub n: usize,
    pub rows: Vec<DegreeComparison>,
    pub verdict: Verdict,
}

/// Compares the quotient by the explicit ideal with the orbit harmonics
/// quotient degree by degree. The explicit ideal sits inside the associated
/// graded ideal, so its quotient can only be larger; a smaller dimension is
/// reported as an invariant violation.
pub fn compare_ideal_vs_gr(kind: IdealKind, n: usize, max_deg: usize, cfg: &OracleConfig) -> Result<IdealComparison> {
    let spec = kind.locus(n)?;
    let oracle = graded_hilbert_oracle(&spec, max_deg, cfg)?;
    let gens = ideal_generators(kind, n)?;
    let ideal = ideal_hilbert_truncated(&gens, max_deg, cfg.mode)?;
    let mut rows = Vec::with_capacity(max_deg + 1);
    let mut verdict = Verdict::Equal;
    for degree in 0..=max_deg {
        let row = DegreeComparison { degree, ideal: ideal.coefficient(degree), oracle: oracle.coefficient(degree) };
        if row.ideal < row.oracle {
            return Err(Error::Invariant(format!(
                "degree {degree}: explicit ideal quotient has dimension {} below {} for {spec}",
                row.ideal, row.oracle
            )));
        }
        if row.ideal != row.oracle && verdict == Verdict::Equal {
            verdict = Verdict::Unequal { first_degree: degree };
        }
        rows.push(row);
    }
    Ok(IdealComparison { kind, n, rows, verdict })
}

/// The smallest `(n, a)` (by `n`, then `a`) with `n ≤ n_max` for which the
/// explicit fixed-point ideal is strictly smaller than the associated graded
/// ideal, or `None` if there is none in range.
pub fn search_strict_containment(n_max: usize, cfg: &OracleConfig) -> Result<Option<IdealComparison>> {
    for n in 0..=n_max {
        for a in (0..=n).filter(|a| (n - a) % 2 == 0) {
            let report = compare_ideal_vs_gr(IdealKind::FixedCount(a), n, default_max_deg(n), cfg)?;
            if report.verdict != Verdict::Equal {
                return Ok(Some(report));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        use GeneratorFamily::*;
        let m2 = ideal_generators(IdealKind::Matchings, 2).unwrap();
        assert_eq!(m2.count(RowSum), 2);
        assert_eq!(m2.count(ColumnSum), 2);
        assert_eq!(m2.count(RowProduct), 2);
        assert_eq!(m2.count(ColumnProduct), 2);
        assert_eq!(m2.count(SymmetricDifference), 1);
        let diff = &m2.generators().iter().find(|(f, _)| *f == SymmetricDifference).unwrap().1;
        assert_eq!(diff.to_string(), "x_{1,2} - x_{2,1}");

        let pm = ideal_generators(IdealKind::PerfectMatchings, 4).unwrap();
        assert_eq!(pm.count(Diagonal), 4);
        let full = ideal_generators(IdealKind::FixedCount(4), 4).unwrap();
        assert_eq!(full.count(DiagonalSum), 1);
        assert_eq!(full.count(DiagonalProduct), 0);
        let a1 = ideal_generators(IdealKind::FixedCount(1), 5).unwrap();
        assert_eq!(a1.count(DiagonalProduct), 10);
        assert!(a1.generators().iter().all(|(_, g)| g.is_homogeneous()));
    }

    #[test]
    fn parity_violations() {
        assert!(ideal_generators(IdealKind::PerfectMatchings, 3).is_err());
        assert!(ideal_generators(IdealKind::FixedCount(1), 4).is_err());
        assert!(ideal_generators(IdealKind::FixedCount(5), 4).is_err());
    }

    #[test]
    fn hilbert_examples() {
        let m4 = ideal_generators(IdealKind::Matchings, 4).unwrap();
        assert_eq!(ideal_hilbert_truncated(&m4, 4, ArithmeticMode::Exact).unwrap(), QPoly::from_i64s(&[1, 6, 3]));
        let pm4 = ideal_generators(IdealKind::PerfectMatchings, 4).unwrap();
        assert_eq!(ideal_hilbert_truncated(&pm4, 3, ArithmeticMode::Exact).unwrap(), QPoly::from_i64s(&[1, 2]));
        let trivial = IdealGeneratorSet::custom(3, Vec::new()).unwrap();
        let h = ideal_hilbert_truncated(&trivial, 1, ArithmeticMode::Exact).unwrap();
        assert_eq!(h.at_one(), BigInt::from(10));
    }

    #[test]
    fn modular_agrees_with_exact() {
        let g = ideal_generators(IdealKind::FixedCount(1), 5).unwrap();
        assert_eq!(
            ideal_hilbert_truncated(&g, 3, ArithmeticMode::Exact).unwrap(),
            ideal_hilbert_truncated(&g, 3, ArithmeticMode::Modular).unwrap()
        );
    }

    #[test]
    fn comparisons() {
        let cfg = OracleConfig::default();
        let m4 = compare_ideal_vs_gr(IdealKind::Matchings, 4, 3, &cfg).unwrap();
        assert_eq!(m4.verdict, Verdict::Equal);
        assert_eq!(m4.rows.len(), 4);
        let pm4 = compare_ideal_vs_gr(IdealKind::PerfectMatchings, 4, 3, &cfg).unwrap();
        assert_eq!(pm4.verdict, Verdict::Equal);
    }

    #[test]
    fn custom_sets_must_be_homogeneous() {
        let mut p = Polynomial::zero(2);
        p.add_term(MonomialIndex::one(2), 1).unwrap();
        p.add_term(var(2, 1, 1), 1).unwrap();
        assert!(IdealGeneratorSet::custom(2, vec![(GeneratorFamily::RowSum, p)]).is_err());
    }
}
