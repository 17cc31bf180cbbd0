//! The involution loci `M_n`, `PM_n`, `M_{n,a}` and their matching
//! monomials.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::rsk::{factorial, PermutationWord};

/// An involution of `1..=n`, stored as its sorted 2-cycles `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Involution {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut sorted = Vec::new();
        for (a, b) in pairs {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == 0 || j > n || i == j {
                return domain(format!("({a},{b}) is not a transposition of 1..={n}"));
            }
            if seen[i] || seen[j] {
                return domain(format!("pairs overlap at ({a},{b})"));
            }
            seen[i] = true;
            seen[j] = true;
            sorted.push((i, j));
        }
        sorted.sort_unstable();
        Ok(Involution { n, pairs: sorted })
    }

    pub fn identity(n: usize) -> Self {
        Involution { n, pairs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs.len()
    }

    pub fn num_fixed(&self) -> usize {
        self.n - 2 * self.pairs.len()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        let word = self.to_word();
        (1..=self.n).filter(|&i| word.image(i) == i).collect()
    }

    pub fn to_word(&self) -> PermutationWord {
        let mut images: Vec<usize> = (1..=self.n).collect();
        for &(i, j) in &self.pairs {
            images[i - 1] = j;
            images[j - 1] = i;
        }
        PermutationWord::from_images_unchecked(images)
    }

    pub fn from_word(w: &PermutationWord) -> Result<Self> {
        if !w.is_involution() {
            return domain(format!("{:?} is not an involution", w.images()));
        }
        let pairs = (1..=w.len()).filter(|&i| i < w.image(i)).map(|i| (i, w.image(i)));
        Involution::new(w.len(), pairs)
    }

    /// `x_{i,j}` for every 2-cycle `(i, j)`, `i < j`.
    pub fn matching_monomial(&self) -> MatchingMonomial {
        MatchingMonomial { variables: self.pairs.clone() }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "id");
        }
        for (i, j) in &self.pairs {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

/// A squarefree product of upper-triangular variables with disjoint indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingMonomial {
    variables: Vec<(usize, usize)>,
}

impl MatchingMonomial {
    pub fn variables(&self) -> &[(usize, usize)] {
        &self.variables
    }

    pub fn degree(&self) -> usize {
        self.variables.len()
    }
}

impl fmt::Display for MatchingMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.variables.is_empty() {
            return write!(f, "1");
        }
        let labels: Vec<String> = self.variables.iter().map(|(i, j)| format!("x_{{{i},{j}}}")).collect();
        write!(f, "{}", labels.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocusKind {
    /// `M_n`: all involutions.
    AllInvolutions,
    /// `PM_n`: fixed-point-free involutions.
    PerfectMatchings,
    /// `M_{n,a}`: involutions with exactly `a` fixed points.
    FixedCount(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocusSpec {
    pub kind: LocusKind,
    pub n: usize,
}

impl LocusSpec {
    pub fn new(kind: LocusKind, n: usize) -> Result<Self> {
        let spec = LocusSpec { kind, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn all(n: usize) -> Self {
        LocusSpec { kind: LocusKind::AllInvolutions, n }
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            LocusKind::AllInvolutions => Ok(()),
            LocusKind::PerfectMatchings if self.n % 2 == 1 => {
                domain(format!("perfect matchings need even n, got {}", self.n))
            }
            LocusKind::PerfectMatchings => Ok(()),
            LocusKind::FixedCount(a) if a > self.n || (self.n - a) % 2 == 1 => {
                domain(format!("fixed-point count {a} is incompatible with n = {}", self.n))
            }
            LocusKind::FixedCount(_) => Ok(()),
        }
    }

    /// The admissible fixed-point counts of points in the locus.
    pub fn fixed_counts(&self) -> Vec<usize> {
        match self.kind {
            LocusKind::AllInvolutions => (0..=self.n).filter(|a| (self.n - a) % 2 == 0).collect(),
            LocusKind::PerfectMatchings => vec![0],
            LocusKind::FixedCount(a) => vec![a],
        }
    }

    pub fn contains(&self, w: &Involution) -> bool {
        w.n() == self.n && self.fixed_counts().contains(&w.num_fixed())
    }
}

impl fmt::Display for LocusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LocusKind::AllInvolutions => write!(f, "M_{}", self.n),
            LocusKind::PerfectMatchings => write!(f, "PM_{}", self.n),
            LocusKind::FixedCount(a) => write!(f, "M_{{{},{a}}}", self.n),
        }
    }
}

/// Every involution in the locus, once. The smallest unmatched element is
/// either left fixed or matched to each larger partner in ascending order.
pub fn enumerate(spec: &LocusSpec) -> Result<Vec<Involution>> {
    spec.validate()?;
    let (min_fixed, max_fixed) = match spec.kind {
        LocusKind::AllInvolutions => (0, spec.n),
        LocusKind::PerfectMatchings => (0, 0),
        LocusKind::FixedCount(a) => (a, a),
    };

    struct Walk {
        n: usize,
        min_fixed: usize,
        max_fixed: usize,
        used: Vec<bool>,
        pairs: Vec<(usize, usize)>,
        out: Vec<Involution>,
    }

    impl Walk {
        fn go(&mut self, fixed: usize) {
            let Some(i) = (1..=self.n).find(|&i| !self.used[i]) else {
                if fixed >= self.min_fixed {
                    let mut pairs = self.pairs.clone();
                    pairs.sort_unstable();
                    self.out.push(Involution { n: self.n, pairs });
                }
                return;
            };
            self.used[i] = true;
            if fixed < self.max_fixed {
                self.go(fixed + 1);
            }
            for j in i + 1..=self.n {
                if !self.used[j] {
                    self.used[j] = true;
                    self.pairs.push((i, j));
                    self.go(fixed);
                    self.pairs.pop();
                    self.used[j] = false;
                }
            }
            self.used[i] = false;
        }
    }

    let mut walk = Walk {
        n: spec.n,
        min_fixed,
        max_fixed,
        used: vec![false; spec.n + 1],
        pairs: Vec::new(),
        out: Vec::new(),
    };
    walk.go(0);
    Ok(walk.out)
}

/// `|M_{n,a}| = n! / (a! · k! · 2^k)` with `k = (n-a)/2`.
fn fixed_count_size(n: usize, a: usize) -> BigUint {
    let k = (n - a) / 2;
    factorial(n) / (factorial(a) * factorial(k) * (BigUint::one() << k))
}

/// Size of the locus, without enumerating it.
pub fn locus_size(spec: &LocusSpec) -> Result<BigUint> {
    spec.validate()?;
    Ok(spec.fixed_counts().into_iter().fold(BigUint::zero(), |acc, a| acc + fixed_count_size(spec.n, a)))
}

/// The conjugation action `v · w = v w v^{-1}`.
pub fn conjugate_involution(v: &PermutationWord, w: &Involution) -> Result<Involution> {
    if v.len() != w.n() {
        return domain(format!("permutation of size {} cannot act on an involution of size {}", v.len(), w.n()));
    }
    Involution::new(w.n(), w.pairs().iter().map(|&(i, j)| (v.image(i), v.image(j))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(&LocusSpec::all(4)).unwrap().len(), 10);
        let pm4 = enumerate(&LocusSpec::new(LocusKind::PerfectMatchings, 4).unwrap()).unwrap();
        let expected: Vec<Involution> = [[(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]]
            .iter()
            .map(|p| Involution::new(4, p.iter().copied()).unwrap())
            .collect();
        assert_eq!(pm4, expected);
        let id = enumerate(&LocusSpec::new(LocusKind::FixedCount(5), 5).unwrap()).unwrap();
        assert_eq!(id, vec![Involution::identity(5)]);
    }

    #[test]
    fn invalid_specs() {
        assert!(LocusSpec::new(LocusKind::PerfectMatchings, 5).is_err());
        assert!(LocusSpec::new(LocusKind::FixedCount(1), 4).is_err());
        assert!(LocusSpec::new(LocusKind::FixedCount(6), 4).is_err());
        let bad = LocusSpec { kind: LocusKind::FixedCount(3), n: 4 };
        assert!(enumerate(&bad).is_err());
        assert!(locus_size(&bad).is_err());
    }

    #[test]
    fn matching_monomial_examples() {
        assert_eq!(Involution::identity(4).matching_monomial().degree(), 0);
        assert_eq!(Involution::identity(4).matching_monomial().to_string(), "1");
        let w = Involution::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(w.matching_monomial().variables(), &[(1, 2), (3, 4)]);
        let w = Involution::new(4, [(2, 3), (4, 1)]).unwrap();
        assert_eq!(w.matching_monomial().variables(), &[(1, 4), (2, 3)]);
        assert_eq!(w.matching_monomial().to_string(), "x_{1,4} x_{2,3}");
    }

    #[test]
    fn conjugation_examples() {
        let w = Involution::new(3, [(1, 3)]).unwrap();
        assert_eq!(conjugate_involution(&PermutationWord::identity(3), &w).unwrap(), w);
        let swap = PermutationWord::new(vec![2, 1, 3]).unwrap();
        assert_eq!(conjugate_involution(&swap, &w).unwrap(), Involution::new(3, [(2, 3)]).unwrap());
        assert_eq!(conjugate_involution(&swap, &Involution::identity(3)).unwrap(), Involution::identity(3));
        assert!(conjugate_involution(&swap, &Involution::identity(4)).is_err());
    }

    #[test]
    fn size_examples() {
        assert_eq!(locus_size(&LocusSpec::all(6)).unwrap(), BigUint::from(76u32));
        let pm6 = LocusSpec::new(LocusKind::PerfectMatchings, 6).unwrap();
        assert_eq!(locus_size(&pm6).unwrap(), BigUint::from(15u32));
        let m42 = LocusSpec::new(LocusKind::FixedCount(2), 4).unwrap();
        assert_eq!(locus_size(&m42).unwrap(), BigUint::from(6u32));
        assert_eq!(locus_size(&LocusSpec::all(0)).unwrap(), BigUint::one());
    }

    #[test]
    fn word_round_trip() {
        let w = Involution::new(5, [(1, 4), (2, 5)]).unwrap();
        assert_eq!(w.to_word().images(), &[4, 5, 3, 1, 2]);
        assert_eq!(Involution::from_word(&w.to_word()).unwrap(), w);
        assert_eq!(w.fixed_points(), vec![3]);
        assert!(Involution::from_word(&PermutationWord::new(vec![2, 3, 1]).unwrap()).is_err());
    }
}
