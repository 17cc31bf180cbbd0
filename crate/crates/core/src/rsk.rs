//! Schensted row insertion, standard Young tableaux and hook lengths.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{domain, Result};
use crate::symfunc::Partition;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutationWord {
    images: Vec<usize>,
}

impl PermutationWord {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return domain(format!("{images:?} is not a permutation of 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(PermutationWord { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        PermutationWord { images }
    }

    pub fn identity(n: usize) -> Self {
        PermutationWord { images: (1..=n).collect() }
    }

    /// `n, n-1, ..., 1`.
    pub fn reversed(n: usize) -> Self {
        PermutationWord { images: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> PermutationWord {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        PermutationWord { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &PermutationWord) -> Result<PermutationWord> {
        if self.len() != other.len() {
            return domain(format!("cannot compose permutations of sizes {} and {}", self.len(), other.len()));
        }
        Ok(PermutationWord { images: other.images.iter().map(|&i| self.image(i)).collect() })
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| self.images[v - 1] == i + 1)
    }
}

/// A standard Young tableau: rows and columns strictly increase and the
/// entries are exactly `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = StandardTableau { rows };
        if !t.is_standard() {
            return domain(format!("{:?} is not a standard Young tableau", t.rows));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        if self.rows.iter().any(Vec::is_empty) {
            return false;
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return false;
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        for w in self.rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return false;
            }
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        self.rows.iter().flatten().all(|&v| v >= 1 && v <= n && !std::mem::replace(&mut seen[v], true))
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_sorted(self.rows.iter().map(Vec::len).collect())
    }

    /// Lengths of the columns, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.shape().conjugate().parts().to_vec()
    }
}

/// Schensted row insertion. Returns `(P, Q)`: the insertion tableau and the
/// recording tableau.
pub fn schensted(w: &PermutationWord) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in w.images().iter().enumerate() {
        let mut x = value;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            // first entry strictly greater than x
            let pos = p[row].partition_point(|&y| y < x);
            if pos == p[row].len() {
                p[row].push(x);
                q[row].push(step + 1);
                break;
            }
            x = std::mem::replace(&mut p[row][pos], x);
            row += 1;
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Length of a longest decreasing subsequence, read off as the length of
/// the first column of the insertion tableau.
pub fn lds(w: &PermutationWord) -> usize {
    schensted(w).0.rows().len()
}

/// `|SYT(λ)|` by the hook length formula.
pub fn count_syt(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj[j] - i - 1) + 1;
            hooks *= hook as u64;
        }
    }
    factorial(n) / hooks
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of odd-length columns of a tableau. For the common tableau `P` of
/// an involution this is its number of fixed points.
pub fn odd_column_count(t: &StandardTableau) -> usize {
    t.column_lengths().iter().filter(|&&c| c % 2 == 1).count()
}
