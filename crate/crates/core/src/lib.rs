//! Exact computations for orbit harmonics quotients of involution matrix loci.
//!
//! The crate has two independent halves:
//!
//! * closed forms: [`symfunc`] (partitions, Pieri rule, the even plethysm
//!   `s_d[s_2]`), [`rsk`] (Schensted insertion, hook lengths), and
//!   [`formulas`] (graded Frobenius images and Hilbert series of the matching
//!   locus, the perfect matching locus and the fixed-point-count loci);
//! * a brute-force [`oracle`] that evaluates monomials on the finite loci from
//!   [`loci`] and extracts graded dimensions and graded characters with exact
//!   linear algebra ([`linalg`]), decomposed with the character theory in
//!   [`repr`].
//!
//! Agreement of the two halves is the point of the workbench.

pub mod error;
pub mod formulas;
pub mod linalg;
pub mod loci;
pub mod oracle;
pub mod repr;
pub mod rsk;
pub mod symfunc;

pub use error::{Error, Result};
pub use loci::{Involution, LocusKind, LocusSpec};
pub use symfunc::{FirstRow, Partition, QPoly, SchurSeries};
