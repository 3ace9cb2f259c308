//! Exact computations with A∞ and L∞ algebras on finite-dimensional
//! Z₂-graded spaces.
//!
//! Structures are stored as finitely supported families of multilinear maps
//! and handled through the coderivations they generate on the tensor,
//! symmetric and exterior coalgebras. All arithmetic is exact (rationals or a
//! prime field), so every identity is checked as a strict equality.

pub mod cli;
pub mod coalgebra;
pub mod cochain;
pub mod coderiv;
pub mod error;
pub mod graded;
pub mod homology;
pub mod inner;
pub mod linalg;
pub mod oracle;
pub mod perm;
pub mod reversion;
pub mod scalar;
pub mod structures;

pub use cochain::{Cochain, Family, ScalarCochain};
pub use coderiv::{CoderivationGenerator, Convention, Restriction};
pub use error::{Error, Result};
pub use homology::{CohomologyReport, Window};
pub use graded::{Flavor, GradedSpace, GradingForm, Parity, Vector, Word, WordSum};
pub use inner::InnerProduct;
pub use perm::Permutation;
pub use scalar::{Field, Scalar};
pub use structures::{Deformation, InfinityStructure, Kind};
