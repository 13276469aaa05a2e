//! Exact Smith normal forms of specialized Jacobi-Trudi matrices.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactalg`]: big rationals, dense univariate polynomials over a field,
//!   and the rational-function field `Q(q)`.
//! - [`partitions`]: Young diagram combinatorics, diagonal hooks, SSYT counts
//!   and Littlewood-Richardson coefficients.
//! - [`jacobitrudi`]: the three specializations of the Jacobi-Trudi matrix
//!   and the submatrix-to-skew-shape map.
//! - [`snf`]: Smith normal form by Euclidean elimination with unimodular
//!   transforms, and independently by gcds of minors.
//! - [`theorems`]: closed-form diagonal predictions, claim checks and the
//!   verification sweep.

pub mod error;
pub mod exactalg;
pub mod jacobitrudi;
pub mod partitions;
pub mod snf;
pub mod theorems;

pub use error::{Error, Result};
pub use exactalg::{Field, RatFunc, Rational, UniPoly, Var};
pub use jacobitrudi::{JtMatrix, MinorShape, SpecializationKind};
pub use partitions::{Cell, DiagonalHook, Partition, SkewShape};
pub use snf::{RingMatrix, SnfResult};
pub use theorems::{PredictedDiagonal, SweepConfig, SweepReport, VerificationReport, VerifyMethod};
