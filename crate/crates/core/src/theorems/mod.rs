//! Closed-form Smith diagonals and their verification.
//!
//! For a partition `λ` and `t >= ℓ(λ)`, the `i`-th invariant factor of the
//! specialized Jacobi-Trudi matrix is the product, over the cells `u` of the
//! diagonal hook `D_{t-i+1}`, of a linear factor in the content `c(u)`:
//! `n + c(u)`, `1 - q^c(u) y` or `y + [c(u)]` depending on the
//! specialization. Everything is compared in monic form, so unit factors
//! (hook-length products, powers of `q`) never need closed forms.

mod claims;
mod predict;
mod sweep;
mod verify;

pub use claims::{claim_c1_check, claim_c2_check, hook_content_check, is_squarefree, C2Sampling};
pub use predict::{predict, PredictedDiagonal};
pub use sweep::{sweep, CaseReport, SweepConfig, SweepReport};
pub use verify::{verify, verify_with, VerificationReport, VerifyMethod};
