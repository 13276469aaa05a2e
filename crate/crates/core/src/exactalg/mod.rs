//! Exact arithmetic kernel.
//!
//! Everything here is exact: rationals are arbitrary precision, polynomials
//! are dense coefficient vectors, and the rational-function field `Q(q)` is
//! kept in gcd-reduced form so that structural equality is value equality.

mod intpoly;
mod poly;
mod ratfunc;
mod rational;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use intpoly::IntPoly;
pub use poly::UniPoly;
pub use ratfunc::RatFunc;
pub use rational::Rational;

/// Name of a polynomial indeterminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    N,
    Y,
    Q,
}

impl Var {
    pub fn as_str(self) -> &'static str {
        match self {
            Var::N => "n",
            Var::Y => "y",
            Var::Q => "q",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A commutative field with exact arithmetic.
///
/// Methods take references so that big-number values are not cloned on
/// every operation.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; fails with [`crate::Error::ZeroDivisor`] on zero.
    fn inv(&self) -> Result<Self>;
    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Splits off a sign for rendering: `(negative, magnitude)`.
    fn sign_split(&self) -> (bool, Self);

    /// Monic gcd of two polynomials, not both zero.
    ///
    /// The default is plain Euclid over the field; implementations with a
    /// cheaper route (integer-cleared PRS over `Q`) override it.
    fn poly_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> Result<UniPoly<Self>> {
        a.gcd_euclid(b)
    }
}
