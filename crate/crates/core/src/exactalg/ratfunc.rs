use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{Field, IntPoly};
use crate::error::{Error, Result};

/// Element of the rational-function field `Q(q)`.
///
/// Stored as `num / den` with integer-coefficient polynomials in `q` that
/// share no common factor (integer content included) and with `den` having
/// a positive leading coefficient. Zero is `0 / 1`. Negative powers of `q`
/// are ordinary quotients, `q^-2 = 1 / q^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if den.lc().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        RatFunc {
            num,
            den: IntPoly::one(),
        }
    }

    /// Polynomial in `q` from integer coefficients, lowest degree first.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_poly(IntPoly::from_i64s(coeffs))
    }

    pub fn from_rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        Self::new(IntPoly::constant(numer), IntPoly::constant(denom))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = IntPoly::monomial(1, k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value at an integer point `q = x`, or `None` where the denominator
    /// vanishes.
    pub fn eval_int(&self, x: i64) -> Option<(BigInt, BigInt)> {
        let x = BigInt::from(x);
        let d = self.den.eval(&x);
        (d != BigInt::from(0)).then(|| (self.num.eval(&x), d))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&self.num.render("q"))
        } else {
            write!(f, "({})/({})", self.num.render("q"), self.den.render("q"))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    fn from_i64(v: i64) -> Self {
        Self::from_poly(IntPoly::constant(v))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        // Cross-cancel before multiplying; both factors are already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = rhs.den.div_exact(&g1).unwrap();
        let c = rhs.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        let (mut num, mut den) = (a.mul(&c), b.mul(&d));
        if den.lc().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lc().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    fn sign_split(&self) -> (bool, Self) {
        let negative = self.num.lc().is_some_and(Signed::is_negative);
        if negative {
            (true, self.neg())
        } else {
            (false, self.clone())
        }
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        RatFunc::from_i64(v)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_int_coeffs(c)
    }

    #[test]
    fn quotient_simplifies_to_polynomial() {
        // (1 - q^2) / (1 - q) = 1 + q, checked against IntPoly division
        let r = poly(&[1, 0, -1]).div(&poly(&[1, -1])).unwrap();
        assert_eq!(r, poly(&[1, 1]));
        assert_eq!(
            IntPoly::from_i64s(&[1, 0, -1]).div_exact(&IntPoly::from_i64s(&[1, -1])),
            Some(IntPoly::from_i64s(&[1, 1]))
        );
    }

    #[test]
    fn identities() {
        let x = poly(&[2, 0, 5]).div(&poly(&[3, 1])).unwrap();
        assert_eq!(x.add(&RatFunc::zero()), x);
        assert!(RatFunc::q_pow(-1).mul(&RatFunc::q_pow(1)).is_one());
        assert_eq!(x.div(&RatFunc::zero()), Err(Error::ZeroDivisor));
        assert_eq!(RatFunc::new(poly(&[1]).num, IntPoly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn canonical_sign_and_content() {
        // (2 - 2q) / (4q - 4) = -1/2
        let r = RatFunc::new(IntPoly::from_i64s(&[2, -2]), IntPoly::from_i64s(&[-4, 4])).unwrap();
        assert_eq!(r, RatFunc::from_rational(-1, 2).unwrap());
        assert_eq!(r.to_string(), "(-1)/(2)");
        let inv_q = RatFunc::q_pow(-3);
        assert_eq!(inv_q.to_string(), "(1)/(q^3)");
    }

    #[test]
    fn same_value_different_routes() {
        // 1/(1-q) - q/(1-q) = 1 and (1/q + 1) * q = 1 + q
        let a = poly(&[1]).div(&poly(&[1, -1])).unwrap();
        let b = poly(&[0, 1]).div(&poly(&[1, -1])).unwrap();
        assert!(a.sub(&b).is_one());
        let c = RatFunc::q_pow(-1).add(&RatFunc::one()).mul(&RatFunc::q_pow(1));
        assert_eq!(c, poly(&[1, 1]));
    }
}
