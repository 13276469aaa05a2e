use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Var};
use crate::error::{Error, Result};

/// Dense univariate polynomial over a field, lowest degree first.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and structural equality is value equality.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<F> {
    var: Var,
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(var: Var, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        UniPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, F::one())
    }

    pub fn constant(var: Var, c: F) -> Self {
        Self::new(var, vec![c])
    }

    /// The indeterminate itself.
    pub fn x(var: Var) -> Self {
        Self::new(var, vec![F::zero(), F::one()])
    }

    /// `x + c`.
    pub fn linear(var: Var, c: F) -> Self {
        Self::new(var, vec![c, F::one()])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Nonzero constant, i.e. a unit of the polynomial ring.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&F::from_i64(k as i64)))
            .collect();
        Self::new(self.var, coeffs)
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var, other.var));
        }
        Ok(())
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_var(d)?;
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(self.var), Self::zero(self.var)));
        };
        if da < dd {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let lc_inv = d.lc().unwrap().inv()?;
        let monic_divisor = d.lc().unwrap().is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); da - dd + 1];
        for k in (0..=da - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let qk = if monic_divisor {
                top.clone()
            } else {
                top.mul(&lc_inv)
            };
            for (i, dc) in d.coeffs.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                rem[k + i] = rem[k + i].sub(&qk.mul(dc));
            }
            quot[k] = qk;
        }
        rem.truncate(dd);
        Ok((Self::new(self.var, quot), Self::new(self.var, rem)))
    }

    /// True when `d` divides `self` exactly. The zero polynomial divides
    /// only zero.
    pub fn is_divisible_by(&self, d: &Self) -> Result<bool> {
        if d.is_zero() {
            return Ok(self.is_zero());
        }
        Ok(self.divrem(d)?.1.is_zero())
    }

    /// Quotient of an exact division; errors if there is a remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divrem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Splits `self = unit * monic`.
    pub fn make_monic(&self) -> Result<(F, Self)> {
        let lc = self.lc().ok_or(Error::ZeroPolynomial)?.clone();
        if lc.is_one() {
            return Ok((lc, self.clone()));
        }
        let inv = lc.inv()?;
        Ok((lc, self.scale(&inv)))
    }

    /// Monic form, leaving zero as zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.make_monic().expect("nonzero polynomial").1
    }

    /// Monic gcd using the field's preferred algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        F::poly_gcd(self, other)
    }

    /// Monic gcd by the plain Euclidean algorithm over the field.
    pub fn gcd_euclid(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            // Keep the running remainder monic so coefficients stay small.
            let r = a.divrem(&b)?.1.monic();
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        debug_assert_eq!(self.var, rhs.var, "variable mismatch");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = F::zero();
        let coeffs = (0..len)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    rhs.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Self::new(self.var, coeffs)
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn add(self, rhs: Self) -> UniPoly<F> {
        self.zip_with(rhs, F::add)
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn sub(self, rhs: Self) -> UniPoly<F> {
        self.zip_with(rhs, F::sub)
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn mul(self, rhs: Self) -> UniPoly<F> {
        debug_assert_eq!(self.var, rhs.var, "variable mismatch");
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(self.var, out)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn neg(self) -> UniPoly<F> {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<F: Field> $tr for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, rhs: Self) -> UniPoly<F> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<F: Field> std::iter::Product for UniPoly<F> {
    /// Panics on an empty iterator, which has no variable to carry.
    fn product<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("product of an empty polynomial iterator");
        iter.fold(first, |acc, p| &acc * &p)
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    /// Descending powers with explicit `^`, e.g. `n^3 - n` or `1/3*n^3 - 1/3*n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = c.sign_split();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                let s = mag.to_string();
                if k > 0 && s.contains(' ') {
                    write!(f, "({s})")?;
                } else {
                    f.write_str(&s)?;
                }
            }
            if k > 0 {
                if show_coeff {
                    f.write_str("*")?;
                }
                f.write_str(self.var.as_str())?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
