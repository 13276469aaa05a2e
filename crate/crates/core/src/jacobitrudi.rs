//! Specialized Jacobi-Trudi matrices `[h_{λ_i + j - i}]`.
//!
//! Three specializations of `h_i` are supported:
//!
//! - [`SpecializationKind::NPoly`]: `h_i(1^n) = binom(n+i-1, i)` in `Q[n]`.
//! - [`SpecializationKind::QyPoly`]: `h_i(1, q, .., q^(n-1))` with `q^n`
//!   replaced by `y`, a polynomial in `y` over `Q(q)`.
//! - [`SpecializationKind::QBracket`]: `f(i) = y (y+[1]) .. (y+[i-1]) / ([1] .. [i])`
//!   where `[k] = (1 - q^k) / (1 - q)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, IntPoly, RatFunc, Rational, UniPoly, Var};
use crate::partitions::{Partition, SkewShape};
use crate::snf::RingMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecializationKind {
    /// Over `Q[n]`.
    #[serde(rename = "n")]
    NPoly,
    /// Over `Q(q)[y]`, `y = q^n`.
    #[serde(rename = "qy")]
    QyPoly,
    /// Over `Q(q)[y]`, bracket form.
    #[serde(rename = "qbracket")]
    QBracket,
}

impl SpecializationKind {
    pub const ALL: [SpecializationKind; 3] = [
        SpecializationKind::NPoly,
        SpecializationKind::QyPoly,
        SpecializationKind::QBracket,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpecializationKind::NPoly => "n",
            SpecializationKind::QyPoly => "qy",
            SpecializationKind::QBracket => "qbracket",
        }
    }
}

impl fmt::Display for SpecializationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpecializationKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "n" => Ok(SpecializationKind::NPoly),
            "qy" => Ok(SpecializationKind::QyPoly),
            "qbracket" => Ok(SpecializationKind::QBracket),
            other => Err(format!("unknown ring {other:?} (expected n, qy or qbracket)")),
        }
    }
}

/// A specialization of the complete homogeneous functions `h_i`, together
/// with the linear factor attached to a cell of content `c`.
pub trait Specialization {
    type Coeff: Field;
    const KIND: SpecializationKind;
    const VAR: Var;

    /// Image of `h_i`; `h_0 = 1` and `h_i = 0` for `i < 0`.
    fn h(i: i64) -> UniPoly<Self::Coeff>;

    /// `n + c`, `1 - q^c y` or `y + [c]`.
    fn linear_factor(content: i64) -> UniPoly<Self::Coeff>;

    fn render_factor(content: i64) -> String;
}

pub struct NPoly;
pub struct QyPoly;
pub struct QBracket;

impl Specialization for NPoly {
    type Coeff = Rational;
    const KIND: SpecializationKind = SpecializationKind::NPoly;
    const VAR: Var = Var::N;

    fn h(i: i64) -> UniPoly<Rational> {
        phi_h(i)
    }

    fn linear_factor(c: i64) -> UniPoly<Rational> {
        UniPoly::linear(Var::N, Rational::from(c))
    }

    fn render_factor(c: i64) -> String {
        match c {
            0 => "n".to_string(),
            c if c > 0 => format!("(n + {c})"),
            c => format!("(n - {})", -c),
        }
    }
}

impl Specialization for QyPoly {
    type Coeff = RatFunc;
    const KIND: SpecializationKind = SpecializationKind::QyPoly;
    const VAR: Var = Var::Y;

    fn h(i: i64) -> UniPoly<RatFunc> {
        q_h(i)
    }

    fn linear_factor(c: i64) -> UniPoly<RatFunc> {
        UniPoly::new(Var::Y, vec![RatFunc::one(), RatFunc::q_pow(c).neg()])
    }

    fn render_factor(c: i64) -> String {
        match c {
            0 => "(1 - y)".to_string(),
            1 => "(1 - q*y)".to_string(),
            c => format!("(1 - q^{c}*y)"),
        }
    }
}

impl Specialization for QBracket {
    type Coeff = RatFunc;
    const KIND: SpecializationKind = SpecializationKind::QBracket;
    const VAR: Var = Var::Y;

    fn h(i: i64) -> UniPoly<RatFunc> {
        f_bracket(i)
    }

    fn linear_factor(c: i64) -> UniPoly<RatFunc> {
        UniPoly::linear(Var::Y, bracket(c))
    }

    fn render_factor(c: i64) -> String {
        if c == 0 {
            "y".to_string()
        } else {
            format!("(y + [{c}])")
        }
    }
}

/// `h_i(1^n) = binom(n + i - 1, i) = n (n+1) .. (n+i-1) / i!`.
pub fn phi_h(i: i64) -> UniPoly<Rational> {
    if i < 0 {
        return UniPoly::zero(Var::N);
    }
    let mut p = UniPoly::one(Var::N);
    let mut factorial = BigInt::from(1);
    for j in 0..i {
        p = &p * &UniPoly::linear(Var::N, Rational::from(j));
        factorial *= j + 1;
    }
    p.scale(&Rational::new(1, factorial).unwrap())
}

/// Gaussian binomial `[m choose r]_q` as an integer polynomial.
pub fn gaussian_binomial(m: usize, r: usize) -> IntPoly {
    if r > m {
        return IntPoly::zero();
    }
    // Pascal: [m, r] = [m-1, r-1] + q^r [m-1, r]
    let mut row = vec![IntPoly::one()];
    for mm in 1..=m {
        let mut next = Vec::with_capacity(mm + 1);
        for rr in 0..=mm {
            let a = if rr > 0 { row[rr - 1].clone() } else { IntPoly::zero() };
            let b = row.get(rr).map_or_else(IntPoly::zero, |p| p.shift(rr));
            next.push(a.add(&b));
        }
        row = next;
    }
    row.swap_remove(r)
}

/// `h_i(1, q, .., q^(n-1))` with `q^n = y`:
/// `prod_{j<i} (1 - q^j y) / prod_{j=1..i} (1 - q^j)`.
///
/// The numerator is expanded by the q-binomial theorem,
/// `prod_{j<i} (1 - q^j y) = sum_m (-1)^m q^(m(m-1)/2) [i choose m]_q y^m`.
pub fn q_h(i: i64) -> UniPoly<RatFunc> {
    if i < 0 {
        return UniPoly::zero(Var::Y);
    }
    let i = i as usize;
    let den = (1..=i).fold(IntPoly::one(), |acc, j| acc.mul(&one_minus_q_pow(j)));
    let coeffs = (0..=i)
        .map(|m| {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let num = gaussian_binomial(i, m).shift(m * m.saturating_sub(1) / 2).scale(&BigInt::from(sign));
            RatFunc::new(num, den.clone()).unwrap()
        })
        .collect();
    UniPoly::new(Var::Y, coeffs)
}

fn one_minus_q_pow(j: usize) -> IntPoly {
    IntPoly::one().sub(&IntPoly::monomial(1, j))
}

/// The q-integer `[k] = (1 - q^k) / (1 - q)` for any integer `k`.
///
/// For `k > 0` this is `1 + q + .. + q^(k-1)`; for `k < 0` it is
/// `-(q^-1 + .. + q^k)`.
pub fn bracket(k: i64) -> RatFunc {
    let m = k.unsigned_abs() as usize;
    let ones = IntPoly::new(vec![BigInt::from(1); m]);
    if k >= 0 {
        RatFunc::from_poly(ones)
    } else {
        RatFunc::new(ones.neg(), IntPoly::monomial(1, m)).unwrap()
    }
}

/// `f(k) = y (y + [1]) .. (y + [k-1]) / ([1] [2] .. [k])`, `f(0) = 1`,
/// `f(k) = 0` for `k < 0`.
pub fn f_bracket(k: i64) -> UniPoly<RatFunc> {
    if k < 0 {
        return UniPoly::zero(Var::Y);
    }
    let mut num = UniPoly::one(Var::Y);
    let mut den = RatFunc::one();
    for j in 0..k {
        num = &num * &UniPoly::linear(Var::Y, bracket(j));
        den = den.mul(&bracket(j + 1));
    }
    num.scale(&den.inv().unwrap())
}

/// Generic construction of the `t x t` specialized Jacobi-Trudi matrix.
pub fn build<S: Specialization>(shape: &Partition, t: usize) -> Result<RingMatrix<S::Coeff>> {
    if t < shape.len() {
        return Err(Error::TBelowLength { t, len: shape.len() });
    }
    Ok(RingMatrix::from_fn(t, t, S::VAR, |i, j| {
        S::h(shape.part(i + 1) as i64 + j as i64 - i as i64)
    }))
}

/// A built matrix; the entry ring depends on the specialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JtEntries {
    OverQ(RingMatrix<Rational>),
    OverQq(RingMatrix<RatFunc>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JtMatrix {
    pub shape: Partition,
    pub t: usize,
    pub kind: SpecializationKind,
    pub entries: JtEntries,
}

/// Builds `[h_{λ_i + j - i}]_{i,j=1..t}` under `kind`.
pub fn build_jt(shape: &Partition, t: usize, kind: SpecializationKind) -> Result<JtMatrix> {
    let entries = match kind {
        SpecializationKind::NPoly => JtEntries::OverQ(build::<NPoly>(shape, t)?),
        SpecializationKind::QyPoly => JtEntries::OverQq(build::<QyPoly>(shape, t)?),
        SpecializationKind::QBracket => JtEntries::OverQq(build::<QBracket>(shape, t)?),
    };
    Ok(JtMatrix {
        shape: shape.clone(),
        t,
        kind,
        entries,
    })
}

/// What a square submatrix of a Jacobi-Trudi matrix is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorShape {
    /// The submatrix is the Jacobi-Trudi matrix of this skew shape.
    Skew(SkewShape),
    /// The minor vanishes identically.
    Zero,
}

/// Identifies the rows `rows` and columns `cols` (1-based, strictly
/// increasing, equal length) of the `t x t` matrix for `shape` with a skew
/// Jacobi-Trudi matrix `[h_{ρ_a - σ_b - a + b}]`.
///
/// With `C = j_k - k` the shapes are `ρ_a = λ_{i_a} - i_a + a + C` and
/// `σ_b = C - j_b + b`, so `σ_k = 0`. Both sequences are automatically
/// weakly decreasing; if `ρ_a < σ_a` for some `a`, a zero block larger than
/// `k` forces the minor to vanish.
pub fn submatrix_to_skew(
    shape: &Partition,
    t: usize,
    rows: &[usize],
    cols: &[usize],
) -> Result<MinorShape> {
    if t < shape.len() {
        return Err(Error::TBelowLength { t, len: shape.len() });
    }
    validate_indices(rows, t, "rows")?;
    validate_indices(cols, t, "cols")?;
    if rows.len() != cols.len() {
        return Err(Error::MalformedIndexSet(format!(
            "{} rows but {} columns",
            rows.len(),
            cols.len()
        )));
    }
    let k = rows.len() as i64;
    let c = cols[cols.len() - 1] as i64 - k;
    let rho: Vec<i64> = rows
        .iter()
        .enumerate()
        .map(|(a, &i)| shape.part(i) as i64 - i as i64 + (a as i64 + 1) + c)
        .collect();
    let sigma: Vec<i64> = cols
        .iter()
        .enumerate()
        .map(|(b, &j)| c - j as i64 + (b as i64 + 1))
        .collect();
    let result = if rho.iter().zip(&sigma).any(|(r, s)| r < s) {
        MinorShape::Zero
    } else {
        let outer = Partition::new(rho.iter().map(|&r| r as usize).collect())?;
        let inner = Partition::new(sigma.iter().map(|&s| s as usize).collect())?;
        MinorShape::Skew(SkewShape::new(outer, inner)?)
    };
    #[cfg(debug_assertions)]
    if result == MinorShape::Zero {
        let zero_based = |v: &[usize]| v.iter().map(|x| x - 1).collect::<Vec<_>>();
        let m = build::<NPoly>(shape, t)?.submatrix(&zero_based(rows), &zero_based(cols));
        debug_assert!(m.det()?.is_zero(), "zero marker on a nonvanishing minor");
    }
    Ok(result)
}

fn validate_indices(idx: &[usize], t: usize, what: &str) -> Result<()> {
    if idx.is_empty() {
        return Err(Error::MalformedIndexSet(format!("{what}: empty index set")));
    }
    if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > t) {
        return Err(Error::IndexOutOfRange { index: bad, max: t });
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedIndexSet(format!(
            "{what}: {idx:?} is not strictly increasing"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::ssyt_count;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn np(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(Var::N, c.iter().map(|&v| Rational::from(v)).collect())
    }

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_int_coeffs(c)
    }

    #[test]
    fn phi_h_examples() {
        assert_eq!(phi_h(0), np(&[1]));
        assert!(phi_h(-2).is_zero());
        // binom(n+2, 3) = (n^3 + 3n^2 + 2n) / 6
        assert_eq!(phi_h(3), np(&[0, 2, 3, 1]).scale(&Rational::new(1, 6).unwrap()));
        let at_two = phi_h(3).eval(&Rational::from(2));
        assert_eq!(at_two, Rational::from(4));
        assert_eq!(
            ssyt_count(&SkewShape::straight(p(&[3])), 2),
            num_bigint::BigUint::from(4u32)
        );
        for i in 0..8 {
            assert!(phi_h(i).eval(&Rational::one()).is_one());
            assert_eq!(phi_h(i).degree(), Some(i as usize));
        }
    }

    #[test]
    fn q_h_examples() {
        assert_eq!(q_h(0), UniPoly::one(Var::Y));
        assert!(q_h(-1).is_zero());
        // (1 - y) / (1 - q)
        let inv = rf(&[1, -1]).inv().unwrap();
        assert_eq!(q_h(1), UniPoly::new(Var::Y, vec![inv.clone(), inv.neg()]));
        for i in 1..6 {
            assert!(q_h(i).eval(&RatFunc::one()).is_zero());
            assert_eq!(q_h(i).degree(), Some(i as usize));
        }
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(3, 0), IntPoly::one());
        assert!(gaussian_binomial(2, 3).is_zero());
    }

    #[test]
    fn bracket_examples() {
        // [-3] = -q^-1 - q^-2 - q^-3
        let expected = RatFunc::q_pow(-1)
            .add(&RatFunc::q_pow(-2))
            .add(&RatFunc::q_pow(-3))
            .neg();
        assert_eq!(bracket(-3), expected);
        assert!(bracket(0).is_zero());
        assert_eq!(bracket(2), rf(&[1, 1]));
        for k in -5..=6 {
            let by_division = RatFunc::one()
                .sub(&RatFunc::q_pow(k))
                .div(&rf(&[1, -1]))
                .unwrap();
            assert_eq!(bracket(k), by_division, "k = {k}");
        }
    }

    #[test]
    fn f_bracket_examples() {
        assert_eq!(f_bracket(0), UniPoly::one(Var::Y));
        assert!(f_bracket(-1).is_zero());
        assert_eq!(f_bracket(1), UniPoly::x(Var::Y));
        // f(2) = y (y + 1) / (1 + q)
        let inv = rf(&[1, 1]).inv().unwrap();
        assert_eq!(
            f_bracket(2),
            UniPoly::new(Var::Y, vec![RatFunc::zero(), inv.clone(), inv])
        );
    }

    /// Substituting `y <- 1 / ((1-q) y + 1)` into `1 - q^k y`, cleared of
    /// the common denominator `(1-q) y + 1`, gives `(1-q)(y + [k])`.
    #[test]
    fn bracket_substitution_identity() {
        let one_minus_q = rf(&[1, -1]);
        let den = UniPoly::new(Var::Y, vec![RatFunc::one(), one_minus_q.clone()]);
        for k in -3..=5 {
            let lhs = &den - &UniPoly::constant(Var::Y, RatFunc::q_pow(k));
            let rhs = UniPoly::linear(Var::Y, bracket(k)).scale(&one_minus_q);
            assert_eq!(lhs, rhs, "k = {k}");
            // and pointwise, with genuine division, at a few y in Q(q)
            for y0 in [RatFunc::from_i64(2), rf(&[0, 1]), RatFunc::q_pow(-2)] {
                let d = den.eval(&y0);
                let substituted = RatFunc::one().sub(&RatFunc::q_pow(k).mul(&d.inv().unwrap()));
                let expected = one_minus_q
                    .mul(&y0.add(&bracket(k)))
                    .div(&d)
                    .unwrap();
                assert_eq!(substituted, expected);
            }
        }
    }

    /// `q_h(i)` at `y = 1/((1-q) y0 + 1)` equals `f(i)(y0) / ((1-q) y0 + 1)^i`.
    #[test]
    fn q_h_and_f_bracket_are_related_by_substitution() {
        let one_minus_q = rf(&[1, -1]);
        for y0 in [RatFunc::from_i64(3), rf(&[1, 1]), RatFunc::q_pow(-1)] {
            let d = one_minus_q.mul(&y0).add(&RatFunc::one());
            let y = d.inv().unwrap();
            let mut d_pow = RatFunc::one();
            for i in 0..6 {
                assert_eq!(q_h(i).eval(&y), f_bracket(i).eval(&y0).div(&d_pow).unwrap());
                d_pow = d_pow.mul(&d);
            }
        }
    }

    #[test]
    fn build_examples() {
        let m = build::<NPoly>(&p(&[2, 1]), 2).unwrap();
        assert_eq!(m.get(0, 0), &phi_h(2));
        assert_eq!(m.get(0, 1), &phi_h(3));
        assert_eq!(m.get(1, 0), &np(&[1]));
        assert_eq!(m.get(1, 1), &np(&[0, 1]));

        for kind in SpecializationKind::ALL {
            let jt = build_jt(&Partition::empty(), 2, kind).unwrap();
            match jt.entries {
                JtEntries::OverQ(m) => assert!(m.det().unwrap().is_one()),
                JtEntries::OverQq(m) => {
                    assert!(m.det().unwrap().is_one());
                    assert!(m.get(1, 0).is_zero() && m.get(0, 0).is_one());
                }
            }
        }
        let m = build::<QBracket>(&p(&[1]), 1).unwrap();
        assert_eq!(m.get(0, 0), &UniPoly::x(Var::Y));
        assert_eq!(
            build_jt(&p(&[2, 1, 1]), 2, SpecializationKind::NPoly),
            Err(Error::TBelowLength { t: 2, len: 3 })
        );
        assert_eq!(Error::TBelowLength { t: 2, len: 3 }.to_string(), "t below length: t = 2, length = 3");
    }

    #[test]
    fn submatrix_to_skew_examples() {
        let l = p(&[7, 6, 6, 5, 3]);
        assert_eq!(
            submatrix_to_skew(&l, 5, &[3, 4, 5], &[1, 3, 5]).unwrap(),
            MinorShape::Skew("6,5,3/2,1".parse().unwrap())
        );
        let all: Vec<usize> = (1..=5).collect();
        assert_eq!(
            submatrix_to_skew(&l, 5, &all, &all).unwrap(),
            MinorShape::Skew(SkewShape::straight(l.clone()))
        );
        let l = p(&[7, 5, 5, 2]);
        assert_eq!(
            submatrix_to_skew(&l, 4, &[2, 3, 4], &[1, 2, 3]).unwrap(),
            MinorShape::Skew(SkewShape::straight(l.hook_union(4, 3).unwrap()))
        );
        // Row 4 of (7,5,5,2) is (0, 1, h1, h2): rows {4}, cols {1} is zero.
        assert_eq!(submatrix_to_skew(&l, 4, &[4], &[1]).unwrap(), MinorShape::Zero);
        assert_eq!(submatrix_to_skew(&l, 4, &[4], &[2]).unwrap(), MinorShape::Skew("-".parse().unwrap()));
    }

    #[test]
    fn submatrix_to_skew_rejects_bad_indices() {
        let l = p(&[2, 1]);
        assert!(matches!(submatrix_to_skew(&l, 2, &[2, 1], &[1, 2]), Err(Error::MalformedIndexSet(_))));
        assert!(matches!(submatrix_to_skew(&l, 2, &[1], &[1, 2]), Err(Error::MalformedIndexSet(_))));
        assert!(matches!(submatrix_to_skew(&l, 2, &[], &[]), Err(Error::MalformedIndexSet(_))));
        assert!(matches!(
            submatrix_to_skew(&l, 2, &[3], &[1]),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        ));
    }
}
