//! Checks of the intermediate statements behind the closed form: the
//! hook-content determinant, and the two claims about the corner minor
//! `M_k` (last `k` rows, first `k` columns) that identify the gcd of the
//! `k x k` minors.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::predict::predict;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Rational, UniPoly, Var};
use crate::jacobitrudi::{build, NPoly};
use crate::partitions::Partition;
use crate::snf::{combinations, RingMatrix};

/// Divides `det φ_n JT_λ` by `prod_{u ∈ λ} (n + c(u))`.
///
/// Returns the quotient's constant term (which should be `1 / H_λ`) and
/// whether the division was exact with a positive constant quotient.
pub fn hook_content_check(shape: &Partition, t: usize) -> Result<(Rational, bool)> {
    let det = build::<NPoly>(shape, t)?.det()?;
    let product = shape
        .contents()
        .into_iter()
        .fold(UniPoly::one(Var::N), |acc, c| {
            &acc * &UniPoly::linear(Var::N, Rational::from(c))
        });
    let (quot, rem) = det.divrem(&product)?;
    let constant = quot.coeff(0);
    let ok = rem.is_zero() && quot.degree() == Some(0) && constant.is_positive();
    Ok((constant, ok))
}

fn corner(m: &RingMatrix<Rational>, t: usize, k: usize) -> RingMatrix<Rational> {
    let rows: Vec<usize> = (t - k..t).collect();
    let cols: Vec<usize> = (0..k).collect();
    m.submatrix(&rows, &cols)
}

fn check_k(shape: &Partition, t: usize, k: usize) -> Result<()> {
    if t < shape.len() {
        return Err(Error::TBelowLength { t, len: shape.len() });
    }
    if k == 0 || k > t {
        return Err(Error::IndexOutOfRange { index: k, max: t });
    }
    Ok(())
}

/// Checks the corner-minor claim for one `k`.
///
/// If `det M_k = 0`, each of the last `k` rows must carry its `h_0 = 1`
/// (row `i` has it in column `i - λ_i`), and the submatrix on those columns
/// must have determinant exactly 1. Otherwise `det M_k` must equal, up to a
/// unit, the product of the predicted factors over `D_t, .., D_{t-k+1}`.
///
/// For `t > ℓ(λ)` the zero branch can fail even though the Smith form is
/// as predicted: with `λ = (2,2)`, `t = 3`, `k = 2` the corner minor
/// vanishes, row 2 has no entry equal to 1, and the gcd of the `2 x 2`
/// minors is `n`. This returns `false` in such cases.
pub fn claim_c1_check(shape: &Partition, t: usize, k: usize) -> Result<bool> {
    check_k(shape, t, k)?;
    let m = build::<NPoly>(shape, t)?;
    let det_mk = corner(&m, t, k).det()?;
    if det_mk.is_zero() {
        let mut cols = Vec::with_capacity(k);
        for i in t - k + 1..=t {
            let part = shape.part(i);
            if part >= i {
                return Ok(false);
            }
            cols.push(i - part - 1);
        }
        let rows: Vec<usize> = (t - k..t).collect();
        return Ok(m.submatrix(&rows, &cols).det()?.is_one());
    }
    let pred = predict(shape, t, crate::SpecializationKind::NPoly)?.entries::<NPoly>();
    let expected = pred[..k]
        .iter()
        .fold(UniPoly::one(Var::N), |acc, p| &acc * &p.monic());
    Ok(det_mk.monic() == expected)
}

/// How many `k x k` minors [`claim_c2_check`] tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C2Sampling {
    Exhaustive,
    /// `count` distinct (row set, column set) pairs drawn with a seeded RNG.
    Random { count: usize, seed: u64 },
}

/// Checks that every `k x k` minor (or a sample of them) is divisible by
/// `det M_k`. Vacuously true when `det M_k = 0`.
pub fn claim_c2_check(shape: &Partition, t: usize, k: usize, sampling: C2Sampling) -> Result<bool> {
    check_k(shape, t, k)?;
    let m = build::<NPoly>(shape, t)?;
    let det_mk = corner(&m, t, k).det()?;
    if det_mk.is_zero() {
        return Ok(true);
    }
    let subsets = combinations(t, k);
    let total = subsets.len() * subsets.len();
    let pairs: Vec<usize> = match sampling {
        C2Sampling::Random { count, seed } if count < total => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            sample(&mut rng, total, count).into_vec()
        }
        _ => (0..total).collect(),
    };
    for idx in pairs {
        let (r, c) = (idx / subsets.len(), idx % subsets.len());
        let minor = m.submatrix(&subsets[r], &subsets[c]).det()?;
        if !minor.is_divisible_by(&det_mk)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `gcd(p, p') = 1`; constants count as squarefree.
pub fn is_squarefree<F: Field>(p: &UniPoly<F>) -> Result<bool> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(true);
    }
    Ok(p.gcd(&p.derivative())?.is_one())
}
