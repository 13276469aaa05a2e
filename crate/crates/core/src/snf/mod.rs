//! Smith normal form over `F[x]` for a field `F`.
//!
//! Two independent routes are provided: [`RingMatrix::snf_reduce`] performs
//! Euclidean row/column elimination and records the unimodular transforms,
//! while [`RingMatrix::snf_via_minors`] divides consecutive gcds of `k x k`
//! minors. The second is exponential in the matrix size and serves as an
//! oracle for the first.

mod minors;
mod reduce;

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Field, UniPoly, Var};

pub use minors::combinations;
pub use reduce::SnfResult;

/// Dense matrix over `F[x]`, row-major. Indices are 0-based.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix<F> {
    rows: usize,
    cols: usize,
    var: Var,
    entries: Vec<UniPoly<F>>,
}

impl<F: Field> RingMatrix<F> {
    /// Builds a matrix from row-major entries, all in the variable `var`.
    pub fn new(rows: usize, cols: usize, var: Var, entries: Vec<UniPoly<F>>) -> Result<Self> {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        if let Some(e) = entries.iter().find(|e| e.var() != var) {
            return Err(Error::VariableMismatch(var, e.var()));
        }
        Ok(RingMatrix {
            rows,
            cols,
            var,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        var: Var,
        mut f: impl FnMut(usize, usize) -> UniPoly<F>,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                debug_assert_eq!(e.var(), var);
                entries.push(e);
            }
        }
        RingMatrix {
            rows,
            cols,
            var,
            entries,
        }
    }

    pub fn identity(n: usize, var: Var) -> Self {
        Self::from_fn(n, n, var, |i, j| {
            if i == j {
                UniPoly::one(var)
            } else {
                UniPoly::zero(var)
            }
        })
    }

    pub fn zeros(rows: usize, cols: usize, var: Var) -> Self {
        Self::from_fn(rows, cols, var, |_, _| UniPoly::zero(var))
    }

    /// Diagonal matrix with the given entries, padded with zero rows or
    /// columns to `rows x cols`.
    pub fn diagonal(rows: usize, cols: usize, var: Var, diag: &[UniPoly<F>]) -> Self {
        Self::from_fn(rows, cols, var, |i, j| {
            if i == j && i < diag.len() {
                diag[i].clone()
            } else {
                UniPoly::zero(var)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &UniPoly<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: UniPoly<F>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[UniPoly<F>] {
        &self.entries
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), self.var, |a, b| {
            self.get(rows[a], cols[b]).clone()
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "incompatible matrix product");
        Self::from_fn(self.rows, rhs.cols, self.var, |i, j| {
            (0..self.cols).fold(UniPoly::zero(self.var), |acc, k| {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        })
    }

    pub fn map<G: Field>(&self, var: Var, f: impl Fn(&UniPoly<F>) -> UniPoly<G>) -> RingMatrix<G> {
        RingMatrix::from_fn(self.rows, self.cols, var, |i, j| f(self.get(i, j)))
    }

    /// True when every off-diagonal entry is zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division
    /// in the loop is exact in `F[x]`.
    pub fn det(&self) -> Result<UniPoly<F>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(UniPoly::one(self.var));
        }
        let mut m: Vec<Vec<UniPoly<F>>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = UniPoly::one(self.var);
        for p in 0..n - 1 {
            if m[p][p].is_zero() {
                let Some(r) = (p + 1..n).find(|&r| !m[r][p].is_zero()) else {
                    return Ok(UniPoly::zero(self.var));
                };
                m.swap(p, r);
                negate = !negate;
            }
            for i in p + 1..n {
                for j in p + 1..n {
                    let num = &(&m[i][j] * &m[p][p]) - &(&m[i][p] * &m[p][j]);
                    let (q, r) = num.divrem(&prev)?;
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][p] = UniPoly::zero(self.var);
            }
            prev = m[p][p].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, c: &F) {
        for j in 0..self.cols {
            let v = self.get(r, j).scale(c);
            self.set(r, j, v);
        }
    }

    /// `row[dst] += factor * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &UniPoly<F>) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, j) + &(factor * s);
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += factor * col[src]`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &UniPoly<F>) {
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(i, dst) + &(factor * s);
            self.set(i, dst, v);
        }
    }
}

impl<F: Field> fmt::Display for RingMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for RingMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[cfg(test)]
pub(crate) mod test_util {
    use super::*;
    use crate::exactalg::Rational;

    pub fn np(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(Var::N, c.iter().map(|&v| Rational::from(v)).collect())
    }

    /// Matrix over `Q[n]` from integer coefficient lists.
    pub fn nmat(rows: &[&[&[i64]]]) -> RingMatrix<Rational> {
        let r = rows.len();
        let c = rows[0].len();
        RingMatrix::from_fn(r, c, Var::N, |i, j| np(rows[i][j]))
    }
}
