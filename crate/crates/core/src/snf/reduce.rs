use super::RingMatrix;
use crate::exactalg::{Field, UniPoly};

/// Output of [`RingMatrix::snf_reduce`]: `left * M * right` is the diagonal
/// matrix with entries `diagonal`.
#[derive(Clone, PartialEq, Eq)]
pub struct SnfResult<F> {
    /// Monic invariant factors, each dividing the next; zeros trail.
    pub diagonal: Vec<UniPoly<F>>,
    pub left: RingMatrix<F>,
    pub right: RingMatrix<F>,
    /// The constant `u` with `det M = u * prod(diagonal)` for square `M`,
    /// i.e. `1 / (det left * det right)`.
    pub units_absorbed: F,
}

impl<F: Field> std::fmt::Debug for SnfResult<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SnfResult")
            .field("diagonal", &self.diagonal)
            .field("left", &self.left)
            .field("right", &self.right)
            .field("units_absorbed", &self.units_absorbed)
            .finish()
    }
}

impl<F: Field> SnfResult<F> {
    /// `left * m * right` rebuilt as a diagonal matrix check.
    pub fn verify_transform(&self, m: &RingMatrix<F>) -> bool {
        let product = self.left.mul(m).mul(&self.right);
        product == RingMatrix::diagonal(m.rows(), m.cols(), m.var(), &self.diagonal)
    }
}

impl<F: Field> RingMatrix<F> {
    /// Smith normal form by Euclidean elimination.
    ///
    /// At each stage the pivot is a nonzero entry of least degree in the
    /// trailing block (ties broken by row, then column). Its row and column
    /// are cleared by Euclidean division; any remainder becomes the next
    /// pivot. Once the pivot is isolated, a trailing entry it does not
    /// divide has its row added to the pivot row and elimination resumes.
    /// Every step is recorded in `left` or `right`.
    pub fn snf_reduce(&self) -> SnfResult<F> {
        let (rows, cols, var) = (self.rows(), self.cols(), self.var());
        let mut a = self.clone();
        let mut left = RingMatrix::identity(rows, var);
        let mut right = RingMatrix::identity(cols, var);
        let mut det_left = F::one();
        let mut det_right = F::one();

        'stages: for s in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = min_degree_entry(&a, s) else {
                    break 'stages;
                };
                if pi != s {
                    a.swap_rows(s, pi);
                    left.swap_rows(s, pi);
                    det_left = det_left.neg();
                }
                if pj != s {
                    a.swap_cols(s, pj);
                    right.swap_cols(s, pj);
                    det_right = det_right.neg();
                }
                // Monic pivots keep the quotients free of extra denominators.
                let lc = a.get(s, s).lc().expect("pivot is nonzero").clone();
                if !lc.is_one() {
                    let inv = lc.inv().expect("nonzero leading coefficient");
                    a.scale_row(s, &inv);
                    left.scale_row(s, &inv);
                    det_left = det_left.mul(&inv);
                }
                let pivot = a.get(s, s).clone();

                let mut isolated = true;
                for i in s + 1..rows {
                    if a.get(i, s).is_zero() {
                        continue;
                    }
                    let (q, r) = a.get(i, s).divrem(&pivot).expect("pivot is nonzero");
                    let neg_q = -&q;
                    a.add_row_multiple(i, s, &neg_q);
                    left.add_row_multiple(i, s, &neg_q);
                    isolated &= r.is_zero();
                }
                for j in s + 1..cols {
                    if a.get(s, j).is_zero() {
                        continue;
                    }
                    let (q, r) = a.get(s, j).divrem(&pivot).expect("pivot is nonzero");
                    let neg_q = -&q;
                    a.add_col_multiple(j, s, &neg_q);
                    right.add_col_multiple(j, s, &neg_q);
                    isolated &= r.is_zero();
                }
                if !isolated {
                    continue;
                }

                let offending = (s + 1..rows).find(|&i| {
                    (s + 1..cols).any(|j| {
                        !a.get(i, j)
                            .is_divisible_by(&pivot)
                            .expect("pivot is nonzero")
                    })
                });
                match offending {
                    Some(i) => {
                        let one = UniPoly::one(var);
                        a.add_row_multiple(s, i, &one);
                        left.add_row_multiple(s, i, &one);
                    }
                    None => break,
                }
            }
        }

        let mut diagonal = Vec::with_capacity(rows.min(cols));
        for s in 0..rows.min(cols) {
            let d = a.get(s, s);
            if let Some(lc) = d.lc().filter(|lc| !lc.is_one()) {
                let inv = lc.inv().expect("nonzero leading coefficient");
                a.scale_row(s, &inv);
                left.scale_row(s, &inv);
                det_left = det_left.mul(&inv);
            }
            diagonal.push(a.get(s, s).clone());
        }
        debug_assert!(a.is_diagonal());

        let units_absorbed = det_left
            .mul(&det_right)
            .inv()
            .expect("elementary operations have unit determinant");
        SnfResult {
            diagonal,
            left,
            right,
            units_absorbed,
        }
    }

    /// Monic Smith diagonal from [`Self::snf_reduce`] without the transforms'
    /// bookkeeping exposed.
    pub fn smith_diagonal(&self) -> Vec<UniPoly<F>> {
        self.snf_reduce().diagonal
    }
}

fn min_degree_entry<F: Field>(a: &RingMatrix<F>, s: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in s..a.rows() {
        for j in s..a.cols() {
            if let Some(d) = a.get(i, j).degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                    if d == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}
