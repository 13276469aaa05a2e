use super::RingMatrix;
use crate::error::{Error, Result};
use crate::exactalg::{Field, UniPoly};

/// All `k`-subsets of `0..n`, each sorted, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl<F: Field> RingMatrix<F> {
    /// Monic gcd of all `k x k` minors, or zero when they all vanish.
    ///
    /// Row and column subsets are visited in lexicographic order and the
    /// fold stops as soon as the running gcd is 1.
    pub fn gcd_of_k_minors(&self, k: usize) -> Result<UniPoly<F>> {
        let max = self.rows().min(self.cols());
        if k == 0 || k > max {
            return Err(Error::IndexOutOfRange { index: k, max });
        }
        let row_sets = combinations(self.rows(), k);
        let col_sets = combinations(self.cols(), k);
        let mut g = UniPoly::zero(self.var());
        for rows in &row_sets {
            for cols in &col_sets {
                let m = self.submatrix(rows, cols).det()?;
                if m.is_zero() {
                    continue;
                }
                g = if g.is_zero() { m.monic() } else { g.gcd(&m)? };
                if g.is_one() {
                    return Ok(g);
                }
            }
        }
        Ok(g)
    }

    /// Smith diagonal from the minor-gcd chain: `α_k = g_k / g_{k-1}` with
    /// `g_0 = 1`. Entries past the rank are zero.
    pub fn snf_via_minors(&self) -> Result<Vec<UniPoly<F>>> {
        let var = self.var();
        let mut prev = UniPoly::one(var);
        let mut diag = Vec::new();
        for k in 1..=self.rows().min(self.cols()) {
            let g = self.gcd_of_k_minors(k)?;
            if g.is_zero() {
                diag.push(g.clone());
            } else if prev.is_zero() {
                return Err(Error::MinorChainViolated(k));
            } else {
                let (q, r) = g.divrem(&prev)?;
                if !r.is_zero() {
                    return Err(Error::MinorChainViolated(k));
                }
                diag.push(q.monic());
            }
            prev = g;
        }
        Ok(diag)
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_util::*;
    use super::*;
    use crate::exactalg::{Rational, Var};

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(6, 3).len(), 20);
    }

    #[test]
    fn minor_gcds() {
        let zero = RingMatrix::<Rational>::zeros(2, 2, Var::N);
        assert!(zero.gcd_of_k_minors(1).unwrap().is_zero());
        assert!(matches!(zero.gcd_of_k_minors(3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(zero.gcd_of_k_minors(0), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(zero.snf_via_minors().unwrap(), vec![np(&[]), np(&[])]);

        let id = RingMatrix::<Rational>::identity(3, Var::N);
        assert_eq!(id.snf_via_minors().unwrap(), vec![np(&[1]); 3]);

        // diag(2n, n^2): g1 = n, g2 = n^3
        let m = nmat(&[&[&[0, 2], &[]], &[&[], &[0, 0, 1]]]);
        assert_eq!(m.gcd_of_k_minors(1).unwrap(), np(&[0, 1]));
        assert_eq!(m.snf_via_minors().unwrap(), vec![np(&[0, 1]), np(&[0, 0, 1])]);
    }

    #[test]
    fn rank_deficient_rectangular() {
        // [[n, n^2, 0], [n, n^2, 0]] has rank 1
        let m = nmat(&[&[&[0, 1], &[0, 0, 1], &[]], &[&[0, 1], &[0, 0, 1], &[]]]);
        assert_eq!(m.snf_via_minors().unwrap(), vec![np(&[0, 1]), np(&[])]);
    }
}
