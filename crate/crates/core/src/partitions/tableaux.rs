//! Brute-force tableau enumeration.
//!
//! These routines are oracles for the algebraic side, so they enumerate
//! fillings directly and use no symmetric-function identities.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::{Cell, Partition, SkewShape};

/// Number of semistandard fillings of `shape` with entries in `1..=n`
/// (rows weakly increasing, columns strictly increasing). This is
/// `s_{ρ/σ}(1^n)`.
pub fn ssyt_count(shape: &SkewShape, n: usize) -> BigUint {
    // Column-major order: the cell above and the cell to the left are
    // always filled before the current one.
    let mut cells: Vec<Cell> = shape.cells().collect();
    cells.sort_by_key(|c| (c.col, c.row));
    if cells.is_empty() {
        return BigUint::from(1u32);
    }
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let plan: Vec<Slot> = cells
        .iter()
        .map(|c| Slot {
            above: (c.row > 1)
                .then(|| index.get(&Cell::new(c.row - 1, c.col)).copied())
                .flatten(),
            left: (c.col > 1)
                .then(|| index.get(&Cell::new(c.row, c.col - 1)).copied())
                .flatten(),
            // cells strictly below in the same column, each needing a larger entry
            below: cells
                .iter()
                .filter(|d| d.col == c.col && d.row > c.row)
                .count(),
        })
        .collect();
    let mut fill = vec![0usize; cells.len()];
    let mut count: u64 = 0;
    fill_ssyt(&plan, 0, n, &mut fill, &mut count);
    BigUint::from(count)
}

struct Slot {
    above: Option<usize>,
    left: Option<usize>,
    below: usize,
}

fn fill_ssyt(plan: &[Slot], pos: usize, n: usize, fill: &mut [usize], count: &mut u64) {
    if pos == plan.len() {
        *count += 1;
        return;
    }
    let slot = &plan[pos];
    let mut lo = 1;
    if let Some(a) = slot.above {
        lo = lo.max(fill[a] + 1);
    }
    if let Some(l) = slot.left {
        lo = lo.max(fill[l]);
    }
    let Some(hi) = n.checked_sub(slot.below) else {
        return;
    };
    for v in lo..=hi {
        fill[pos] = v;
        fill_ssyt(plan, pos + 1, n, fill, count);
    }
}

/// Littlewood-Richardson coefficient `c^ρ_{σ,τ}`: the number of SSYT of
/// shape `ρ/σ` and content `τ` whose reverse reading word is a lattice
/// word.
///
/// The reverse reading word reads each row right to left, top row first.
/// Cells are filled in exactly that order so the lattice condition (at
/// every prefix, #i ≥ #(i+1)) is checked as each entry is placed.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if !outer.contains(inner) || outer.weight() != inner.weight() + content.weight() {
        return 0;
    }
    let shape = SkewShape {
        outer: outer.clone(),
        inner: inner.clone(),
    };
    let mut cells: Vec<Cell> = shape.cells().collect();
    cells.sort_by_key(|c| (c.row, std::cmp::Reverse(c.col)));
    if cells.is_empty() {
        return 1;
    }
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let plan: Vec<LrSlot> = cells
        .iter()
        .map(|c| LrSlot {
            above: (c.row > 1)
                .then(|| index.get(&Cell::new(c.row - 1, c.col)).copied())
                .flatten(),
            right: index.get(&Cell::new(c.row, c.col + 1)).copied(),
        })
        .collect();
    let mut fill = vec![0usize; cells.len()];
    // used[e] counts entries equal to e + 1 placed so far
    let mut used = vec![0usize; content.len()];
    let mut count = 0;
    fill_lr(&plan, 0, content.parts(), &mut used, &mut fill, &mut count);
    count
}

struct LrSlot {
    above: Option<usize>,
    right: Option<usize>,
}

fn fill_lr(
    plan: &[LrSlot],
    pos: usize,
    content: &[usize],
    used: &mut [usize],
    fill: &mut [usize],
    count: &mut u64,
) {
    if pos == plan.len() {
        *count += 1;
        return;
    }
    let slot = &plan[pos];
    let lo = slot.above.map_or(1, |a| fill[a] + 1);
    let hi = slot.right.map_or(content.len(), |r| fill[r]);
    for v in lo..=hi {
        let e = v - 1;
        if used[e] == content[e] {
            continue;
        }
        if e > 0 && used[e] + 1 > used[e - 1] {
            continue;
        }
        used[e] += 1;
        fill[pos] = v;
        fill_lr(plan, pos + 1, content, used, fill, count);
        used[e] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn ssyt_small_counts() {
        assert_eq!(ssyt_count(&skew("1/-"), 3), BigUint::from(3u32));
        // (2,1) with entries in 1..3: 8 fillings; (n-1)n(n+1)/3 at n = 3
        assert_eq!(ssyt_count(&skew("2,1"), 3), BigUint::from(8u32));
        assert_eq!(ssyt_count(&skew("2,1"), 0), BigUint::from(0u32));
        assert_eq!(ssyt_count(&skew("-"), 0), BigUint::from(1u32));
        assert_eq!(ssyt_count(&skew("2,1/2,1"), 4), BigUint::from(1u32));
        // A single column of height 3 needs 3 distinct entries.
        assert_eq!(ssyt_count(&skew("1,1,1"), 2), BigUint::from(0u32));
        assert_eq!(ssyt_count(&skew("1,1,1"), 4), BigUint::from(4u32));
        // (3) with entries in 1..2: multisets of size 3 from 2 values
        assert_eq!(ssyt_count(&skew("3"), 2), BigUint::from(4u32));
        // disconnected skew shape (2,1)/(1): two free cells
        assert_eq!(ssyt_count(&skew("2,1/1"), 3), BigUint::from(9u32));
    }

    #[test]
    fn lr_small_coefficients() {
        let rho = p(&[3, 2, 1]);
        assert_eq!(lr_coefficient(&rho, &Partition::empty(), &rho), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
        // c^{321}_{21,21} = 2
        assert_eq!(lr_coefficient(&rho, &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[3])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &Partition::empty()), 0);
    }

    #[test]
    fn lr_fillings_of_653_over_21_contain_431() {
        let rho = p(&[6, 5, 3]);
        let sigma = p(&[2, 1]);
        let mu = p(&[4, 3, 1]);
        let mut nonzero = 0;
        for tau in Partition::all_of(11) {
            if lr_coefficient(&rho, &sigma, &tau) != 0 {
                nonzero += 1;
                assert!(tau.contains(&mu), "{tau:?} does not contain {mu:?}");
            }
        }
        assert!(nonzero > 0);
        assert_eq!(lr_coefficient(&rho, &sigma, &p(&[3, 3, 3, 2])), 0);
    }
}
