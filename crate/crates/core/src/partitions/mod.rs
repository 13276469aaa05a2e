//! Young diagram combinatorics.
//!
//! Rows and columns are 1-based throughout, matching the usual `(i, j)`
//! indexing of cells; the content of cell `(i, j)` is `j - i`.

mod tableaux;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use tableaux::{lr_coefficient, ssyt_count};

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part before a positive part in {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Largest `i` with `λ_i >= i`: the side of the Durfee square.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Componentwise `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|c| c.content()).collect()
    }

    /// The `k`-th diagonal hook: the cells `(k, j)` with `j >= k` together
    /// with `(i, k)` for `i > k`. Empty once `k` exceeds the rank.
    pub fn diagonal_hook(&self, k: usize) -> DiagonalHook {
        assert!(k >= 1, "diagonal hooks are indexed from 1");
        let mut cells = Vec::new();
        if self.part(k) >= k {
            let leg = self.parts.iter().take_while(|&&p| p >= k).count();
            // Leg bottom-up, then the arm left to right: contents ascend.
            cells.extend((k + 1..=leg).rev().map(|i| Cell::new(i, k)));
            cells.extend((k..=self.part(k)).map(|j| Cell::new(k, j)));
        }
        DiagonalHook { index: k, cells }
    }

    /// The partition whose diagram is `D_{t-k+1} ∪ ... ∪ D_t`, moved up the
    /// main diagonal so its corner sits at `(1, 1)`.
    ///
    /// That union is the set of cells with `min(i, j) > t - k`, so its row
    /// lengths are `λ_i - (t - k)` for the rows `i > t - k` that reach far
    /// enough. Contents are unchanged by the diagonal shift.
    pub fn hook_union(&self, t: usize, k: usize) -> Result<Partition> {
        if t < self.len() {
            return Err(Error::TBelowLength { t, len: self.len() });
        }
        if k == 0 || k > t {
            return Err(Error::IndexOutOfRange { index: k, max: t });
        }
        let offset = t - k;
        let parts = (offset + 1..=t)
            .map(|i| self.part(i).saturating_sub(offset))
            .take_while(|&p| p > 0)
            .collect();
        Ok(Partition { parts })
    }

    /// Every partition of `n`, in reverse lexicographic order: `(n)` first,
    /// `(1^n)` last.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of weight `0..=max_weight`, by weight, each weight in
    /// reverse lexicographic order.
    pub fn up_to(max_weight: usize) -> Vec<Partition> {
        (0..=max_weight).flat_map(Partition::all_of).collect()
    }

    /// All partitions contained in `self` (including `∅` and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if i == outer.len() {
                return;
            }
            for p in 1..=outer[i].min(max) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// `7,5,5,2`; the empty partition is `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// A cell `(row, col)` of a diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalHook {
    pub index: usize,
    pub cells: Vec<Cell>,
}

impl DiagonalHook {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.cells.iter().map(Cell::content).collect()
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape `λ / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row) && col <= self.outer.part(row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.outer.len())
            .flat_map(move |i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| Cell::new(i, j)))
    }
}

impl fmt::Display for SkewShape {
    /// `outer/inner`, e.g. `6,5,3/2,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}
