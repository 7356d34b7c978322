//! Partitions, skew shapes and cell geometry.
//!
//! Cells are 1-indexed `(row, col)` pairs in English notation: row 1 is the
//! top row and columns grow to the right. Partitions never store trailing
//! zeros, so derived equality is equality of Young diagrams.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

/// A box of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub const fn transpose(self) -> Self {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of the given 1-indexed row, zero past the last part.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.row_len(1)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Componentwise `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width)
            .map(|col| self.0.iter().take_while(|&&p| p >= col).count())
            .collect();
        Partition(parts)
    }

    /// Cells whose removal leaves a partition, top to bottom.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&row| self.row_len(row) > self.row_len(row + 1))
            .map(|row| Cell::new(row, self.row_len(row)))
            .collect()
    }

    /// Cells whose addition yields a partition, top to bottom.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&row| row == 1 || self.row_len(row - 1) > self.row_len(row))
            .map(|row| Cell::new(row, self.row_len(row) + 1))
            .collect()
    }

    pub fn with_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&cell) {
            return precondition(format!("{cell} is not addable to {self}"));
        }
        let mut parts = self.0.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition(parts))
    }

    pub fn without_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.removable_cells().contains(&cell) {
            return precondition(format!("{cell} is not removable from {self}"));
        }
        let mut parts = self.0.clone();
        parts[cell.row - 1] -= 1;
        Partition::new(parts)
    }

    /// The strict partition `self + δ(n)`, i.e. part `i` becomes `p_i + n - i + 1`.
    pub fn add_staircase(&self, n: usize) -> Result<Partition> {
        if self.len() > n {
            return precondition(format!("{self} has more than {n} parts"));
        }
        Ok(Partition(
            (1..=n).map(|i| self.row_len(i) + n - i + 1).collect(),
        ))
    }

    /// Every partition contained in `self`, in lexicographic order.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn go(bound: &[usize], cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            match bound.split_first() {
                None => out.push(Partition::new(cur.clone()).expect("weakly decreasing")),
                Some((&b, rest)) => {
                    for p in 0..=b.min(cap) {
                        cur.push(p);
                        go(rest, p, cur, out);
                        cur.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(&self.0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Parses a comma-separated part list; the empty string is the empty partition.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad part {p:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

/// The staircase `δ(n) = (n, n-1, ..., 1)`; `n = 0` gives the empty partition.
pub fn staircase(n: usize) -> Partition {
    Partition((1..=n).rev().collect())
}

/// All partitions of `size`, in reverse lexicographic order.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, &mut Vec::new(), &mut out);
    out
}

/// A skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape { outer, inner })
    }

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
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|row| {
                (self.inner.row_len(row) + 1..=self.outer.row_len(row))
                    .map(move |col| Cell::new(row, col))
            })
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Cells translated so the topmost row and leftmost column are 1.
    ///
    /// Two shapes with equal keys carry the same tableaux up to relabeling
    /// of coordinates.
    pub fn translation_key(&self) -> Vec<Cell> {
        let cells = self.cells();
        let min_row = cells.iter().map(|c| c.row).min().unwrap_or(1);
        let min_col = cells.iter().map(|c| c.col).min().unwrap_or(1);
        cells
            .into_iter()
            .map(|c| Cell::new(c.row - min_row + 1, c.col - min_col + 1))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// At most one cell per column.
pub fn is_horizontal_strip(cells: &[Cell]) -> bool {
    let cols: BTreeSet<usize> = cells.iter().map(|c| c.col).collect();
    let distinct: BTreeSet<&Cell> = cells.iter().collect();
    cols.len() == distinct.len()
}

/// At most one cell per row.
pub fn is_vertical_strip(cells: &[Cell]) -> bool {
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.row).collect();
    let distinct: BTreeSet<&Cell> = cells.iter().collect();
    rows.len() == distinct.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(3), p(&[3, 2, 1]));
        assert_eq!(staircase(1), p(&[1]));
        assert_eq!(staircase(0), Partition::empty());
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 3, 1".parse::<Partition>().unwrap(), p(&[3, 1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=8 {
            assert_eq!(staircase(n).conjugate(), staircase(n));
        }
    }

    #[test]
    fn conjugation_is_involutive() {
        for size in 0..=12 {
            for part in partitions_of(size) {
                assert_eq!(part.conjugate().conjugate(), part);
                assert_eq!(part.conjugate().size(), size);
            }
        }
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 2, 1]).contains(&p(&[2, 1])));
        assert!(!p(&[2, 1]).contains(&p(&[3])));
        assert!(p(&[2, 1]).contains(&Partition::empty()));
        assert!(SkewShape::new(p(&[2, 1]), p(&[3])).is_err());
    }

    #[test]
    fn skew_cells_row_major() {
        let shape = |o: &[usize], i: &[usize]| SkewShape::new(p(o), p(i)).unwrap();
        assert_eq!(
            shape(&[2, 1], &[]).cells(),
            cells(&[(1, 1), (1, 2), (2, 1)])
        );
        assert_eq!(shape(&[2, 1], &[1]).cells(), cells(&[(1, 2), (2, 1)]));
        assert!(shape(&[1], &[1]).cells().is_empty());
    }

    #[test]
    fn corners() {
        assert_eq!(p(&[2, 1]).removable_cells(), cells(&[(1, 2), (2, 1)]));
        assert_eq!(p(&[1]).removable_cells(), cells(&[(1, 1)]));
        assert!(Partition::empty().removable_cells().is_empty());
        assert_eq!(p(&[2, 1]).addable_cells(), cells(&[(1, 3), (2, 2), (3, 1)]));
        assert_eq!(Partition::empty().addable_cells(), cells(&[(1, 1)]));
        assert_eq!(p(&[1, 1]).addable_cells(), cells(&[(1, 2), (3, 1)]));
    }

    #[test]
    fn corner_moves_stay_partitions() {
        for size in 0..=10 {
            for part in partitions_of(size) {
                for c in part.removable_cells() {
                    let smaller = part.without_cell(c).unwrap();
                    assert_eq!(smaller.size(), size - 1);
                    assert!(part.contains(&smaller));
                }
                for c in part.addable_cells() {
                    let bigger = part.with_cell(c).unwrap();
                    assert_eq!(bigger.size(), size + 1);
                    assert!(bigger.contains(&part));
                }
            }
        }
        assert!(p(&[2, 1]).with_cell(Cell::new(1, 1)).is_err());
        assert!(p(&[2, 1]).without_cell(Cell::new(1, 1)).is_err());
    }

    #[test]
    fn add_staircase_examples() {
        assert_eq!(p(&[1]).add_staircase(2).unwrap(), p(&[3, 1]));
        assert_eq!(Partition::empty().add_staircase(3).unwrap(), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 2]).add_staircase(2).unwrap(), p(&[4, 3]));
        assert!(matches!(
            p(&[1, 1, 1]).add_staircase(2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn add_staircase_is_strict() {
        for size in 0..=8 {
            for part in partitions_of(size) {
                for n in part.len()..=part.len() + 2 {
                    let strict = part.add_staircase(n).unwrap();
                    assert!(strict.parts().windows(2).all(|w| w[0] > w[1]));
                }
            }
        }
    }

    #[test]
    fn strips() {
        let both = cells(&[(1, 2), (2, 1)]);
        assert!(is_horizontal_strip(&both) && is_vertical_strip(&both));
        let column = cells(&[(1, 1), (2, 1)]);
        assert!(!is_horizontal_strip(&column) && is_vertical_strip(&column));
        assert!(is_horizontal_strip(&[]) && is_vertical_strip(&[]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        // Catalan numbers count the partitions inside a staircase.
        let catalan: Vec<usize> = (0..=5)
            .map(|n| staircase(n).sub_partitions().len())
            .collect();
        assert_eq!(catalan, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn serde_validates() {
        let json = serde_json::to_string(&p(&[3, 1])).unwrap();
        assert_eq!(json, "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
