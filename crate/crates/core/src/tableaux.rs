//! Fillings of skew shapes.
//!
//! Two families live here. A [`GstTableau`] is filled with positive integers
//! and is judged against an [`IndexSet`] `I`: letters in `I` may repeat down
//! a column but not along a row, letters outside `I` the other way round.
//! A [`QTableau`] is filled with primed and unprimed letters and is judged
//! against the total order `≤_I`, where `i' < i` unless `i ∈ I`.
//!
//! Every index set is truncated to an alphabet `1..=m` and entries are
//! bounded by the same `m`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};

/// A subset of the alphabet `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    members: BTreeSet<u32>,
    m: u32,
}

impl IndexSet {
    pub fn new(members: impl IntoIterator<Item = u32>, m: u32) -> Result<Self> {
        let members: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&member) = members.iter().find(|&&i| i == 0 || i > m) {
            return Err(Error::IndexOutOfRange { member, m });
        }
        Ok(IndexSet { members, m })
    }

    pub fn empty(m: u32) -> Self {
        IndexSet {
            members: BTreeSet::new(),
            m,
        }
    }

    pub fn full(m: u32) -> Self {
        IndexSet {
            members: (1..=m).collect(),
            m,
        }
    }

    /// The odd letters of `1..=m`.
    pub fn odds(m: u32) -> Self {
        IndexSet {
            members: (1..=m).step_by(2).collect(),
            m,
        }
    }

    /// All `2^m` subsets of `1..=m`, ordered by bitmask.
    pub fn all_subsets(m: u32) -> Vec<IndexSet> {
        (0u32..1 << m)
            .map(|mask| IndexSet {
                members: (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
                m,
            })
            .collect()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn contains(&self, i: u32) -> bool {
        self.members.contains(&i)
    }

    pub fn members(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet {
            members: (1..=self.m).filter(|i| !self.members.contains(i)).collect(),
            m: self.m,
        }
    }

    pub fn with(&self, i: u32) -> Result<IndexSet> {
        IndexSet::new(self.members().chain([i]), self.m)
    }

    pub fn without(&self, i: u32) -> IndexSet {
        let mut out = self.clone();
        out.members.remove(&i);
        out
    }

    /// Members `≥ shift + 1`, shifted down by `shift`, over the alphabet `1..=m - shift`.
    pub(crate) fn shifted_down(&self, shift: u32) -> IndexSet {
        IndexSet {
            members: self
                .members()
                .filter(|&i| i > shift)
                .map(|i| i - shift)
                .collect(),
            m: self.m - shift,
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

/// Content of a box as seen by jeu de taquin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Content {
    NegInf,
    Finite(u32),
    PosInf,
}

/// Letter multiplicities; index `i - 1` counts letter `i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<usize>);

impl WeightVector {
    pub fn from_letters(letters: impl IntoIterator<Item = u32>) -> Self {
        let mut counts = Vec::new();
        for v in letters {
            let idx = v as usize - 1;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        WeightVector(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// The weight as a partition, if its multiplicities weakly decrease.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

/// Border boxes and empty boxes of `inner` read as `-∞`; any other empty
/// box reads as `+∞`.
pub(crate) fn content(entries: &BTreeMap<Cell, u32>, inner: &Partition, cell: Cell) -> Content {
    if cell.row == 0 || cell.col == 0 {
        return Content::NegInf;
    }
    match entries.get(&cell) {
        Some(&v) => Content::Finite(v),
        None if inner.contains_cell(cell) => Content::NegInf,
        None => Content::PosInf,
    }
}

fn check_filled<V>(shape: &SkewShape, entries: &BTreeMap<Cell, V>) -> Result<()> {
    let cells = shape.cells();
    if cells.len() != entries.len() || cells.iter().any(|c| !entries.contains_key(c)) {
        return precondition(format!("entries do not exactly fill {shape}"));
    }
    Ok(())
}

/// A filling of a skew shape by positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GstTableau {
    shape: SkewShape,
    entries: BTreeMap<Cell, u32>,
}

impl GstTableau {
    pub fn new(shape: SkewShape, entries: BTreeMap<Cell, u32>) -> Result<Self> {
        check_filled(&shape, &entries)?;
        if entries.values().any(|&v| v == 0) {
            return precondition("entries must be positive");
        }
        Ok(GstTableau { shape, entries })
    }

    /// Convenience constructor from `(row, col, value)` triples.
    pub fn from_triples(
        outer: &[usize],
        inner: &[usize],
        triples: &[(usize, usize, u32)],
    ) -> Result<Self> {
        let shape = SkewShape::new(
            Partition::new(outer.to_vec())?,
            Partition::new(inner.to_vec())?,
        )?;
        let entries = triples
            .iter()
            .map(|&(r, c, v)| (Cell::new(r, c), v))
            .collect();
        GstTableau::new(shape, entries)
    }

    pub(crate) fn from_parts(shape: SkewShape, entries: BTreeMap<Cell, u32>) -> Self {
        debug_assert!(check_filled(&shape, &entries).is_ok());
        GstTableau { shape, entries }
    }

    pub fn empty(shape: SkewShape) -> Result<Self> {
        GstTableau::new(shape, BTreeMap::new())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<Cell, u32> {
        &self.entries
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.entries.get(&cell).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Content of a box, including the virtual border at row 0 and column 0.
    pub fn content_at(&self, cell: Cell) -> Content {
        content(&self.entries, self.shape.inner(), cell)
    }

    pub fn weight(&self) -> WeightVector {
        WeightVector::from_letters(self.entries.values().copied())
    }

    /// Checks weak increase along rows and columns, that letters of `set` are
    /// row-distinct and that the remaining letters are column-distinct.
    /// Entries must also lie in `1..=set.m()`.
    pub fn is_valid(&self, set: &IndexSet) -> bool {
        self.entries.iter().all(|(&cell, &v)| {
            if v == 0 || v > set.m() {
                return false;
            }
            let in_set = set.contains(v);
            let right_ok = match self.entries.get(&Cell::new(cell.row, cell.col + 1)) {
                Some(&w) => v < w || (v == w && !in_set),
                None => true,
            };
            let below_ok = match self.entries.get(&Cell::new(cell.row + 1, cell.col)) {
                Some(&w) => v < w || (v == w && in_set),
                None => true,
            };
            right_ok && below_ok
        })
    }

    /// Reflects the filling across the main diagonal. The result is valid for
    /// the complementary index set on the conjugate shape.
    pub fn transpose(&self, set: &IndexSet) -> Result<(GstTableau, IndexSet)> {
        if !self.is_valid(set) {
            return precondition(format!("tableau is not a valid GST for {set}"));
        }
        let shape = self.shape.conjugate();
        let entries = self
            .entries
            .iter()
            .map(|(c, &v)| (c.transpose(), v))
            .collect();
        Ok((GstTableau { shape, entries }, set.complement()))
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            outer: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            entries: self
                .entries
                .iter()
                .map(|(c, &v)| EntryJson {
                    row: c.row,
                    col: c.col,
                    value: v,
                    primed: None,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &TableauJson) -> Result<Self> {
        let shape = json.shape()?;
        let mut entries = BTreeMap::new();
        for e in &json.entries {
            if e.primed.is_some() {
                return precondition("GST entries carry no prime flag");
            }
            if entries.insert(Cell::new(e.row, e.col), e.value).is_some() {
                return precondition(format!("duplicate entry at ({},{})", e.row, e.col));
            }
        }
        GstTableau::new(shape, entries)
    }
}

/// A letter of the alphabet `1' , 1, 2', 2, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimedEntry {
    pub value: u32,
    pub primed: bool,
}

impl PrimedEntry {
    pub const fn unprimed(value: u32) -> Self {
        PrimedEntry {
            value,
            primed: false,
        }
    }

    pub const fn primed(value: u32) -> Self {
        PrimedEntry {
            value,
            primed: true,
        }
    }

    pub const fn toggled(self) -> Self {
        PrimedEntry {
            value: self.value,
            primed: !self.primed,
        }
    }

    /// Position in the total order `≤_I`.
    pub fn rank(self, set: &IndexSet) -> u32 {
        // i ∈ I: i < i'; otherwise i' < i.
        let second = self.primed == set.contains(self.value);
        2 * (self.value - 1) + u32::from(second)
    }
}

impl fmt::Display for PrimedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A filling of a skew shape by primed and unprimed letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QTableau {
    shape: SkewShape,
    entries: BTreeMap<Cell, PrimedEntry>,
}

impl QTableau {
    pub fn new(shape: SkewShape, entries: BTreeMap<Cell, PrimedEntry>) -> Result<Self> {
        check_filled(&shape, &entries)?;
        if entries.values().any(|e| e.value == 0) {
            return precondition("entries must be positive");
        }
        Ok(QTableau { shape, entries })
    }

    /// Convenience constructor from `(row, col, value, primed)` tuples.
    pub fn from_tuples(
        outer: &[usize],
        inner: &[usize],
        tuples: &[(usize, usize, u32, bool)],
    ) -> Result<Self> {
        let shape = SkewShape::new(
            Partition::new(outer.to_vec())?,
            Partition::new(inner.to_vec())?,
        )?;
        let entries = tuples
            .iter()
            .map(|&(r, c, value, primed)| (Cell::new(r, c), PrimedEntry { value, primed }))
            .collect();
        QTableau::new(shape, entries)
    }

    pub(crate) fn from_parts(shape: SkewShape, entries: BTreeMap<Cell, PrimedEntry>) -> Self {
        debug_assert!(check_filled(&shape, &entries).is_ok());
        QTableau { shape, entries }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<Cell, PrimedEntry> {
        &self.entries
    }

    pub fn get(&self, cell: Cell) -> Option<PrimedEntry> {
        self.entries.get(&cell).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Weight with primes ignored.
    pub fn weight(&self) -> WeightVector {
        WeightVector::from_letters(self.entries.values().map(|e| e.value))
    }

    /// `(primed, unprimed)` entry counts.
    pub fn prime_counts(&self) -> (usize, usize) {
        let primed = self.entries.values().filter(|e| e.primed).count();
        (primed, self.entries.len() - primed)
    }

    /// Weak increase under `≤_I` along rows and columns, primed letters
    /// row-distinct, unprimed letters column-distinct, values in `1..=m`.
    pub fn is_valid(&self, set: &IndexSet) -> bool {
        self.entries.iter().all(|(&cell, &e)| {
            if e.value == 0 || e.value > set.m() {
                return false;
            }
            let rank = e.rank(set);
            let right_ok = match self.entries.get(&Cell::new(cell.row, cell.col + 1)) {
                Some(&w) => rank < w.rank(set) || (w == e && !e.primed),
                None => true,
            };
            let below_ok = match self.entries.get(&Cell::new(cell.row + 1, cell.col)) {
                Some(&w) => rank < w.rank(set) || (w == e && e.primed),
                None => true,
            };
            right_ok && below_ok
        })
    }

    /// Primed entries down the columns from right to left, then unprimed
    /// entries along the rows from the bottom row up; primes dropped.
    pub fn reading_word(&self) -> Word {
        let mut primed: Vec<(Cell, u32)> = self
            .entries
            .iter()
            .filter(|(_, e)| e.primed)
            .map(|(&c, e)| (c, e.value))
            .collect();
        primed.sort_by(|(a, _), (b, _)| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
        let mut unprimed: Vec<(Cell, u32)> = self
            .entries
            .iter()
            .filter(|(_, e)| !e.primed)
            .map(|(&c, e)| (c, e.value))
            .collect();
        unprimed.sort_by(|(a, _), (b, _)| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
        Word(primed.into_iter().chain(unprimed).map(|(_, v)| v).collect())
    }

    /// Re-embeds the filling into the shifted skew shape
    /// `(outer + δ(n)) / (inner + δ(n))` and checks the primed-tableau rules
    /// there under the standard order `1' < 1 < 2' < ...`.
    pub fn shifted_validate(&self, n: usize) -> Result<bool> {
        let shifted = ShiftedShape::new(&self.shape, n)?;
        let cells = shifted.cells();
        if cells.len() != self.entries.len() {
            return Ok(false);
        }
        let mut placed = BTreeMap::new();
        for &c in &cells {
            match self.entries.get(&shifted.unshift(c)) {
                Some(&e) => placed.insert(c, e),
                None => return Ok(false),
            };
        }
        Ok(shifted_rules_hold(&placed))
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            outer: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            entries: self
                .entries
                .iter()
                .map(|(c, e)| EntryJson {
                    row: c.row,
                    col: c.col,
                    value: e.value,
                    primed: Some(e.primed),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &TableauJson) -> Result<Self> {
        let shape = json.shape()?;
        let mut entries = BTreeMap::new();
        for e in &json.entries {
            let Some(primed) = e.primed else {
                return precondition("Q-tableau entries need a prime flag");
            };
            let entry = PrimedEntry {
                value: e.value,
                primed,
            };
            if entries.insert(Cell::new(e.row, e.col), entry).is_some() {
                return precondition(format!("duplicate entry at ({},{})", e.row, e.col));
            }
        }
        QTableau::new(shape, entries)
    }
}

/// Standard shifted primed-tableau rules on a shifted filling.
fn shifted_rules_hold(placed: &BTreeMap<Cell, PrimedEntry>) -> bool {
    let standard = |e: PrimedEntry| 2 * e.value - u32::from(e.primed);
    placed.iter().all(|(&c, &e)| {
        let right_ok = placed
            .get(&Cell::new(c.row, c.col + 1))
            .is_none_or(|&w| standard(e) < standard(w) || (e == w && !e.primed));
        let below_ok = placed
            .get(&Cell::new(c.row + 1, c.col))
            .is_none_or(|&w| standard(e) < standard(w) || (e == w && e.primed));
        right_ok && below_ok
    })
}

/// The shifted skew shape `(outer + δ(n)) / (inner + δ(n))`, in shifted
/// coordinates where row `i` starts at column `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedShape {
    outer: Partition,
    inner: Partition,
    n: usize,
}

impl ShiftedShape {
    pub fn new(shape: &SkewShape, n: usize) -> Result<Self> {
        Ok(ShiftedShape {
            outer: shape.outer().add_staircase(n)?,
            inner: shape.inner().add_staircase(n)?,
            n,
        })
    }

    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.n)
            .flat_map(|row| {
                (row + self.inner.row_len(row)..row + self.outer.row_len(row))
                    .map(move |col| Cell::new(row, col))
            })
            .collect()
    }

    /// Ordinary coordinates of a shifted cell.
    pub fn unshift(&self, cell: Cell) -> Cell {
        Cell::new(cell.row, cell.col - self.n)
    }

    /// Sums `f` over every primed shifted tableau on this shape with values
    /// in `1..=m`, by plain backtracking in shifted coordinates.
    pub fn for_each_filling(&self, m: u32, mut visit: impl FnMut(&BTreeMap<Cell, PrimedEntry>)) {
        let cells = self.cells();
        let letters: Vec<PrimedEntry> = (1..=m)
            .flat_map(|v| [PrimedEntry::primed(v), PrimedEntry::unprimed(v)])
            .collect();
        let mut placed = BTreeMap::new();
        fn go(
            cells: &[Cell],
            letters: &[PrimedEntry],
            placed: &mut BTreeMap<Cell, PrimedEntry>,
            visit: &mut dyn FnMut(&BTreeMap<Cell, PrimedEntry>),
        ) {
            let Some((&cell, rest)) = cells.split_first() else {
                visit(placed);
                return;
            };
            for &e in letters {
                placed.insert(cell, e);
                if shifted_rules_hold(placed) {
                    go(rest, letters, placed, visit);
                }
                placed.remove(&cell);
            }
        }
        go(&cells, &letters, &mut placed, &mut visit);
    }
}

/// A word over the positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u32>);

impl Word {
    /// Every suffix holds at least as many `i` as `i + 1`, for all `i ≥ 1`.
    pub fn is_yamanouchi(&self) -> bool {
        let mut counts: Vec<usize> = Vec::new();
        for &letter in self.0.iter().rev() {
            let idx = letter as usize;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
            if idx >= 2 && counts[idx] > counts[idx - 1] {
                return false;
            }
        }
        true
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Relabels `2i - 1 ↦ i'` and `2i ↦ i`, carrying `G(shape, odds)` onto `Q(shape, ∅)`.
pub fn gst_qtab_relabel(t: &GstTableau) -> QTableau {
    let entries = t
        .entries
        .iter()
        .map(|(&c, &v)| {
            let e = if v % 2 == 1 {
                PrimedEntry::primed(v.div_ceil(2))
            } else {
                PrimedEntry::unprimed(v / 2)
            };
            (c, e)
        })
        .collect();
    QTableau::from_parts(t.shape.clone(), entries)
}

/// Inverse of [`gst_qtab_relabel`].
pub fn qtab_gst_relabel(t: &QTableau) -> GstTableau {
    let entries = t
        .entries
        .iter()
        .map(|(&c, e)| {
            (
                c,
                if e.primed {
                    2 * e.value - 1
                } else {
                    2 * e.value
                },
            )
        })
        .collect();
    GstTableau::from_parts(t.shape.clone(), entries)
}

/// Cell order plus the in-shape left and upper neighbors of each cell.
struct Grid {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Grid {
    fn new(shape: &SkewShape) -> Self {
        let cells = shape.cells();
        let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let left = cells
            .iter()
            .map(|c| index.get(&Cell::new(c.row, c.col - 1)).copied())
            .collect();
        let above = cells
            .iter()
            .map(|c| index.get(&Cell::new(c.row - 1, c.col)).copied())
            .collect();
        Grid { cells, left, above }
    }

    /// Depth-first fill in row-major order. `ok(letter, left, above)` sees the
    /// already placed neighbors, which is enough because rows and columns of
    /// a skew shape are contiguous.
    fn backtrack<L: Copy>(
        &self,
        candidates: &[L],
        ok: &impl Fn(L, Option<L>, Option<L>) -> bool,
        visit: &mut impl FnMut(&[L]),
    ) {
        let mut buf: Vec<L> = Vec::with_capacity(self.cells.len());
        self.step(candidates, ok, visit, &mut buf);
    }

    fn step<L: Copy>(
        &self,
        candidates: &[L],
        ok: &impl Fn(L, Option<L>, Option<L>) -> bool,
        visit: &mut impl FnMut(&[L]),
        buf: &mut Vec<L>,
    ) {
        let k = buf.len();
        if k == self.cells.len() {
            visit(buf);
            return;
        }
        let left = self.left[k].map(|i| buf[i]);
        let above = self.above[k].map(|i| buf[i]);
        for &cand in candidates {
            if ok(cand, left, above) {
                buf.push(cand);
                self.step(candidates, ok, visit, buf);
                buf.pop();
            }
        }
    }
}

impl Grid {
    /// Randomized depth-first fill: candidates are tried in a fresh random
    /// order at every cell and the first complete filling wins. Gives up
    /// after `budget` placements.
    fn sample<L: Copy, R: Rng + ?Sized>(
        &self,
        candidates: &[L],
        ok: &impl Fn(L, Option<L>, Option<L>) -> bool,
        rng: &mut R,
        budget: usize,
    ) -> Option<Vec<L>> {
        let mut buf: Vec<L> = Vec::with_capacity(self.cells.len());
        let mut left = budget;
        self.sample_step(candidates, ok, rng, &mut left, &mut buf)
            .then_some(buf)
    }

    fn sample_step<L: Copy, R: Rng + ?Sized>(
        &self,
        candidates: &[L],
        ok: &impl Fn(L, Option<L>, Option<L>) -> bool,
        rng: &mut R,
        budget: &mut usize,
        buf: &mut Vec<L>,
    ) -> bool {
        let k = buf.len();
        if k == self.cells.len() {
            return true;
        }
        let left = self.left[k].map(|i| buf[i]);
        let above = self.above[k].map(|i| buf[i]);
        let mut order: Vec<L> = candidates
            .iter()
            .copied()
            .filter(|&c| ok(c, left, above))
            .collect();
        order.shuffle(rng);
        for cand in order {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            buf.push(cand);
            if self.sample_step(candidates, ok, rng, budget, buf) {
                return true;
            }
            buf.pop();
        }
        false
    }
}

fn gst_step_ok(set: &IndexSet) -> impl Fn(u32, Option<u32>, Option<u32>) -> bool + '_ {
    move |v, left, above| {
        let in_set = set.contains(v);
        left.is_none_or(|l| l < v || (l == v && !in_set))
            && above.is_none_or(|a| a < v || (a == v && in_set))
    }
}

/// Calls `visit` with the entries (in row-major cell order) of every valid
/// GST of `shape` for `set`, values in `1..=set.m()`.
pub fn for_each_gst(shape: &SkewShape, set: &IndexSet, mut visit: impl FnMut(&[Cell], &[u32])) {
    let grid = Grid::new(shape);
    let candidates: Vec<u32> = (1..=set.m()).collect();
    grid.backtrack(&candidates, &gst_step_ok(set), &mut |vals: &[u32]| {
        visit(&grid.cells, vals)
    });
}

/// Every valid GST of `shape` for `set`, in canonical backtracking order.
pub fn enumerate_gst(shape: &SkewShape, set: &IndexSet) -> Vec<GstTableau> {
    let mut out = Vec::new();
    for_each_gst(shape, set, |cells, vals| {
        let entries = cells.iter().copied().zip(vals.iter().copied()).collect();
        out.push(GstTableau::from_parts(shape.clone(), entries));
    });
    out
}

/// A random valid GST of `shape` for `set`, or `None` when none was found
/// within `budget` placements. Not uniform.
pub fn random_gst<R: Rng + ?Sized>(
    shape: &SkewShape,
    set: &IndexSet,
    rng: &mut R,
    budget: usize,
) -> Option<GstTableau> {
    let grid = Grid::new(shape);
    let candidates: Vec<u32> = (1..=set.m()).collect();
    let vals = grid.sample(&candidates, &gst_step_ok(set), rng, budget)?;
    Some(GstTableau::from_parts(
        shape.clone(),
        grid.cells.iter().copied().zip(vals).collect(),
    ))
}

#[derive(Clone, Copy)]
struct RankedEntry {
    entry: PrimedEntry,
    rank: u32,
}

fn ranked_candidates(set: &IndexSet) -> Vec<RankedEntry> {
    let mut candidates: Vec<RankedEntry> = (1..=set.m())
        .flat_map(|v| [PrimedEntry::primed(v), PrimedEntry::unprimed(v)])
        .map(|entry| RankedEntry {
            entry,
            rank: entry.rank(set),
        })
        .collect();
    candidates.sort_by_key(|c| c.rank);
    candidates
}

fn qtab_step_ok(c: RankedEntry, left: Option<RankedEntry>, above: Option<RankedEntry>) -> bool {
    left.is_none_or(|l| l.rank < c.rank || (l.rank == c.rank && !c.entry.primed))
        && above.is_none_or(|a| a.rank < c.rank || (a.rank == c.rank && c.entry.primed))
}

/// Calls `visit` with the entries (in row-major cell order) of every valid
/// Q-tableau of `shape` under `≤_set`, values in `1..=set.m()`.
pub fn for_each_qtab(
    shape: &SkewShape,
    set: &IndexSet,
    mut visit: impl FnMut(&[Cell], &[PrimedEntry]),
) {
    let grid = Grid::new(shape);
    let candidates = ranked_candidates(set);
    let mut entries: Vec<PrimedEntry> = Vec::with_capacity(grid.cells.len());
    grid.backtrack(&candidates, &qtab_step_ok, &mut |vals: &[RankedEntry]| {
        entries.clear();
        entries.extend(vals.iter().map(|c| c.entry));
        visit(&grid.cells, &entries);
    });
}

/// Q-tableau counterpart of [`random_gst`].
pub fn random_qtab<R: Rng + ?Sized>(
    shape: &SkewShape,
    set: &IndexSet,
    rng: &mut R,
    budget: usize,
) -> Option<QTableau> {
    let grid = Grid::new(shape);
    let vals = grid.sample(&ranked_candidates(set), &qtab_step_ok, rng, budget)?;
    let entries = grid
        .cells
        .iter()
        .copied()
        .zip(vals.into_iter().map(|c| c.entry))
        .collect();
    Some(QTableau::from_parts(shape.clone(), entries))
}

/// Every valid Q-tableau of `shape` under `≤_set`, in canonical order.
pub fn enumerate_qtab(shape: &SkewShape, set: &IndexSet) -> Vec<QTableau> {
    let mut out = Vec::new();
    for_each_qtab(shape, set, |cells, vals| {
        let entries = cells.iter().copied().zip(vals.iter().copied()).collect();
        out.push(QTableau::from_parts(shape.clone(), entries));
    });
    out
}

/// Serialized tableau. GST entries omit `primed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub row: usize,
    pub col: usize,
    pub value: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primed: Option<bool>,
}

impl TableauJson {
    fn shape(&self) -> Result<SkewShape> {
        SkewShape::new(
            Partition::new(self.outer.clone())?,
            Partition::new(self.inner.clone())?,
        )
    }
}
