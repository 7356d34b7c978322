//! Weight-preserving bijections between tableau families.
//!
//! * `phi_*`: on staircase GST, moves one letter into (or out of) the index
//!   set using a round of forward then reverse slides.
//! * `psi_*`: on generalized Q-tableaux, moves one letter into (or out of)
//!   the index set by cycling entries along ribbons.
//! * [`transpose_prime_toggle`]: carries `Q(λ'/μ', ∅)` to `Q(λ/μ, ℕ)`,
//!   swapping primed and unprimed counts.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{precondition, Error, Result};
use crate::jdt::{forward_jdt, reverse_jdt};
use crate::shapes::{staircase, Cell, Partition, SkewShape};
use crate::tableaux::{GstTableau, IndexSet, PrimedEntry, QTableau};

/// Outcome of one application of `phi_add_one` with its intermediate strips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTrace {
    pub tableau: GstTableau,
    /// Outer cells emptied by the forward slides, in the order emptied.
    pub outer_vacated: Vec<Cell>,
    /// Inner cells emptied by the reverse slides, in the order emptied.
    pub inner_vacated: Vec<Cell>,
}

fn check_staircase(t: &GstTableau, n: usize) -> Result<()> {
    if *t.shape().outer() != staircase(n) {
        return precondition(format!(
            "outer shape {} is not the staircase of size {n}",
            t.shape().outer()
        ));
    }
    Ok(())
}

/// Adds the letter 1 to the index set. Each 1 is erased, the holes are
/// slid outward (rightmost first), and the emptied outer cells are slid
/// back in (highest first); the cells freed on the inside receive the 1s.
pub fn phi_add_one_traced(t: &GstTableau, set: &IndexSet, n: usize) -> Result<PhiTrace> {
    check_staircase(t, n)?;
    if set.contains(1) {
        return precondition("1 is already in the index set");
    }
    if !t.is_valid(set) {
        return precondition(format!("tableau is not a valid GST for {set}"));
    }
    let shape = t.shape();
    let mut ones: Vec<Cell> = t
        .entries()
        .iter()
        .filter(|(_, &v)| v == 1)
        .map(|(&c, _)| c)
        .collect();
    ones.sort_by_key(|c| std::cmp::Reverse(c.col));

    // The 1s of a valid tableau with 1 ∉ I sit in a horizontal strip along
    // the inner rim, so erasing them leaves a skew tableau of shape δ/ν.
    let mut nu_parts: Vec<usize> = (1..=shape.outer().len())
        .map(|r| shape.inner().row_len(r))
        .collect();
    for c in &ones {
        nu_parts[c.row - 1] += 1;
    }
    let nu = Partition::new(nu_parts)
        .map_err(|_| Error::Invariant("erased 1s do not extend the inner shape".into()))?;
    let entries: BTreeMap<Cell, u32> = t
        .entries()
        .iter()
        .filter(|(_, &v)| v != 1)
        .map(|(&c, &v)| (c, v))
        .collect();
    let mut cur = GstTableau::new(SkewShape::new(shape.outer().clone(), nu)?, entries)?;

    let mut outer_vacated = Vec::with_capacity(ones.len());
    for &hole in &ones {
        let res = forward_jdt(&cur, set, hole)?;
        outer_vacated.push(res.vacated);
        cur = res.tableau;
    }

    let mut refill = outer_vacated.clone();
    refill.sort_by_key(|c| c.row);
    let mut inner_vacated = Vec::with_capacity(ones.len());
    for &hole in &refill {
        let res = reverse_jdt(&cur, set, hole)?;
        inner_vacated.push(res.vacated);
        cur = res.tableau;
    }

    let mut entries = cur.entries().clone();
    for &c in &inner_vacated {
        entries.insert(c, 1);
    }
    let tableau = GstTableau::new(shape.clone(), entries)
        .map_err(|e| Error::Invariant(format!("refilled tableau does not cover the shape: {e}")))?;
    Ok(PhiTrace {
        tableau,
        outer_vacated,
        inner_vacated,
    })
}

pub fn phi_add_one(t: &GstTableau, set: &IndexSet, n: usize) -> Result<GstTableau> {
    phi_add_one_traced(t, set, n).map(|trace| trace.tableau)
}

/// Bijection `G(δ/μ, I) → G(δ/μ, I ∪ {i})` for `i ∉ I`.
///
/// Boxes holding letters below `i` are frozen into the inner shape, the rest
/// is shifted down by `i - 1`, and [`phi_add_one`] runs on what remains.
pub fn phi_add(t: &GstTableau, set: &IndexSet, i: u32, n: usize) -> Result<GstTableau> {
    if i == 0 || i > set.m() {
        return precondition(format!("letter {i} lies outside 1..={}", set.m()));
    }
    if set.contains(i) {
        return precondition(format!("{i} is already in {set}"));
    }
    check_staircase(t, n)?;
    if !t.is_valid(set) {
        return precondition(format!("tableau is not a valid GST for {set}"));
    }
    if i == 1 {
        return phi_add_one(t, set, n);
    }
    let shift = i - 1;
    let shape = t.shape();
    let (frozen, upper): (BTreeMap<Cell, u32>, BTreeMap<Cell, u32>) =
        t.entries().iter().partition(|(_, &v)| v < i);
    let mut nu_parts: Vec<usize> = (1..=shape.outer().len())
        .map(|r| shape.inner().row_len(r))
        .collect();
    for c in frozen.keys() {
        nu_parts[c.row - 1] += 1;
    }
    let nu = Partition::new(nu_parts)
        .map_err(|_| Error::Invariant("frozen letters do not form a partition".into()))?;
    let relabeled = upper.iter().map(|(&c, &v)| (c, v - shift)).collect();
    let sub = GstTableau::new(SkewShape::new(shape.outer().clone(), nu)?, relabeled)?;
    let image = phi_add_one(&sub, &set.shifted_down(shift), n)?;
    let mut entries = frozen;
    entries.extend(image.entries().iter().map(|(&c, &v)| (c, v + shift)));
    GstTableau::new(shape.clone(), entries)
}

/// Inverse of [`phi_add`]: `G(δ/μ, I) → G(δ/μ, I \ {i})` for `i ∈ I`,
/// computed as transpose, add `i` for the complementary set, transpose.
pub fn phi_remove(t: &GstTableau, set: &IndexSet, i: u32, n: usize) -> Result<GstTableau> {
    if !set.contains(i) {
        return precondition(format!("{i} is not in {set}"));
    }
    check_staircase(t, n)?;
    let (transposed, complement) = t.transpose(set)?;
    let added = phi_add(&transposed, &complement, i, n)?;
    let (back, _) = added.transpose(&complement.with(i)?)?;
    Ok(back)
}

/// Weight-preserving bijection `G(δ/μ, from) → G(δ/μ, to)`: letters of
/// `from \ to` are removed in descending order, then letters of `to \ from`
/// are added in ascending order.
pub fn gst_transport(
    t: &GstTableau,
    from: &IndexSet,
    to: &IndexSet,
    n: usize,
) -> Result<GstTableau> {
    if from.m() != to.m() {
        return precondition("index sets use different alphabets");
    }
    let mut cur = t.clone();
    let mut set = from.clone();
    let removals: Vec<u32> = from.members().filter(|&i| !to.contains(i)).rev().collect();
    for i in removals {
        cur = phi_remove(&cur, &set, i, n)?;
        set = set.without(i);
    }
    let additions: Vec<u32> = to.members().filter(|&i| !from.contains(i)).collect();
    for i in additions {
        cur = phi_add(&cur, &set, i, n)?;
        set = set.with(i)?;
    }
    Ok(cur)
}

/// The cells holding `i` or `i'`, split into edge-connected ribbons. Each
/// ribbon is listed from its upper-right end to its bottom-left end.
pub fn ribbons(t: &QTableau, i: u32) -> Result<Vec<Vec<Cell>>> {
    let cells: BTreeSet<Cell> = t
        .entries()
        .iter()
        .filter(|(_, e)| e.value == i)
        .map(|(&c, _)| c)
        .collect();
    let has = |r: usize, c: usize| r >= 1 && c >= 1 && cells.contains(&Cell::new(r, c));
    for c in &cells {
        if has(c.row, c.col + 1) && has(c.row + 1, c.col) && has(c.row + 1, c.col + 1) {
            return Err(Error::Invariant(format!(
                "letter {i} fills a 2x2 block at {c}"
            )));
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // Upper-right ends have no ribbon neighbor above or to the right.
    let mut starts: Vec<Cell> = cells
        .iter()
        .copied()
        .filter(|c| !has(c.row - 1, c.col) && !has(c.row, c.col + 1))
        .collect();
    starts.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
    for start in starts {
        let mut path = vec![start];
        let mut cur = start;
        loop {
            let next = if has(cur.row, cur.col - 1) {
                Cell::new(cur.row, cur.col - 1)
            } else if has(cur.row + 1, cur.col) {
                Cell::new(cur.row + 1, cur.col)
            } else {
                break;
            };
            path.push(next);
            cur = next;
        }
        for c in &path {
            if !seen.insert(*c) {
                return Err(Error::Invariant(format!("ribbon walks overlap at {c}")));
            }
        }
        out.push(path);
    }
    if seen.len() != cells.len() {
        return Err(Error::Invariant(format!(
            "letter {i} cells are not a union of ribbons"
        )));
    }
    Ok(out)
}

fn cycle_ribbons(t: &QTableau, i: u32, toward_bottom_left: bool) -> Result<QTableau> {
    let mut entries = t.entries().clone();
    for path in ribbons(t, i)? {
        let vals: Vec<PrimedEntry> = path.iter().map(|c| t.entries()[c]).collect();
        let len = path.len();
        for (k, c) in path.iter().enumerate() {
            // Moving toward the bottom-left end, cell k receives the entry of
            // cell k - 1; the upper-right end receives the bottom-left entry.
            let src = if toward_bottom_left {
                (k + len - 1) % len
            } else {
                (k + 1) % len
            };
            entries.insert(*c, vals[src]);
        }
    }
    Ok(QTableau::from_parts(t.shape().clone(), entries))
}

/// `Q(λ/μ, I) → Q(λ/μ, I ∪ {i})` for `i ∉ I`.
pub fn psi_cycle(t: &QTableau, set: &IndexSet, i: u32) -> Result<QTableau> {
    if set.contains(i) {
        return precondition(format!("{i} is already in {set}"));
    }
    if !t.is_valid(set) {
        return precondition(format!("tableau is not a valid Q-tableau for {set}"));
    }
    cycle_ribbons(t, i, true)
}

/// `Q(λ/μ, I) → Q(λ/μ, I \ {i})` for `i ∈ I`; inverse of [`psi_cycle`].
pub fn psi_inverse(t: &QTableau, set: &IndexSet, i: u32) -> Result<QTableau> {
    if !set.contains(i) {
        return precondition(format!("{i} is not in {set}"));
    }
    if !t.is_valid(set) {
        return precondition(format!("tableau is not a valid Q-tableau for {set}"));
    }
    cycle_ribbons(t, i, false)
}

/// Bijection `Q(λ/μ, from) → Q(λ/μ, to)` preserving weight and prime
/// counts; removals descending, then additions ascending.
pub fn qtab_transport(t: &QTableau, from: &IndexSet, to: &IndexSet) -> Result<QTableau> {
    if from.m() != to.m() {
        return precondition("index sets use different alphabets");
    }
    let mut cur = t.clone();
    let mut set = from.clone();
    let removals: Vec<u32> = from.members().filter(|&i| !to.contains(i)).rev().collect();
    for i in removals {
        cur = psi_inverse(&cur, &set, i)?;
        set = set.without(i);
    }
    let additions: Vec<u32> = to.members().filter(|&i| !from.contains(i)).collect();
    for i in additions {
        cur = psi_cycle(&cur, &set, i)?;
        set = set.with(i)?;
    }
    Ok(cur)
}

/// Transposes a tableau of `Q(λ'/μ', ∅)` and toggles every prime, landing
/// in `Q(λ/μ, {1..m})` with primed and unprimed counts exchanged.
pub fn transpose_prime_toggle(t: &QTableau, m: u32) -> Result<QTableau> {
    if !t.is_valid(&IndexSet::empty(m)) {
        return precondition("tableau is not a valid Q-tableau for the empty set");
    }
    let entries = t
        .entries()
        .iter()
        .map(|(c, e)| (c.transpose(), e.toggled()))
        .collect();
    Ok(QTableau::from_parts(t.shape().conjugate(), entries))
}
