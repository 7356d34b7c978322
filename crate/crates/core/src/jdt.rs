//! Jeu de taquin slides whose tie-breaking depends on an index set.
//!
//! A forward slide opens a hole at a corner of the inner shape and pushes it
//! out to a corner of the outer shape; a reverse slide goes the other way.
//! When the two candidate boxes hold the same letter `v`, the horizontal
//! neighbor wins if `v ∈ I` and the vertical one otherwise. The returned
//! tableau already carries the updated shape.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::{content, Content, GstTableau, IndexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideResult {
    pub tableau: GstTableau,
    /// The last box emptied.
    pub vacated: Cell,
    /// Every position the hole occupied, starting at the target cell.
    pub path: Vec<Cell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Reverse,
}

/// Picks between the horizontal and vertical neighbor. `prefer_greater`
/// selects the reverse rule.
fn choose(horizontal: Content, vertical: Content, set: &IndexSet, prefer_greater: bool) -> bool {
    let ord = horizontal.cmp(&vertical);
    let ord = if prefer_greater { ord.reverse() } else { ord };
    match ord {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => matches!(horizontal, Content::Finite(v) if set.contains(v)),
    }
}

fn run_slide(
    entries: &mut BTreeMap<Cell, u32>,
    inner: &Partition,
    set: &IndexSet,
    hole: Cell,
    direction: Direction,
) -> Vec<Cell> {
    let mut cur = hole;
    let mut path = vec![hole];
    loop {
        let (horizontal, vertical) = match direction {
            Direction::Forward => (
                Cell::new(cur.row, cur.col + 1),
                Cell::new(cur.row + 1, cur.col),
            ),
            Direction::Reverse => (
                Cell::new(cur.row, cur.col - 1),
                Cell::new(cur.row - 1, cur.col),
            ),
        };
        let ch = content(entries, inner, horizontal);
        let cv = content(entries, inner, vertical);
        let pick = if choose(ch, cv, set, direction == Direction::Reverse) {
            horizontal
        } else {
            vertical
        };
        let Some(v) = entries.remove(&pick) else {
            break;
        };
        entries.insert(cur, v);
        cur = pick;
        path.push(cur);
    }
    path
}

/// Forward slide into `hole`, a removable corner of the inner shape.
pub fn forward_jdt(t: &GstTableau, set: &IndexSet, hole: Cell) -> Result<SlideResult> {
    let shape = t.shape();
    if !shape.inner().removable_cells().contains(&hole) {
        return precondition(format!(
            "{hole} is not a removable cell of {}",
            shape.inner()
        ));
    }
    if !t.is_valid(set) {
        return precondition(format!("tableau is not a valid GST for {set}"));
    }
    let inner = shape.inner().without_cell(hole)?;
    let mut entries = t.entries().clone();
    let path = run_slide(&mut entries, &inner, set, hole, Direction::Forward);
    let vacated = *path.last().expect("path starts at the hole");
    let outer = shape.outer().without_cell(vacated).map_err(|_| {
        Error::Invariant(format!(
            "forward slide stopped at {vacated}, not an outer corner"
        ))
    })?;
    let tableau = GstTableau::from_parts(SkewShape::new(outer, inner)?, entries);
    debug_assert!(tableau.is_valid(set), "forward slide broke validity");
    Ok(SlideResult {
        tableau,
        vacated,
        path,
    })
}

/// Reverse slide into `hole`, an addable cell of the outer shape.
pub fn reverse_jdt(t: &GstTableau, set: &IndexSet, hole: Cell) -> Result<SlideResult> {
    let shape = t.shape();
    if !shape.outer().addable_cells().contains(&hole) {
        return precondition(format!(
            "{hole} is not an addable cell of {}",
            shape.outer()
        ));
    }
    if !t.is_valid(set) {
        return precondition(format!("tableau is not a valid GST for {set}"));
    }
    let outer = shape.outer().with_cell(hole)?;
    let mut entries = t.entries().clone();
    let path = run_slide(&mut entries, shape.inner(), set, hole, Direction::Reverse);
    let vacated = *path.last().expect("path starts at the hole");
    let inner = shape.inner().with_cell(vacated).map_err(|_| {
        Error::Invariant(format!(
            "reverse slide stopped at {vacated}, not an inner corner"
        ))
    })?;
    let tableau = GstTableau::from_parts(SkewShape::new(outer, inner)?, entries);
    debug_assert!(tableau.is_valid(set), "reverse slide broke validity");
    Ok(SlideResult {
        tableau,
        vacated,
        path,
    })
}

pub fn slide(
    t: &GstTableau,
    set: &IndexSet,
    hole: Cell,
    direction: Direction,
) -> Result<SlideResult> {
    match direction {
        Direction::Forward => forward_jdt(t, set, hole),
        Direction::Reverse => reverse_jdt(t, set, hole),
    }
}

/// A failed slide law together with the slides that exposed it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: &'static str,
    pub holes: Vec<Cell>,
    pub vacated: Vec<Cell>,
}

fn path_is_monotone(path: &[Cell], direction: Direction) -> bool {
    path.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        match direction {
            Direction::Forward => {
                (b.row == a.row && b.col == a.col + 1) || (b.col == a.col && b.row == a.row + 1)
            }
            Direction::Reverse => {
                (b.row == a.row && b.col + 1 == a.col) || (b.col == a.col && b.row + 1 == a.row)
            }
        }
    })
}

/// Checks the single-slide laws for one slide: validity of the result,
/// path monotonicity, and that the opposite slide into the vacated cell
/// restores `t` (J1 for forward, J2 for reverse).
pub fn check_round_trip(
    t: &GstTableau,
    set: &IndexSet,
    hole: Cell,
    direction: Direction,
) -> Result<Option<LawViolation>> {
    let (law, back_dir) = match direction {
        Direction::Forward => ("J1", Direction::Reverse),
        Direction::Reverse => ("J2", Direction::Forward),
    };
    let res = slide(t, set, hole, direction)?;
    let violation = |law| LawViolation {
        law,
        holes: vec![hole],
        vacated: vec![res.vacated],
    };
    if !res.tableau.is_valid(set) {
        return Ok(Some(violation("validity")));
    }
    if !path_is_monotone(&res.path, direction) {
        return Ok(Some(violation("monotone-path")));
    }
    let back = slide(&res.tableau, set, res.vacated, back_dir)?;
    if back.tableau != *t || back.vacated != hole {
        return Ok(Some(violation(law)));
    }
    Ok(None)
}

/// Checks J3/J4 (forward) or J5/J6 (reverse) for the ordered pair of holes
/// `(first, second)`. Returns `None` when the pair falls under neither law.
pub fn check_order_law(
    t: &GstTableau,
    set: &IndexSet,
    first: Cell,
    second: Cell,
    direction: Direction,
) -> Result<Option<LawViolation>> {
    let r1 = slide(t, set, first, direction)?;
    let r2 = slide(&r1.tableau, set, second, direction)?;
    let (v1, v2) = (r1.vacated, r2.vacated);
    let ok = match direction {
        // First into b_kl, then into b_ij; emptied b_k'l' then b_i'j'.
        Direction::Forward => {
            let (k, l, i, j) = (first.row, first.col, second.row, second.col);
            let (kp, lp, ip, jp) = (v1.row, v1.col, v2.row, v2.col);
            if i >= k && j < l {
                Some(("J3", ip >= kp && jp < lp))
            } else if i < k && j >= l {
                Some(("J4", ip < kp && jp >= lp))
            } else {
                None
            }
        }
        // First into b_ij, then into b_kl; emptied b_i'j' then b_k'l'.
        Direction::Reverse => {
            let (i, j, k, l) = (first.row, first.col, second.row, second.col);
            let (ip, jp, kp, lp) = (v1.row, v1.col, v2.row, v2.col);
            if i >= k && j < l {
                Some(("J5", ip >= kp && jp < lp))
            } else if i < k && j >= l {
                Some(("J6", ip < kp && jp >= lp))
            } else {
                None
            }
        }
    };
    Ok(match ok {
        Some((law, false)) => Some(LawViolation {
            law,
            holes: vec![first, second],
            vacated: vec![v1, v2],
        }),
        _ => None,
    })
}

/// Runs every legal single slide and every legal pair of same-direction
/// slides from `t`, checking J1–J6. Returns the first violation found.
pub fn check_slide_laws(t: &GstTableau, set: &IndexSet) -> Result<Option<LawViolation>> {
    for direction in [Direction::Forward, Direction::Reverse] {
        for first in legal_holes(t, direction) {
            if let Some(v) = check_round_trip(t, set, first, direction)? {
                return Ok(Some(v));
            }
            let after = slide(t, set, first, direction)?.tableau;
            for second in legal_holes(&after, direction) {
                if let Some(v) = check_order_law(t, set, first, second, direction)? {
                    return Ok(Some(v));
                }
            }
        }
    }
    Ok(None)
}

/// Cells a slide in the given direction may start from.
pub fn legal_holes(t: &GstTableau, direction: Direction) -> Vec<Cell> {
    match direction {
        Direction::Forward => t.shape().inner().removable_cells(),
        Direction::Reverse => t.shape().outer().addable_cells(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::staircase;
    use crate::tableaux::enumerate_gst;

    fn set(members: &[u32], m: u32) -> IndexSet {
        IndexSet::new(members.iter().copied(), m).unwrap()
    }

    fn tie_tableau() -> GstTableau {
        GstTableau::from_triples(&[2, 1], &[1], &[(1, 2, 1), (2, 1, 1)]).unwrap()
    }

    #[test]
    fn forward_tie_goes_down_outside_the_set() {
        let res = forward_jdt(&tie_tableau(), &set(&[], 1), Cell::new(1, 1)).unwrap();
        let expected = GstTableau::from_triples(&[2], &[], &[(1, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(res.tableau, expected);
        assert_eq!(res.vacated, Cell::new(2, 1));
        assert_eq!(res.path, vec![Cell::new(1, 1), Cell::new(2, 1)]);
    }

    #[test]
    fn forward_tie_goes_right_inside_the_set() {
        let res = forward_jdt(&tie_tableau(), &set(&[1], 1), Cell::new(1, 1)).unwrap();
        let expected = GstTableau::from_triples(&[1, 1], &[], &[(1, 1, 1), (2, 1, 1)]).unwrap();
        assert_eq!(res.tableau, expected);
        assert_eq!(res.vacated, Cell::new(1, 2));
    }

    #[test]
    fn forward_immediate_stop() {
        let t = GstTableau::from_triples(&[1, 1], &[1, 1], &[]).unwrap();
        let res = forward_jdt(&t, &set(&[], 2), Cell::new(2, 1)).unwrap();
        assert_eq!(res.vacated, Cell::new(2, 1));
        assert_eq!(res.path, vec![Cell::new(2, 1)]);
        assert!(res.tableau.is_empty());
        assert_eq!(res.tableau.shape().outer().parts(), &[1]);
    }

    #[test]
    fn reverse_moves_the_greater_neighbor() {
        let t = GstTableau::from_triples(&[1], &[], &[(1, 1, 2)]).unwrap();
        let res = reverse_jdt(&t, &set(&[], 2), Cell::new(1, 2)).unwrap();
        assert_eq!(res.vacated, Cell::new(1, 1));
        assert_eq!(res.path, vec![Cell::new(1, 2), Cell::new(1, 1)]);
        assert_eq!(
            res.tableau,
            GstTableau::from_triples(&[2], &[1], &[(1, 2, 2)]).unwrap()
        );
    }

    #[test]
    fn reverse_immediate_stop() {
        let t = GstTableau::from_triples(&[1], &[1], &[]).unwrap();
        let res = reverse_jdt(&t, &set(&[], 1), Cell::new(2, 1)).unwrap();
        assert_eq!(res.vacated, Cell::new(2, 1));
        assert_eq!(res.path, vec![Cell::new(2, 1)]);
    }

    #[test]
    fn illegal_holes() {
        let t = tie_tableau();
        assert!(matches!(
            forward_jdt(&t, &set(&[], 1), Cell::new(1, 2)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            reverse_jdt(&t, &set(&[], 1), Cell::new(1, 1)),
            Err(Error::Precondition(_))
        ));
        // Invalid input tableau.
        let bad = GstTableau::from_triples(&[2], &[], &[(1, 1, 2), (1, 2, 1)]).unwrap();
        assert!(reverse_jdt(&bad, &set(&[], 2), Cell::new(1, 3)).is_err());
    }

    #[test]
    fn slide_laws_on_small_staircases() {
        for n in 1..=3 {
            for mu in staircase(n).sub_partitions() {
                let shape = SkewShape::new(staircase(n), mu).unwrap();
                for s in IndexSet::all_subsets(2) {
                    for t in enumerate_gst(&shape, &s) {
                        assert_eq!(check_slide_laws(&t, &s).unwrap(), None, "{t:?} {s}");
                    }
                }
            }
        }
    }
}
