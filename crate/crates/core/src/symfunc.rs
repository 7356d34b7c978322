//! Sparse integer polynomials in `x_1..x_m, t, r` and the generating
//! functions of the tableau families.
//!
//! Everything is computed in finitely many variables. A symmetric identity
//! of degree `d` checked with `m = d` variables holds for the full
//! symmetric functions in that degree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::{for_each_gst, for_each_qtab, IndexSet, ShiftedShape};

/// Exponents of `x_1..x_m`, `t` and `r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: Vec<u32>,
    pub t: u32,
    pub r: u32,
}

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial {
            x: vec![0; m],
            t: 0,
            r: 0,
        }
    }

    pub fn x_var(m: usize, i: usize) -> Self {
        let mut mono = Monomial::one(m);
        mono.x[i - 1] = 1;
        mono
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.t + self.r
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            t: self.t + other.t,
            r: self.r + other.r,
        }
    }
}

/// A polynomial with integer coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    m: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero(m: usize) -> Self {
        MultiPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        MultiPoly::monomial(m, Monomial::one(m), 1)
    }

    pub fn monomial(m: usize, mono: Monomial, coeff: i64) -> Self {
        assert_eq!(mono.x.len(), m, "monomial arity");
        let mut p = MultiPoly::zero(m);
        if coeff != 0 {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn x(m: usize, i: usize) -> Self {
        MultiPoly::monomial(m, Monomial::x_var(m, i), 1)
    }

    pub fn t(m: usize) -> Self {
        MultiPoly::monomial(
            m,
            Monomial {
                t: 1,
                ..Monomial::one(m)
            },
            1,
        )
    }

    pub fn r(m: usize) -> Self {
        MultiPoly::monomial(
            m,
            Monomial {
                r: 1,
                ..Monomial::one(m)
            },
            1,
        )
    }

    /// Sums the given terms; repeated monomials are merged.
    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Result<Self> {
        let mut p = MultiPoly::zero(m);
        for (mono, c) in terms {
            if mono.x.len() != m {
                return Err(Error::MixedVariables(m, mono.x.len()));
            }
            p.add_term(mono, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, mono: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(c).ok_or(Error::Overflow)?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> i64 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    fn same_m(&self, other: &MultiPoly) -> Result<()> {
        if self.m != other.m {
            return Err(Error::MixedVariables(self.m, other.m));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_m(other)?;
        let mut out = self.clone();
        for (mono, &c) in &other.terms {
            out.add_term(mono.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, k: i64) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.m);
        for (mono, &c) in &self.terms {
            out.add_term(mono.clone(), c.checked_mul(k).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_m(other)?;
        let mut out = MultiPoly::zero(self.m);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.times(b), ca.checked_mul(cb).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Replaces each `x_i` by the monomial `images[i - 1]`, which lives in
    /// `target_m` variables; `t` and `r` are kept.
    pub fn substitute(&self, images: &[Monomial], target_m: usize) -> Result<MultiPoly> {
        if images.len() != self.m {
            return precondition(format!("need {} images, got {}", self.m, images.len()));
        }
        if let Some(bad) = images.iter().find(|im| im.x.len() != target_m) {
            return Err(Error::MixedVariables(target_m, bad.x.len()));
        }
        let mut out = MultiPoly::zero(target_m);
        for (mono, &c) in &self.terms {
            let mut image = Monomial {
                x: vec![0; target_m],
                t: mono.t,
                r: mono.r,
            };
            for (&e, im) in mono.x.iter().zip(images) {
                for (slot, &ie) in image.x.iter_mut().zip(&im.x) {
                    *slot += e * ie;
                }
                image.t += e * im.t;
                image.r += e * im.r;
            }
            out.add_term(image, c)?;
        }
        Ok(out)
    }

    /// Exchanges `t` and `r`.
    pub fn swap_tr(&self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(mono, &c)| {
                (
                    Monomial {
                        x: mono.x.clone(),
                        t: mono.r,
                        r: mono.t,
                    },
                    c,
                )
            })
            .collect();
        MultiPoly { m: self.m, terms }
    }

    /// Sets `t = r = 1`.
    pub fn at_tr_one(&self) -> Result<MultiPoly> {
        MultiPoly::from_terms(
            self.m,
            self.terms.iter().map(|(mono, &c)| {
                (
                    Monomial {
                        x: mono.x.clone(),
                        t: 0,
                        r: 0,
                    },
                    c,
                )
            }),
        )
    }

    /// Exchanges `x_i` and `x_j` (1-indexed).
    pub fn swap_x(&self, i: usize, j: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(mono, &c)| {
                let mut mono = mono.clone();
                mono.x.swap(i - 1, j - 1);
                (mono, c)
            })
            .collect();
        MultiPoly { m: self.m, terms }
    }

    /// Pads a polynomial in `t, r` alone (zero `x` variables) out to `m` variables.
    pub fn lift(&self, m: usize) -> Result<MultiPoly> {
        if self.m != 0 {
            return precondition("only polynomials in t and r can be lifted");
        }
        let terms = self
            .terms
            .iter()
            .map(|(mono, &c)| {
                (
                    Monomial {
                        x: vec![0; m],
                        t: mono.t,
                        r: mono.r,
                    },
                    c,
                )
            })
            .collect();
        Ok(MultiPoly { m, terms })
    }

    /// Term list sorted by `t`, then `r`, then `x` exponents lexicographically descending.
    pub fn to_json(&self) -> Vec<TermJson> {
        let mut terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(mono, &c)| TermJson {
                coeff: c,
                x: mono.x.clone(),
                t: mono.t,
                r: mono.r,
            })
            .collect();
        terms.sort_by(|a, b| a.t.cmp(&b.t).then(a.r.cmp(&b.r)).then(b.x.cmp(&a.x)));
        terms
    }

    pub fn from_json(m: usize, terms: &[TermJson]) -> Result<MultiPoly> {
        MultiPoly::from_terms(
            m,
            terms.iter().map(|tj| {
                (
                    Monomial {
                        x: tj.x.clone(),
                        t: tj.t,
                        r: tj.r,
                    },
                    tj.coeff,
                )
            }),
        )
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, term) in self.to_json().iter().enumerate() {
            let mut factors = Vec::new();
            for (name, e) in [("t", term.t), ("r", term.r)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            for (i, &e) in term.x.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{e}", i + 1)),
                }
            }
            let c = term.coeff;
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.unsigned_abs();
            match (abs, factors.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (1, false) => write!(f, "{}", factors.join("*"))?,
                (_, false) => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

/// One serialized term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub x: Vec<u32>,
    pub t: u32,
    pub r: u32,
}

/// Counts keyed by a small exponent vector, merged into a polynomial at the end.
struct Tally {
    counts: HashMap<Vec<u32>, i64>,
    key: Vec<u32>,
}

impl Tally {
    fn new(width: usize) -> Self {
        Tally {
            counts: HashMap::new(),
            key: vec![0; width],
        }
    }

    fn bump(&mut self) -> Result<()> {
        match self.counts.get_mut(self.key.as_slice()) {
            Some(c) => *c = c.checked_add(1).ok_or(Error::Overflow)?,
            None => {
                self.counts.insert(self.key.clone(), 1);
            }
        }
        Ok(())
    }
}

/// `Σ x^wt(T)` over `G(shape, set)` with letters in `1..=set.m()`.
pub fn gst_gf(shape: &SkewShape, set: &IndexSet) -> Result<MultiPoly> {
    let m = set.m() as usize;
    let mut tally = Tally::new(m);
    let mut status = Ok(());
    for_each_gst(shape, set, |_, vals| {
        tally.key.iter_mut().for_each(|e| *e = 0);
        for &v in vals {
            tally.key[v as usize - 1] += 1;
        }
        if status.is_ok() {
            status = tally.bump();
        }
    });
    status?;
    MultiPoly::from_terms(
        m,
        tally
            .counts
            .into_iter()
            .map(|(x, c)| (Monomial { x, t: 0, r: 0 }, c)),
    )
}

/// Skew Schur polynomial in `m` variables, by its own semistandard
/// backtracking (rows weak, columns strict).
pub fn schur_skew_poly(shape: &SkewShape, m: usize) -> Result<MultiPoly> {
    fn go(
        cells: &[Cell],
        k: usize,
        m: u32,
        filling: &mut BTreeMap<Cell, u32>,
        weight: &mut Vec<u32>,
        out: &mut MultiPoly,
    ) -> Result<()> {
        let Some(&cell) = cells.get(k) else {
            return out.add_term(
                Monomial {
                    x: weight.clone(),
                    t: 0,
                    r: 0,
                },
                1,
            );
        };
        let low_left = filling
            .get(&Cell::new(cell.row, cell.col - 1))
            .copied()
            .unwrap_or(1);
        let low_above = filling
            .get(&Cell::new(cell.row - 1, cell.col))
            .map_or(1, |&a| a + 1);
        for v in low_left.max(low_above)..=m {
            filling.insert(cell, v);
            weight[v as usize - 1] += 1;
            go(cells, k + 1, m, filling, weight, out)?;
            weight[v as usize - 1] -= 1;
        }
        filling.remove(&cell);
        Ok(())
    }
    let mut out = MultiPoly::zero(m);
    go(
        &shape.cells(),
        0,
        m as u32,
        &mut BTreeMap::new(),
        &mut vec![0; m],
        &mut out,
    )?;
    Ok(out)
}

/// `Σ x^wt(T) t^P(T) r^U(T)` over all Q-tableaux of `shape` (empty index
/// set) with letters in `1..=m`.
pub fn qtr_poly(shape: &SkewShape, m: usize) -> Result<MultiPoly> {
    let size = shape.size() as u32;
    let mut tally = Tally::new(m + 1);
    let mut status = Ok(());
    for_each_qtab(shape, &IndexSet::empty(m as u32), |_, vals| {
        tally.key.iter_mut().for_each(|e| *e = 0);
        for e in vals {
            tally.key[e.value as usize - 1] += 1;
            tally.key[m] += u32::from(e.primed);
        }
        if status.is_ok() {
            status = tally.bump();
        }
    });
    status?;
    MultiPoly::from_terms(
        m,
        tally.counts.into_iter().map(|(mut key, c)| {
            let primed = key.pop().expect("prime slot");
            (
                Monomial {
                    x: key,
                    t: primed,
                    r: size - primed,
                },
                c,
            )
        }),
    )
}

/// Invariance under every adjacent transposition `x_i ↔ x_{i+1}`.
pub fn is_symmetric_poly(p: &MultiPoly) -> bool {
    (1..p.m()).all(|i| p.swap_x(i, i + 1) == *p)
}

/// Expansion `Σ_ν c_ν s_ν` with coefficients polynomial in `t` and `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    m: usize,
    coeffs: BTreeMap<Partition, MultiPoly>,
}

impl SchurExpansion {
    pub fn new(m: usize) -> Self {
        SchurExpansion {
            m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, MultiPoly> {
        &self.coeffs
    }

    /// Coefficient of `s_ν`, a polynomial in `t` and `r` only.
    pub fn coeff(&self, nu: &Partition) -> MultiPoly {
        self.coeffs
            .get(nu)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(0))
    }

    fn add(&mut self, nu: Partition, c: &MultiPoly) -> Result<()> {
        let slot = self
            .coeffs
            .entry(nu.clone())
            .or_insert_with(|| MultiPoly::zero(0));
        *slot = slot.add(c)?;
        if slot.is_zero() {
            self.coeffs.remove(&nu);
        }
        Ok(())
    }

    /// `Σ_ν c_ν s_ν(x_1..x_m)`.
    pub fn reconstruct(&self) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.m);
        for (nu, c) in &self.coeffs {
            let s = schur_skew_poly(&SkewShape::straight(nu.clone()), self.m)?;
            out = out.add(&s.mul(&c.lift(self.m)?)?)?;
        }
        Ok(out)
    }

    /// Entries sorted by partition, each with its coefficient term list.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .rev()
            .map(|(nu, c)| serde_json::json!({ "partition": nu, "coeff": c.to_json() }))
            .collect();
        serde_json::Value::Array(entries)
    }
}

/// Schur expansion of a polynomial symmetric in the `x` variables, by
/// repeatedly stripping the lexicographically leading exponent.
pub fn schur_expand(p: &MultiPoly) -> Result<SchurExpansion> {
    if !is_symmetric_poly(p) {
        return Err(Error::Expansion("polynomial is not symmetric in x".into()));
    }
    let m = p.m();
    let mut rest = p.clone();
    let mut out = SchurExpansion::new(m);
    let mut cache: HashMap<Partition, MultiPoly> = HashMap::new();
    while let Some(lead) = rest.terms.keys().next_back() {
        let lead_x = lead.x.clone();
        let nu = Partition::new(lead_x.iter().map(|&e| e as usize).collect()).map_err(|_| {
            Error::Expansion(format!("leading exponent {lead_x:?} is not a partition"))
        })?;
        let coeff = MultiPoly::from_terms(
            0,
            rest.terms
                .iter()
                .filter(|(mono, _)| mono.x == lead_x)
                .map(|(mono, &c)| {
                    (
                        Monomial {
                            x: Vec::new(),
                            t: mono.t,
                            r: mono.r,
                        },
                        c,
                    )
                }),
        )?;
        if !cache.contains_key(&nu) {
            cache.insert(
                nu.clone(),
                schur_skew_poly(&SkewShape::straight(nu.clone()), m)?,
            );
        }
        let s = &cache[&nu];
        rest = rest.sub(&s.mul(&coeff.lift(m)?)?)?;
        out.add(nu, &coeff)?;
    }
    Ok(out)
}

/// Coefficient table `c^{ν,k}` read off the Q-tableaux of `shape` whose
/// reading word is Yamanouchi: each contributes `t^P r^U` at `ν = wt(T)`.
pub fn yamanouchi_coeff_table(shape: &SkewShape, m: usize) -> Result<SchurExpansion> {
    let size = shape.size() as u32;
    let cells = shape.cells();
    // Reading order as indices into the row-major cell list, so the word can
    // be read straight off the search buffer.
    let mut primed_order: Vec<usize> = (0..cells.len()).collect();
    primed_order.sort_by(|&a, &b| {
        cells[b]
            .col
            .cmp(&cells[a].col)
            .then(cells[a].row.cmp(&cells[b].row))
    });
    let mut unprimed_order: Vec<usize> = (0..cells.len()).collect();
    unprimed_order.sort_by(|&a, &b| {
        cells[b]
            .row
            .cmp(&cells[a].row)
            .then(cells[a].col.cmp(&cells[b].col))
    });
    let mut tally: BTreeMap<(Vec<usize>, u32), i64> = BTreeMap::new();
    let mut counts = vec![0usize; m + 2];
    for_each_qtab(shape, &IndexSet::empty(m as u32), |_, vals| {
        counts.iter_mut().for_each(|c| *c = 0);
        // suffix condition: scan the word backwards
        let backwards = unprimed_order
            .iter()
            .rev()
            .filter(|&&i| !vals[i].primed)
            .chain(primed_order.iter().rev().filter(|&&i| vals[i].primed));
        for &i in backwards {
            let v = vals[i].value as usize;
            counts[v] += 1;
            if v >= 2 && counts[v] > counts[v - 1] {
                return;
            }
        }
        let primed = vals.iter().filter(|e| e.primed).count() as u32;
        *tally.entry((counts[1..=m].to_vec(), primed)).or_insert(0) += 1;
    });
    let mut table = SchurExpansion::new(m);
    for ((weight, primed), count) in tally {
        let nu = Partition::new(weight.clone())
            .map_err(|_| Error::Invariant(format!("Yamanouchi tableau with weight {weight:?}")))?;
        let term = MultiPoly::monomial(
            0,
            Monomial {
                x: Vec::new(),
                t: primed,
                r: size - primed,
            },
            count,
        );
        table.add(nu, &term)?;
    }
    Ok(table)
}

/// `s_shape(t x_1, r x_1, ..., t x_m, r x_m)`.
pub fn doubled_substitution(shape: &SkewShape, m: usize) -> Result<MultiPoly> {
    let s = schur_skew_poly(shape, 2 * m)?;
    let images: Vec<Monomial> = (1..=2 * m)
        .map(|j| {
            let i = j.div_ceil(2);
            let mut mono = Monomial::x_var(m, i);
            if j % 2 == 1 {
                mono.t = 1;
            } else {
                mono.r = 1;
            }
            mono
        })
        .collect();
    s.substitute(&images, m)
}

/// `Σ x^wt t^P r^U` over primed shifted tableaux of `(outer+δ(n))/(inner+δ(n))`.
pub fn shifted_q_poly(shape: &SkewShape, n: usize, m: usize) -> Result<MultiPoly> {
    let shifted = ShiftedShape::new(shape, n)?;
    let mut out = MultiPoly::zero(m);
    let mut status = Ok(());
    shifted.for_each_filling(m as u32, |placed| {
        let mut mono = Monomial::one(m);
        for e in placed.values() {
            mono.x[e.value as usize - 1] += 1;
            if e.primed {
                mono.t += 1;
            } else {
                mono.r += 1;
            }
        }
        if status.is_ok() {
            status = out.add_term(mono, 1);
        }
    });
    status?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_gst;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(x: &[u32], t: u32, r: u32) -> Monomial {
        Monomial {
            x: x.to_vec(),
            t,
            r,
        }
    }

    fn poly(m: usize, terms: &[(&[u32], u32, u32, i64)]) -> MultiPoly {
        MultiPoly::from_terms(m, terms.iter().map(|&(x, t, r, c)| (mono(x, t, r), c))).unwrap()
    }

    #[test]
    fn arithmetic() {
        let x1 = MultiPoly::x(2, 1);
        let x2 = MultiPoly::x(2, 2);
        let prod = x1.add(&x2).unwrap().mul(&x1.sub(&x2).unwrap()).unwrap();
        assert_eq!(prod, poly(2, &[(&[2, 0], 0, 0, 1), (&[0, 2], 0, 0, -1)]));
        let x1x2 = x1.mul(&x2).unwrap();
        let images = [mono(&[1, 0], 1, 0), mono(&[0, 1], 0, 0)];
        assert_eq!(
            x1x2.substitute(&images, 2).unwrap(),
            poly(2, &[(&[1, 1], 1, 0, 1)])
        );
        assert!(prod.add(&prod.scale(-1).unwrap()).unwrap().is_zero());
        assert!(matches!(
            x1.add(&MultiPoly::x(3, 1)),
            Err(Error::MixedVariables(2, 3))
        ));
    }

    #[test]
    fn overflow_is_reported() {
        let big = MultiPoly::monomial(1, Monomial::one(1), i64::MAX);
        assert_eq!(big.add(&MultiPoly::one(1)), Err(Error::Overflow));
        assert_eq!(big.scale(2), Err(Error::Overflow));
        assert_eq!(
            big.mul(&MultiPoly::monomial(1, Monomial::one(1), 3)),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn gst_gf_examples() {
        for s in IndexSet::all_subsets(2) {
            assert_eq!(
                gst_gf(&shape(&[1], &[]), &s).unwrap(),
                MultiPoly::x(2, 1).add(&MultiPoly::x(2, 2)).unwrap()
            );
            assert_eq!(gst_gf(&shape(&[1], &[1]), &s).unwrap(), MultiPoly::one(2));
        }
        let expected = poly(2, &[(&[2, 1], 0, 0, 1), (&[1, 2], 0, 0, 1)]);
        assert_eq!(
            gst_gf(&shape(&[2, 1], &[]), &IndexSet::empty(2)).unwrap(),
            expected
        );
    }

    #[test]
    fn schur_examples() {
        let s1 = schur_skew_poly(&shape(&[1], &[]), 3).unwrap();
        assert_eq!(
            s1,
            poly(
                3,
                &[
                    (&[1, 0, 0], 0, 0, 1),
                    (&[0, 1, 0], 0, 0, 1),
                    (&[0, 0, 1], 0, 0, 1)
                ]
            )
        );
        let s21 = schur_skew_poly(&shape(&[2, 1], &[]), 2).unwrap();
        assert_eq!(s21, poly(2, &[(&[2, 1], 0, 0, 1), (&[1, 2], 0, 0, 1)]));
        assert!(schur_skew_poly(&shape(&[1, 1, 1], &[]), 2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn schur_agrees_with_gst_gf_for_empty_set() {
        for size in 0..=6 {
            for outer in crate::shapes::partitions_of(size) {
                for inner in outer.sub_partitions() {
                    let sh = SkewShape::new(outer.clone(), inner).unwrap();
                    for m in 1..=3 {
                        assert_eq!(
                            schur_skew_poly(&sh, m).unwrap(),
                            gst_gf(&sh, &IndexSet::empty(m as u32)).unwrap(),
                            "{sh} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn qtr_examples() {
        assert_eq!(
            qtr_poly(&shape(&[1], &[]), 1).unwrap(),
            poly(1, &[(&[1], 1, 0, 1), (&[1], 0, 1, 1)])
        );
        assert_eq!(qtr_poly(&shape(&[1], &[1]), 2).unwrap(), MultiPoly::one(2));
        assert_eq!(
            qtr_poly(&shape(&[2], &[]), 1).unwrap(),
            poly(1, &[(&[2], 1, 1, 1), (&[2], 0, 2, 1)])
        );
    }

    #[test]
    fn symmetry_test() {
        assert!(is_symmetric_poly(
            &MultiPoly::x(2, 1).add(&MultiPoly::x(2, 2)).unwrap()
        ));
        assert!(!is_symmetric_poly(&MultiPoly::x(2, 1)));
        assert!(is_symmetric_poly(
            &qtr_poly(&shape(&[2, 1], &[]), 2).unwrap()
        ));
    }

    #[test]
    fn expansion_examples() {
        let s1 = schur_skew_poly(&shape(&[1], &[]), 2).unwrap();
        let exp = schur_expand(&s1.mul(&s1).unwrap()).unwrap();
        let keys: Vec<&Partition> = exp.coeffs().keys().collect();
        assert_eq!(keys, vec![&part(&[1, 1]), &part(&[2])]);
        assert_eq!(exp.coeff(&part(&[2])), MultiPoly::one(0));
        assert_eq!(exp.coeff(&part(&[1, 1])), MultiPoly::one(0));
        assert!(schur_expand(&MultiPoly::zero(3))
            .unwrap()
            .coeffs()
            .is_empty());
        let s21 = schur_skew_poly(&shape(&[2, 1], &[]), 3).unwrap();
        let exp = schur_expand(&s21).unwrap();
        assert_eq!(exp.coeffs().len(), 1);
        assert_eq!(exp.coeff(&part(&[2, 1])), MultiPoly::one(0));
        assert!(matches!(
            schur_expand(&MultiPoly::x(2, 1)),
            Err(Error::Expansion(_))
        ));
    }

    #[test]
    fn expansion_reconstructs_input() {
        let p = qtr_poly(&shape(&[3, 2], &[1]), 4).unwrap();
        let exp = schur_expand(&p).unwrap();
        assert_eq!(exp.reconstruct().unwrap(), p);
    }

    #[test]
    fn yamanouchi_table_examples() {
        let single = yamanouchi_coeff_table(&shape(&[1], &[]), 1).unwrap();
        assert_eq!(single.coeffs().len(), 1);
        assert_eq!(
            single.coeff(&part(&[1])),
            poly(0, &[(&[], 1, 0, 1), (&[], 0, 1, 1)])
        );
        let empty = yamanouchi_coeff_table(&shape(&[1], &[1]), 2).unwrap();
        assert_eq!(empty.coeffs().len(), 1);
        assert_eq!(empty.coeff(&Partition::empty()), MultiPoly::one(0));
        // Hand count over the eight valid column fillings: 1'/1' and 1'/1
        // read as 11, 1/2' and 1/2 read as 21, the rest end in a lone 2.
        let column = yamanouchi_coeff_table(&shape(&[1, 1], &[]), 2).unwrap();
        assert_eq!(column.coeffs().len(), 2);
        assert_eq!(
            column.coeff(&part(&[2])),
            poly(0, &[(&[], 2, 0, 1), (&[], 1, 1, 1)])
        );
        assert_eq!(
            column.coeff(&part(&[1, 1])),
            poly(0, &[(&[], 1, 1, 1), (&[], 0, 2, 1)])
        );
    }

    #[test]
    fn doubled_substitution_examples() {
        assert_eq!(
            doubled_substitution(&shape(&[1], &[]), 1).unwrap(),
            poly(1, &[(&[1], 1, 0, 1), (&[1], 0, 1, 1)])
        );
        assert_eq!(
            doubled_substitution(&shape(&[1], &[1]), 2).unwrap(),
            MultiPoly::one(2)
        );
        let sh = shape(&[2, 1], &[1]);
        assert_eq!(
            doubled_substitution(&sh, 2).unwrap(),
            qtr_poly(&sh, 2).unwrap()
        );
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(
            shifted_q_poly(&shape(&[1], &[]), 1, 1).unwrap(),
            poly(1, &[(&[1], 1, 0, 1), (&[1], 0, 1, 1)])
        );
        assert_eq!(
            shifted_q_poly(&shape(&[1], &[1]), 1, 2).unwrap(),
            MultiPoly::one(2)
        );
        assert!(shifted_q_poly(&shape(&[1, 1], &[]), 1, 2).is_err());
    }

    #[test]
    fn gst_gf_counts_match_enumeration() {
        let sh = shape(&[3, 2, 1], &[1]);
        for s in IndexSet::all_subsets(3) {
            let total: i64 = gst_gf(&sh, &s).unwrap().terms().values().sum();
            assert_eq!(total as usize, enumerate_gst(&sh, &s).len());
        }
    }

    #[test]
    fn json_term_order() {
        let p = poly(
            2,
            &[(&[1, 0], 0, 1, 1), (&[0, 1], 0, 1, 1), (&[1, 0], 1, 0, -2)],
        );
        let text = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            text,
            r#"[{"coeff":1,"x":[1,0],"t":0,"r":1},{"coeff":1,"x":[0,1],"t":0,"r":1},{"coeff":-2,"x":[1,0],"t":1,"r":0}]"#
        );
        let back: Vec<TermJson> = serde_json::from_str(&text).unwrap();
        assert_eq!(MultiPoly::from_json(2, &back).unwrap(), p);
        assert_eq!(p.to_string(), "r*x1 + r*x2 - 2*t*x1");
    }

    #[test]
    fn yamanouchi_table_matches_reading_words() {
        use crate::tableaux::enumerate_qtab;
        for (outer, inner) in [
            (&[3, 2][..], &[1][..]),
            (&[2, 2, 1], &[]),
            (&[3, 3, 1], &[2, 1]),
        ] {
            let sh = shape(outer, inner);
            let m = sh.size();
            let mut expected = SchurExpansion::new(m);
            for t in enumerate_qtab(&sh, &IndexSet::empty(m as u32)) {
                if t.reading_word().is_yamanouchi() {
                    let (p, u) = t.prime_counts();
                    let mono = Monomial {
                        x: Vec::new(),
                        t: p as u32,
                        r: u as u32,
                    };
                    expected
                        .add(
                            t.weight().as_partition().unwrap(),
                            &MultiPoly::monomial(0, mono, 1),
                        )
                        .unwrap();
                }
            }
            assert_eq!(yamanouchi_coeff_table(&sh, m).unwrap(), expected, "{sh}");
        }
    }
}
