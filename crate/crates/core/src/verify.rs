//! Theorem checks, parameter sweeps and report output.
//!
//! Each check returns `Ok(None)` on success and `Ok(Some(counterexample))`
//! when an identity or bijection property fails. `Err` is reserved for
//! unusable parameters and internal errors.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bijections::{
    gst_transport, phi_add_one_traced, qtab_transport, transpose_prime_toggle,
};
use crate::error::{precondition, Result};
use crate::jdt::check_slide_laws;
use crate::shapes::{
    is_horizontal_strip, is_vertical_strip, partitions_of, staircase, Partition, SkewShape,
};
use crate::symfunc::{
    doubled_substitution, gst_gf, qtr_poly, schur_skew_poly, shifted_q_poly,
    yamanouchi_coeff_table, MultiPoly,
};
use crate::tableaux::{
    enumerate_gst, enumerate_qtab, gst_qtab_relabel, GstTableau, IndexSet, QTableau,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "thm1")]
    Thm1,
    #[serde(rename = "thm2")]
    Thm2,
    #[serde(rename = "thm3")]
    Thm3,
    #[serde(rename = "thm4")]
    Thm4,
    #[serde(rename = "cor-tr-sym")]
    CorTrSym,
    #[serde(rename = "prop-tr")]
    PropTr,
    #[serde(rename = "cor-final")]
    CorFinal,
    #[serde(rename = "jdt-laws")]
    JdtLaws,
    #[serde(rename = "psi-laws")]
    PsiLaws,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::CorTrSym,
        TheoremId::PropTr,
        TheoremId::CorFinal,
        TheoremId::JdtLaws,
        TheoremId::PsiLaws,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::CorTrSym => "cor-tr-sym",
            TheoremId::PropTr => "prop-tr",
            TheoremId::CorFinal => "cor-final",
            TheoremId::JdtLaws => "jdt-laws",
            TheoremId::PsiLaws => "psi-laws",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

/// Raw parameters; anything left out gets a per-theorem default.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set2: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    /// Skip the `μ ⊆ δ(n)` requirement; results are then exploratory.
    #[serde(skip)]
    pub allow_outside_staircase: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub pass: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    /// Wall time; kept out of the JSON form so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

const DEFAULT_M: u32 = 3;

/// Seed for randomized checks: `STAIRTAB_SEED` when set, else a fixed default.
pub fn seed_from_env() -> u64 {
    std::env::var("STAIRTAB_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0x5EED)
}

pub fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env())
}

/// Smallest `n` with `μ ⊆ δ(n)`.
fn staircase_size_for(mu: &Partition) -> usize {
    (0..)
        .find(|&n| staircase(n).contains(mu))
        .expect("every partition fits in a large staircase")
}

fn index_set(members: &Option<Vec<u32>>, m: u32, default: IndexSet) -> Result<IndexSet> {
    match members {
        Some(list) => IndexSet::new(list.iter().copied(), m),
        None => Ok(default),
    }
}

struct Resolved {
    params: Params,
    exploratory: bool,
}

fn resolve(theorem: TheoremId, raw: &Params) -> Result<Resolved> {
    let m = raw.m.unwrap_or(DEFAULT_M);
    if m == 0 {
        return precondition("m must be at least 1");
    }
    let mu = raw.mu.clone().unwrap_or_default();
    let mut out = Params {
        m: Some(m),
        mu: Some(mu.clone()),
        ..Params::default()
    };
    let uses_lambda = matches!(
        theorem,
        TheoremId::Thm3 | TheoremId::PropTr | TheoremId::CorFinal | TheoremId::PsiLaws
    );
    let n = if uses_lambda {
        let Some(lambda) = raw.lambda.clone() else {
            return precondition(format!("{theorem} needs --lambda"));
        };
        if !lambda.contains(&mu) {
            return precondition(format!("mu {mu} is not contained in lambda {lambda}"));
        }
        let mut n_default = lambda.len().max(staircase_size_for(&mu));
        if theorem == TheoremId::CorFinal {
            n_default = n_default.max(lambda.first_part());
        }
        let n = raw.n.unwrap_or(n_default);
        if lambda.len() > n {
            return precondition(format!("lambda {lambda} has more than n = {n} parts"));
        }
        if theorem == TheoremId::CorFinal && lambda.first_part() > n {
            return precondition(format!(
                "cor-final needs lambda_1 <= n, got {} > {n}",
                lambda.first_part()
            ));
        }
        out.lambda = Some(lambda);
        n
    } else {
        let Some(n) = raw.n else {
            return precondition(format!("{theorem} needs --n"));
        };
        if n == 0 {
            return precondition("n must be at least 1");
        }
        n
    };
    out.n = Some(n);
    let inside = staircase(n).contains(&mu);
    let exploratory = !inside && uses_lambda && raw.allow_outside_staircase;
    if !inside && !exploratory {
        return precondition(format!(
            "mu {mu} is not contained in the staircase of size {n}"
        ));
    }
    match theorem {
        TheoremId::Thm1 | TheoremId::PsiLaws => {
            let from = index_set(&raw.set, m, IndexSet::empty(m))?;
            let to = index_set(&raw.set2, m, IndexSet::full(m))?;
            out.set = Some(from.members().collect());
            out.set2 = Some(to.members().collect());
        }
        TheoremId::JdtLaws => {
            let set = index_set(&raw.set, m, IndexSet::empty(m))?;
            out.set = Some(set.members().collect());
        }
        _ => {}
    }
    Ok(Resolved {
        params: out,
        exploratory,
    })
}

fn resolved_shape(p: &Params) -> Result<SkewShape> {
    let mu = p.mu.clone().unwrap_or_default();
    match &p.lambda {
        Some(lambda) => SkewShape::new(lambda.clone(), mu),
        None => SkewShape::new(staircase(p.n.unwrap_or(0)), mu),
    }
}

fn resolved_set(members: &Option<Vec<u32>>, m: u32) -> Result<IndexSet> {
    IndexSet::new(members.iter().flatten().copied(), m)
}

/// Runs one theorem check at the given parameters.
pub fn run_verify(theorem: TheoremId, raw: &Params) -> Result<VerifyReport> {
    let Resolved {
        params,
        exploratory,
    } = resolve(theorem, raw)?;
    let start = Instant::now();
    let m = params.m.expect("resolved");
    let n = params.n.expect("resolved");
    let mu = params.mu.clone().expect("resolved");
    let shape = resolved_shape(&params)?;
    let counterexample = match theorem {
        TheoremId::Thm1 => check_thm1(
            n,
            &mu,
            &resolved_set(&params.set, m)?,
            &resolved_set(&params.set2, m)?,
        )?,
        TheoremId::Thm2 => check_thm2(n, &mu, m as usize)?,
        TheoremId::Thm3 => check_thm3(&shape, m as usize)?,
        TheoremId::Thm4 => check_thm4(n, &mu, m as usize)?,
        TheoremId::CorTrSym => check_cor_tr_sym(n, &mu, m as usize)?,
        TheoremId::PropTr => check_prop_tr(&shape, m)?,
        TheoremId::CorFinal => check_cor_final(&shape, n, m as usize)?,
        TheoremId::JdtLaws => check_jdt_laws(n, &mu, &resolved_set(&params.set, m)?)?,
        TheoremId::PsiLaws => check_psi_laws(
            &shape,
            &resolved_set(&params.set, m)?,
            &resolved_set(&params.set2, m)?,
        )?,
    };
    Ok(VerifyReport {
        theorem,
        params,
        pass: counterexample.is_none(),
        exploratory,
        counterexample,
        elapsed: start.elapsed(),
    })
}

fn poly_mismatch(reason: &str, lhs: &MultiPoly, rhs: &MultiPoly) -> Option<Value> {
    (lhs != rhs).then(|| json!({ "reason": reason, "lhs": lhs.to_json(), "rhs": rhs.to_json() }))
}

fn gst_failure(reason: &str, t: &GstTableau, image: Option<&GstTableau>) -> Value {
    json!({ "reason": reason, "tableau": t.to_json(), "image": image.map(GstTableau::to_json) })
}

fn qtab_failure(reason: &str, t: &QTableau, image: Option<&QTableau>) -> Value {
    json!({ "reason": reason, "tableau": t.to_json(), "image": image.map(QTableau::to_json) })
}

/// Checks that `gst_transport` is a weight-preserving bijection
/// `G(δ(n)/μ, from) → G(δ(n)/μ, to)` element by element, that the
/// generating functions agree, and that the strips inside each `φ` round
/// have the expected form.
pub fn check_thm1(
    n: usize,
    mu: &Partition,
    from: &IndexSet,
    to: &IndexSet,
) -> Result<Option<Value>> {
    let shape = SkewShape::new(staircase(n), mu.clone())?;
    let domain = enumerate_gst(&shape, from);
    let codomain: BTreeSet<GstTableau> = enumerate_gst(&shape, to).into_iter().collect();
    let mut image = BTreeSet::new();
    for t in &domain {
        let u = gst_transport(t, from, to, n)?;
        if !u.is_valid(to) {
            return Ok(Some(gst_failure(
                "image is not valid for the target set",
                t,
                Some(&u),
            )));
        }
        if u.weight() != t.weight() {
            return Ok(Some(gst_failure("weight changed", t, Some(&u))));
        }
        if gst_transport(&u, to, from, n)? != *t {
            return Ok(Some(gst_failure(
                "transport back does not return the tableau",
                t,
                Some(&u),
            )));
        }
        if !image.insert(u.clone()) {
            return Ok(Some(gst_failure(
                "two tableaux share an image",
                t,
                Some(&u),
            )));
        }
        if !from.contains(1) {
            let trace = phi_add_one_traced(t, from, n)?;
            let outer_ok = is_horizontal_strip(&trace.outer_vacated)
                && is_vertical_strip(&trace.outer_vacated);
            if !outer_ok || !is_vertical_strip(&trace.inner_vacated) {
                return Ok(Some(gst_failure(
                    "vacated cells are not strips",
                    t,
                    Some(&trace.tableau),
                )));
            }
        }
    }
    if let Some(missed) = codomain.difference(&image).next() {
        return Ok(Some(gst_failure(
            "target tableau not reached",
            missed,
            None,
        )));
    }
    Ok(poly_mismatch(
        "generating functions differ",
        &gst_gf(&shape, from)?,
        &gst_gf(&shape, to)?,
    ))
}

/// `s_{δ/μ} = s_{δ/μ'}` in `m` variables.
pub fn check_thm2(n: usize, mu: &Partition, m: usize) -> Result<Option<Value>> {
    let lhs = schur_skew_poly(&SkewShape::new(staircase(n), mu.clone())?, m)?;
    let rhs = schur_skew_poly(&SkewShape::new(staircase(n), mu.conjugate())?, m)?;
    Ok(poly_mismatch("s(delta/mu) != s(delta/mu')", &lhs, &rhs))
}

/// `Q^tr` equals the Schur sum weighted by Yamanouchi Q-tableaux.
pub fn check_thm3(shape: &SkewShape, m: usize) -> Result<Option<Value>> {
    let lhs = qtr_poly(shape, m)?;
    let rhs = yamanouchi_coeff_table(shape, m)?.reconstruct()?;
    Ok(poly_mismatch("Q^tr != Yamanouchi Schur sum", &lhs, &rhs))
}

/// `s_{δ/μ}(tx_1, rx_1, ...) = Q^tr_{δ/μ}`, through every link of the chain:
/// the doubled Schur polynomial, the odd-set GST generating function, and
/// the relabeling onto Q-tableaux.
pub fn check_thm4(n: usize, mu: &Partition, m: usize) -> Result<Option<Value>> {
    let shape = SkewShape::new(staircase(n), mu.clone())?;
    let doubled = doubled_substitution(&shape, m)?;
    let qtr = qtr_poly(&shape, m)?;
    if let Some(bad) = poly_mismatch("doubled Schur != Q^tr", &doubled, &qtr) {
        return Ok(Some(bad));
    }
    let odds = IndexSet::odds(2 * m as u32);
    let relabeled: BTreeSet<QTableau> = enumerate_gst(&shape, &odds)
        .iter()
        .map(gst_qtab_relabel)
        .collect();
    let qtabs: BTreeSet<QTableau> = enumerate_qtab(&shape, &IndexSet::empty(m as u32))
        .into_iter()
        .collect();
    if relabeled != qtabs {
        let witness = relabeled
            .symmetric_difference(&qtabs)
            .next()
            .expect("sets differ");
        return Ok(Some(qtab_failure(
            "relabeling is not onto Q(delta/mu)",
            witness,
            None,
        )));
    }
    let empty_gf = gst_gf(&shape, &IndexSet::empty(2 * m as u32))?;
    let odd_gf = gst_gf(&shape, &odds)?;
    Ok(poly_mismatch(
        "G(delta/mu, odds) and G(delta/mu, {}) differ",
        &odd_gf,
        &empty_gf,
    ))
}

/// `Q^tr_{δ/μ}` is symmetric in `t, r` and equals `Q^tr_{δ/μ'}`.
pub fn check_cor_tr_sym(n: usize, mu: &Partition, m: usize) -> Result<Option<Value>> {
    let q = qtr_poly(&SkewShape::new(staircase(n), mu.clone())?, m)?;
    if let Some(bad) = poly_mismatch("Q^tr not symmetric in t, r", &q, &q.swap_tr()) {
        return Ok(Some(bad));
    }
    let conj = qtr_poly(&SkewShape::new(staircase(n), mu.conjugate())?, m)?;
    Ok(poly_mismatch(
        "Q^tr(delta/mu) != Q^tr(delta/mu')",
        &q,
        &conj,
    ))
}

/// `Q^tr_{λ/μ}(t, r) = Q^tr_{λ'/μ'}(r, t)`, both as polynomials and through
/// the explicit bijection `Q(λ'/μ', ∅) → Q(λ/μ, ∅)`.
pub fn check_prop_tr(shape: &SkewShape, m: u32) -> Result<Option<Value>> {
    let conj = shape.conjugate();
    let lhs = qtr_poly(shape, m as usize)?.swap_tr();
    let rhs = qtr_poly(&conj, m as usize)?;
    if let Some(bad) = poly_mismatch(
        "Q^tr(lambda/mu) with t,r swapped != Q^tr(lambda'/mu')",
        &lhs,
        &rhs,
    ) {
        return Ok(Some(bad));
    }
    let empty = IndexSet::empty(m);
    let full = IndexSet::full(m);
    let target: BTreeSet<QTableau> = enumerate_qtab(shape, &empty).into_iter().collect();
    let mut image = BTreeSet::new();
    for t in enumerate_qtab(&conj, &empty) {
        let u = qtab_transport(&transpose_prime_toggle(&t, m)?, &full, &empty)?;
        let (p, q) = t.prime_counts();
        if !u.is_valid(&empty) || u.weight() != t.weight() || u.prime_counts() != (q, p) {
            return Ok(Some(qtab_failure(
                "transpose-toggle transport broke a property",
                &t,
                Some(&u),
            )));
        }
        if !image.insert(u.clone()) {
            return Ok(Some(qtab_failure(
                "two tableaux share an image",
                &t,
                Some(&u),
            )));
        }
    }
    if let Some(missed) = target.difference(&image).next() {
        return Ok(Some(qtab_failure(
            "target tableau not reached",
            missed,
            None,
        )));
    }
    Ok(None)
}

/// At `t = r = 1` and `λ_1 ≤ n`: `Q_{λ+δ/μ+δ} = Q_{λ'+δ/μ'+δ}`, via `Q^tr`
/// and separately via shifted tableaux.
pub fn check_cor_final(shape: &SkewShape, n: usize, m: usize) -> Result<Option<Value>> {
    let conj = shape.conjugate();
    let lhs = qtr_poly(shape, m)?.at_tr_one()?;
    let rhs = qtr_poly(&conj, m)?.at_tr_one()?;
    if let Some(bad) = poly_mismatch(
        "Q(lambda+delta/mu+delta) != Q(lambda'+delta/mu'+delta)",
        &lhs,
        &rhs,
    ) {
        return Ok(Some(bad));
    }
    let shifted_lhs = shifted_q_poly(shape, n, m)?.at_tr_one()?;
    let shifted_rhs = shifted_q_poly(&conj, n, m)?.at_tr_one()?;
    if let Some(bad) = poly_mismatch(
        "shifted generating function differs from Q^tr",
        &shifted_lhs,
        &lhs,
    ) {
        return Ok(Some(bad));
    }
    Ok(poly_mismatch(
        "shifted Q functions differ",
        &shifted_lhs,
        &shifted_rhs,
    ))
}

/// J1–J6 for every tableau of `G(δ(n)/μ, set)` and every legal slide pair.
pub fn check_jdt_laws(n: usize, mu: &Partition, set: &IndexSet) -> Result<Option<Value>> {
    let shape = SkewShape::new(staircase(n), mu.clone())?;
    for t in enumerate_gst(&shape, set) {
        if let Some(v) = check_slide_laws(&t, set)? {
            return Ok(Some(
                json!({ "reason": v.law, "tableau": t.to_json(), "holes": v.holes, "vacated": v.vacated }),
            ));
        }
    }
    Ok(None)
}

/// `qtab_transport` is a bijection `Q(shape, from) → Q(shape, to)` that
/// keeps weight and prime counts.
pub fn check_psi_laws(shape: &SkewShape, from: &IndexSet, to: &IndexSet) -> Result<Option<Value>> {
    let codomain: BTreeSet<QTableau> = enumerate_qtab(shape, to).into_iter().collect();
    let mut image = BTreeSet::new();
    for t in enumerate_qtab(shape, from) {
        if let Some(bad) = check_psi_transport(&t, from, to)? {
            return Ok(Some(bad));
        }
        let u = qtab_transport(&t, from, to)?;
        if !image.insert(u.clone()) {
            return Ok(Some(qtab_failure(
                "two tableaux share an image",
                &t,
                Some(&u),
            )));
        }
    }
    if let Some(missed) = codomain.difference(&image).next() {
        return Ok(Some(qtab_failure(
            "target tableau not reached",
            missed,
            None,
        )));
    }
    Ok(None)
}

/// Per-tableau part of [`check_psi_laws`]: validity in the target, weight
/// and prime counts kept, and the reverse transport returns `t`.
pub fn check_psi_transport(t: &QTableau, from: &IndexSet, to: &IndexSet) -> Result<Option<Value>> {
    let u = qtab_transport(t, from, to)?;
    let reason = if !u.is_valid(to) {
        "image is not valid for the target set"
    } else if u.weight() != t.weight() || u.prime_counts() != t.prime_counts() {
        "weight or prime count changed"
    } else if qtab_transport(&u, to, from)? != *t {
        "transport back does not return the tableau"
    } else {
        return Ok(None);
    };
    Ok(Some(qtab_failure(reason, t, Some(&u))))
}

/// Sweep bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub n_max: usize,
    pub m: u32,
    pub size_max: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            n_max: 3,
            m: 3,
            size_max: 6,
        }
    }
}

fn params_of(n: Option<usize>, mu: &Partition, lambda: Option<&Partition>, m: u32) -> Params {
    Params {
        n,
        mu: Some(mu.clone()),
        lambda: lambda.cloned(),
        m: Some(m),
        ..Params::default()
    }
}

/// Skew shapes `λ/μ` with `μ ⊆ δ(n)`, `l(λ) ≤ n` and `1 ≤ |λ/μ| ≤ size_max`.
pub fn staircase_skew_shapes(n: usize, size_max: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for mu in staircase(n).sub_partitions() {
        for d in 1..=size_max {
            for lambda in partitions_of(mu.size() + d) {
                if lambda.len() <= n && lambda.contains(&mu) {
                    out.push((lambda, mu.clone()));
                }
            }
        }
    }
    out
}

/// Every admissible parameter set for `theorem` within `bounds`, in a fixed order.
pub fn sweep_params(theorem: TheoremId, bounds: SweepBounds) -> Vec<Params> {
    let SweepBounds { n_max, m, size_max } = bounds;
    let proper_mus = |n: usize| {
        let delta = staircase(n);
        delta
            .sub_partitions()
            .into_iter()
            .filter(move |mu| *mu != delta)
    };
    let subsets = IndexSet::all_subsets(m);
    let mut out = Vec::new();
    match theorem {
        TheoremId::Thm1 => {
            for n in 1..=n_max {
                for mu in proper_mus(n) {
                    for from in &subsets {
                        for to in &subsets {
                            out.push(Params {
                                set: Some(from.members().collect()),
                                set2: Some(to.members().collect()),
                                ..params_of(Some(n), &mu, None, m)
                            });
                        }
                    }
                }
            }
        }
        TheoremId::Thm2 | TheoremId::Thm4 | TheoremId::CorTrSym => {
            for n in 1..=n_max {
                for mu in proper_mus(n) {
                    out.push(params_of(Some(n), &mu, None, m));
                }
            }
        }
        TheoremId::JdtLaws => {
            for n in 1..=n_max {
                for mu in proper_mus(n) {
                    for set in &subsets {
                        out.push(Params {
                            set: Some(set.members().collect()),
                            ..params_of(Some(n), &mu, None, m)
                        });
                    }
                }
            }
        }
        TheoremId::Thm3 | TheoremId::PropTr | TheoremId::CorFinal => {
            for (lambda, mu) in staircase_skew_shapes(n_max, size_max) {
                if theorem == TheoremId::CorFinal && lambda.first_part() > n_max {
                    continue;
                }
                out.push(params_of(Some(n_max), &mu, Some(&lambda), m));
            }
        }
        TheoremId::PsiLaws => {
            for (lambda, mu) in staircase_skew_shapes(n_max, size_max) {
                for from in &subsets {
                    for i in (1..=m).filter(|&i| !from.contains(i)) {
                        let to = from.with(i).expect("i <= m");
                        out.push(Params {
                            set: Some(from.members().collect()),
                            set2: Some(to.members().collect()),
                            ..params_of(Some(n_max), &mu, Some(&lambda), m)
                        });
                    }
                }
            }
        }
    }
    out
}

/// Runs every admissible case on `jobs` worker threads; reports come back
/// in [`sweep_params`] order.
pub fn sweep(theorem: TheoremId, bounds: SweepBounds, jobs: usize) -> Result<Vec<VerifyReport>> {
    if bounds.n_max == 0 || bounds.m == 0 || bounds.size_max == 0 {
        return precondition("sweep bounds must be at least 1");
    }
    let params = sweep_params(theorem, bounds);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| params.par_iter().map(|p| run_verify(theorem, p)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Summary,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "summary" => Ok(ReportFormat::Summary),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

fn describe_params(p: &Params) -> String {
    let mut parts = Vec::new();
    if let Some(n) = p.n {
        parts.push(format!("n={n}"));
    }
    if let Some(l) = &p.lambda {
        parts.push(format!("lambda={l}"));
    }
    if let Some(mu) = &p.mu {
        parts.push(format!("mu={mu}"));
    }
    for (name, set) in [("I", &p.set), ("I'", &p.set2)] {
        if let Some(s) = set {
            let items: Vec<String> = s.iter().map(u32::to_string).collect();
            parts.push(format!("{name}={{{}}}", items.join(",")));
        }
    }
    if let Some(m) = p.m {
        parts.push(format!("m={m}"));
    }
    parts.join(" ")
}

/// JSON lines (one report per line) or a human-readable table.
pub fn emit_report(reports: &[VerifyReport], format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            for r in reports {
                out.push_str(&serde_json::to_string(r).expect("reports serialize"));
                out.push('\n');
            }
        }
        ReportFormat::Summary => {
            if reports.is_empty() {
                return out;
            }
            for r in reports {
                let status = match (r.pass, r.exploratory) {
                    (true, _) => "PASS",
                    (false, false) => "FAIL",
                    (false, true) => "FINDING",
                };
                out.push_str(&format!(
                    "{:<10} {:<7} {:>9.3}ms  {}\n",
                    r.theorem.name(),
                    status,
                    r.elapsed.as_secs_f64() * 1e3,
                    describe_params(&r.params)
                ));
            }
            let failed = reports.iter().filter(|r| !r.pass && !r.exploratory).count();
            out.push_str(&format!("{} cases, {} failed\n", reports.len(), failed));
        }
    }
    out
}

/// 0 when every asserted report passes, 1 otherwise. Exploratory reports
/// never fail the run.
pub fn exit_code(reports: &[VerifyReport]) -> i32 {
    if reports.iter().all(|r| r.pass || r.exploratory) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            assert_eq!(
                serde_json::to_string(&t).unwrap(),
                format!("\"{}\"", t.name())
            );
        }
        assert!("thm9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn documented_examples_pass() {
        let thm2 = Params {
            n: Some(3),
            mu: Some(part(&[2])),
            m: Some(3),
            ..Params::default()
        };
        assert!(run_verify(TheoremId::Thm2, &thm2).unwrap().pass);
        let thm1 = Params {
            n: Some(1),
            set: Some(vec![]),
            set2: Some(vec![1]),
            m: Some(1),
            ..Params::default()
        };
        assert!(run_verify(TheoremId::Thm1, &thm1).unwrap().pass);
        let thm3 = Params {
            n: Some(3),
            lambda: Some(part(&[2, 1])),
            mu: Some(part(&[1])),
            m: Some(2),
            ..Params::default()
        };
        assert!(run_verify(TheoremId::Thm3, &thm3).unwrap().pass);
    }

    #[test]
    fn invalid_params_are_errors() {
        let outside = Params {
            n: Some(2),
            mu: Some(part(&[3])),
            ..Params::default()
        };
        assert!(run_verify(TheoremId::Thm2, &outside).is_err());
        let no_lambda = Params {
            n: Some(2),
            ..Params::default()
        };
        assert!(run_verify(TheoremId::Thm3, &no_lambda).is_err());
        let wide = Params {
            n: Some(2),
            lambda: Some(part(&[3])),
            ..Params::default()
        };
        assert!(run_verify(TheoremId::CorFinal, &wide).is_err());
        let bad_set = Params {
            n: Some(2),
            set: Some(vec![4]),
            ..Params::default()
        };
        assert!(run_verify(TheoremId::JdtLaws, &bad_set).is_err());
    }

    #[test]
    fn exploratory_reports_do_not_fail_runs() {
        let p = Params {
            n: Some(2),
            lambda: Some(part(&[3, 3])),
            mu: Some(part(&[3])),
            m: Some(2),
            allow_outside_staircase: true,
            ..Params::default()
        };
        let report = run_verify(TheoremId::PropTr, &p).unwrap();
        assert!(report.exploratory);
        let failing = VerifyReport {
            pass: false,
            counterexample: Some(json!({})),
            ..report
        };
        assert_eq!(exit_code(&[failing]), 0);
    }

    #[test]
    fn small_sweeps() {
        let bounds = SweepBounds {
            n_max: 1,
            m: 1,
            size_max: 1,
        };
        let reports = sweep(TheoremId::Thm2, bounds, 1).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].pass);
        let bounds = SweepBounds {
            n_max: 2,
            m: 2,
            size_max: 3,
        };
        for theorem in TheoremId::ALL {
            let reports = sweep(theorem, bounds, 2).unwrap();
            assert!(!reports.is_empty(), "{theorem}");
            assert_eq!(exit_code(&reports), 0, "{theorem}");
        }
    }

    #[test]
    fn report_output() {
        assert_eq!(emit_report(&[], ReportFormat::Json), "");
        assert_eq!(exit_code(&[]), 0);
        let p = Params {
            n: Some(2),
            m: Some(2),
            ..Params::default()
        };
        let ok = run_verify(TheoremId::Thm2, &p).unwrap();
        assert_eq!(
            emit_report(std::slice::from_ref(&ok), ReportFormat::Json),
            "{\"theorem\":\"thm2\",\"params\":{\"n\":2,\"mu\":[],\"m\":2},\"pass\":true}\n"
        );
        let bad = VerifyReport {
            pass: false,
            counterexample: Some(json!({"reason": "x"})),
            ..ok.clone()
        };
        let line = emit_report(std::slice::from_ref(&bad), ReportFormat::Json);
        assert!(line.contains("\"counterexample\""));
        assert_eq!(exit_code(&[ok.clone(), bad.clone()]), 1);
        let summary = emit_report(&[ok, bad], ReportFormat::Summary);
        assert!(summary.contains("PASS") && summary.contains("FAIL"));
        assert!(summary.ends_with("2 cases, 1 failed\n"));
    }
}
