//! Machine checks of the unbroken-spectrum theorem, its supporting lemmas,
//! the winding-up transformation equations and the unimodality conjecture.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::meander::{build_meander, components, graph_index, orient, DirectedMeander, Side};
use crate::oracle;
use crate::spectrum::{
    self, block_contribution_from_measures, blocks, simple_eigenvalues_by_propagation, simple_eigenvalues_from_measures,
    spectrum_from_measures, BlockId, Measures, SpectrumMultiset,
};
use crate::typesym::{Composition, SeaweedType};
use crate::winding::{wind_down_sequence, wind_down_step, wind_up, MoveKind, WindingError, WindingOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("spectrum is empty")]
    EmptySpectrum,
    #[error("{0} is not Frobenius")]
    NotFrobenius(SeaweedType),
    #[error(transparent)]
    Winding(#[from] WindingError),
}

/// Closed integer interval `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub min: i64,
    pub max: i64,
}

/// Whether the support of `s` is a run of consecutive integers.
pub fn check_unbroken(s: &SpectrumMultiset) -> Result<(bool, Interval), VerifyError> {
    let (Some(min), Some(max)) = (s.min(), s.max()) else {
        return Err(VerifyError::EmptySpectrum);
    };
    let unbroken = s.counts().len() as i64 == max - min + 1;
    Ok((unbroken, Interval { min, max }))
}

/// Whether a non-empty set is a run of consecutive integers.
pub fn is_unbroken_set(s: &BTreeSet<i64>) -> bool {
    match (s.first(), s.last()) {
        (Some(&lo), Some(&hi)) => s.len() as i64 == hi - lo + 1,
        _ => false,
    }
}

/// `d_l == d_(1-l)` for every integer `l`.
pub fn check_symmetric(s: &SpectrumMultiset) -> Result<bool, VerifyError> {
    if s.is_empty() {
        return Err(VerifyError::EmptySpectrum);
    }
    Ok(s.counts().iter().all(|(&l, &d)| s.multiplicity(1 - l) == d))
}

/// Unimodal about one half: `d_l <= d_(l+1)` for `l <= -1` and
/// `d_l >= d_(l+1)` for `l >= 1`. The middle pair `d_0, d_1` is unconstrained.
pub fn check_unimodal(s: &SpectrumMultiset) -> Result<bool, VerifyError> {
    let (Some(min), Some(max)) = (s.min(), s.max()) else {
        return Err(VerifyError::EmptySpectrum);
    };
    let rising = (min.min(0) - 1..=-1).all(|l| s.multiplicity(l) <= s.multiplicity(l + 1));
    let falling = (1..=max.max(1)).all(|l| s.multiplicity(l) >= s.multiplicity(l + 1));
    Ok(rising && falling)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub block: BlockId,
    pub range: [usize; 2],
    pub symmetric: bool,
    /// `σ←` for a top block, `σ→` for a bottom block.
    pub sigma_unbroken: bool,
    /// Both `τ←` and `τ→`.
    pub tau_unbroken: bool,
    pub unimodal: bool,
    pub contribution: SpectrumMultiset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremDetails {
    pub unbroken: bool,
    pub interval: Interval,
    pub symmetric: bool,
    pub centered: bool,
    pub partition: bool,
    pub per_block: Vec<BlockReport>,
    pub simple_magnitudes: BTreeSet<i64>,
    pub simple_magnitudes_ok: bool,
    pub simple_routes_agree: bool,
    pub unimodal: bool,
    pub unimodal_blocks: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    #[serde(rename = "type")]
    pub ty: SeaweedType,
    pub flip: SeaweedType,
    pub frobenius: bool,
    pub index: usize,
    /// Absent for non-Frobenius types and for `1/1`, whose spectrum is empty.
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub details: Option<TheoremDetails>,
}

impl TheoremReport {
    /// Names of failed theorem and lemma checks.
    pub fn violations(&self) -> Vec<String> {
        let Some(d) = &self.details else { return Vec::new() };
        let mut out = Vec::new();
        let mut flag = |ok: bool, name: &str| {
            if !ok {
                out.push(name.to_string());
            }
        };
        flag(d.unbroken, "theorem.unbroken");
        flag(d.symmetric, "theorem.symmetric");
        flag(d.centered, "theorem.centered");
        flag(d.partition, "theorem.block_partition");
        flag(d.simple_magnitudes_ok, "simple.magnitude");
        flag(d.simple_routes_agree, "simple.routes_agree");
        for b in &d.per_block {
            let tag = block_tag(b.block);
            flag(b.symmetric, &format!("block.{tag}.symmetric"));
            flag(b.sigma_unbroken, &format!("block.{tag}.sigma_unbroken"));
            flag(b.tau_unbroken, &format!("block.{tag}.tau_unbroken"));
        }
        out
    }

    /// Names of blocks, or `global`, where unimodality fails.
    pub fn conjecture_counterexamples(&self) -> Vec<String> {
        let Some(d) = &self.details else { return Vec::new() };
        let mut out = Vec::new();
        if !d.unimodal {
            out.push("conjecture.global".to_string());
        }
        for b in d.per_block.iter().filter(|b| !b.unimodal) {
            out.push(format!("conjecture.{}", block_tag(b.block)));
        }
        out
    }
}

fn block_tag(b: BlockId) -> String {
    let side = match b.side {
        Side::Top => "top",
        Side::Bottom => "bottom",
    };
    format!("{side}{}", b.index)
}

fn range_pair(r: &RangeInclusive<usize>) -> [usize; 2] {
    [*r.start(), *r.end()]
}

pub fn check_theorem(t: &SeaweedType) -> TheoremReport {
    let m = build_meander(t);
    let dm = orient(&m);
    let index = graph_index(&m);
    let frobenius = index == 0;
    let details = if frobenius && t.n() >= 2 {
        let meas = Measures::new(&dm).expect("index zero meanders are single paths");
        Some(theorem_details(t, &dm, &meas))
    } else {
        None
    };
    TheoremReport {
        ty: t.clone(),
        flip: t.flipped(),
        frobenius,
        index,
        details,
    }
}

fn theorem_details(t: &SeaweedType, dm: &DirectedMeander, meas: &Measures) -> TheoremDetails {
    let spec = spectrum_from_measures(t, meas);
    let (unbroken, interval) = check_unbroken(&spec).expect("n >= 2 gives a non-empty spectrum");
    let symmetric = check_symmetric(&spec).expect("non-empty");
    let unimodal = check_unimodal(&spec).expect("non-empty");

    let mut union = SpectrumMultiset::new();
    let per_block: Vec<BlockReport> = blocks(t)
        .into_iter()
        .map(|(block, range)| {
            let contribution = block_contribution_from_measures(meas, block.side, &range);
            union.merge(&contribution);
            let sigma = match block.side {
                Side::Top => meas.sigma_left(&range),
                Side::Bottom => meas.sigma_right(&range),
            };
            BlockReport {
                block,
                range: range_pair(&range),
                // Size-one blocks contribute nothing and pass vacuously.
                symmetric: contribution.is_empty() || check_symmetric(&contribution).expect("non-empty"),
                sigma_unbroken: is_unbroken_set(&sigma),
                tau_unbroken: is_unbroken_set(&meas.tau_left(&range)) && is_unbroken_set(&meas.tau_right(&range)),
                unimodal: contribution.is_empty() || check_unimodal(&contribution).expect("non-empty"),
                contribution,
            }
        })
        .collect();
    let simple = simple_eigenvalues_from_measures(t, meas);
    let simple_routes_agree = simple_eigenvalues_by_propagation(dm).as_ref() == Ok(&simple);
    let simple_magnitudes: BTreeSet<i64> = simple.values().map(i64::abs).collect();
    TheoremDetails {
        unbroken,
        interval,
        symmetric,
        centered: interval.min == 1 - interval.max,
        partition: union == spec,
        unimodal_blocks: per_block.iter().all(|b| b.unimodal),
        per_block,
        simple_magnitudes_ok: simple_magnitudes.iter().all(|v| (1..=3).contains(v)),
        simple_magnitudes,
        simple_routes_agree,
        unimodal,
    }
}

fn shift(s: &BTreeSet<i64>, c: i64) -> BTreeSet<i64> {
    s.iter().map(|v| v + c).collect()
}

fn neg(s: &BTreeSet<i64>) -> BTreeSet<i64> {
    s.iter().map(|v| -v).collect()
}

fn sumset(s: &BTreeSet<i64>, t: &BTreeSet<i64>) -> BTreeSet<i64> {
    s.iter().flat_map(|a| t.iter().map(move |b| a + b)).collect()
}

fn union(parts: &[BTreeSet<i64>]) -> BTreeSet<i64> {
    parts.iter().flatten().copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub name: &'static str,
    pub lhs: BTreeSet<i64>,
    pub rhs: BTreeSet<i64>,
    pub holds: bool,
}

impl EquationCheck {
    fn equal(name: &'static str, lhs: BTreeSet<i64>, rhs: BTreeSet<i64>) -> Self {
        let holds = lhs == rhs;
        EquationCheck { name, lhs, rhs, holds }
    }

    fn subset(name: &'static str, lhs: BTreeSet<i64>, rhs: BTreeSet<i64>) -> Self {
        let holds = lhs.is_subset(&rhs);
        EquationCheck { name, lhs, rhs, holds }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindupReport {
    #[serde(rename = "type")]
    pub ty: SeaweedType,
    #[serde(rename = "move")]
    pub mv: MoveKind,
    pub image: SeaweedType,
    pub equations: Vec<EquationCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
    /// BlockCreation or PureExpansion from a first top block of size one, or
    /// PureExpansion from a second one.
    /// The derivations use that a block's simple eigenvalues sum to 1, which
    /// fails for an empty sum, and some equations then fail too.
    pub degenerate: bool,
}

impl WindupReport {
    pub fn all_hold(&self) -> bool {
        self.equations.iter().all(|e| e.holds)
    }
}

/// Evaluate both sides of every transformation equation for the up-move `mv`
/// applied to the Frobenius type `t`.
///
/// Flip-up has no equations of its own; its report checks that the spectrum
/// is unchanged.
pub fn check_windup_equations(t: &SeaweedType, mv: MoveKind) -> Result<WindupReport, VerifyError> {
    if mv.is_down() {
        return Err(WindingError::NotAnUpMove(mv).into());
    }
    let meas = Measures::new(&DirectedMeander::from_type(t)).map_err(|_| VerifyError::NotFrobenius(t.clone()))?;
    let image = wind_up(t, mv)?;
    let after = Measures::new(&DirectedMeander::from_type(&image)).map_err(|_| VerifyError::NotFrobenius(image.clone()))?;
    let a1 = t.top().first();
    let b1 = t.bottom().first();
    let mut gamma = None;
    let degenerate = match mv {
        MoveKind::BlockCreation => a1 == 1,
        MoveKind::PureExpansion => a1 == 1 || t.top().parts().get(1) == Some(&1),
        _ => false,
    };
    let equations = match mv {
        MoveKind::BlockCreation => {
            let a = 1..=a1;
            let (a_, b_) = (1..=a1, a1 + 1..=2 * a1);
            let sa = meas.sigma_left(&a);
            let ta = meas.tau_left(&a);
            vec![
                EquationCheck::equal("bottom_sigma", after.sigma_right(&a_), sa.clone()),
                EquationCheck::equal("bottom_tau", after.tau_right(&a_), ta.clone()),
                EquationCheck::equal("bc1", after.sigma_left(&a_), neg(&sa)),
                EquationCheck::equal("bc2", after.sigma_left(&b_), sa.clone()),
                EquationCheck::equal("bc3", after.sigma_leftward(&a_, &b_), union(&[shift(&sa, 1), shift(&neg(&sa), 1)])),
                EquationCheck::equal("bc4", after.tau_left(&(1..=2 * a1)), union(&[shift(&ta, -1), ta])),
            ]
        }
        MoveKind::RotationExpansion => {
            let (a, b, ab) = (1..=b1, b1 + 1..=a1, 1..=a1);
            let d = a1 - b1;
            let (a_, b_, c_, ab_, abc_) = (1..=d, d + 1..=a1, a1 + 1..=a1 + d, 1..=a1, 1..=a1 + d);
            let sa = meas.sigma_left(&a);
            let sb = meas.sigma_left(&b);
            let sab = meas.sigma_leftward(&a, &b);
            let tab = meas.tau_left(&ab);
            let (k, p) = (a1 - 1, b1 - 1);
            let s: BTreeSet<i64> = (p + 1..=k).map(|r| meas.get(r + 1, 1)).collect();
            vec![
                EquationCheck::equal("bottom_sigma", after.sigma_right(&ab_), meas.sigma_left(&ab)),
                EquationCheck::equal("bottom_tau", after.tau_right(&ab_), tab.clone()),
                EquationCheck::equal("re1", after.sigma_left(&a_), neg(&sb)),
                EquationCheck::equal("re2", after.sigma_left(&b_), neg(&sa)),
                EquationCheck::equal("re3", after.sigma_leftward(&a_, &b_), neg(&sab)),
                EquationCheck::equal("re4", after.sigma_left(&c_), sb.clone()),
                EquationCheck::equal("re5", after.sigma_leftward(&a_, &c_), union(&[shift(&sb, 1), shift(&neg(&sb), 1)])),
                EquationCheck::equal("re6", after.sigma_leftward(&b_, &c_), shift(&sab, 1)),
                EquationCheck::equal("re7", after.tau_left(&abc_), union(&[shift(&tab, -1), s.clone()])),
                EquationCheck::subset("re7_subset", s, tab),
            ]
        }
        MoveKind::PureExpansion => {
            let a2 = t.top().parts()[1];
            let (a, b) = (1..=a1, a1 + 1..=a1 + a2);
            let (c_, a_, b_) = (1..=a2, a2 + 1..=a2 + a1, a1 + a2 + 1..=a1 + 2 * a2);
            let g = meas.get(a1, a1 + 1);
            gamma = Some(g);
            let sa = meas.sigma_left(&a);
            let sb = meas.sigma_left(&b);
            let ta = meas.tau_left(&a);
            let tb = meas.tau_left(&b);
            let ca = after.sigma_leftward(&c_, &a_);
            let gammas: BTreeSet<i64> = [1, 2, 3].into();
            vec![
                EquationCheck::equal("bottom_sigma", after.sigma_right(&c_), sb.clone()),
                EquationCheck::equal("bottom_tau", after.tau_right(&c_), tb.clone()),
                EquationCheck::equal("pe1", after.sigma_left(&b_), sb.clone()),
                EquationCheck::equal("pe2", after.sigma_left(&c_), neg(&sb)),
                EquationCheck::equal("pe3", after.sigma_left(&a_), sa),
                EquationCheck::equal("pe4", after.sigma_leftward(&c_, &b_), union(&[shift(&sb, 1), shift(&neg(&sb), 1)])),
                EquationCheck::equal("pe5", ca.clone(), shift(&sumset(&neg(&tb), &ta), g)),
                EquationCheck::equal("pe6", after.sigma_leftward(&a_, &b_), shift(&neg(&ca), 1)),
                EquationCheck::equal(
                    "pe7",
                    after.tau_left(&(1..=a1 + 2 * a2)),
                    union(&[shift(&tb, -1), shift(&ta, g - 1), tb]),
                ),
                EquationCheck::subset("gamma_magnitude", [g.abs()].into(), gammas.clone()),
                EquationCheck::subset("gamma_positive", [g].into(), gammas),
            ]
        }
        MoveKind::FlipUp => {
            let before = spectrum_from_measures(t, &meas);
            let flipped = spectrum_from_measures(&image, &after);
            vec![EquationCheck {
                name: "spectrum_preserved",
                lhs: flipped.counts().keys().copied().collect(),
                rhs: before.counts().keys().copied().collect(),
                holds: before == flipped,
            }]
        }
        _ => unreachable!("down-moves rejected above"),
    };
    Ok(WindupReport {
        ty: t.clone(),
        mv,
        image,
        equations,
        gamma,
        degenerate,
    })
}

/// Which checks [`check_type`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckPlan {
    pub theorem: bool,
    pub winding: bool,
    /// Winding-up equations and up/down round trips are checked on images of
    /// at most this size; 0 disables them.
    pub windup_max_n: usize,
    pub oracle: bool,
    pub conjecture: bool,
}

/// A failed check, named `area.detail`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    #[serde(rename = "type")]
    pub ty: SeaweedType,
    pub check: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeOutcome {
    pub frobenius: bool,
    pub violations: Vec<String>,
    pub counterexamples: Vec<String>,
    /// Failed equations of degenerate winding-up reports.
    pub degenerate_failures: Vec<String>,
}

fn winding_violations(t: &SeaweedType, frobenius: bool, windup_max_n: usize, out: &mut Vec<String>) {
    let trace = wind_down_sequence(t);
    let completed = trace.outcome == WindingOutcome::Completed;
    if completed != frobenius {
        out.push("winding.outcome".into());
    }
    let index = graph_index(&build_meander(t));
    let mut cur = t.clone();
    for step in &trace.steps {
        if graph_index(&build_meander(&step.ty)) != index {
            out.push(format!("winding.index_preserved.{}", step.mv));
        }
        if wind_up(&step.ty, step.mv.inverse()).as_ref() != Ok(&cur) {
            out.push(format!("winding.round_trip.{}", step.mv));
        }
        cur = step.ty.clone();
    }
    let (a1, b1) = (t.top().first(), t.bottom().first());
    for mv in MoveKind::UP {
        if mv == MoveKind::FlipUp && a1 <= b1 {
            continue;
        }
        let Ok(image) = wind_up(t, mv) else { continue };
        if image.n() > windup_max_n {
            continue;
        }
        if wind_down_step(&image) != Ok((mv.inverse(), t.clone())) {
            out.push(format!("winding.round_trip.{mv}"));
        }
    }
}

fn oracle_violations(t: &SeaweedType, out: &mut Vec<String>) {
    let m = build_meander(t);
    let index = oracle::oracle_index(t);
    if index != graph_index(&m) {
        out.push("oracle.index".into());
    }
    if index != 0 {
        return;
    }
    let dm = orient(&m);
    match oracle::oracle_principal(t) {
        Ok(p) if spectrum::principal_element(&dm).as_ref() == Ok(&p) => {}
        _ => out.push("oracle.principal".into()),
    }
    match oracle::oracle_spectrum(t) {
        Ok(s) if spectrum::spectrum(t).as_ref() == Ok(&s) => {}
        _ => out.push("oracle.spectrum".into()),
    }
}

/// Run the checks of `plan` on one type.
pub fn check_type(t: &SeaweedType, plan: &CheckPlan) -> TypeOutcome {
    let m = build_meander(t);
    let report = components(&m);
    let frobenius = report.paths == 1 && report.cycles == 0;
    let mut out = TypeOutcome {
        frobenius,
        ..TypeOutcome::default()
    };
    if plan.winding {
        winding_violations(t, frobenius, plan.windup_max_n, &mut out.violations);
    }
    if plan.oracle {
        oracle_violations(t, &mut out.violations);
    }
    if !frobenius {
        return out;
    }
    if plan.theorem || plan.conjecture {
        let theorem = check_theorem(t);
        if plan.theorem {
            out.violations.extend(theorem.violations());
        }
        if plan.conjecture {
            out.counterexamples.extend(theorem.conjecture_counterexamples());
        }
    }
    if plan.windup_max_n > 0 {
        for mv in MoveKind::UP {
            let fits = wind_up(t, mv).is_ok_and(|image| image.n() <= plan.windup_max_n);
            if !fits {
                continue;
            }
            match check_windup_equations(t, mv) {
                Ok(r) => {
                    let failed = r.equations.iter().filter(|e| !e.holds).map(|e| format!("windup.{mv}.{}", e.name));
                    if r.degenerate {
                        out.degenerate_failures.extend(failed);
                    } else {
                        out.violations.extend(failed);
                    }
                }
                Err(e) => out.violations.push(format!("windup.{mv}.error: {e}")),
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub pairs_total: u64,
    pub frobenius_count: u64,
    pub violations: Vec<Violation>,
    pub conjecture_counterexamples: Vec<Violation>,
    /// Failures of winding-up equations on degenerate reports, by check name.
    pub windup_degenerate_failures: BTreeMap<String, u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Partial {
    pairs: u64,
    frobenius: u64,
    violations: Vec<Violation>,
    counterexamples: Vec<Violation>,
    degenerate: BTreeMap<String, u64>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.pairs += other.pairs;
        self.frobenius += other.frobenius;
        self.violations.extend(other.violations);
        self.counterexamples.extend(other.counterexamples);
        for (k, v) in other.degenerate {
            *self.degenerate.entry(k).or_default() += v;
        }
        self
    }
}

/// Run `plan(n)` over every composition pair of every `n` in range.
pub fn sweep_with<P>(n_min: usize, n_max: usize, plan: P) -> Vec<SweepSummary>
where
    P: Fn(usize) -> CheckPlan + Sync,
{
    (n_min.max(1)..=n_max)
        .map(|n| {
            let start = Instant::now();
            let plan = plan(n);
            let comps: Vec<Composition> = Composition::all(n).collect();
            let partial = comps
                .par_iter()
                .map(|top| {
                    let mut acc = Partial::default();
                    for bottom in &comps {
                        let t = SeaweedType::new(top.clone(), bottom.clone()).expect("equal sums");
                        let o = check_type(&t, &plan);
                        acc.pairs += 1;
                        acc.frobenius += u64::from(o.frobenius);
                        let tag = |check| Violation { ty: t.clone(), check };
                        acc.violations.extend(o.violations.into_iter().map(tag));
                        acc.counterexamples.extend(o.counterexamples.into_iter().map(tag));
                        for k in o.degenerate_failures {
                            *acc.degenerate.entry(k).or_default() += 1;
                        }
                    }
                    acc
                })
                .reduce(Partial::default, Partial::merge);
            let mut violations = partial.violations;
            let mut counterexamples = partial.counterexamples;
            violations.sort();
            counterexamples.sort();
            SweepSummary {
                n,
                pairs_total: partial.pairs,
                frobenius_count: partial.frobenius,
                violations,
                conjecture_counterexamples: counterexamples,
                windup_degenerate_failures: partial.degenerate,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

/// Full sweep: theorem, lemmas, winding and conjecture on every type, with
/// winding-up equations on images up to `n_max` and oracle cross-checks up to
/// `oracle_up_to`.
pub fn sweep(n_min: usize, n_max: usize, oracle_up_to: usize) -> Vec<SweepSummary> {
    sweep_with(n_min, n_max, |n| CheckPlan {
        theorem: true,
        winding: true,
        windup_max_n: n_max,
        oracle: n <= oracle_up_to,
        conjecture: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typesym::parse_type;

    fn t(s: &str) -> SeaweedType {
        parse_type(s).unwrap()
    }

    fn ms(pairs: &[(i64, u64)]) -> SpectrumMultiset {
        SpectrumMultiset::from_counts(pairs.iter().copied())
    }

    #[test]
    fn unbroken_examples() {
        let ex1 = ms(&[(-2, 1), (-1, 2), (0, 5), (1, 5), (2, 2), (3, 1)]);
        assert_eq!(check_unbroken(&ex1).unwrap(), (true, Interval { min: -2, max: 3 }));
        assert_eq!(check_unbroken(&ms(&[(0, 1), (1, 1)])).unwrap(), (true, Interval { min: 0, max: 1 }));
        assert!(!check_unbroken(&ms(&[(0, 2), (2, 1)])).unwrap().0);
        assert_eq!(check_unbroken(&SpectrumMultiset::new()), Err(VerifyError::EmptySpectrum));
    }

    #[test]
    fn symmetric_examples() {
        assert!(check_symmetric(&ms(&[(-2, 1), (-1, 2), (0, 5), (1, 5), (2, 2), (3, 1)])).unwrap());
        assert!(check_symmetric(&ms(&[(0, 1), (1, 1)])).unwrap());
        assert!(!check_symmetric(&ms(&[(0, 2), (1, 1)])).unwrap());
        assert_eq!(check_symmetric(&SpectrumMultiset::new()), Err(VerifyError::EmptySpectrum));
    }

    #[test]
    fn unimodal_examples() {
        assert!(check_unimodal(&ms(&[(-2, 1), (-1, 2), (0, 5), (1, 5), (2, 2), (3, 1)])).unwrap());
        assert!(check_unimodal(&ms(&[(0, 1), (1, 1)])).unwrap());
        assert!(!check_unimodal(&ms(&[(-1, 3), (0, 1), (1, 1), (2, 3)])).unwrap());
        assert!(!check_unimodal(&ms(&[(0, 2), (2, 1)])).unwrap());
        assert!(check_unimodal(&ms(&[(0, 3)])).unwrap());
        assert_eq!(check_unimodal(&SpectrumMultiset::new()), Err(VerifyError::EmptySpectrum));
    }

    #[test]
    fn theorem_examples() {
        let r = check_theorem(&t("2|4/1|2|3"));
        assert!(r.frobenius);
        assert!(r.violations().is_empty(), "{:?}", r.violations());
        let d = r.details.as_ref().unwrap();
        assert_eq!(d.interval, Interval { min: -2, max: 3 });
        assert!(d.unimodal && d.unimodal_blocks);

        let r = check_theorem(&t("2/2"));
        assert!(!r.frobenius);
        assert_eq!(r.index, 1);
        assert!(r.details.is_none());

        let r = check_theorem(&t("6|5|3/14"));
        assert!(r.violations().is_empty(), "{:?}", r.violations());
        assert!(r.details.unwrap().simple_magnitudes.contains(&3));
    }

    #[test]
    fn windup_examples() {
        let r = check_windup_equations(&t("2/1|1"), MoveKind::BlockCreation).unwrap();
        assert_eq!(r.image, t("4/2|1|1"));
        assert!(r.all_hold(), "{r:?}");
        let r = check_windup_equations(&t("2/1|1"), MoveKind::RotationExpansion).unwrap();
        assert_eq!(r.image, t("3/2|1"));
        assert!(r.all_hold(), "{r:?}");
        assert!(matches!(
            check_windup_equations(&t("2/1|1"), MoveKind::PureExpansion),
            Err(VerifyError::Winding(WindingError::PreconditionViolated { .. }))
        ));
        assert_eq!(
            check_windup_equations(&t("2/2"), MoveKind::BlockCreation),
            Err(VerifyError::NotFrobenius(t("2/2")))
        );
        assert!(matches!(
            check_windup_equations(&t("2/1|1"), MoveKind::FlipDown),
            Err(VerifyError::Winding(WindingError::NotAnUpMove(_)))
        ));
    }

    #[test]
    fn block_creation_from_one_vertex() {
        let r = check_windup_equations(&t("1/1"), MoveKind::BlockCreation).unwrap();
        let failed: Vec<_> = r.equations.iter().filter(|e| !e.holds).map(|e| e.name).collect();
        assert_eq!(failed, vec!["bc4"]);
        assert!(r.degenerate);
    }

    #[test]
    fn pure_expansion_gamma() {
        let r = check_windup_equations(&t("2|6/5|3"), MoveKind::PureExpansion).unwrap();
        assert_eq!(r.image, t("14/6|5|3"));
        assert!(r.all_hold(), "{r:?}");
        assert!(matches!(r.gamma, Some(1..=3)));
        assert!(!r.degenerate);
        let r = check_windup_equations(&t("1|1/2"), MoveKind::PureExpansion).unwrap();
        assert!(r.degenerate);
        assert!(!r.all_hold());
    }

    #[test]
    fn sweep_counts() {
        let s = sweep(1, 2, 2);
        assert_eq!((s[0].n, s[0].pairs_total, s[0].frobenius_count), (1, 1, 1));
        assert_eq!((s[1].n, s[1].pairs_total, s[1].frobenius_count), (2, 4, 2));
        assert!(s.iter().all(SweepSummary::passed));
    }

    #[test]
    fn sweep_small_clean() {
        for s in sweep(1, 6, 6) {
            assert!(s.passed(), "n={}: {:?}", s.n, s.violations);
            assert!(s.conjecture_counterexamples.is_empty());
        }
    }

    #[test]
    fn set_arithmetic() {
        let s: BTreeSet<i64> = [0, 1].into();
        let u: BTreeSet<i64> = [-1, 2].into();
        assert_eq!(sumset(&s, &u), [-1, 0, 2, 3].into());
        assert_eq!(neg(&u), [-2, 1].into());
        assert_eq!(shift(&s, 2), [2, 3].into());
        assert!(is_unbroken_set(&[-1, 0, 1].into()));
        assert!(!is_unbroken_set(&[-1, 1].into()));
        assert!(!is_unbroken_set(&BTreeSet::new()));
    }
}
