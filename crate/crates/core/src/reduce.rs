//! General-graph reduction and the hopset / shortcut drivers.
//!
//! Epoch `i` builds `E^{(i)}` from `G^{(i-1)}` and sets
//! `G^{(i)} = G^{(i-1)} ∪ E^{(i)}`. Within an epoch, phase `j` scales lengths
//! down by `σ = ⌈ε·2ʲ⌉`, decomposes with an LDD of diameter `⌊λh/2⌋`, adds
//! stars over the components, runs the clustered-DAG reduction, and scales the
//! resulting edges back up by `σ`. Each phase is repeated and the repetitions
//! are unioned.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dag::{reduce_clustered_dag, ClusteredInput, DagParams, DagReduceTrace};
use crate::error::{Error, Result};
use crate::graph::{sssp, DiGraph, Direction, EdgeSet, Length, Vertex, WeightedEdgeSet, INF};
use crate::ldd::{low_diameter_decomposition, LddParams};
use crate::oracle::{
    OracleSizeLaw, ShallowOracle, ShortcutAdapter, ShortcutLengths, ShortcutOracle,
};
use crate::rational::{self, Ratio64, Stretch};
use crate::rng;
use crate::verify;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionConfig {
    pub lambda: u64,
    pub h: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub eps: Ratio64,
    #[serde(serialize_with = "ser_ratio")]
    pub c0: Ratio64,
    pub seed: u64,
    /// LDD repetitions per phase; `None` means `4·⌈log₂ n⌉`.
    pub ldd_repetitions: Option<usize>,
    /// LDD sampling constant.
    pub ldd_c: f64,
    /// Refuse to run unless `λ > c₀·log³n·(1/ε² + 1)`, and require `λ >= 9`.
    pub strict: bool,
    /// Check oracle preconditions and per-group hopbounds (slow).
    pub check_invariants: bool,
    /// Verify the result exhaustively and record measured stretch/hopbound.
    pub measure: bool,
    /// Largest `n` that is measured.
    pub verify_ceiling: usize,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&rational::format_ratio(*r))
}

impl ReductionConfig {
    pub fn new(lambda: u64, h: u64) -> Self {
        ReductionConfig {
            lambda,
            h,
            eps: Ratio64::new(1, 2),
            c0: Ratio64::one(),
            seed: 0,
            ldd_repetitions: None,
            ldd_c: 2.0,
            strict: false,
            check_invariants: false,
            measure: true,
            verify_ceiling: verify::DEFAULT_CEILING,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.lambda < 2 {
            return bad(format!("lambda must be at least 2, got {}", self.lambda));
        }
        if self.h < 1 {
            return bad("h must be at least 1".into());
        }
        if !rational::is_positive(self.eps) {
            return bad("eps must be positive".into());
        }
        if !rational::is_positive(self.c0) {
            return bad("c0 must be positive".into());
        }
        if self.ldd_repetitions == Some(0) {
            return bad("ldd repetitions must be at least 1".into());
        }
        if self.strict {
            if self.lambda < 9 {
                return Err(Error::StrictMode(format!("lambda = {} < 9", self.lambda)));
            }
            let need = strict_lambda_threshold(self, n);
            if need.is_nan() || self.lambda as f64 <= need {
                return Err(Error::StrictMode(format!(
                    "lambda = {} does not exceed c0·log³n·(1/ε²+1) = {need:.1}",
                    self.lambda
                )));
            }
        }
        Ok(())
    }

    pub fn repetitions(&self, n: usize) -> usize {
        self.ldd_repetitions
            .unwrap_or_else(|| 4 * ceil_log2(n as u64).max(1) as usize)
    }

    /// `λh`, saturating.
    pub fn lambda_h(&self) -> u64 {
        self.lambda.saturating_mul(self.h)
    }

    /// The LDD diameter and star length `⌊λh/2⌋`.
    pub fn half_lambda_h(&self) -> u64 {
        (self.lambda_h() / 2).max(1)
    }
}

/// `log₂ n`, taken as at least 1.
fn log2n(n: usize) -> f64 {
    (n as f64).log2().max(1.0)
}

fn strict_lambda_threshold(cfg: &ReductionConfig, n: usize) -> f64 {
    let eps = rational::to_f64(cfg.eps);
    rational::to_f64(cfg.c0) * log2n(n).powi(3) * (1.0 / (eps * eps) + 1.0)
}

/// `⌈log₂ x⌉` for `x >= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// `λ' = ε·λ / (√c₀·log²n)` (with `ε` dropped when `ε > 1`), and whether it
/// had to be raised to the floor of 2.
pub fn lambda_prime(cfg: &ReductionConfig, n: usize) -> (f64, bool) {
    let eps = rational::to_f64(cfg.eps).min(1.0);
    let raw = eps * cfg.lambda as f64 / (rational::to_f64(cfg.c0).sqrt() * log2n(n).powi(2));
    if raw < 2.0 {
        (2.0, true)
    } else {
        (raw, false)
    }
}

/// `⌈log_{λ'} n⌉ + 1`.
pub fn epoch_count(lambda_prime: f64, n: usize) -> usize {
    if n <= 1 {
        return 1;
    }
    let raw = (n as f64).ln() / lambda_prime.ln();
    // guard against 2.0000000001 style rounding
    let k = (raw - 1e-9).ceil().max(0.0) as usize;
    k + 1
}

/// `⌈log_λ n⌉`, at least 1.
pub fn ceil_log_lambda(lambda: u64, n: usize) -> u32 {
    let mut k = 0u32;
    let mut p: u128 = 1;
    while p < n as u128 {
        p *= lambda.max(2) as u128;
        k += 1;
    }
    k.max(1)
}

/// `σ = ⌈ε·2ʲ⌉`.
pub fn sigma(eps: Ratio64, j: u32) -> u64 {
    let (n, d) = (*eps.numer() as u128, *eps.denom() as u128);
    match n.checked_shl(j).filter(|&v| v >> j == n) {
        Some(num) => num.div_ceil(d).min(u64::MAX as u128) as u64,
        None => u64::MAX,
    }
}

/// Phase-`j` length: `⌈ℓ / σ⌉`, which is `ℓ` when `ε·2ʲ <= 1`.
///
/// This equals `⌈ℓ·min(1, 1/(ε·2ʲ))⌉` whenever `ε·2ʲ` is at most 1 or an
/// integer. Dividing by `σ` rather than `ε·2ʲ` keeps
/// `ℓ(p)/σ <= ℓⱼ(p) <= (1+2ε)·ℓ(p)/σ` for every path with `|p| <= ℓ(p)/2ʲ`;
/// with `ε·2ʲ` in the denominator the upper bound can fail (`ε = 2/11`,
/// `j = 3`, a single edge of length 11).
pub fn scaled_length(len: Length, j: u32, eps: Ratio64) -> Length {
    len.div_ceil(sigma(eps, j)).max(1)
}

/// Bidirected stars of length `star_length` from each component's lowest id.
pub fn build_stars(components: &[Vec<Vertex>], star_length: Length) -> WeightedEdgeSet {
    let mut out = WeightedEdgeSet::new();
    for c in components.iter().filter(|c| c.len() >= 2) {
        let center = *c.iter().min().expect("non-empty");
        for &v in c.iter().filter(|&&v| v != center) {
            out.insert(center, v, star_length);
            out.insert(v, center, star_length);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Hopset,
    Shortcut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PhasePlan {
    pub epoch: usize,
    pub phase: u32,
    pub sigma: u64,
}

impl PhasePlan {
    pub fn new(epoch: usize, phase: u32, eps: Ratio64) -> Self {
        PhasePlan {
            epoch,
            phase,
            sigma: sigma(eps, phase),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RepetitionTrace {
    pub ldd_removed: usize,
    pub components: usize,
    pub star_edges: usize,
    pub dag_iterations: usize,
    pub dag_fallbacks: usize,
    pub output_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseTrace {
    pub phase: u32,
    pub sigma: u64,
    pub repetitions: Vec<RepetitionTrace>,
    pub output_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseOutput {
    pub edges: WeightedEdgeSet,
    pub trace: PhaseTrace,
    /// One trace per repetition, in order.
    pub dag_traces: Vec<DagReduceTrace>,
}

/// One phase: repeated LDD → stars → clustered-DAG reduction → scale-up,
/// unioned over repetitions. `g_prev` is `G^{(i-1)}` with original lengths.
pub fn run_phase(
    g_prev: &DiGraph,
    plan: &PhasePlan,
    cfg: &ReductionConfig,
    oracle: &dyn ShallowOracle,
    mode: Mode,
    seed: u64,
) -> Result<PhaseOutput> {
    let eps = effective_eps(cfg, mode);
    let n = g_prev.n();
    let reps = cfg.repetitions(n);
    let d = cfg.half_lambda_h();
    let scaled = g_prev.map_lengths(|l| scaled_length(l, plan.phase, eps));
    let mut edges = WeightedEdgeSet::new();
    let mut repetitions = Vec::with_capacity(reps);
    let mut dag_traces = Vec::with_capacity(reps);
    for r in 0..reps {
        let rep_seed = rng::split(seed, r as u64);
        let mut ldd_params = LddParams::new(d, rng::split(rep_seed, 0));
        ldd_params.c = cfg.ldd_c;
        let ldd = low_diameter_decomposition(&scaled, &ldd_params)?;
        let stars = build_stars(&ldd.components, d);
        let mut removed = vec![false; scaled.m()];
        for &e in &ldd.removed_edges {
            removed[e] = true;
        }
        let clustered = scaled.filter_edges(|i, _| !removed[i]).with_extra(&stars);
        let input = ClusteredInput {
            graph: clustered,
            components_topo: ldd.components,
            cluster_diameter: 2 * d,
        };
        let dag_params = DagParams {
            lambda: cfg.lambda,
            h: cfg.h,
            eps,
            seed: rng::split(rep_seed, 1),
            strict: cfg.strict,
            check_invariants: cfg.check_invariants,
        };
        let (mut tilde, dag_trace) = reduce_clustered_dag(&input, oracle, &dag_params)?;
        tilde.union_with(&stars);
        let bar = match mode {
            Mode::Hopset => tilde.scaled(plan.sigma),
            Mode::Shortcut => tilde.unweighted(),
        };
        repetitions.push(RepetitionTrace {
            ldd_removed: ldd.removed_edges.len(),
            components: input.components_topo.len(),
            star_edges: stars.len(),
            dag_iterations: dag_trace.oracle_calls(),
            dag_fallbacks: dag_trace.fallbacks,
            output_size: bar.len(),
        });
        dag_traces.push(dag_trace);
        edges.union_with(&bar);
    }
    Ok(PhaseOutput {
        trace: PhaseTrace {
            phase: plan.phase,
            sigma: plan.sigma,
            repetitions,
            output_size: edges.len(),
        },
        edges,
        dag_traces,
    })
}

fn effective_eps(cfg: &ReductionConfig, mode: Mode) -> Ratio64 {
    match mode {
        Mode::Hopset => cfg.eps,
        Mode::Shortcut => Ratio64::one(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpochTrace {
    pub epoch: usize,
    /// Largest edge length of `G^{(i-1)}`; phases run `j = 0..=⌈log₂⌉` of it.
    pub max_length: Length,
    pub phases: Vec<PhaseTrace>,
    /// Edges that were new or shortened the hopset in this epoch.
    pub added: usize,
    pub hopset_size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SizeBound {
    /// `"general"` or `"small-a"`.
    pub regime: &'static str,
    pub value: f64,
    pub log_lambda_n: f64,
    pub phases: usize,
    pub repetitions: usize,
    pub epochs: usize,
}

/// Soft ceiling on the hopset size from the solved size recurrence.
///
/// Per epoch and per phase repetition the clustered-DAG reduction adds at
/// most `(1+a)^{2L}·(M + 2L·b)` edges (general) or `2L·(a·M + b)` edges
/// (when `a < 1/(c₀L²)`), plus at most `2n` star edges, where `L = log_λ n`
/// and `M` is the current edge count.
pub fn compute_size_bound(
    cfg: &ReductionConfig,
    n: usize,
    m: usize,
    max_len: Length,
    law: &OracleSizeLaw,
) -> SizeBound {
    let l = ((n.max(2) as f64).ln() / (cfg.lambda.max(2) as f64).ln()).max(1.0);
    let a = rational::to_f64(law.a);
    let b = rational::to_f64(law.b);
    let small = a < 1.0 / (rational::to_f64(cfg.c0) * l * l);
    let phases = ceil_log2(max_len) as usize + 1;
    let reps = cfg.repetitions(n);
    let (lp, _) = lambda_prime(cfg, n);
    let epochs = epoch_count(lp, n);
    let per_unit = |mm: f64| {
        let dag = if small {
            2.0 * l * (a * mm + b)
        } else {
            (1.0 + a).powf(2.0 * l) * (mm + 2.0 * l * b)
        };
        dag + 2.0 * n as f64
    };
    let mut total = m as f64;
    for _ in 0..epochs {
        total += (phases * reps) as f64 * per_unit(total);
    }
    SizeBound {
        regime: if small { "small-a" } else { "general" },
        value: total - m as f64,
        log_lambda_n: l,
        phases,
        repetitions: reps,
        epochs,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionReport {
    pub mode: Mode,
    pub n: usize,
    pub m: usize,
    pub max_length: Length,
    pub oracle: String,
    pub config: ReductionConfig,
    pub lambda_prime: f64,
    pub lambda_prime_clamped: bool,
    pub epochs: Vec<EpochTrace>,
    #[serde(skip)]
    pub hopset: WeightedEdgeSet,
    pub total_size: usize,
    pub oracle_calls: usize,
    pub ldd_calls: usize,
    pub fallbacks: usize,
    /// Candidate edges shorter than the true distance that were raised to it.
    pub clamp_count: usize,
    /// Candidate edges between unreachable pairs that were discarded.
    pub dropped_count: usize,
    /// Oracle calls whose precondition check failed (with invariant checks on).
    pub precondition_failures: usize,
    pub size_bound: SizeBound,
    pub size_within_bound: bool,
    /// `(1+ε)^k` with `k = 3·⌈log_λ n⌉·epochs`; zero (untracked) for shortcuts.
    #[serde(serialize_with = "ser_big")]
    pub stretch_bound: BigRational,
    pub stretch_bound_exponent: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_stretch: Option<Stretch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_hopbound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

fn ser_big<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&rational::format_big(r))
}

impl ReductionReport {
    /// The hopset as a shortcut (lengths dropped).
    pub fn shortcut(&self) -> EdgeSet {
        self.hopset.pairs()
    }
}

/// Builds an `(α, h)`-hopset of `g` by lifting `oracle`.
pub fn reduce_hopset(
    g: &DiGraph,
    cfg: &ReductionConfig,
    oracle: &dyn ShallowOracle,
) -> Result<ReductionReport> {
    reduce(g, cfg, oracle, Mode::Hopset)
}

/// Builds a shortcut of hopbound `h` for a unit-length `g`. `ε` is taken as 1,
/// every added edge is unweighted, so only the phase `j = 0` runs.
pub fn reduce_shortcut<O: ShortcutOracle + Clone>(
    g: &DiGraph,
    cfg: &ReductionConfig,
    oracle: &O,
) -> Result<ReductionReport> {
    if !g.is_unit() {
        return Err(Error::InvalidParameter(
            "shortcut mode needs unit lengths".into(),
        ));
    }
    let adapter = ShortcutAdapter {
        inner: oracle.clone(),
        lengths: ShortcutLengths::Unit,
    };
    reduce(g, cfg, &adapter, Mode::Shortcut)
}

fn reduce(
    g: &DiGraph,
    cfg: &ReductionConfig,
    oracle: &dyn ShallowOracle,
    mode: Mode,
) -> Result<ReductionReport> {
    let n = g.n();
    let eps = effective_eps(cfg, mode);
    let cfg = &ReductionConfig { eps, ..cfg.clone() };
    cfg.validate(n)?;
    let (lp, clamped) = lambda_prime(cfg, n);
    if clamped {
        log::debug!("lambda' raised to 2 (n = {n})");
    }
    let epochs = epoch_count(lp, n);
    let mut hopset = WeightedEdgeSet::new();
    let mut exact_rows: HashMap<Vertex, Vec<u64>> = HashMap::new();
    let mut traces = Vec::with_capacity(epochs);
    let (mut oracle_calls, mut ldd_calls, mut fallbacks) = (0, 0, 0);
    let (mut clamp_count, mut dropped_count, mut precondition_failures) = (0, 0, 0);

    for i in 1..=epochs {
        let g_prev = g.with_extra(&hopset);
        let max_length = g_prev.edges().iter().map(|e| e.len).max().unwrap_or(1);
        let epoch_seed = rng::split(cfg.seed, i as u64);
        let mut epoch_edges = WeightedEdgeSet::new();
        let mut phases = Vec::new();
        for j in 0..=ceil_log2(max_length) {
            let plan = PhasePlan::new(i, j, eps);
            let out = run_phase(
                &g_prev,
                &plan,
                cfg,
                oracle,
                mode,
                rng::split(epoch_seed, j as u64),
            )?;
            ldd_calls += out.trace.repetitions.len();
            for t in &out.dag_traces {
                oracle_calls += t.oracle_calls();
                fallbacks += t.fallbacks;
                precondition_failures += t
                    .iterations
                    .iter()
                    .filter(|r| r.call.precondition_holds == Some(false))
                    .count();
            }
            for e in out.edges.iter() {
                let len = match mode {
                    Mode::Shortcut => e.len,
                    Mode::Hopset => {
                        let d = exact_rows
                            .entry(e.tail)
                            .or_insert_with(|| sssp(g, e.tail, Direction::Out))[e.head];
                        if d == INF {
                            dropped_count += 1;
                            continue;
                        }
                        if e.len < d {
                            clamp_count += 1;
                            d
                        } else {
                            e.len
                        }
                    }
                };
                epoch_edges.insert(e.tail, e.head, len);
            }
            phases.push(out.trace);
        }
        let added = hopset.union_with(&epoch_edges);
        traces.push(EpochTrace {
            epoch: i,
            max_length,
            phases,
            added,
            hopset_size: hopset.len(),
        });
    }

    let law = oracle.size_law(n);
    let size_bound = compute_size_bound(cfg, n, g.m(), g.max_length_bound(), &law);
    let size_within_bound = (hopset.len() as f64) <= size_bound.value;
    if !size_within_bound {
        log::warn!(
            "hopset size {} exceeds the soft bound {:.0}",
            hopset.len(),
            size_bound.value
        );
    }
    let exponent = 3 * ceil_log_lambda(cfg.lambda, n) * epochs as u32;
    let stretch_bound = match mode {
        Mode::Hopset => rational::one_plus_pow(eps, exponent),
        Mode::Shortcut => BigRational::zero(),
    };

    let mut report = ReductionReport {
        mode,
        n,
        m: g.m(),
        max_length: g.max_length_bound(),
        oracle: oracle.name().to_string(),
        config: cfg.clone(),
        lambda_prime: lp,
        lambda_prime_clamped: clamped,
        epochs: traces,
        total_size: hopset.len(),
        hopset,
        oracle_calls,
        ldd_calls,
        fallbacks,
        clamp_count,
        dropped_count,
        precondition_failures,
        size_bound,
        size_within_bound,
        stretch_bound,
        stretch_bound_exponent: exponent,
        measured_stretch: None,
        measured_hopbound: None,
        verified: None,
    };
    if cfg.measure && n <= cfg.verify_ceiling {
        let v = match mode {
            Mode::Hopset => verify::verify_hopset(
                g,
                &report.hopset,
                &report.stretch_bound,
                cfg.h as usize,
                cfg.verify_ceiling,
            )?,
            Mode::Shortcut => verify::verify_shortcut(
                g,
                &report.hopset.pairs(),
                cfg.h as usize,
                cfg.verify_ceiling,
            )?,
        };
        report.measured_stretch = v.measured_stretch;
        report.measured_hopbound = v.measured_hopbound;
        report.verified = Some(v.passed);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, GeneratorSpec};
    use crate::graph::dist_all_pairs;
    use crate::oracle::{ExactClosureShortcut, ExactTransitiveOracle};

    fn path(n: usize) -> DiGraph {
        DiGraph::unit(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn scaled_length_examples() {
        let half = Ratio64::new(1, 2);
        assert_eq!(scaled_length(7, 0, half), 7);
        assert_eq!(scaled_length(7, 3, half), 2);
        assert_eq!(scaled_length(5, 4, half), 1);
        assert_eq!(scaled_length(1, 60, Ratio64::from_integer(1000)), 1);
        assert_eq!(sigma(half, 0), 1);
        assert_eq!(sigma(Ratio64::new(2, 11), 3), 2);
        assert_eq!(sigma(Ratio64::from_integer(3), 70), u64::MAX);
    }

    #[test]
    fn ceil_logs() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(32), 5);
        assert_eq!(ceil_log2(33), 6);
        assert_eq!(ceil_log_lambda(3, 27), 3);
        assert_eq!(ceil_log_lambda(3, 28), 4);
        assert_eq!(ceil_log_lambda(9, 1), 1);
    }

    #[test]
    fn lambda_prime_and_epochs() {
        let mut cfg = ReductionConfig::new(800, 4);
        cfg.eps = Ratio64::one();
        // 800 / 10² = 8, log_8 1024 = 10/3
        let (lp, clamped) = lambda_prime(&cfg, 1024);
        assert!((lp - 8.0).abs() < 1e-9 && !clamped);
        assert_eq!(epoch_count(lp, 1024), 5);
        cfg.eps = Ratio64::from_integer(4);
        assert!((lambda_prime(&cfg, 1024).0 - 8.0).abs() < 1e-9);
        cfg.lambda = 10;
        assert_eq!(lambda_prime(&cfg, 1024), (2.0, true));
        assert_eq!(epoch_count(2.0, 1024), 11);
        assert_eq!(epoch_count(2.0, 1), 1);
    }

    #[test]
    fn stars() {
        assert!(build_stars(&[vec![0], vec![1]], 5).is_empty());
        let s = build_stars(&[vec![3, 1, 2, 7]], 5);
        assert_eq!(s.len(), 6);
        assert!(s
            .iter()
            .all(|e| (e.tail == 1) != (e.head == 1) && e.len == 5));
    }

    #[test]
    fn strict_mode_refuses_small_lambda() {
        let mut cfg = ReductionConfig::new(100, 4);
        cfg.strict = true;
        assert!(matches!(
            reduce_hopset(&path(64), &cfg, &ExactTransitiveOracle),
            Err(Error::StrictMode(_))
        ));
        cfg.lambda = 10_000;
        assert!(cfg.validate(64).is_ok());
    }

    #[test]
    fn edgeless_graph_gives_nothing() {
        let g = DiGraph::empty(5);
        let mut cfg = ReductionConfig::new(8, 2);
        cfg.ldd_repetitions = Some(2);
        let r = reduce_hopset(&g, &cfg, &ExactTransitiveOracle).unwrap();
        assert_eq!(r.total_size, 0);
        assert_eq!(r.verified, Some(true));
    }

    #[test]
    fn hopset_on_weighted_graph_preserves_distances() {
        let g = generate(&GeneratorSpec {
            family: Family::RandomGnm { n: 40, m: 120 },
            max_len: 16,
            seed: 3,
        })
        .unwrap();
        let mut cfg = ReductionConfig::new(16, 2);
        cfg.ldd_repetitions = Some(2);
        cfg.seed = 9;
        let r = reduce_hopset(&g, &cfg, &ExactTransitiveOracle).unwrap();
        assert_eq!(r.clamp_count, 0);
        assert_eq!(r.dropped_count, 0);
        assert_eq!(dist_all_pairs(&g), dist_all_pairs(&g.with_extra(&r.hopset)));
        assert_eq!(r.verified, Some(true));
        assert!(r
            .measured_stretch
            .as_ref()
            .unwrap()
            .is_at_most(&r.stretch_bound));
        assert_eq!(
            r.ldd_calls,
            r.epochs.iter().map(|e| e.phases.len() * 2).sum::<usize>()
        );
    }

    #[test]
    fn shortcut_on_disjoint_paths_stays_within_paths() {
        let g = generate(&GeneratorSpec::unit(Family::DisjointPaths {
            paths: 4,
            len: 32,
        }))
        .unwrap();
        let cfg = ReductionConfig::new(8, 4);
        let r = reduce_shortcut(&g, &cfg, &ExactClosureShortcut).unwrap();
        assert_eq!(r.verified, Some(true));
        assert!(r.measured_hopbound.unwrap() <= 4);
        assert!(r.shortcut().iter().all(|&(u, v)| u / 32 == v / 32 && u < v));
        assert!(r.epochs.iter().all(|e| e.phases.len() == 1));
    }

    #[test]
    fn report_is_deterministic() {
        let g = generate(&GeneratorSpec {
            family: Family::RandomGnm { n: 30, m: 90 },
            max_len: 8,
            seed: 1,
        })
        .unwrap();
        let mut cfg = ReductionConfig::new(12, 2);
        cfg.ldd_repetitions = Some(2);
        cfg.seed = 77;
        let a = reduce_hopset(&g, &cfg, &ExactTransitiveOracle).unwrap();
        let b = reduce_hopset(&g, &cfg, &ExactTransitiveOracle).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn size_bound_regimes() {
        let cfg = ReductionConfig::new(16, 4);
        let law = OracleSizeLaw::all_pairs(512);
        let b = compute_size_bound(&cfg, 512, 511, 1, &law);
        assert_eq!(b.regime, "small-a");
        assert!(b.value.is_finite() && b.value > 0.0);
        let lumpy = OracleSizeLaw::new(Ratio64::new(1, 2), Ratio64::zero());
        assert_eq!(
            compute_size_bound(&cfg, 512, 511, 1, &lumpy).regime,
            "general"
        );
        let l = (512f64).ln() / 16f64.ln();
        let tiny = OracleSizeLaw::new(Ratio64::new(1, (8.0 * l * l) as u64), Ratio64::zero());
        assert_eq!(
            compute_size_bound(&cfg, 512, 511, 1, &tiny).regime,
            "small-a"
        );
    }
}
