//! The shallow-graph oracle contract and reference oracles.
//!
//! A [`ShallowOracle`] is handed a graph that already has `α₀`-approximate
//! shortest-path hopbound `λh` and must return an `(α₀·stretch, h)`-hopset of
//! it whose size obeys a declared law `|out| <= a·m₀ + b`. Every call made by
//! the reductions goes through [`invoke`], which enforces the size law at
//! runtime.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng as _;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    check_approx_hopbound, hop_limited_from, sssp, transitive_closure, DiGraph, Direction, Edge,
    EdgeSet, Vertex, WeightedEdgeSet, INF,
};
use crate::rational::{self, Ratio64};
use crate::rng;
use crate::verify;

/// `|output| <= a·m₀ + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSizeLaw {
    #[serde(serialize_with = "ser_ratio")]
    pub a: Ratio64,
    #[serde(serialize_with = "ser_ratio")]
    pub b: Ratio64,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&rational::format_ratio(*r))
}

impl OracleSizeLaw {
    pub fn new(a: Ratio64, b: Ratio64) -> Self {
        OracleSizeLaw { a, b }
    }

    /// `a = 0, b = n(n-1)`: at most one edge per ordered pair.
    pub fn all_pairs(n: usize) -> Self {
        let pairs = (n as u64).saturating_mul((n as u64).saturating_sub(1));
        OracleSizeLaw::new(Ratio64::zero(), Ratio64::from_integer(pairs))
    }

    pub fn admits(&self, size: usize, m0: usize) -> bool {
        // size <= a.n/a.d * m0 + b.n/b.d, cross-multiplied
        let (an, ad) = (*self.a.numer() as u128, *self.a.denom() as u128);
        let (bn, bd) = (*self.b.numer() as u128, *self.b.denom() as u128);
        let lhs = size as u128 * ad * bd;
        let rhs = an * m0 as u128 * bd + bn * ad;
        lhs <= rhs
    }

    pub fn bound_f64(&self, m0: f64) -> f64 {
        rational::to_f64(self.a) * m0 + rational::to_f64(self.b)
    }

    pub fn describe(&self, m0: usize) -> String {
        format!(
            "{}*{}+{}",
            rational::format_ratio(self.a),
            m0,
            rational::format_ratio(self.b)
        )
    }
}

/// One request to an oracle.
#[derive(Clone, Debug)]
pub struct OracleCall<'a> {
    /// Approximation the input graph already satisfies at hop budget `lambda_h`.
    pub alpha0: BigRational,
    pub graph: &'a DiGraph,
    pub lambda_h: u64,
    pub target_h: u64,
    /// Independent stream for this call.
    pub seed: u64,
}

#[derive(Clone, Debug, Default)]
pub struct OracleOutput {
    pub edges: WeightedEdgeSet,
    /// The oracle could not certify its own construction and returned the
    /// exact fallback instead.
    pub fell_back: bool,
}

pub trait ShallowOracle: Send + Sync {
    fn name(&self) -> &str;

    /// Size law for inputs on `n` vertices.
    fn size_law(&self, n: usize) -> OracleSizeLaw;

    /// Multiplicative slack over `α₀`; `None` when distances are not tracked
    /// (reachability-only oracles).
    fn stretch_factor(&self) -> Option<Ratio64>;

    fn construct(&self, call: &OracleCall<'_>) -> Result<OracleOutput>;
}

/// What [`invoke`] observed about a call.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CallRecord {
    pub m0: usize,
    pub output_size: usize,
    pub size_law: String,
    pub fell_back: bool,
    /// Result of the optional precondition check.
    pub precondition_holds: Option<bool>,
}

/// Calls the oracle and asserts the size law. With `check_precondition` the
/// input is first tested for `α₀`-approximate hopbound `λh` (cost
/// `O(n·m·λh)`); a failed check is recorded, not fatal.
pub fn invoke(
    oracle: &dyn ShallowOracle,
    call: &OracleCall<'_>,
    check_precondition: bool,
) -> Result<(OracleOutput, CallRecord)> {
    let precondition_holds = check_precondition
        .then(|| check_approx_hopbound(call.graph, &call.alpha0, call.lambda_h as usize).holds);
    let out = oracle.construct(call)?;
    let law = oracle.size_law(call.graph.n());
    let m0 = call.graph.m();
    if !law.admits(out.edges.len(), m0) {
        return Err(Error::SizeLawViolation {
            oracle: oracle.name().to_string(),
            size: out.edges.len(),
            bound: law.describe(m0),
        });
    }
    let record = CallRecord {
        m0,
        output_size: out.edges.len(),
        size_law: law.describe(m0),
        fell_back: out.fell_back,
        precondition_holds,
    };
    Ok((out, record))
}

/// Adds `(u, v, dist(u, v))` for every reachable pair: a `(1, 1)`-hopset.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactTransitiveOracle;

pub fn exact_transitive_hopset(g: &DiGraph) -> WeightedEdgeSet {
    let mut out = WeightedEdgeSet::new();
    for u in 0..g.n() {
        if g.out_edge_ids(u).is_empty() {
            continue;
        }
        for (v, d) in sssp(g, u, Direction::Out).into_iter().enumerate() {
            if v != u && d != INF {
                out.insert(u, v, d);
            }
        }
    }
    out
}

impl ShallowOracle for ExactTransitiveOracle {
    fn name(&self) -> &str {
        "exact"
    }

    fn size_law(&self, n: usize) -> OracleSizeLaw {
        OracleSizeLaw::all_pairs(n)
    }

    fn stretch_factor(&self) -> Option<Ratio64> {
        Some(Ratio64::one())
    }

    fn construct(&self, call: &OracleCall<'_>) -> Result<OracleOutput> {
        Ok(OracleOutput {
            edges: exact_transitive_hopset(call.graph),
            fell_back: false,
        })
    }
}

/// Samples hubs and links each to everything within `λh` hops in both
/// directions, then checks the result and falls back to the exact oracle if
/// it is not an `(α₀·stretch, h)`-hopset.
#[derive(Clone, Debug)]
pub struct HubSamplingOracle {
    pub hub_rate: Ratio64,
    pub stretch: Ratio64,
    /// Inputs above this many vertices are not self-checked and go straight
    /// to the fallback.
    pub verify_ceiling: usize,
}

impl HubSamplingOracle {
    pub fn new(hub_rate: Ratio64, stretch: Ratio64) -> Self {
        HubSamplingOracle {
            hub_rate,
            stretch,
            verify_ceiling: verify::DEFAULT_CEILING,
        }
    }

    /// The unchecked hub construction.
    pub fn hub_edges(&self, g: &DiGraph, lambda_h: u64, seed: u64) -> WeightedEdgeSet {
        let mut rng = rng::rng_from(seed);
        let p = rational::to_f64(self.hub_rate).clamp(0.0, 1.0);
        let hubs: Vec<Vertex> = (0..g.n()).filter(|_| rng.random_bool(p)).collect();
        let reversed = reverse(g);
        let hops = lambda_h as usize;
        let mut out = WeightedEdgeSet::new();
        for &x in &hubs {
            for (v, d) in hop_limited_from(g, x, hops).into_iter().enumerate() {
                if d != INF {
                    out.insert(x, v, d);
                }
            }
            for (v, d) in hop_limited_from(&reversed, x, hops).into_iter().enumerate() {
                if d != INF {
                    out.insert(v, x, d);
                }
            }
        }
        out
    }
}

fn reverse(g: &DiGraph) -> DiGraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge::new(e.head, e.tail, e.len))
        .collect();
    DiGraph::build(g.n(), edges, g.max_length_bound())
}

impl ShallowOracle for HubSamplingOracle {
    fn name(&self) -> &str {
        "hub"
    }

    fn size_law(&self, n: usize) -> OracleSizeLaw {
        OracleSizeLaw::all_pairs(n)
    }

    fn stretch_factor(&self) -> Option<Ratio64> {
        Some(self.stretch)
    }

    fn construct(&self, call: &OracleCall<'_>) -> Result<OracleOutput> {
        let g = call.graph;
        if g.n() <= self.verify_ceiling {
            let edges = self.hub_edges(g, call.lambda_h, call.seed);
            let alpha = &call.alpha0 * rational::to_big(self.stretch);
            let report = verify::verify_hopset(
                g,
                &edges,
                &alpha,
                call.target_h as usize,
                self.verify_ceiling,
            )?;
            if report.passed {
                return Ok(OracleOutput {
                    edges,
                    fell_back: false,
                });
            }
        }
        log::debug!(
            "hub oracle fell back to the exact construction on n={}",
            g.n()
        );
        Ok(OracleOutput {
            edges: exact_transitive_hopset(g),
            fell_back: true,
        })
    }
}

/// A reachability-only oracle: returns a shortcut of hopbound `h` for a graph
/// of reachability diameter about `λh`.
pub trait ShortcutOracle: Send + Sync {
    fn name(&self) -> &str;

    fn size_law(&self, n: usize) -> OracleSizeLaw;

    fn construct(
        &self,
        graph: &DiGraph,
        lambda_h: u64,
        target_h: u64,
        seed: u64,
    ) -> Result<EdgeSet>;
}

/// The full transitive closure (hopbound 1).
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactClosureShortcut;

impl ShortcutOracle for ExactClosureShortcut {
    fn name(&self) -> &str {
        "exact"
    }

    fn size_law(&self, n: usize) -> OracleSizeLaw {
        OracleSizeLaw::all_pairs(n)
    }

    fn construct(
        &self,
        graph: &DiGraph,
        _lambda_h: u64,
        _target_h: u64,
        _seed: u64,
    ) -> Result<EdgeSet> {
        let closure = transitive_closure(graph);
        let mut out = EdgeSet::new();
        for u in 0..graph.n() {
            if graph.out_edge_ids(u).is_empty() {
                continue;
            }
            out.extend(
                closure
                    .reachable_from(u)
                    .filter(|&v| v != u)
                    .map(|v| (u, v)),
            );
        }
        Ok(out)
    }
}

/// How shortcut edges get lengths when used as hopset edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShortcutLengths {
    /// `(u, v)` gets `dist_G(u, v)`: distances are preserved.
    DistancePreserving,
    /// Every edge gets length 1: only reachability is meaningful.
    Unit,
}

/// Turns a shortcut into a hopset over `g`. Fails on any edge whose endpoints
/// are not a reachable pair.
pub fn shortcut_oracle_adapter(
    shortcut: &EdgeSet,
    g: &DiGraph,
    mode: ShortcutLengths,
) -> Result<WeightedEdgeSet> {
    let mut out = WeightedEdgeSet::new();
    if shortcut.is_empty() {
        return Ok(out);
    }
    let mut rows: HashMap<Vertex, Vec<u64>> = HashMap::new();
    for &(u, v) in shortcut {
        if u >= g.n() || v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n: g.n(),
            });
        }
        let row = rows.entry(u).or_insert_with(|| sssp(g, u, Direction::Out));
        let d = row[v];
        if d == INF {
            return Err(Error::UnreachableShortcut(u, v));
        }
        let len = match mode {
            ShortcutLengths::DistancePreserving => d,
            ShortcutLengths::Unit => 1,
        };
        out.insert(u, v, len);
    }
    Ok(out)
}

/// Wraps a [`ShortcutOracle`] as a [`ShallowOracle`] with unbounded stretch.
#[derive(Clone, Debug)]
pub struct ShortcutAdapter<O> {
    pub inner: O,
    pub lengths: ShortcutLengths,
}

impl<O: ShortcutOracle> ShallowOracle for ShortcutAdapter<O> {
    fn name(&self) -> &str {
        self.inner.name()
    }

    fn size_law(&self, n: usize) -> OracleSizeLaw {
        self.inner.size_law(n)
    }

    fn stretch_factor(&self) -> Option<Ratio64> {
        None
    }

    fn construct(&self, call: &OracleCall<'_>) -> Result<OracleOutput> {
        let shortcut = self
            .inner
            .construct(call.graph, call.lambda_h, call.target_h, call.seed)?;
        Ok(OracleOutput {
            edges: shortcut_oracle_adapter(&shortcut, call.graph, self.lengths)?,
            fell_back: false,
        })
    }
}
