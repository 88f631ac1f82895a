//! Exhaustive verifiers for every guarantee the constructions claim.
//!
//! Only graph-core primitives are used here, never the construction code, so
//! a bug in a construction cannot hide itself from its checker.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    hop_bfs, scc_topological, sssp, strong_diameter, DiGraph, Direction, EdgeSet, Vertex,
    WeightedEdgeSet, INF,
};
use crate::ldd::LddResult;
use crate::rational::{self, Stretch};

/// Default vertex ceiling for all-pairs verification.
pub const DEFAULT_CEILING: usize = 2000;

/// At most this many violations are kept verbatim; the count is exact.
const KEEP_VIOLATIONS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Hopset,
    Shortcut,
    Ldd,
    Clustered,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: &'static str,
    pub witness: (Vertex, Vertex),
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: CheckKind,
    pub passed: bool,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    /// Hopsets: worst `dist^{(h)}_{G∪H} / dist_G` over reachable pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_stretch: Option<Stretch>,
    /// Hopsets: smallest hop budget meeting the stretch target for every
    /// pair. Shortcuts: hop diameter of `G ∪ H`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_hopbound: Option<u64>,
    /// LDD: largest weak diameter of a component; clustered: largest strong
    /// diameter of an SCC.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_diameter: Option<u64>,
}

impl VerificationReport {
    fn new(kind: CheckKind) -> Self {
        VerificationReport {
            kind,
            passed: true,
            violation_count: 0,
            violations: Vec::new(),
            measured_stretch: None,
            measured_hopbound: None,
            max_diameter: None,
        }
    }

    fn push(
        &mut self,
        kind: &'static str,
        witness: (Vertex, Vertex),
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.passed = false;
        self.violation_count += 1;
        if self.violations.len() < KEEP_VIOLATIONS {
            self.violations.push(Violation {
                kind,
                witness,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

fn guard(n: usize, ceiling: usize) -> Result<()> {
    if n > ceiling {
        return Err(Error::TooLarge { n, ceiling });
    }
    Ok(())
}

fn show(d: u64) -> String {
    if d == INF {
        "inf".into()
    } else {
        d.to_string()
    }
}

/// `x <= alpha * y`, using native arithmetic when `alpha` fits.
enum AlphaTest {
    Small(u128, u128),
    Big(BigRational),
}

impl AlphaTest {
    fn new(alpha: &BigRational) -> Self {
        match (alpha.numer().to_u64(), alpha.denom().to_u64()) {
            (Some(n), Some(d)) => AlphaTest::Small(n as u128, d as u128),
            _ => AlphaTest::Big(alpha.clone()),
        }
    }

    fn le(&self, x: u64, y: u64) -> bool {
        if x == INF {
            return false;
        }
        match self {
            AlphaTest::Small(n, d) => x as u128 * d <= n * y as u128,
            AlphaTest::Big(a) => BigInt::from(x) * a.denom() <= a.numer() * BigInt::from(y),
        }
    }
}

/// Checks that `hopset` is an `(alpha, h)`-hopset of `g`: no distance of `g`
/// decreases, and every pair is `alpha`-approximated within `h` hops.
///
/// The lower bound is checked per hopset edge: `dist_{G∪H} = dist_G`
/// everywhere iff every edge `(u, v, w)` has `w >= dist_G(u, v)`.
pub fn verify_hopset(
    g: &DiGraph,
    hopset: &WeightedEdgeSet,
    alpha: &BigRational,
    h: usize,
    ceiling: usize,
) -> Result<VerificationReport> {
    guard(g.n(), ceiling)?;
    let mut report = VerificationReport::new(CheckKind::Hopset);
    let n = g.n();
    let exact: Vec<Vec<u64>> = (0..n).map(|u| sssp(g, u, Direction::Out)).collect();
    for e in hopset.iter() {
        if e.tail >= n || e.head >= n {
            report.push(
                "vertex-out-of-range",
                (e.tail, e.head),
                format!("< {n}"),
                "out of range",
            );
            continue;
        }
        let d = exact[e.tail][e.head];
        if e.len < d {
            report.push(
                "distance-decrease",
                (e.tail, e.head),
                format!(">= {}", show(d)),
                e.len,
            );
        }
    }
    if !report.passed {
        return Ok(report);
    }
    let union = g.with_extra(hopset);
    let test = AlphaTest::new(alpha);
    let mut stretch = Stretch::one();
    let mut hopbound = Some(0u64);
    for (u, row) in exact.iter().enumerate() {
        let (limited, first_ok) = hop_profile(&union, u, h, row, &test);
        for (v, &d) in row.iter().enumerate() {
            if u == v || d == INF {
                continue;
            }
            let dh = limited[v];
            stretch = stretch.max(if dh == INF {
                Stretch::Unbounded
            } else {
                Stretch::Finite(rational::Ratio64::new(dh, d))
            });
            match first_ok[v] {
                Some(r) => hopbound = hopbound.map(|b| b.max(r)),
                None => {
                    hopbound = None;
                    report.push(
                        "stretch",
                        (u, v),
                        format!("<= {} * {}", rational::format_big(alpha), d),
                        show(dh),
                    );
                }
            }
        }
    }
    report.measured_stretch = Some(stretch);
    report.measured_hopbound = hopbound;
    Ok(report)
}

/// `h` synchronous relaxation rounds from `s`, recording for each target the
/// first round at which `dist^{(round)} <= alpha * exact`.
fn hop_profile(
    g: &DiGraph,
    s: Vertex,
    h: usize,
    exact: &[u64],
    test: &AlphaTest,
) -> (Vec<u64>, Vec<Option<u64>>) {
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut first = vec![None; n];
    dist[s] = 0;
    first[s] = Some(0);
    let mut frontier = vec![(s, 0u64)];
    let mut next: Vec<Vertex> = Vec::new();
    let mut queued = vec![false; n];
    for round in 1..=h.min(n.saturating_sub(1)) as u64 {
        for &(u, du) in &frontier {
            for e in g.out_edges(u) {
                if e.is_loop() {
                    continue;
                }
                let nd = du.saturating_add(e.len);
                if nd < dist[e.head] {
                    dist[e.head] = nd;
                    if !queued[e.head] {
                        queued[e.head] = true;
                        next.push(e.head);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier.clear();
        for &v in &next {
            queued[v] = false;
            frontier.push((v, dist[v]));
            if first[v].is_none() && exact[v] != INF && test.le(dist[v], exact[v]) {
                first[v] = Some(round);
            }
        }
        next.clear();
    }
    (dist, first)
}

/// Checks that every shortcut edge joins a reachable pair of `g` and that
/// `G ∪ shortcut` has hop diameter at most `h`. Lengths are ignored.
pub fn verify_shortcut(
    g: &DiGraph,
    shortcut: &EdgeSet,
    h: usize,
    ceiling: usize,
) -> Result<VerificationReport> {
    guard(g.n(), ceiling)?;
    let n = g.n();
    let mut report = VerificationReport::new(CheckKind::Shortcut);
    let mut tail_rows: std::collections::BTreeMap<Vertex, Vec<u64>> = Default::default();
    for &(u, v) in shortcut {
        if u >= n || v >= n {
            report.push(
                "vertex-out-of-range",
                (u, v),
                format!("< {n}"),
                "out of range",
            );
            continue;
        }
        let row = tail_rows.entry(u).or_insert_with(|| hop_bfs(g, u));
        if row[v] == INF {
            report.push("unreachable-pair", (u, v), "reachable in G", "unreachable");
        }
    }
    if !report.passed {
        return Ok(report);
    }
    let mut union = WeightedEdgeSet::new();
    for &(u, v) in shortcut {
        union.insert(u, v, 1);
    }
    let union = g.with_extra(&union);
    let mut diameter = 0u64;
    let mut over: Vec<(u64, Vertex, Vertex)> = Vec::new();
    for u in 0..n {
        for (v, d) in hop_bfs(&union, u).into_iter().enumerate() {
            if d == INF {
                continue;
            }
            diameter = diameter.max(d);
            if d > h as u64 {
                over.push((d, u, v));
            }
        }
    }
    // worst first: most hops, then lexicographic
    over.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    for (d, u, v) in over {
        report.push("hopbound", (u, v), format!("<= {h}"), d);
    }
    report.measured_hopbound = Some(diameter);
    Ok(report)
}

/// Checks an LDD result: partition, topological order of `G - E^rem`, each
/// component strongly connected in `G - E^rem`, weak diameter at most `d`.
pub fn verify_ldd(
    g: &DiGraph,
    d: u64,
    result: &LddResult,
    ceiling: usize,
) -> Result<VerificationReport> {
    guard(g.n(), ceiling)?;
    let n = g.n();
    let mut report = VerificationReport::new(CheckKind::Ldd);
    let mut comp = vec![usize::MAX; n];
    for (i, c) in result.components.iter().enumerate() {
        for &v in c {
            if v >= n {
                report.push(
                    "vertex-out-of-range",
                    (v, v),
                    format!("< {n}"),
                    "out of range",
                );
            } else if comp[v] != usize::MAX {
                report.push(
                    "partition",
                    (v, v),
                    "exactly one component",
                    format!("components {} and {i}", comp[v]),
                );
            } else {
                comp[v] = i;
            }
        }
    }
    for (v, &c) in comp.iter().enumerate() {
        if c == usize::MAX {
            report.push("partition", (v, v), "exactly one component", "none");
        }
    }
    let mut removed = vec![false; g.m()];
    for &e in &result.removed_edges {
        if e >= g.m() {
            report.push(
                "edge-out-of-range",
                (e, e),
                format!("< {}", g.m()),
                "out of range",
            );
        } else {
            removed[e] = true;
        }
    }
    if !report.passed {
        return Ok(report);
    }
    for (i, e) in g.edges().iter().enumerate() {
        if !removed[i] && comp[e.tail] > comp[e.head] {
            report.push(
                "topological-order",
                (e.tail, e.head),
                format!("component {} <= {}", comp[e.tail], comp[e.head]),
                "backward edge",
            );
        }
    }
    let kept = g.filter_edges(|i, _| !removed[i]);
    for c in result.components.iter().filter(|c| c.len() >= 2) {
        let fwd = sssp(&kept, c[0], Direction::Out);
        let bwd = sssp(&kept, c[0], Direction::In);
        if let Some(&v) = c.iter().find(|&&v| fwd[v] == INF || bwd[v] == INF) {
            report.push(
                "strongly-connected",
                (c[0], v),
                "mutually reachable in G - E^rem",
                "not",
            );
        }
    }
    let mut widest = 0u64;
    for c in &result.components {
        for &u in c {
            let row = sssp(g, u, Direction::Out);
            for &v in c {
                widest = widest.max(row[v]);
                if row[v] > d {
                    report.push("weak-diameter", (u, v), format!("<= {d}"), show(row[v]));
                }
            }
        }
    }
    report.max_diameter = Some(widest);
    Ok(report)
}

/// Checks that every strongly connected component has strong diameter at most `d`.
pub fn verify_clustered(g: &DiGraph, d: u64, ceiling: usize) -> Result<VerificationReport> {
    guard(g.n(), ceiling)?;
    let mut report = VerificationReport::new(CheckKind::Clustered);
    let mut widest = 0u64;
    for c in scc_topological(g) {
        let sd = strong_diameter(g, &c);
        widest = widest.max(sd);
        if sd > d {
            report.push(
                "strong-diameter",
                (c[0], c[c.len() - 1]),
                format!("<= {d}"),
                show(sd),
            );
        }
    }
    report.max_diameter = Some(widest);
    Ok(report)
}
