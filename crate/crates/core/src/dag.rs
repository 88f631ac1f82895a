//! Clustered-DAG reduction.
//!
//! Input: a graph whose strongly connected components have strong diameter
//! at most `λh`, with the components in topological order. Each iteration
//! strips edges crossing the current groups, asks the oracle for a hopset of
//! the stripped graph, adds it, and merges `λ` consecutive groups. The run
//! stops after the call made on a single group.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{check_approx_hopbound, DiGraph, Direction, Length, Vertex, WeightedEdgeSet};
use crate::oracle::{invoke, CallRecord, OracleCall, ShallowOracle};
use crate::rational::{self, Ratio64};
use crate::rng;

#[derive(Clone, Debug)]
pub struct ClusteredInput {
    pub graph: DiGraph,
    /// `C_1, …, C_z`: the strongly connected components in topological order.
    pub components_topo: Vec<Vec<Vertex>>,
    pub cluster_diameter: Length,
}

impl ClusteredInput {
    /// Builds the input from the graph's own SCC order.
    pub fn from_graph(graph: DiGraph, cluster_diameter: Length) -> Self {
        let components_topo = crate::graph::scc_topological(&graph);
        ClusteredInput {
            graph,
            components_topo,
            cluster_diameter,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DagParams {
    pub lambda: u64,
    pub h: u64,
    pub eps: Ratio64,
    pub seed: u64,
    /// Require `λ >= 9` instead of `λ >= 2`.
    pub strict: bool,
    /// Check the oracle precondition before each call and the per-group
    /// hopbound after it. Costs `O(n·m·λh)` per iteration.
    pub check_invariants: bool,
}

impl DagParams {
    pub fn new(lambda: u64, h: u64, eps: Ratio64) -> Self {
        DagParams {
            lambda,
            h,
            eps,
            seed: 0,
            strict: false,
            check_invariants: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    #[serde(serialize_with = "ser_big")]
    pub alpha0: BigRational,
    /// `z^{(i-1)}`: groups the oracle saw.
    pub groups_in: usize,
    /// `z^{(i)}` after merging (equal to `groups_in` on the final call).
    pub groups_out: usize,
    /// Edges of the stripped graph handed to the oracle.
    pub oracle_input_edges: usize,
    pub call: CallRecord,
    /// After the call, every group has the expected hopbound (only when
    /// invariant checking is on).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups_hold: Option<bool>,
}

fn ser_big<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&rational::format_big(r))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DagReduceTrace {
    pub iterations: Vec<IterationRecord>,
    pub fallbacks: usize,
}

impl DagReduceTrace {
    pub fn oracle_calls(&self) -> usize {
        self.iterations.len()
    }
}

/// Unions `lambda` consecutive groups; the last group may be shorter.
pub fn merge_groups(groups: &[Vec<Vertex>], lambda: usize) -> Vec<Vec<Vertex>> {
    assert!(lambda >= 2, "lambda must be at least 2");
    groups
        .chunks(lambda)
        .map(|c| {
            let mut g: Vec<Vertex> = c.concat();
            g.sort_unstable();
            g
        })
        .filter(|g| !g.is_empty())
        .collect()
}

/// Drops every edge whose endpoints lie in different groups, and self-loops.
pub fn strip_cross_edges(g: &DiGraph, groups: &[Vec<Vertex>]) -> DiGraph {
    let group = group_index(g.n(), groups);
    g.filter_edges(|_, e| !e.is_loop() && group[e.tail] == group[e.head])
}

fn group_index(n: usize, groups: &[Vec<Vertex>]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, grp) in groups.iter().enumerate() {
        for &v in grp {
            idx[v] = i;
        }
    }
    idx
}

/// Checks that `components` partition the vertices, that every edge goes
/// forward in the order, and that each component is strongly connected.
fn validate_order(g: &DiGraph, components: &[Vec<Vertex>]) -> Result<()> {
    let n = g.n();
    let bad = |msg: String| Err(Error::InvalidClustering(msg));
    let mut comp = vec![usize::MAX; n];
    for (i, c) in components.iter().enumerate() {
        if c.is_empty() {
            return bad(format!("component {i} is empty"));
        }
        for &v in c {
            if v >= n {
                return bad(format!("vertex {v} out of range"));
            }
            if comp[v] != usize::MAX {
                return bad(format!("vertex {v} appears in two components"));
            }
            comp[v] = i;
        }
    }
    if let Some(v) = comp.iter().position(|&c| c == usize::MAX) {
        return bad(format!("vertex {v} is in no component"));
    }
    for e in g.edges() {
        if comp[e.tail] > comp[e.head] {
            return bad(format!(
                "edge {}->{} goes backward in the order",
                e.tail, e.head
            ));
        }
    }
    // With every edge pointing forward, a search that leaves a component
    // can never return, so reachability within G decides strong connectivity.
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    for c in components.iter().filter(|c| c.len() > 1) {
        for dir in [Direction::Out, Direction::In] {
            stack.push(c[0]);
            seen[c[0]] = true;
            let mut reached = 1;
            while let Some(u) = stack.pop() {
                for (v, _) in g.neighbours(u, dir) {
                    if !seen[v] && comp[v] == comp[u] {
                        seen[v] = true;
                        reached += 1;
                        stack.push(v);
                    }
                }
            }
            for &v in c {
                seen[v] = false;
            }
            if reached != c.len() {
                return bad(format!(
                    "component containing {} is not strongly connected",
                    c[0]
                ));
            }
        }
    }
    Ok(())
}

/// Runs the reduction, returning the union of all oracle outputs.
pub fn reduce_clustered_dag(
    input: &ClusteredInput,
    oracle: &dyn ShallowOracle,
    params: &DagParams,
) -> Result<(WeightedEdgeSet, DagReduceTrace)> {
    let min_lambda = if params.strict { 9 } else { 2 };
    if params.lambda < min_lambda {
        return Err(Error::InvalidParameter(format!(
            "lambda must be at least {min_lambda}, got {}",
            params.lambda
        )));
    }
    if params.lambda < 9 {
        log::debug!(
            "lambda = {} < 9: iteration bound 2·log_λ n not guaranteed",
            params.lambda
        );
    }
    if params.h == 0 {
        return Err(Error::InvalidParameter("h must be at least 1".into()));
    }
    let lambda_h = params.lambda.saturating_mul(params.h);
    if input.cluster_diameter > lambda_h {
        return Err(Error::InvalidClustering(format!(
            "cluster diameter {} exceeds lambda*h = {lambda_h}",
            input.cluster_diameter
        )));
    }
    let g = &input.graph;
    validate_order(g, &input.components_topo)?;

    let one_plus_eps = BigRational::one() + rational::to_big(params.eps);
    let stretch = oracle.stretch_factor().map(rational::to_big);
    let mut alpha0 = BigRational::one();
    let mut groups = input.components_topo.clone();
    let mut hopset = WeightedEdgeSet::new();
    let mut trace = DagReduceTrace::default();
    if g.n() == 0 {
        return Ok((hopset, trace));
    }
    for i in 1.. {
        let current = g.with_extra(&hopset);
        let stripped = strip_cross_edges(&current, &groups);
        let call = OracleCall {
            alpha0: alpha0.clone(),
            graph: &stripped,
            lambda_h,
            target_h: params.h,
            seed: rng::split(params.seed, i as u64),
        };
        let (out, record) = invoke(oracle, &call, params.check_invariants)?;
        if out.fell_back {
            trace.fallbacks += 1;
        }
        hopset.union_with(&out.edges);

        let groups_hold = match (&stretch, params.check_invariants) {
            (Some(s), true) => {
                let after = g.with_extra(&hopset);
                let alpha = &alpha0 * s;
                Some(groups.iter().all(|grp| {
                    check_approx_hopbound(&after.induced(grp), &alpha, params.h as usize).holds
                }))
            }
            _ => None,
        };

        let groups_in = groups.len();
        let last = groups_in == 1;
        if !last {
            groups = merge_groups(&groups, params.lambda as usize);
        }
        trace.iterations.push(IterationRecord {
            iteration: i,
            alpha0: alpha0.clone(),
            groups_in,
            groups_out: groups.len(),
            oracle_input_edges: stripped.m(),
            call: record,
            groups_hold,
        });
        if last {
            break;
        }
        alpha0 *= &one_plus_eps;
    }
    Ok((hopset, trace))
}
