//! Directed graphs with positive integer lengths, overlay edge sets, and the
//! brute-force distance primitives used as ground truth throughout the crate.
//!
//! Graphs are immutable once built. Every reduction step produces an overlay
//! ([`WeightedEdgeSet`]) and a fresh union graph instead of mutating its input.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational;

pub type Vertex = usize;
pub type Length = u64;

/// Distance sentinel for unreachable pairs. All path sums saturate at it.
pub const INF: u64 = u64::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub tail: Vertex,
    pub head: Vertex,
    pub len: Length,
}

impl Edge {
    pub fn new(tail: Vertex, head: Vertex, len: Length) -> Self {
        Edge { tail, head, len }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Search direction: `Out` follows edges forward, `In` backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    In,
    Out,
}

#[derive(Clone, Debug)]
pub struct DiGraph {
    n: usize,
    edges: Vec<Edge>,
    max_len: Length,
    out_off: Vec<usize>,
    out_ids: Vec<usize>,
    in_off: Vec<usize>,
    in_ids: Vec<usize>,
}

impl PartialEq for DiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.max_len == other.max_len && self.edges == other.edges
    }
}

impl Eq for DiGraph {}

impl DiGraph {
    /// Builds a graph whose length bound `N` is the largest edge length (at
    /// least 1).
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let bound = edges.iter().map(|e| e.len).max().unwrap_or(1).max(1);
        Self::with_bound(n, edges, bound)
    }

    /// Builds a graph and checks every length against the declared bound.
    pub fn with_bound(n: usize, edges: Vec<Edge>, bound: Length) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidParameter(
                "length bound N must be at least 1".into(),
            ));
        }
        for e in &edges {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if e.len == 0 {
                return Err(Error::ZeroLength {
                    tail: e.tail,
                    head: e.head,
                });
            }
            if e.len > bound {
                return Err(Error::LengthExceedsBound {
                    tail: e.tail,
                    head: e.head,
                    len: e.len,
                    bound,
                });
            }
        }
        Ok(Self::build(n, edges, bound))
    }

    /// Convenience for tests and generators: unit-length edges.
    pub fn unit(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(u, v)| Edge::new(u, v, 1)).collect())
    }

    /// No validation; callers guarantee the invariants.
    pub(crate) fn build(n: usize, edges: Vec<Edge>, max_len: Length) -> Self {
        let (out_off, out_ids) = csr(n, &edges, |e| e.tail);
        let (in_off, in_ids) = csr(n, &edges, |e| e.head);
        DiGraph {
            n,
            edges,
            max_len,
            out_off,
            out_ids,
            in_off,
            in_ids,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::build(n, Vec::new(), 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// The length bound `N`.
    pub fn max_length_bound(&self) -> Length {
        self.max_len
    }

    pub fn is_unit(&self) -> bool {
        self.edges.iter().all(|e| e.len == 1)
    }

    pub fn out_edge_ids(&self, v: Vertex) -> &[usize] {
        &self.out_ids[self.out_off[v]..self.out_off[v + 1]]
    }

    pub fn in_edge_ids(&self, v: Vertex) -> &[usize] {
        &self.in_ids[self.in_off[v]..self.in_off[v + 1]]
    }

    pub fn out_edges(&self, v: Vertex) -> impl Iterator<Item = &Edge> + '_ {
        self.out_edge_ids(v).iter().map(move |&i| &self.edges[i])
    }

    pub fn in_edges(&self, v: Vertex) -> impl Iterator<Item = &Edge> + '_ {
        self.in_edge_ids(v).iter().map(move |&i| &self.edges[i])
    }

    /// Neighbours with lengths in the given direction, skipping self-loops.
    pub(crate) fn neighbours(
        &self,
        v: Vertex,
        dir: Direction,
    ) -> impl Iterator<Item = (Vertex, Length)> + '_ {
        let ids = match dir {
            Direction::Out => self.out_edge_ids(v),
            Direction::In => self.in_edge_ids(v),
        };
        ids.iter().filter_map(move |&i| {
            let e = &self.edges[i];
            if e.is_loop() {
                return None;
            }
            Some(match dir {
                Direction::Out => (e.head, e.len),
                Direction::In => (e.tail, e.len),
            })
        })
    }

    /// `G ∪ extra` on the same vertex set.
    pub fn with_extra(&self, extra: &WeightedEdgeSet) -> DiGraph {
        let mut edges = self.edges.clone();
        edges.extend(extra.iter());
        let bound = self.max_len.max(extra.max_len());
        Self::build(self.n, edges, bound)
    }

    /// Keeps edges satisfying `keep`; vertex ids unchanged.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, &Edge) -> bool) -> DiGraph {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, e)| keep(*i, e))
            .map(|(_, e)| *e)
            .collect();
        Self::build(self.n, edges, self.max_len)
    }

    /// `G[S]` with vertex ids unchanged; vertices outside `S` become isolated.
    pub fn induced(&self, set: &[Vertex]) -> DiGraph {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        self.filter_edges(|_, e| inside[e.tail] && inside[e.head])
    }

    /// Applies `f` to every length. Results are clamped to at least 1.
    pub fn map_lengths(&self, mut f: impl FnMut(Length) -> Length) -> DiGraph {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge::new(e.tail, e.head, f(e.len).max(1)))
            .collect();
        let bound = edges.iter().map(|e| e.len).max().unwrap_or(1).max(1);
        Self::build(self.n, edges, bound)
    }
}

fn csr(n: usize, edges: &[Edge], key: impl Fn(&Edge) -> Vertex) -> (Vec<usize>, Vec<usize>) {
    let mut off = vec![0usize; n + 1];
    for e in edges {
        off[key(e) + 1] += 1;
    }
    for i in 0..n {
        off[i + 1] += off[i];
    }
    let mut fill = off.clone();
    let mut ids = vec![0usize; edges.len()];
    for (i, e) in edges.iter().enumerate() {
        let k = key(e);
        ids[fill[k]] = i;
        fill[k] += 1;
    }
    (off, ids)
}

/// A hopset: extra weighted edges, deduplicated per ordered pair keeping the
/// minimum length. Self-loops are dropped on insertion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedEdgeSet {
    edges: BTreeMap<(Vertex, Vertex), Length>,
}

impl WeightedEdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `(u, v, len)`; returns true if the set changed.
    pub fn insert(&mut self, u: Vertex, v: Vertex, len: Length) -> bool {
        if u == v {
            return false;
        }
        match self.edges.get_mut(&(u, v)) {
            Some(w) if *w <= len => false,
            Some(w) => {
                *w = len;
                true
            }
            None => {
                self.edges.insert((u, v), len);
                true
            }
        }
    }

    pub fn insert_edge(&mut self, e: Edge) -> bool {
        self.insert(e.tail, e.head, e.len)
    }

    /// Unions `other` in; returns the number of pairs that changed.
    pub fn union_with(&mut self, other: &WeightedEdgeSet) -> usize {
        other.iter().filter(|e| self.insert_edge(*e)).count()
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<Length> {
        self.edges.get(&(u, v)).copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in `(tail, head)` order.
    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| Edge::new(u, v, w))
    }

    pub fn max_len(&self) -> Length {
        self.edges.values().copied().max().unwrap_or(1)
    }

    /// Multiplies every length by `factor`.
    pub fn scaled(&self, factor: Length) -> WeightedEdgeSet {
        WeightedEdgeSet {
            edges: self
                .edges
                .iter()
                .map(|(&k, &w)| (k, w.saturating_mul(factor)))
                .collect(),
        }
    }

    /// Same pairs, all lengths 1.
    pub fn unweighted(&self) -> WeightedEdgeSet {
        WeightedEdgeSet {
            edges: self.edges.keys().map(|&k| (k, 1)).collect(),
        }
    }

    pub fn pairs(&self) -> EdgeSet {
        self.edges.keys().copied().collect()
    }
}

impl FromIterator<Edge> for WeightedEdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut s = WeightedEdgeSet::new();
        for e in iter {
            s.insert_edge(e);
        }
        s
    }
}

/// A shortcut: unweighted extra edges.
pub type EdgeSet = BTreeSet<(Vertex, Vertex)>;

/// Dense `n × n` distance table; `INF` marks unreachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u64>,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let n = rows.len();
        let mut dist = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "distance rows must be square");
            dist.extend(r);
        }
        DistanceMatrix { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u64 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u64] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

/// Single-source distances in direction `dir` (Dijkstra; BFS when all lengths
/// are 1).
pub fn sssp(g: &DiGraph, s: Vertex, dir: Direction) -> Vec<u64> {
    if g.max_length_bound() == 1 {
        return bfs(g, s, dir);
    }
    let mut dist = vec![INF; g.n()];
    let mut heap = BinaryHeap::new();
    dist[s] = 0;
    heap.push(Reverse((0u64, s)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for (v, len) in g.neighbours(u, dir) {
            let nd = d.saturating_add(len);
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((nd, v)));
            }
        }
    }
    dist
}

fn bfs(g: &DiGraph, s: Vertex, dir: Direction) -> Vec<u64> {
    let mut dist = vec![INF; g.n()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for (v, _) in g.neighbours(u, dir) {
            if dist[v] == INF {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop distances ignoring lengths (every edge counts 1).
pub fn hop_bfs(g: &DiGraph, s: Vertex) -> Vec<u64> {
    bfs(g, s, Direction::Out)
}

/// Exact `dist_G(u, v)` for every ordered pair.
pub fn dist_all_pairs(g: &DiGraph) -> DistanceMatrix {
    DistanceMatrix::from_rows((0..g.n()).map(|s| sssp(g, s, Direction::Out)).collect())
}

/// `dist^{(h)}` from `s`: `h` synchronous relaxation rounds. Only vertices
/// improved in the previous round are relaxed, which gives the same table as
/// relaxing every edge each round.
pub fn hop_limited_from(g: &DiGraph, s: Vertex, h: usize) -> Vec<u64> {
    let n = g.n();
    let mut dist = vec![INF; n];
    dist[s] = 0;
    let mut frontier = vec![s];
    let mut in_next = vec![false; n];
    let mut next = Vec::new();
    // round-k values read from a snapshot of the frontier's round-(k-1) values
    let mut snapshot: Vec<(Vertex, u64)> = Vec::new();
    for _ in 0..h.min(n.saturating_sub(1)) {
        if frontier.is_empty() {
            break;
        }
        snapshot.clear();
        snapshot.extend(frontier.iter().map(|&u| (u, dist[u])));
        for &(u, du) in &snapshot {
            for (v, len) in g.neighbours(u, Direction::Out) {
                let nd = du.saturating_add(len);
                if nd < dist[v] {
                    dist[v] = nd;
                    if !in_next[v] {
                        in_next[v] = true;
                        next.push(v);
                    }
                }
            }
        }
        for &v in &next {
            in_next[v] = false;
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    dist
}

/// The `h`-restricted distance table of `G ∪ extra`.
pub fn hop_limited_dist(g: &DiGraph, extra: &WeightedEdgeSet, h: usize) -> DistanceMatrix {
    let union = if extra.is_empty() {
        g.clone()
    } else {
        g.with_extra(extra)
    };
    DistanceMatrix::from_rows(
        (0..union.n())
            .map(|s| hop_limited_from(&union, s, h))
            .collect(),
    )
}

/// Maximum distance over reachable ordered pairs; 0 when there are none.
pub fn reachability_diameter(g: &DiGraph) -> u64 {
    (0..g.n())
        .map(|s| {
            sssp(g, s, Direction::Out)
                .into_iter()
                .filter(|&d| d != INF)
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopboundCheck {
    pub holds: bool,
    /// The worst pair: infinite ratio first, then largest ratio, then largest
    /// distance, then lexicographically smallest.
    pub witness: Option<(Vertex, Vertex)>,
}

/// Tests `dist^{(h)}_G(u,v) <= alpha * dist_G(u,v)` for all pairs.
pub fn check_approx_hopbound(g: &DiGraph, alpha: &BigRational, h: usize) -> HopboundCheck {
    // (hop-limited, exact, u, v) of the current worst violation
    let mut worst: Option<(u64, u64, Vertex, Vertex)> = None;
    for u in 0..g.n() {
        let exact = sssp(g, u, Direction::Out);
        let limited = hop_limited_from(g, u, h);
        for v in 0..g.n() {
            let d = exact[v];
            if d == INF || u == v {
                continue;
            }
            let dh = limited[v];
            if dh != INF && rational::le_scaled(dh, alpha, d) {
                continue;
            }
            let replace = match worst {
                None => true,
                Some((wh, wd, _, _)) => worse(dh, d, wh, wd),
            };
            if replace {
                worst = Some((dh, d, u, v));
            }
        }
    }
    HopboundCheck {
        holds: worst.is_none(),
        witness: worst.map(|(_, _, u, v)| (u, v)),
    }
}

/// Is violation `(dh, d)` strictly worse than `(wh, wd)`?
fn worse(dh: u64, d: u64, wh: u64, wd: u64) -> bool {
    match (dh == INF, wh == INF) {
        (true, false) => true,
        (false, true) => false,
        (true, true) => d > wd,
        (false, false) => {
            let lhs = dh as u128 * wd as u128;
            let rhs = wh as u128 * d as u128;
            lhs > rhs || (lhs == rhs && d > wd)
        }
    }
}

/// Strongly connected components in topological order (every edge goes from
/// `C_i` to `C_j` with `j >= i`). Vertices inside a component are sorted.
pub fn scc_topological(g: &DiGraph) -> Vec<Vec<Vertex>> {
    let mut pg = petgraph::Graph::<(), ()>::with_capacity(g.n(), g.m());
    let nodes: Vec<_> = (0..g.n()).map(|_| pg.add_node(())).collect();
    for e in g.edges() {
        pg.add_edge(nodes[e.tail], nodes[e.head], ());
    }
    // tarjan_scc yields reverse topological order
    let mut comps: Vec<Vec<Vertex>> = petgraph::algo::tarjan_scc(&pg)
        .into_iter()
        .map(|c| {
            let mut c: Vec<Vertex> = c.into_iter().map(|x| x.index()).collect();
            c.sort_unstable();
            c
        })
        .collect();
    comps.reverse();
    comps
}

/// Reachability as one bitset row per vertex.
#[derive(Clone, Debug)]
pub struct Closure {
    words: usize,
    rows: Vec<u64>,
}

impl Closure {
    pub fn reaches(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Vertices reachable from `u` (including `u`), ascending.
    pub fn reachable_from(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let row = &self.rows[u * self.words..(u + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// Transitive closure via bitset propagation over the SCC condensation in
/// reverse topological order.
pub fn transitive_closure(g: &DiGraph) -> Closure {
    let n = g.n();
    let words = n.div_ceil(64).max(1);
    let comps = scc_topological(g);
    let mut comp_of = vec![0usize; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut crow = vec![0u64; comps.len() * words];
    for (i, c) in comps.iter().enumerate().rev() {
        let (done, rest) = crow.split_at_mut((i + 1) * words);
        let row = &mut done[i * words..];
        for &v in c {
            row[v / 64] |= 1 << (v % 64);
        }
        for &v in c {
            for e in g.out_edges(v) {
                let j = comp_of[e.head];
                if j != i {
                    let other = &rest[(j - i - 1) * words..(j - i) * words];
                    for (a, b) in row.iter_mut().zip(other) {
                        *a |= *b;
                    }
                }
            }
        }
    }
    let mut rows = vec![0u64; n * words];
    for v in 0..n {
        let c = comp_of[v];
        rows[v * words..(v + 1) * words].copy_from_slice(&crow[c * words..(c + 1) * words]);
    }
    Closure { words, rows }
}

/// Max over ordered pairs of `S` of `dist_G`; `INF` if some pair is unreachable.
pub fn weak_diameter(g: &DiGraph, set: &[Vertex]) -> u64 {
    set_diameter(g, set)
}

/// Max over ordered pairs of `S` of `dist_{G[S]}`.
pub fn strong_diameter(g: &DiGraph, set: &[Vertex]) -> u64 {
    set_diameter(&g.induced(set), set)
}

fn set_diameter(g: &DiGraph, set: &[Vertex]) -> u64 {
    let mut best = 0;
    for &s in set {
        let d = sssp(g, s, Direction::Out);
        for &t in set {
            best = best.max(d[t]);
            if best == INF {
                return INF;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn path(n: usize) -> DiGraph {
        DiGraph::unit(
            n,
            &(0..n.saturating_sub(1))
                .map(|i| (i, i + 1))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn cycle(n: usize) -> DiGraph {
        DiGraph::unit(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            DiGraph::new(2, vec![Edge::new(0, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            DiGraph::new(2, vec![Edge::new(0, 1, 0)]),
            Err(Error::ZeroLength { .. })
        ));
        assert!(matches!(
            DiGraph::with_bound(2, vec![Edge::new(0, 1, 5)], 4),
            Err(Error::LengthExceedsBound {
                len: 5,
                bound: 4,
                ..
            })
        ));
    }

    #[test]
    fn single_vertex_distance() {
        let d = dist_all_pairs(&DiGraph::empty(1));
        assert_eq!(d.get(0, 0), 0);
    }

    #[test]
    fn path_distances() {
        let d = dist_all_pairs(&path(3));
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(2, 0), INF);
    }

    #[test]
    fn self_loops_do_not_affect_distances() {
        let g = DiGraph::new(
            2,
            vec![Edge::new(0, 0, 1), Edge::new(0, 1, 3), Edge::new(1, 1, 2)],
        )
        .unwrap();
        let d = dist_all_pairs(&g);
        assert_eq!(d.get(0, 0), 0);
        assert_eq!(d.get(0, 1), 3);
    }

    #[test]
    fn hop_limited_zero_hops() {
        let d = hop_limited_dist(&path(4), &WeightedEdgeSet::new(), 0);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), if u == v { 0 } else { INF });
            }
        }
    }

    #[test]
    fn hop_limited_respects_budget() {
        let g = path(3);
        let d = hop_limited_dist(&g, &WeightedEdgeSet::new(), 1);
        assert_eq!(d.get(0, 2), INF);
        let mut extra = WeightedEdgeSet::new();
        extra.insert(0, 2, 5);
        let d = hop_limited_dist(&g, &extra, 1);
        assert_eq!(d.get(0, 2), 5);
        // with two hops the real path wins
        let d = hop_limited_dist(&g, &extra, 2);
        assert_eq!(d.get(0, 2), 2);
    }

    #[test]
    fn hop_limited_is_synchronous() {
        // 0->1->2 cheap, 0->2 expensive: one round must not chain 0->1->2
        let g = DiGraph::new(
            3,
            vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(0, 2, 9)],
        )
        .unwrap();
        assert_eq!(hop_limited_from(&g, 0, 1)[2], 9);
        assert_eq!(hop_limited_from(&g, 0, 2)[2], 2);
    }

    #[test]
    fn reachability_diameters() {
        assert_eq!(reachability_diameter(&cycle(6)), 5);
        assert_eq!(reachability_diameter(&path(5)), 4);
        assert_eq!(reachability_diameter(&DiGraph::empty(3)), 0);
        // disjoint paths of lengths 3 and 7
        let mut pairs: Vec<(usize, usize)> = (0..3).map(|i| (i, i + 1)).collect();
        pairs.extend((4..11).map(|i| (i, i + 1)));
        assert_eq!(
            reachability_diameter(&DiGraph::unit(12, &pairs).unwrap()),
            7
        );
    }

    #[test]
    fn approx_hopbound_examples() {
        let one = BigRational::one();
        let g = cycle(7);
        assert!(check_approx_hopbound(&g, &one, 6).holds);

        let p = path(10);
        let c = check_approx_hopbound(&p, &one, 4);
        assert!(!c.holds);
        assert_eq!(c.witness, Some((0, 9)));

        let mut edges: Vec<Edge> = (0..9).map(|i| Edge::new(i, i + 1, 1)).collect();
        edges.push(Edge::new(0, 9, 9));
        let c = check_approx_hopbound(&DiGraph::new(10, edges).unwrap(), &one, 4);
        assert!(!c.holds);
        assert_eq!(c.witness, Some((0, 8)));
    }

    #[test]
    fn scc_examples() {
        assert_eq!(scc_topological(&path(3)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(scc_topological(&cycle(4)), vec![vec![0, 1, 2, 3]]);
        // B = {3,4,5} listed first in edge order, A = {0,1,2}, A -> B
        let g =
            DiGraph::unit(6, &[(3, 4), (4, 5), (5, 3), (2, 3), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(scc_topological(&g), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn diameters_of_sets() {
        let c4 = cycle(4);
        assert_eq!(weak_diameter(&c4, &[2]), 0);
        assert_eq!(strong_diameter(&c4, &[2]), 0);
        // opposite vertices of a directed 4-cycle: weak 2, but G[S] has no
        // edges so the strong diameter is unbounded
        assert_eq!(weak_diameter(&c4, &[0, 2]), 2);
        assert_eq!(strong_diameter(&c4, &[0, 2]), INF);
        assert_eq!(strong_diameter(&c4, &[0, 1, 2, 3]), 3);
    }

    #[test]
    fn chord_makes_weak_smaller_than_strong() {
        // 6-cycle 0..5 plus chord 0->3; S = {0,1,2,3,4,5} minus the chord end 3
        let mut pairs: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        pairs.push((0, 3));
        let g = DiGraph::unit(6, &pairs).unwrap();
        let s = [4, 5, 0, 1];
        // in G: 0->3->4 is 2 hops; in G[S] 0 cannot reach 4 (3 excluded)
        let weak = weak_diameter(&g, &s);
        let strong = strong_diameter(&g, &s);
        assert!(weak < strong, "weak {weak} strong {strong}");
    }

    #[test]
    fn closure_matches_distances() {
        let g = DiGraph::unit(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (5, 6),
                (6, 5),
                (4, 5),
            ],
        )
        .unwrap();
        let c = transitive_closure(&g);
        let d = dist_all_pairs(&g);
        for u in 0..7 {
            for v in 0..7 {
                assert_eq!(c.reaches(u, v), d.get(u, v) != INF, "({u},{v})");
            }
            let listed: Vec<_> = c.reachable_from(u).collect();
            let expect: Vec<_> = (0..7).filter(|&v| d.get(u, v) != INF).collect();
            assert_eq!(listed, expect);
        }
    }

    #[test]
    fn edge_set_keeps_minimum_and_drops_loops() {
        let mut h = WeightedEdgeSet::new();
        assert!(h.insert(0, 1, 5));
        assert!(!h.insert(0, 1, 7));
        assert!(h.insert(0, 1, 3));
        assert!(!h.insert(2, 2, 1));
        assert_eq!(h.get(0, 1), Some(3));
        assert_eq!(h.len(), 1);
        assert_eq!(h.scaled(4).get(0, 1), Some(12));
    }
}
