//! Deterministic graph families for experiments and tests.

use rand::Rng as _;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge, Length, Vertex};
use crate::rng;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// `0 → 1 → … → n-1`.
    Path { n: usize },
    /// `0 → 1 → … → n-1 → 0`.
    Cycle { n: usize },
    /// `layers` layers of near-equal size; `m` random edges between
    /// consecutive layers.
    DagLayers { n: usize, m: usize, layers: usize },
    /// `m` distinct random ordered pairs, no self-loops.
    RandomGnm { n: usize, m: usize },
    /// `blocks` directed cycles of `block` vertices each, block `i` joined to
    /// block `i+1` by a single edge (last vertex of `i` to first of `i+1`).
    SccChain { blocks: usize, block: usize },
    /// `paths` vertex-disjoint directed paths of `len` vertices each.
    DisjointPaths { paths: usize, len: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: Family,
    /// Lengths are drawn uniformly from `[1, N]`; `N = 1` gives unit lengths.
    pub max_len: Length,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn unit(family: Family) -> Self {
        GeneratorSpec {
            family,
            max_len: 1,
            seed: 0,
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<DiGraph> {
    if spec.max_len == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let mut rng = rng::rng_from(spec.seed);
    let (n, pairs): (usize, Vec<(Vertex, Vertex)>) = match spec.family {
        Family::Path { n } => (n, (1..n).map(|i| (i - 1, i)).collect()),
        Family::Cycle { n } => {
            let mut p: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            if n >= 2 {
                p.push((n - 1, 0));
            }
            (n, p)
        }
        Family::DagLayers { n, m, layers } => {
            if layers == 0 || layers > n.max(1) {
                return Err(Error::InvalidParameter(format!(
                    "dag-layers needs 1 <= layers <= n, got layers={layers} n={n}"
                )));
            }
            let bounds: Vec<usize> = (0..=layers).map(|i| i * n / layers).collect();
            let mut p = Vec::with_capacity(m);
            if layers >= 2 {
                for _ in 0..m {
                    let l = rng.random_range(0..layers - 1);
                    let u = rng.random_range(bounds[l]..bounds[l + 1]);
                    let v = rng.random_range(bounds[l + 1]..bounds[l + 2]);
                    p.push((u, v));
                }
            }
            (n, p)
        }
        Family::RandomGnm { n, m } => {
            let cap = n.saturating_mul(n.saturating_sub(1));
            if m > cap {
                return Err(Error::InvalidParameter(format!(
                    "random-gnm: m={m} exceeds the {cap} ordered pairs on n={n}"
                )));
            }
            let mut seen = std::collections::HashSet::with_capacity(m);
            let mut p = Vec::with_capacity(m);
            while p.len() < m {
                let u = rng.random_range(0..n);
                let v = rng.random_range(0..n);
                if u != v && seen.insert((u, v)) {
                    p.push((u, v));
                }
            }
            (n, p)
        }
        Family::SccChain { blocks, block } => {
            if block == 0 {
                return Err(Error::InvalidParameter(
                    "scc-chain block size must be >= 1".into(),
                ));
            }
            let mut p = Vec::new();
            for b in 0..blocks {
                let base = b * block;
                if block >= 2 {
                    for i in 0..block {
                        p.push((base + i, base + (i + 1) % block));
                    }
                }
                if b + 1 < blocks {
                    p.push((base + block - 1, base + block));
                }
            }
            (blocks * block, p)
        }
        Family::DisjointPaths { paths, len } => {
            let mut p = Vec::new();
            for k in 0..paths {
                let base = k * len;
                p.extend((1..len).map(|i| (base + i - 1, base + i)));
            }
            (paths * len, p)
        }
    };
    let edges = pairs
        .into_iter()
        .map(|(u, v)| {
            let len = if spec.max_len == 1 {
                1
            } else {
                rng.random_range(1..=spec.max_len)
            };
            Edge::new(u, v, len)
        })
        .collect();
    DiGraph::with_bound(n, edges, spec.max_len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::scc_topological;
    use crate::io::format_graph;

    #[test]
    fn path_family() {
        let g = generate(&GeneratorSpec::unit(Family::Path { n: 5 })).unwrap();
        let e: Vec<_> = g.edges().iter().map(|e| (e.tail, e.head, e.len)).collect();
        assert_eq!(e, vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]);
    }

    #[test]
    fn scc_chain_has_blocks_in_order() {
        let g = generate(&GeneratorSpec::unit(Family::SccChain {
            blocks: 27,
            block: 3,
        }))
        .unwrap();
        assert_eq!(g.n(), 81);
        assert_eq!(g.m(), 27 * 3 + 26);
        let comps = scc_topological(&g);
        assert_eq!(comps.len(), 27);
        for (i, c) in comps.iter().enumerate() {
            assert_eq!(c, &vec![3 * i, 3 * i + 1, 3 * i + 2]);
        }
    }

    #[test]
    fn gnm_is_deterministic() {
        let spec = GeneratorSpec {
            family: Family::RandomGnm { n: 128, m: 512 },
            max_len: 32,
            seed: 7,
        };
        let a = format_graph(&generate(&spec).unwrap());
        let b = format_graph(&generate(&spec).unwrap());
        assert_eq!(a, b);
        let g = generate(&spec).unwrap();
        assert_eq!(g.m(), 512);
        assert!(g
            .edges()
            .iter()
            .all(|e| e.tail != e.head && (1..=32).contains(&e.len)));
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&GeneratorSpec::unit(Family::RandomGnm { n: 3, m: 7 })).is_err());
        assert!(generate(&GeneratorSpec::unit(Family::DagLayers {
            n: 3,
            m: 1,
            layers: 0
        }))
        .is_err());
        assert!(generate(&GeneratorSpec::unit(Family::SccChain {
            blocks: 2,
            block: 0
        }))
        .is_err());
    }

    #[test]
    fn layered_dag_is_acyclic() {
        let g = generate(&GeneratorSpec::unit(Family::DagLayers {
            n: 40,
            m: 100,
            layers: 5,
        }))
        .unwrap();
        assert_eq!(scc_topological(&g).len(), 40);
    }
}
