//! Lifting shallow-graph shortcut and hopset constructions to arbitrary
//! directed graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: the immutable [`DiGraph`], overlay edge sets and the
//!   brute-force distance/diameter primitives everything else is checked
//!   against.
//! - [`ldd`]: directed low-diameter decomposition with topologically ordered
//!   output.
//! - [`oracle`]: the shallow-graph oracle contract plus reference oracles.
//! - [`dag`]: the clustered-DAG reduction (merge `λ` consecutive components,
//!   call the oracle, repeat).
//! - [`reduce`]: the general reduction (epochs of scaled-length phases, LDD,
//!   stars) and the hopset / shortcut drivers.
//! - [`verify`]: exhaustive verifiers, independent of the construction code.
//! - [`generate`] and [`io`]: graph families and the plain-text interchange
//!   format.

pub mod dag;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod ldd;
pub mod oracle;
pub mod rational;
pub mod reduce;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DiGraph, DistanceMatrix, Edge, EdgeSet, Length, Vertex, WeightedEdgeSet, INF};
