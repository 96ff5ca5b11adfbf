//! Hub and authority centrality for directed graphs.
//!
//! The library scores every node of a directed graph in its two roles:
//! as a *hub* (pointing at good resources) and as an *authority* (being
//! a good resource). Three score families are provided:
//!
//! * continuous-time quantum walks on the bipartization of the graph
//!   ([`walk`]): `CQAu` and `CQAw` share one Hamiltonian built from a
//!   rank-one-corrected adjacency matrix and differ in the initial
//!   state; `CQG` runs two walks built from Google matrices;
//! * classical baselines ([`classical`]): HITS, PageRank, reverse
//!   PageRank and the exponential subgraph centrality of the
//!   bipartization (BEK);
//! * ranking analysis ([`ranking`]): tie-grouped rankings, Kendall's
//!   tau-b and top-k overlap for cross-method comparison.
//!
//! Walk limits are evaluated in closed form through a dense symmetric
//! eigendecomposition ([`spectral`]); a numerical-quadrature time
//! average is available as an independent oracle.

pub mod centrality;
pub mod classical;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matrix;
pub mod ranking;
pub mod spectral;
pub mod walk;

pub use centrality::{CentralityResult, Method, Normalization};
pub use error::{Error, Result};
pub use graph::{BipartiteAdjacency, DegreeVector, DirectedGraph, LoadedGraph};
pub use matrix::Matrix;
pub use ranking::{ComparisonReport, Ranking, Side};
pub use walk::WalkConfig;
