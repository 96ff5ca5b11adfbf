//! Shared result type for every scoring method.

use std::fmt;

/// Scoring method identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Quantum walk on the corrected adjacency, uniform initial state.
    Cqau,
    /// Quantum walk on the corrected adjacency, degree-weighted initial state.
    Cqaw,
    /// Two quantum walks on Google matrices, uniform initial state.
    Cqg,
    Hits,
    /// PageRank for authorities plus reverse PageRank for hubs.
    PageRank,
    /// Exponential subgraph centrality of the bipartization.
    Bek,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Cqau,
        Method::Cqaw,
        Method::Cqg,
        Method::Hits,
        Method::PageRank,
        Method::Bek,
    ];

    /// Lowercase identifier used in machine-readable output.
    pub fn id(&self) -> &'static str {
        match self {
            Method::Cqau => "cqau",
            Method::Cqaw => "cqaw",
            Method::Cqg => "cqg",
            Method::Hits => "hits",
            Method::PageRank => "pagerank",
            Method::Bek => "bek",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Cqau => "CQAu",
            Method::Cqaw => "CQAw",
            Method::Cqg => "CQG",
            Method::Hits => "HITS",
            Method::PageRank => "PR",
            Method::Bek => "BEK",
        };
        f.write_str(name)
    }
}

/// Native scale of a score vector; scores are never rescaled across methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Hub and authority scores are occupations summing to 1 jointly.
    OccupationSum,
    /// Each run's full occupation vector sums to 1; reported halves do not.
    OccupationHalf,
    /// Unit Euclidean norm per side.
    TwoNorm,
    /// Probability vectors summing to 1 per side.
    Probability,
    /// Raw diagonal of a matrix exponential, unnormalized.
    RawExpDiagonal,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Normalization::OccupationSum => "occupation sum",
            Normalization::OccupationHalf => "occupation sum per run",
            Normalization::TwoNorm => "2-norm",
            Normalization::Probability => "probability (1-norm)",
            Normalization::RawExpDiagonal => "none (raw diagonal)",
        };
        f.write_str(text)
    }
}

/// Per-node hub and authority scores produced by one method.
#[derive(Debug, Clone)]
pub struct CentralityResult {
    pub method: Method,
    pub hub: Vec<f64>,
    pub authority: Vec<f64>,
    pub normalization: Normalization,
}

impl CentralityResult {
    pub fn n(&self) -> usize {
        self.hub.len()
    }
}
