//! Classical baselines: HITS, PageRank, reverse PageRank and exponential
//! subgraph centrality of the bipartization (BEK).

use crate::centrality::{CentralityResult, Method, Normalization};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::spectral::{exp_diag, sym_eig};

/// Convergence settings for the power iterations.
#[derive(Debug, Clone, Copy)]
pub struct IterationConfig {
    /// Max-norm change of successive normalized iterates.
    pub tol: f64,
    pub max_iter: usize,
    /// Teleportation weight for PageRank.
    pub alpha: f64,
}

impl Default for IterationConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 100_000,
            alpha: 0.85,
        }
    }
}

/// Convergence report for a HITS run.
#[derive(Debug, Clone, Copy)]
pub struct HitsDiagnostics {
    pub iterations: usize,
    pub converged: bool,
    /// Set when the top two eigenvalues of `A A^T` are within 1e-10: the
    /// limit then depends on the initial vector, which is fixed to uniform
    /// here.
    pub degenerate_dominant: bool,
}

fn normalize_2(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `y <- A^T (A y)` without forming the products, returning `A^T y` too.
fn hub_step(graph: &DirectedGraph, hub: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = graph.n();
    let mut authority = vec![0.0; n];
    for (src, dst) in graph.edges() {
        authority[dst] += hub[src];
    }
    let mut next_hub = vec![0.0; n];
    for (src, dst) in graph.edges() {
        next_hub[src] += authority[dst];
    }
    (next_hub, authority)
}

/// `x <- A^T (A x)` without forming the product.
fn authority_step(graph: &DirectedGraph, authority: &[f64]) -> Vec<f64> {
    let n = graph.n();
    let mut hub_image = vec![0.0; n];
    for (src, dst) in graph.edges() {
        hub_image[src] += authority[dst];
    }
    let mut next = vec![0.0; n];
    for (src, dst) in graph.edges() {
        next[dst] += hub_image[src];
    }
    next
}

/// HITS as power iterations for the dominant eigenvectors of `A A^T` (hubs)
/// and `A^T A` (authorities), both started from the uniform vector and
/// normalized in 2-norm every step. Starting each side from uniform keeps
/// the limit deterministic, and symmetric under graph reversal, even when
/// the dominant eigenvalue is degenerate. Exceeding the iteration budget
/// returns the last iterate with `converged = false` rather than failing.
pub fn hits_scores_detailed(
    graph: &DirectedGraph,
    cfg: &IterationConfig,
) -> Result<(CentralityResult, HitsDiagnostics)> {
    let n = graph.n();
    if graph.edge_count() == 0 {
        return Err(Error::NoEdges);
    }

    let uniform = 1.0 / (n as f64).sqrt();
    let mut hub = vec![uniform; n];
    let mut authority = vec![uniform; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_iter {
        iterations += 1;
        let (mut next_hub, _) = hub_step(graph, &hub);
        normalize_2(&mut next_hub);
        let mut next_authority = authority_step(graph, &authority);
        normalize_2(&mut next_authority);

        let delta = max_abs_diff(&next_hub, &hub).max(max_abs_diff(&next_authority, &authority));
        hub = next_hub;
        authority = next_authority;
        if delta <= cfg.tol {
            converged = true;
            break;
        }
    }

    let degenerate_dominant = dominant_gap_below(graph, &hub, 1e-10);
    Ok((
        CentralityResult {
            method: Method::Hits,
            hub,
            authority,
            normalization: Normalization::TwoNorm,
        },
        HitsDiagnostics {
            iterations,
            converged,
            degenerate_dominant,
        },
    ))
}

/// HITS hub and authority scores.
pub fn hits_scores(graph: &DirectedGraph, cfg: &IterationConfig) -> Result<CentralityResult> {
    hits_scores_detailed(graph, cfg).map(|(result, _)| result)
}

/// Estimate whether the top two eigenvalues of `A A^T` are within `gap_tol`,
/// via a secondary power iteration deflated against the converged hub
/// vector.
fn dominant_gap_below(graph: &DirectedGraph, dominant: &[f64], gap_tol: f64) -> bool {
    let n = graph.n();
    if n < 2 {
        return false;
    }
    let (top_image, _) = hub_step(graph, dominant);
    let lambda1: f64 = dominant.iter().zip(&top_image).map(|(a, b)| a * b).sum();

    // deterministic start with sign structure unlikely to be orthogonal
    // to the second eigenvector
    let mut w: Vec<f64> = (0..n)
        .map(|i| if i % 2 == 0 { 1.0 } else { -0.5 } + (i as f64) / (n as f64))
        .collect();
    let deflate = |v: &mut Vec<f64>| {
        let proj: f64 = v.iter().zip(dominant).map(|(a, b)| a * b).sum();
        for (x, d) in v.iter_mut().zip(dominant) {
            *x -= proj * d;
        }
    };
    deflate(&mut w);
    normalize_2(&mut w);
    if w.iter().all(|&x| x == 0.0) {
        return false;
    }
    let mut lambda2: f64 = 0.0;
    for _ in 0..5_000 {
        let (mut next, _) = hub_step(graph, &w);
        deflate(&mut next);
        let norm = next.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            // deflated operator annihilates w: second eigenvalue is 0
            return lambda1.abs() <= gap_tol;
        }
        for x in next.iter_mut() {
            *x /= norm;
        }
        let moved = max_abs_diff(&next, &w);
        w = next;
        if moved <= 1e-12 {
            break;
        }
    }
    let (image, _) = hub_step(graph, &w);
    lambda2 = lambda2.max(w.iter().zip(&image).map(|(a, b)| a * b).sum());
    (lambda1 - lambda2).abs() <= gap_tol
}

/// PageRank: power method on the transposed Google matrix from a uniform
/// start with 1-norm renormalization. Returns the authority-side
/// probability vector.
pub fn pagerank_scores(graph: &DirectedGraph, cfg: &IterationConfig) -> Result<Vec<f64>> {
    let n = graph.n();
    let alpha = cfg.alpha;
    let degrees = graph.degrees();
    let uniform = 1.0 / n as f64;

    let mut p = vec![uniform; n];
    for _ in 0..cfg.max_iter {
        // alpha * (link-following + dangling redistribution) + teleport
        let dangling: f64 = (0..n)
            .filter(|&i| degrees.out_deg[i] == 0)
            .map(|i| p[i])
            .sum();
        let mut next = vec![alpha * dangling * uniform + (1.0 - alpha) * uniform; n];
        for (src, dst) in graph.edges() {
            next[dst] += alpha * p[src] / degrees.out_deg[src] as f64;
        }
        let total: f64 = next.iter().sum();
        for x in next.iter_mut() {
            *x /= total;
        }
        let delta = max_abs_diff(&next, &p);
        p = next;
        if delta <= cfg.tol {
            return Ok(p);
        }
    }
    Err(Error::MaxIterationsExceeded {
        max_iter: cfg.max_iter,
    })
}

/// PageRank of the reversed graph: the hub-side probability vector.
pub fn reverse_pagerank_scores(graph: &DirectedGraph, cfg: &IterationConfig) -> Result<Vec<f64>> {
    pagerank_scores(&graph.reversed(), cfg)
}

/// Both PageRank directions packaged as one result: reverse PageRank for
/// hubs, PageRank for authorities.
pub fn pagerank_result(graph: &DirectedGraph, cfg: &IterationConfig) -> Result<CentralityResult> {
    Ok(CentralityResult {
        method: Method::PageRank,
        hub: reverse_pagerank_scores(graph, cfg)?,
        authority: pagerank_scores(graph, cfg)?,
        normalization: Normalization::Probability,
    })
}

/// Exponential subgraph centrality of the bipartization: hub score of node
/// `i` is `[exp(B)]_{i,i}`, authority score `[exp(B)]_{n+i,n+i}`.
pub fn bek_scores(graph: &DirectedGraph) -> Result<CentralityResult> {
    let n = graph.n();
    let eig = sym_eig(&graph.bipartite_adjacency().matrix)?;
    let diag = exp_diag(&eig)?;
    Ok(CentralityResult {
        method: Method::Bek,
        hub: diag[..n].to_vec(),
        authority: diag[n..].to_vec(),
        normalization: Normalization::RawExpDiagonal,
    })
}
