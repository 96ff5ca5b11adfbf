//! Continuous-time quantum-walk centrality on the bipartization.
//!
//! All walks run in dimension `2n`: index `j < n` is the hub copy of node
//! `j`, index `n + j` its authority copy. The long-time average of the
//! occupation of each basis state exists for every unitary evolution and
//! depends only on the initial state, the eigenvectors, and the equality
//! pattern of the eigenvalues; [`limiting_occupation`] evaluates it in
//! closed form by summing projections over degenerate-energy groups.
//!
//! Two Hamiltonian recipes are provided. `CQA` places a rank-one-corrected
//! adjacency in the off-diagonal blocks; it powers both `CQAu` (uniform
//! initial state) and `CQAw` (degree-weighted initial state), which score
//! hubs and authorities in a single run. `CQG` instead uses Google matrices
//! and needs two runs, one per side.

use crate::centrality::{CentralityResult, Method, Normalization};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::matrix::Matrix;
use crate::spectral::{group_degenerate, sym_eig};

/// Parameters shared by the quantum-walk methods.
#[derive(Debug, Clone, Copy)]
pub struct WalkConfig {
    /// Teleportation weight in `[0, 1]` for the rank-one correction and the
    /// Google matrices.
    pub alpha: f64,
    /// Relative tolerance for grouping degenerate eigenvalues.
    pub degeneracy_rel_tol: f64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self {
            alpha: 0.85,
            degeneracy_rel_tol: 1e-8,
        }
    }
}

impl WalkConfig {
    pub fn with_alpha(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be in [0, 1], got {alpha}"
            )));
        }
        Ok(Self {
            alpha,
            ..Self::default()
        })
    }
}

/// Which construction produced a Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianRecipe {
    /// Off-diagonal blocks hold the rank-one-corrected adjacency.
    Cqa,
    /// Off-diagonal blocks hold the Google matrix of `A`.
    CqgAuthority,
    /// Off-diagonal blocks hold the Google matrix of `A^T`.
    CqgHub,
}

/// Real symmetric `2n x 2n` walk generator with zero diagonal blocks.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    dim: usize,
    matrix: Matrix,
    recipe: HamiltonianRecipe,
}

impl Hamiltonian {
    /// Wrap an explicit walk generator. The matrix must be symmetric with
    /// even dimension and zero diagonal blocks.
    pub fn new(matrix: Matrix, recipe: HamiltonianRecipe) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "walk generator must be square with even dimension, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let dev = matrix.max_symmetry_deviation();
        if dev > 1e-12 {
            return Err(Error::NotSymmetric { max_dev: dev });
        }
        let n = matrix.rows() / 2;
        for i in 0..n {
            for j in 0..n {
                if matrix[(i, j)] != 0.0 || matrix[(n + i, n + j)] != 0.0 {
                    return Err(Error::InvalidParameter(
                        "diagonal blocks must be zero".into(),
                    ));
                }
            }
        }
        Ok(Self {
            dim: matrix.rows(),
            matrix,
            recipe,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn recipe(&self) -> HamiltonianRecipe {
        self.recipe
    }
}

/// How the initial amplitudes were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialStateKind {
    Uniform,
    DegreeWeighted,
}

/// Unit-norm real nonnegative amplitude vector of length `2n`.
#[derive(Debug, Clone)]
pub struct InitialState {
    amplitudes: Vec<f64>,
    kind: InitialStateKind,
}

impl InitialState {
    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn kind(&self) -> InitialStateKind {
        self.kind
    }
}

/// `alpha * A + (1 - alpha)/n * ones`. No row normalization and no dangling
/// patching; this is not the Google matrix.
pub fn rank_one_correction(adjacency: &Matrix, alpha: f64) -> Matrix {
    assert!(adjacency.is_square());
    let n = adjacency.rows();
    let teleport = (1.0 - alpha) / n as f64;
    Matrix::from_fn(n, n, |i, j| alpha * adjacency[(i, j)] + teleport)
}

/// Row-stochastic Google matrix: rows of `A` are normalized by out-degree,
/// dangling rows replaced by the uniform distribution, then mixed with the
/// uniform rank-one teleportation term.
pub fn google_matrix(adjacency: &Matrix, alpha: f64) -> Matrix {
    assert!(adjacency.is_square());
    let n = adjacency.rows();
    let uniform = 1.0 / n as f64;
    let teleport = (1.0 - alpha) / n as f64;
    let row_sums: Vec<f64> = (0..n).map(|i| adjacency.row(i).iter().sum()).collect();
    Matrix::from_fn(n, n, |i, j| {
        let patched = if row_sums[i] > 0.0 {
            adjacency[(i, j)] / row_sums[i]
        } else {
            uniform
        };
        alpha * patched + teleport
    })
}

fn block_antidiagonal(upper: &Matrix, recipe: HamiltonianRecipe) -> Hamiltonian {
    let n = upper.rows();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m[(i, n + j)] = upper[(i, j)];
            m[(n + j, i)] = upper[(i, j)];
        }
    }
    Hamiltonian {
        dim: 2 * n,
        matrix: m,
        recipe,
    }
}

/// Walk generator for CQAu/CQAw: `[[0, A~], [A~^T, 0]]` with the rank-one
/// corrected adjacency `A~`.
pub fn build_cqa_hamiltonian(graph: &DirectedGraph, cfg: &WalkConfig) -> Hamiltonian {
    let corrected = rank_one_correction(&graph.adjacency_matrix(), cfg.alpha);
    block_antidiagonal(&corrected, HamiltonianRecipe::Cqa)
}

/// The two CQG generators: one built from the Google matrix of `A`
/// (authority side) and one from the Google matrix of `A^T` (hub side).
/// The two are not transposes of each other in general, because dangling
/// patching and row normalization are not symmetric.
pub fn build_cqg_hamiltonians(
    graph: &DirectedGraph,
    cfg: &WalkConfig,
) -> (Hamiltonian, Hamiltonian) {
    let adjacency = graph.adjacency_matrix();
    let g = google_matrix(&adjacency, cfg.alpha);
    let g_rev = google_matrix(&adjacency.transpose(), cfg.alpha);
    (
        block_antidiagonal(&g, HamiltonianRecipe::CqgAuthority),
        block_antidiagonal(&g_rev, HamiltonianRecipe::CqgHub),
    )
}

/// Equal amplitude `1/sqrt(2n)` on every bipartite node.
pub fn initial_uniform(n: usize) -> InitialState {
    assert!(n >= 1);
    let amp = 1.0 / ((2 * n) as f64).sqrt();
    InitialState {
        amplitudes: vec![amp; 2 * n],
        kind: InitialStateKind::Uniform,
    }
}

/// Amplitudes proportional to the square roots of bipartite degrees: the
/// out-degree for hub copies, the in-degree for authority copies, both taken
/// from the unmodified adjacency. Zero-degree nodes get amplitude exactly 0.
pub fn initial_degree_weighted(graph: &DirectedGraph) -> Result<InitialState> {
    let degrees = graph.degrees();
    let total: usize = degrees.out_deg.iter().sum::<usize>() + degrees.in_deg.iter().sum::<usize>();
    if total == 0 {
        return Err(Error::EmptyDegrees);
    }
    let denom = (total as f64).sqrt();
    let amplitudes = degrees
        .out_deg
        .iter()
        .chain(degrees.in_deg.iter())
        .map(|&d| (d as f64).sqrt() / denom)
        .collect();
    Ok(InitialState {
        amplitudes,
        kind: InitialStateKind::DegreeWeighted,
    })
}

/// Closed-form long-time average of the occupation of each basis state.
///
/// With `a = Phi^T psi0` and eigenvalue groups `g`, the occupation of basis
/// state `m` is `sum_g (sum_{j in g} a_j Phi[m,j])^2`: interference between
/// groups of different energy vanishes in the average, interference inside
/// a degenerate group survives. With all-singleton groups this reduces to
/// `sum_j a_j^2 Phi[m,j]^2`.
pub fn limiting_occupation(
    hamiltonian: &Hamiltonian,
    psi0: &InitialState,
    cfg: &WalkConfig,
) -> Result<Vec<f64>> {
    let amps = psi0.amplitudes();
    if amps.len() != hamiltonian.dim {
        return Err(Error::LengthMismatch {
            left: amps.len(),
            right: hamiltonian.dim,
        });
    }
    let norm = amps.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitNorm { norm });
    }

    let eig = sym_eig(&hamiltonian.matrix)?;
    let coeffs = eig.project(amps);
    let groups = group_degenerate(&eig, cfg.degeneracy_rel_tol);

    let dim = eig.dim;
    let mut occupations = vec![0.0f64; dim];
    for group in &groups.groups {
        for (m, occ) in occupations.iter_mut().enumerate() {
            let amplitude: f64 = group
                .iter()
                .map(|&j| coeffs[j] * eig.eigenvectors[(m, j)])
                .sum();
            *occ += amplitude * amplitude;
        }
    }
    Ok(occupations)
}

fn split_halves(occupations: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let hub = occupations[..n].to_vec();
    let authority = occupations[n..].to_vec();
    (hub, authority)
}

/// CQAu: one walk on the CQA Hamiltonian from the uniform state; the upper
/// half of the occupations scores hubs, the lower half authorities.
pub fn cqau_scores(graph: &DirectedGraph, cfg: &WalkConfig) -> Result<CentralityResult> {
    let hamiltonian = build_cqa_hamiltonian(graph, cfg);
    let psi0 = initial_uniform(graph.n());
    let occupations = limiting_occupation(&hamiltonian, &psi0, cfg)?;
    let (hub, authority) = split_halves(occupations, graph.n());
    Ok(CentralityResult {
        method: Method::Cqau,
        hub,
        authority,
        normalization: Normalization::OccupationSum,
    })
}

/// CQAw: same evolution as CQAu but started from the degree-weighted state.
pub fn cqaw_scores(graph: &DirectedGraph, cfg: &WalkConfig) -> Result<CentralityResult> {
    let hamiltonian = build_cqa_hamiltonian(graph, cfg);
    let psi0 = initial_degree_weighted(graph)?;
    let occupations = limiting_occupation(&hamiltonian, &psi0, cfg)?;
    let (hub, authority) = split_halves(occupations, graph.n());
    Ok(CentralityResult {
        method: Method::Cqaw,
        hub,
        authority,
        normalization: Normalization::OccupationSum,
    })
}

/// CQG: two walks from the uniform state. Authority scores are the lower
/// half of the occupations under the forward Google Hamiltonian; hub scores
/// are the lower half under the reversed one.
pub fn cqg_scores(graph: &DirectedGraph, cfg: &WalkConfig) -> Result<CentralityResult> {
    let n = graph.n();
    let (h_authority, h_hub) = build_cqg_hamiltonians(graph, cfg);
    let psi0 = initial_uniform(n);
    let occ_authority = limiting_occupation(&h_authority, &psi0, cfg)?;
    let occ_hub = limiting_occupation(&h_hub, &psi0, cfg)?;
    Ok(CentralityResult {
        method: Method::Cqg,
        hub: occ_hub[n..].to_vec(),
        authority: occ_authority[n..].to_vec(),
        normalization: Normalization::OccupationHalf,
    })
}
