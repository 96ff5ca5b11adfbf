//! Shared helpers for the integration suites: seeded random inputs and the
//! independent numerical oracles the implementation is checked against.
#![allow(dead_code)] // each integration suite uses its own subset

use qwrank_core::{DirectedGraph, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn assert_close(got: f64, want: f64, tol: f64) {
    assert!(
        (got - want).abs() <= tol,
        "got {got}, want {want} (tol {tol})"
    );
}

pub fn assert_vec_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len(), "length mismatch");
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        assert!(
            (g - w).abs() <= tol,
            "index {i}: got {g}, want {w} (tol {tol})"
        );
    }
}

/// Seeded directed G(n, p) without self-loops.
pub fn gnp(seed: u64, n: usize, p: f64) -> DirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    DirectedGraph::from_edges(n, &edges).unwrap()
}

/// Like [`gnp`] but guaranteed to contain at least one edge.
pub fn gnp_nonempty(seed: u64, n: usize, p: f64) -> DirectedGraph {
    let g = gnp(seed, n, p);
    if g.edge_count() > 0 {
        return g;
    }
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u + 1, v + 1)).collect();
    edges.push((1, 2));
    DirectedGraph::from_edges(n.max(2), &edges).unwrap()
}

/// Seeded random symmetric matrix with entries in `[-scale, scale]`.
pub fn random_symmetric(seed: u64, n: usize, scale: f64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let x: f64 = rng.random_range(-scale..scale);
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    m
}

pub fn max_abs_entry(m: &Matrix) -> f64 {
    let mut best = 0.0f64;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            best = best.max(m[(i, j)].abs());
        }
    }
    best
}

/// Matrix exponential by scaling and squaring with a Taylor series, an
/// oracle independent of the spectral route.
pub fn matrix_exp_oracle(a: &Matrix) -> Matrix {
    let n = a.rows();
    assert!(a.is_square());

    let inf_norm: f64 = (0..n)
        .map(|i| a.row(i).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let squarings = if inf_norm > 0.5 {
        (inf_norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.scale(0.5f64.powi(squarings as i32));

    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for k in 1..=40u32 {
        term = term.matmul(&scaled).scale(1.0 / k as f64);
        sum = add(&sum, &term);
        if max_abs_entry(&term) < 1e-18 {
            break;
        }
    }
    let mut result = sum;
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    result
}

fn add(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows(), a.cols(), |i, j| a[(i, j)] + b[(i, j)])
}

/// Brute-force Kendall tau-b by pair enumeration; the final arithmetic
/// mirrors the fast path so agreement can be asserted exactly.
pub fn kendall_tau_brute(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    let mut tied_x = 0i64;
    let mut tied_y = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = (x[i] + 0.0).total_cmp(&(x[j] + 0.0));
            let dy = (y[i] + 0.0).total_cmp(&(y[j] + 0.0));
            if dx.is_eq() {
                tied_x += 1;
            }
            if dy.is_eq() {
                tied_y += 1;
            }
            if dx.is_eq() || dy.is_eq() {
                continue;
            }
            if dx == dy {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    let total = (n as i64) * (n as i64 - 1) / 2;
    (concordant - discordant) as f64
        / (((total - tied_x) as f64) * ((total - tied_y) as f64)).sqrt()
}

/// Random score vector mixing a coarse grid (forcing ties) with continuous
/// values.
pub fn scores_with_ties(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| {
            if rng.random::<f64>() < 0.6 {
                rng.random_range(0..6) as f64 / 4.0
            } else {
                rng.random::<f64>()
            }
        })
        .collect()
}
