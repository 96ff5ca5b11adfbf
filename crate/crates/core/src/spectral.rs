//! Dense symmetric eigendecomposition and spectral helpers.
//!
//! The solver reduces the matrix to tridiagonal form with Householder
//! reflections and diagonalizes it with the implicit-shift QL iteration,
//! following the classic EISPACK `tred2`/`tql2` routines. Eigenvalues come
//! out in nondecreasing order; eigenvectors are the columns of an
//! orthogonal matrix.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Entry-wise symmetry tolerance required of eigensolver inputs.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// `exp` overflows f64 beyond this argument.
const EXP_ARG_MAX: f64 = 709.0;

/// Result of [`sym_eig`]: `H = Phi * diag(eigenvalues) * Phi^T` with
/// orthogonal `Phi` whose column `j` is the eigenvector for
/// `eigenvalues[j]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigendecomposition {
    pub dim: usize,
    /// Nondecreasing.
    pub eigenvalues: Vec<f64>,
    /// Column `j` is the eigenvector of `eigenvalues[j]`.
    pub eigenvectors: Matrix,
}

impl SymmetricEigendecomposition {
    /// Coordinates of `x` in the eigenvector basis: `Phi^T x`.
    pub fn project(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim);
        (0..self.dim)
            .map(|j| {
                (0..self.dim)
                    .map(|m| self.eigenvectors[(m, j)] * x[m])
                    .sum()
            })
            .collect()
    }
}

/// Partition of eigenvector indices into (near-)degenerate energy groups.
#[derive(Debug, Clone)]
pub struct EigenvalueGroups {
    /// Disjoint, covering index sets, each a run of consecutive sorted
    /// eigenvalues chained within the tolerance.
    pub groups: Vec<Vec<usize>>,
    /// Absolute gap threshold used for chaining.
    pub tolerance: f64,
}

/// Eigendecomposition of a real symmetric matrix.
pub fn sym_eig(h: &Matrix) -> Result<SymmetricEigendecomposition> {
    if !h.is_square() {
        return Err(Error::NonSquareMatrix {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let n = h.rows();
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    let dev = h.max_symmetry_deviation();
    if dev > SYMMETRY_TOL {
        return Err(Error::NotSymmetric { max_dev: dev });
    }

    let mut v = h.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut v, &mut d, &mut e);
    tql2(&mut d, &mut e, &mut v)?;

    // sort eigenpairs ascending
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&j| d[j]).collect();
    let eigenvectors = Matrix::from_fn(n, n, |m, j| v[(m, order[j])]);

    Ok(SymmetricEigendecomposition {
        dim: n,
        eigenvalues,
        eigenvectors,
    })
}

/// Householder reduction to tridiagonal form, accumulating transformations
/// in `v` (initialized to the input matrix).
fn tred2(v: &mut Matrix, d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for j in 0..n {
        d[j] = v[(n - 1, j)];
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
                v[(j, i)] = 0.0;
            }
        } else {
            // generate Householder vector
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }

            // apply similarity transformation to remaining columns
            for j in 0..i {
                f = d[j];
                v[(j, i)] = f;
                g = e[j] + v[(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[(k, j)] * d[k];
                    e[k] += v[(k, j)] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for i in 0..n.saturating_sub(1) {
        v[(n - 1, i)] = v[(i, i)];
        v[(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[(k, i + 1)] * v[(k, j)];
                }
                for k in 0..=i {
                    v[(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1, j)];
        v[(n - 1, j)] = 0.0;
    }
    v[(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// `sqrt(a^2 + b^2)` without overflow, from elementary operations only.
/// Every operation here is correctly rounded by IEEE 754, so results are
/// identical across builds and platforms, which `f64::hypot` (a libm call)
/// does not guarantee.
fn pythag(a: f64, b: f64) -> f64 {
    let (a, b) = (a.abs(), b.abs());
    if a > b {
        let r = b / a;
        a * (1.0 + r * r).sqrt()
    } else if b > 0.0 {
        let r = a / b;
        b * (1.0 + r * r).sqrt()
    } else {
        0.0
    }
}

/// Implicit-shift QL iteration on the tridiagonal form, accumulating
/// rotations into the eigenvector matrix `v`.
fn tql2(d: &mut [f64], e: &mut [f64], v: &mut Matrix) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = 2.0f64.powi(-52);

    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 50 {
                    return Err(Error::EigenConvergence);
                }

                // compute implicit shift
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = pythag(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // implicit QL sweep
                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = pythag(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    for k in 0..n {
                        h = v[(k, i + 1)];
                        v[(k, i + 1)] = s * v[(k, i)] + c * h;
                        v[(k, i)] = c * v[(k, i)] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Group sorted eigenvalue indices whose consecutive gaps stay within
/// `rel_tol * max(1, max|eigenvalue|)`.
pub fn group_degenerate(eig: &SymmetricEigendecomposition, rel_tol: f64) -> EigenvalueGroups {
    let max_abs = eig
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    let tolerance = rel_tol * max_abs.max(1.0);

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for j in 0..eig.dim {
        let chained = j > 0 && (eig.eigenvalues[j] - eig.eigenvalues[j - 1]).abs() <= tolerance;
        if chained {
            groups.last_mut().unwrap().push(j);
        } else {
            groups.push(vec![j]);
        }
    }
    EigenvalueGroups { groups, tolerance }
}

/// Diagonal of `exp(H)` from its eigendecomposition:
/// `d[m] = sum_k exp(theta_k) * Phi[m,k]^2`.
pub fn exp_diag(eig: &SymmetricEigendecomposition) -> Result<Vec<f64>> {
    let max_eig = eig
        .eigenvalues
        .iter()
        .fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    if max_eig > EXP_ARG_MAX {
        return Err(Error::ExpOverflow {
            max_eigenvalue: max_eig,
        });
    }
    let weights: Vec<f64> = eig.eigenvalues.iter().map(|&t| t.exp()).collect();
    Ok((0..eig.dim)
        .map(|m| {
            (0..eig.dim)
                .map(|k| {
                    let phi = eig.eigenvectors[(m, k)];
                    weights[k] * phi * phi
                })
                .sum()
        })
        .collect())
}

/// Time-averaged occupations of `exp(-iHt) psi0` over `[0, horizon]`,
/// approximated by the composite trapezoid rule on `steps` uniform
/// subintervals. The evolution is evaluated through the eigendecomposition,
/// applying the complex phase of each eigenpair.
///
/// This is the quadrature oracle for the closed-form limit; it is not used
/// by any scoring path.
pub fn time_average_quadrature(
    h: &Matrix,
    psi0: &[f64],
    horizon: f64,
    steps: usize,
) -> Result<Vec<f64>> {
    if horizon <= 0.0 {
        return Err(Error::InvalidParameter("horizon must be positive".into()));
    }
    if steps == 0 {
        return Err(Error::InvalidParameter("steps must be positive".into()));
    }
    let norm = psi0.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitNorm { norm });
    }

    let eig = sym_eig(h)?;
    let dim = eig.dim;
    let coeffs = eig.project(psi0);

    // weighted eigenvector components: w[m][j] = a_j * Phi[m,j]
    let weighted = Matrix::from_fn(dim, dim, |m, j| coeffs[j] * eig.eigenvectors[(m, j)]);

    let dt = horizon / steps as f64;
    let mut occupations = vec![0.0f64; dim];
    let mut cos_t = vec![0.0f64; dim];
    let mut sin_t = vec![0.0f64; dim];
    for step in 0..=steps {
        let t = step as f64 * dt;
        for j in 0..dim {
            let phase = eig.eigenvalues[j] * t;
            cos_t[j] = phase.cos();
            sin_t[j] = phase.sin();
        }
        let weight = if step == 0 || step == steps { 0.5 } else { 1.0 };
        for (m, occ) in occupations.iter_mut().enumerate() {
            let row = weighted.row(m);
            let mut re = 0.0;
            let mut im = 0.0;
            for j in 0..dim {
                re += row[j] * cos_t[j];
                im += row[j] * sin_t[j];
            }
            *occ += weight * (re * re + im * im);
        }
    }
    for occ in &mut occupations {
        *occ /= steps as f64;
    }
    Ok(occupations)
}
