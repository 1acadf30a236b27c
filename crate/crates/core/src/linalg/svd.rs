//! Thin SVD by one-sided (Hestenes) Jacobi rotations on columns.

use super::eig::jacobi_rotation;
use crate::error::{Error, Result};
use crate::matrix::{dot, norm2, Matrix};

pub const MAX_SWEEPS: usize = 100;

/// `X = Σ_j σ_j u_j v_jᵀ` with `q = min(rows, cols)` triples, σ descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Svd {
    /// `rows × q`, orthonormal columns.
    pub left: Matrix,
    pub singulars: Vec<f64>,
    /// `cols × q`, orthonormal columns.
    pub right: Matrix,
}

impl Svd {
    pub fn reconstruct(&self) -> Matrix {
        let u = &self.left;
        let scaled = Matrix::from_fn(u.rows(), u.cols(), |i, j| u[(i, j)] * self.singulars[j]);
        &scaled * &self.right.transpose()
    }

    /// Number of singular values above `rel_tol · σ_max`.
    pub fn rank(&self, rel_tol: f64) -> usize {
        let top = self.singulars.first().copied().unwrap_or(0.0);
        self.singulars
            .iter()
            .filter(|&&s| s > rel_tol * top)
            .count()
    }
}

pub fn svd(x: &Matrix) -> Result<Svd> {
    if x.rows() < x.cols() {
        let t = svd_tall(&x.transpose())?;
        return Ok(Svd {
            left: t.right,
            singulars: t.singulars,
            right: t.left,
        });
    }
    svd_tall(x)
}

/// Singular values only.
pub fn singular_values(x: &Matrix) -> Result<Vec<f64>> {
    Ok(svd(x)?.singulars)
}

fn svd_tall(x: &Matrix) -> Result<Svd> {
    let (m, n) = x.shape();
    let mut cols: Vec<Vec<f64>> = (0..n).map(|j| x.column(j)).collect();
    let mut right: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let tol = f64::EPSILON * (m.max(1) as f64);
    // Columns this small are roundoff; their directions carry no information.
    let negligible = tol * x.norm_fro();
    let null_sq = negligible * negligible;

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let alpha = dot(&cols[i], &cols[i]);
                let beta = dot(&cols[j], &cols[j]);
                let gamma = dot(&cols[i], &cols[j]);
                if gamma == 0.0
                    || alpha <= null_sq
                    || beta <= null_sq
                    || gamma.abs() <= tol * (alpha * beta).sqrt()
                {
                    continue;
                }
                rotated = true;
                let (c, s, _) = jacobi_rotation(alpha, beta, gamma);
                rotate_pair(&mut cols, i, j, c, s);
                rotate_pair(&mut right, i, j, c, s);
            }
        }
        if !rotated {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let norms: Vec<f64> = cols.iter().map(|c| norm2(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| norms[b].total_cmp(&norms[a]));

    let mut left_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut pending = Vec::new();
    for (slot, &src) in order.iter().enumerate() {
        let s = norms[src];
        if s > negligible && s > f64::MIN_POSITIVE * 1e8 {
            left_cols.push(cols[src].iter().map(|x| x / s).collect());
        } else {
            left_cols.push(vec![0.0; m]);
            pending.push(slot);
        }
    }
    complete_basis(&mut left_cols, &pending);

    let singulars = order.iter().map(|&i| norms[i]).collect();
    let right_sorted: Vec<Vec<f64>> = order.iter().map(|&i| right[i].clone()).collect();
    Ok(Svd {
        left: Matrix::from_columns(&left_cols)?,
        singulars,
        right: Matrix::from_columns(&right_sorted)?,
    })
}

fn rotate_pair(cols: &mut [Vec<f64>], i: usize, j: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(j);
    let a = &mut head[i];
    let b = &mut tail[0];
    for (x, y) in a.iter_mut().zip(b.iter_mut()) {
        let xi = *x;
        let yj = *y;
        *x = c * xi - s * yj;
        *y = s * xi + c * yj;
    }
}

/// Fills the `pending` slots with unit vectors orthogonal to every other column.
fn complete_basis(cols: &mut [Vec<f64>], pending: &[usize]) {
    if pending.is_empty() {
        return;
    }
    let m = cols[0].len();
    let mut filled: Vec<usize> = (0..cols.len()).filter(|s| !pending.contains(s)).collect();
    let mut candidate = 0usize;
    for &slot in pending {
        while candidate < m {
            let mut v = vec![0.0; m];
            v[candidate] = 1.0;
            candidate += 1;
            // two passes of modified Gram-Schmidt
            for _ in 0..2 {
                for &f in &filled {
                    let proj = dot(&v, &cols[f]);
                    for (vi, ci) in v.iter_mut().zip(&cols[f]) {
                        *vi -= proj * ci;
                    }
                }
            }
            let nv = norm2(&v);
            if nv > 0.5 {
                cols[slot] = v.iter().map(|x| x / nv).collect();
                filled.push(slot);
                break;
            }
        }
    }
}
