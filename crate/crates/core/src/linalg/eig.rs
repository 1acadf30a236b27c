//! Symmetric eigendecomposition by cyclic Jacobi rotations.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Relative symmetry tolerance applied when no explicit one is given.
pub const SYM_TOL: f64 = 1e-10;

/// Sweeps stop once the largest off-diagonal entry is below this fraction of `‖A‖_F`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

pub const MAX_SWEEPS: usize = 100;

/// Eigendecomposition `A = U diag(λ) Uᵀ` with eigenvalues in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymEig {
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns.
    pub eigenvectors: Matrix,
}

impl SymEig {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.eigenvectors.column(i)
    }

    /// `U f(Λ) Uᵀ` for a spectral function `f`.
    pub fn spectral_map(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let u = &self.eigenvectors;
        let n = self.dim();
        let scaled = Matrix::from_fn(n, n, |i, j| u[(i, j)] * f(self.eigenvalues[j]));
        (&scaled * &u.transpose()).symmetrize()
    }

    pub fn reconstruct(&self) -> Matrix {
        self.spectral_map(|x| x)
    }
}

/// Eigendecomposition of a symmetric matrix using the default symmetry tolerance.
pub fn sym_eig(a: &Matrix) -> Result<SymEig> {
    sym_eig_tol(a, SYM_TOL)
}

/// Eigendecomposition of a symmetric matrix; `sym_tol` is relative to `‖A‖_max`.
///
/// Eigenvalues come back in descending order (stable with respect to the
/// order in which the rotations left them on the diagonal) and each
/// eigenvector is flipped so its largest-magnitude entry is positive.
pub fn sym_eig_tol(a: &Matrix, sym_tol: f64) -> Result<SymEig> {
    a.check_symmetric(sym_tol)?;
    let n = a.rows();
    let mut work = a.symmetrize();
    let mut vecs = Matrix::identity(n);

    let threshold = OFF_DIAGONAL_TOL * work.norm_fro();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if work.max_off_diagonal() <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut work, &mut vecs, p, q);
            }
        }
    }
    if !converged && work.max_off_diagonal() > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let diag = work.diagonal();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let eigenvalues = order.iter().map(|&i| diag[i]).collect();
    let mut eigenvectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut v = vecs.column(src);
        normalize_sign(&mut v);
        eigenvectors.set_column(dst, &v);
    }
    Ok(SymEig {
        eigenvalues,
        eigenvectors,
    })
}

/// Annihilates `a[p][q]` with a plane rotation and accumulates it into `v`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let (c, s, t) = jacobi_rotation(a[(p, p)], a[(q, q)], apq);
    if t == 0.0 {
        return;
    }
    let n = a.rows();
    a[(p, p)] -= t * apq;
    a[(q, q)] += t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for r in 0..n {
        if r != p && r != q {
            let arp = a[(r, p)];
            let arq = a[(r, q)];
            let new_p = c * arp - s * arq;
            let new_q = s * arp + c * arq;
            a[(r, p)] = new_p;
            a[(p, r)] = new_p;
            a[(r, q)] = new_q;
            a[(q, r)] = new_q;
        }
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = c * vrp - s * vrq;
        v[(r, q)] = s * vrp + c * vrq;
    }
}

/// Rotation `(c, s, t = s/c)` zeroing the coupling `gamma` between two
/// coordinates with weights `alpha`, `beta`. Shared by the one-sided SVD.
#[inline]
pub(crate) fn jacobi_rotation(alpha: f64, beta: f64, gamma: f64) -> (f64, f64, f64) {
    let zeta = (beta - alpha) / (2.0 * gamma);
    let t = zeta.signum() / (zeta.abs() + zeta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    (c, c * t, t)
}

pub(crate) fn normalize_sign(v: &mut [f64]) {
    let mut best = 0usize;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v.get(best).is_some_and(|&x| x < 0.0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}
