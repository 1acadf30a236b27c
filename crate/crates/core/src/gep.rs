//! The generalized eigenproblem `Aw = λBw` and its whitening reduction
//! `Ã = B^{-1/2} A B^{-1/2}`, which turns it into a standard symmetric problem.

use crate::error::{Error, Result};
use crate::linalg::{sym_eig, SymEig, PD_TOL, SYM_TOL};
use crate::matrix::{norm2, Matrix};

/// Gaps `λ_k − λ_{k+1}` at or below this are flagged as a non-unique top-k subspace.
pub const GAP_TOL: f64 = 1e-8;

/// A validated pair `(A, B)`: both symmetric, `B` positive definite.
#[derive(Debug, Clone, PartialEq)]
pub struct GepProblem {
    a: Matrix,
    b: Matrix,
    b_eig: SymEig,
}

impl GepProblem {
    /// Validates symmetry of both matrices and positive definiteness of `B`.
    /// Both are stored symmetrized.
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
            return Err(Error::ShapeMismatch(format!(
                "A is {}x{}, B is {}x{}; both must be d x d",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        a.check_symmetric(SYM_TOL)?;
        let b_eig = sym_eig(&b)?;
        let threshold = PD_TOL * b.norm_max();
        if b_eig.min().is_nan() || b_eig.min() <= threshold {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: b_eig.min(),
                threshold,
            });
        }
        Ok(Self {
            a: a.symmetrize(),
            b: b.symmetrize(),
            b_eig,
        })
    }

    /// Standard eigenproblem, `B = I`.
    pub fn standard(a: Matrix) -> Result<Self> {
        let d = a.rows();
        Self::new(a, Matrix::identity(d))
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    pub fn b_eigenvalues(&self) -> &[f64] {
        &self.b_eig.eigenvalues
    }

    /// `B^{-1/2}` from the cached eigendecomposition of `B`.
    pub fn b_inv_half(&self) -> Matrix {
        self.b_eig.spectral_map(|x| 1.0 / x.sqrt())
    }

    pub fn b_half(&self) -> Matrix {
        self.b_eig.spectral_map(f64::sqrt)
    }

    /// Whether `A` is positive semi-definite at tolerance `1e-10·‖A‖_max`.
    pub fn a_is_psd(&self) -> Result<bool> {
        let e = sym_eig(&self.a)?;
        Ok(e.min() >= -PD_TOL * self.a.norm_max())
    }

    pub fn require_psd_a(&self) -> Result<()> {
        let e = sym_eig(&self.a)?;
        if e.min() >= -PD_TOL * self.a.norm_max() {
            Ok(())
        } else {
            Err(Error::NotPsd {
                min_eigenvalue: e.min(),
            })
        }
    }
}

/// Output of [`whiten`].
#[derive(Debug, Clone, PartialEq)]
pub struct Whitened {
    /// `B^{-1/2} A B^{-1/2}`, symmetric.
    pub a_tilde: Matrix,
    pub b_inv_half: Matrix,
}

pub fn whiten(p: &GepProblem) -> Whitened {
    let b_inv_half = p.b_inv_half();
    let a_tilde = (&(&b_inv_half * &p.a) * &b_inv_half).symmetrize();
    Whitened {
        a_tilde,
        b_inv_half,
    }
}

/// Dense oracle solution: every generalized eigenpair, `B`-orthonormal.
#[derive(Debug, Clone, PartialEq)]
pub struct GepSolution {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// `W*`, column `i` is the `λ_i` generalized eigenvector.
    pub eigenvectors: Matrix,
    /// `λ_i − λ_{i+1}` for `i = 1..d-1`.
    pub gaps: Vec<f64>,
}

impl GepSolution {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `Σ_{i≤k} λ_i`.
    pub fn top_sum(&self, k: usize) -> f64 {
        self.eigenvalues.iter().take(k).sum()
    }

    /// `Σ_i |λ_i|`.
    pub fn abs_sum(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }

    /// `λ_k − λ_{k+1}`, `None` when `k = d`.
    pub fn gap_at(&self, k: usize) -> Option<f64> {
        (k < self.dim() && k >= 1).then(|| self.gaps[k - 1])
    }

    /// Largest `‖A w_i − λ_i B w_i‖₂` over all pairs.
    pub fn max_residual(&self, p: &GepProblem) -> f64 {
        let aw = p.a() * &self.eigenvectors;
        let bw = p.b() * &self.eigenvectors;
        (0..self.dim())
            .map(|i| {
                let r: Vec<f64> = (0..self.dim())
                    .map(|row| aw[(row, i)] - self.eigenvalues[i] * bw[(row, i)])
                    .collect();
                norm2(&r)
            })
            .fold(0.0, f64::max)
    }

    /// `‖W*ᵀ B W* − I‖_max`.
    pub fn b_orthonormality_error(&self, p: &GepProblem) -> f64 {
        let w = &self.eigenvectors;
        w.t_mul(&(p.b() * w))
            .max_abs_diff(&Matrix::identity(self.dim()))
    }
}

/// Solves the GEP through the whitening reduction.
pub fn solve_dense(p: &GepProblem) -> Result<GepSolution> {
    let whitened = whiten(p);
    let eig = sym_eig(&whitened.a_tilde)?;
    let eigenvectors = &whitened.b_inv_half * &eig.eigenvectors;
    let gaps = eig.eigenvalues.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(GepSolution {
        eigenvalues: eig.eigenvalues,
        eigenvectors,
        gaps,
    })
}

/// A top-k frame together with its uniqueness diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct TopK {
    /// `d × k`, `B`-orthonormal.
    pub basis: Matrix,
    /// `λ_k − λ_{k+1}`; `None` when `k = d`.
    pub gap: Option<f64>,
    /// False when the gap is at or below the gap tolerance.
    pub unique: bool,
}

pub fn top_k(sol: &GepSolution, k: usize) -> Result<TopK> {
    top_k_with_gap_tol(sol, k, GAP_TOL)
}

pub fn top_k_with_gap_tol(sol: &GepSolution, k: usize, gap_tol: f64) -> Result<TopK> {
    let d = sol.dim();
    if k == 0 || k > d {
        return Err(Error::BadK { k, d });
    }
    let gap = sol.gap_at(k);
    Ok(TopK {
        basis: sol.eigenvectors.columns(0, k),
        gap,
        unique: gap.is_none_or(|g| g > gap_tol),
    })
}
