//! The unconstrained trace objective
//!
//! ```text
//! h(W; A, B) = trace(WᵀAW (2I − WᵀBW))
//! ```
//!
//! For `A` PSD and `B` PD its maximum over all `W ∈ ℝ^{d×k}` is `Σ_{i≤k} λ_i`,
//! attained exactly by B-orthonormal frames of a top-k subspace (up to
//! degeneracy in a zero eigenspace). Also holds the matrix perspective
//! functional and the column-space preserving B-orthonormalization that
//! never decreases `h`.

use crate::error::{Error, Result};
use crate::gep::GepProblem;
use crate::linalg::{sym_eig, PD_TOL};
use crate::matrix::Matrix;

/// `h(·; A, B)` restricted to `d × k` arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct Objective {
    problem: GepProblem,
    k: usize,
}

impl Objective {
    pub fn new(problem: GepProblem, k: usize) -> Result<Self> {
        let d = problem.dim();
        if k == 0 || k > d {
            return Err(Error::BadK { k, d });
        }
        Ok(Self { problem, k })
    }

    pub fn problem(&self) -> &GepProblem {
        &self.problem
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.problem.dim()
    }

    fn check_shape(&self, w: &Matrix) -> Result<()> {
        if w.shape() != (self.dim(), self.k) {
            return Err(Error::ShapeMismatch(format!(
                "W is {}x{}, objective expects {}x{}",
                w.rows(),
                w.cols(),
                self.dim(),
                self.k
            )));
        }
        Ok(())
    }

    pub fn h_value(&self, w: &Matrix) -> Result<f64> {
        self.check_shape(w)?;
        let aw = self.problem.a() * w;
        let bw = self.problem.b() * w;
        Ok(h_from_grams(&w.t_mul(&aw), &w.t_mul(&bw)))
    }

    /// `∇_W h = 4AW − 2AW(WᵀBW) − 2BW(WᵀAW)`.
    pub fn h_gradient(&self, w: &Matrix) -> Result<Matrix> {
        Ok(self.h_value_and_gradient(w)?.1)
    }

    /// Value and gradient from one set of products.
    pub fn h_value_and_gradient(&self, w: &Matrix) -> Result<(f64, Matrix)> {
        self.check_shape(w)?;
        let aw = self.problem.a() * w;
        let bw = self.problem.b() * w;
        let wtaw = w.t_mul(&aw);
        let wtbw = w.t_mul(&bw);
        let value = h_from_grams(&wtaw, &wtbw);
        let grad = &(&aw.scale(4.0) - &(&aw * &wtbw).scale(2.0)) - &(&bw * &wtaw).scale(2.0);
        Ok((value, grad))
    }

    /// See [`b_orthonormalize`].
    pub fn b_orthonormalize(&self, w: &Matrix) -> Result<Matrix> {
        self.check_shape(w)?;
        b_orthonormalize(self.problem.b(), w)
    }
}

/// `trace(P (2I − Q))` for the k×k Gram matrices `P = WᵀAW`, `Q = WᵀBW`.
fn h_from_grams(p: &Matrix, q: &Matrix) -> f64 {
    let k = p.rows();
    let mut acc = 2.0 * p.trace();
    for i in 0..k {
        for j in 0..k {
            acc -= p[(i, j)] * q[(j, i)];
        }
    }
    acc
}

/// `W̄ = W (WᵀBW)^{-1/2}`: same column space as `W`, `W̄ᵀBW̄ = I`.
///
/// Fails with `RankDeficient` when the smallest eigenvalue of `WᵀBW` is at or
/// below `1e-10` times its largest. A second pass on the result removes the
/// roundoff left by ill-conditioned Gram matrices.
pub fn b_orthonormalize(b: &Matrix, w: &Matrix) -> Result<Matrix> {
    let once = inverse_root_pass(b, w)?;
    inverse_root_pass(b, &once)
}

fn inverse_root_pass(b: &Matrix, w: &Matrix) -> Result<Matrix> {
    if b.rows() != w.rows() {
        return Err(Error::ShapeMismatch(format!(
            "B is {}x{}, W has {} rows",
            b.rows(),
            b.cols(),
            w.rows()
        )));
    }
    let gram = w.t_mul(&(b * w)).symmetrize();
    let eig = sym_eig(&gram)?;
    let (top, bottom) = (eig.max(), eig.min());
    if top.is_nan() || bottom.is_nan() || top <= 0.0 || bottom <= PD_TOL * top {
        let ratio = if top > 0.0 { bottom / top } else { 0.0 };
        return Err(Error::RankDeficient { ratio });
    }
    let gamma = eig.spectral_map(|x| 1.0 / x.sqrt());
    Ok(w * &gamma)
}

/// Perspective functional `trace(Λ M (2I − M))` for positive diagonal `Λ`
/// and symmetric PSD `M`; bounded by `trace(Λ)` with equality only at `M = I`.
pub fn perspective_value(lambda: &Matrix, m: &Matrix) -> Result<f64> {
    validate_lambda(lambda)?;
    if m.shape() != lambda.shape() {
        return Err(Error::ShapeMismatch(format!(
            "Lambda is {}x{}, M is {}x{}",
            lambda.rows(),
            lambda.cols(),
            m.rows(),
            m.cols()
        )));
    }
    let eig = sym_eig(m)?;
    if eig.min() < -PD_TOL * m.norm_max().max(1.0) {
        return Err(Error::NotPsd {
            min_eigenvalue: eig.min(),
        });
    }
    let p = lambda.rows();
    let diag = lambda.diagonal();
    // trace(ΛM(2I − M)) = Σ_i λ_i (2 m_ii − Σ_j m_ij m_ji)
    let mut acc = 0.0;
    for (i, &l) in diag.iter().enumerate() {
        let mm: f64 = (0..p).map(|j| m[(i, j)] * m[(j, i)]).sum();
        acc += l * (2.0 * m[(i, i)] - mm);
    }
    Ok(acc)
}

/// `R* = 1 + sqrt(1 + (p−1) λ_max / λ_min)`: beyond this operator norm the
/// perspective functional is non-positive.
pub fn perspective_radius(lambda: &Matrix) -> Result<f64> {
    validate_lambda(lambda)?;
    let diag = lambda.diagonal();
    let max = diag.iter().copied().fold(f64::MIN, f64::max);
    let min = diag.iter().copied().fold(f64::MAX, f64::min);
    let p = diag.len() as f64;
    Ok(1.0 + (1.0 + (p - 1.0) * max / min).sqrt())
}

fn validate_lambda(lambda: &Matrix) -> Result<()> {
    if !lambda.is_square() || lambda.rows() == 0 {
        return Err(Error::BadLambda(format!(
            "expected a non-empty square matrix, got {}x{}",
            lambda.rows(),
            lambda.cols()
        )));
    }
    if lambda.max_off_diagonal() != 0.0 {
        return Err(Error::BadLambda("matrix is not diagonal".into()));
    }
    if let Some(x) = lambda
        .diagonal()
        .into_iter()
        .find(|&x| x.is_nan() || x <= 0.0)
    {
        return Err(Error::BadLambda(format!("non-positive diagonal entry {x}")));
    }
    Ok(())
}
