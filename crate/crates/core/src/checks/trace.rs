//! von Neumann's trace inequality, its PSD corollary, and the spectrum of
//! `M = WWᵀ(2I − WWᵀ)` that links it back to `h`.

use super::report::CheckReport;
use super::spectral::EIGVEC_TOL;
use crate::error::{Error, Result};
use crate::gep::GepProblem;
use crate::linalg::{svd, sym_eig, SymEig, PD_TOL};
use crate::matrix::{norm2, Matrix};
use crate::objective::Objective;

/// Reconstruction slack when testing a candidate shared singular frame.
pub const SHARED_FRAME_TOL: f64 = 1e-7;
/// Off-diagonal slack when testing a candidate shared eigenframe.
pub const SHARED_EIG_TOL: f64 = 1e-6;
/// Singular values above this are checked by [`psd_svd_is_eig`].
pub const SVD_EIG_CUTOFF: f64 = 1e-8;
/// Slack on `u_i = v_i` in [`psd_svd_is_eig`].
pub const SVD_EIG_TOL: f64 = 1e-7;
/// Match tolerance between direct and formula spectra of `M`.
pub const M_SPECTRUM_TOL: f64 = 1e-8;

/// Mixing coefficients tried, in order, to split ties in `A + cM`.
pub const MIXING_SWEEP: [f64; 3] = [1.0, 0.5, 1.0 / 3.0];

fn require_psd(a: &Matrix) -> Result<SymEig> {
    let eig = sym_eig(a)?;
    if eig.min() < -PD_TOL * a.norm_max() {
        return Err(Error::NotPsd {
            min_eigenvalue: eig.min(),
        });
    }
    Ok(eig)
}

/// `⟨X, Y⟩ ≤ Σ_j σ_j(X) σ_j(Y)`.
///
/// On equality, a shared ordered singular frame is verified by rebuilding `X`
/// and `Y` from the singular vectors of `X + Y`.
pub fn von_neumann(x: &Matrix, y: &Matrix) -> Result<Vec<CheckReport>> {
    if x.shape() != y.shape() {
        return Err(Error::ShapeMismatch(format!(
            "X is {}x{}, Y is {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    let sx = svd(x)?.singulars;
    let sy = svd(y)?.singulars;
    let rhs: f64 = sx.iter().zip(&sy).map(|(a, b)| a * b).sum();
    let bound = CheckReport::inequality(
        "von-neumann.trace",
        x.inner(y),
        rhs,
        x.norm_fro() * y.norm_fro(),
    );
    let mut reports = vec![bound];
    if reports[0].is_equality() {
        let frame = svd(&(x + y))?;
        let rebuild = |s: &[f64]| {
            let u = &frame.left;
            let scaled = Matrix::from_fn(u.rows(), u.cols(), |i, j| u[(i, j)] * s[j]);
            &scaled * &frame.right.transpose()
        };
        let err = rebuild(&sx)
            .max_abs_diff(x)
            .max(rebuild(&sy).max_abs_diff(y));
        let scale = 1.0 + x.norm_max().max(y.norm_max());
        reports.push(
            CheckReport::bound("von-neumann.shared-frame", err, SHARED_FRAME_TOL * scale)
                .with_witness("left", frame.left)
                .with_witness("right", frame.right),
        );
    }
    Ok(reports)
}

/// `⟨A, M⟩ ≤ Σ_i λ_i(A) μ_i(M)` for PSD `A` and symmetric `M`, spectra descending.
///
/// On equality, an ordered shared eigenframe is searched for among the
/// eigenvectors of `A + cM` over [`MIXING_SWEEP`].
pub fn psd_von_neumann(a: &Matrix, m: &Matrix) -> Result<Vec<CheckReport>> {
    if a.shape() != m.shape() {
        return Err(Error::ShapeMismatch(format!(
            "A is {}x{}, M is {}x{}",
            a.rows(),
            a.cols(),
            m.rows(),
            m.cols()
        )));
    }
    let a_eig = require_psd(a)?;
    let m_eig = sym_eig(m)?;
    let rhs: f64 = a_eig
        .eigenvalues
        .iter()
        .zip(&m_eig.eigenvalues)
        .map(|(l, mu)| l * mu)
        .sum();
    let bound = CheckReport::inequality(
        "psd-von-neumann.trace",
        a.inner(m),
        rhs,
        a.norm_fro() * m.norm_fro(),
    );
    let mut reports = vec![bound];
    if reports[0].is_equality() {
        let scale = 1.0 + a.norm_max().max(m.norm_max());
        let (err, frame) = MIXING_SWEEP
            .iter()
            .map(|&c| shared_eigenframe_error(a, m, c))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min_by(|x, y| x.0.total_cmp(&y.0))
            .expect("sweep is non-empty");
        reports.push(
            CheckReport::bound("psd-von-neumann.shared-frame", err, SHARED_EIG_TOL * scale)
                .with_witness("frame", frame),
        );
    }
    Ok(reports)
}

/// Worst of: off-diagonal mass of `UᵀAU` and `UᵀMU`, and any increase along
/// their diagonals, where `U` diagonalizes `A + cM`.
fn shared_eigenframe_error(a: &Matrix, m: &Matrix, c: f64) -> Result<(f64, Matrix)> {
    let u = sym_eig(&(a + &m.scale(c)))?.eigenvectors;
    let da = u.t_mul(&(a * &u));
    let dm = u.t_mul(&(m * &u));
    let mut err = da.max_off_diagonal().max(dm.max_off_diagonal());
    for diag in [da.diagonal(), dm.diagonal()] {
        for w in diag.windows(2) {
            err = err.max(w[1] - w[0]);
        }
    }
    Ok((err, u))
}

/// The SVD of a PSD matrix is an eigendecomposition: `u_i = v_i` and
/// `A u_i = σ_i u_i` for every `σ_i > 1e-8`.
pub fn psd_svd_is_eig(a: &Matrix) -> Result<Vec<CheckReport>> {
    require_psd(a)?;
    let s = svd(a)?;
    let mut frame_dev = 0.0f64;
    let mut eig_res = 0.0f64;
    for (i, &sigma) in s.singulars.iter().enumerate() {
        if sigma <= SVD_EIG_CUTOFF {
            continue;
        }
        let u = s.left.column(i);
        let v = s.right.column(i);
        let diff: Vec<f64> = u.iter().zip(&v).map(|(x, y)| x - y).collect();
        frame_dev = frame_dev.max(norm2(&diff));
        let au = a.mul_vec(&u);
        let r: Vec<f64> = au.iter().zip(&u).map(|(x, y)| x - sigma * y).collect();
        eig_res = eig_res.max(norm2(&r));
    }
    Ok(vec![
        CheckReport::bound("svd-eig.left-equals-right", frame_dev, SVD_EIG_TOL),
        CheckReport::bound(
            "svd-eig.eigen-residual",
            eig_res,
            EIGVEC_TOL * (1.0 + a.norm_max()),
        ),
    ])
}

/// `M = WWᵀ(2I_d − WWᵀ)`.
pub fn m_matrix(w: &Matrix) -> Matrix {
    let wwt = w * &w.transpose();
    let two_minus = &Matrix::identity(w.rows()).scale(2.0) - &wwt;
    (&wwt * &two_minus).symmetrize()
}

/// Eigenvalues of `M = WWᵀ(2I − WWᵀ)`, descending.
pub fn m_spectrum(w: &Matrix) -> Result<Vec<f64>> {
    Ok(sym_eig(&m_matrix(w))?.eigenvalues)
}

/// `{2d_i² − d_i⁴}` from the singular values of `W`, padded with zeros to
/// length `d` and sorted descending.
pub fn m_spectrum_formula(w: &Matrix) -> Result<Vec<f64>> {
    let mut mu: Vec<f64> = svd(w)?
        .singulars
        .iter()
        .map(|s| 2.0 * s * s - s.powi(4))
        .collect();
    mu.resize(w.rows(), 0.0);
    mu.sort_by(|a, b| b.total_cmp(a));
    Ok(mu)
}

/// Direct spectrum of `M` against the singular-value formula, plus `μ ≤ 1`.
pub fn check_m_spectrum(w: &Matrix) -> Result<Vec<CheckReport>> {
    let direct = m_spectrum(w)?;
    let formula = m_spectrum_formula(w)?;
    let dev = direct
        .iter()
        .zip(&formula)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    let scale = 1.0 + formula.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    Ok(vec![
        CheckReport::bound("m-spectrum.formula", dev, M_SPECTRUM_TOL * scale),
        CheckReport::bound("m-spectrum.at-most-one", direct[0], 1.0 + 1e-10),
    ])
}

/// The chain `h(W; A, I) = ⟨A, M⟩ ≤ Σ λ_i μ_i ≤ Σ_{i≤k} λ_i` for PSD `A`.
pub fn von_neumann_chain(a: &Matrix, w: &Matrix) -> Result<Vec<CheckReport>> {
    let k = w.cols();
    let obj = Objective::new(GepProblem::standard(a.clone())?, k)?;
    let h = obj.h_value(w)?;
    let m = m_matrix(w);
    let pairing = a.inner(&m);
    let scale = 1.0 + h.abs().max(pairing.abs());

    let mut reports = vec![CheckReport::bound(
        "chain.h-equals-pairing",
        (h - pairing).abs(),
        1e-9 * scale,
    )];
    let vn = psd_von_neumann(a, &m)?;
    let a_eig = require_psd(a)?;
    let mu = m_spectrum(w)?;
    let weighted: f64 = a_eig.eigenvalues.iter().zip(&mu).map(|(l, m)| l * m).sum();
    let top: f64 = a_eig.eigenvalues.iter().take(k).sum();
    reports.push(vn[0].clone());
    let trace_a: f64 = a_eig.eigenvalues.iter().map(|l| l.abs()).sum();
    reports.push(CheckReport::inequality(
        "chain.weighted-le-top-sum",
        weighted,
        top,
        trace_a,
    ));
    Ok(reports)
}
