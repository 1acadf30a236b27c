//! Rayleigh quotient bounds, interlacing of compressions, and the
//! constrained trace characterisation.

use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::gep::{solve_dense, top_k, GepProblem};
use crate::linalg::{max_principal_angle, sym_eig, SymEig};
use crate::matrix::{norm2, Matrix};

/// Projection residual allowed when verifying a containment hypothesis.
pub const HYPOTHESIS_TOL: f64 = 1e-8;
/// Eigen-residual limit `‖Av − λv‖ ≤ 1e-7 (1 + ‖A‖_max)` on equality cases.
pub const EIGVEC_TOL: f64 = 1e-7;
/// Orthonormality slack on test frames.
pub const FRAME_TOL: f64 = 1e-8;
/// Principal-angle limit when an equality case must identify the top-k subspace.
pub const SUBSPACE_TOL: f64 = 1e-5;
/// Frames this close (largest principal angle) to the top-k subspace must attain equality.
pub const TOP_FRAME_TOL: f64 = 1e-7;

/// Which side of Rayleigh's principle is being tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    /// `u ∈ span(u_1, …, u_i)`, quotient at least `λ_i`.
    InSpan,
    /// `u ⟂ span(u_1, …, u_{i−1})`, quotient at most `λ_i`.
    Orthogonal,
}

fn eigen_residual(a: &Matrix, v: &[f64], lambda: f64) -> f64 {
    let av = a.mul_vec(v);
    let r: Vec<f64> = av.iter().zip(v).map(|(x, y)| x - lambda * y).collect();
    norm2(&r)
}

/// Rayleigh's principle for the `i`-th eigenvalue (1-based).
///
/// The first report is the quotient bound; a second report verifying that
/// `u` is a `λ_i`-eigenvector is appended when the bound is attained.
pub fn rayleigh_bounds(
    eig: &SymEig,
    u: &[f64],
    i: usize,
    hypothesis: Containment,
) -> Result<Vec<CheckReport>> {
    let d = eig.dim();
    if i == 0 || i > d {
        return Err(Error::BadIndex { index: i, max: d });
    }
    if u.len() != d {
        return Err(Error::ShapeMismatch(format!(
            "vector has length {}, matrix is {d}x{d}",
            u.len()
        )));
    }
    let norm = norm2(u);
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let basis = &eig.eigenvectors;
    let coeffs = basis.t_mul(&Matrix::from_columns(&[u]).expect("finite"));
    let residual = match hypothesis {
        Containment::InSpan => coeffs.as_slice()[i..].iter().map(|c| c * c).sum::<f64>(),
        Containment::Orthogonal => coeffs.as_slice()[..i - 1]
            .iter()
            .map(|c| c * c)
            .sum::<f64>(),
    }
    .sqrt()
        / norm;
    if residual > HYPOTHESIS_TOL {
        return Err(Error::HypothesisViolated { residual });
    }

    let a = eig.reconstruct();
    let quotient = crate::matrix::dot(u, &a.mul_vec(u)) / (norm * norm);
    let lambda = eig.eigenvalues[i - 1];
    let scale = eig.max().abs().max(eig.min().abs());
    let bound = match hypothesis {
        Containment::InSpan => {
            CheckReport::inequality(format!("rayleigh.lower[{i}]"), lambda, quotient, scale)
        }
        Containment::Orthogonal => {
            CheckReport::inequality(format!("rayleigh.upper[{i}]"), quotient, lambda, scale)
        }
    };
    let mut reports = vec![bound];
    if reports[0].is_equality() {
        let unit: Vec<f64> = u.iter().map(|x| x / norm).collect();
        reports.push(CheckReport::bound(
            format!("rayleigh.eigenvector[{i}]"),
            eigen_residual(&a, &unit, lambda),
            EIGVEC_TOL * (1.0 + a.norm_max()),
        ));
    }
    Ok(reports)
}

/// Interlacing `μ_i ≤ λ_i` between `C = SᵀAS` and `A`.
///
/// When every bound is attained the eigenvectors `S v_i` of `A` are verified
/// as well (one extra report per index).
pub fn haemers_interlace(a: &Matrix, s: &Matrix) -> Result<Vec<CheckReport>> {
    if a.rows() != s.rows() {
        return Err(Error::ShapeMismatch(format!(
            "A is {}x{}, S has {} rows",
            a.rows(),
            a.cols(),
            s.rows()
        )));
    }
    let k = s.cols();
    let deviation = s.t_mul(s).max_abs_diff(&Matrix::identity(k));
    if deviation > FRAME_TOL {
        return Err(Error::NotOrthonormal { deviation });
    }
    let a_eig = sym_eig(a)?;
    let c = s.t_mul(&(a * s)).symmetrize();
    let c_eig = sym_eig(&c)?;
    let scale = a_eig.max().abs().max(a_eig.min().abs());

    let mut reports: Vec<CheckReport> = (0..k)
        .map(|i| {
            CheckReport::inequality(
                format!("haemers.interlace[{}]", i + 1),
                c_eig.eigenvalues[i],
                a_eig.eigenvalues[i],
                scale,
            )
        })
        .collect();
    if reports.iter().all(CheckReport::is_equality) {
        let limit = EIGVEC_TOL * (1.0 + a.norm_max());
        let lifted = s * &c_eig.eigenvectors;
        for i in 0..k {
            let v = lifted.column(i);
            reports.push(CheckReport::bound(
                format!("haemers.eigenvector[{}]", i + 1),
                eigen_residual(a, &v, c_eig.eigenvalues[i]),
                limit,
            ));
        }
    }
    Ok(reports)
}

/// `trace(WᵀAW) ≤ Σ_{i≤k} λ_i` for B-orthonormal `W`, with both directions
/// of the equality characterisation.
///
/// Follow-up reports:
/// * `constrained.subspace`: equality was detected and the top-k subspace is
///   unique, so `col(W)` must match it to within [`SUBSPACE_TOL`].
/// * `constrained.top-frame-equality`: `col(W)` is the oracle top-k subspace
///   (largest angle ≤ [`TOP_FRAME_TOL`]) so equality must be detected.
pub fn constrained_bound(p: &GepProblem, w: &Matrix, k: usize) -> Result<Vec<CheckReport>> {
    if w.shape() != (p.dim(), k) {
        return Err(Error::ShapeMismatch(format!(
            "W is {}x{}, expected {}x{k}",
            w.rows(),
            w.cols(),
            p.dim()
        )));
    }
    let deviation = w.t_mul(&(p.b() * w)).max_abs_diff(&Matrix::identity(k));
    if deviation > FRAME_TOL {
        return Err(Error::NotBOrthonormal { deviation });
    }
    let sol = solve_dense(p)?;
    let top = top_k(&sol, k)?;
    let value = w.t_mul(&(p.a() * w)).trace();
    let spread = sol.eigenvalues[0]
        .abs()
        .max(sol.eigenvalues[p.dim() - 1].abs());
    let bound = CheckReport::inequality(
        "constrained.trace",
        value,
        sol.top_sum(k),
        k as f64 * spread,
    );
    let equality = bound.is_equality();
    let mut reports = vec![bound];

    if top.unique {
        let angle = max_principal_angle(w, &top.basis)?;
        if equality {
            reports.push(CheckReport::bound(
                "constrained.subspace",
                angle,
                SUBSPACE_TOL,
            ));
        }
        if angle <= TOP_FRAME_TOL {
            reports.push(CheckReport::bound(
                "constrained.top-frame-equality",
                if equality { 0.0 } else { 1.0 },
                0.0,
            ));
        }
    }
    Ok(reports)
}
