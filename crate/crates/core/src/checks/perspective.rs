use super::report::CheckReport;
use crate::error::Result;
use crate::linalg::sym_eig;
use crate::matrix::Matrix;
use crate::objective::{perspective_radius, perspective_value};

/// An equality verdict must come from an `M` this close to the identity.
pub const IDENTITY_TOL: f64 = 1e-7;

/// `𝕙(M) ≤ trace(Λ)`, plus `𝕙(M) ≤ 0` once `‖M‖_op ≥ R*`, plus the
/// requirement that equality only happens at `M = I`.
pub fn perspective_check(lambda: &Matrix, m: &Matrix) -> Result<Vec<CheckReport>> {
    let value = perspective_value(lambda, m)?;
    let radius = perspective_radius(lambda)?;
    let op_norm = sym_eig(m)?.max();

    let trace = lambda.trace();
    let bound = CheckReport::inequality("perspective.bound", value, trace, trace);
    let equality = bound.is_equality();
    let mut reports = vec![bound];
    if op_norm >= radius {
        reports.push(CheckReport::inequality(
            "perspective.outside-radius",
            value,
            0.0,
            trace,
        ));
    }
    if equality {
        let dev = m.max_abs_diff(&Matrix::identity(m.rows()));
        reports.push(CheckReport::bound(
            "perspective.equality-at-identity",
            dev,
            IDENTITY_TOL,
        ));
    }
    Ok(reports)
}
