use serde::Serialize;

use crate::matrix::Matrix;

/// Slack allowed below zero on an inequality residual, relative to the
/// instance scale (see [`CheckReport::inequality`]).
pub const INEQ_TOL: f64 = 1e-9;

/// Residuals within this (same relative scale) count as equality.
pub const EQ_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityCase {
    Strict,
    Equality,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub label: String,
    pub value: Matrix,
}

/// Verdict on one claim of the form `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`
    pub residual: f64,
    /// `holds ⟺ residual ≥ −tol`
    pub tol: f64,
    pub equality_case: EqualityCase,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    /// `lhs ≤ rhs` with the shared relative tolerances and equality detection.
    ///
    /// `scale` is the natural magnitude of the instance (for example
    /// `‖X‖_F ‖Y‖_F` for a trace pairing); tolerances are taken relative to
    /// `max(scale, |lhs|, |rhs|)`.
    pub fn inequality(name: impl Into<String>, lhs: f64, rhs: f64, scale: f64) -> Self {
        let scale = scale.abs().max(lhs.abs()).max(rhs.abs());
        let residual = rhs - lhs;
        let tol = INEQ_TOL * scale;
        let equality_case = if residual.abs() <= EQ_TOL * scale {
            EqualityCase::Equality
        } else {
            EqualityCase::Strict
        };
        Self {
            name: name.into(),
            holds: residual >= -tol,
            lhs,
            rhs,
            residual,
            tol,
            equality_case,
            witnesses: Vec::new(),
        }
    }

    /// `value ≤ limit` with no slack; used for residual and deviation checks.
    pub fn bound(name: impl Into<String>, value: f64, limit: f64) -> Self {
        let residual = limit - value;
        Self {
            name: name.into(),
            holds: residual >= 0.0,
            lhs: value,
            rhs: limit,
            residual,
            tol: 0.0,
            equality_case: EqualityCase::NotApplicable,
            witnesses: Vec::new(),
        }
    }

    pub fn with_witness(mut self, label: impl Into<String>, value: Matrix) -> Self {
        self.witnesses.push(Witness {
            label: label.into(),
            value,
        });
        self
    }

    /// Residual divided by the scale its tolerances were taken against.
    pub fn relative_residual(&self) -> f64 {
        if self.tol > 0.0 {
            self.residual * INEQ_TOL / self.tol
        } else {
            self.residual
        }
    }

    pub fn is_equality(&self) -> bool {
        self.equality_case == EqualityCase::Equality
    }
}

pub fn all_hold(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.holds)
}
