use thiserror::Error;

/// Errors raised by the dense kernels, the GEP reduction and the checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not symmetric (max asymmetry {asymmetry:e} exceeds {tol:e})")]
    NotSymmetric { asymmetry: f64, tol: f64 },

    #[error("matrix is not positive definite (min eigenvalue {min_eigenvalue:e}, threshold {threshold:e})")]
    NotPositiveDefinite { min_eigenvalue: f64, threshold: f64 },

    #[error("matrix is not positive semi-definite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix is rank deficient (smallest singular value ratio {ratio:e})")]
    RankDeficient { ratio: f64 },

    #[error("invalid subspace dimension k = {k} for d = {d}")]
    BadK { k: usize, d: usize },

    #[error("invalid index {index} (expected 1..={max})")]
    BadIndex { index: usize, max: usize },

    #[error("invalid diagonal weight matrix: {0}")]
    BadLambda(String),

    #[error("columns are not orthonormal (max deviation {deviation:e})")]
    NotOrthonormal { deviation: f64 },

    #[error("columns are not B-orthonormal (max deviation {deviation:e})")]
    NotBOrthonormal { deviation: f64 },

    #[error("vector is zero")]
    ZeroVector,

    #[error("containment hypothesis violated (projection residual {residual:e})")]
    HypothesisViolated { residual: f64 },

    #[error("gradient ascent diverged at iteration {iteration} (h = {value:e})")]
    Diverged { iteration: usize, value: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid spectrum spec: {0}")]
    BadSpectrumSpec(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
