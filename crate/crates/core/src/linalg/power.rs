use super::eig::sym_eig;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Eigenvalues of a positive definite matrix must exceed this fraction of `‖B‖_max`.
pub const PD_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPower {
    /// `B^{1/2}`
    Sqrt,
    /// `B^{-1/2}`
    InvSqrt,
}

/// Symmetric square root or inverse square root of a positive definite matrix.
pub fn mat_pow_half(b: &Matrix, power: HalfPower) -> Result<Matrix> {
    let eig = sym_eig(b)?;
    let threshold = PD_TOL * b.norm_max();
    let min_eigenvalue = eig.min();
    if min_eigenvalue.is_nan() || min_eigenvalue <= threshold {
        return Err(Error::NotPositiveDefinite {
            min_eigenvalue,
            threshold,
        });
    }
    Ok(match power {
        HalfPower::Sqrt => eig.spectral_map(f64::sqrt),
        HalfPower::InvSqrt => eig.spectral_map(|x| 1.0 / x.sqrt()),
    })
}
