use super::svd::svd;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Singular values below this fraction of the largest mark a rank-deficient basis.
pub const RANK_TOL: f64 = 1e-10;

/// Orthonormal basis for the column space of a full-column-rank matrix.
pub fn orthonormal_basis(w: &Matrix) -> Result<Matrix> {
    if w.cols() > w.rows() {
        return Err(Error::RankDeficient { ratio: 0.0 });
    }
    let s = svd(w)?;
    let top = s.singulars.first().copied().unwrap_or(0.0);
    let bottom = s.singulars.last().copied().unwrap_or(0.0);
    if top == 0.0 || bottom <= RANK_TOL * top {
        let ratio = if top == 0.0 { 0.0 } else { bottom / top };
        return Err(Error::RankDeficient { ratio });
    }
    Ok(s.left)
}

/// Principal angles between `col(W1)` and `col(W2)`, ascending, in `[0, π/2]`.
///
/// Cosines come from the singular values of `Q1ᵀQ2`; angles whose cosine
/// exceeds `1/√2` are recomputed from the sines of `(I − Q1Q1ᵀ)Q2`, which keeps
/// small angles accurate to roundoff instead of `√ε`.
pub fn principal_angles(w1: &Matrix, w2: &Matrix) -> Result<Vec<f64>> {
    if w1.rows() != w2.rows() || w1.cols() != w2.cols() {
        return Err(Error::ShapeMismatch(format!(
            "principal angles need equal shapes, got {}x{} and {}x{}",
            w1.rows(),
            w1.cols(),
            w2.rows(),
            w2.cols()
        )));
    }
    let q1 = orthonormal_basis(w1)?;
    let q2 = orthonormal_basis(w2)?;
    let cross = q1.t_mul(&q2);
    let cosines = svd(&cross)?.singulars;
    let residual = &q2 - &(&q1 * &cross);
    let mut sines = svd(&residual)?.singulars;
    sines.reverse();

    Ok(cosines
        .iter()
        .zip(&sines)
        .map(|(&c, &s)| {
            let c = c.clamp(0.0, 1.0);
            if c * c >= 0.5 {
                s.clamp(0.0, 1.0).asin()
            } else {
                c.acos()
            }
        })
        .collect())
}

/// Largest principal angle, or `π/2` when either basis is rank deficient.
pub fn max_principal_angle(w1: &Matrix, w2: &Matrix) -> Result<f64> {
    Ok(principal_angles(w1, w2)?.into_iter().fold(0.0, f64::max))
}
