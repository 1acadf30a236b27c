//! Seeded instance generators.
//!
//! Every generator draws from a caller-supplied RNG; [`seeded`] gives the
//! ChaCha stream used throughout so runs are reproducible across platforms.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::gep::GepProblem;
use crate::linalg::{mat_pow_half, HalfPower};
use crate::matrix::{dot, norm2, Matrix};

pub type InstanceRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in `[-1, 1]`.
pub fn uniform_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.random_range(-1.0..=1.0))
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

/// Unit vector with Gaussian direction.
pub fn unit_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        let n = norm2(&v);
        if n > 1e-8 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// `rows × cols` matrix with orthonormal columns (`cols ≤ rows`), Haar distributed.
pub fn orthonormal_columns<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Matrix {
    assert!(
        cols <= rows,
        "cannot fit {cols} orthonormal columns in R^{rows}"
    );
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(cols);
    while basis.len() < cols {
        let mut v: Vec<f64> = (0..rows).map(|_| rng.sample(StandardNormal)).collect();
        for _ in 0..2 {
            for b in &basis {
                let p = dot(&v, b);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= p * y);
            }
        }
        let n = norm2(&v);
        if n > 1e-6 {
            basis.push(v.into_iter().map(|x| x / n).collect());
        }
    }
    Matrix::from_columns(&basis).expect("finite by construction")
}

pub fn orthogonal<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Matrix {
    orthonormal_columns(d, d, rng)
}

/// `Q diag(spectrum) Qᵀ`.
pub fn with_spectrum(q: &Matrix, spectrum: &[f64]) -> Matrix {
    let scaled = Matrix::from_fn(q.rows(), q.cols(), |i, j| q[(i, j)] * spectrum[j]);
    (&scaled * &q.transpose()).symmetrize()
}

/// Symmetric with Gaussian entries (GOE-like), generically indefinite.
pub fn symmetric<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Matrix {
    gaussian_matrix(d, d, rng).symmetrize()
}

/// Wishart-style PSD matrix `GGᵀ / d`, full rank almost surely.
pub fn psd<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Matrix {
    let g = gaussian_matrix(d, d, rng);
    (&g * &g.transpose()).scale(1.0 / d as f64).symmetrize()
}

/// PSD matrix of exact rank `rank` with eigenvalues uniform in `[0.5, 2]`.
pub fn psd_with_rank<R: Rng + ?Sized>(d: usize, rank: usize, rng: &mut R) -> Matrix {
    let mut spectrum: Vec<f64> = (0..d)
        .map(|i| {
            if i < rank {
                rng.random_range(0.5..2.0)
            } else {
                0.0
            }
        })
        .collect();
    spectrum.sort_by(|a, b| b.total_cmp(a));
    with_spectrum(&orthogonal(d, rng), &spectrum)
}

/// Positive definite matrix with eigenvalues log-uniform in `[1, cond]`.
pub fn pd<R: Rng + ?Sized>(d: usize, cond: f64, rng: &mut R) -> Matrix {
    let spectrum: Vec<f64> = if cond <= 1.0 {
        vec![1.0; d]
    } else {
        let span = cond.ln();
        (0..d)
            .map(|_| (rng.random_range(0.0..=1.0) * span).exp())
            .collect()
    };
    with_spectrum(&orthogonal(d, rng), &spectrum)
}

/// `10^u` with `u` uniform in `[-decades, decades]`.
pub fn heavy_scale<R: Rng + ?Sized>(decades: f64, rng: &mut R) -> f64 {
    10f64.powf(rng.random_range(-decades..=decades))
}

/// GEP whose generalized spectrum is exactly `spectrum` (in some order).
///
/// `B` has condition number at most `b_cond`; `A = B^{1/2} Q Λ Qᵀ B^{1/2}`
/// so that the whitened operator is `Q Λ Qᵀ`.
pub fn gep_with_spectrum<R: Rng + ?Sized>(
    spectrum: &[f64],
    b_cond: f64,
    rng: &mut R,
) -> Result<GepProblem> {
    let d = spectrum.len();
    let b = pd(d, b_cond, rng);
    let root = mat_pow_half(&b, HalfPower::Sqrt)?;
    let inner = with_spectrum(&orthogonal(d, rng), spectrum);
    let a = (&(&root * &inner) * &root).symmetrize();
    GepProblem::new(a, b)
}

/// Descending spectrum `λ_i = base + gap·(d − i)`, `i = 1..d`.
pub fn gapped_spectrum(d: usize, base: f64, gap: f64) -> Vec<f64> {
    (1..=d).map(|i| base + gap * (d - i) as f64).collect()
}

/// Spectrum of a generated `A`: an explicit list, or `gap:g` for
/// `λ_i = 1 + g·(d − i)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumSpec {
    Explicit(Vec<f64>),
    Gap(f64),
}

impl FromStr for SpectrumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(g) = s.strip_prefix("gap:") {
            let g: f64 = g
                .trim()
                .parse()
                .map_err(|_| Error::BadSpectrumSpec(format!("'{s}': gap is not a number")))?;
            if !(g.is_finite() && g >= 0.0) {
                return Err(Error::BadSpectrumSpec(format!(
                    "'{s}': gap must be finite and >= 0"
                )));
            }
            return Ok(SpectrumSpec::Gap(g));
        }
        let values = s
            .split(',')
            .map(|v| v.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<f64>, _>>()
            .map_err(|_| {
                Error::BadSpectrumSpec(format!(
                    "'{s}': expected 'gap:g' or comma-separated numbers"
                ))
            })?;
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::BadSpectrumSpec(format!(
                "'{s}': entries must be finite and >= 0"
            )));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadSpectrumSpec(format!(
                "'{s}': entries must be descending"
            )));
        }
        Ok(SpectrumSpec::Explicit(values))
    }
}

impl SpectrumSpec {
    /// The `d` eigenvalues, descending.
    pub fn resolve(&self, d: usize) -> Result<Vec<f64>> {
        match self {
            SpectrumSpec::Gap(g) => Ok(gapped_spectrum(d, 1.0, *g)),
            SpectrumSpec::Explicit(v) if v.len() == d => Ok(v.clone()),
            SpectrumSpec::Explicit(v) => Err(Error::BadSpectrumSpec(format!(
                "{} eigenvalues given for d = {d}",
                v.len()
            ))),
        }
    }
}

/// Positive definite with condition number exactly `cond`: eigenvalues `1`
/// and `cond` at the ends, log-uniform in between. `cond = 1` gives exactly `I`.
pub fn pd_with_condition<R: Rng + ?Sized>(d: usize, cond: f64, rng: &mut R) -> Result<Matrix> {
    if !(cond.is_finite() && cond >= 1.0) {
        return Err(Error::InvalidConfig(format!(
            "condition number must be finite and >= 1, got {cond}"
        )));
    }
    if cond == 1.0 {
        return Ok(Matrix::identity(d));
    }
    let span = cond.ln();
    let mut spectrum: Vec<f64> = (0..d)
        .map(|i| match i {
            0 => cond,
            i if i + 1 == d => 1.0,
            _ => (rng.random_range(0.0..=1.0) * span).exp(),
        })
        .collect();
    spectrum.sort_by(|a, b| b.total_cmp(a));
    Ok(with_spectrum(&orthogonal(d, rng), &spectrum))
}
