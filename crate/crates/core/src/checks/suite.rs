//! Seeded random trials for each checker family.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::perspective::perspective_check;
use super::report::CheckReport;
use super::spectral::{constrained_bound, haemers_interlace, rayleigh_bounds, Containment};
use super::trace::{
    check_m_spectrum, psd_svd_is_eig, psd_von_neumann, von_neumann, von_neumann_chain,
};
use crate::error::{Error, Result};
use crate::gep::{solve_dense, top_k, GepProblem};
use crate::linalg::sym_eig;
use crate::matrix::Matrix;
use crate::objective::{b_orthonormalize, perspective_radius};
use crate::random::{
    gaussian_matrix, heavy_scale, orthogonal, orthonormal_columns, pd, psd, psd_with_rank, seeded,
    symmetric, uniform_matrix, with_spectrum, InstanceRng,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Rayleigh,
    Haemers,
    Constrained,
    VonNeumann,
    PsdVonNeumann,
    SvdEig,
    Perspective,
    All,
}

impl Suite {
    pub const MEMBERS: [Suite; 7] = [
        Suite::Rayleigh,
        Suite::Haemers,
        Suite::Constrained,
        Suite::VonNeumann,
        Suite::PsdVonNeumann,
        Suite::SvdEig,
        Suite::Perspective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rayleigh => "rayleigh",
            Suite::Haemers => "haemers",
            Suite::Constrained => "constrained",
            Suite::VonNeumann => "vonneumann",
            Suite::PsdVonNeumann => "psd-vn",
            Suite::SvdEig => "svd-eig",
            Suite::Perspective => "perspective",
            Suite::All => "all",
        }
    }

    /// The concrete suites this selector expands to.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::MEMBERS.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::MEMBERS
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown suite '{s}'")))
    }
}

/// Runs one randomized trial of `suite` with its own RNG seeded by `seed`.
///
/// Each trial mixes generic instances (strict inequality expected) with
/// constructed equality witnesses, so both verdict directions are exercised.
pub fn random_trial(suite: Suite, seed: u64) -> Result<Vec<CheckReport>> {
    let mut rng = seeded(seed);
    match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::MEMBERS {
                out.extend(random_trial(s, seed)?);
            }
            Ok(out)
        }
        Suite::Rayleigh => rayleigh_trial(&mut rng),
        Suite::Haemers => haemers_trial(&mut rng),
        Suite::Constrained => constrained_trial(&mut rng),
        Suite::VonNeumann => von_neumann_trial(&mut rng),
        Suite::PsdVonNeumann => psd_vn_trial(&mut rng),
        Suite::SvdEig => svd_eig_trial(&mut rng),
        Suite::Perspective => perspective_trial(&mut rng),
    }
}

fn combine(basis: &Matrix, cols: std::ops::Range<usize>, rng: &mut InstanceRng) -> Vec<f64> {
    let sub = basis.columns(cols.start, cols.end);
    let c = gaussian_matrix(sub.cols(), 1, rng);
    (&sub * &c).column(0)
}

fn rayleigh_trial(rng: &mut InstanceRng) -> Result<Vec<CheckReport>> {
    let d = rng.random_range(2..=8);
    let a = symmetric(d, rng).scale(heavy_scale(3.0, rng));
    let eig = sym_eig(&a)?;
    let i = rng.random_range(1..=d);
    let u = &eig.eigenvectors;
    let mut out = rayleigh_bounds(&eig, &combine(u, 0..i, rng), i, Containment::InSpan)?;
    out.extend(rayleigh_bounds(
        &eig,
        &combine(u, i - 1..d, rng),
        i,
        Containment::Orthogonal,
    )?);
    out.extend(rayleigh_bounds(
        &eig,
        &eig.vector(i - 1),
        i,
        Containment::InSpan,
    )?);
    Ok(out)
}

fn haemers_trial(rng: &mut InstanceRng) -> Result<Vec<CheckReport>> {
    let d = rng.random_range(2..=9);
    let k = rng.random_range(1..=d);
    let a = symmetric(d, rng).scale(heavy_scale(3.0, rng));
    let mut out = haemers_interlace(&a, &orthonormal_columns(d, k, rng))?;
    let top = &sym_eig(&a)?.eigenvectors.columns(0, k) * &orthogonal(k, rng);
    out.extend(haemers_interlace(&a, &top)?);
    Ok(out)
}

fn constrained_trial(rng: &mut InstanceRng) -> Result<Vec<CheckReport>> {
    let d = rng.random_range(2..=10);
    let k = rng.random_range(1..=d);
    let p = GepProblem::new(symmetric(d, rng), pd(d, 10.0, rng))?;
    let w = b_orthonormalize(p.b(), &gaussian_matrix(d, k, rng))?;
    let mut out = constrained_bound(&p, &w, k)?;
    let sol = solve_dense(&p)?;
    let top = &top_k(&sol, k)?.basis * &orthogonal(k, rng);
    out.extend(constrained_bound(&p, &top, k)?);
    Ok(out)
}

/// `X = U diag(sx) Vᵀ`, `Y = U diag(sy) Vᵀ` with both spectra descending.
pub(crate) fn shared_frame_pair(
    rows: usize,
    cols: usize,
    rng: &mut InstanceRng,
) -> (Matrix, Matrix) {
    let q = rows.min(cols);
    let u = orthonormal_columns(rows, q, rng);
    let v = orthonormal_columns(cols, q, rng);
    let mut draw = || {
        let mut s: Vec<f64> = (0..q).map(|_| rng.random_range(0.0..3.0)).collect();
        s.sort_by(|a, b| b.total_cmp(a));
        s
    };
    let (sx, sy) = (draw(), draw());
    let build = |s: &[f64]| {
        let scaled = Matrix::from_fn(rows, q, |i, j| u[(i, j)] * s[j]);
        &scaled * &v.transpose()
    };
    (build(&sx), build(&sy))
}

fn von_neumann_trial(rng: &mut InstanceRng) -> Result<Vec<CheckReport>> {
    let rows = rng.random_range(1..=6);
    let cols = rng.random_range(1..=6);
    let x = gaussian_matrix(rows, cols, rng).scale(heavy_scale(3.0, rng));
    let y = gaussian_matrix(rows, cols, rng).scale(heavy_scale(3.0, rng));
    let mut out = von_neumann(&x, &y)?;
    let (sx, sy) = shared_frame_pair(rows, cols, rng);
    out.extend(von_neumann(&sx, &sy)?);
    Ok(out)
}

fn psd_vn_trial(rng: &mut InstanceRng) -> Result<Vec<CheckReport>> {
    let d = rng.random_range(1..=7);
    let a = psd(d, rng).scale(heavy_scale(3.0, rng));
    let m = symmetric(d, rng).scale(heavy_scale(3.0, rng));
    let mut out = psd_von_neumann(&a, &m)?;

    let q = orthogonal(d, rng);
    let mut la: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..3.0)).collect();
    let mut lm: Vec<f64> = (0..d).map(|_| rng.random_range(-3.0..3.0)).collect();
    la.sort_by(|a, b| b.total_cmp(a));
    lm.sort_by(|a, b| b.total_cmp(a));
    out.extend(psd_von_neumann(
        &with_spectrum(&q, &la),
        &with_spectrum(&q, &lm),
    )?);

    let k = rng.random_range(1..=d);
    let w = uniform_matrix(d, k, rng);
    out.extend(von_neumann_chain(&a, &w)?);
    out.extend(check_m_spectrum(&w)?);
    Ok(out)
}

fn svd_eig_trial(rng: &mut InstanceRng) -> Result<Vec<CheckReport>> {
    let d = rng.random_range(1..=7);
    let rank = rng.random_range(0..=d);
    let mut out = psd_svd_is_eig(&psd(d, rng))?;
    out.extend(psd_svd_is_eig(&psd_with_rank(d, rank, rng))?);
    Ok(out)
}

fn perspective_trial(rng: &mut InstanceRng) -> Result<Vec<CheckReport>> {
    let p = rng.random_range(1..=5);
    let diag: Vec<f64> = (0..p).map(|_| rng.random_range(0.1..10.0)).collect();
    let lambda = Matrix::from_diag(&diag);
    let radius = perspective_radius(&lambda)?;

    let generic = psd(p, rng).scale(heavy_scale(2.0, rng));
    let mut out = perspective_check(&lambda, &generic)?;

    let q = orthogonal(p, rng);
    let mut spectrum: Vec<f64> = (0..p).map(|_| rng.random_range(0.0..radius)).collect();
    spectrum[0] = radius * rng.random_range(1.0..3.0);
    out.extend(perspective_check(&lambda, &with_spectrum(&q, &spectrum))?);

    // Eigenvalues between 5e-3 and 0.32 away from one.
    let eps = 10f64.powf(rng.random_range(-2.0..-0.5));
    let near: Vec<f64> = (0..p)
        .map(|_| {
            let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            1.0 + sign * eps * rng.random_range(0.5..1.0)
        })
        .collect();
    out.extend(perspective_check(&lambda, &with_spectrum(&q, &near))?);

    out.extend(perspective_check(&lambda, &Matrix::identity(p))?);
    Ok(out)
}
