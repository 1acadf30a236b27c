//! Plain gradient ascent on `h`. No line search, no momentum, no projection:
//! the iterates are unconstrained and B-orthonormality emerges at the optimum.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gep::whiten;
use crate::linalg::{sym_eig, sym_eig_tol};
use crate::matrix::Matrix;
use crate::objective::Objective;
use crate::random::{seeded, uniform_matrix};

/// Step used by [`auto_step`] when `‖A‖_F = 0`.
pub const FALLBACK_STEP: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum StepSize {
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Schedule {
    Constant,
    /// `η_t = η / sqrt(t + 1)`
    InverseSqrt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AscentConfig {
    pub step_size: StepSize,
    /// Defaults to `50·d·k`.
    pub max_iters: Option<usize>,
    /// Frobenius-norm gradient tolerance; defaults to `1e-8·(1 + ‖A‖_max)`.
    pub grad_tol: Option<f64>,
    pub seed: u64,
    pub schedule: Schedule,
    /// Starting point; drawn with [`init_random`] when absent.
    pub init: Option<Matrix>,
}

impl Default for AscentConfig {
    fn default() -> Self {
        Self {
            step_size: StepSize::Auto,
            max_iters: None,
            grad_tol: None,
            seed: 0,
            schedule: Schedule::Constant,
            init: None,
        }
    }
}

impl AscentConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AscentResult {
    pub w: Matrix,
    /// `h` at every visited iterate, starting with the initial point.
    pub history: Vec<f64>,
    /// Number of gradient steps taken.
    pub iterations: usize,
    pub converged: bool,
    pub final_grad_norm: f64,
    pub step_size: f64,
}

impl AscentResult {
    pub fn terminal_h(&self) -> f64 {
        self.history
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// `0.1 / (‖A‖_F (1 + ‖B‖_F))`, or [`FALLBACK_STEP`] when `A = 0`.
pub fn auto_step(obj: &Objective) -> f64 {
    let a = obj.problem().a().norm_fro();
    let b = obj.problem().b().norm_fro();
    let eta = 0.1 / (a * (1.0 + b));
    if a > 0.0 && eta.is_finite() {
        eta
    } else {
        FALLBACK_STEP
    }
}

/// Uniform `[-1, 1]` entries, scaled down so that `‖WᵀBW‖_op ≤ 1`.
pub fn init_random(d: usize, k: usize, b: &Matrix, seed: u64) -> Result<Matrix> {
    if k == 0 || k > d {
        return Err(Error::BadK { k, d });
    }
    let w = uniform_matrix(d, k, &mut seeded(seed));
    let gram = w.t_mul(&(b * &w));
    // Gram matrices of this size are symmetric up to roundoff only.
    let top = sym_eig_tol(&gram, 1e-8)?.max();
    Ok(if top > 1.0 {
        w.scale(1.0 / top.sqrt())
    } else {
        w
    })
}

pub fn ascend(obj: &Objective, cfg: &AscentConfig) -> Result<AscentResult> {
    let (d, k) = (obj.dim(), obj.k());
    let base_step = match cfg.step_size {
        StepSize::Auto => auto_step(obj),
        StepSize::Fixed(eta) if eta > 0.0 && eta.is_finite() => eta,
        StepSize::Fixed(eta) => {
            return Err(Error::InvalidConfig(format!(
                "step size must be positive, got {eta}"
            )))
        }
    };
    let max_iters = cfg.max_iters.unwrap_or(50 * d * k).max(1);
    let grad_tol = cfg
        .grad_tol
        .unwrap_or(1e-8 * (1.0 + obj.problem().a().norm_max()));
    let mut w = match &cfg.init {
        Some(w0) => w0.clone(),
        None => init_random(d, k, obj.problem().b(), cfg.seed)?,
    };

    // Σ|λ| of the generalized spectrum is the nuclear norm of the whitened operator.
    let abs_sum: f64 = sym_eig(&whiten(obj.problem()).a_tilde)?
        .eigenvalues
        .iter()
        .map(|x| x.abs())
        .sum();
    let floor = -10.0 * abs_sum;

    let mut history = Vec::new();
    let mut best = (f64::NEG_INFINITY, w.clone(), f64::INFINITY);
    for t in 0..=max_iters {
        let (value, grad) = obj.h_value_and_gradient(&w)?;
        if !value.is_finite() || !grad.is_finite() || value < floor {
            return Err(Error::Diverged {
                iteration: t,
                value,
            });
        }
        history.push(value);
        let grad_norm = grad.norm_fro();
        if grad_norm <= grad_tol {
            return Ok(AscentResult {
                w,
                history,
                iterations: t,
                converged: true,
                final_grad_norm: grad_norm,
                step_size: base_step,
            });
        }
        if value > best.0 {
            best = (value, w.clone(), grad_norm);
        }
        if t == max_iters {
            break;
        }
        let eta = match cfg.schedule {
            Schedule::Constant => base_step,
            Schedule::InverseSqrt => base_step / ((t + 1) as f64).sqrt(),
        };
        w = &w + &grad.scale(eta);
    }
    let (_, w, final_grad_norm) = best;
    Ok(AscentResult {
        w,
        history,
        iterations: max_iters,
        converged: false,
        final_grad_norm,
        step_size: base_step,
    })
}
