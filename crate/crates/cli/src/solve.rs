use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use serde::Serialize;
use tracegep::checks::constrained_bound;
use tracegep::{
    ascend, b_orthonormalize, principal_angles, solve_dense, top_k, AscentConfig, CheckReport,
    Error, Matrix, Objective, Schedule, StepSize,
};

use crate::input::{emit, read_problem, CliError};
use crate::json;

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScheduleArg {
    Constant,
    InverseSqrt,
}

impl From<ScheduleArg> for Schedule {
    fn from(s: ScheduleArg) -> Self {
        match s {
            ScheduleArg::Constant => Schedule::Constant,
            ScheduleArg::InverseSqrt => Schedule::InverseSqrt,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub a: PathBuf,
    /// Defaults to the identity.
    #[arg(long)]
    pub b: Option<PathBuf>,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// "auto" or a positive number.
    #[arg(long, default_value = "auto")]
    pub step: String,
    #[arg(long)]
    pub max_iters: Option<usize>,
    #[arg(long)]
    pub grad_tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = ScheduleArg::Constant)]
    pub schedule: ScheduleArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct SpectrumSummary {
    lambda_max: f64,
    lambda_min: f64,
    top_sum: f64,
    gap: Option<f64>,
    unique: bool,
}

#[derive(Debug, Serialize)]
struct Instance {
    a: String,
    b: Option<String>,
    d: usize,
    k: usize,
    seed: u64,
    spectrum: SpectrumSummary,
}

#[derive(Debug, Serialize)]
struct OptimizerSummary {
    terminal_h: f64,
    oracle_sum: f64,
    gap_to_oracle: f64,
    principal_angles: Option<Vec<f64>>,
    b_orthonormality_error: f64,
    iterations: usize,
    converged: bool,
    final_grad_norm: f64,
    step_size: f64,
    wall_time_s: f64,
}

#[derive(Debug, Serialize)]
struct RunReport {
    instance: Instance,
    oracle_eigenvalues: Vec<f64>,
    optimizer: OptimizerSummary,
    checks: Vec<CheckReport>,
}

pub fn parse_step(s: &str) -> Result<StepSize, Error> {
    if s == "auto" {
        return Ok(StepSize::Auto);
    }
    match s.parse::<f64>() {
        Ok(eta) if eta > 0.0 && eta.is_finite() => Ok(StepSize::Fixed(eta)),
        _ => Err(Error::InvalidConfig(format!(
            "--step must be 'auto' or a positive number, got '{s}'"
        ))),
    }
}

/// Returns whether the ascent converged.
pub fn run(args: &SolveArgs) -> Result<bool, CliError> {
    let step_size = parse_step(&args.step)?;
    if let Some(tol) = args.grad_tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(
                Error::InvalidConfig(format!("--grad-tol must be positive, got {tol}")).into(),
            );
        }
    }
    if args.max_iters == Some(0) {
        return Err(Error::InvalidConfig("--max-iters must be at least 1".into()).into());
    }
    let problem = read_problem(&args.a, args.b.as_deref())?;
    let sol = solve_dense(&problem)?;
    let oracle = top_k(&sol, args.k)?;
    let objective = Objective::new(problem, args.k)?;
    let cfg = AscentConfig {
        step_size,
        max_iters: args.max_iters,
        grad_tol: args.grad_tol,
        seed: args.seed,
        schedule: args.schedule.into(),
        init: None,
    };

    let start = Instant::now();
    let result = ascend(&objective, &cfg)?;
    let wall_time_s = start.elapsed().as_secs_f64();

    let p = objective.problem();
    let oracle_sum = sol.top_sum(args.k);
    let terminal_h = result.terminal_h();
    let gram = result.w.t_mul(&(p.b() * &result.w));
    let mut checks = vec![CheckReport::inequality(
        "unconstrained.terminal-h",
        terminal_h,
        oracle_sum,
        sol.abs_sum(),
    )];
    if let Ok(normalized) = b_orthonormalize(p.b(), &result.w) {
        checks.extend(constrained_bound(p, &normalized, args.k)?);
    }

    let report = RunReport {
        instance: Instance {
            a: args.a.display().to_string(),
            b: args.b.as_ref().map(|b| b.display().to_string()),
            d: sol.dim(),
            k: args.k,
            seed: args.seed,
            spectrum: SpectrumSummary {
                lambda_max: sol.eigenvalues[0],
                lambda_min: sol.eigenvalues[sol.dim() - 1],
                top_sum: oracle_sum,
                gap: oracle.gap,
                unique: oracle.unique,
            },
        },
        optimizer: OptimizerSummary {
            terminal_h,
            oracle_sum,
            gap_to_oracle: oracle_sum - terminal_h,
            principal_angles: principal_angles(&result.w, &oracle.basis).ok(),
            b_orthonormality_error: gram.max_abs_diff(&Matrix::identity(args.k)),
            iterations: result.iterations,
            converged: result.converged,
            final_grad_norm: result.final_grad_norm,
            step_size: result.step_size,
            wall_time_s,
        },
        oracle_eigenvalues: sol.eigenvalues,
        checks,
    };
    emit(args.out.as_deref(), &json::to_string(&report))?;
    Ok(result.converged)
}
