use std::path::{Path, PathBuf};

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;
use tracegep::checks::{
    all_hold, constrained_bound, haemers_interlace, perspective_check, psd_svd_is_eig,
    psd_von_neumann, random_trial, rayleigh_bounds, von_neumann, Containment, EqualityCase,
};
use tracegep::linalg::SYM_TOL;
use tracegep::{sym_eig, CheckReport, Error, GepProblem, Matrix, Suite};

use crate::input::{emit, read_matrix, read_problem, CliError};
use crate::json;

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// rayleigh, haemers, constrained, vonneumann, psd-vn, svd-eig, perspective or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Number of seeded random trials per suite.
    #[arg(long)]
    pub random: Option<usize>,
    /// Base seed; trial `t` uses `seed + t`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// First input matrix (A, X or Λ depending on the suite).
    #[arg(long)]
    pub a: Option<PathBuf>,
    /// Second input matrix (B, Y or M depending on the suite).
    #[arg(long)]
    pub b: Option<PathBuf>,
    /// Frame or vector input (W, S or u depending on the suite).
    #[arg(long)]
    pub w: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct SuiteSummary {
    suite: &'static str,
    trials: usize,
    reports: usize,
    held: usize,
    failed: usize,
    equalities: usize,
    errors: usize,
}

#[derive(Debug, Serialize)]
struct Failure {
    suite: &'static str,
    trial: usize,
    seed: u64,
    report: CheckReport,
}

#[derive(Debug, Serialize)]
struct TrialError {
    suite: &'static str,
    trial: usize,
    seed: u64,
    message: String,
}

#[derive(Debug, Serialize)]
struct RandomReport {
    suite: &'static str,
    seed: u64,
    trials: usize,
    all_hold: bool,
    summary: Vec<SuiteSummary>,
    failures: Vec<Failure>,
    errors: Vec<TrialError>,
}

#[derive(Debug, Serialize)]
struct Inputs {
    a: Option<String>,
    b: Option<String>,
    w: Option<String>,
}

#[derive(Debug, Serialize)]
struct FileReport {
    suite: &'static str,
    inputs: Inputs,
    all_hold: bool,
    reports: Vec<CheckReport>,
}

/// Returns whether every check held.
pub fn run(args: &CheckArgs) -> Result<bool, CliError> {
    let suite: Suite = args.suite.parse()?;
    match args.random {
        Some(n) => {
            if args.a.is_some() || args.b.is_some() || args.w.is_some() {
                return Err(Error::InvalidConfig(
                    "--random cannot be combined with input files".into(),
                )
                .into());
            }
            let report = run_random(suite, n, args.seed);
            emit(args.out.as_deref(), &json::to_string(&report))?;
            Ok(report.all_hold)
        }
        None => {
            let reports = run_files(suite, args)?;
            let report = FileReport {
                suite: suite.name(),
                inputs: Inputs {
                    a: args.a.as_ref().map(|p| p.display().to_string()),
                    b: args.b.as_ref().map(|p| p.display().to_string()),
                    w: args.w.as_ref().map(|p| p.display().to_string()),
                },
                all_hold: all_hold(&reports),
                reports,
            };
            emit(args.out.as_deref(), &json::to_string(&report))?;
            Ok(report.all_hold)
        }
    }
}

fn run_random(suite: Suite, trials: usize, seed: u64) -> RandomReport {
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    let mut errors = Vec::new();
    for member in suite.expand() {
        let outcomes: Vec<_> = (0..trials)
            .into_par_iter()
            .map(|t| random_trial(member, seed.wrapping_add(t as u64)))
            .collect();
        let mut s = SuiteSummary {
            suite: member.name(),
            trials,
            reports: 0,
            held: 0,
            failed: 0,
            equalities: 0,
            errors: 0,
        };
        for (t, outcome) in outcomes.into_iter().enumerate() {
            let trial_seed = seed.wrapping_add(t as u64);
            match outcome {
                Ok(reports) => {
                    for r in reports {
                        s.reports += 1;
                        if r.equality_case == EqualityCase::Equality {
                            s.equalities += 1;
                        }
                        if r.holds {
                            s.held += 1;
                        } else {
                            s.failed += 1;
                            failures.push(Failure {
                                suite: member.name(),
                                trial: t,
                                seed: trial_seed,
                                report: r,
                            });
                        }
                    }
                }
                Err(e) => {
                    s.errors += 1;
                    errors.push(TrialError {
                        suite: member.name(),
                        trial: t,
                        seed: trial_seed,
                        message: e.to_string(),
                    });
                }
            }
        }
        summary.push(s);
    }
    RandomReport {
        suite: suite.name(),
        seed,
        trials,
        all_hold: failures.is_empty() && errors.is_empty(),
        summary,
        failures,
        errors,
    }
}

fn require<'a>(path: &'a Option<PathBuf>, flag: &str, suite: Suite) -> Result<&'a Path, CliError> {
    path.as_deref().ok_or_else(|| {
        Error::InvalidConfig(format!("suite {suite} needs --{flag} (or use --random N)")).into()
    })
}

fn symmetric_file(path: &Path) -> Result<Matrix, CliError> {
    let m = read_matrix(path)?;
    m.check_symmetric(SYM_TOL)
        .map_err(|e| CliError::file(path, e))?;
    Ok(m)
}

/// Attributes a checker failure to `path`.
fn on(path: &Path) -> impl Fn(Error) -> CliError + '_ {
    move |e| CliError::file(path, e)
}

fn run_files(suite: Suite, args: &CheckArgs) -> Result<Vec<CheckReport>, CliError> {
    match suite {
        Suite::All => Err(Error::InvalidConfig(
            "suite all runs on random instances only; pass --random N or pick a suite".into(),
        )
        .into()),
        Suite::Rayleigh => {
            let a_path = require(&args.a, "a", suite)?;
            let w_path = require(&args.w, "w", suite)?;
            let a = symmetric_file(a_path)?;
            let w = read_matrix(w_path)?;
            if w.cols() != 1 {
                return Err(CliError::file(
                    w_path,
                    Error::ShapeMismatch(format!("expected a single column, got {}", w.cols())),
                ));
            }
            let eig = sym_eig(&a).map_err(on(a_path))?;
            let u = w.column(0);
            // Every index whose containment hypothesis u satisfies.
            let mut reports = Vec::new();
            for i in 1..=eig.dim() {
                for hypothesis in [Containment::InSpan, Containment::Orthogonal] {
                    match rayleigh_bounds(&eig, &u, i, hypothesis) {
                        Ok(r) => reports.extend(r),
                        Err(Error::HypothesisViolated { .. }) => {}
                        Err(e) => return Err(CliError::file(w_path, e)),
                    }
                }
            }
            Ok(reports)
        }
        Suite::Haemers => {
            let a_path = require(&args.a, "a", suite)?;
            let w_path = require(&args.w, "w", suite)?;
            let a = symmetric_file(a_path)?;
            haemers_interlace(&a, &read_matrix(w_path)?).map_err(on(w_path))
        }
        Suite::Constrained => {
            let a_path = require(&args.a, "a", suite)?;
            let w_path = require(&args.w, "w", suite)?;
            let p: GepProblem = read_problem(a_path, args.b.as_deref())?;
            let w = read_matrix(w_path)?;
            constrained_bound(&p, &w, w.cols()).map_err(on(w_path))
        }
        Suite::VonNeumann => {
            let x_path = require(&args.a, "a", suite)?;
            let y_path = require(&args.b, "b", suite)?;
            let x = read_matrix(x_path)?;
            von_neumann(&x, &read_matrix(y_path)?).map_err(on(y_path))
        }
        Suite::PsdVonNeumann => {
            let a_path = require(&args.a, "a", suite)?;
            let m_path = require(&args.b, "b", suite)?;
            let a = symmetric_file(a_path)?;
            let m = symmetric_file(m_path)?;
            psd_von_neumann(&a, &m).map_err(on(a_path))
        }
        Suite::SvdEig => {
            let a_path = require(&args.a, "a", suite)?;
            psd_svd_is_eig(&symmetric_file(a_path)?).map_err(on(a_path))
        }
        Suite::Perspective => {
            let l_path = require(&args.a, "a", suite)?;
            let m_path = require(&args.b, "b", suite)?;
            let lambda = read_matrix(l_path)?;
            perspective_check(&lambda, &symmetric_file(m_path)?).map_err(|e| match e {
                Error::BadLambda(_) => CliError::file(l_path, e),
                e => CliError::file(m_path, e),
            })
        }
    }
}
