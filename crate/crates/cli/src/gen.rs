use std::path::PathBuf;

use clap::Args;
use serde::Serialize;
use tracegep::io::format_matrix;
use tracegep::random::{orthogonal, pd_with_condition, seeded, with_spectrum, SpectrumSpec};
use tracegep::{solve_dense, Error, GepProblem};

use crate::input::{emit, write_text, CliError};
use crate::json;

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Dimension.
    #[arg(long)]
    pub d: usize,
    /// Subspace size; adds the top-k sum and gap to the report.
    #[arg(long)]
    pub k: Option<usize>,
    /// Eigenvalues of A: "3,2,1" (descending, nonnegative) or "gap:g".
    #[arg(long)]
    pub spectrum: String,
    /// Condition number of B; 1 writes the identity.
    #[arg(long, default_value_t = 1.0)]
    pub b_cond: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path for A.
    #[arg(long)]
    pub a: PathBuf,
    /// Output path for B.
    #[arg(long)]
    pub b: PathBuf,
    /// Write the JSON summary here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct GenReport {
    d: usize,
    k: Option<usize>,
    seed: u64,
    spectrum: Vec<f64>,
    b_cond: f64,
    a: String,
    b: String,
    generalized_eigenvalues: Vec<f64>,
    top_sum: Option<f64>,
    gap: Option<f64>,
}

pub fn run(args: &GenArgs) -> Result<(), CliError> {
    if args.d == 0 {
        return Err(Error::InvalidConfig("d must be at least 1".into()).into());
    }
    if let Some(k) = args.k {
        if k == 0 || k > args.d {
            return Err(Error::BadK { k, d: args.d }.into());
        }
    }
    let spectrum = args.spectrum.parse::<SpectrumSpec>()?.resolve(args.d)?;
    let mut rng = seeded(args.seed);
    let a = with_spectrum(&orthogonal(args.d, &mut rng), &spectrum);
    let b = pd_with_condition(args.d, args.b_cond, &mut rng)?;
    write_text(&args.a, &format_matrix(&a))?;
    write_text(&args.b, &format_matrix(&b))?;

    let sol = solve_dense(&GepProblem::new(a, b)?)?;
    let report = GenReport {
        d: args.d,
        k: args.k,
        seed: args.seed,
        spectrum,
        b_cond: args.b_cond,
        a: args.a.display().to_string(),
        b: args.b.display().to_string(),
        top_sum: args.k.map(|k| sol.top_sum(k)),
        gap: args.k.and_then(|k| sol.gap_at(k)),
        generalized_eigenvalues: sol.eigenvalues,
    };
    emit(args.out.as_deref(), &json::to_string(&report))
}
