//! Loading matrix files and attributing failures to the file they came from.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use thiserror::Error;
use tracegep::io::parse_matrix;
use tracegep::linalg::SYM_TOL;
use tracegep::{Error as CoreError, GepProblem, Matrix};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: CoreError },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{} and {}: {source}", a.display(), b.display())]
    Pair {
        a: PathBuf,
        b: PathBuf,
        source: CoreError,
    },

    #[error("{0}")]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn file(path: &Path, source: CoreError) -> Self {
        CliError::File {
            path: path.to_path_buf(),
            source,
        }
    }
}

pub fn read_matrix(path: &Path) -> Result<Matrix, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_matrix(&text).map_err(|e| CliError::file(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes `text` to `out` when given, otherwise to stdout.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_text(path, &format!("{text}\n")),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
                path: PathBuf::from("<stdout>"),
                source: e,
            }),
            _ => Ok(()),
        },
    }
}

/// Reads `(A, B)` and validates them as a GEP. `B` defaults to the identity.
///
/// Symmetry failures name the offending file; definiteness failures name the
/// `B` file; dimension mismatches name both.
pub fn read_problem(a_path: &Path, b_path: Option<&Path>) -> Result<GepProblem, CliError> {
    let a = read_matrix(a_path)?;
    if !a.is_square() {
        return Err(CliError::file(
            a_path,
            CoreError::ShapeMismatch(format!("A is {}x{}, expected square", a.rows(), a.cols())),
        ));
    }
    a.check_symmetric(SYM_TOL)
        .map_err(|e| CliError::file(a_path, e))?;
    let Some(b_path) = b_path else {
        let d = a.rows();
        return GepProblem::new(a, Matrix::identity(d)).map_err(|e| CliError::file(a_path, e));
    };
    let b = read_matrix(b_path)?;
    if b.shape() != a.shape() {
        return Err(CliError::Pair {
            a: a_path.to_path_buf(),
            b: b_path.to_path_buf(),
            source: CoreError::ShapeMismatch(format!(
                "A is {}x{}, B is {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )),
        });
    }
    GepProblem::new(a, b).map_err(|e| CliError::file(b_path, e))
}
