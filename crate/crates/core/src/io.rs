//! Plain-text matrix files.
//!
//! ```text
//! # optional comments
//! 2 3
//! 1 2 3
//! 4 5 6
//! ```
//!
//! The first non-comment line gives `rows cols`; each following line holds one
//! row of whitespace-separated decimals. Everything after `#` is ignored.
//! [`format_matrix`] writes 17 significant digits so files round-trip exactly.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty file, expected a 'rows cols' header".into(),
    })?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let parse_dim = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line: header_line,
            message: format!("invalid dimension '{s}'"),
        })
    };
    if dims.len() != 2 {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header must be 'rows cols', got '{header}'"),
        });
    }
    let (rows, cols) = (parse_dim(dims[0])?, parse_dim(dims[1])?);

    let mut data = Vec::with_capacity(rows * cols);
    let mut last_line = header_line;
    for r in 0..rows {
        let (line, content) = lines.next().ok_or(Error::Parse {
            line: last_line,
            message: format!("expected {rows} rows, found {r}"),
        })?;
        last_line = line;
        let values: Vec<&str> = content.split_whitespace().collect();
        if values.len() != cols {
            return Err(Error::Parse {
                line,
                message: format!("expected {cols} values, found {}", values.len()),
            });
        }
        for v in values {
            let x: f64 = v.parse().map_err(|_| Error::Parse {
                line,
                message: format!("invalid number '{v}'"),
            })?;
            if !x.is_finite() {
                return Err(Error::Parse {
                    line,
                    message: format!("non-finite value '{v}'"),
                });
            }
            data.push(x);
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected content after {rows} rows"),
        });
    }
    Matrix::new(rows, cols, data)
}

pub fn format_matrix(m: &Matrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:.16e}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
