//! Generalized eigenproblems through the unconstrained trace objective
//! `h(W; A, B) = trace(WᵀAW (2I − WᵀBW))`.
//!
//! * [`linalg`]: Jacobi eigensolver, one-sided Jacobi SVD, matrix square roots,
//!   principal angles. The dense oracle for everything else.
//! * [`gep`]: validated `(A, B)` pairs, whitening, and the dense solution.
//! * [`objective`]: `h`, its gradient, the perspective functional and
//!   B-orthonormalization.
//! * [`ascent`]: gradient ascent on `h`.
//! * [`checks`]: numerical verification of the trace inequalities.

pub mod ascent;
pub mod checks;
pub mod error;
pub mod gep;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod objective;
pub mod random;

pub use ascent::{ascend, auto_step, init_random, AscentConfig, AscentResult, Schedule, StepSize};
pub use checks::{CheckReport, EqualityCase, Suite};
pub use error::{Error, Result};
pub use gep::{solve_dense, top_k, whiten, GepProblem, GepSolution, TopK, Whitened};
pub use linalg::{mat_pow_half, principal_angles, svd, sym_eig, HalfPower, Svd, SymEig};
pub use matrix::Matrix;
pub use objective::{b_orthonormalize, perspective_value, Objective};
