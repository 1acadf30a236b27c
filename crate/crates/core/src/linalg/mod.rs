//! Self-contained dense kernels: Jacobi eigensolver, one-sided Jacobi SVD,
//! symmetric matrix square roots and principal angles.

mod angles;
mod eig;
mod power;
mod svd;

pub use angles::{max_principal_angle, orthonormal_basis, principal_angles, RANK_TOL};
pub use eig::{sym_eig, sym_eig_tol, SymEig, MAX_SWEEPS, OFF_DIAGONAL_TOL, SYM_TOL};
pub use power::{mat_pow_half, HalfPower, PD_TOL};
pub use svd::{singular_values, svd, Svd};
