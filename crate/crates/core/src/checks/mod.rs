//! Numerical verification of the trace inequalities and their equality cases.
//!
//! Every checker returns a list of [`CheckReport`]s. The first entry is the
//! headline inequality; further entries verify what an equality verdict implies
//! (eigenvector propagation, shared frames, subspace identification).

mod perspective;
mod report;
mod spectral;
mod suite;
mod trace;

pub use perspective::{perspective_check, IDENTITY_TOL};
pub use report::{all_hold, CheckReport, EqualityCase, Witness, EQ_TOL, INEQ_TOL};
pub use spectral::{
    constrained_bound, haemers_interlace, rayleigh_bounds, Containment, EIGVEC_TOL, FRAME_TOL,
    HYPOTHESIS_TOL, SUBSPACE_TOL, TOP_FRAME_TOL,
};
pub use suite::{random_trial, Suite};
pub use trace::{
    check_m_spectrum, m_matrix, m_spectrum, m_spectrum_formula, psd_svd_is_eig, psd_von_neumann,
    von_neumann, von_neumann_chain, MIXING_SWEEP,
};
