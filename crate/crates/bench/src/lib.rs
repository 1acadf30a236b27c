//! Benchmark fixtures shared by the criterion targets.

use tracegep::random::{gapped_spectrum, gep_with_spectrum, seeded, symmetric};
use tracegep::{GepProblem, Matrix};

pub fn symmetric_instance(d: usize, seed: u64) -> Matrix {
    symmetric(d, &mut seeded(seed))
}

/// Instance with generalized spectrum `0.5 + 0.5·(d − i)` and `cond(B) ≤ 4`.
pub fn gapped_gep(d: usize, seed: u64) -> GepProblem {
    gep_with_spectrum(&gapped_spectrum(d, 0.5, 0.5), 4.0, &mut seeded(seed))
        .expect("generated instance is valid")
}
