//! Finite truncations of the Λ-action on K: orbits of the mod-p action,
//! invariant functions, the Fourier isomorphism and the projections e_n, f_N.

mod domain;
mod fixed;
mod fourier;
mod orbits;
mod projection;

pub use domain::{ProductDomain, DEFAULT_SIZE_GUARD};
pub use fixed::{fixed_point_dimension, SparseEchelon};
pub use fourier::{
    check_intertwiner, fourier, fourier_dense, inverse_fourier, sigma, untwisted_deviation,
    FiniteFunction,
};
pub use orbits::{diagonal_orbits, OrbitBlock, OrbitPartition};
pub use projection::{
    deviation_bound_check, deviation_bound_check_exact, epsilon, projection_en, tail_trace,
    AtomSpace, DeviationCheck, TailTrace,
};
