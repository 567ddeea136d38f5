//! Catalog of totally symmetric sets and arrangements, each emitted with a
//! realization witness that checks out exactly.

mod partition;
mod simplex;
mod sporadic;
mod system;
mod tilde_sigma5;

pub use partition::{induction, partition_construction, permutation_type, standard, Weight};
pub use simplex::{
    dual_simplex_arrangement, ncsimplex, simplex_arrangement, simplex_construction, simplex_system,
    simplex_witness,
};
pub use sporadic::{sporadic4, sporadic_pq};
pub use system::{eigenspace_construction, DecompositionSystem};
pub use tilde_sigma5::{
    tilde_sigma5_arrangement, tilde_sigma5_construction, tilde_sigma5_rep, tilde_sigma5_system, transport,
    w1_complement, TildeSigma5Blocks,
};

use tss_core::TssError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("eigenvalue parameters must differ")]
    EqualEigenvalues,
    #[error("values must be pairwise distinct")]
    NotInjective,
    #[error("eigenvalues must be pairwise distinct")]
    DuplicateEigenvalue,
    #[error("input set carries no valid witness")]
    MissingWitness,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Tss(#[from] TssError),
}

/// Defaults used when no eigenvalue parameters are given.
pub mod defaults {
    use kfield::Scalar;

    pub fn lambda() -> Scalar {
        Scalar::from_i64(2)
    }

    pub fn nu() -> Scalar {
        Scalar::from_i64(1)
    }

    pub fn mu() -> Scalar {
        Scalar::from_i64(1)
    }
}
