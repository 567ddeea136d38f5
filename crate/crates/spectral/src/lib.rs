//! Eigenspace filtrations, depth profiles, classification of commutative
//! totally symmetric sets and irreducibility certificates.

mod classify;
mod discover;
mod eigen;
mod report;
pub mod suites;

pub use classify::{
    classify_commutative, irreducibility_certificate, restrict, ClassVerdict, ClassificationResult, Irreducibility,
};
pub use discover::{default_pool, discover_eigenvalues, Eigenvalues};
pub use eigen::{
    depth_profile, filtration, generalized_eigenspace, jfold, pfold_decomposition_is_direct, DepthProfile,
    EigenFiltration, CROSS_CHECK_MAX_K,
};
pub use report::{Check, Report};
pub use suites::{appendix_nonexistence_suite, rep_obstruction_suite};

use kfield::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error("{0} is not an eigenvalue of any element")]
    NotAnEigenvalue(Scalar),
    #[error("the set is not commutative")]
    NotCommutative,
}
