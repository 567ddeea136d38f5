//! Totally symmetric sets of matrices and of subspaces, with exact
//! verification of their realization witnesses.

mod arrangement;
pub mod perm;
mod tss;

pub use arrangement::{
    arrangement_isomorphism, dual_arrangement, half_dim_normal_form, reduce_arrangement, stabilizer_dimension,
    suspension, verify_arrangement, Arrangement, NormalForm, Stabilizer,
};
pub use tss::{
    involution_checks, is_commutative, isomorphic, realize_permutation, restriction_quotient, verify_tss, Certificate,
    InvolutionReport, RealizationWitness, Tss, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TssError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no isomorphism found")]
    NotIsomorphic,
    #[error("subspace is not invariant under the set and its witness")]
    NotInvariant,
    #[error("planes {0} and {1} are not complementary")]
    NotComplementary(usize, usize),
    #[error("arrangement has no valid strong witness")]
    NoStrongWitness,
    #[error("element {0} is singular")]
    Singular(usize),
    #[error("witness does not realize transposition {0}")]
    BadWitness(usize),
}
