//! Dense exact linear algebra over K = Q(i, √2, √3).
//!
//! Elimination always pivots on the first nonzero entry, and subspaces are
//! stored in a canonical reduced form, so equal subspaces compare equal.

mod algebra;
mod echelon;
mod equations;
mod matrix;
mod poly;
mod subspace;

pub use algebra::{algebra_closure, AlgebraClosure};
pub use echelon::{det, det_inverse, inverse, kernel, rank, rref, solve, Echelon, Solution};
pub use equations::{
    intertwiner_space, invertible_in_space, space_matrices, MatrixEquations, DEFAULT_SEED,
    RANDOM_TRIES, SWEEP_LIMIT,
};
pub use matrix::Matrix;
pub use poly::{char_poly, Polynomial};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    Singular,
    #[error("no invertible element found in the space")]
    NoneInvertible,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// `P · M · P⁻¹`. Panics if `p` is singular.
pub fn conjugate(p: &Matrix, m: &Matrix) -> Matrix {
    let inv = inverse(p).expect("conjugating matrix is invertible");
    &(p * m) * &inv
}
