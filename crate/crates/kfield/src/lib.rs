//! Exact arithmetic in the degree-8 number field K = Q(i, √2, √3).
//!
//! Elements are stored as eight reduced rational coordinates over the fixed
//! basis `(1, √2, √3, √6, i, i√2, i√3, i√6)`.
//!
//! ```
//! use kfield::Scalar;
//!
//! let z = Scalar::zeta();
//! assert_eq!(&z * &z.conj(), Scalar::one());
//! assert_eq!(Scalar::sqrt2() * Scalar::sqrt3(), Scalar::sqrt6());
//! ```

mod constants;
mod ops;
mod parse;
mod scalar;
mod serde_impl;

pub use constants::{alpha_sporadic, constants, mu_sporadic};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use scalar::{Scalar, BASIS_LABELS, FIELD_BASIS};

/// Rational numbers in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    ZeroDivision,
    #[error("square root not representable in K: {0}")]
    NotRepresentable(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}
