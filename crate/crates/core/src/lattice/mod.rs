//! Exact integer-matrix algebra and finite abelian group arithmetic.
//!
//! The character group of an elliptic torus is the cokernel of an integer
//! matrix; everything here is exact, with [`IntMatrix`] backed by
//! arbitrary-precision integers.

mod group;
mod matrix;
mod small;
mod snf;

pub use group::{cokernel, induce_endomorphism, AbHom, Cokernel, Element, FinAbGroup};
pub use matrix::IntMatrix;
pub use small::SquareMat;
pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("matrix is singular; the quotient lattice is infinite")]
    SingularMatrix,
    #[error("map does not preserve the relation lattice")]
    DoesNotDescend,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("invalid invariant factors {0:?}")]
    BadInvariantFactors(Vec<i64>),
    #[error("homomorphism is not well defined")]
    IllDefinedHom,
    #[error("invariant factor does not fit in 64 bits")]
    GroupTooLarge,
}
