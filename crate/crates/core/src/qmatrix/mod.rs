//! The quantum matrix algebra `O_q(M_mn)` in PBW normal form: rewriting,
//! multiplication, quantum minors and determinant, the transpose and
//! minor-complement (anti-)morphisms, and the column coaction.
//!
//! Generators `X[i,j]` satisfy, for `i < k` and `j < l`:
//!
//! ```text
//! X[i,j] X[i,l] = q X[i,l] X[i,j]
//! X[i,j] X[k,j] = q X[k,j] X[i,j]
//! X[i,l] X[k,j] = X[k,j] X[i,l]
//! X[i,j] X[k,l] - X[k,l] X[i,j] = (q - q^-1) X[i,l] X[k,j]
//! ```
//!
//! and the PBW basis consists of products of generators in lexicographic
//! order of `(row, col)`.

mod elem;
pub mod minor;
pub mod morph;
mod pbw;
pub mod tensor;

pub use elem::MatAlgElem;
pub use minor::{quantum_determinant, quantum_minor};
pub use morph::{gamma, gamma_tau, tau, tau_preserves_relations};
pub use pbw::{GenIndex, PbwMonomial, ReductionStrategy, Word};
pub use tensor::{lambda_coaction, TensorElem};

use std::fmt;

use thiserror::Error;

/// The shape `(rows, cols)` of the ambient quantum matrix algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ambient {
    pub rows: u16,
    pub cols: u16,
}

impl Ambient {
    pub fn new(rows: u16, cols: u16) -> Self {
        Ambient { rows, cols }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rows, self.cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QMatrixError {
    #[error("generator X[{row},{col}] out of bounds for ambient {ambient}")]
    OutOfBounds { row: u16, col: u16, ambient: Ambient },
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: Ambient, right: Ambient },
    #[error("operation requires a square ambient, got {ambient}")]
    NonSquare { ambient: Ambient },
    #[error("minor index sets must be nonempty and of equal size (got {rows} rows, {cols} cols)")]
    MinorShape { rows: usize, cols: usize },
    #[error("minor index sets must be strictly increasing")]
    MinorIndexOrder,
}
