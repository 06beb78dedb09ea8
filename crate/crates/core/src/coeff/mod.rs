//! Exact arithmetic in the coefficient field `Q(q)`.

mod laurent;
mod scalar;

pub use laurent::LaurentPoly;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("evaluation point is a pole")]
    EvalAtPole,
}
