//! Noncommutative dehomogenisation of `G_q(m,n)` at the rightmost maximal
//! minor `b = [n-m+1 ... n]`.
//!
//! Elements of the localization `G[b^{-1}]` are stored as sums
//! `sum_c r_c b^{-c}` with each numerator straightened and no numerator
//! lying in `G b` (trailing top rows are cancelled). The degree-zero part
//! consists of the elements whose numerator at power `c` is homogeneous of
//! total degree `c`; its generators are the braces `{I} = [I] b^{-1}`.

mod elem;
mod rho;

pub use elem::{mincomm_check, sigma, DhomElem, SigmaAction};
pub use rho::{
    gens_expand, rho_generator, rho_image_independence, verify_rho_relations, GensExpansion,
    RhoCase, RhoReport,
};

use thiserror::Error;

use crate::grassmann::{GrassAmbient, GrassError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DhomError {
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: GrassAmbient, right: GrassAmbient },
    #[error("generator index (i={i}, j={j}) out of range for ({m},{n})")]
    BadGeneratorIndex { i: u16, j: u16, m: u16, n: u16 },
    #[error("cannot clear to power {requested}: element carries power {carried}")]
    PowerClear { requested: u32, carried: u32 },
    #[error(transparent)]
    Grass(#[from] GrassError),
}
