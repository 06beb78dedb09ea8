//! The quantum Grassmannian `G_q(m,n)`: the subalgebra of `O_q(M_mn)`
//! generated by the maximal `m x m` quantum minors, presented on formal
//! tableaux with straightening onto the preferred basis.

mod elem;
mod pluecker;
mod relations;
mod straighten;
mod tableau;

pub use elem::{GrassAmbient, GrassElem};
pub use pluecker::pluecker_relation;
pub use relations::{
    commutation_check, commutation_exponent, delta_map, normality_mod_ideal_check,
    CommutationCheck,
};
pub use straighten::{
    all_generators, embedding_rank, enumerate_preferred, preferred_tableaux_of_degree,
    straighten, straighten_by_rewriting,
};
pub use tableau::{
    compare_column_sets, ell, lex_less, star_leq, tableau_prec, ColumnSetOrder, Content,
    IndexSet, Tableau,
};

use thiserror::Error;

use crate::qmatrix::QMatrixError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassError {
    #[error("column set {cols:?} is not a strictly increasing nonempty list")]
    BadIndexSet { cols: Vec<u16> },
    #[error("row {row} does not fit G_q({m},{n})")]
    RowOutOfBounds { row: IndexSet, m: u16, n: u16 },
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: GrassAmbient, right: GrassAmbient },
    #[error("invalid Pluecker input: {reason}")]
    InvalidPluecker { reason: String },
    #[error("commutation check requires {left} < {right} lexicographically")]
    CommutationOrder { left: IndexSet, right: IndexSet },
    #[error("internal straightening failure: {detail}")]
    StraightenInternal { detail: String },
    #[error(transparent)]
    Matrix(#[from] QMatrixError),
}
