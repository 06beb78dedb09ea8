//! Exact symbolic computation in the quantum matrix algebra `O_q(M_mn)`
//! and the quantum Grassmannian `G_q(m,n)` over the field `Q(q)`.
//!
//! The crate provides:
//!
//! * [`coeff`] — the coefficient field `Q(q)`: Laurent polynomials in `q`
//!   with exact rational coefficients and their fraction field;
//! * [`qmatrix`] — PBW normal forms, multiplication, quantum minors, the
//!   quantum determinant, the transpose and minor-complement morphisms,
//!   and the column coaction into `O_q(M_m) (x) O_q(M_mn)`;
//! * [`grassmann`] — tableaux and their orders, content grading,
//!   generalized quantum Pluecker relations, straightening onto the
//!   preferred-tableau basis, commutation-form checks, and the
//!   column-reversal isomorphism;
//! * [`poset`] — the generator poset, saturated/maximal paths, graded
//!   dimension counting and the growth dimension;
//! * [`dehom`] — dehomogenisation at the rightmost maximal minor: the
//!   twisted localization arithmetic, its generators, and the isomorphism
//!   with a smaller quantum matrix algebra.
//!
//! Everything is exact; no floating point is used anywhere.

pub mod coeff;
pub mod dehom;
mod display;
pub mod grassmann;
pub mod linalg;
pub mod poset;
pub mod qmatrix;
