//! Exact-arithmetic computations around Gelfand-Tsetlin degenerations of
//! type A flag varieties: polytopes and monomial bases, degenerate module
//! structures, weighted initial ideals of the Plücker ideal, the GT toric
//! ideal and the maximal tropical cone with boundary certificates.
//!
//! Everything is computed over the rationals with arbitrary precision; all
//! checks are exact equalities.

pub mod cone;
pub mod error;
pub mod freeorder;
pub mod ideals;
pub mod lie;
pub mod linalg;
pub mod phi;
pub mod polytope;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::Rat;
