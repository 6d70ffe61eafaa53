//! Exact construction, classification and verification of the
//! Heisenberg-Lorentz family of fifteen-dimensional Lie algebras and of
//! their matrix and differential-operator representations.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matrix_reps;
pub mod spinor;
pub mod weyl;

pub use error::{Error, Result};
