//! Exact computations on affine Schubert varieties in the affine Grassmannian
//! of `SL_n` and on nilpotent orbit closures.
//!
//! Plücker coordinates on finite matrix models of Schubert cells are evaluated
//! exactly over the rationals. Symbolic identities are certified by evaluation
//! at seeded random points.

pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod partition;
pub mod weyl;
pub mod schubert;
pub mod straighten;
pub mod demazure;
pub mod schur;
pub mod nilpotent;
pub mod symfun;
pub mod probe;
pub mod verify;
