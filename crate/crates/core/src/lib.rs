//! Exact computations with braided vector spaces, their tensor bialgebras,
//! symmetric, Nichols and enveloping algebras, and desk-scale checks of the
//! structure theorems relating them.

pub mod braided_space;
pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod quotients;
pub mod scalars;
pub mod tensor_engine;
pub mod theorems;

pub use error::{Error, Result};
pub use scalars::{FieldSpec, Scalar};
