//! Exact base fields and the λ-integers built on them.

mod field;
mod qcomb;

pub use field::{is_prime, FieldSpec, Scalar};
pub use qcomb::{is_regular, q_binom, q_factorial, q_int};
