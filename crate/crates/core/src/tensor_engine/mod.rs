//! The truncated tensor bialgebra `T(V, c)`, generic truncated graded braided
//! bialgebras, and filtered quotients of them.

mod bialgebra;
mod filtered;
mod tensor;

pub use bialgebra::{AxiomEntry, BialgebraJson, TruncatedBraidedBialgebra, ValidationReport};
pub use filtered::{
    coradical_filtration, extend_algebra_map, gr_of_filtration, graded_primitives, AssociatedGraded, FilteredBialgebra,
    GradedMap, GradedPrimitives,
};
pub use tensor::{lift_braiding, quantum_symmetrizer, GradedVector, TruncatedTensorBialgebra};
