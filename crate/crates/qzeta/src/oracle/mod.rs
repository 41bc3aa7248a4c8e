//! Brute-force ground truth over small finite fields.

mod checks;
mod field;
mod linalg;
mod module;
mod real;

pub use checks::*;
pub use field::{build_field, Elt, SmallField};
pub use linalg::{all_subspaces, Matrix, Subspace, Vector};
pub use module::{automorphism_cap, enumeration_cap, FqModule};
pub use real::*;
