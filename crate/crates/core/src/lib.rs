//! Exact homological algebra for finite-dimensional basic algebras over
//! prime fields.

pub mod algebra;
mod error;
pub mod field;
pub mod homology;
pub mod matrix;
pub mod module;
pub mod theorems;

pub use algebra::{Algebra, Extension, ExtensionPredicates, QuiverPresentation};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use matrix::Matrix;
pub use module::{Module, Morphism, Standard};
