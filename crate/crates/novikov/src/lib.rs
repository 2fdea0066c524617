//! Exact-arithmetic toolkit for finite-dimensional Z2-graded algebras given
//! by structure constants: Novikov (super)algebra law checking, type-N/S
//! classification, modules over Novikov algebras with the two-dimensional
//! catalog, the standard constructions, and exhaustive finite-field searches
//! for type-S examples in low dimension.

pub mod algebra;
pub mod constructions;
pub mod laws;
pub mod matrix;
pub mod modules;
pub mod scalar;
pub mod search;

pub use algebra::{AlgebraError, GradedVector, Parity, SuperAlgebra};
pub use constructions::{AssocSuperAlgebra, ConstructionError, OddPairing};
pub use laws::{AlgebraType, BracketAlgebra, LawReport, LawsError, Violation};
pub use matrix::{Matrix, MatrixError};
pub use modules::{CatalogTag, ModuleError, NovikovAlgebra1D, NovikovModule};
pub use scalar::{FieldDescriptor, Scalar, ScalarError};
pub use search::{SearchError, SearchMode, SearchReport, SearchSpec};
