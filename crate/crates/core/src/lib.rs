//! Exact computations with finite-dimensional algebras: quiver presentations,
//! modules and bimodules, mirror-reflective algebras, and bounded complexes of
//! projectives with tilting checks.

pub mod error;
pub mod examples;
pub mod exact;
pub mod field;
pub mod algebra;
pub mod quiver;
pub mod modrep;
pub mod mirror;
pub mod homotopy;
pub mod invariants;
pub mod corpus;
pub mod example_suite;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, Scalar};
