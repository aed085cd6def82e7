//! Exact linear algebra over [`Field`](crate::field::Field)s and over the integers.

pub mod echelon;
pub mod matrix;
pub mod poly;
pub mod snf;

pub use echelon::{Echelon, Span};
pub use matrix::{vecops, Matrix, Vector};
pub use poly::Poly;
pub use snf::{smith_normal_form, IntMatrix, Smith};
