//! Modules and bimodules given by action matrices.

mod gendo;
mod hom;
mod iso;
mod module;
mod resolution;
mod tensor;

pub use hom::{bimodule_hom_basis, end_algebra, hom_basis, intertwiners, is_module_hom, MapAlgebra};
pub use module::{projectives, regular_bimodule, restrict_bimodule, sub_bimodule, Bimodule, Module};
pub use resolution::{dominant_dimension, minimal_projective_resolution, projective_cover, Cover, DomDim, Resolution};
pub use tensor::{kron, tensor_modules, tensor_over_corner, tor_dims, Delta, TensorQuotient};
pub use iso::{bimodule_isomorphic, iso_in_hom, module_isomorphic, strategy, strategy_names, Exhaustive, IsoOptions, IsoStrategy, IsoVerdict, RandomTrials};
pub use gendo::{corner_bimodules, is_gendo_symmetric, proj_inj_idempotent, CornerBimodules, GendoCertificate};
