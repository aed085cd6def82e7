//! Mirror-reflective algebras `R(A, e, λ)`.

mod build;
mod compare;
mod level;
mod levels;
mod omega;

pub use build::{build_mirror, check_idealized, check_idealized_extension, IdealizedReport, MirrorAlgebra};
pub use compare::{compare_mirrors, level_change_map, MirrorComparison};
pub use level::Level;
pub use levels::{levels_isomorphic, LevelRelation};
pub use omega::{omega_map, omega_on_tensor, rho_endo, rho_iso_check, OmegaMap, RhoReport};
