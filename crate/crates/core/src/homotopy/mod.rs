//! Bounded complexes of projectives and the homotopy category.

mod amatrix;
mod complex;
mod context;
mod format;
mod generation;
mod hom;
mod k0;
mod modcomplex;
mod pair;
mod search;
pub mod random;

pub use amatrix::AMatrix;
pub use complex::{ChainMap, ProjComplex};
pub use context::ProjContext;
pub use hom::{end_algebra_complex, hom_complexes, hom_homotopy, is_selforthogonal, selforthogonality_failure, strict_end_algebra, ComplexEnd, HomSpace};
pub use format::{format_element, parse_complex, print_complex};
pub use generation::{find_retract, find_witness, generation_check, is_retraction, is_tilting, is_tilting_seeded, projective_targets, DEFAULT_SEED, GenerationReport, GenerationWitness, Retraction, TiltingReport, TiltingVerdict, WitnessStep};
pub use k0::{is_unimodular_basis, k0_class, k0_class_of, k0_generation_check, summand_idempotents, K0Check};
pub use search::{tilting_search, SearchEntry, SearchOptions, SearchResult, SearchShape};
pub use pair::{pair_equiv_check, split_idempotent, stalk_endomorphism, summands_of, CheckStatus, PairReport};
pub use modcomplex::{xi_map, Cohomology, ModComplex, XiMap};
