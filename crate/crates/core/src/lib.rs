//! Ladder determinantal rings `R_2(Y)`: ladder geometry, inside corners,
//! decomposition at coincidental corners, divisor class groups, and the
//! classification of semidualizing modules up to isomorphism.

pub mod classgroup;
pub mod corners;
pub mod decompose;
pub mod error;
pub mod ladder;
pub mod rewrite;
pub mod sdm;
pub mod validate;
pub mod witness;

pub use classgroup::{
    basis, canonical_class, canonical_from_profile, embed_factor_omega, ideal_generators,
    qprime_class, qprime_index_set, relabel, BasisLabel, Coefficient, DivisorClass, GroupShape,
    IdealLabel, LocalLabel, LocalRole, RelabelMap,
};
pub use corners::{coincidental_corners, corners, CornerProfile};
pub use decompose::{decompose, factorization_roundtrip_check, Factorization};
pub use error::{Error, Result};
pub use ladder::{compose, Cell, InputNotes, Ladder};
pub use rewrite::{Monomial, RewriteSystem, MAX_DEGREE_BOUND};
pub use sdm::{
    classify, classify_factorization, construct_2n, is_gorenstein, FactorSummary, SdmReport,
};
pub use validate::{
    is_path_connected, minor_connectivity, require_two_connected, validate, Sidedness,
    ValidationReport,
};
pub use witness::{verify_witnesses, CaseOutcome, WitnessCase, WitnessReport};

/// Divisor class with machine-integer coefficients.
pub type Class = DivisorClass<i64>;
/// Divisor class with arbitrary-precision coefficients.
pub type BigClass = DivisorClass<num_bigint::BigInt>;
/// Semidualizing classification with machine-integer coefficients.
pub type Report = SdmReport<i64>;
