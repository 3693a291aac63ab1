//! Finite fields `GF(q^m)`, linear codes over them, and exhaustive rank
//! weight censuses.

mod census;
mod code;
mod field;
mod file;

pub use census::{
    brute_distribution, cap_from_env, diameter, hadamard_rank_enumerator, min_rank_distance, rank_weight,
    RankDistribution, CAP_ENV, DEFAULT_CAP,
};
pub use code::{CodeVector, LinearCode};
pub use field::{ExtElement, FieldSpec, GaloisField, MAX_FIELD_ORDER};
pub use file::{CodeFile, ElementRepr};
