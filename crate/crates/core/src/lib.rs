//! Exact rank-metric coding identities.
//!
//! The crate computes rank weight distributions of small linear codes over
//! `GF(q^m)` by exhaustive enumeration, and checks them against the
//! MacWilliams transform for the rank metric, the generalized Krawtchouk
//! polynomials, binomial and power moment identities, and the analytic rank
//! distribution of MRD codes. All arithmetic is exact.

pub mod error;
pub mod exactnum;
pub mod gfcodes;
pub mod macwilliams;
pub mod moments;
pub mod mrd;
pub mod qpoly;
pub mod suite;

pub use error::{Error, Result};
