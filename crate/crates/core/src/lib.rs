//! Exact invariant theory of finite linear groups acting on polynomial rings.
//!
//! The crate classifies pseudo-reflections, computes the divisor class group of
//! the invariant ring as a group of linear characters, evaluates Brauer
//! character series and the character λ of the canonical module, solves for
//! invariants and semi-invariants degree by degree, and decides whether the
//! invariant ring is quasi-Gorenstein.

pub mod error;
pub mod exactnum;
pub mod polyalg;
pub mod matgroup;
pub mod reflect;
pub mod chars;
pub mod series;
pub mod linalg;
pub mod invariants;
pub mod engine;

pub use error::{Error, Result};
pub use exactnum::{brauer_lift, cyclo_field, CycloNumber, Field, FieldKind, RootOfUnity, Scalar};
