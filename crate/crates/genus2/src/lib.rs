//! A workbench for positive factorizations of the identity in the genus-2
//! mapping class group.
//!
//! Factorizations of the identity into right-handed Dehn twists correspond
//! to genus-2 Lefschetz fibrations. This crate represents twist words
//! exactly (mapping classes act on the surface group `pi_1(Sigma_2)`, with
//! the word problem solved by Dehn's algorithm), rewrites factorizations
//! (Hurwitz moves, global conjugation, fiber sums, lantern and 2-chain
//! substitutions), computes the topological invariants of the corresponding
//! fibration, reproduces a catalog of known constructions, and plans
//! constructions for admissible geography points.

pub mod catalog;
pub mod factorization;
pub mod geography;
pub mod homology;
pub mod mcg;
pub mod search;
pub mod words;

pub use factorization::{Factorization, FibrationType, TwistToken};
pub use homology::{AbelianGroupShape, HomologyClass, SymplecticMatrix};
pub use mcg::{BaseCurveId, Curve, MappingClass, McgWord};
pub use words::SurfaceWord;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("word length {len} exceeds cap {cap}")]
    WordLengthCap { len: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not an automorphism: relator image not conjugate to relator")]
    NotAutomorphism,
    #[error("factorization is not the identity: {0}")]
    NotIdentity(String),
    #[error("invalid rewrite: {0}")]
    InvalidRewrite(String),
    #[error("substitution relation check failed: {0}")]
    RelationCheck(String),
    #[error("fibration type ({n},{s}) is not admissible: n + 2s must be divisible by 10")]
    InadmissibleType { n: u32, s: u32 },
    #[error("slope undefined: chi_h = 0 for type ({n},{s})")]
    SlopeUndefined { n: u32, s: u32 },
    #[error("geography point ({x},{y}) outside constructive region: {reason}")]
    OutsideRegion { x: i64, y: i64, reason: String },
    #[error("catalog entry `{0}` is a stub (no published word data)")]
    StubEntry(String),
    #[error("catalog entry `{0}` not found")]
    UnknownEntry(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
