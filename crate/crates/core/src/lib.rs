//! Reconstruction of 2-colorings of complete graphs from their homogeneous
//! sets.
//!
//! A coloring assigns 0 or 1 to every pair of a finite vertex set
//! `{0..n-1}`. Two colorings are H-equivalent when they have the same
//! homogeneous (monochromatic) triples. This crate answers, on finite vertex
//! sets, which colorings are determined up to complementation by their
//! homogeneous sets, what the smallest non-trivial reconstructions look like,
//! and how those relate to critical pairs and critical 4-cycles.
//!
//! ```
//! use homrec::{fixtures, critical, reconstruct};
//!
//! let phi = fixtures::partition(6);
//! assert_eq!(critical::find_critical_pairs(&phi).unwrap().len(), 9);
//! let report = reconstruct::r_value(&phi, reconstruct::SearchMode::Exhaustive).unwrap();
//! assert_eq!(report.r, reconstruct::RValue::Finite(1));
//! ```

mod bits;
pub mod coloring;
pub mod critical;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod reconstruct;
pub mod srcheck;
pub mod structure;
pub mod verify;

pub use bits::{pair_count, pair_from_index, pair_index, triple_count};
pub use coloring::{
    h_equivalent, hom_sets, hom_signature, Coloring, EdgeSet, HomSet, HomSignature, TripleClass,
};
pub use error::{Error, Result};

/// Published lower bound on the Ramsey number R(7).
pub const RAMSEY_7_LOWER: usize = 205;
/// Published upper bound on the Ramsey number R(7).
pub const RAMSEY_7_UPPER: usize = 540;
