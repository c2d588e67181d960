//! Pattern avoidance in ascent sequences.
//!
//! Words and patterns live in [`word`], [`pattern`] and [`sequence`];
//! exhaustive generation and counting in [`enumerate`]; the bijections in
//! [`bijections`]; closed forms, Wilf classification and the conjecture
//! checks in [`oracles`].

pub mod bijections;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod oracles;
pub mod partition;
pub mod pattern;
pub mod perm;
pub mod sequence;
pub mod word;

pub use error::{Error, Result};
pub use partition::SetPartition;
pub use pattern::{contains, count_occurrences, normalize_pattern, Pattern};
pub use perm::{perm_contains, Permutation};
pub use sequence::{
    is_ascent_sequence, is_restricted, is_rgf, maximal_positions, AscentSequence, MaximalLetter,
    RestrictedAscentSequence,
};
pub use word::{asc, des, stat, Letter, Statistic, TernaryWord, Word};
