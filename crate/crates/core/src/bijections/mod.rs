//! Invertible maps between pattern-avoiding ascent sequences and other
//! combinatorial families. Every map validates its input.

mod catalan;
mod lifted;
mod modified;
mod restricted;
mod rgf;

pub use catalan::{ncpartition_to_perm231, perm231_to_ncpartition, perm312_to_seq101, seq101_to_perm312};
pub use lifted::{seq102_to_ternary, ternary_to_seq102, LiftedBinaryDecomposition, LiftedBlock};
pub use modified::{modify, modify_letters, unmodify, ModifiedAscentSequence};
pub use restricted::{phi, phi_inverse, reduce_tail, restricted_to_021, seq021_to_restricted, TailSplit};
pub use rgf::{is_noncrossing, rgf_decode, rgf_encode};
