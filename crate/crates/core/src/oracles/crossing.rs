//! k-crossings on the arc diagram of a set partition. Arcs join
//! consecutive elements of a block; a k-crossing is a family of arcs
//! `(i_1, j_1), ..., (i_k, j_k)` with `i_1 < ... < i_k < j_1 < ... < j_k`.

use num_bigint::BigUint;

use crate::enumerate::generate_set_partitions;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::word::Letter;

type Arc = (Letter, Letter);

/// Extends a crossing family whose last arc is `last`; every left end must
/// stay below `first_right`.
fn extends(arcs: &[Arc], last: Arc, first_right: Letter, remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    arcs.iter().any(|&(i, j)| {
        i > last.0 && i < first_right && j > last.1 && extends(arcs, (i, j), first_right, remaining - 1)
    })
}

/// True iff the arc diagram of `sp` has `k` pairwise crossing arcs.
pub fn has_k_crossing(sp: &SetPartition, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let arcs = sp.arcs();
    arcs.iter().any(|&a| extends(&arcs, a, a.1, k - 1))
}

/// Set partitions of `{1, ..., n}` without a `k`-crossing, by listing all
/// partitions.
pub fn non_k_crossing_partition_count(n: usize, k: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::Domain(format!("k-crossings need k >= 2, got {k}")));
    }
    let count = generate_set_partitions(n)?
        .filter(|sp| !has_k_crossing(sp, k))
        .count();
    Ok(BigUint::from(count))
}
