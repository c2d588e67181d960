use crate::enumerate::blocks_of_rgf;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::sequence::is_rgf;
use crate::word::{format_letters, Letter, Word};

/// Restricted growth function of a partition: letter `i` is the 0-based
/// number of the block containing `i`.
pub fn rgf_encode(sp: &SetPartition) -> Word {
    Word::new(sp.labels().into_iter().map(|b| b as Letter).collect())
}

pub fn rgf_decode(w: &[Letter]) -> Result<SetPartition> {
    if !is_rgf(w) {
        return Err(Error::NotRgf(format_letters(w)));
    }
    Ok(blocks_of_rgf(w))
}

/// True iff no `a < b < c < d` has `a, c` in one block and `b, d` in another.
/// Checks every quadruple literally.
pub fn is_noncrossing(sp: &SetPartition) -> bool {
    let label = sp.labels();
    let n = label.len();
    for a in 0..n {
        for b in a + 1..n {
            if label[b] == label[a] {
                continue;
            }
            for c in b + 1..n {
                if label[c] != label[a] {
                    continue;
                }
                if (c + 1..n).any(|d| label[d] == label[b]) {
                    return false;
                }
            }
        }
    }
    true
}
