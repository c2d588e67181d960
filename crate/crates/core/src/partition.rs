use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{parse_letters, Letter};

/// A set partition of `{1, ..., n}` in standard form: each block sorted
/// ascending, blocks sorted by their minima.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<Letter>>,
}

impl SetPartition {
    /// Validates and brings the blocks into standard form.
    pub fn new(mut blocks: Vec<Vec<Letter>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &e in block.iter() {
                let e = e as usize;
                if e == 0 || e > n {
                    return Err(Error::InvalidPartition(format!("element {e} out of range 1..={n}")));
                }
                if seen[e] {
                    return Err(Error::InvalidPartition(format!("element {e} appears twice")));
                }
                seen[e] = true;
            }
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub(crate) fn from_standard(blocks: Vec<Vec<Letter>>) -> Self {
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the ground set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `labels()[i]` is the (0-based) block number of element `i + 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.size()];
        for (k, block) in self.blocks.iter().enumerate() {
            for &e in block {
                labels[e as usize - 1] = k;
            }
        }
        labels
    }

    /// Arcs joining consecutive elements of each block, as `(i, j)` with `i < j`.
    pub fn arcs(&self) -> Vec<(Letter, Letter)> {
        let mut arcs: Vec<_> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|p| (p[0], p[1])))
            .collect();
        arcs.sort_unstable();
        arcs
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.size() >= 10;
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|e| e.to_string()).collect();
                items.join(if wide { "," } else { "" })
            })
            .collect();
        f.write_str(&parts.join("-"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Accepts the dash notation `124-36-5`; blocks with multi-digit
    /// elements are written with commas (`1,10-2`).
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .trim()
            .split('-')
            .map(parse_letters)
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}
