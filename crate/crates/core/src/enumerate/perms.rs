use crate::error::Result;
use crate::partition::SetPartition;
use crate::pattern::{occurs_at_end, Pattern};
use crate::perm::{check_distinct, Permutation};
use crate::word::Letter;

/// Lexicographic stream of the permutations of `1..=n` avoiding a classical
/// pattern. Prefixes containing the pattern are never extended.
#[derive(Clone, Debug)]
pub struct PermAvoiders {
    pattern: Pattern,
    values: usize,
    n: usize,
    entries: Vec<Letter>,
    used: Vec<bool>,
    cursor: Vec<Letter>,
    pending_pop: bool,
}

impl PermAvoiders {
    pub(crate) fn new(pattern: Pattern, n: usize) -> Result<Self> {
        check_distinct(&pattern)?;
        Ok(PermAvoiders {
            values: pattern.alphabet_size(),
            pattern,
            n,
            entries: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor: vec![1; n + 1],
            pending_pop: false,
        })
    }

    fn pop_last(&mut self) {
        let e = self.entries.pop().unwrap();
        self.used[e as usize] = false;
    }
}

impl Iterator for PermAvoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.n == 0 {
            return None;
        }
        if self.pending_pop {
            self.pending_pop = false;
            self.pop_last();
        }
        loop {
            let depth = self.entries.len();
            let mut advanced = false;
            while self.cursor[depth] as usize <= self.n {
                let c = self.cursor[depth];
                self.cursor[depth] += 1;
                if self.used[c as usize] {
                    continue;
                }
                self.entries.push(c);
                if occurs_at_end(&self.entries, &self.pattern, self.values) {
                    self.entries.pop();
                    continue;
                }
                self.used[c as usize] = true;
                advanced = true;
                break;
            }
            if advanced {
                if self.entries.len() == self.n {
                    self.pending_pop = true;
                    return Some(Permutation::new_unchecked(self.entries.clone()));
                }
                self.cursor[self.entries.len()] = 1;
                continue;
            }
            if depth == 0 {
                return None;
            }
            self.pop_last();
        }
    }
}

/// Stream of all set partitions of `{1, ..., n}` in standard form, ordered
/// lexicographically by their restricted growth functions.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    rgf: Vec<Letter>,
    started: bool,
}

impl SetPartitions {
    pub(crate) fn new(n: usize) -> Self {
        SetPartitions {
            rgf: vec![0; n],
            started: false,
        }
    }
}

/// Blocks of the partition encoded by an RGF (which must be valid).
pub(crate) fn blocks_of_rgf(rgf: &[Letter]) -> SetPartition {
    let mut blocks: Vec<Vec<Letter>> = Vec::new();
    for (i, &b) in rgf.iter().enumerate() {
        let b = b as usize;
        if b == blocks.len() {
            blocks.push(Vec::new());
        }
        blocks[b].push(i as Letter + 1);
    }
    SetPartition::from_standard(blocks)
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.rgf.is_empty() {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(blocks_of_rgf(&self.rgf));
        }
        // increment the rightmost position that stays within max-so-far + 1
        let mut prefix_max = vec![0; self.rgf.len()];
        for i in 1..self.rgf.len() {
            prefix_max[i] = prefix_max[i - 1].max(self.rgf[i - 1]);
        }
        for i in (1..self.rgf.len()).rev() {
            if self.rgf[i] <= prefix_max[i] {
                self.rgf[i] += 1;
                for x in &mut self.rgf[i + 1..] {
                    *x = 0;
                }
                return Some(blocks_of_rgf(&self.rgf));
            }
        }
        self.rgf.clear();
        None
    }
}
