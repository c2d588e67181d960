//! Prefix rules decide which nodes of the ascent-sequence prefix tree survive.
//!
//! A rule sees the prefix right after a letter is appended and may reject
//! it, which prunes the whole subtree. Rules carry whatever incremental
//! state they need; every `push` is matched by exactly one `pop`, whether or
//! not the push admitted the prefix.

use crate::pattern::{occurs_at_end, Pattern};
use crate::word::Letter;

pub trait PrefixRule: Clone + Send {
    /// Called after a letter is appended. The prefix without that letter has
    /// already been admitted. Returning `false` prunes the subtree.
    fn push(&mut self, prefix: &[Letter]) -> bool;

    /// Undoes the matching `push`; `prefix` still ends with the letter.
    fn pop(&mut self, prefix: &[Letter]);
}

/// Admits every ascent sequence.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unrestricted;

impl PrefixRule for Unrestricted {
    fn push(&mut self, _: &[Letter]) -> bool {
        true
    }

    fn pop(&mut self, _: &[Letter]) {}
}

/// Admits prefixes avoiding a pattern. Containment is monotone under
/// appending letters, so only occurrences ending at the new letter need to
/// be looked for.
#[derive(Clone, Debug)]
pub struct Avoiding {
    pattern: Pattern,
    values: usize,
}

impl Avoiding {
    pub fn new(pattern: Pattern) -> Self {
        let values = pattern.alphabet_size();
        Avoiding { pattern, values }
    }
}

impl PrefixRule for Avoiding {
    fn push(&mut self, prefix: &[Letter]) -> bool {
        !occurs_at_end(prefix, &self.pattern, self.values)
    }

    fn pop(&mut self, _: &[Letter]) {}
}

/// Admits restricted ascent sequences: every letter is at least the running
/// maximum minus one.
#[derive(Clone, Debug, Default)]
pub struct Restricted {
    maxima: Vec<Letter>,
}

impl PrefixRule for Restricted {
    fn push(&mut self, prefix: &[Letter]) -> bool {
        let x = *prefix.last().unwrap();
        match self.maxima.last().copied() {
            None => {
                self.maxima.push(x);
                true
            }
            Some(max) => {
                self.maxima.push(max.max(x));
                x + 1 >= max
            }
        }
    }

    fn pop(&mut self, _: &[Letter]) {
        self.maxima.pop();
    }
}

/// Admits ascent sequences whose modified form avoids a pattern.
///
/// The modified form of a prefix is kept up to date: appending the top of
/// an ascent raises every earlier letter that is at least as large as it.
/// That raise is order-preserving on the earlier letters, so avoidance stays
/// monotone and only occurrences ending at the new letter matter.
#[derive(Clone, Debug)]
pub struct ModifiedAvoiding {
    pattern: Pattern,
    values: usize,
    modified: Vec<Letter>,
}

impl ModifiedAvoiding {
    pub fn new(pattern: Pattern) -> Self {
        let values = pattern.alphabet_size();
        ModifiedAvoiding {
            pattern,
            values,
            modified: Vec::new(),
        }
    }
}

fn is_ascent_top(prefix: &[Letter]) -> bool {
    let n = prefix.len();
    n >= 2 && prefix[n - 2] < prefix[n - 1]
}

impl PrefixRule for ModifiedAvoiding {
    fn push(&mut self, prefix: &[Letter]) -> bool {
        let top = *prefix.last().unwrap();
        if is_ascent_top(prefix) {
            for y in self.modified.iter_mut().filter(|y| **y >= top) {
                *y += 1;
            }
        }
        self.modified.push(top);
        !occurs_at_end(&self.modified, &self.pattern, self.values)
    }

    fn pop(&mut self, prefix: &[Letter]) {
        let top = self.modified.pop().unwrap();
        if is_ascent_top(prefix) {
            // raised letters are now > top and nothing equals top
            for y in self.modified.iter_mut().filter(|y| **y > top) {
                *y -= 1;
            }
        }
    }
}
