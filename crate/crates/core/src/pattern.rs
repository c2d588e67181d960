//! Classical pattern containment for words with repeated letters.
//!
//! An occurrence of a pattern `p` in a word `w` is a subsequence of `w` that
//! is order-isomorphic to `p`: equal pattern letters map to equal letters and
//! strictly smaller pattern letters map to strictly smaller letters.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::word::{format_letters, parse_letters, Letter, Word};

/// A nonempty word whose distinct values are exactly `0, 1, ..., k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Word);

impl Pattern {
    /// Accepts only words that are already in normalized form.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !is_normalized(&letters) {
            return Err(Error::InvalidPattern(format_letters(&letters)));
        }
        Ok(Pattern(Word::new(letters)))
    }

    /// Rank-compresses an arbitrary nonempty word; the library's lenient entry point.
    pub fn normalized(letters: &[Letter]) -> Result<Self> {
        normalize_pattern(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of distinct letters.
    pub fn alphabet_size(&self) -> usize {
        self.0.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn has_distinct_letters(&self) -> bool {
        self.alphabet_size() == self.0.len()
    }
}

impl Deref for Pattern {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Parses and normalizes silently; use [`Pattern::new`] for strict input.
    fn from_str(s: &str) -> Result<Self> {
        normalize_pattern(&parse_letters(s)?)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_normalized(letters: &[Letter]) -> bool {
    let Some(&max) = letters.iter().max() else {
        return false;
    };
    let mut seen = vec![false; max as usize + 1];
    for &x in letters {
        seen[x as usize] = true;
    }
    seen.into_iter().all(|s| s)
}

/// Replaces each letter by its rank among the distinct letters (smallest is 0).
pub fn normalize_pattern(w: &[Letter]) -> Result<Pattern> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut distinct = w.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let letters = w
        .iter()
        .map(|x| distinct.binary_search(x).unwrap() as Letter)
        .collect();
    Ok(Pattern(Word::new(letters)))
}

const UNBOUND: Letter = Letter::MAX;

/// Backtracking matcher. `binding[v]` is the text letter playing pattern value `v`.
struct Matcher<'a> {
    text: &'a [Letter],
    pat: &'a [Letter],
    binding: SmallVec<[Letter; 8]>,
}

impl<'a> Matcher<'a> {
    fn new(text: &'a [Letter], pat: &'a [Letter], values: usize) -> Self {
        Matcher {
            text,
            pat,
            binding: SmallVec::from_elem(UNBOUND, values),
        }
    }

    fn consistent(&self, value: Letter, x: Letter) -> bool {
        self.binding.iter().enumerate().all(|(q, &y)| {
            y == UNBOUND || (value.cmp(&(q as Letter)) == x.cmp(&y))
        })
    }

    /// Extends a partial occurrence: pattern index `pj` onwards, text index `ti` onwards.
    fn find(&mut self, ti: usize, pj: usize) -> bool {
        if pj == self.pat.len() {
            return true;
        }
        let need = self.pat.len() - pj;
        if self.text.len() < ti + need {
            return false;
        }
        let value = self.pat[pj];
        let bound = self.binding[value as usize];
        for i in ti..=self.text.len() - need {
            let x = self.text[i];
            if bound != UNBOUND {
                if x == bound && self.find(i + 1, pj + 1) {
                    return true;
                }
                continue;
            }
            if !self.consistent(value, x) {
                continue;
            }
            self.binding[value as usize] = x;
            let found = self.find(i + 1, pj + 1);
            self.binding[value as usize] = UNBOUND;
            if found {
                return true;
            }
        }
        false
    }

    fn count(&mut self, ti: usize, pj: usize) -> u64 {
        if pj == self.pat.len() {
            return 1;
        }
        let need = self.pat.len() - pj;
        if self.text.len() < ti + need {
            return 0;
        }
        let value = self.pat[pj];
        let bound = self.binding[value as usize];
        let mut total = 0;
        for i in ti..=self.text.len() - need {
            let x = self.text[i];
            if bound != UNBOUND {
                if x == bound {
                    total += self.count(i + 1, pj + 1);
                }
                continue;
            }
            if !self.consistent(value, x) {
                continue;
            }
            self.binding[value as usize] = x;
            total += self.count(i + 1, pj + 1);
            self.binding[value as usize] = UNBOUND;
        }
        total
    }
}

/// True iff some subsequence of `w` is order-isomorphic to `p`.
pub fn contains(w: &[Letter], p: &Pattern) -> bool {
    Matcher::new(w, p, p.alphabet_size()).find(0, 0)
}

pub fn avoids(w: &[Letter], p: &Pattern) -> bool {
    !contains(w, p)
}

/// Number of index subsequences of `w` order-isomorphic to `p`.
pub fn count_occurrences(w: &[Letter], p: &Pattern) -> u64 {
    Matcher::new(w, p, p.alphabet_size()).count(0, 0)
}

/// True iff `w` has an occurrence of `p` that uses the last letter of `w`.
///
/// If `w[..n-1]` avoids `p`, this is equivalent to `contains(w, p)`, which
/// is what the pruned enumerators rely on.
pub fn occurs_at_end(w: &[Letter], p: &[Letter], values: usize) -> bool {
    let (Some((&last, head)), Some((&plast, phead))) = (w.split_last(), p.split_last()) else {
        return false;
    };
    let mut m = Matcher::new(head, phead, values);
    m.binding[plast as usize] = last;
    m.find(0, 0)
}
