//! Validated ascent sequences and their restricted variant.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{format_letters, parse_letters, Letter, Word};

/// True iff `w` starts with 0 and every later letter is at most one more
/// than the number of ascents before it. The empty word is not an ascent
/// sequence.
pub fn is_ascent_sequence(w: &[Letter]) -> bool {
    let Some((&first, rest)) = w.split_first() else {
        return false;
    };
    if first != 0 {
        return false;
    }
    let mut ascents: Letter = 0;
    let mut prev = first;
    for &x in rest {
        if x > ascents + 1 {
            return false;
        }
        if x > prev {
            ascents += 1;
        }
        prev = x;
    }
    true
}

/// True iff `w` is an ascent sequence with every letter at least the running
/// maximum of the earlier letters minus one.
pub fn is_restricted(w: &[Letter]) -> bool {
    if !is_ascent_sequence(w) {
        return false;
    }
    let mut max = w[0];
    for &x in &w[1..] {
        if x + 1 < max {
            return false;
        }
        max = max.max(x);
    }
    true
}

/// True iff `w` is a restricted growth function: it starts with 0 and the
/// first occurrence of each `k > 0` comes after some occurrence of `k - 1`.
pub fn is_rgf(w: &[Letter]) -> bool {
    if w.first() != Some(&0) {
        return false;
    }
    // first occurrences must appear as 0, 1, 2, ... so a running max suffices
    let mut max = 0;
    for &x in w {
        if x > max + 1 {
            return false;
        }
        max = max.max(x);
    }
    true
}

/// An ascent sequence. Always nonempty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AscentSequence(Word);

impl AscentSequence {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if is_ascent_sequence(&letters) {
            Ok(AscentSequence(Word::new(letters)))
        } else if letters.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Err(Error::NotAscentSequence(format_letters(&letters)))
        }
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_ascent_sequence(&letters));
        AscentSequence(Word::new(letters))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl Deref for AscentSequence {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl TryFrom<Word> for AscentSequence {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        AscentSequence::new(w.into_letters())
    }
}

impl FromStr for AscentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AscentSequence::new(parse_letters(s)?)
    }
}

impl fmt::Display for AscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An ascent sequence in which every letter is at least the maximum of the
/// preceding letters minus one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RestrictedAscentSequence(AscentSequence);

impl RestrictedAscentSequence {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if is_restricted(&letters) {
            Ok(RestrictedAscentSequence(AscentSequence(Word::new(letters))))
        } else if letters.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Err(Error::NotRestricted(format_letters(&letters)))
        }
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_restricted(&letters));
        RestrictedAscentSequence(AscentSequence(Word::new(letters)))
    }

    pub fn as_ascent_sequence(&self) -> &AscentSequence {
        &self.0
    }
}

impl Deref for RestrictedAscentSequence {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromStr for RestrictedAscentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RestrictedAscentSequence::new(parse_letters(s)?)
    }
}

impl fmt::Display for RestrictedAscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A maximal letter (0-based position) together with the position of its
/// last repetition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaximalLetter {
    pub position: usize,
    pub last_repetition: usize,
}

impl MaximalLetter {
    pub fn is_repeated(&self) -> bool {
        self.last_repetition > self.position
    }
}

/// Maximal letters of an ascent sequence, left to right.
///
/// Position `i` is maximal when it is the first position or when its letter
/// equals one more than the ascents strictly before it. A run of equal
/// letters immediately after a maximal letter ends at its last repetition.
pub fn maximal_positions(x: &[Letter]) -> Vec<MaximalLetter> {
    let mut out = Vec::new();
    // ascents within x[..i]
    let mut ascents: Letter = 0;
    for i in 0..x.len() {
        if i == 0 || x[i] == ascents + 1 {
            let mut last = i;
            while last + 1 < x.len() && x[last + 1] == x[i] {
                last += 1;
            }
            out.push(MaximalLetter {
                position: i,
                last_repetition: last,
            });
        }
        if i > 0 && x[i - 1] < x[i] {
            ascents += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<Letter> {
        parse_letters(s).unwrap()
    }

    #[test]
    fn ascent_sequence_membership() {
        assert!(is_ascent_sequence(&w("0101312052")));
        assert!(!is_ascent_sequence(&w("0012143")));
        assert!(is_ascent_sequence(&w("0")));
        assert!(!is_ascent_sequence(&[]));
        assert!(!is_ascent_sequence(&w("1")));
        assert_eq!(AscentSequence::new(vec![]), Err(Error::EmptyWord));
    }

    #[test]
    fn rgf_membership() {
        assert!(is_rgf(&w("001021")));
        assert!(!is_rgf(&w("01013")));
        assert!(is_rgf(&w("0")));
        assert!(!is_rgf(&[]));
    }

    #[test]
    fn restricted_membership() {
        assert!(is_restricted(&w("010221212")));
        assert!(is_restricted(&w("012323443465")));
        assert!(!is_restricted(&w("0120")));
        assert!(is_restricted(&w("0")));
    }

    #[test]
    fn maximal_letters_of_long_example() {
        let x = w("0,0,0,1,0,1,2,0,4,4,2,3,2,0,6,4,1,4,8,8,8,5");
        assert!(is_ascent_sequence(&x));
        let got: Vec<(usize, usize)> = maximal_positions(&x)
            .iter()
            .map(|m| (m.position + 1, m.last_repetition + 1))
            .collect();
        assert_eq!(got, vec![(1, 3), (4, 4), (9, 10), (15, 15), (19, 21)]);
    }

    #[test]
    fn maximal_letters_of_short_example() {
        let got = maximal_positions(&w("011213232"));
        let positions: Vec<usize> = got.iter().map(|m| m.position + 1).collect();
        assert_eq!(positions, vec![1, 2, 4, 6]);
        let repeated: Vec<usize> = got
            .iter()
            .filter(|m| m.is_repeated())
            .map(|m| m.position + 1)
            .collect();
        assert_eq!(repeated, vec![2]);
    }

    #[test]
    fn single_letter_is_its_own_last_repetition() {
        assert_eq!(
            maximal_positions(&[0]),
            vec![MaximalLetter {
                position: 0,
                last_repetition: 0
            }]
        );
    }
}
