use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::{contains, Pattern};
use crate::word::{format_letters, parse_letters, Letter};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<Letter>);

impl Permutation {
    pub fn new(entries: Vec<Letter>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return Err(Error::NotPermutation(format_letters(&entries)));
            }
            seen[e] = true;
        }
        Ok(Permutation(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<Letter>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as Letter).collect())
    }

    pub fn entries(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Letter> {
        self.0
    }

    pub fn reversed(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }
}

impl Deref for Permutation {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

pub(crate) fn check_distinct(p: &Pattern) -> Result<()> {
    if p.has_distinct_letters() {
        Ok(())
    } else {
        Err(Error::RepeatedLetters(p.to_string()))
    }
}

/// Classical permutation-pattern containment. Patterns are written on
/// `0..k`, so the permutation pattern 312 is `201`.
pub fn perm_contains(pi: &Permutation, p: &Pattern) -> Result<bool> {
    check_distinct(p)?;
    Ok(contains(pi, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn validates_entries() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert_eq!(perm("10,9,8,7,6,5,4,3,2,1").len(), 10);
    }

    #[test]
    fn containment() {
        let p312: Pattern = "201".parse().unwrap();
        let p231: Pattern = "120".parse().unwrap();
        assert!(!perm_contains(&perm("45378621"), &p312).unwrap());
        assert!(!perm_contains(&perm("641325879"), &p231).unwrap());
        assert!(perm_contains(&perm("12"), &"01".parse().unwrap()).unwrap());
        assert!(perm_contains(&perm("312"), &p312).unwrap());
    }

    #[test]
    fn rejects_patterns_with_repeats() {
        let err = perm_contains(&perm("12"), &"00".parse().unwrap()).unwrap_err();
        assert_eq!(err, Error::RepeatedLetters("00".into()));
    }
}
