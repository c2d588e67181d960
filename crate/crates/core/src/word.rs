//! Words over the nonnegative integers and the statistics defined on them.
//!
//! Words with single-digit letters are written compactly (`0101312052`);
//! as soon as one letter exceeds 9 the letters are separated by commas.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = u32;

/// A finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s).map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

/// Parses either a digit string (`"0102"`) or a list separated by commas or
/// whitespace (`"0,1,10"`). The empty string parses to the empty word.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<Letter>()
                    .map_err(|_| Error::parse(s, format!("{t:?} is not a nonnegative integer")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::parse(s, format!("{c:?} is not a digit")))
            })
            .collect()
    }
}

pub fn format_letters(letters: &[Letter]) -> String {
    if letters.iter().all(|&x| x < 10) {
        letters.iter().map(|x| x.to_string()).collect()
    } else {
        letters
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Number of positions `j` with `w[j] < w[j+1]`.
pub fn asc(w: &[Letter]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

/// Number of positions `j` with `w[j] > w[j+1]`.
pub fn des(w: &[Letter]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

/// Left-to-right maxima: letters strictly larger than everything before them.
pub fn lrmax(w: &[Letter]) -> usize {
    let mut best: Option<Letter> = None;
    let mut count = 0;
    for &x in w {
        if best.map_or(true, |b| x > b) {
            best = Some(x);
            count += 1;
        }
    }
    count
}

pub fn lrmin(w: &[Letter]) -> usize {
    let mut best: Option<Letter> = None;
    let mut count = 0;
    for &x in w {
        if best.map_or(true, |b| x < b) {
            best = Some(x);
            count += 1;
        }
    }
    count
}

pub fn rlmax(w: &[Letter]) -> usize {
    let mut best: Option<Letter> = None;
    let mut count = 0;
    for &x in w.iter().rev() {
        if best.map_or(true, |b| x > b) {
            best = Some(x);
            count += 1;
        }
    }
    count
}

/// Right-to-left minima: letters strictly smaller than everything after them.
pub fn rlmin(w: &[Letter]) -> usize {
    let mut best: Option<Letter> = None;
    let mut count = 0;
    for &x in w.iter().rev() {
        if best.map_or(true, |b| x < b) {
            best = Some(x);
            count += 1;
        }
    }
    count
}

pub fn zeros(w: &[Letter]) -> usize {
    w.iter().filter(|&&x| x == 0).count()
}

/// Length of the longest weakly decreasing suffix.
pub fn fwd(w: &[Letter]) -> usize {
    if w.is_empty() {
        return 0;
    }
    1 + w.windows(2).rev().take_while(|p| p[0] >= p[1]).count()
}

/// Named single-sequence statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Asc,
    Des,
    Lrmax,
    Lrmin,
    Rlmax,
    Rlmin,
    Zeros,
    Fwd,
}

impl Statistic {
    pub const ALL: [Statistic; 8] = [
        Statistic::Asc,
        Statistic::Des,
        Statistic::Lrmax,
        Statistic::Lrmin,
        Statistic::Rlmax,
        Statistic::Rlmin,
        Statistic::Zeros,
        Statistic::Fwd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Asc => "asc",
            Statistic::Des => "des",
            Statistic::Lrmax => "lrmax",
            Statistic::Lrmin => "lrmin",
            Statistic::Rlmax => "rlmax",
            Statistic::Rlmin => "rlmin",
            Statistic::Zeros => "zeros",
            Statistic::Fwd => "fwd",
        }
    }

    /// Evaluates the statistic; the empty word is outside every statistic's domain.
    pub fn eval(self, w: &[Letter]) -> Result<usize> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self.eval_nonempty(w))
    }

    pub(crate) fn eval_nonempty(self, w: &[Letter]) -> usize {
        match self {
            Statistic::Asc => asc(w),
            Statistic::Des => des(w),
            Statistic::Lrmax => lrmax(w),
            Statistic::Lrmin => lrmin(w),
            Statistic::Rlmax => rlmax(w),
            Statistic::Rlmin => rlmin(w),
            Statistic::Zeros => zeros(w),
            Statistic::Fwd => fwd(w),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::parse(s, "unknown statistic"))
    }
}

/// Shorthand for [`Statistic::eval`].
pub fn stat(w: &[Letter], which: Statistic) -> Result<usize> {
    which.eval(w)
}

/// A word over the alphabet `{0, 1, 2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TernaryWord(Word);

impl TernaryWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.iter().any(|&x| x > 2) {
            return Err(Error::InvalidTernary(format_letters(&letters)));
        }
        Ok(TernaryWord(Word(letters)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn twos(&self) -> usize {
        self.0.iter().filter(|&&x| x == 2).count()
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TernaryWord::new(parse_letters(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<Letter> {
        parse_letters(s).unwrap()
    }

    #[test]
    fn ascents_and_descents() {
        assert_eq!(asc(&w("00121")), 2);
        assert_eq!(asc(&w("000")), 0);
        assert_eq!(des(&w("0101312052")), 4);
        assert_eq!(asc(&[]), 0);
    }

    #[test]
    fn named_statistics() {
        assert_eq!(stat(&w("01123035523220"), Statistic::Fwd).unwrap(), 4);
        assert_eq!(stat(&w("01023200"), Statistic::Zeros).unwrap(), 4);
        assert_eq!(stat(&w("0123"), Statistic::Lrmax).unwrap(), 4);
        assert_eq!(stat(&w("0123"), Statistic::Rlmin).unwrap(), 4);
        assert_eq!(stat(&w("0123"), Statistic::Lrmin).unwrap(), 1);
        assert_eq!(stat(&w("0123"), Statistic::Rlmax).unwrap(), 1);
        assert_eq!(stat(&w("3"), Statistic::Fwd).unwrap(), 1);
        assert_eq!(stat(&[], Statistic::Asc), Err(Error::EmptyWord));
    }

    #[test]
    fn extrema_are_strict() {
        // the repeated 2 is not a new left-to-right maximum
        assert_eq!(lrmax(&w("0221")), 2);
        assert_eq!(rlmin(&w("1001")), 2);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("0102"), vec![0, 1, 0, 2]);
        assert_eq!(w("0, 1, 10"), vec![0, 1, 10]);
        assert_eq!(Word::new(vec![0, 1, 10]).to_string(), "0,1,10");
        assert_eq!(Word::new(vec![0, 1, 2]).to_string(), "012");
        assert!("01a".parse::<Word>().is_err());
        assert_eq!("fwd".parse::<Statistic>().unwrap(), Statistic::Fwd);
        assert!("nope".parse::<Statistic>().is_err());
    }

    #[test]
    fn ternary_alphabet() {
        assert!(TernaryWord::new(vec![0, 1, 2, 2]).is_ok());
        assert!(TernaryWord::new(vec![3]).is_err());
        assert_eq!("2102".parse::<TernaryWord>().unwrap().twos(), 2);
    }
}
