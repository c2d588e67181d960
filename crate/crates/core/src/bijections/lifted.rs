//! 102-avoiding ascent sequences and ternary words with an even number of 2's.
//!
//! A 102-avoider is a weakly increasing head followed by lifted binary
//! strings: blocks whose letters are `b` or `b + 1` for a block base `b`,
//! with bases strictly decreasing and the first base below the last head
//! letter. The ternary encoding has one letter for each position after the
//! first. Head rises are written 1 and repeats 0. A block start is 2, a base
//! letter 0, and a `b + 1` letter 1. Each block start is then paired with the
//! rise to `b + 1` in the head, and that rise is rewritten from 1 to 2.

use crate::error::{Error, Result};
use crate::pattern::{contains, Pattern};
use crate::sequence::{is_ascent_sequence, AscentSequence};
use crate::word::{format_letters, Letter, TernaryWord};

/// One lifted binary string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedBlock {
    pub base: Letter,
    pub letters: Vec<Letter>,
}

/// Head plus lifted binary strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedBinaryDecomposition {
    pub head: Vec<Letter>,
    pub blocks: Vec<LiftedBlock>,
}

impl LiftedBinaryDecomposition {
    /// Splits `x` into its maximal weakly increasing head and the lifted
    /// binary strings after it. Fails if `x` does not have that shape.
    pub fn parse(x: &[Letter]) -> Result<Self> {
        if !is_ascent_sequence(x) {
            return Err(Error::NotAscentSequence(format_letters(x)));
        }
        let k = 1 + x.windows(2).take_while(|p| p[0] <= p[1]).count();
        let head = x[..k].to_vec();
        let mut blocks: Vec<LiftedBlock> = Vec::new();
        let mut ceiling = head[k - 1];
        for &v in &x[k..] {
            match blocks.last_mut() {
                Some(block) if v >= block.base => {
                    if v > block.base + 1 {
                        return Err(Error::Domain(format!(
                            "{} is not a head followed by lifted binary strings",
                            format_letters(x)
                        )));
                    }
                    block.letters.push(v);
                }
                _ => {
                    if v >= ceiling {
                        return Err(Error::Domain(format!(
                            "{} is not a head followed by lifted binary strings",
                            format_letters(x)
                        )));
                    }
                    ceiling = v;
                    blocks.push(LiftedBlock {
                        base: v,
                        letters: vec![v],
                    });
                }
            }
        }
        Ok(LiftedBinaryDecomposition { head, blocks })
    }

    pub fn to_letters(&self) -> Vec<Letter> {
        let mut out = self.head.clone();
        for b in &self.blocks {
            out.extend_from_slice(&b.letters);
        }
        out
    }
}

fn p102() -> Pattern {
    "102".parse().expect("static pattern")
}

/// Encodes a 102-avoiding ascent sequence of length `n` as a ternary word
/// of length `n - 1` with an even number of 2's.
pub fn seq102_to_ternary(x: &[Letter]) -> Result<TernaryWord> {
    if !is_ascent_sequence(x) {
        return Err(Error::NotAscentSequence(format_letters(x)));
    }
    if contains(x, &p102()) {
        return Err(Error::contains(format_letters(x), "102"));
    }
    let dec = LiftedBinaryDecomposition::parse(x)?;
    let head = &dec.head;
    // t[i - 1] encodes x[i]
    let mut t: Vec<Letter> = head
        .windows(2)
        .map(|p| if p[0] == p[1] { 0 } else { 1 })
        .collect();
    for block in &dec.blocks {
        t.push(2);
        t.extend(block.letters[1..].iter().map(|&v| v - block.base));
        let target = block.base + 1;
        let j = head.iter().position(|&v| v == target).ok_or_else(|| {
            Error::Domain(format!("{target} missing from the head of {}", format_letters(x)))
        })?;
        debug_assert!(j >= 1 && t[j - 1] == 1);
        t[j - 1] = 2;
    }
    TernaryWord::new(t)
}

/// Decodes a ternary word with an even number of 2's.
///
/// With `2k` twos, the `(k+1)`-st two starts the first block. The letters
/// before it are read as head rises (1 or 2) and repeats (0). The `i`-th
/// block start after the head takes the value one less than the head letter
/// under the `(k+1-i)`-th two.
pub fn ternary_to_seq102(t: &TernaryWord) -> Result<AscentSequence> {
    let t = t.letters();
    let twos: Vec<usize> = (0..t.len()).filter(|&i| t[i] == 2).collect();
    if twos.len() % 2 != 0 {
        return Err(Error::InvalidTernary(format_letters(t)));
    }
    let k = twos.len() / 2;
    let head_end = if k == 0 { t.len() } else { twos[k] };
    let mut x: Vec<Letter> = Vec::with_capacity(t.len() + 1);
    x.push(0);
    for &ti in &t[..head_end] {
        let prev = *x.last().unwrap();
        x.push(if ti == 0 { prev } else { prev + 1 });
    }
    let mut base = 0;
    for (i, &ti) in t[head_end..].iter().enumerate() {
        let pos = head_end + i;
        if ti == 2 {
            let nth = twos.iter().position(|&q| q == pos).unwrap();
            let partner = twos[2 * k - 1 - nth];
            // x index of t[partner] is partner + 1
            base = x[partner + 1] - 1;
            x.push(base);
        } else {
            x.push(base + ti);
        }
    }
    AscentSequence::new(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_letters;

    const X: &str = "0,1,2,2,2,3,4,5,5,6,7,6,7,6,6,5,5,6,3,0";
    const T: &str = "2100121022210020122";

    #[test]
    fn worked_example() {
        let x = parse_letters(X).unwrap();
        assert_eq!(seq102_to_ternary(&x).unwrap().to_string(), T);
        let back = ternary_to_seq102(&T.parse().unwrap()).unwrap();
        assert_eq!(back.word().letters(), &x[..]);
    }

    #[test]
    fn decomposition_of_displayed_sequence() {
        let x = parse_letters("0,0,1,2,2,3,4,5,6,6,5,6,6,5,6,4,4,5,4,2,0,1,0,0,1").unwrap();
        let dec = LiftedBinaryDecomposition::parse(&x).unwrap();
        assert_eq!(dec.head, parse_letters("0012234566").unwrap());
        let bases: Vec<Letter> = dec.blocks.iter().map(|b| b.base).collect();
        assert_eq!(bases, [5, 4, 2, 0]);
        assert_eq!(dec.to_letters(), x);
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(seq102_to_ternary(&[0]).unwrap().to_string(), "");
        assert_eq!(
            ternary_to_seq102(&TernaryWord::new(vec![]).unwrap()).unwrap().to_string(),
            "0"
        );
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(matches!(
            ternary_to_seq102(&"012".parse().unwrap()),
            Err(Error::InvalidTernary(_))
        ));
        assert!(matches!(
            seq102_to_ternary(&parse_letters("0102").unwrap()),
            Err(Error::ContainsPattern { .. })
        ));
        assert!(LiftedBinaryDecomposition::parse(&parse_letters("01202").unwrap()).is_err());
    }
}
