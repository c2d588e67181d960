//! Modified ascent sequences: at each ascent of the original sequence, from
//! left to right, every earlier letter at least as large as the ascent top
//! is incremented.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::sequence::{is_ascent_sequence, AscentSequence};
use crate::word::{format_letters, Letter, Word};

/// Image of an ascent sequence under [`modify`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModifiedAscentSequence(Word);

impl ModifiedAscentSequence {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn unmodify(&self) -> AscentSequence {
        unmodify(&self.0).expect("image of modify")
    }
}

impl Deref for ModifiedAscentSequence {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Display for ModifiedAscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Ascent tops of `x`, left to right. Both directions of the transform
/// leave this set unchanged.
fn ascent_tops(x: &[Letter]) -> impl DoubleEndedIterator<Item = usize> + '_ {
    (1..x.len()).filter(move |&i| x[i - 1] < x[i])
}

/// The transform on raw letters; `x` is assumed to be an ascent sequence.
pub fn modify_letters(x: &[Letter]) -> Vec<Letter> {
    let mut cur = x.to_vec();
    for top in ascent_tops(x) {
        let t = cur[top];
        for v in &mut cur[..top] {
            if *v >= t {
                *v += 1;
            }
        }
    }
    cur
}

pub fn modify(x: &AscentSequence) -> ModifiedAscentSequence {
    ModifiedAscentSequence(Word::new(modify_letters(x)))
}

/// Undoes [`modify`] by processing ascents right to left.
pub fn unmodify(w: &[Letter]) -> Result<AscentSequence> {
    let err = || Error::NotModified(format_letters(w));
    let mut cur = w.to_vec();
    let tops: Vec<usize> = ascent_tops(w).collect();
    for &top in tops.iter().rev() {
        let t = cur[top];
        for v in &mut cur[..top] {
            match (*v).cmp(&t) {
                std::cmp::Ordering::Greater => *v -= 1,
                std::cmp::Ordering::Equal => return Err(err()),
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if !is_ascent_sequence(&cur) || modify_letters(&cur) != w {
        return Err(err());
    }
    Ok(AscentSequence::new_unchecked(cur))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_letters;

    #[test]
    fn worked_trace() {
        let x: AscentSequence = "010221212".parse().unwrap();
        let m = modify(&x);
        assert_eq!(m.to_string(), "010441312");
        assert_eq!(m.unmodify(), x);
    }

    #[test]
    fn increasing_is_fixed() {
        assert_eq!(modify_letters(&[0, 1, 2, 3]), [0, 1, 2, 3]);
        assert_eq!(modify_letters(&[0]), [0]);
    }

    #[test]
    fn unmodify_rejects_outside_image() {
        // an earlier letter equal to an ascent top cannot survive modify
        assert!(unmodify(&parse_letters("0212").unwrap()).is_err());
        assert!(unmodify(&[]).is_err());
        assert!(unmodify(&[1]).is_err());
    }
}
