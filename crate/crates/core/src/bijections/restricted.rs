//! Restricted ascent sequences: the ascent-preserving swap with 021-avoiders,
//! the tail reduction at the rightmost maximal letter, and the recursive map
//! `phi` onto 231-avoiding permutations.

use crate::error::{Error, Result};
use crate::pattern::{contains, Pattern};
use crate::perm::Permutation;
use crate::sequence::{is_ascent_sequence, is_restricted, maximal_positions, AscentSequence, RestrictedAscentSequence};
use crate::word::{asc, format_letters, Letter};

fn p021() -> Pattern {
    "021".parse().expect("static pattern")
}

/// Applies `f(current lr-max, letter)` to every letter that is not a
/// left-to-right maximum.
fn map_between_maxima(x: &[Letter], f: impl Fn(Letter, Letter) -> Letter) -> Vec<Letter> {
    let mut out = Vec::with_capacity(x.len());
    let mut max: Option<Letter> = None;
    for &v in x {
        match max {
            Some(m) if v <= m => out.push(f(m, v)),
            _ => {
                max = Some(v);
                out.push(v);
            }
        }
    }
    out
}

/// Between successive left-to-right maxima (and after the last one) every
/// letter equal to `max - 1` becomes 0. Ascents are preserved.
pub fn restricted_to_021(x: &RestrictedAscentSequence) -> AscentSequence {
    let y = map_between_maxima(x, |m, v| if m >= 1 && v == m - 1 { 0 } else { v });
    AscentSequence::new_unchecked(y)
}

/// Inverse of [`restricted_to_021`]: between left-to-right maxima, 0
/// becomes `max - 1`.
pub fn seq021_to_restricted(x: &[Letter]) -> Result<RestrictedAscentSequence> {
    if !is_ascent_sequence(x) {
        return Err(Error::NotAscentSequence(format_letters(x)));
    }
    if contains(x, &p021()) {
        return Err(Error::contains(format_letters(x), "021"));
    }
    let y = map_between_maxima(x, |m, v| if v == 0 && m >= 1 { m - 1 } else { v });
    RestrictedAscentSequence::new(y)
}

/// `x = L m R` split at the last repetition of the rightmost maximal letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailSplit {
    /// Everything before the last repetition of `m`.
    pub left: Vec<Letter>,
    pub m: Letter,
    /// Whether the rightmost maximal letter is immediately repeated.
    pub repeated: bool,
    /// `R` with its first letter subtracted from every letter.
    pub reduced_right: Vec<Letter>,
}

/// Splits a restricted sequence at the last repetition of its rightmost
/// maximal letter. When `R` is nonempty its first letter is `m - 1`, and
/// subtracting it leaves a restricted ascent sequence.
pub fn reduce_tail(x: &RestrictedAscentSequence) -> TailSplit {
    split_tail(x)
}

fn split_tail(x: &[Letter]) -> TailSplit {
    let last = *maximal_positions(x).last().expect("nonempty sequence");
    let p = last.last_repetition;
    let right = &x[p + 1..];
    let shift = right.first().copied().unwrap_or(0);
    TailSplit {
        left: x[..p].to_vec(),
        m: x[p],
        repeated: last.is_repeated(),
        reduced_right: right.iter().map(|&v| v - shift).collect(),
    }
}

/// Writes `omega(x, [a, a + |x| - 1])` into `out`.
fn omega(x: &[Letter], a: Letter, out: &mut Vec<Letter>) {
    if x.is_empty() {
        return;
    }
    let split = split_tail(x);
    let l = split.left.len() as Letter;
    if split.repeated {
        out.push(a);
        omega(&split.left, a + 1, out);
    } else {
        out.push(a + l);
        omega(&split.left, a, out);
    }
    omega(&split.reduced_right, a + l + 1, out);
}

/// The recursive bijection from restricted ascent sequences onto
/// 231-avoiding permutations; ascents of `x` become descents of `phi(x)`.
pub fn phi(x: &RestrictedAscentSequence) -> Permutation {
    let mut out = Vec::with_capacity(x.len());
    omega(x, 1, &mut out);
    Permutation::new_unchecked(out)
}

/// Recovers the sequence from `omega(x, [a, ..])`, where `pi` holds values
/// `a..a+len`.
fn unomega(pi: &[Letter], a: Letter) -> Option<Vec<Letter>> {
    let n = pi.len();
    if n == 0 {
        return Some(Vec::new());
    }
    // leading run a, a+1, ... comes from repeated copies of the maximal letter
    let run = pi
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| v == a + i as Letter)
        .count();
    if run == n {
        return Some(vec![0; n]);
    }
    let first = pi[run];
    let base = a + run as Letter;
    let left_len = first.checked_sub(base)? as usize;
    if left_len == 0 || run + 1 + left_len > n {
        return None;
    }
    let left_vals = &pi[run + 1..run + 1 + left_len];
    let right_vals = &pi[run + 1 + left_len..];
    if left_vals.iter().any(|&v| v < base || v >= first) || right_vals.iter().any(|&v| v <= first) {
        return None;
    }
    let prefix = unomega(left_vals, base)?;
    let right = unomega(right_vals, first + 1)?;
    let m = asc(&prefix) as Letter + 1;
    let mut x = prefix;
    x.extend(std::iter::repeat(m).take(run + 1));
    x.extend(right.iter().map(|&v| v + m - 1));
    Some(x)
}

/// Inverse of [`phi`].
pub fn phi_inverse(pi: &Permutation) -> Result<RestrictedAscentSequence> {
    let err = || Error::contains(pi, "231");
    if contains(pi, &"120".parse().expect("static pattern")) {
        return Err(err());
    }
    let x = unomega(pi, 1).ok_or_else(err)?;
    if !is_restricted(&x) {
        return Err(err());
    }
    let x = RestrictedAscentSequence::new_unchecked(x);
    if phi(&x) != *pi {
        return Err(err());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_letters;

    fn r(s: &str) -> RestrictedAscentSequence {
        s.parse().unwrap()
    }

    #[test]
    fn swap_example() {
        let x = r("0,1,2,3,2,3,4,4,3,4,6,5");
        let y = restricted_to_021(&x);
        assert_eq!(y.word().letters(), parse_letters("0,1,2,3,0,3,4,4,0,4,6,0").unwrap());
        assert_eq!(seq021_to_restricted(&y).unwrap(), x);
        assert_eq!(restricted_to_021(&r("0")).to_string(), "0");
        assert_eq!(restricted_to_021(&r("0123")).to_string(), "0123");
    }

    #[test]
    fn swap_rejects_021_occurrence() {
        assert!(seq021_to_restricted(&parse_letters("0121").unwrap()).is_err());
    }

    #[test]
    fn reduction_example() {
        let split = reduce_tail(&r("00101332232434665"));
        assert_eq!(format_letters(&split.left), "001013");
        assert_eq!(split.m, 3);
        assert!(split.repeated);
        assert_eq!(format_letters(&split.reduced_right), "0010212443");
        assert!(is_restricted(&split.reduced_right));

        let split = reduce_tail(&r("0123"));
        assert_eq!(format_letters(&split.left), "012");
        assert_eq!(split.m, 3);
        assert!(split.reduced_right.is_empty());
    }

    #[test]
    fn phi_example() {
        assert_eq!(phi(&r("011213232")).to_string(), "641325879");
        assert_eq!(phi(&r("0")).to_string(), "1");
        assert_eq!(phi(&r("00")).to_string(), "12");
    }

    #[test]
    fn phi_inverse_example() {
        let back = phi_inverse(&"641325879".parse().unwrap()).unwrap();
        assert_eq!(back.to_string(), "011213232");
        assert!(phi_inverse(&"231".parse().unwrap()).is_err());
    }
}
