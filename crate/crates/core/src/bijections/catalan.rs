//! Catalan-family maps: 101-avoiding ascent sequences to 312-avoiding
//! permutations, and 231-avoiding permutations to non-crossing partitions.

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::pattern::{contains, Pattern};
use crate::perm::Permutation;
use crate::sequence::{is_ascent_sequence, AscentSequence};
use crate::word::{format_letters, Letter};

use super::rgf::is_noncrossing;

fn pattern(s: &str) -> Pattern {
    s.parse().expect("static pattern")
}

/// The 0's of `x` become `k, k-1, ..., 1` from left to right (`k` = number
/// of 0's), the 1's become the next block of integers in the same way, and
/// so on through the values of `x`.
pub fn seq101_to_perm312(x: &[Letter]) -> Result<Permutation> {
    if !is_ascent_sequence(x) {
        return Err(Error::NotAscentSequence(format_letters(x)));
    }
    if contains(x, &pattern("101")) {
        return Err(Error::contains(format_letters(x), "101"));
    }
    let top = *x.iter().max().unwrap();
    let mut entries = vec![0; x.len()];
    let mut offset = 0;
    for v in 0..=top {
        let positions: Vec<usize> = (0..x.len()).filter(|&i| x[i] == v).collect();
        for (rank, &i) in positions.iter().rev().enumerate() {
            entries[i] = offset + rank as Letter + 1;
        }
        offset += positions.len() as Letter;
    }
    Ok(Permutation::new_unchecked(entries))
}

/// Inverse of [`seq101_to_perm312`]: the entries `pi(1), ..., 1` get 0, then
/// the leftmost entry above those opens the class that gets 1, and so on.
pub fn perm312_to_seq101(pi: &Permutation) -> Result<AscentSequence> {
    if contains(pi, &pattern("201")) {
        return Err(Error::contains(pi, "312"));
    }
    let n = pi.len();
    let mut x = vec![0; n];
    let mut covered: Letter = 0;
    let mut value = 0;
    while (covered as usize) < n {
        let top = *pi.iter().find(|&&e| e > covered).unwrap();
        for (i, &e) in pi.iter().enumerate() {
            if e > covered && e <= top {
                x[i] = value;
            }
        }
        covered = top;
        value += 1;
    }
    AscentSequence::new(x)
}

/// Cuts `pi` after every ascent; the descending runs are the blocks.
pub fn perm231_to_ncpartition(pi: &Permutation) -> Result<SetPartition> {
    if contains(pi, &pattern("120")) {
        return Err(Error::contains(pi, "231"));
    }
    let mut blocks: Vec<Vec<Letter>> = Vec::new();
    let mut run = Vec::new();
    for (i, &e) in pi.iter().enumerate() {
        run.push(e);
        if i + 1 == pi.len() || e < pi[i + 1] {
            run.reverse();
            blocks.push(std::mem::take(&mut run));
        }
    }
    debug_assert!(blocks.windows(2).all(|b| b[0][0] < b[1][0]));
    Ok(SetPartition::from_standard(blocks))
}

/// Inverse of [`perm231_to_ncpartition`]: blocks in standard order, each
/// written in decreasing order.
pub fn ncpartition_to_perm231(sp: &SetPartition) -> Result<Permutation> {
    if !is_noncrossing(sp) {
        return Err(Error::InvalidPartition(format!("{sp} has a crossing")));
    }
    let entries = sp
        .blocks()
        .iter()
        .flat_map(|b| b.iter().rev().copied())
        .collect();
    Ok(Permutation::new_unchecked(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_letters;

    fn w(s: &str) -> Vec<Letter> {
        parse_letters(s).unwrap()
    }

    #[test]
    fn seq101_examples() {
        assert_eq!(seq101_to_perm312(&w("01023200")).unwrap().to_string(), "45378621");
        assert_eq!(seq101_to_perm312(&w("0")).unwrap().to_string(), "1");
        assert_eq!(seq101_to_perm312(&w("000")).unwrap().to_string(), "321");
    }

    #[test]
    fn perm312_examples() {
        let back = |s: &str| perm312_to_seq101(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(back("45378621"), "01023200");
        assert_eq!(back("1"), "0");
        assert_eq!(back("321"), "000");
    }

    #[test]
    fn membership_is_enforced() {
        assert!(matches!(
            seq101_to_perm312(&w("0101")),
            Err(Error::ContainsPattern { .. })
        ));
        assert!(seq101_to_perm312(&w("012143")).is_err());
        assert!(perm312_to_seq101(&"312".parse().unwrap()).is_err());
        assert!(perm231_to_ncpartition(&"231".parse().unwrap()).is_err());
        assert!(ncpartition_to_perm231(&"13-24".parse().unwrap()).is_err());
    }

    #[test]
    fn noncrossing_examples() {
        let sp = perm231_to_ncpartition(&"641325879".parse().unwrap()).unwrap();
        assert_eq!(sp.to_string(), "146-23-5-78-9");
        assert_eq!(ncpartition_to_perm231(&sp).unwrap().to_string(), "641325879");
        assert_eq!(
            perm231_to_ncpartition(&"1".parse().unwrap()).unwrap().to_string(),
            "1"
        );
    }
}
