//! Exhaustive generation of ascent sequences, pattern avoiders, restricted
//! and modified sequences, pattern-avoiding permutations and set partitions,
//! plus statistic distributions over those sets.

mod engine;
mod iter;
mod perms;
pub mod rule;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use engine::{count_lengths, CountOptions, Tally};
pub use iter::Sequences;
pub use perms::{PermAvoiders, SetPartitions};
pub(crate) use perms::blocks_of_rgf;
use rule::{Avoiding, ModifiedAvoiding, PrefixRule, Restricted, Unrestricted};

use crate::bijections::modify_letters;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::sequence::RestrictedAscentSequence;
use crate::word::{Letter, Statistic};

fn check_length(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("length must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// All ascent sequences of length `n`, lexicographically.
pub fn generate_ascent_sequences(n: usize) -> Result<Sequences<Unrestricted>> {
    check_length(n)?;
    Ok(Sequences::new(Unrestricted, n))
}

/// Number of ascent sequences of length `n`, by dynamic programming over
/// (ascents so far, last letter) rather than by listing.
pub fn count_ascent_sequences(n: usize) -> Result<BigUint> {
    check_length(n)?;
    // table[a][l]: prefixes with `a` ascents ending in letter `l`
    let mut table = vec![vec![BigUint::one()]];
    for _ in 1..n {
        let rows = table.len() + 1;
        let mut next = vec![vec![BigUint::zero(); rows + 1]; rows];
        for (a, row) in table.iter().enumerate() {
            for (last, count) in row.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for c in 0..=a + 1 {
                    let a2 = a + usize::from(c > last);
                    next[a2][c] += count;
                }
            }
        }
        table = next;
    }
    Ok(table.iter().flatten().sum())
}

/// Ascent sequences of length `n` avoiding `p`, lexicographically. Prefixes
/// that contain `p` are pruned.
pub fn avoiders(p: &Pattern, n: usize) -> Result<Sequences<Avoiding>> {
    check_length(n)?;
    Ok(Sequences::new(Avoiding::new(p.clone()), n))
}

/// Ascent sequences of length `n` whose modified form avoids `p`.
pub fn modified_avoiders(p: &Pattern, n: usize) -> Result<Sequences<ModifiedAvoiding>> {
    check_length(n)?;
    Ok(Sequences::new(ModifiedAvoiding::new(p.clone()), n))
}

/// Restricted ascent sequences of length `n`, lexicographically.
pub fn generate_restricted(n: usize) -> Result<impl Iterator<Item = RestrictedAscentSequence>> {
    check_length(n)?;
    Ok(Sequences::new(Restricted::default(), n)
        .map(|x| RestrictedAscentSequence::new_unchecked(x.into_word().into_letters())))
}

/// Permutations of `1..=n` avoiding the classical pattern `q` (written on
/// `0..k`), lexicographically.
pub fn perm_avoiders(q: &Pattern, n: usize) -> Result<PermAvoiders> {
    check_length(n)?;
    PermAvoiders::new(q.clone(), n)
}

/// All set partitions of `{1, ..., n}` in standard form.
pub fn generate_set_partitions(n: usize) -> Result<SetPartitions> {
    check_length(n)?;
    Ok(SetPartitions::new(n))
}

/// A counting sequence `n -> count` on `1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    pub label: String,
    values: Vec<BigUint>,
    /// False when the run was cut short; the values are then lower bounds.
    pub complete: bool,
}

impl CountSeries {
    pub fn new(label: impl Into<String>, values: Vec<BigUint>) -> Self {
        CountSeries {
            label: label.into(),
            values,
            complete: true,
        }
    }

    fn from_tally(label: String, tally: Tally) -> Self {
        CountSeries {
            label,
            values: tally.counts.into_iter().map(BigUint::from).collect(),
            complete: tally.complete,
        }
    }

    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    /// Count for length `n` (1-based).
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    pub fn to_u64(&self) -> Vec<u64> {
        self.values
            .iter()
            .map(|v| u64::try_from(v).expect("count exceeds u64"))
            .collect()
    }
}

impl fmt::Display for CountSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&items.join(","))
    }
}

/// Counts the prefix tree of any rule, lengths `1..=n_max`.
pub fn count_matching<R: PrefixRule>(
    rule: R,
    label: impl Into<String>,
    n_max: usize,
    opts: &CountOptions,
) -> Result<CountSeries> {
    check_length(n_max)?;
    Ok(CountSeries::from_tally(label.into(), count_lengths(rule, n_max, opts)))
}

/// `values[n] = |A_p(n)|` for `n = 1..=n_max`, single-threaded.
pub fn count_avoiders(p: &Pattern, n_max: usize) -> Result<CountSeries> {
    count_avoiders_with(p, n_max, &CountOptions::default())
}

pub fn count_avoiders_with(p: &Pattern, n_max: usize, opts: &CountOptions) -> Result<CountSeries> {
    count_matching(Avoiding::new(p.clone()), p.to_string(), n_max, opts)
}

/// Number of ascent sequences whose modified form avoids `p`.
pub fn count_modified_avoiders_with(
    p: &Pattern,
    n_max: usize,
    opts: &CountOptions,
) -> Result<CountSeries> {
    count_matching(ModifiedAvoiding::new(p.clone()), format!("modified {p}"), n_max, opts)
}

/// The sets a distribution can be taken over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetDescriptor {
    /// All ascent sequences.
    All,
    Avoiders(Pattern),
    /// Permutations avoiding a classical pattern.
    PermAvoiders(Pattern),
    /// Modified ascent sequences avoiding a pattern; statistics are read
    /// off the modified word.
    ModifiedAvoiders(Pattern),
    Restricted,
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetDescriptor::All => write!(f, "all"),
            SetDescriptor::Avoiders(p) => write!(f, "avoiders:{p}"),
            SetDescriptor::PermAvoiders(p) => write!(f, "perm-avoiders:{p}"),
            SetDescriptor::ModifiedAvoiders(p) => write!(f, "modified-avoiders:{p}"),
            SetDescriptor::Restricted => write!(f, "restricted"),
        }
    }
}

impl FromStr for SetDescriptor {
    type Err = Error;

    /// `all`, `restricted`, or `<kind>:<pattern>` with kind one of
    /// `avoiders`, `perm-avoiders`, `modified-avoiders`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "all" => return Ok(SetDescriptor::All),
            "restricted" => return Ok(SetDescriptor::Restricted),
            _ => {}
        }
        let (kind, pat) = s
            .split_once(':')
            .ok_or_else(|| Error::Domain(format!("unknown set descriptor {s:?}")))?;
        let pat: Pattern = pat.parse()?;
        match kind {
            "avoiders" => Ok(SetDescriptor::Avoiders(pat)),
            "perm-avoiders" => Ok(SetDescriptor::PermAvoiders(pat)),
            "modified-avoiders" => Ok(SetDescriptor::ModifiedAvoiders(pat)),
            _ => Err(Error::Domain(format!("unknown set descriptor {s:?}"))),
        }
    }
}

/// Distribution of one or more statistics over a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    pub stats: Vec<Statistic>,
    pub cells: BTreeMap<Vec<usize>, u64>,
}

impl Histogram {
    pub fn new(stats: Vec<Statistic>) -> Self {
        Histogram {
            stats,
            cells: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, w: &[Letter]) {
        let key = self.stats.iter().map(|s| s.eval_nonempty(w)).collect();
        *self.cells.entry(key).or_insert(0) += 1;
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    pub fn get(&self, key: &[usize]) -> u64 {
        self.cells.get(key).copied().unwrap_or(0)
    }

    /// Marginal distribution of one coordinate, indexed by value.
    pub fn marginal(&self, coord: usize) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.cells {
            *out.entry(k[coord]).or_insert(0) += v;
        }
        out
    }
}

/// Histogram of `s` over `A_p(n)`.
pub fn distribution(p: &Pattern, n: usize, s: Statistic) -> Result<Histogram> {
    joint_distribution(&SetDescriptor::Avoiders(p.clone()), n, &[s])
}

/// Joint histogram of the given statistics over the described set.
pub fn joint_distribution(set: &SetDescriptor, n: usize, stats: &[Statistic]) -> Result<Histogram> {
    check_length(n)?;
    if stats.is_empty() {
        return Err(Error::Domain("at least one statistic is required".into()));
    }
    let mut hist = Histogram::new(stats.to_vec());
    match set {
        SetDescriptor::All => engine::for_each_of_length(Unrestricted, n, |w| hist.add(w)),
        SetDescriptor::Avoiders(p) => {
            engine::for_each_of_length(Avoiding::new(p.clone()), n, |w| hist.add(w))
        }
        SetDescriptor::Restricted => {
            engine::for_each_of_length(Restricted::default(), n, |w| hist.add(w))
        }
        SetDescriptor::ModifiedAvoiders(p) => {
            engine::for_each_of_length(ModifiedAvoiding::new(p.clone()), n, |w| {
                hist.add(&modify_letters(w))
            })
        }
        SetDescriptor::PermAvoiders(q) => {
            for pi in perm_avoiders(q, n)? {
                hist.add(&pi);
            }
        }
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::contains;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn strings<I: Iterator<Item = T>, T: ToString>(it: I) -> Vec<String> {
        it.map(|x| x.to_string()).collect()
    }

    #[test]
    fn small_ascent_sequences() {
        assert_eq!(strings(generate_ascent_sequences(1).unwrap()), ["0"]);
        assert_eq!(strings(generate_ascent_sequences(2).unwrap()), ["00", "01"]);
        assert_eq!(
            strings(generate_ascent_sequences(3).unwrap()),
            ["000", "001", "010", "011", "012"]
        );
        assert_eq!(generate_ascent_sequences(5).unwrap().count(), 53);
        assert!(generate_ascent_sequences(0).is_err());
    }

    #[test]
    fn dp_count_agrees_with_listing() {
        for n in 1..=8 {
            let listed = generate_ascent_sequences(n).unwrap().count();
            assert_eq!(count_ascent_sequences(n).unwrap(), BigUint::from(listed), "n={n}");
        }
        assert_eq!(count_ascent_sequences(3).unwrap(), BigUint::from(5u32));
        assert_eq!(count_ascent_sequences(7).unwrap(), BigUint::from(1014u32));
    }

    #[test]
    fn length_two_patterns() {
        for n in 1..=6 {
            assert_eq!(strings(avoiders(&p("01"), n).unwrap()), ["0".repeat(n)]);
            let inc: String = (0..n).map(|i| char::from_digit(i as u32, 10).unwrap()).collect();
            assert_eq!(strings(avoiders(&p("00"), n).unwrap()), [inc]);
        }
    }

    #[test]
    fn avoiders_of_012() {
        assert_eq!(
            strings(avoiders(&p("012"), 4).unwrap()),
            ["0000", "0001", "0010", "0011", "0100", "0101", "0110", "0111"]
        );
    }

    #[test]
    fn avoiding_the_single_letter_pattern_yields_nothing() {
        assert_eq!(avoiders(&p("0"), 3).unwrap().count(), 0);
        assert_eq!(count_avoiders(&p("0"), 3).unwrap().to_u64(), [0, 0, 0]);
    }

    #[test]
    fn pruned_stream_matches_filtered_stream() {
        for pat in ["101", "0012", "210", "1012"] {
            let pat = p(pat);
            for n in 1..=7 {
                let pruned: Vec<_> = avoiders(&pat, n).unwrap().collect();
                let filtered: Vec<_> = generate_ascent_sequences(n)
                    .unwrap()
                    .filter(|x| !contains(x, &pat))
                    .collect();
                assert_eq!(pruned, filtered, "{pat} n={n}");
            }
        }
    }

    #[test]
    fn table_rows() {
        assert_eq!(
            count_avoiders(&p("101"), 10).unwrap().to_u64(),
            [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
        );
        assert_eq!(
            count_avoiders(&p("000"), 10).unwrap().to_u64(),
            [1, 2, 4, 10, 27, 83, 277, 1015, 4007, 17047]
        );
        assert_eq!(
            count_avoiders(&p("210"), 9).unwrap().to_u64(),
            [1, 2, 5, 15, 52, 202, 859, 3930, 19095]
        );
    }

    #[test]
    fn split_counts_equal_sequential_counts() {
        let seq = count_avoiders(&p("201"), 10).unwrap();
        for threads in [2, 3, 5] {
            for depth in [1, 3, 4, 6] {
                let opts = CountOptions {
                    threads,
                    split_depth: depth,
                    deadline: None,
                };
                assert_eq!(count_avoiders_with(&p("201"), 10, &opts).unwrap(), seq);
            }
        }
    }

    #[test]
    fn expired_deadline_marks_series_incomplete() {
        let opts = CountOptions {
            deadline: Some(std::time::Instant::now()),
            ..CountOptions::default()
        };
        let series = count_avoiders_with(&p("201"), 12, &opts).unwrap();
        assert!(!series.complete);
    }

    #[test]
    fn restricted_sequences() {
        assert_eq!(strings(generate_restricted(1).unwrap()), ["0"]);
        assert_eq!(generate_restricted(3).unwrap().count(), 5);
        assert!(generate_restricted(9)
            .unwrap()
            .any(|x| x.to_string() == "010221212"));
    }

    #[test]
    fn permutation_avoiders() {
        assert_eq!(perm_avoiders(&p("201"), 4).unwrap().count(), 14);
        assert_eq!(
            strings(perm_avoiders(&p("120"), 3).unwrap()),
            ["123", "132", "213", "312", "321"]
        );
        assert_eq!(strings(perm_avoiders(&p("01"), 1).unwrap()), ["1"]);
        assert!(perm_avoiders(&p("001"), 3).is_err());
    }

    #[test]
    fn set_partitions() {
        assert_eq!(generate_set_partitions(3).unwrap().count(), 5);
        assert_eq!(strings(generate_set_partitions(1).unwrap()), ["1"]);
        assert!(generate_set_partitions(6)
            .unwrap()
            .any(|sp| sp.to_string() == "124-36-5"));
        let bells: Vec<usize> = (1..=7)
            .map(|n| generate_set_partitions(n).unwrap().count())
            .collect();
        assert_eq!(bells, [1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn distributions() {
        let h = distribution(&p("001"), 4, Statistic::Asc).unwrap();
        assert_eq!(h.marginal(0).into_iter().collect::<Vec<_>>(), [(0, 1), (1, 3), (2, 3), (3, 1)]);
        let h = distribution(&p("012"), 4, Statistic::Asc).unwrap();
        assert_eq!(h.marginal(0).into_iter().collect::<Vec<_>>(), [(0, 1), (1, 6), (2, 1)]);
        let h = distribution(&p("101"), 5, Statistic::Asc).unwrap();
        assert_eq!(
            h.marginal(0).into_iter().collect::<Vec<_>>(),
            [(0, 1), (1, 10), (2, 20), (3, 10), (4, 1)]
        );
    }

    #[test]
    fn joint_distributions() {
        let seqs = joint_distribution(
            &"avoiders:021".parse().unwrap(),
            3,
            &[Statistic::Asc, Statistic::Rlmin],
        )
        .unwrap();
        let perms = joint_distribution(
            &"perm-avoiders:021".parse().unwrap(),
            3,
            &[Statistic::Asc, Statistic::Rlmin],
        )
        .unwrap();
        assert_eq!(seqs.total(), 5);
        assert_eq!(seqs, perms);

        let zeros = joint_distribution(
            &SetDescriptor::Avoiders(p("01")),
            6,
            &[Statistic::Asc, Statistic::Zeros],
        )
        .unwrap();
        assert_eq!(zeros.cells.into_iter().collect::<Vec<_>>(), [(vec![0, 6], 1)]);

        let fwd = joint_distribution(
            &SetDescriptor::Avoiders(p("0012")),
            4,
            &[Statistic::Asc, Statistic::Fwd],
        )
        .unwrap();
        let zeros = joint_distribution(
            &SetDescriptor::Avoiders(p("0012")),
            4,
            &[Statistic::Asc, Statistic::Zeros],
        )
        .unwrap();
        assert_eq!(fwd.cells, zeros.cells);
    }

    #[test]
    fn unknown_descriptor_is_rejected() {
        assert!("widgets:01".parse::<SetDescriptor>().is_err());
        assert!("avoiders".parse::<SetDescriptor>().is_err());
    }
}
