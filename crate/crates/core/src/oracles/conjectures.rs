//! Numeric checks of the open conjectures: brute-force enumeration against
//! the conjectured count or distribution, one verdict per length.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::enumerate::{
    count_avoiders_with, count_modified_avoiders_with, joint_distribution, CountOptions, CountSeries,
    Histogram, SetDescriptor,
};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::word::Statistic;

use super::closed::{bell, binomial_transform_catalan, catalan, dyck_height5_count, narayana, stirling2_row};
use super::crossing::non_k_crossing_partition_count;

/// Patterns conjectured to be Bell-counted on modified ascent sequences.
pub const MODIFIED_BELL_PATTERNS: [&str; 6] = ["101", "0101", "1021", "1102", "1120", "1210"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConjectureId {
    /// `(asc, rlmin)` on 021-avoiders and on 132-avoiding permutations.
    Bi021,
    /// 0012-avoiders: Catalan count and three bistatistic identities.
    Avoid0012,
    /// 210-avoiders and non-3-crossing partitions.
    Avoid210,
    /// 0123-avoiders and Dyck paths of height at most 5.
    Avoid0123,
    /// 0021 and 1012 have the same avoidance sequence.
    Wilf0021,
    /// 0021 and 1012 avoiders follow the binomial transform of Catalan.
    Count0021,
    /// Modified avoiders of six patterns: Bell counts, reversed block
    /// distribution.
    Modified,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 7] = [
        ConjectureId::Bi021,
        ConjectureId::Avoid0012,
        ConjectureId::Avoid210,
        ConjectureId::Avoid0123,
        ConjectureId::Wilf0021,
        ConjectureId::Count0021,
        ConjectureId::Modified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::Bi021 => "bi-021",
            ConjectureId::Avoid0012 => "0012",
            ConjectureId::Avoid210 => "210",
            ConjectureId::Avoid0123 => "0123",
            ConjectureId::Wilf0021 => "0021-wilf",
            ConjectureId::Count0021 => "0021-count",
            ConjectureId::Modified => "modi",
        }
    }

    /// Largest length that finishes in minutes by brute force.
    pub fn default_n_max(self) -> usize {
        match self {
            ConjectureId::Bi021 | ConjectureId::Avoid0012 | ConjectureId::Modified => 10,
            ConjectureId::Avoid210 => 12,
            ConjectureId::Avoid0123 | ConjectureId::Wilf0021 | ConjectureId::Count0021 => 11,
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Domain(format!("unknown conjecture {s:?}")))
    }
}

/// Concrete evidence against a conjecture at one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Count {
        what: String,
        expected: BigUint,
        found: BigUint,
    },
    Histogram {
        what: String,
        key: Vec<usize>,
        expected: u64,
        found: u64,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Count { what, expected, found } => {
                write!(f, "{what}: expected {expected}, found {found}")
            }
            Witness::Histogram {
                what,
                key,
                expected,
                found,
            } => {
                let key: Vec<String> = key.iter().map(|k| k.to_string()).collect();
                write!(f, "{what} at ({}): expected {expected}, found {found}", key.join(","))
            }
        }
    }
}

/// Verdict at one length, with the counts that were compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthVerdict {
    pub n: usize,
    pub observed: Vec<(String, BigUint)>,
    /// `None` when every check at this length holds.
    pub failure: Option<Witness>,
}

impl LengthVerdict {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureResult {
    pub id: ConjectureId,
    pub n_max: usize,
    pub verdicts: Vec<LengthVerdict>,
    /// False when a count was cut short; verdicts then cover fewer lengths.
    pub complete: bool,
}

impl ConjectureResult {
    pub fn holds(&self) -> bool {
        self.complete && self.verdicts.iter().all(LengthVerdict::holds)
    }

    pub fn first_failure(&self) -> Option<&LengthVerdict> {
        self.verdicts.iter().find(|v| !v.holds())
    }
}

fn pattern(s: &str) -> Pattern {
    s.parse().expect("static pattern")
}

/// Collects the checks at one length, keeping the first failure.
struct Checker {
    verdict: LengthVerdict,
}

impl Checker {
    fn new(n: usize) -> Self {
        Checker {
            verdict: LengthVerdict {
                n,
                observed: Vec::new(),
                failure: None,
            },
        }
    }

    fn observe(&mut self, label: impl Into<String>, v: &BigUint) {
        self.verdict.observed.push((label.into(), v.clone()));
    }

    fn fail(&mut self, w: Witness) {
        if self.verdict.failure.is_none() {
            self.verdict.failure = Some(w);
        }
    }

    fn count(&mut self, what: impl Into<String>, expected: &BigUint, found: &BigUint) {
        if expected != found {
            self.fail(Witness::Count {
                what: what.into(),
                expected: expected.clone(),
                found: found.clone(),
            });
        }
    }

    fn histograms(&mut self, what: &str, expected: &Histogram, found: &Histogram) {
        let keys = expected.cells.keys().chain(found.cells.keys());
        if let Some(key) = keys.into_iter().find(|k| expected.get(k) != found.get(k)) {
            self.fail(Witness::Histogram {
                what: what.to_string(),
                key: key.clone(),
                expected: expected.get(key),
                found: found.get(key),
            });
        }
    }

    fn finish(self) -> LengthVerdict {
        self.verdict
    }
}

/// Series for each pattern, with a flag for whether all ran to completion.
fn series(patterns: &[&str], n_max: usize, opts: &CountOptions) -> Result<(Vec<CountSeries>, bool)> {
    let all = patterns
        .iter()
        .map(|p| count_avoiders_with(&pattern(p), n_max, opts))
        .collect::<Result<Vec<_>>>()?;
    let complete = all.iter().all(|s| s.complete);
    Ok((all, complete))
}

/// Lengths whose counts are exact in every series.
fn exact_lengths(series: &[CountSeries], n_max: usize) -> usize {
    if series.iter().all(|s| s.complete) {
        n_max
    } else {
        // a cut-short run may have partial counts at every length
        0
    }
}

fn count_against(
    label: &str,
    n_max: usize,
    opts: &CountOptions,
    oracle_name: &str,
    oracle: impl Fn(usize) -> Result<BigUint>,
) -> Result<(Vec<LengthVerdict>, bool)> {
    let (all, complete) = series(&[label], n_max, opts)?;
    let mut out = Vec::new();
    for n in 1..=exact_lengths(&all, n_max) {
        let mut c = Checker::new(n);
        let found = all[0].get(n).unwrap();
        let expected = oracle(n)?;
        c.observe(format!("A_{label}"), found);
        c.observe(oracle_name, &expected);
        c.count(format!("|A_{label}| vs {oracle_name}"), &expected, found);
        out.push(c.finish());
    }
    Ok((out, complete))
}

fn hist(set: SetDescriptor, n: usize, stats: &[Statistic]) -> Result<Histogram> {
    joint_distribution(&set, n, stats)
}

/// Checks `id` for every length `1..=n_max`.
pub fn run_conjecture(id: ConjectureId, n_max: usize, opts: &CountOptions) -> Result<ConjectureResult> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    use Statistic::{Asc, Fwd, Rlmax, Rlmin, Zeros};
    let (verdicts, complete) = match id {
        ConjectureId::Bi021 => {
            let mut out = Vec::new();
            for n in 1..=n_max {
                let mut c = Checker::new(n);
                let seqs = hist(SetDescriptor::Avoiders(pattern("021")), n, &[Asc, Rlmin])?;
                let perms = hist(SetDescriptor::PermAvoiders(pattern("021")), n, &[Asc, Rlmin])?;
                c.observe("A_021", &seqs.total().into());
                c.observe("Av_132", &perms.total().into());
                c.histograms("(asc,rlmin) on A_021 vs Av_132", &perms, &seqs);
                out.push(c.finish());
            }
            (out, true)
        }
        ConjectureId::Avoid0012 => {
            let mut out = Vec::new();
            for n in 1..=n_max {
                let mut c = Checker::new(n);
                let fwd = hist(SetDescriptor::Avoiders(pattern("0012")), n, &[Asc, Fwd])?;
                let zeros = hist(SetDescriptor::Avoiders(pattern("0012")), n, &[Asc, Zeros])?;
                let perms = hist(SetDescriptor::PermAvoiders(pattern("021")), n, &[Asc, Rlmax])?;
                let total = BigUint::from(fwd.total());
                c.observe("A_0012", &total);
                c.observe("catalan", &catalan(n));
                c.count("|A_0012| vs catalan", &catalan(n), &total);
                c.histograms("(asc,fwd) on A_0012 vs (asc,rlmax) on Av_132", &perms, &fwd);
                for (k, &found) in &fwd.marginal(0) {
                    let expected = narayana(n, k + 1)?;
                    c.count(format!("asc = {k} on A_0012 vs narayana"), &expected, &found.into());
                }
                c.histograms("(asc,fwd) vs (asc,zeros) on A_0012", &fwd, &zeros);
                out.push(c.finish());
            }
            (out, true)
        }
        ConjectureId::Avoid210 => count_against("210", n_max, opts, "non-3-crossing", |n| {
            non_k_crossing_partition_count(n, 3)
        })?,
        ConjectureId::Avoid0123 => count_against("0123", n_max, opts, "dyck height <= 5", dyck_height5_count)?,
        ConjectureId::Wilf0021 => {
            let (all, complete) = series(&["0021", "1012"], n_max, opts)?;
            let mut out = Vec::new();
            for n in 1..=exact_lengths(&all, n_max) {
                let mut c = Checker::new(n);
                let (a, b) = (all[0].get(n).unwrap(), all[1].get(n).unwrap());
                c.observe("A_0021", a);
                c.observe("A_1012", b);
                c.count("|A_1012| vs |A_0021|", a, b);
                out.push(c.finish());
            }
            (out, complete)
        }
        ConjectureId::Count0021 => {
            let (all, complete) = series(&["0021", "1012"], n_max, opts)?;
            let mut out = Vec::new();
            for n in 1..=exact_lengths(&all, n_max) {
                let mut c = Checker::new(n);
                let expected = binomial_transform_catalan(n)?;
                c.observe("binomial transform", &expected);
                for (label, s) in ["0021", "1012"].iter().zip(&all) {
                    let found = s.get(n).unwrap();
                    c.observe(format!("A_{label}"), found);
                    c.count(format!("|A_{label}| vs binomial transform"), &expected, found);
                }
                out.push(c.finish());
            }
            (out, complete)
        }
        ConjectureId::Modified => {
            let all = MODIFIED_BELL_PATTERNS
                .iter()
                .map(|p| count_modified_avoiders_with(&pattern(p), n_max, opts))
                .collect::<Result<Vec<_>>>()?;
            let complete = all.iter().all(|s| s.complete);
            let mut out = Vec::new();
            for n in 1..=exact_lengths(&all, n_max) {
                let mut c = Checker::new(n);
                let expected = bell(n)?;
                let blocks = stirling2_row(n);
                c.observe("bell", &expected);
                for (label, s) in MODIFIED_BELL_PATTERNS.iter().zip(&all) {
                    let found = s.get(n).unwrap();
                    c.observe(format!("modified A_{label}"), found);
                    c.count(format!("modified |A_{label}| vs bell"), &expected, found);
                    let h = hist(SetDescriptor::ModifiedAvoiders(pattern(label)), n, &[Asc])?;
                    for k in 0..n {
                        let found = BigUint::from(h.get(&[k]));
                        let expected = &blocks[n - k];
                        c.count(
                            format!("modified A_{label} with {k} ascents vs partitions with {} blocks", n - k),
                            expected,
                            &found,
                        );
                    }
                }
                out.push(c.finish());
            }
            (out, complete)
        }
    };
    Ok(ConjectureResult {
        id,
        n_max,
        verdicts,
        complete,
    })
}
