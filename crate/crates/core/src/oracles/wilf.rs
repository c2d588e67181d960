//! Grouping patterns by their avoidance sequences.

use std::collections::BTreeMap;

use crate::enumerate::{count_avoiders_with, CountOptions, CountSeries};
use crate::error::{Error, Result};
use crate::pattern::{is_normalized, Pattern};
use crate::word::Letter;

/// First length at which two classes differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub left: Pattern,
    pub right: Pattern,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilfReport {
    pub n_max: usize,
    /// Each class is sorted; classes are ordered by their first pattern.
    pub classes: Vec<Vec<Pattern>>,
    /// One entry per pair of classes, keyed by class representatives.
    pub separations: Vec<Separation>,
    /// Count series per class, aligned with `classes`.
    pub series: Vec<CountSeries>,
    /// False when some count was cut short by a deadline.
    pub complete: bool,
}

impl WilfReport {
    /// Index of the class containing `p`.
    pub fn class_of(&self, p: &Pattern) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(p))
    }
}

/// All patterns of length `len`, lexicographically.
pub fn all_patterns(len: usize) -> Vec<Pattern> {
    if len == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut w: Vec<Letter> = vec![0; len];
    let top = len as Letter - 1;
    loop {
        if is_normalized(&w) {
            out.push(Pattern::new(w.clone()).expect("normalized"));
        }
        let Some(i) = w.iter().rposition(|&v| v < top) else {
            return out;
        };
        w[i] += 1;
        w[i + 1..].fill(0);
    }
}

/// Patterns of every length in `1..=max_len`, shorter first.
pub fn patterns_up_to(max_len: usize) -> Vec<Pattern> {
    (1..=max_len).flat_map(all_patterns).collect()
}

pub fn wilf_classify(patterns: &[Pattern], n_max: usize, opts: &CountOptions) -> Result<WilfReport> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let mut groups: BTreeMap<Vec<num_bigint::BigUint>, (Vec<Pattern>, CountSeries)> = BTreeMap::new();
    let mut complete = true;
    for p in patterns {
        let cs = count_avoiders_with(p, n_max, opts)?;
        complete &= cs.complete;
        let entry = groups
            .entry(cs.values().to_vec())
            .or_insert_with(|| (Vec::new(), cs.clone()));
        if !entry.0.contains(p) {
            entry.0.push(p.clone());
        }
    }
    let mut classes: Vec<(Vec<Pattern>, CountSeries)> = groups
        .into_values()
        .map(|(mut ps, cs)| {
            ps.sort();
            (ps, cs)
        })
        .collect();
    classes.sort_by(|a, b| a.0[0].cmp(&b.0[0]));
    let mut separations = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let (a, b) = (&classes[i].1, &classes[j].1);
            let n = (1..=n_max).find(|&n| a.get(n) != b.get(n)).expect("distinct series");
            separations.push(Separation {
                left: classes[i].0[0].clone(),
                right: classes[j].0[0].clone(),
                n,
            });
        }
    }
    let (classes, series) = classes.into_iter().unzip();
    Ok(WilfReport {
        n_max,
        classes,
        separations,
        series,
        complete,
    })
}
