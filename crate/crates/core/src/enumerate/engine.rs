//! Depth-first traversal of the ascent-sequence prefix tree.
//!
//! Children of a prefix with `a` ascents are the letters `0..=a+1`, tried in
//! increasing order, so traversal order is lexicographic. Counting may split
//! the tree at a fixed depth and hand the subtrees to worker threads; the
//! per-length totals are plain sums and do not depend on the split.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;
use std::time::Instant;

use super::rule::PrefixRule;
use crate::word::Letter;

/// Knobs for counting runs.
#[derive(Clone, Debug)]
pub struct CountOptions {
    pub threads: usize,
    /// Prefix length at which the tree is cut into independent subtrees.
    pub split_depth: usize,
    /// Abort cleanly once this instant has passed.
    pub deadline: Option<Instant>,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            threads: 1,
            split_depth: 4,
            deadline: None,
        }
    }
}

/// Node counts per prefix length (`counts[i]` is length `i + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally {
    pub counts: Vec<u64>,
    pub complete: bool,
}

const TICK_MASK: u32 = (1 << 14) - 1;

pub(crate) struct Clock {
    deadline: Option<Instant>,
    ticks: u32,
    pub(crate) expired: bool,
}

impl Clock {
    pub(crate) fn new(deadline: Option<Instant>) -> Self {
        Clock {
            deadline,
            ticks: 0,
            expired: false,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        if let Some(deadline) = self.deadline {
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks & TICK_MASK == 0 && Instant::now() >= deadline {
                self.expired = true;
            }
        }
        self.expired
    }
}

fn walk<R, V>(
    rule: &mut R,
    letters: &mut Vec<Letter>,
    ascents: u32,
    max_len: usize,
    clock: &mut Clock,
    visit: &mut V,
) where
    R: PrefixRule,
    V: FnMut(&[Letter], u32),
{
    visit(letters, ascents);
    if letters.len() >= max_len || clock.tick() {
        return;
    }
    let last = *letters.last().unwrap();
    for c in 0..=ascents + 1 {
        letters.push(c);
        if rule.push(letters) {
            walk(rule, letters, ascents + u32::from(c > last), max_len, clock, visit);
        }
        rule.pop(letters);
        letters.pop();
        if clock.expired {
            return;
        }
    }
}

/// Visits every admitted prefix of length at most `max_len`, with its ascent
/// count, in lexicographic order. Returns `false` if the deadline cut the
/// walk short.
pub(crate) fn visit_prefixes<R, V>(mut rule: R, max_len: usize, clock: &mut Clock, mut visit: V) -> bool
where
    R: PrefixRule,
    V: FnMut(&[Letter], u32),
{
    if max_len == 0 {
        return true;
    }
    let mut letters = vec![0];
    if rule.push(&letters) {
        walk(&mut rule, &mut letters, 0, max_len, clock, &mut visit);
    }
    rule.pop(&letters);
    !clock.expired
}

/// Visits admitted sequences of length exactly `n`.
pub(crate) fn for_each_of_length<R, V>(rule: R, n: usize, mut visit: V)
where
    R: PrefixRule,
    V: FnMut(&[Letter]),
{
    let mut clock = Clock::new(None);
    visit_prefixes(rule, n, &mut clock, |w, _| {
        if w.len() == n {
            visit(w)
        }
    });
}

/// Counts admitted prefixes of each length `1..=max_len`.
pub fn count_lengths<R: PrefixRule>(rule: R, max_len: usize, opts: &CountOptions) -> Tally {
    let mut counts = vec![0u64; max_len];
    let depth = opts.split_depth.max(1);
    if opts.threads <= 1 || max_len <= depth {
        let mut clock = Clock::new(opts.deadline);
        let complete = visit_prefixes(rule, max_len, &mut clock, |w, _| counts[w.len() - 1] += 1);
        return Tally { counts, complete };
    }

    let mut frontier: Vec<(Vec<Letter>, u32)> = Vec::new();
    let mut clock = Clock::new(opts.deadline);
    let mut complete = visit_prefixes(rule.clone(), depth, &mut clock, |w, a| {
        counts[w.len() - 1] += 1;
        if w.len() == depth {
            frontier.push((w.to_vec(), a));
        }
    });

    let next = AtomicUsize::new(0);
    let results: Vec<(Vec<u64>, bool)> = thread::scope(|s| {
        let handles: Vec<_> = (0..opts.threads)
            .map(|_| {
                let rule = rule.clone();
                let frontier = &frontier;
                let next = &next;
                s.spawn(move || {
                    let mut local = vec![0u64; max_len];
                    let mut clock = Clock::new(opts.deadline);
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some((prefix, ascents)) = frontier.get(i) else {
                            break;
                        };
                        count_subtree(rule.clone(), prefix, *ascents, max_len, &mut clock, &mut local);
                        if clock.expired {
                            break;
                        }
                    }
                    (local, !clock.expired)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    for (local, done) in results {
        complete &= done;
        for (total, c) in counts.iter_mut().zip(local) {
            *total += c;
        }
    }
    Tally { counts, complete }
}

/// Counts the strict descendants of an admitted prefix.
fn count_subtree<R: PrefixRule>(
    mut rule: R,
    prefix: &[Letter],
    ascents: u32,
    max_len: usize,
    clock: &mut Clock,
    counts: &mut [u64],
) {
    for i in 1..=prefix.len() {
        let admitted = rule.push(&prefix[..i]);
        debug_assert!(admitted, "frontier prefix rejected on replay");
    }
    let root_len = prefix.len();
    let mut letters = prefix.to_vec();
    walk(&mut rule, &mut letters, ascents, max_len, clock, &mut |w: &[Letter], _| {
        if w.len() > root_len {
            counts[w.len() - 1] += 1;
        }
    });
}
