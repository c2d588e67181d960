//! Reference implementations written straight from the definitions. They
//! share no code with the library beyond the `Letter` type.
#![allow(dead_code)]

use ascent_patterns::Letter;

pub fn ascents(w: &[Letter]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

pub fn naive_is_ascent_sequence(w: &[Letter]) -> bool {
    !w.is_empty() && w[0] == 0 && (1..w.len()).all(|i| w[i] as usize <= ascents(&w[..i]) + 1)
}

/// All ascent sequences of length `n`, by extending prefixes with every
/// admissible letter and recounting ascents from scratch.
pub fn naive_ascent_sequences(n: usize) -> Vec<Vec<Letter>> {
    let mut layer = vec![vec![0]];
    for _ in 1..n {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..=ascents(w) as Letter + 1 {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        layer = next;
    }
    layer
}

fn same_order(a: Letter, b: Letter, x: Letter, y: Letter) -> bool {
    a.cmp(&b) == x.cmp(&y)
}

/// Tries every index subset of size `|p|`.
pub fn naive_contains(w: &[Letter], p: &[Letter]) -> bool {
    naive_count(w, p) > 0
}

pub fn naive_count(w: &[Letter], p: &[Letter]) -> u64 {
    fn rec(w: &[Letter], p: &[Letter], start: usize, chosen: &mut Vec<usize>) -> u64 {
        let k = chosen.len();
        if k == p.len() {
            let ok = (0..k).all(|a| (a + 1..k).all(|b| same_order(w[chosen[a]], w[chosen[b]], p[a], p[b])));
            return u64::from(ok);
        }
        let mut total = 0;
        for i in start..w.len() {
            chosen.push(i);
            total += rec(w, p, i + 1, chosen);
            chosen.pop();
        }
        total
    }
    rec(w, p, 0, &mut Vec::with_capacity(p.len()))
}

/// Permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<Letter>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n as Letter {
        for rest in all_permutations(n - 1) {
            let mut v = vec![first];
            v.extend(rest.into_iter().map(|e| if e >= first { e + 1 } else { e }));
            out.push(v);
        }
    }
    out
}

/// Block label of each element, for every partition of `{1..n}`, by
/// brute force over all words with letters below `n`.
pub fn all_rgfs(n: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut w = vec![0 as Letter; n];
    loop {
        let mut max = None::<Letter>;
        let ok = w.iter().all(|&v| {
            let fine = match max {
                None => v == 0,
                Some(m) => v <= m + 1,
            };
            max = Some(max.map_or(v, |m| m.max(v)));
            fine
        });
        if ok {
            out.push(w.clone());
        }
        let Some(i) = w.iter().rposition(|&v| (v as usize) < n - 1) else {
            return out;
        };
        w[i] += 1;
        for v in &mut w[i + 1..] {
            *v = 0;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}

pub fn narayana(n: u64, k: u64) -> u64 {
    binomial(n, k) * binomial(n, k - 1) / n
}

/// Bell numbers by the recurrence `B(n+1) = sum binom(n,k) B(k)`.
pub fn bell(n: usize) -> u64 {
    let mut b = vec![1u64];
    for m in 0..n {
        let next = (0..=m).map(|k| binomial(m as u64, k as u64) * b[k]).sum();
        b.push(next);
    }
    b[n]
}

/// Parses a digit string.
pub fn w(s: &str) -> Vec<Letter> {
    s.bytes().map(|b| (b - b'0') as Letter).collect()
}

pub fn show(w: &[Letter]) -> String {
    w.iter().map(|d| d.to_string()).collect()
}
