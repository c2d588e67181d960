use super::rule::PrefixRule;
use crate::sequence::AscentSequence;
use crate::word::Letter;

/// Lazy lexicographic stream of the admitted ascent sequences of one length.
///
/// Holds only the current prefix, so memory stays linear in `n` no matter
/// how many sequences are produced.
#[derive(Clone, Debug)]
pub struct Sequences<R> {
    rule: R,
    n: usize,
    letters: Vec<Letter>,
    /// `ascents[i]` is the ascent count of `letters[..=i]`.
    ascents: Vec<u32>,
    /// Next letter to try at each depth.
    cursor: Vec<Letter>,
    pending_pop: bool,
}

impl<R: PrefixRule> Sequences<R> {
    pub(crate) fn new(rule: R, n: usize) -> Self {
        Sequences {
            rule,
            n,
            letters: Vec::with_capacity(n),
            ascents: Vec::with_capacity(n),
            cursor: vec![0; n + 1],
            pending_pop: false,
        }
    }

    fn pop_last(&mut self) {
        self.rule.pop(&self.letters);
        self.letters.pop();
        self.ascents.pop();
    }
}

impl<R: PrefixRule> Iterator for Sequences<R> {
    type Item = AscentSequence;

    fn next(&mut self) -> Option<AscentSequence> {
        if self.n == 0 {
            return None;
        }
        if self.pending_pop {
            self.pending_pop = false;
            self.pop_last();
        }
        loop {
            let depth = self.letters.len();
            let bound = if depth == 0 { 0 } else { self.ascents[depth - 1] + 1 };
            let mut advanced = false;
            while self.cursor[depth] <= bound {
                let c = self.cursor[depth];
                self.cursor[depth] += 1;
                self.letters.push(c);
                if self.rule.push(&self.letters) {
                    let a = match depth {
                        0 => 0,
                        _ => self.ascents[depth - 1] + u32::from(c > self.letters[depth - 1]),
                    };
                    self.ascents.push(a);
                    advanced = true;
                    break;
                }
                self.rule.pop(&self.letters);
                self.letters.pop();
            }
            if advanced {
                if self.letters.len() == self.n {
                    self.pending_pop = true;
                    return Some(AscentSequence::new_unchecked(self.letters.clone()));
                }
                self.cursor[self.letters.len()] = 0;
                continue;
            }
            if depth == 0 {
                return None;
            }
            self.pop_last();
        }
    }
}
