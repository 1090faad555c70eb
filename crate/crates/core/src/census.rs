//! Exhaustive generation of zero-free graphical degree sequences of a fixed length.
//!
//! Sequences are produced in reverse-lexicographic order by filling positions
//! left to right with nonincreasing values and pruning prefixes that already
//! violate the Erdős–Gallai inequality at their own length. The search space is
//! split into shards keyed by the first two degrees so sweeps can run in parallel.

use crate::sequence::{is_graphical, DegreeSequence};

/// A fixed prefix of the sequence; all sequences of one shard share it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shard {
    pub prefix: Vec<usize>,
}

/// Shards covering every sequence of length `n`, in reverse-lexicographic order.
pub fn shards(n: usize) -> Vec<Shard> {
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for d1 in (1..n).rev() {
        for d2 in (1..=d1).rev() {
            let prefix = vec![d1, d2];
            if prefix_feasible(n, &prefix, d1 + d2) {
                out.push(Shard { prefix });
            }
        }
    }
    out
}

/// Calls `visit` on every graphical sequence of length `n` that starts with the shard prefix.
pub fn for_each_in_shard(n: usize, shard: &Shard, mut visit: impl FnMut(&[usize])) {
    let mut seq = shard.prefix.clone();
    seq.reserve(n - seq.len());
    let sum = seq.iter().sum();
    fill(n, &mut seq, sum, &mut visit);
}

/// Calls `visit` on every zero-free graphical sequence of length `n`.
pub fn for_each_graphical(n: usize, mut visit: impl FnMut(&[usize])) {
    for shard in shards(n) {
        for_each_in_shard(n, &shard, &mut visit);
    }
}

fn fill(n: usize, seq: &mut Vec<usize>, sum: usize, visit: &mut impl FnMut(&[usize])) {
    if seq.len() == n {
        if sum.is_multiple_of(2) && is_graphical(seq) {
            visit(seq);
        }
        return;
    }
    let hi = *seq.last().expect("shard prefix is nonempty");
    for v in (1..=hi).rev() {
        seq.push(v);
        if prefix_feasible(n, seq, sum + v) {
            fill(n, seq, sum + v, visit);
        }
        seq.pop();
    }
}

/// Erdős–Gallai at k = prefix length, with every unplaced degree bounded by the last placed one.
fn prefix_feasible(n: usize, prefix: &[usize], prefix_sum: usize) -> bool {
    let k = prefix.len();
    let last = prefix[k - 1];
    prefix_sum <= k * (k - 1) + (n - k) * last.min(k)
}

/// Streaming iterator over all zero-free graphical sequences of length `n`.
///
/// Materializes one shard at a time.
pub struct GraphicalSequences {
    n: usize,
    shards: std::vec::IntoIter<Shard>,
    buffer: std::vec::IntoIter<Vec<usize>>,
}

pub fn graphical_sequences(n: usize) -> GraphicalSequences {
    GraphicalSequences {
        n,
        shards: shards(n).into_iter(),
        buffer: Vec::new().into_iter(),
    }
}

impl Iterator for GraphicalSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            if let Some(v) = self.buffer.next() {
                return DegreeSequence::from_sorted(v);
            }
            let shard = self.shards.next()?;
            let mut batch = Vec::new();
            for_each_in_shard(self.n, &shard, |s| batch.push(s.to_vec()));
            self.buffer = batch.into_iter();
        }
    }
}
