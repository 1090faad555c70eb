//! Reachable-sum table over the distinct degree values.
//!
//! Level `j` describes submultisets drawn from the `j` smallest distinct values
//! (all copies available). For every sum `s` it stores the set of achievable
//! cardinalities as a bitset (capped at `cap`) and the largest achievable
//! cardinality (uncapped).
//!
//! Every search node draws its small terms from "all copies of every value
//! below some threshold", which is always a prefix of the ascending value list,
//! so one table built per input serves the whole search.

pub(crate) struct CountTable {
    values: Vec<usize>,
    mult: Vec<usize>,
    max_sum: usize,
    cap: usize,
    words: usize,
    bits: Vec<u64>,
    max_count: Vec<i32>,
}

impl CountTable {
    /// `values` ascending and distinct, `mult[i]` copies of `values[i]`.
    pub(crate) fn new(values: &[usize], mult: &[usize], max_sum: usize, cap: usize) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(values.iter().all(|&v| v > 0));
        let levels = values.len() + 1;
        let words = cap / 64 + 1;
        let row = (max_sum + 1) * words;
        let mut bits = vec![0u64; levels * row];
        let mut max_count = vec![-1i32; levels * (max_sum + 1)];
        bits[0] = 1;
        max_count[0] = 0;
        let top_mask = top_word_mask(cap);

        for (j, (&v, &m)) in values.iter().zip(mult).enumerate() {
            let (done, rest) = bits.split_at_mut((j + 1) * row);
            let prev = &done[j * row..];
            let cur = &mut rest[..row];
            let mc_base = j * (max_sum + 1);
            for s in 0..=max_sum {
                let dst = &mut cur[s * words..(s + 1) * words];
                let mut best = -1i32;
                for c in 0..=m.min(s / v) {
                    let src_s = s - c * v;
                    let src = &prev[src_s * words..(src_s + 1) * words];
                    or_shifted(dst, src, c);
                    let mc = max_count[mc_base + src_s];
                    if mc >= 0 {
                        best = best.max(mc + c as i32);
                    }
                }
                dst[words - 1] &= top_mask;
                max_count[mc_base + max_sum + 1 + s] = best;
            }
        }

        CountTable {
            values: values.to_vec(),
            mult: mult.to_vec(),
            max_sum,
            cap,
            words,
            bits,
            max_count,
        }
    }

    pub(crate) fn values(&self) -> &[usize] {
        &self.values
    }

    pub(crate) fn mult(&self) -> &[usize] {
        &self.mult
    }

    fn cell(&self, level: usize, sum: usize) -> &[u64] {
        let start = (level * (self.max_sum + 1) + sum) * self.words;
        &self.bits[start..start + self.words]
    }

    /// Can exactly `k` terms from the `level` smallest values sum to `sum`?
    #[inline]
    pub(crate) fn contains(&self, level: usize, sum: usize, k: usize) -> bool {
        if sum > self.max_sum || k > self.cap {
            return false;
        }
        self.cell(level, sum)[k / 64] >> (k % 64) & 1 == 1
    }

    /// Is some cardinality in `lo..=hi` achievable?
    pub(crate) fn any_in(&self, level: usize, sum: usize, lo: usize, hi: usize) -> bool {
        let hi = hi.min(self.cap);
        if sum > self.max_sum || lo > hi {
            return false;
        }
        let cell = self.cell(level, sum);
        (lo / 64..=hi / 64).any(|w| {
            let mut word = cell[w];
            if w == lo / 64 {
                word &= !0u64 << (lo % 64);
            }
            if w == hi / 64 && hi % 64 != 63 {
                word &= (1u64 << (hi % 64 + 1)) - 1;
            }
            word != 0
        })
    }

    /// Largest cardinality of a submultiset of the `level` smallest values with the given sum.
    pub(crate) fn max_count(&self, level: usize, sum: usize) -> Option<usize> {
        if sum > self.max_sum {
            return None;
        }
        let mc = self.max_count[level * (self.max_sum + 1) + sum];
        (mc >= 0).then_some(mc as usize)
    }
}

fn top_word_mask(cap: usize) -> u64 {
    let used = cap % 64 + 1;
    if used == 64 {
        !0
    } else {
        (1u64 << used) - 1
    }
}

/// `dst |= src << shift` over equal-length word slices.
fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for (i, word) in dst.iter_mut().enumerate().skip(ws) {
        let s = i - ws;
        let mut v = src[s] << bs;
        if bs > 0 && s > 0 {
            v |= src[s - 1] >> (64 - bs);
        }
        *word |= v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over multiplicity vectors.
    fn achievable(values: &[usize], mult: &[usize], sum: usize, k: usize) -> bool {
        fn rec(values: &[usize], mult: &[usize], sum: usize, k: usize) -> bool {
            match values.split_first() {
                None => sum == 0 && k == 0,
                Some((&v, rest)) => (0..=mult[0])
                    .any(|c| c * v <= sum && c <= k && rec(rest, &mult[1..], sum - c * v, k - c)),
            }
        }
        rec(values, mult, sum, k)
    }

    #[test]
    fn matches_brute_force() {
        let values = [1, 2, 3, 5];
        let mult = [3, 2, 2, 1];
        let max_sum = 20;
        let table = CountTable::new(&values, &mult, max_sum, 8);
        for level in 0..=values.len() {
            for s in 0..=max_sum {
                let mut best = None;
                for k in 0..=8 {
                    let expect = achievable(&values[..level], &mult[..level], s, k);
                    assert_eq!(
                        table.contains(level, s, k),
                        expect,
                        "level {level} sum {s} k {k}"
                    );
                    if expect {
                        best = Some(k);
                    }
                }
                assert_eq!(table.max_count(level, s), best);
            }
        }
        assert!(table.any_in(4, 10, 3, 3));
        assert!(!table.any_in(1, 2, 0, 1));
    }

    #[test]
    fn wide_cardinality_bitsets() {
        // 130 ones: every count up to the cap is reachable only at its own sum.
        let table = CountTable::new(&[1], &[130], 130, 129);
        assert!(table.contains(1, 100, 100));
        assert!(!table.contains(1, 100, 99));
        assert!(table.any_in(1, 128, 64, 129));
        assert!(!table.contains(1, 130, 130));
        assert_eq!(table.max_count(1, 130), Some(130));
    }
}
