//! Ground truth by exhaustion, and the census sweeps built on it.

use rayon::prelude::*;

use crate::census::{for_each_in_shard, shards};
use crate::rules::{phase1, Phase1Outcome};
use crate::search::{decide_sequence, Certificate, SearchConfig, Verdict};
use crate::sequence::{gale_ryser, Bipartition, DegreeSequence, Partition};

/// Tries every distinct candidate bipartition against Gale-Ryser.
///
/// Candidates are multiplicity vectors over the distinct values, so equal
/// degrees are never permuted. Exponential; meant for small inputs.
pub fn oracle_decide(d: &DegreeSequence) -> Verdict {
    let weight = d.weight();
    if weight % 2 == 1 {
        return Verdict::NotPotentiallyBipartite {
            certificate: Certificate::SearchExhausted,
            exact: true,
        };
    }
    // Descending distinct values with multiplicities and suffix weights for pruning.
    let mut values = Vec::new();
    let mut mult = Vec::new();
    for &x in d.degrees() {
        if values.last() == Some(&x) {
            *mult.last_mut().unwrap() += 1;
        } else {
            values.push(x);
            mult.push(1usize);
        }
    }
    let mut tail = vec![0usize; values.len() + 1];
    for i in (0..values.len()).rev() {
        tail[i] = tail[i + 1] + values[i] * mult[i];
    }
    let mut chosen = Vec::with_capacity(d.len());
    let found = pick(
        &values,
        &mult,
        &tail,
        0,
        weight / 2,
        &mut chosen,
        &mut |a| {
            let b = Bipartition::from_left(d, Partition::new(a.to_vec())).expect("submultiset");
            gale_ryser(&b.a, &b.b).unwrap_or(false).then_some(b)
        },
    );
    match found {
        Some(b) => Verdict::PotentiallyBipartite(b),
        None => Verdict::NotPotentiallyBipartite {
            certificate: Certificate::SearchExhausted,
            exact: true,
        },
    }
}

fn pick<T>(
    values: &[usize],
    mult: &[usize],
    tail: &[usize],
    i: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    test: &mut impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if need == 0 {
        return test(chosen);
    }
    if i == values.len() || tail[i] < need {
        return None;
    }
    let v = values[i];
    let most = mult[i].min(need / v);
    let base = chosen.len();
    for c in (0..=most).rev() {
        chosen.truncate(base);
        chosen.extend(std::iter::repeat_n(v, c));
        if let Some(t) = pick(values, mult, tail, i + 1, need - c * v, chosen, test) {
            return Some(t);
        }
    }
    chosen.truncate(base);
    None
}

/// One row of the census tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TableRow {
    pub n: usize,
    /// Zero-free graphical sequences of length n.
    pub d: u64,
    /// Of those, rejected by one of the seven rules.
    pub r: u64,
    /// Potentially bipartite ones, by the oracle.
    pub b: u64,
    /// Potentially bipartite ones that the configured search answers "no" on.
    pub b_w: u64,
}

impl TableRow {
    fn merge(self, other: TableRow) -> TableRow {
        TableRow {
            n: self.n,
            d: self.d + other.d,
            r: self.r + other.r,
            b: self.b + other.b,
            b_w: self.b_w + other.b_w,
        }
    }

    pub fn r_ratio(&self) -> f64 {
        ratio(self.r, self.d)
    }

    pub fn b_w_ratio(&self) -> f64 {
        ratio(self.b_w, self.b)
    }
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Counts D, r, B and B_w over every sequence of length `n`.
///
/// Shards run on the current rayon pool; totals do not depend on scheduling.
pub fn tabulate(n: usize, config: &SearchConfig) -> TableRow {
    let serial = SearchConfig {
        parallel_width: 1,
        ..*config
    };
    let zero = TableRow {
        n,
        ..TableRow::default()
    };
    shards(n)
        .par_iter()
        .map(|shard| {
            let mut row = zero;
            for_each_in_shard(n, shard, |s| {
                let d = DegreeSequence::from_sorted(s.to_vec()).expect("sorted");
                row.d += 1;
                if matches!(phase1(&d), Ok(Phase1Outcome::Rejected(_))) {
                    row.r += 1;
                }
                if oracle_decide(&d).is_yes() {
                    row.b += 1;
                    let got = decide_sequence(&d, &serial).expect("census input is graphical");
                    if !got.is_yes() {
                        row.b_w += 1;
                    }
                }
            });
            row
        })
        .reduce(|| zero, TableRow::merge)
}
