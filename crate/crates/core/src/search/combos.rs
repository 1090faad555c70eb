//! Ordered generation of small-term combinations.
//!
//! A combination is a multiplicity vector over the `top` smallest distinct
//! values. Cardinalities are visited in window order (largest first for
//! [`ComboOrder::SmallestTermsFirst`]); within one cardinality the cursor walks
//! the values from the largest down, trying the fewest copies of each large
//! value first. Every branch it enters is known to complete, because the
//! choice at each level is checked against the reachable-sum table, so each
//! combination costs O(n) to emit.

use super::table::CountTable;
use crate::sequence::Partition;

/// Order of the combinations generated for one search node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComboOrder {
    /// More terms first; ties prefer fewer copies of the larger values.
    #[default]
    SmallestTermsFirst,
    /// Fewer terms first; ties prefer more copies of the larger values.
    LargestTermsFirst,
}

pub(crate) struct ComboCursor<'t> {
    table: &'t CountTable,
    top: usize,
    target: usize,
    lo: usize,
    hi: usize,
    order: ComboOrder,
    next_k: Option<usize>,
    counts: Vec<usize>,
    rem_sum: Vec<usize>,
    rem_k: Vec<usize>,
    active: bool,
}

impl<'t> ComboCursor<'t> {
    /// Combinations from the `top` smallest values with the given sum and
    /// cardinality in `lo..=hi`.
    pub(crate) fn new(
        table: &'t CountTable,
        top: usize,
        target: usize,
        lo: usize,
        hi: usize,
        order: ComboOrder,
    ) -> Self {
        let next_k = if lo > hi {
            None
        } else {
            match order {
                ComboOrder::SmallestTermsFirst => Some(hi),
                ComboOrder::LargestTermsFirst => Some(lo),
            }
        };
        ComboCursor {
            table,
            top,
            target,
            lo,
            hi,
            order,
            next_k,
            counts: vec![0; top],
            rem_sum: vec![0; top + 1],
            rem_k: vec![0; top + 1],
            active: false,
        }
    }

    /// Multiplicities of the next combination, indexed by value level.
    pub(crate) fn next(&mut self) -> Option<&[usize]> {
        if self.active && self.advance() {
            return Some(&self.counts);
        }
        self.active = false;
        while let Some(k) = self.next_k {
            self.next_k = self.step_k(k);
            if self.table.contains(self.top, self.target, k) {
                self.rem_sum[self.top] = self.target;
                self.rem_k[self.top] = k;
                self.descend(self.top);
                self.active = true;
                return Some(&self.counts);
            }
        }
        None
    }

    fn step_k(&self, k: usize) -> Option<usize> {
        match self.order {
            ComboOrder::SmallestTermsFirst => (k > self.lo).then(|| k - 1),
            ComboOrder::LargestTermsFirst => (k < self.hi).then(|| k + 1),
        }
    }

    /// Fills levels below `from` with their first feasible choice.
    fn descend(&mut self, from: usize) {
        for level in (0..from).rev() {
            let c = self
                .choices(level)
                .next()
                .expect("table guarantees a completion");
            self.set(level, c);
        }
    }

    fn set(&mut self, level: usize, c: usize) {
        let v = self.table.values()[level];
        self.counts[level] = c;
        self.rem_sum[level] = self.rem_sum[level + 1] - c * v;
        self.rem_k[level] = self.rem_k[level + 1] - c;
    }

    /// Feasible copy counts at `level` in cursor order.
    fn choices(&self, level: usize) -> impl Iterator<Item = usize> + '_ {
        let (s, k) = (self.rem_sum[level + 1], self.rem_k[level + 1]);
        let v = self.table.values()[level];
        let most = self.table.mult()[level].min(k).min(s / v);
        let ascending = self.order == ComboOrder::SmallestTermsFirst;
        (0..=most)
            .map(move |i| if ascending { i } else { most - i })
            .filter(move |&c| self.table.contains(level, s - c * v, k - c))
    }

    fn advance(&mut self) -> bool {
        for level in 0..self.top {
            let current = self.counts[level];
            let ascending = self.order == ComboOrder::SmallestTermsFirst;
            let next = self
                .choices(level)
                .find(|&c| if ascending { c > current } else { c < current });
            if let Some(c) = next {
                self.set(level, c);
                self.descend(level);
                return true;
            }
        }
        false
    }
}

/// Result of a budgeted combination request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combinations {
    pub items: Vec<Partition>,
    /// True when more combinations existed beyond the budget.
    pub truncated: bool,
}

/// Distinct submultisets of `pool` summing to `target` with cardinality in
/// `count_range`, at most `budget` of them (`None` = unlimited).
pub fn small_term_combinations(
    pool: &Partition,
    target: usize,
    count_range: (usize, usize),
    budget: Option<usize>,
    order: ComboOrder,
) -> Combinations {
    let (values, mult) = distinct_ascending(pool.parts());
    let (lo, hi) = count_range;
    let hi = hi.min(pool.len());
    let table = CountTable::new(&values, &mult, target, hi);
    let mut cursor = ComboCursor::new(&table, values.len(), target, lo, hi, order);
    let mut items = Vec::new();
    let mut truncated = false;
    while let Some(counts) = cursor.next() {
        if budget.is_some_and(|b| items.len() >= b) {
            truncated = true;
            break;
        }
        let mut parts = Vec::new();
        for (level, &c) in counts.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(values[level], c));
        }
        items.push(Partition::new(parts));
    }
    Combinations { items, truncated }
}

/// Distinct values ascending with their multiplicities.
pub(crate) fn distinct_ascending(nonincreasing: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut values = Vec::new();
    let mut mult = Vec::new();
    for &x in nonincreasing.iter().rev() {
        if x == 0 {
            continue;
        }
        if values.last() == Some(&x) {
            *mult.last_mut().unwrap() += 1;
        } else {
            values.push(x);
            mult.push(1);
        }
    }
    (values, mult)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn cardinality_descending() {
        let out = small_term_combinations(
            &p(&[2, 2, 1, 1]),
            4,
            (2, 3),
            None,
            ComboOrder::SmallestTermsFirst,
        );
        assert_eq!(out.items, vec![p(&[2, 1, 1]), p(&[2, 2])]);
        assert!(!out.truncated);
    }

    #[test]
    fn single_result_and_empty_streams() {
        let out = small_term_combinations(&p(&[1, 1, 1]), 2, (1, 3), None, ComboOrder::default());
        assert_eq!(out.items, vec![p(&[1, 1])]);

        let out = small_term_combinations(&p(&[2, 2]), 3, (0, 2), None, ComboOrder::default());
        assert!(out.items.is_empty());
        assert!(!out.truncated);
    }

    #[test]
    fn budget_truncates() {
        let pool = p(&[3, 3, 2, 2, 1, 1, 1, 1]);
        let all = small_term_combinations(&pool, 6, (1, 8), None, ComboOrder::default());
        assert!(all.items.len() > 2);
        let two = small_term_combinations(&pool, 6, (1, 8), Some(2), ComboOrder::default());
        assert_eq!(two.items, all.items[..2].to_vec());
        assert!(two.truncated);
        let exact = small_term_combinations(
            &pool,
            6,
            (1, 8),
            Some(all.items.len()),
            ComboOrder::default(),
        );
        assert!(!exact.truncated);
    }

    #[test]
    fn tie_break_prefers_fewer_large_values() {
        let pool = p(&[3, 2, 2, 2, 1]);
        let out = small_term_combinations(&pool, 6, (3, 3), None, ComboOrder::SmallestTermsFirst);
        assert_eq!(out.items, vec![p(&[2, 2, 2]), p(&[3, 2, 1])]);
        let out = small_term_combinations(&pool, 6, (3, 3), None, ComboOrder::LargestTermsFirst);
        assert_eq!(out.items, vec![p(&[3, 2, 1]), p(&[2, 2, 2])]);
    }

    #[test]
    fn largest_terms_first_visits_small_cardinalities_first() {
        let out = small_term_combinations(
            &p(&[2, 2, 1, 1]),
            4,
            (2, 3),
            None,
            ComboOrder::LargestTermsFirst,
        );
        assert_eq!(out.items, vec![p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn empty_combination_for_zero_target() {
        let out = small_term_combinations(&p(&[2, 1]), 0, (0, 2), None, ComboOrder::default());
        assert_eq!(out.items, vec![p(&[])]);
    }
}
