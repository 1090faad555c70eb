use super::combos::distinct_ascending;
use super::table::CountTable;
use crate::sequence::{DegreeSequence, Partition};

/// Static limits on the left side of any candidate bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    /// Degrees larger than n - d_1; they must all sit on the left side.
    pub a_f: Partition,
    /// Weight still missing from the left side once `a_f` is placed.
    pub s: usize,
    /// Smallest possible largest degree of a subsequence reaching |d|/2.
    pub d_m: usize,
    /// Most degrees that fit under |d|/2.
    pub l1: usize,
    /// Fewest degrees that reach |d|/2.
    pub l2: usize,
    pub ell_lo: usize,
    pub ell_hi: usize,
    /// Longest prefix d_1..d_x that can still be completed to a valid left side.
    pub x0: usize,
}

impl SearchBounds {
    pub fn window_is_empty(&self) -> bool {
        self.ell_lo > self.ell_hi
    }
}

/// Precomputed per-input state shared by the bounds and the search.
pub(crate) struct Context<'d> {
    pub(crate) d: &'d [usize],
    pub(crate) half: usize,
    /// `prefix[x]` = d_1 + ... + d_x.
    pub(crate) prefix: Vec<usize>,
    /// Ascending level of each position's value in the table.
    pub(crate) level_of: Vec<usize>,
    pub(crate) table: CountTable,
    pub(crate) bounds: SearchBounds,
}

impl<'d> Context<'d> {
    pub(crate) fn new(d: &'d DegreeSequence) -> Self {
        let degrees = d.degrees();
        let n = degrees.len();
        let half = d.weight() / 2;
        let top = d.max_degree();
        let free_limit = n.saturating_sub(top);

        let mut prefix = vec![0usize; n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i] + degrees[i];
        }

        let a_f = Partition::new(
            degrees
                .iter()
                .copied()
                .filter(|&x| x > free_limit)
                .collect(),
        );
        let s = half.saturating_sub(a_f.weight());

        let mut l1 = 0;
        let mut acc = 0;
        for &x in degrees.iter().rev() {
            if acc + x > half {
                break;
            }
            acc += x;
            l1 += 1;
        }

        let l2 = prefix.iter().position(|&p| p >= half).unwrap_or(n);

        let mut d_m = 0;
        let mut acc = 0;
        for &x in degrees.iter().rev() {
            if acc >= half {
                break;
            }
            acc += x;
            d_m = x;
        }

        let ell_lo = d_m.max(l2);
        let ell_hi = free_limit.min(l1);

        let (values, mult) = distinct_ascending(degrees);
        let level_of = degrees
            .iter()
            .map(|x| values.binary_search(x).expect("value present"))
            .collect();
        let table = CountTable::new(&values, &mult, half, ell_hi);

        let mut ctx = Context {
            d: degrees,
            half,
            prefix,
            level_of,
            table,
            bounds: SearchBounds {
                a_f,
                s,
                d_m,
                l1,
                l2,
                ell_lo,
                ell_hi,
                x0: 0,
            },
        };
        ctx.bounds.x0 = ctx.x0();
        ctx
    }

    /// Can the prefix d_1..d_x be completed from d_{x+1}..d_n to weight |d|/2
    /// with at least `ell_lo` terms in total?
    pub(crate) fn prefix_feasible(&self, x: usize) -> bool {
        let n = self.d.len();
        if self.prefix[x] > self.half {
            return false;
        }
        let rest = self.half - self.prefix[x];
        if x == n {
            return rest == 0 && x >= self.bounds.ell_lo;
        }
        let v = self.d[x];
        let level = self.level_of[x];
        // Copies of v at positions x.. (the rest of the suffix is strictly smaller).
        let copies = self.d[x..].iter().take_while(|&&y| y == v).count();
        let best = (0..=copies.min(rest / v))
            .filter_map(|c| self.table.max_count(level, rest - c * v).map(|m| m + c))
            .max();
        best.is_some_and(|m| x + m >= self.bounds.ell_lo)
    }

    fn x0(&self) -> usize {
        let n = self.d.len();
        (1..=n)
            .find(|&x| !self.prefix_feasible(x))
            .map_or(n, |x| x - 1)
    }
}

pub fn compute_bounds(d: &DegreeSequence) -> SearchBounds {
    Context::new(d).bounds
}

/// Largest x such that every prefix d_1..d_x admits a completion.
///
/// Only `bounds.ell_lo` is read from `bounds`.
pub fn compute_x0(d: &DegreeSequence, bounds: &SearchBounds) -> usize {
    let mut ctx = Context::new(d);
    ctx.bounds.ell_lo = bounds.ell_lo;
    ctx.x0()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_unsorted(v.to_vec())
    }

    #[test]
    fn regular_six() {
        let b = compute_bounds(&ds(&[3; 6]));
        assert_eq!(b.a_f, Partition::default());
        assert_eq!((b.s, b.d_m, b.l1, b.l2), (9, 3, 3, 3));
        assert_eq!((b.ell_lo, b.ell_hi, b.x0), (3, 3, 3));
    }

    #[test]
    fn two_level_sequence() {
        let d = ds(&[4, 4, 4, 4, 2, 2, 2, 2]);
        let b = compute_bounds(&d);
        assert_eq!(b.a_f, Partition::default());
        assert_eq!((b.s, b.d_m, b.l1, b.l2), (12, 4, 5, 3));
        assert_eq!((b.ell_lo, b.ell_hi), (4, 4));
        // x = 3 leaves no room for more terms, so (4,4,4) yields only 3 < ell_lo.
        assert_eq!(b.x0, 2);
        assert_eq!(compute_x0(&d, &b), 2);
    }

    #[test]
    fn four_cycle() {
        let b = compute_bounds(&ds(&[2, 2, 2, 2]));
        assert_eq!((b.s, b.d_m, b.l1, b.l2), (4, 2, 2, 2));
        assert_eq!((b.ell_lo, b.ell_hi, b.x0), (2, 2, 2));
    }

    #[test]
    fn forced_left_degrees() {
        // n - d_1 = 3, so the two 4s are forced left.
        let b = compute_bounds(&ds(&[4, 4, 2, 2, 2, 1, 1]));
        assert_eq!(b.a_f, Partition::new(vec![4, 4]));
        assert_eq!(b.s, 0);
    }

    #[test]
    fn x0_respects_lower_window() {
        let d = ds(&[3; 6]);
        let mut b = compute_bounds(&d);
        b.ell_lo = 4;
        // Three 3s already fill the side, so no prefix reaches four terms.
        assert_eq!(compute_x0(&d, &b), 0);
    }
}
