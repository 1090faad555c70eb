//! Degree sequences, integer partitions and the Gale-Ryser test.
//!
//! A [`DegreeSequence`] is always stored nonincreasing. Zeros are structurally
//! allowed because complements need them, but [`normalize`] strips them and the
//! decision pipeline only ever sees zero-free sequences.

use std::fmt;

use crate::error::{Error, Result};

/// Nonincreasing list of vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `degrees` nonincreasing. Zeros are kept.
    pub fn from_unsorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    /// Wraps an already nonincreasing list, or returns `None` if it is not sorted.
    pub fn from_sorted(degrees: Vec<usize>) -> Option<Self> {
        if degrees.windows(2).all(|w| w[0] >= w[1]) {
            Some(DegreeSequence(degrees))
        } else {
            None
        }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest degree, 0 for the empty sequence.
    pub fn max_degree(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn is_zero_free(&self) -> bool {
        self.0.last().is_none_or(|&d| d > 0)
    }

    pub fn is_graphical(&self) -> bool {
        is_graphical(&self.0)
    }

    /// Degree sequence of the complement graph, zeros retained.
    pub fn complement(&self) -> Result<DegreeSequence> {
        complement(self)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl AsRef<[usize]> for DegreeSequence {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

/// Output of [`normalize`]: the zero-free sorted sequence plus how many zeros were removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub sequence: DegreeSequence,
    pub zeros_dropped: usize,
}

/// Sorts raw input nonincreasing and strips isolated vertices.
pub fn normalize(raw: &[i64]) -> Result<Normalized> {
    let mut degrees = Vec::with_capacity(raw.len());
    let mut zeros_dropped = 0;
    for &v in raw {
        match v {
            v if v < 0 => return Err(Error::NegativeDegree(v)),
            0 => zeros_dropped += 1,
            v => degrees.push(v as usize),
        }
    }
    Ok(Normalized {
        sequence: DegreeSequence::from_unsorted(degrees),
        zeros_dropped,
    })
}

/// Erdős–Gallai test on a nonincreasing slice, O(n).
pub fn is_graphical(d: &[usize]) -> bool {
    debug_assert!(d.windows(2).all(|w| w[0] >= w[1]));
    let n = d.len();
    if n == 0 {
        return true;
    }
    if d[0] >= n || d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut suffix = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + d[i];
    }
    // `ge` tracks how many leading degrees are >= k.
    let mut ge = n;
    let mut prefix = 0;
    for k in 1..=n {
        prefix += d[k - 1];
        while ge > 0 && d[ge - 1] < k {
            ge -= 1;
        }
        let split = ge.max(k);
        let rhs = k * (k - 1) + k * (split - k) + suffix[split];
        if prefix > rhs {
            return false;
        }
    }
    true
}

pub fn complement(d: &DegreeSequence) -> Result<DegreeSequence> {
    let n = d.len();
    let mut out = Vec::with_capacity(n);
    for &x in d.degrees().iter().rev() {
        if x >= n {
            return Err(Error::DegreeOutOfRange { degree: x, len: n });
        }
        out.push(n - 1 - x);
    }
    Ok(DegreeSequence(out))
}

/// Nonincreasing list of nonnegative parts with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        dominates(self, other)
    }
}

impl From<&DegreeSequence> for Partition {
    fn from(d: &DegreeSequence) -> Self {
        Partition::new(d.degrees().to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Part k of the result counts the parts of `p` that are at least k.
pub fn conjugate(p: &Partition) -> Partition {
    Partition(conjugate_slice(&p.0))
}

pub(crate) fn conjugate_slice(parts: &[usize]) -> Vec<usize> {
    let top = parts.first().copied().unwrap_or(0);
    let mut counts = vec![0usize; top + 1];
    for &x in parts {
        counts[x] += 1;
    }
    let mut out = vec![0usize; top];
    let mut running = 0;
    for k in (1..=top).rev() {
        running += counts[k];
        out[k - 1] = running;
    }
    out
}

/// Dominance order on partitions of the same integer.
pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    let (wp, wq) = (p.weight(), q.weight());
    if wp != wq {
        return Err(Error::WeightMismatch {
            left: wp,
            right: wq,
        });
    }
    Ok(dominates_slices(&p.0, &q.0))
}

fn dominates_slices(p: &[usize], q: &[usize]) -> bool {
    let (mut sp, mut sq) = (0usize, 0usize);
    for j in 0..p.len().max(q.len()) {
        sp += p.get(j).copied().unwrap_or(0);
        sq += q.get(j).copied().unwrap_or(0);
        if sp < sq {
            return false;
        }
    }
    true
}

/// True iff a bipartite graph with partite degree lists `a` and `b` exists.
pub fn gale_ryser(a: &Partition, b: &Partition) -> Result<bool> {
    let (wa, wb) = (a.weight(), b.weight());
    if wa != wb {
        return Err(Error::WeightMismatch {
            left: wa,
            right: wb,
        });
    }
    Ok(dominates_slices(&conjugate_slice(&a.0), &b.0))
}

/// A split of a degree sequence into two sides of equal weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub a: Partition,
    pub b: Partition,
}

impl Bipartition {
    pub fn new(a: Partition, b: Partition) -> Self {
        Bipartition { a, b }
    }

    /// Splits `d` into `a` and the complementary multiset.
    /// Returns `None` if `a` is not a submultiset of `d`.
    pub fn from_left(d: &DegreeSequence, a: Partition) -> Option<Self> {
        let b = multiset_difference(d.degrees(), a.parts())?;
        Some(Bipartition {
            a,
            b: Partition::new(b),
        })
    }

    /// Union equals `d`, both sides weigh |d|/2, and the Gale-Ryser condition holds.
    pub fn is_witness_for(&self, d: &DegreeSequence) -> bool {
        let mut union: Vec<usize> = self
            .a
            .parts()
            .iter()
            .chain(self.b.parts())
            .copied()
            .collect();
        union.sort_unstable_by(|x, y| y.cmp(x));
        let nonzero: Vec<usize> = d.degrees().iter().copied().filter(|&x| x > 0).collect();
        union == nonzero
            && self.a.weight() == self.b.weight()
            && gale_ryser(&self.a, &self.b).unwrap_or(false)
    }
}

/// `whole - part` for nonincreasing slices; `None` if `part` is not contained in `whole`.
fn multiset_difference(whole: &[usize], part: &[usize]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(whole.len().saturating_sub(part.len()));
    let mut j = 0;
    for &x in whole {
        if j < part.len() && part[j] == x {
            j += 1;
        } else {
            if j < part.len() && part[j] > x {
                return None;
            }
            out.push(x);
        }
    }
    (j == part.len()).then_some(out)
}
