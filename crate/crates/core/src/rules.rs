//! First-phase rejection rules.
//!
//! Each rule is a cheap necessary condition for a zero-free graphical sequence
//! to have a bipartite realization. A firing rule proves the answer is "no".
//! [`phase1`] runs them in a fixed order and reports the first one that fires.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// No submultiset sums to half the weight.
    NoCandidateBipartition,
    /// More edges than a bipartite graph on n vertices can carry.
    Mantel,
    /// Not enough small degrees to host the neighbours of a top-degree vertex.
    SmallDegrees,
    /// The largest n - d_1 degrees cannot reach half the weight.
    LargeDegrees,
    /// Degrees that are forced into the left side already exceed half the weight.
    FixedDegrees,
    /// Residue of the complement forces a triangle.
    Residue,
    /// Murphy's bound on the complement forces a triangle.
    MurphyBound,
}

impl RuleId {
    pub const ALL: [RuleId; 7] = [
        RuleId::NoCandidateBipartition,
        RuleId::Mantel,
        RuleId::SmallDegrees,
        RuleId::LargeDegrees,
        RuleId::FixedDegrees,
        RuleId::Residue,
        RuleId::MurphyBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::NoCandidateBipartition => "NoCandidateBipartition",
            RuleId::Mantel => "Mantel",
            RuleId::SmallDegrees => "SmallDegrees",
            RuleId::LargeDegrees => "LargeDegrees",
            RuleId::FixedDegrees => "FixedDegrees",
            RuleId::Residue => "Residue",
            RuleId::MurphyBound => "MurphyBound",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleId> {
        RuleId::ALL.into_iter().find(|r| r.name() == name)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase1Outcome {
    Rejected(RuleId),
    Undecided,
}

/// Subset-sum reachability over 0..=|d|/2 with a word-packed bitset.
pub fn has_candidate_bipartition(d: &DegreeSequence) -> Result<bool> {
    let weight = d.weight();
    if weight % 2 == 1 {
        return Err(Error::OddWeight(weight));
    }
    let target = weight / 2;
    let words = target / 64 + 1;
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for &x in d.degrees() {
        if x == 0 || x > target {
            continue;
        }
        shift_or_in_place(&mut reach, x);
        if reach[target / 64] >> (target % 64) & 1 == 1 {
            return Ok(true);
        }
    }
    Ok(reach[target / 64] >> (target % 64) & 1 == 1)
}

/// `bits |= bits << shift`, truncated to the current length.
fn shift_or_in_place(bits: &mut [u64], shift: usize) {
    let (word_shift, bit_shift) = (shift / 64, shift % 64);
    for i in (word_shift..bits.len()).rev() {
        let src = i - word_shift;
        let mut v = bits[src] << bit_shift;
        if bit_shift > 0 && src > 0 {
            v |= bits[src - 1] >> (64 - bit_shift);
        }
        bits[i] |= v;
    }
}

pub fn rule_mantel(d: &DegreeSequence) -> bool {
    let n = d.len();
    2 * d.weight() > n * n
}

pub fn rule_small_degrees(d: &DegreeSequence) -> bool {
    let (n, top) = (d.len(), d.max_degree());
    if n == 0 || top == 0 || top >= n {
        return false;
    }
    top + d.degrees()[n - top] > n
}

pub fn rule_large_degrees(d: &DegreeSequence) -> bool {
    let (n, top) = (d.len(), d.max_degree());
    if n == 0 || top >= n {
        return false;
    }
    let head: usize = d.degrees()[..n - top].iter().sum();
    2 * head < d.weight()
}

pub fn rule_fixed_degrees(d: &DegreeSequence) -> bool {
    let (n, top) = (d.len(), d.max_degree());
    if n == 0 || top >= n {
        return false;
    }
    let forced: usize = d.degrees().iter().filter(|&&x| x > n - top).sum();
    2 * forced > d.weight()
}

/// Number of terms left when iterated Havel–Hakimi reduction reaches all zeros.
///
/// Degrees are kept as a count-per-value histogram so each round is a linear pass.
pub fn residue(d: &DegreeSequence) -> Result<usize> {
    let top = d.max_degree();
    let mut counts = vec![0usize; top + 1];
    for &x in d.degrees() {
        counts[x] += 1;
    }
    let mut next = vec![0usize; top + 1];
    let mut remaining = d.len();
    let mut high = top;
    while high > 0 {
        // Drop one copy of the largest term.
        counts[high] -= 1;
        remaining -= 1;
        let mut need = high;
        next.iter_mut().for_each(|c| *c = 0);
        for v in (0..=high).rev() {
            let take = need.min(counts[v]);
            if v == 0 && take > 0 {
                return Err(Error::NegativeResidueTerm);
            }
            need -= take;
            if take > 0 {
                next[v - 1] += take;
            }
            next[v] += counts[v] - take;
        }
        if need > 0 {
            return Err(Error::NegativeResidueTerm);
        }
        std::mem::swap(&mut counts, &mut next);
        while high > 0 && counts[high] == 0 {
            high -= 1;
        }
    }
    Ok(remaining)
}

/// Greedy jump scan over the nondecreasing degree list.
pub fn murphy_bound(d: &DegreeSequence) -> usize {
    let ascending: Vec<usize> = d.degrees().iter().rev().copied().collect();
    let mut beta = 0;
    let mut i = 0;
    while i < ascending.len() {
        beta += 1;
        i += ascending[i] + 1;
    }
    beta
}

type Rule = fn(&DegreeSequence) -> bool;

/// Runs the seven rules in order; the first firing rule wins.
pub fn phase1(d: &DegreeSequence) -> Result<Phase1Outcome> {
    if d.is_empty() {
        return Ok(Phase1Outcome::Undecided);
    }
    if !d.is_zero_free() {
        return Err(Error::ZeroDegree);
    }
    if !has_candidate_bipartition(d)? {
        return Ok(Phase1Outcome::Rejected(RuleId::NoCandidateBipartition));
    }
    let checks: [(RuleId, Rule); 4] = [
        (RuleId::Mantel, rule_mantel),
        (RuleId::SmallDegrees, rule_small_degrees),
        (RuleId::LargeDegrees, rule_large_degrees),
        (RuleId::FixedDegrees, rule_fixed_degrees),
    ];
    for (id, fires) in checks {
        if fires(d) {
            return Ok(Phase1Outcome::Rejected(id));
        }
    }
    let comp = d.complement()?;
    if residue(&comp)? >= 3 {
        return Ok(Phase1Outcome::Rejected(RuleId::Residue));
    }
    if murphy_bound(&comp) >= 3 {
        return Ok(Phase1Outcome::Rejected(RuleId::MurphyBound));
    }
    Ok(Phase1Outcome::Undecided)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_unsorted(v.to_vec())
    }

    #[test]
    fn candidate_bipartition_examples() {
        assert_eq!(has_candidate_bipartition(&ds(&[2, 2, 2])), Ok(false));
        assert_eq!(has_candidate_bipartition(&ds(&[3; 6])), Ok(true));
        assert_eq!(has_candidate_bipartition(&ds(&[2; 5])), Ok(false));
        assert_eq!(
            has_candidate_bipartition(&ds(&[3, 1, 1])),
            Err(Error::OddWeight(5))
        );
    }

    #[test]
    fn bitset_shift_crosses_words() {
        // 70 + 70 needs a carry across the 64-bit boundary.
        assert_eq!(has_candidate_bipartition(&ds(&[70, 70])), Ok(true));
        assert_eq!(has_candidate_bipartition(&ds(&[65, 63, 1, 1])), Ok(true));
        assert_eq!(has_candidate_bipartition(&ds(&[66, 64])), Ok(false));
    }

    #[test]
    fn mantel_examples() {
        assert!(rule_mantel(&ds(&[3, 3, 3, 3])));
        assert!(!rule_mantel(&ds(&[2, 2, 2, 2])));
        assert!(!rule_mantel(&ds(&[1, 1])));
    }

    #[test]
    fn small_degree_examples() {
        assert!(rule_small_degrees(&ds(&[3, 3, 3, 3])));
        assert!(!rule_small_degrees(&ds(&[3; 6])));
        assert!(rule_small_degrees(&ds(&[6, 6, 6, 6, 6, 6, 6, 2])));
    }

    #[test]
    fn large_degree_examples() {
        assert!(rule_large_degrees(&ds(&[6, 6, 6, 6, 6, 6, 6, 2])));
        assert!(!rule_large_degrees(&ds(&[3; 6])));
        assert!(!rule_large_degrees(&ds(&[2, 2, 2, 2])));
    }

    #[test]
    fn fixed_degree_examples() {
        assert!(rule_fixed_degrees(&ds(&[6, 6, 6, 6, 6, 6, 6, 2])));
        assert!(!rule_fixed_degrees(&ds(&[3; 6])));
        assert!(!rule_fixed_degrees(&ds(&[4, 4, 3, 3, 2, 2, 1, 1])));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(&ds(&[0, 0, 0])), Ok(3));
        assert_eq!(residue(&ds(&[1, 1])), Ok(1));
        assert_eq!(residue(&ds(&[2; 6])), Ok(2));
        assert_eq!(residue(&ds(&[3, 3, 3, 3])), Ok(1));
        assert_eq!(residue(&ds(&[])), Ok(0));
        assert_eq!(residue(&ds(&[3, 1])), Err(Error::NegativeResidueTerm));
    }

    #[test]
    fn murphy_examples() {
        assert_eq!(murphy_bound(&ds(&[0, 0, 0])), 3);
        assert_eq!(murphy_bound(&ds(&[2; 6])), 2);
        assert_eq!(murphy_bound(&ds(&[3, 3, 2, 2, 1, 1])), 3);
    }

    #[test]
    fn phase1_examples() {
        assert_eq!(
            phase1(&ds(&[2, 2, 2])),
            Ok(Phase1Outcome::Rejected(RuleId::NoCandidateBipartition))
        );
        assert_eq!(
            phase1(&ds(&[3, 3, 3, 3])),
            Ok(Phase1Outcome::Rejected(RuleId::Mantel))
        );
        assert_eq!(phase1(&ds(&[3; 6])), Ok(Phase1Outcome::Undecided));
        // Half weight 22 is unreachable from seven 6s and one 2.
        assert_eq!(
            phase1(&ds(&[6, 6, 6, 6, 6, 6, 6, 2])),
            Ok(Phase1Outcome::Rejected(RuleId::NoCandidateBipartition))
        );
        assert_eq!(
            phase1(&ds(&[3, 2, 2, 1])),
            Ok(Phase1Outcome::Rejected(RuleId::SmallDegrees))
        );
        assert_eq!(
            phase1(&ds(&[5, 3, 2, 2, 2, 2, 2])),
            Ok(Phase1Outcome::Rejected(RuleId::LargeDegrees))
        );
        assert_eq!(
            phase1(&ds(&[3, 3, 2, 1, 1])),
            Ok(Phase1Outcome::Rejected(RuleId::FixedDegrees))
        );
        assert_eq!(
            phase1(&ds(&[3, 3, 3, 3, 1, 1])),
            Ok(Phase1Outcome::Rejected(RuleId::Residue))
        );
        assert_eq!(phase1(&ds(&[2, 1, 0])), Err(Error::ZeroDegree));
    }

    #[test]
    fn rule_names_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(RuleId::from_name(r.name()), Some(r));
        }
    }
}
