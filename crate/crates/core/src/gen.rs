//! Random graphical sequences with a prescribed length and extreme degrees.
//!
//! Rejection sampling: interior degrees are uniform on `[dn, d1]`, one copy of
//! each extreme is pinned, odd weight is repaired by moving one interior entry
//! by one, and the draw is kept only if it is graphical. The distribution is
//! not uniform over graphical sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sequence::{is_graphical, DegreeSequence};

pub const MAX_ATTEMPTS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    /// Required largest degree.
    pub d1: usize,
    /// Required smallest degree.
    pub dn: usize,
    pub seed: u64,
    pub count: usize,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || self.dn < 1 || self.dn > self.d1 || self.d1 >= self.n {
            return Err(Error::InvalidGenSpec(format!(
                "need 1 <= dn <= d1 <= n - 1, got n={} d1={} dn={}",
                self.n, self.d1, self.dn
            )));
        }
        if self.d1 == self.dn && (self.n * self.d1) % 2 == 1 {
            return Err(Error::InvalidGenSpec(format!(
                "{} copies of {} have odd weight",
                self.n, self.d1
            )));
        }
        if self.n == 2 && self.d1 != self.dn {
            return Err(Error::InvalidGenSpec("length 2 forces (1,1)".into()));
        }
        Ok(())
    }
}

/// Draws one sequence from the spec's seed.
pub fn random_graphical(spec: &GenSpec) -> Result<DegreeSequence> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    draw(spec, &mut rng)
}

/// Draws `spec.count` sequences from one seeded stream.
pub fn generate(spec: &GenSpec) -> Result<Vec<DegreeSequence>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count).map(|_| draw(spec, &mut rng)).collect()
}

pub fn draw<R: Rng>(spec: &GenSpec, rng: &mut R) -> Result<DegreeSequence> {
    let GenSpec { n, d1, dn, .. } = *spec;
    let mut degrees = vec![0usize; n];
    for _ in 0..MAX_ATTEMPTS {
        degrees[0] = d1;
        degrees[n - 1] = dn;
        for d in &mut degrees[1..n - 1] {
            *d = rng.random_range(dn..=d1);
        }
        if degrees.iter().sum::<usize>() % 2 == 1 {
            if n == 2 {
                continue;
            }
            let i = rng.random_range(1..n - 1);
            if degrees[i] < d1 {
                degrees[i] += 1;
            } else if degrees[i] > dn {
                degrees[i] -= 1;
            } else {
                continue;
            }
        }
        let mut sorted = degrees.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if is_graphical(&sorted) {
            return Ok(DegreeSequence::from_sorted(sorted).expect("sorted"));
        }
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS))
}

/// Extremes in the range where the search does the most work:
/// d1 in [0.5n, 0.6n] and dn in [1, 0.1n].
pub fn hard_extremes<R: Rng>(n: usize, rng: &mut R) -> (usize, usize) {
    let lo = n.div_ceil(2);
    let hi = (n * 6 / 10).max(lo).min(n.saturating_sub(1));
    let d1 = rng.random_range(lo.min(hi)..=hi);
    let dn = rng.random_range(1..=(n / 10).max(1).min(d1));
    (d1, dn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, d1: usize, dn: usize, seed: u64) -> GenSpec {
        GenSpec {
            n,
            d1,
            dn,
            seed,
            count: 1,
        }
    }

    #[test]
    fn forced_outputs() {
        assert_eq!(
            random_graphical(&spec(4, 2, 2, 0)).unwrap().degrees(),
            &[2, 2, 2, 2]
        );
        assert_eq!(
            random_graphical(&spec(4, 3, 3, 0)).unwrap().degrees(),
            &[3, 3, 3, 3]
        );
        assert_eq!(
            random_graphical(&spec(4, 1, 1, 0)).unwrap().degrees(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            random_graphical(&spec(2, 1, 1, 9)).unwrap().degrees(),
            &[1, 1]
        );
    }

    #[test]
    fn regression_fixture() {
        let d = random_graphical(&spec(8, 4, 1, 42)).unwrap();
        assert_eq!(d.degrees(), &[4, 4, 4, 3, 2, 1, 1, 1]);
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(
            random_graphical(&spec(4, 4, 1, 0)),
            Err(Error::InvalidGenSpec(_))
        ));
        assert!(matches!(
            random_graphical(&spec(4, 1, 2, 0)),
            Err(Error::InvalidGenSpec(_))
        ));
        assert!(matches!(
            random_graphical(&spec(5, 3, 3, 0)),
            Err(Error::InvalidGenSpec(_))
        ));
        assert!(matches!(
            random_graphical(&spec(5, 2, 0, 0)),
            Err(Error::InvalidGenSpec(_))
        ));
    }

    #[test]
    fn reproducible_and_constrained() {
        let s = GenSpec {
            n: 40,
            d1: 22,
            dn: 3,
            seed: 7,
            count: 20,
        };
        let a = generate(&s).unwrap();
        assert_eq!(a, generate(&s).unwrap());
        for d in &a {
            assert!(d.is_graphical());
            assert_eq!(d.len(), 40);
            assert_eq!(d.max_degree(), 22);
            assert_eq!(*d.degrees().last().unwrap(), 3);
            assert_eq!(d.weight() % 2, 0);
        }
    }

    #[test]
    fn hard_extremes_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let (d1, dn) = hard_extremes(100, &mut rng);
            assert!((50..=60).contains(&d1));
            assert!((1..=10).contains(&dn));
        }
    }
}
