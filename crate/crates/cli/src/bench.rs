use std::fmt;
use std::time::{Duration, Instant};

use potbip::gen::{draw, hard_extremes, GenSpec};
use potbip::{decide_sequence, DegreeSequence, Result, SearchConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Extremes for generated instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremes {
    /// A fresh pair per instance from the hard range.
    Hard,
    Fixed {
        d1: usize,
        dn: usize,
    },
}

/// Draws `trials` instances of length `n` from one seeded stream.
pub fn instances(
    n: usize,
    trials: usize,
    extremes: Extremes,
    seed: u64,
) -> Result<Vec<DegreeSequence>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let (d1, dn) = match extremes {
                Extremes::Hard => hard_extremes(n, &mut rng),
                Extremes::Fixed { d1, dn } => (d1, dn),
            };
            let spec = GenSpec {
                n,
                d1,
                dn,
                seed,
                count: 1,
            };
            spec.validate()?;
            draw(&spec, &mut rng)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub times: Vec<Duration>,
    pub yes: usize,
    pub no: usize,
    /// "No" answers that the budget may have caused.
    pub inexact: usize,
}

impl BenchReport {
    fn sorted(&self) -> Vec<Duration> {
        let mut t = self.times.clone();
        t.sort();
        t
    }

    pub fn min(&self) -> Duration {
        self.sorted().first().copied().unwrap_or_default()
    }

    pub fn max(&self) -> Duration {
        self.sorted().last().copied().unwrap_or_default()
    }

    /// Mean of the two middle times for an even count.
    pub fn median(&self) -> Duration {
        let t = self.sorted();
        match t.len() {
            0 => Duration::ZERO,
            k if k % 2 == 1 => t[k / 2],
            k => (t[k / 2 - 1] + t[k / 2]) / 2,
        }
    }
}

/// Times `decide_sequence` on each instance, one after another.
pub fn run(instances: &[DegreeSequence], config: &SearchConfig) -> Result<BenchReport> {
    let mut report = BenchReport {
        times: Vec::with_capacity(instances.len()),
        yes: 0,
        no: 0,
        inexact: 0,
    };
    for d in instances {
        let start = Instant::now();
        let v = decide_sequence(d, config)?;
        report.times.push(start.elapsed());
        if v.is_yes() {
            report.yes += 1;
        } else {
            report.no += 1;
            if !v.is_exact() {
                report.inexact += 1;
            }
        }
    }
    Ok(report)
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "runs={} min={:.3}ms median={:.3}ms max={:.3}ms yes={} no={} inexact={}",
            self.times.len(),
            ms(self.min()),
            ms(self.median()),
            ms(self.max()),
            self.yes,
            self.no,
            self.inexact
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hard_instances_are_reproducible() {
        let a = instances(60, 4, Extremes::Hard, 3).unwrap();
        assert_eq!(a, instances(60, 4, Extremes::Hard, 3).unwrap());
        for d in &a {
            assert!((30..=36).contains(&d.max_degree()));
            assert!((1..=6).contains(d.degrees().last().unwrap()));
        }
    }

    #[test]
    fn report_statistics() {
        let r = BenchReport {
            times: [4, 1, 3, 2].map(Duration::from_millis).to_vec(),
            yes: 4,
            no: 0,
            inexact: 0,
        };
        assert_eq!(r.min(), Duration::from_millis(1));
        assert_eq!(r.max(), Duration::from_millis(4));
        assert_eq!(r.median(), Duration::from_micros(2500));
    }

    #[test]
    fn run_counts_verdicts() {
        let ds = instances(8, 5, Extremes::Fixed { d1: 4, dn: 1 }, 0).unwrap();
        let r = run(&ds, &SearchConfig::default()).unwrap();
        assert_eq!(r.yes + r.no, 5);
        assert_eq!(r.times.len(), 5);
    }
}
