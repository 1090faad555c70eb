//! Second phase: structured, budget-limited enumeration of candidate bipartitions.
//!
//! The left side `a` is assembled from three pieces:
//!
//! 1. a prefix `d_1..d_x` of the largest degrees, for x from `x0` down to the
//!    stop index;
//! 2. `c` copies of a value `d_y` below `d_{x+1}` (every such value and copy
//!    count is tried);
//! 3. a combination of smaller terms. At most `l_c` combinations are generated
//!    per (x, d_y) pair, shared across the copy counts `c` in increasing order.
//!
//! Each assembled `a` is checked with Gale-Ryser against `d - a`. A "yes" always
//! carries a valid witness; a "no" is exact unless some node was cut short by
//! the budget.

mod bounds;
mod combos;
mod table;

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

pub use bounds::{compute_bounds, compute_x0, SearchBounds};
pub use combos::{small_term_combinations, Combinations, ComboOrder};

use crate::error::{Error, Result};
use crate::rules::{phase1, Phase1Outcome, RuleId};
use crate::sequence::{gale_ryser, normalize, Bipartition, DegreeSequence, Partition};
use bounds::Context;
use combos::ComboCursor;

/// How many small-term combinations each (x, d_y) pair may generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcPolicy {
    Constant(usize),
    /// `multiplier * n`.
    LinearInN(usize),
    Unlimited,
}

impl Default for LcPolicy {
    fn default() -> Self {
        LcPolicy::LinearInN(1)
    }
}

impl LcPolicy {
    /// Budget for a sequence of length `n`; `None` means unlimited.
    pub fn resolve(self, n: usize) -> Option<usize> {
        match self {
            LcPolicy::Constant(c) => Some(c),
            LcPolicy::LinearInN(m) => Some(m * n),
            LcPolicy::Unlimited => None,
        }
    }
}

/// Order in which the values d_y are tried at each prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DyOrder {
    #[default]
    LargestFirst,
    SmallestFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub lc: LcPolicy,
    pub dy_order: DyOrder,
    pub combo_order: ComboOrder,
    /// Worker threads for the prefix fan-out; 1 is the deterministic serial mode.
    pub parallel_width: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            lc: LcPolicy::default(),
            dy_order: DyOrder::default(),
            combo_order: ComboOrder::default(),
            parallel_width: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_lc(lc: LcPolicy) -> Self {
        SearchConfig {
            lc,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Rule(RuleId),
    SearchExhausted,
}

impl Certificate {
    pub fn name(self) -> &'static str {
        match self {
            Certificate::Rule(r) => r.name(),
            Certificate::SearchExhausted => "search_exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    PotentiallyBipartite(Bipartition),
    NotPotentiallyBipartite {
        certificate: Certificate,
        /// False when the budget skipped combinations, so the "no" may be wrong.
        exact: bool,
    },
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::PotentiallyBipartite(_))
    }

    pub fn witness(&self) -> Option<&Bipartition> {
        match self {
            Verdict::PotentiallyBipartite(w) => Some(w),
            Verdict::NotPotentiallyBipartite { .. } => None,
        }
    }

    /// A "yes" is always exact.
    pub fn is_exact(&self) -> bool {
        match self {
            Verdict::PotentiallyBipartite(_) => true,
            Verdict::NotPotentiallyBipartite { exact, .. } => *exact,
        }
    }

    fn no(certificate: Certificate, exact: bool) -> Self {
        Verdict::NotPotentiallyBipartite { certificate, exact }
    }
}

/// Which phase settled the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Rules,
    Enumeration,
}

impl Phase {
    pub fn number(self) -> u8 {
        match self {
            Phase::Rules => 1,
            Phase::Enumeration => 2,
        }
    }
}

/// Full outcome of [`decide_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub sequence: DegreeSequence,
    pub zeros_dropped: usize,
    pub verdict: Verdict,
    pub phase: Phase,
}

/// Normalizes raw input and runs the whole pipeline.
pub fn decide(raw: &[i64], config: &SearchConfig) -> Result<Verdict> {
    decide_report(raw, config).map(|d| d.verdict)
}

pub fn decide_report(raw: &[i64], config: &SearchConfig) -> Result<Decision> {
    let normalized = normalize(raw)?;
    let (verdict, phase) = decide_with_phase(&normalized.sequence, config)?;
    Ok(Decision {
        sequence: normalized.sequence,
        zeros_dropped: normalized.zeros_dropped,
        verdict,
        phase,
    })
}

/// Decision on an already normalized, zero-free sequence.
pub fn decide_sequence(d: &DegreeSequence, config: &SearchConfig) -> Result<Verdict> {
    decide_with_phase(d, config).map(|(v, _)| v)
}

fn decide_with_phase(d: &DegreeSequence, config: &SearchConfig) -> Result<(Verdict, Phase)> {
    if !d.is_zero_free() {
        return Err(Error::ZeroDegree);
    }
    if !d.is_graphical() {
        return Err(Error::NotGraphical);
    }
    if d.is_empty() {
        let empty = Bipartition::new(Partition::default(), Partition::default());
        return Ok((Verdict::PotentiallyBipartite(empty), Phase::Rules));
    }
    if let Phase1Outcome::Rejected(rule) = phase1(d)? {
        return Ok((Verdict::no(Certificate::Rule(rule), true), Phase::Rules));
    }
    let ctx = Context::new(d);
    let bounds = &ctx.bounds;
    let verdict = if bounds.window_is_empty() {
        Verdict::no(Certificate::SearchExhausted, true)
    } else if bounds.s == 0 {
        let b = Bipartition::from_left(d, bounds.a_f.clone()).expect("a_f is drawn from d");
        if gale_ryser(&b.a, &b.b)? {
            Verdict::PotentiallyBipartite(b)
        } else {
            Verdict::no(Certificate::SearchExhausted, true)
        }
    } else {
        run_search(&ctx, config, &mut |_| {})
    };
    Ok((verdict, Phase::Enumeration))
}

/// Second-phase enumeration on its own. Expects `d` to have passed the rules
/// and `bounds` to come from [`compute_bounds`] on the same sequence.
pub fn search(d: &DegreeSequence, bounds: &SearchBounds, config: &SearchConfig) -> Verdict {
    search_with_observer(d, bounds, config, |_| {})
}

/// Serial search that reports every assembled left side to `observe` before testing it.
pub fn search_with_observer(
    d: &DegreeSequence,
    bounds: &SearchBounds,
    config: &SearchConfig,
    mut observe: impl FnMut(&Partition),
) -> Verdict {
    let mut ctx = Context::new(d);
    ctx.bounds = bounds.clone();
    if ctx.bounds.window_is_empty() {
        return Verdict::no(Certificate::SearchExhausted, true);
    }
    let serial = SearchConfig {
        parallel_width: 1,
        ..*config
    };
    let mut hook = |counts: &[usize]| observe(&left_side(&ctx, counts));
    run_search(&ctx, &serial, &mut hook)
}

fn left_side(ctx: &Context<'_>, counts: &[usize]) -> Partition {
    let values = ctx.table.values();
    let mut parts = Vec::new();
    for (level, &c) in counts.iter().enumerate() {
        parts.extend(std::iter::repeat_n(values[level], c));
    }
    Partition::new(parts)
}

/// Smallest prefix length the descent may reach.
fn stop_index(ctx: &Context<'_>) -> usize {
    if !ctx.bounds.a_f.is_empty() {
        return ctx.bounds.a_f.len();
    }
    let top = ctx.d[0];
    let copies = ctx.d.iter().take_while(|&&x| x == top).count();
    copies.div_ceil(2)
}

fn run_search(
    ctx: &Context<'_>,
    config: &SearchConfig,
    observe: &mut dyn FnMut(&[usize]),
) -> Verdict {
    let stop = stop_index(ctx);
    let x0 = ctx.bounds.x0;
    if x0 < stop {
        return Verdict::no(Certificate::SearchExhausted, true);
    }
    let budget = config.lc.resolve(ctx.d.len());
    let truncated = AtomicBool::new(false);

    let found = if config.parallel_width <= 1 {
        let mut worker = PrefixWorker::new(ctx, config, budget);
        let mut hit = None;
        for x in (stop..=x0).rev() {
            if let Some(a) = worker.run(x, &truncated, observe) {
                hit = Some(a);
                break;
            }
        }
        hit
    } else {
        let stop_flag = AtomicBool::new(false);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.parallel_width)
            .build()
            .expect("thread pool");
        let xs: Vec<usize> = (stop..=x0).rev().collect();
        pool.install(|| {
            xs.into_par_iter().find_map_any(|x| {
                if stop_flag.load(Ordering::Relaxed) {
                    return None;
                }
                let mut worker = PrefixWorker::new(ctx, config, budget);
                let hit = worker.run(x, &truncated, &mut |_| {});
                if hit.is_some() {
                    stop_flag.store(true, Ordering::Relaxed);
                }
                hit
            })
        })
    };

    match found {
        Some(counts) => {
            let a = left_side(ctx, &counts);
            let b = Bipartition::from_left(
                &DegreeSequence::from_sorted(ctx.d.to_vec()).expect("sorted"),
                a,
            )
            .expect("left side is drawn from d");
            Verdict::PotentiallyBipartite(b)
        }
        None => Verdict::no(
            Certificate::SearchExhausted,
            !truncated.load(Ordering::Relaxed),
        ),
    }
}

/// Scratch state for exploring one prefix length.
struct PrefixWorker<'c, 'd> {
    ctx: &'c Context<'d>,
    config: &'c SearchConfig,
    budget: Option<usize>,
    /// Left-side multiplicities per value level.
    a_counts: Vec<usize>,
}

impl<'c, 'd> PrefixWorker<'c, 'd> {
    fn new(ctx: &'c Context<'d>, config: &'c SearchConfig, budget: Option<usize>) -> Self {
        PrefixWorker {
            ctx,
            config,
            budget,
            a_counts: vec![0; ctx.table.values().len()],
        }
    }

    /// Explores every node under the prefix d_1..d_x; returns the left side on success.
    fn run(
        &mut self,
        x: usize,
        truncated: &AtomicBool,
        observe: &mut dyn FnMut(&[usize]),
    ) -> Option<Vec<usize>> {
        let ctx = self.ctx;
        let bounds = &ctx.bounds;
        let prefix_sum = ctx.prefix[x];
        if prefix_sum > ctx.half {
            return None;
        }
        // d_{x+1} is the largest degree left out of `a`, so it heads `b`.
        let excluded = ctx.d[x];
        let lo = bounds.ell_lo.max(excluded);
        let hi = bounds.ell_hi;
        if lo > hi || x > hi {
            return None;
        }

        self.a_counts.iter_mut().for_each(|c| *c = 0);
        for i in 0..x {
            self.a_counts[ctx.level_of[i]] += 1;
        }

        let rest = ctx.half - prefix_sum;
        if rest == 0 {
            if x >= lo {
                observe(&self.a_counts);
                if self.passes() {
                    return Some(self.a_counts.clone());
                }
            }
            return None;
        }

        // Values available for d_y: every copy of each value below d_{x+1}.
        let below = ctx.level_of[x];
        let levels: Box<dyn Iterator<Item = usize>> = match self.config.dy_order {
            DyOrder::LargestFirst => Box::new((0..below).rev()),
            DyOrder::SmallestFirst => Box::new(0..below),
        };
        let values = ctx.table.values();
        let mult = ctx.table.mult();
        for level in levels {
            let v = values[level];
            let mut produced = 0usize;
            for c in 1..=mult[level] {
                let placed = x + c;
                if c * v > rest || placed > hi {
                    break;
                }
                let target = rest - c * v;
                let k_lo = lo.saturating_sub(placed);
                let k_hi = hi - placed;
                if !ctx.table.any_in(level, target, k_lo, k_hi) {
                    continue;
                }
                if self.budget.is_some_and(|b| produced >= b) {
                    truncated.store(true, Ordering::Relaxed);
                    break;
                }
                self.a_counts[level] += c;
                let hit = self.node(
                    level,
                    target,
                    (k_lo, k_hi),
                    &mut produced,
                    truncated,
                    observe,
                );
                self.a_counts[level] -= c;
                if hit.is_some() {
                    return hit;
                }
            }
        }
        None
    }

    /// Generates small-term combinations for one copy count of d_y until the
    /// pair's shared budget runs out.
    fn node(
        &mut self,
        level: usize,
        target: usize,
        (k_lo, k_hi): (usize, usize),
        produced: &mut usize,
        truncated: &AtomicBool,
        observe: &mut dyn FnMut(&[usize]),
    ) -> Option<Vec<usize>> {
        let ctx = self.ctx;
        let mut cursor = ComboCursor::new(
            &ctx.table,
            level,
            target,
            k_lo,
            k_hi,
            self.config.combo_order,
        );
        while let Some(extra) = cursor.next() {
            if self.budget.is_some_and(|b| *produced >= b) {
                truncated.store(true, Ordering::Relaxed);
                break;
            }
            *produced += 1;
            for (i, &c) in extra.iter().enumerate() {
                self.a_counts[i] += c;
            }
            observe(&self.a_counts);
            let ok = self.passes();
            let found = ok.then(|| self.a_counts.clone());
            for (i, &c) in extra.iter().enumerate() {
                self.a_counts[i] -= c;
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Gale-Ryser on multiplicity vectors: for every t, the t largest terms of
    /// `b` sum to at most sum(min(a_i, t)).
    fn passes(&self) -> bool {
        let values = self.ctx.table.values();
        let mult = self.ctx.table.mult();
        let a = &self.a_counts;
        let k = values.len();
        let mut geq_t: usize = a.iter().sum();
        let mut low = 0;
        let (mut fa, mut fb) = (0usize, 0usize);
        let mut t = 0usize;
        for level in (0..k).rev() {
            let bv = values[level];
            for _ in 0..mult[level] - a[level] {
                t += 1;
                while low < k && values[low] < t {
                    geq_t -= a[low];
                    low += 1;
                }
                fa += geq_t;
                fb += bv;
                if fb > fa {
                    return false;
                }
            }
        }
        true
    }
}
