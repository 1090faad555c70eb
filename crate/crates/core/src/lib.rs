//! Decide whether a graphical degree sequence has a bipartite realization.
//!
//! The pipeline is [`normalize`] → Erdős–Gallai check → the seven first-phase
//! rules ([`rules::phase1`]) → budget-limited candidate enumeration
//! ([`search::search`]). [`oracle`] holds the exhaustive reference decision and
//! the census sweeps, [`census`] the sequence enumerator and [`gen`] the random
//! instance generator.

pub mod census;
pub mod error;
pub mod gen;
pub mod oracle;
pub mod rules;
pub mod search;
pub mod sequence;

pub use error::{Error, Result};
pub use rules::{phase1, Phase1Outcome, RuleId};
pub use search::{
    decide, decide_report, decide_sequence, Certificate, ComboOrder, Decision, DyOrder, LcPolicy,
    Phase, SearchConfig, Verdict,
};
pub use sequence::{
    complement, conjugate, dominates, gale_ryser, is_graphical, normalize, Bipartition,
    DegreeSequence, Normalized, Partition,
};
