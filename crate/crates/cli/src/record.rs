use std::fmt;
use std::time::Instant;

use potbip::{decide_report, Decision, SearchConfig, Verdict};
use serde::{Deserialize, Serialize};

use crate::input::parse_sequence;

/// One decision, flattened for JSON lines.
///
/// `a` and `b` are present exactly when `verdict` is `"yes"`; `certificate`
/// and `exact` exactly when it is `"no"`; `error` exactly when it is `"invalid"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// The sequence as read, before sorting or dropping zeros.
    pub input: Vec<i64>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<u8>,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub zeros_dropped: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl OutputRecord {
    pub fn from_decision(input: Vec<i64>, decision: &Decision, elapsed_ms: f64) -> Self {
        let mut r = OutputRecord {
            input,
            verdict: String::new(),
            a: None,
            b: None,
            certificate: None,
            exact: None,
            phase: Some(decision.phase.number()),
            elapsed_ms,
            zeros_dropped: decision.zeros_dropped,
            error: None,
        };
        match &decision.verdict {
            Verdict::PotentiallyBipartite(w) => {
                r.verdict = "yes".into();
                r.a = Some(w.a.parts().to_vec());
                r.b = Some(w.b.parts().to_vec());
            }
            Verdict::NotPotentiallyBipartite { certificate, exact } => {
                r.verdict = "no".into();
                r.certificate = Some(certificate.name().into());
                r.exact = Some(*exact);
            }
        }
        r
    }

    pub fn invalid(input: Vec<i64>, error: String) -> Self {
        OutputRecord {
            input,
            verdict: "invalid".into(),
            a: None,
            b: None,
            certificate: None,
            exact: None,
            phase: None,
            elapsed_ms: 0.0,
            zeros_dropped: 0,
            error: Some(error),
        }
    }

    /// Process exit code for a single decision: 0 yes, 1 no, 2 invalid.
    pub fn exit_code(&self) -> i32 {
        match self.verdict.as_str() {
            "yes" => 0,
            "no" => 1,
            _ => 2,
        }
    }
}

/// Parses and decides one line of text.
pub fn decide_line(line: &str, config: &SearchConfig) -> OutputRecord {
    let input = match parse_sequence(line) {
        Ok(v) => v,
        Err(e) => return OutputRecord::invalid(Vec::new(), e),
    };
    let start = Instant::now();
    match decide_report(&input, config) {
        Ok(decision) => {
            let ms = start.elapsed().as_secs_f64() * 1e3;
            OutputRecord::from_decision(input, &decision, ms)
        }
        Err(e) => OutputRecord::invalid(input, e.to_string()),
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Human-readable form used by `decide` without `--json`.
impl fmt::Display for OutputRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict.as_str() {
            "yes" => {
                writeln!(f, "potentially bipartite")?;
                writeln!(f, "  a = {}", tuple(self.a.as_deref().unwrap_or_default()))?;
                writeln!(f, "  b = {}", tuple(self.b.as_deref().unwrap_or_default()))?;
            }
            "no" => {
                let exact = if self.exact == Some(true) {
                    "exact"
                } else {
                    "budget-limited"
                };
                writeln!(f, "not potentially bipartite")?;
                writeln!(
                    f,
                    "  certificate: {} ({exact})",
                    self.certificate.as_deref().unwrap_or("?")
                )?;
            }
            _ => return writeln!(f, "invalid: {}", self.error.as_deref().unwrap_or("")),
        }
        if self.zeros_dropped > 0 {
            writeln!(f, "  note: {} zero degrees dropped", self.zeros_dropped)?;
        }
        write!(
            f,
            "  phase {}, {:.3} ms",
            self.phase.unwrap_or(0),
            self.elapsed_ms
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub yes: usize,
    pub no: usize,
    pub invalid: usize,
}

impl Summary {
    pub fn tally<'r>(records: impl IntoIterator<Item = &'r OutputRecord>) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.verdict.as_str() {
                "yes" => s.yes += 1,
                "no" => s.no += 1,
                _ => s.invalid += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "yes={} no={} invalid={}",
            self.yes, self.no, self.invalid
        )
    }
}
