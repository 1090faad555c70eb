//! Library half of the `potbip` command: input parsing, output records, table
//! rows and benchmark runs. `main.rs` only wires these to flags and streams.

pub mod bench;
pub mod input;
pub mod record;
pub mod table;

use potbip::LcPolicy;

/// Parses `--lc`: a plain integer, `n`, `<k>n` or `unlimited`.
pub fn parse_lc(s: &str) -> Result<LcPolicy, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("unlimited") {
        return Ok(LcPolicy::Unlimited);
    }
    if let Some(k) = s.strip_suffix('n') {
        if k.is_empty() {
            return Ok(LcPolicy::LinearInN(1));
        }
        return k
            .parse()
            .map(LcPolicy::LinearInN)
            .map_err(|_| format!("bad budget {s:?}"));
    }
    s.parse()
        .map(LcPolicy::Constant)
        .map_err(|_| format!("bad budget {s:?}; expected an integer, \"n\" or \"unlimited\""))
}

pub fn lc_label(lc: LcPolicy) -> String {
    match lc {
        LcPolicy::Constant(c) => c.to_string(),
        LcPolicy::LinearInN(1) => "n".into(),
        LcPolicy::LinearInN(k) => format!("{k}n"),
        LcPolicy::Unlimited => "unlimited".into(),
    }
}
