//! The verification suites behind `constacode verify`.

mod examples;
mod properties;
mod theorems;

use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use constacode::analysis::{cap_from_env, macwilliams, weight_distribution, AnalysisError};
use constacode::codes::ConstacyclicCode;

use crate::report::{CheckRecord, RunReport, Status};
use crate::CliError;

#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub cap: u64,
    pub seed: u64,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { cap: cap_from_env(), seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Outcome {
    /// Pass iff the two renderings are identical.
    pub fn compare(expected: impl Display, computed: impl Display) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Outcome { expected, computed, status }
    }

    pub fn judged(ok: bool, expected: impl Display, computed: impl Display) -> Self {
        Outcome {
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }
}

type Runner = Box<dyn Fn(&Ctx) -> Result<Outcome, String> + Send + Sync>;

pub struct Check {
    pub id: String,
    pub criterion: u8,
    pub claim: String,
    run: Runner,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        criterion: u8,
        claim: impl Into<String>,
        run: impl Fn(&Ctx) -> Result<Outcome, String> + Send + Sync + 'static,
    ) -> Self {
        Check { id: id.into(), criterion, claim: claim.into(), run: Box::new(run) }
    }

    pub fn run(&self, ctx: &Ctx) -> CheckRecord {
        let start = Instant::now();
        let outcome = (self.run)(ctx).unwrap_or_else(|e| Outcome {
            expected: "(not reached)".into(),
            computed: format!("error: {e}"),
            status: Status::Fail,
        });
        CheckRecord {
            id: self.id.clone(),
            criterion: self.criterion,
            claim: self.claim.clone(),
            expected: outcome.expected,
            computed: outcome.computed,
            status: outcome.status,
            elapsed: start.elapsed(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PaperExamples,
    Theorems,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "paper-examples" => Ok(Suite::PaperExamples),
            "theorems" => Ok(Suite::Theorems),
            "all" => Ok(Suite::All),
            other => Err(CliError::Usage(format!("unknown suite '{other}' (paper-examples, theorems, all)"))),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperExamples => "paper-examples",
            Suite::Theorems => "theorems",
            Suite::All => "all",
        }
    }
}

/// Checks of a suite in their fixed order; `extended` adds the long ones.
pub fn checks(suite: Suite, extended: bool) -> Vec<Check> {
    let mut out = Vec::new();
    if suite != Suite::Theorems {
        out.extend(examples::checks());
        if extended {
            out.extend(examples::extended());
        }
    }
    if suite != Suite::PaperExamples {
        out.extend(theorems::checks());
        out.extend(properties::checks());
    }
    out.sort_by_key(|c| c.criterion);
    out
}

pub fn run(suite: Suite, extended: bool, ctx: &Ctx) -> RunReport {
    let records = checks(suite, extended).iter().map(|c| c.run(ctx)).collect();
    RunReport::new(suite.name(), records)
}

/// `[n,k,d]` with `-` for an undefined distance.
pub(crate) fn triple(n: usize, k: usize, d: Option<u64>) -> String {
    match d {
        Some(d) => format!("[{n},{k},{d}]"),
        None => format!("[{n},{k},-]"),
    }
}

/// Parameters of a code and its dual from one enumeration of the smaller
/// side plus MacWilliams.
pub(crate) fn enumerated_pair(code: &ConstacyclicCode, cap: u64) -> Result<(String, String), AnalysisError> {
    let (dist, _) = weight_distribution(code, cap)?;
    let dual = macwilliams(&dist)?;
    let (n, k) = (code.n(), code.k());
    let d = dist.min_distance().map(|d| d as u64);
    let dd = dual.min_distance().map(|d| d as u64);
    Ok((triple(n, k, d), triple(n, n - k, dd)))
}

pub(crate) fn err(e: impl Display) -> String {
    e.to_string()
}

/// Prime powers `q >= 3` and `m >= min_m` with `q^m <= max`.
pub(crate) fn grid(max: u64, min_m: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for q in 3..=max {
        if constacode::algebra::prime_power(q).is_none() {
            continue;
        }
        let mut m = min_m;
        while q.checked_pow(m).is_some_and(|v| v <= max) {
            out.push((q, m));
            m += 1;
        }
    }
    out
}

/// `r >= 2` dividing `q - 1`.
pub(crate) fn divisors(q: u64) -> Vec<u64> {
    (2..q).filter(|r| (q - 1) % r == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_ordered() {
        let all = checks(Suite::All, true);
        let mut ids: Vec<&str> = all.iter().map(|c| c.id.as_str()).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(all.windows(2).all(|w| w[0].criterion <= w[1].criterion));
    }

    #[test]
    fn grid_small() {
        assert_eq!(grid(30, 2), vec![(3, 2), (3, 3), (4, 2), (5, 2)]);
        assert_eq!(divisors(13), vec![2, 3, 4, 6, 12]);
    }

    #[test]
    fn suite_names() {
        assert!(matches!("bogus".parse::<Suite>(), Err(CliError::Usage(_))));
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
    }
}
