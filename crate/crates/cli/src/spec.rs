//! Family and field spec strings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use constacode::algebra::FiniteField;
use constacode::codes::{ConstacyclicCode, GeneratorMatrix};
use constacode::families::{self, Ambient};

use crate::CliError;

/// A family member named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    CPrime { q: u64, m: u32, r: u64, ell: u64 },
    C { q: u64, m: u32, r: u64, ell: u64 },
    /// NGRM(q,m,r,h) with `ℓ = (q-1)h + ℓ₀`.
    Ngrm { q: u64, m: u32, r: u64, h: u64, ell0: u64 },
    Dilix { q: u64, m: u32, h: u64 },
}

/// What a spec builds: a constacyclic code, or an evaluation code known
/// only by its generator matrix.
#[derive(Debug, Clone)]
pub enum Built {
    Constacyclic(ConstacyclicCode),
    Evaluation(GeneratorMatrix),
}

impl Built {
    pub fn generator_matrix(&self) -> GeneratorMatrix {
        match self {
            Built::Constacyclic(c) => c.generator_matrix(),
            Built::Evaluation(g) => g.clone(),
        }
    }
}

fn parse_pairs(body: &str, allowed: &[&str]) -> Result<BTreeMap<String, u64>, CliError> {
    let mut out = BTreeMap::new();
    for part in body.split(',').filter(|s| !s.trim().is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected key=value, found '{part}'")))?;
        let key = key.trim();
        let key = if key == "l" { "ell" } else { key };
        if !allowed.contains(&key) {
            return Err(CliError::Usage(format!("unknown key '{key}' (allowed: {})", allowed.join(", "))));
        }
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("'{value}' is not a nonnegative integer")))?;
        if out.insert(key.to_string(), value).is_some() {
            return Err(CliError::Usage(format!("key '{key}' given twice")));
        }
    }
    Ok(out)
}

fn take(map: &BTreeMap<String, u64>, key: &str) -> Result<u64, CliError> {
    map.get(key).copied().ok_or_else(|| CliError::Usage(format!("missing key '{key}'")))
}

fn take_m(map: &BTreeMap<String, u64>) -> Result<u32, CliError> {
    u32::try_from(take(map, "m")?).map_err(|_| CliError::Usage("m is too large".into()))
}

impl FromStr for FamilySpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (name, body) = s
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("'{s}' is not of the form family:key=value,...")))?;
        match name.trim() {
            "cprime" | "c" => {
                let map = parse_pairs(body, &["q", "m", "r", "ell"])?;
                let (q, m, r, ell) = (take(&map, "q")?, take_m(&map)?, take(&map, "r")?, take(&map, "ell")?);
                Ok(if name.trim() == "c" {
                    FamilySpec::C { q, m, r, ell }
                } else {
                    FamilySpec::CPrime { q, m, r, ell }
                })
            }
            "ngrm" => {
                let map = parse_pairs(body, &["q", "m", "r", "h", "ell0"])?;
                Ok(FamilySpec::Ngrm {
                    q: take(&map, "q")?,
                    m: take_m(&map)?,
                    r: take(&map, "r")?,
                    h: take(&map, "h")?,
                    ell0: map.get("ell0").copied().unwrap_or(0),
                })
            }
            "dilix" => {
                let map = parse_pairs(body, &["q", "m", "h", "ell"])?;
                let h = match (map.get("h"), map.get("ell")) {
                    (Some(_), Some(_)) => return Err(CliError::Usage("give h or ell, not both".into())),
                    (Some(&h), None) | (None, Some(&h)) => h,
                    (None, None) => return Err(CliError::Usage("missing key 'h'".into())),
                };
                Ok(FamilySpec::Dilix { q: take(&map, "q")?, m: take_m(&map)?, h })
            }
            other => Err(CliError::Usage(format!("unknown family '{other}' (cprime, c, ngrm, dilix)"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CPrime { q, m, r, ell } => write!(f, "cprime:q={q},m={m},r={r},ell={ell}"),
            FamilySpec::C { q, m, r, ell } => write!(f, "c:q={q},m={m},r={r},ell={ell}"),
            FamilySpec::Ngrm { q, m, r, h, ell0 } => write!(f, "ngrm:q={q},m={m},r={r},h={h},ell0={ell0}"),
            FamilySpec::Dilix { q, m, h } => write!(f, "dilix:q={q},m={m},h={h}"),
        }
    }
}

impl FamilySpec {
    pub fn q_m(&self) -> (u64, u32) {
        match *self {
            FamilySpec::CPrime { q, m, .. }
            | FamilySpec::C { q, m, .. }
            | FamilySpec::Ngrm { q, m, .. }
            | FamilySpec::Dilix { q, m, .. } => (q, m),
        }
    }

    pub fn ambient(&self, field: Option<Arc<FiniteField>>) -> Result<Ambient, CliError> {
        let (q, m) = self.q_m();
        let amb = match field {
            Some(f) => Ambient::with_field(q, m, f),
            None => Ambient::new(q, m),
        };
        amb.map_err(|e| CliError::Construction(e.to_string()))
    }

    pub fn build(&self, field: Option<Arc<FiniteField>>) -> Result<Built, CliError> {
        let amb = self.ambient(field)?;
        let built = match *self {
            FamilySpec::CPrime { r, ell, .. } => families::cprime(&amb, r, ell).map(Built::Constacyclic),
            FamilySpec::C { r, ell, .. } => families::cfamily(&amb, r, ell).map(Built::Constacyclic),
            FamilySpec::Ngrm { r, h, ell0, .. } => families::ngrm(&amb, r, h, ell0).map(Built::Evaluation),
            FamilySpec::Dilix { h, .. } => families::dilix(&amb, h).map(Built::Constacyclic),
        };
        built.map_err(|e| CliError::Construction(e.to_string()))
    }
}

/// `p^K:c0,...,cK`.
pub fn parse_field(s: &str) -> Result<Arc<FiniteField>, CliError> {
    s.parse::<FiniteField>()
        .map(Arc::new)
        .map_err(|e| CliError::Usage(format!("bad field spec '{s}': {e}")))
}

/// An inclusive range `a..b` or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl Range {
    pub fn values(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl FromStr for Range {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Construction(format!("invalid range '{s}'"));
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((a, b)) => Ok(Range { lo: num(a)?, hi: num(b.trim_start_matches('='))? }),
            None => {
                let v = num(s)?;
                Ok(Range { lo: v, hi: v })
            }
        }
    }
}

/// Ranges for `table`: `q=3..5 m=2 r=2 ell=1..3`; r and ell default to
/// every valid value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableRanges {
    pub q: Option<Range>,
    pub m: Option<Range>,
    pub r: Option<Range>,
    pub ell: Option<Range>,
}

impl TableRanges {
    pub fn parse(args: &[String]) -> Result<Self, CliError> {
        let mut out = TableRanges::default();
        for a in args {
            let (key, value) = a
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected key=range, found '{a}'")))?;
            let slot = match key.trim() {
                "q" => &mut out.q,
                "m" => &mut out.m,
                "r" => &mut out.r,
                "ell" | "l" => &mut out.ell,
                other => return Err(CliError::Usage(format!("unknown range key '{other}'"))),
            };
            if slot.replace(value.parse()?).is_some() {
                return Err(CliError::Usage(format!("range '{key}' given twice")));
            }
        }
        if out.q.is_none() || out.m.is_none() {
            return Err(CliError::Usage("table needs q= and m= ranges".into()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["cprime:q=3,m=4,r=2,ell=2", "c:q=5,m=2,r=2,ell=3", "ngrm:q=3,m=4,r=2,h=1,ell0=0", "dilix:q=3,m=4,h=2"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn malformed_specs_are_usage_errors() {
        for s in ["cprime", "cprime:q=3,m=4,r=2", "x:q=3", "c:q=3,m=4,r=2,ell=a", "c:q=3,q=3,m=2,r=2,ell=1", "c:z=1"] {
            assert!(matches!(s.parse::<FamilySpec>(), Err(CliError::Usage(_))), "{s}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!("1..3".parse::<Range>().unwrap(), Range { lo: 1, hi: 3 });
        assert_eq!("4".parse::<Range>().unwrap().values().count(), 1);
        assert_eq!("3..1".parse::<Range>().unwrap().values().count(), 0);
        assert!(matches!("1..x".parse::<Range>(), Err(CliError::Construction(_))));
    }
}
