//! Minimum distance from certificates, enumeration, or sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Symbol;
use crate::codes::{bch_bound_detailed, weight, ConstacyclicCode, DEFAULT_MAX_MULTIPLIERS};
use crate::cosets::FamilyTag;
use crate::families::{self, Ambient, DistancePrediction};

use super::{sphere_packing_max_d, weight_distribution, AnalysisError, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceKind {
    Exact,
    Range,
    /// The zero code.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum Certificate {
    Bch { delta: u64, multiplier: u64, start: u64, run: u64 },
    /// A closed-form lower bound for the family.
    FormulaLower { value: u64 },
    /// A closed-form exact value for the family.
    FormulaExact { value: u64 },
    /// Weight of an explicit codeword that passed the membership test.
    Witness { weight: u64, label: String },
    GeneratorWeight { weight: u64 },
    Singleton { value: u64 },
    SpherePacking { value: u64 },
    Enumeration { d: u64, side: Side },
}

impl Certificate {
    fn lower(&self) -> Option<u64> {
        match *self {
            Certificate::Bch { delta, .. } => Some(delta),
            Certificate::FormulaLower { value } | Certificate::FormulaExact { value } => Some(value),
            Certificate::Enumeration { d, .. } => Some(d),
            _ => None,
        }
    }

    fn upper(&self) -> Option<u64> {
        match *self {
            Certificate::FormulaExact { value }
            | Certificate::Singleton { value }
            | Certificate::SpherePacking { value } => Some(value),
            Certificate::Witness { weight, .. } | Certificate::GeneratorWeight { weight } => Some(weight),
            Certificate::Enumeration { d, .. } => Some(d),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub kind: DistanceKind,
    pub lo: Option<u64>,
    pub hi: Option<u64>,
    pub certificates: Vec<Certificate>,
    pub enumerated: bool,
    /// Smallest weight among random codewords; not a certificate.
    pub sampled_upper: Option<u64>,
}

impl DistanceResult {
    pub fn exact(&self) -> Option<u64> {
        (self.kind == DistanceKind::Exact).then_some(self.lo).flatten()
    }

    fn undefined() -> Self {
        DistanceResult {
            kind: DistanceKind::Undefined,
            lo: None,
            hi: None,
            certificates: Vec::new(),
            enumerated: false,
            sampled_upper: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DistanceOptions {
    pub cap: u64,
    /// Use the family formulas and witness when the code carries its
    /// family parameters.
    pub use_formulas: bool,
    /// Run enumeration when the certificates do not meet.
    pub allow_enumeration: bool,
    pub extra: Vec<Certificate>,
    /// Extra candidate codewords; only those in the code are used.
    pub witnesses: Vec<(String, Vec<Symbol>)>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            cap: super::cap_from_env(),
            use_formulas: true,
            allow_enumeration: true,
            extra: Vec::new(),
            witnesses: Vec::new(),
            samples: 100_000,
            seed: 0,
        }
    }
}

pub fn min_distance(code: &ConstacyclicCode, opts: &DistanceOptions) -> DistanceResult {
    if code.is_zero_code() {
        return DistanceResult::undefined();
    }
    let (n, k, q) = (code.n(), code.k(), code.q() as u64);
    let mut certs = Vec::new();
    if let Some(b) = bch_bound_detailed(code, DEFAULT_MAX_MULTIPLIERS) {
        certs.push(Certificate::Bch {
            delta: b.delta as u64,
            multiplier: b.multiplier as u64,
            start: b.start as u64,
            run: b.run as u64,
        });
    }
    certs.push(Certificate::GeneratorWeight { weight: code.generator().weight() as u64 });
    certs.push(Certificate::Singleton { value: (n - k + 1) as u64 });
    certs.push(Certificate::SpherePacking { value: sphere_packing_max_d(n, k, q) as u64 });
    if opts.use_formulas {
        certs.extend(family_certificates(code));
    }
    certs.extend(opts.extra.iter().cloned());
    for (label, w) in &opts.witnesses {
        if code.contains(w).unwrap_or(false) && weight(w) > 0 {
            certs.push(Certificate::Witness { weight: weight(w) as u64, label: label.clone() });
        }
    }
    let (mut lo, mut hi) = bounds(&certs);
    let mut enumerated = false;
    if lo < hi && opts.allow_enumeration {
        if let Ok((dist, side)) = weight_distribution(code, opts.cap) {
            let d = dist.min_distance().expect("nonzero code") as u64;
            certs.push(Certificate::Enumeration { d, side });
            enumerated = true;
            lo = d;
            hi = d;
        }
    }
    let sampled_upper = (lo < hi && opts.samples > 0).then(|| sample_upper(code, opts.samples, opts.seed));
    DistanceResult {
        kind: if lo == hi { DistanceKind::Exact } else { DistanceKind::Range },
        lo: Some(lo),
        hi: Some(hi),
        certificates: certs,
        enumerated,
        sampled_upper: sampled_upper.flatten(),
    }
}

fn bounds(certs: &[Certificate]) -> (u64, u64) {
    let lo = certs.iter().filter_map(Certificate::lower).max().unwrap_or(1);
    let hi = certs.iter().filter_map(Certificate::upper).min().unwrap_or(u64::MAX);
    (lo, hi)
}

/// Formula bounds and the explicit witness for codes built by the family
/// constructors with the default λ.
fn family_certificates(code: &ConstacyclicCode) -> Vec<Certificate> {
    let Some(set) = code.defining_set() else {
        return Vec::new();
    };
    let (Some(p), tag) = (set.params(), set.tag()) else {
        return Vec::new();
    };
    let Ok(amb) = Ambient::with_field(p.q, p.m, code.field().clone()) else {
        return Vec::new();
    };
    if amb.lambda(p.r) != code.lambda() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if let Ok(pred) = families::predict_params(tag, p.q, p.m, p.r, p.ell) {
        match pred.d {
            DistancePrediction::Exact { d } => out.push(Certificate::FormulaExact { value: d }),
            DistancePrediction::Range { lo, .. } => out.push(Certificate::FormulaLower { value: lo }),
            DistancePrediction::Undefined => {}
        }
        if tag == FamilyTag::C {
            if let Some(ell) = pred.canonical_ell {
                if let Ok(w) = families::distance_witness(&amb, p.r, ell) {
                    if w.weight > 0 && code.contains(&w.word).unwrap_or(false) {
                        out.push(Certificate::Witness { weight: w.weight as u64, label: "family-polynomial".into() });
                    }
                }
            }
        }
    }
    out
}

/// Minimum weight among `samples` random nonzero codewords.
pub fn sample_upper(code: &ConstacyclicCode, samples: usize, seed: u64) -> Option<u64> {
    let k = code.k();
    if k == 0 {
        return None;
    }
    let q = code.q();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<u64> = None;
    let mut msg = vec![0 as Symbol; k];
    for _ in 0..samples {
        for s in msg.iter_mut() {
            *s = rng.gen_range(0..q) as Symbol;
        }
        if msg.iter().all(|&s| s == 0) {
            continue;
        }
        let w = weight(&code.encode(&msg).expect("message has length k")) as u64;
        best = Some(best.map_or(w, |b| b.min(w)));
    }
    best
}

/// `Err` carries the reason enumeration was impossible.
pub fn exact_distance_by_enumeration(code: &ConstacyclicCode, cap: u64) -> Result<Option<u64>, AnalysisError> {
    let (dist, _) = weight_distribution(code, cap)?;
    Ok(dist.min_distance().map(|d| d as u64))
}
