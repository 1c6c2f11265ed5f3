//! Closed-form parameter predictions for both families.

use serde::Serialize;

use crate::algebra::prime_power;
use crate::analysis::sphere_packing_max_d;
use crate::cosets::{normalize_ell, EllClass, FamilyParams, FamilyTag};

use super::{binomial, c_dimension, c_dimension_upper, cprime_dimension, FamilyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DistancePrediction {
    Exact { d: u64 },
    Range { lo: u64, hi: u64 },
    /// The zero code.
    Undefined,
}

impl DistancePrediction {
    fn from_bounds(lo: u64, hi: u64) -> Self {
        if lo >= hi {
            DistancePrediction::Exact { d: hi }
        } else {
            DistancePrediction::Range { lo, hi }
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match *self {
            DistancePrediction::Exact { d } => Some(d),
            _ => None,
        }
    }

    pub fn lower(&self) -> Option<u64> {
        match *self {
            DistancePrediction::Exact { d } => Some(d),
            DistancePrediction::Range { lo, .. } => Some(lo),
            DistancePrediction::Undefined => None,
        }
    }

    pub fn upper(&self) -> Option<u64> {
        match *self {
            DistancePrediction::Exact { d } => Some(d),
            DistancePrediction::Range { hi, .. } => Some(hi),
            DistancePrediction::Undefined => None,
        }
    }

    /// `d` is consistent with this prediction.
    pub fn admits(&self, d: Option<u64>) -> bool {
        match (*self, d) {
            (DistancePrediction::Undefined, None) => true,
            (DistancePrediction::Exact { d: e }, Some(d)) => e == d,
            (DistancePrediction::Range { lo, hi }, Some(d)) => lo <= d && d <= hi,
            _ => false,
        }
    }
}

/// One closed-form statement that applies to the parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<DistancePrediction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_d: Option<DistancePrediction>,
}

impl Claim {
    fn new(source: &'static str) -> Self {
        Claim { source, k: None, d: None, dual_k: None, dual_d: None }
    }

    fn k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    fn d(mut self, d: DistancePrediction) -> Self {
        self.d = Some(d);
        self
    }

    fn dual_k(mut self, k: u64) -> Self {
        self.dual_k = Some(k);
        self
    }

    fn dual_d(mut self, d: DistancePrediction) -> Self {
        self.dual_d = Some(d);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub tag: FamilyTag,
    pub params: FamilyParams,
    pub n: u64,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_upper: Option<u64>,
    /// Canonical ℓ for 𝒞 (None for the zero code and for 𝒞′).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_ell: Option<u64>,
    pub d: DistancePrediction,
    pub dual_k: u64,
    pub dual_d: DistancePrediction,
    /// Weight of the explicit low-weight codeword of 𝒞.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_weight: Option<u64>,
    pub claims: Vec<Claim>,
}

use DistancePrediction::{Exact, Range, Undefined};

fn out_of_range(msg: String) -> FamilyError {
    FamilyError::OutOfTheoremRange(msg)
}

fn check_common(q: u64, m: u32, r: u64) -> Result<(), FamilyError> {
    if prime_power(q).is_none() {
        return Err(FamilyError::NotPrimePower(q));
    }
    if m < 1 || q.checked_pow(m).is_none_or(|v| v > 1 << 20) {
        return Err(out_of_range(format!("q^m out of range for q = {q}, m = {m}")));
    }
    if r < 2 || (q - 1) % r != 0 {
        return Err(out_of_range(format!("r = {r} must satisfy r > 1 and r | q - 1 = {}", q - 1)));
    }
    Ok(())
}

pub fn predict_params(tag: FamilyTag, q: u64, m: u32, r: u64, ell: u64) -> Result<Prediction, FamilyError> {
    check_common(q, m, r)?;
    match tag {
        FamilyTag::CPrime => predict_cprime(q, m, r, ell),
        FamilyTag::C => predict_c(q, m, r, ell),
        FamilyTag::Custom => Err(out_of_range("no closed forms for custom defining sets".into())),
    }
}

/// Distance range `[lo, hi]` with hi from Singleton and sphere packing.
fn with_sphere(n: u64, k: u64, q: u64, lo: u64, extra_hi: Option<u64>) -> DistancePrediction {
    if k == 0 {
        return Undefined;
    }
    let sp = sphere_packing_max_d(n as usize, k as usize, q) as u64;
    let hi = extra_hi.map_or(sp, |h| h.min(sp));
    DistancePrediction::from_bounds(lo.max(1), hi)
}

fn predict_cprime(q: u64, m: u32, r: u64, ell: u64) -> Result<Prediction, FamilyError> {
    if ell < 1 || ell > m as u64 {
        return Err(out_of_range(format!("ell = {ell} outside 1..={m}")));
    }
    let n = (q.pow(m) - 1) / r;
    let k = cprime_dimension(q, m, r, ell) as u64;
    let dual_k = n - k;
    let mut claims = vec![Claim::new("cprime-dimension").k(k).dual_k(dual_k)];
    let lo = (q.pow(ell as u32 + 1) - 1 - 2 * (q - 1)) / (r * (q - 1)) + 2;
    let mut d = with_sphere(n, k, q, lo, None);
    let dual_lo = q.pow(m - ell as u32);
    let mut dual_d = with_sphere(n, dual_k, q, dual_lo, None);
    if k > 0 {
        claims.push(Claim::new("cprime-bch-bound").d(Range { lo, hi: n - k + 1 }));
    }
    if dual_k > 0 {
        claims.push(Claim::new("cprime-dual-bch-bound").dual_d(Range { lo: dual_lo, hi: n - dual_k + 1 }));
    }
    if ell == 1 && m >= 2 {
        if r == q - 1 {
            d = Exact { d: 3 };
            dual_d = Exact { d: q.pow(m - 1) };
            claims.push(Claim::new("hamming-parameters").k(n - m as u64).d(d).dual_k(m as u64).dual_d(dual_d));
        } else if 2 * r == q - 1 {
            d = Exact { d: 4 };
            let mut c = Claim::new("half-order-distance-optimal").k(n - 2 * m as u64).d(d).dual_k(2 * m as u64);
            if prime_power(q).is_some_and(|(_, e)| e == 1) {
                let top = 2 * q.pow(m - 1);
                let dd = if m % 2 == 1 {
                    (m >= 3).then(|| top - q.pow((m - 1) / 2))
                } else {
                    Some(top - (q - 1) * q.pow((m - 2) / 2))
                };
                if let Some(dd) = dd {
                    dual_d = Exact { d: dd };
                    c = c.dual_d(dual_d);
                }
            }
            claims.push(c);
        } else if 3 * r == q - 1 {
            claims.push(Claim::new("third-order-range").k(n - 3 * m as u64).d(Range { lo: 5, hi: 6 }));
            if let Range { lo, hi } = d {
                d = DistancePrediction::from_bounds(lo.max(5), hi.min(6));
            }
        }
    }
    Ok(Prediction {
        tag: FamilyTag::CPrime,
        params: FamilyParams::new(q, m, r, ell),
        n,
        k,
        k_upper: None,
        canonical_ell: None,
        d,
        dual_k,
        dual_d,
        witness_weight: None,
        claims,
    })
}

fn b(n: i64, k: i64) -> u64 {
    binomial(n, k) as u64
}

fn predict_c(q: u64, m: u32, r: u64, ell: u64) -> Result<Prediction, FamilyError> {
    let top = (q - 1) * m as u64;
    if ell + 1 >= top {
        return Err(out_of_range(format!("ell = {ell} must be below (q-1)m - 1 = {}", top - 1)));
    }
    let n = (q.pow(m) - 1) / r;
    let params = FamilyParams::new(q, m, r, ell);
    let EllClass::Canonical(ell) = normalize_ell(r, ell) else {
        return Ok(Prediction {
            tag: FamilyTag::C,
            params,
            n,
            k: 0,
            k_upper: Some(0),
            canonical_ell: None,
            d: Undefined,
            dual_k: n,
            dual_d: Exact { d: 1 },
            witness_weight: None,
            claims: vec![Claim::new("zero-code").k(0).d(Undefined).dual_k(n).dual_d(Exact { d: 1 })],
        });
    };
    let k = c_dimension(q, m, r, ell) as u64;
    let k_upper = c_dimension_upper(q, m, r, ell) as u64;
    let dual_k = n - k;
    let mi = m as u64;
    let (l1, l0) = (ell / (q - 1), ell % (q - 1));
    let qp = |e: u64| q.pow(e as u32);

    let lo = ((q - l0) * qp(mi - l1 - 1) - 2) / r + 1;
    let witness = (q - l0 + r - 2) * qp(mi - 1 - l1) / r;
    let mut hi = witness;
    let mut claims = vec![
        Claim::new("c-dimension").k(k).dual_k(dual_k),
        Claim::new("c-bch-and-witness").d(Range { lo, hi: witness }),
    ];
    if r > 2 && l1 + 2 <= mi {
        let improved = (q - 1) / r * (q - l0 + 1) * qp(mi - 2 - l1);
        hi = hi.min(improved);
        claims.push(Claim::new("c-subcode-upper").d(Range { lo, hi: improved }));
    }
    let mut exact = None;
    if l1 + 1 == mi {
        exact = Some((q - l0 + r - 2) / r);
        claims.push(Claim::new("c-top-layer-distance").d(Exact { d: exact.unwrap() }));
    }
    if r == 2 {
        let d = (q - l0) / 2 * qp(mi - 1 - l1);
        exact = Some(d);
        claims.push(Claim::new("c-negacyclic-distance").d(Exact { d }));
    }
    if r == q - 1 && l1 + 2 <= mi {
        let d = 3 * qp(mi - 2 - l1);
        exact = Some(d);
        claims.push(Claim::new("c-projective-distance").d(Exact { d }));
    }
    if mi >= 2 && ell == (q - 1) * (mi - 2) + r - 1 {
        let d = (q - 1) * (q - r + 2) / r;
        exact = Some(d);
        claims.push(Claim::new("c-second-layer-distance").d(Exact { d }));
    }
    let d = match exact {
        Some(d) => Exact { d },
        None => with_sphere(n, k, q, lo, Some(hi)),
    };

    let dual_lo = (l0 + 1) * qp(l1) / r + 1;
    claims.push(Claim::new("c-dual-bch-bound").dual_d(Range { lo: dual_lo, hi: n - dual_k + 1 }));
    let mut dual_exact = None;
    if r == 2 {
        let dd = if l0 + 2 < q { (3 + l0) / 2 * qp(l1) } else { qp(l1 + 1) };
        dual_exact = Some(dd);
        claims.push(Claim::new("c-negacyclic-dual-distance").dual_d(Exact { d: dd }));
    }
    if r == q - 1 && l0 == q - 2 && l1 + 2 <= mi {
        let dd = qp(l1 + 1);
        dual_exact = Some(dd);
        claims.push(Claim::new("c-projective-dual-distance").dual_d(Exact { d: dd }));
    }
    let dual_d = match dual_exact {
        Some(d) => Exact { d },
        None => with_sphere(n, dual_k, q, dual_lo, None),
    };

    claims.extend(special_cases(q, m, r, ell, n));
    Ok(Prediction {
        tag: FamilyTag::C,
        params,
        n,
        k,
        k_upper: Some(k_upper),
        canonical_ell: Some(ell),
        d,
        dual_k,
        dual_d,
        witness_weight: Some(witness),
        claims,
    })
}

/// Parameter statements for particular values of canonical ℓ.
fn special_cases(q: u64, m: u32, r: u64, ell: u64, n: u64) -> Vec<Claim> {
    let mi = m as u64;
    let (qi, mm, ri) = (q as i64, m as i64, r as i64);
    let mut out = Vec::new();
    if mi >= 2 && ell == (q - 1) * mi - r - 1 {
        let d = if r < q - 1 { 2 } else { 3 };
        out.push(
            Claim::new("c-single-coset")
                .k(n - mi)
                .d(Exact { d })
                .dual_k(mi)
                .dual_d(Exact { d: (q - 1) / r * q.pow(m - 1) }),
        );
    }
    if mi >= 2 && ell >= (q - 1) * (mi - 1) {
        let l0 = ell - (q - 1) * (mi - 1);
        if l0 + 2 < q {
            let kappa: u64 = (0..(q - 2 - l0) as i64 / ri).map(|t| b(mm + ri * t, ri * t + 1)).sum();
            out.push(Claim::new("c-top-layer").k(n - kappa).d(Exact { d: (q - l0 + r - 2) / r }));
        }
    }
    if mi >= 2 && ell == (q - 1) * (mi - 2) + r - 1 {
        let upper = 2 * (qi - 1 - ri) / ri;
        let mut kappa: i64 = (0..=upper).map(|t| b(mm + ri * t, ri * t + 1) as i64).sum();
        if 2 * r <= q - 1 {
            kappa -= mm * ((qi - 1) / ri..=upper).map(|t| b(t * ri - qi + mm, t * ri - qi + 1) as i64).sum::<i64>();
        }
        out.push(
            Claim::new("c-second-layer")
                .k(n - kappa as u64)
                .d(Exact { d: (q - 1) * (q - r + 2) / r }),
        );
    }
    if r == q - 1 && q >= 3 && mi >= 3 && ell == (q - 1) * (mi - 3) + q - 2 {
        let c = b(mm + qi - 1, qi);
        out.push(
            Claim::new("c-projective-third-layer")
                .k(n - c)
                .d(Exact { d: 3 * q })
                .dual_k(c)
                .dual_d(Exact { d: q.pow(m - 2) }),
        );
    }
    if r == q - 1 && q >= 3 && mi >= 2 && ell == q - 2 {
        let c = b(mm + qi - 3, qi - 2);
        out.push(
            Claim::new("c-projective-lowest")
                .k(c)
                .d(Exact { d: 3 * q.pow(m - 2) })
                .dual_k(n - c)
                .dual_d(Exact { d: q }),
        );
    }
    if r == 2 && q >= 5 && mi >= 2 && ell >= (q - 1) * (mi - 2) && ell < (q - 1) * (mi - 1) {
        let l0 = ell - (q - 1) * (mi - 2);
        if l0 % 2 == 1 {
            let kappa: i64 = if l0 + 2 < q {
                let upper = (2 * qi - 5 - l0 as i64) / 2;
                (0..=upper).map(|t| b(2 * t + mm, 2 * t + 1) as i64).sum::<i64>()
                    - mm * ((qi - 1) / 2..=upper).map(|t| b(2 * t - qi + mm, 2 * t - qi + 1) as i64).sum::<i64>()
            } else {
                (0..=(qi - 3) / 2).map(|t| b(2 * t + mm, 2 * t + 1) as i64).sum()
            };
            let dual_d = if l0 + 2 < q { (3 + l0) / 2 * q.pow(m - 2) } else { q.pow(m - 1) };
            out.push(
                Claim::new("c-negacyclic-second-layer")
                    .k(n - kappa as u64)
                    .d(Exact { d: (q - l0) / 2 * q })
                    .dual_k(kappa as u64)
                    .dual_d(Exact { d: dual_d }),
            );
        }
    }
    if r == 2 && q % 2 == 1 && q.pow(m) % 4 == 1 && ell + 1 == (q - 1) * mi / 2 {
        let d = if m % 2 == 0 { q.pow(m / 2) } else { (q + 3) / 4 * q.pow((m - 1) / 2) };
        out.push(
            Claim::new("c-self-dual")
                .k(n / 2)
                .d(Exact { d })
                .dual_k(n / 2)
                .dual_d(Exact { d }),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claims_agree(p: &Prediction) {
        for c in &p.claims {
            if let Some(k) = c.k {
                assert_eq!(k, p.k, "{} at {}", c.source, p.params);
            }
            if let Some(k) = c.dual_k {
                assert_eq!(k, p.dual_k, "{} at {}", c.source, p.params);
            }
            if let (Some(e), Some(d)) = (c.d.and_then(|d| d.exact()), p.d.exact()) {
                assert_eq!(e, d, "{} at {}", c.source, p.params);
            }
        }
    }

    #[test]
    fn hamming_case() {
        let p = predict_params(FamilyTag::C, 4, 3, 3, 3 + 2).unwrap();
        assert_eq!((p.n, p.k, p.d), (21, 18, Exact { d: 3 }));
        claims_agree(&p);
    }

    #[test]
    fn self_dual_sixty_two() {
        let p = predict_params(FamilyTag::C, 5, 3, 2, 5).unwrap();
        assert_eq!((p.n, p.k, p.d, p.dual_k), (62, 31, Exact { d: 10 }, 31));
        assert!(p.claims.iter().any(|c| c.source == "c-self-dual"));
        claims_agree(&p);
    }

    #[test]
    fn cprime_examples() {
        let p = predict_params(FamilyTag::CPrime, 3, 4, 2, 1).unwrap();
        assert_eq!((p.n, p.k, p.d), (40, 36, Exact { d: 3 }));
        let p = predict_params(FamilyTag::CPrime, 5, 3, 2, 1).unwrap();
        assert_eq!((p.k, p.d, p.dual_d), (56, Exact { d: 4 }, Exact { d: 45 }));
        let p = predict_params(FamilyTag::CPrime, 3, 4, 2, 4).unwrap();
        assert_eq!((p.k, p.d), (0, Undefined));
    }

    #[test]
    fn claims_consistent_on_grid() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            for m in 2..=4u32 {
                if q.pow(m) > 1024 {
                    continue;
                }
                for r in (2..q).filter(|r| (q - 1) % r == 0) {
                    for ell in 0..(q - 1) * m as u64 - 1 {
                        claims_agree(&predict_params(FamilyTag::C, q, m, r, ell).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(predict_params(FamilyTag::C, 6, 2, 5, 1).is_err());
        assert!(predict_params(FamilyTag::C, 5, 2, 3, 1).is_err());
        assert!(predict_params(FamilyTag::C, 5, 2, 2, 7).is_err());
        assert!(predict_params(FamilyTag::Custom, 5, 2, 2, 1).is_err());
    }
}
