//! Closed-form dimensions and weight distributions.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::analysis::WeightDistribution;
use crate::cosets::{normalize_ell, EllClass};

use super::{binomial, bounded_compositions, FamilyError};

/// `(q^m - Σ_{i<=ℓ} C(m,i)(q-1)^i) / r` for 𝒞′, valid for `0 <= ℓ <= m`.
pub fn cprime_dimension(q: u64, m: u32, r: u64, ell: u64) -> u128 {
    let total = (q as u128).pow(m);
    let ball: u128 = (0..=ell.min(m as u64))
        .map(|i| binomial(m as i64, i as i64) * ((q - 1) as u128).pow(i as u32))
        .sum();
    (total - ball) / r as u128
}

/// Dimension of 𝒞(q,m,r,ℓ) from the count of `t ≡ r-1 (mod r)`, `0 < t <= ℓ`
/// placements; ℓ is normalized first.
pub fn c_dimension(q: u64, m: u32, r: u64, ell: u64) -> u128 {
    match normalize_ell(r, ell) {
        EllClass::Zero => 0,
        EllClass::Canonical(ell) => (1..=ell)
            .filter(|t| t % r == r - 1)
            .map(|t| bounded_compositions(t, m as u64, q - 1))
            .sum(),
    }
}

/// `(q^m - Σ_{t=0}^{m-ℓ₂} C(m,t)(q-1)^t) / r` with `ℓ₂ = ⌈(ℓ+1)/(q-1)⌉`.
pub fn c_dimension_upper(q: u64, m: u32, r: u64, ell: u64) -> u128 {
    let l2 = (ell + 1).div_ceil(q - 1);
    let top = (m as u64).saturating_sub(l2);
    let ball: u128 = if l2 > m as u64 {
        0
    } else {
        (0..=top)
            .map(|t| binomial(m as i64, t as i64) * ((q - 1) as u128).pow(t as u32))
            .sum()
    };
    ((q as u128).pow(m) - ball) / r as u128
}

/// `q^m - Σ_{i<=h} C(m,i)(q-1)^i` for the punctured Dilix code.
pub fn dilix_dimension(q: u64, m: u32, h: u64) -> u128 {
    cprime_dimension(q, m, 1, h)
}

/// `(n, k, d)` of PRM(q,m,h), `1 <= h <= (m-1)(q-1)`.
pub fn prm_params(q: u64, m: u32, h: u64) -> Result<(u64, u128, u64), FamilyError> {
    let max = (m as u64 - 1) * (q - 1);
    if m < 2 || h == 0 || h > max {
        return Err(FamilyError::HOutOfRange { h, min: 1, max });
    }
    let n = (q.pow(m) - 1) / (q - 1);
    let (u, v) = ((h - 1) / (q - 1), (h - 1) % (q - 1));
    let d = (q - v) * q.pow(m - 2 - u as u32);
    let k = (1..=h)
        .filter(|t| t % (q - 1) == h % (q - 1))
        .map(|t| bounded_compositions(t, m as u64, q - 1))
        .sum();
    Ok((n, k, d))
}

fn qpow(q: u64, e: u32) -> BigInt {
    BigInt::from(q).pow(e)
}

/// `Π_{i=lo}^{hi} (q^i - 1)`.
fn prod_qi_minus_one(q: u64, lo: u32, hi: u32) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, i| acc * (qpow(q, i) - 1))
}

/// `Π_{i=1}^{j} (q^{2i} - 1)`.
fn prod_even(q: u64, j: u32) -> BigInt {
    (1..=j).fold(BigInt::one(), |acc, i| acc * (qpow(q, 2 * i) - 1))
}

fn exact_div(a: BigInt, b: &BigInt) -> BigInt {
    debug_assert!((&a % b).is_zero(), "{a} / {b} is not exact");
    a / b
}

fn to_dist(n: usize, q: u64, pairs: Vec<(i64, BigInt)>) -> Result<WeightDistribution, FamilyError> {
    let mut counts = vec![BigUint::zero(); n + 1];
    for (w, c) in pairs {
        if c.is_zero() {
            continue;
        }
        let w = usize::try_from(w).ok().filter(|&w| w <= n);
        let (Some(w), false) = (w, c.is_negative()) else {
            return Err(FamilyError::OutOfTheoremRange(format!(
                "closed form gives count {c} at an impossible weight"
            )));
        };
        counts[w] += c.to_biguint().expect("nonnegative");
    }
    Ok(WeightDistribution::new(n, q, counts).expect("length matches"))
}

/// Weight distribution of PRM(q,m,2) from its closed form.
pub fn prm2_weight_distribution(q: u64, m: u32) -> Result<WeightDistribution, FamilyError> {
    if m < 2 || 2 > (m as u64 - 1) * (q - 1) {
        return Err(FamilyError::HOutOfRange { h: 2, min: 1, max: (m as u64).saturating_sub(1) * (q - 1) });
    }
    let n = ((q.pow(m) - 1) / (q - 1)) as usize;
    let top = qpow(q, m - 1);
    let mut pairs = Vec::new();
    let mut a_top = qpow(q, m) - 1;
    for j in 1..=(m - 1) / 2 {
        a_top += exact_div(qpow(q, j * j + j) * prod_qi_minus_one(q, m - 2 * j, m), &prod_even(q, j));
    }
    pairs.push((0, BigInt::one()));
    pairs.push((top.to_i64().expect("small"), a_top));
    for j in 1..=m / 2 {
        let ratio = prod_qi_minus_one(q, m - 2 * j + 1, m);
        for tau in [1i64, -1] {
            let num = qpow(q, j * j) * (qpow(q, j) + tau) * &ratio;
            let count = exact_div(num, &(prod_even(q, j) * 2));
            let w = &top - BigInt::from(tau) * qpow(q, m - 1 - j);
            pairs.push((w.to_i64().expect("small"), count));
        }
    }
    to_dist(n, q, pairs)
}

/// Closed-form weight distribution of `𝒞′(q,m,(q-1)/2,1)^⊥` for odd prime q.
pub fn cprime_dual_table(q: u64, m: u32) -> Result<WeightDistribution, FamilyError> {
    if q < 5 || q % 2 == 0 || m < 2 {
        return Err(FamilyError::OutOfTheoremRange(format!(
            "table needs an odd q >= 5 and m >= 2, got q = {q}, m = {m}"
        )));
    }
    let n = (2 * (q.pow(m) - 1) / (q - 1)) as usize;
    let base = 2 * q.pow(m - 1) as i64;
    let qm1 = qpow(q, m) - 1;
    let bq = BigInt::from(q);
    let mut pairs = vec![(0i64, BigInt::one())];
    if m % 2 == 1 {
        let h = (m - 1) / 2;
        let ph = qpow(q, h);
        let off = q.pow(h) as i64;
        pairs.push((base - off, &ph * (&ph + 1) * &qm1));
        pairs.push((base, &qm1 * (qpow(q, m) - 2 * qpow(q, m - 1) + 1)));
        pairs.push((base + off, &ph * (&ph - 1) * &qm1));
    } else {
        let (h, s) = ((m - 2) / 2, m / 2);
        let (ph, ps) = (qpow(q, h), qpow(q, s));
        let off = q.pow(h) as i64;
        let qq1 = &bq * &bq - 1;
        let four_q1 = (&bq + 1) * 4;
        pairs.push((base - (q as i64 - 1) * off, exact_div((&ph + 1) * (&ps - 1) * &qm1, &qq1)));
        pairs.push((base - 2 * off, exact_div(Pow::pow(&ps + 1, 2u32) * (&bq - 1) * &qm1, &four_q1)));
        pairs.push((base - off, &ph * (&ps + 1) * &qm1));
        pairs.push((
            base,
            exact_div((qpow(q, m + 1) - 3 * qpow(q, m) + &bq + 1) * &qm1, &((&bq - 1) * 2)),
        ));
        pairs.push((base + off, &ph * (&ps - 1) * &qm1));
        pairs.push((base + 2 * off, exact_div(Pow::pow(&ps - 1, 2u32) * (&bq - 1) * &qm1, &four_q1)));
        pairs.push((base + (q as i64 - 1) * off, exact_div((&ph - 1) * (&ps + 1) * &qm1, &qq1)));
    }
    to_dist(n, q, pairs)
}
