//! q-cyclotomic cosets, digit weights, and the defining sets of the two
//! code families.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::gcd_u64;

/// Largest modulus for which coset tables and defining sets are built.
pub const MAX_MODULUS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("gcd({q}, {modulus}) != 1")]
    NotCoprime { q: u64, modulus: u64 },
    #[error("r = {r} must satisfy r > 1 and r | q - 1 = {qm1}")]
    BadDivisor { r: u64, qm1: u64 },
    #[error("ell = {ell} outside {min}..={max}")]
    EllOutOfRange { ell: u64, min: u64, max: u64 },
    #[error("{i} exceeds q^m - 1 = {max}")]
    OutOfRange { i: u64, max: u64 },
    #[error("modulus {0} too large for an explicit table")]
    TooLarge(u64),
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
}

/// `i` in `Z_modulus` multiplied by powers of `q` until the orbit closes.
pub fn cyclotomic_coset(i: u64, q: u64, modulus: u64) -> Result<Vec<u64>, CosetError> {
    if modulus == 0 || gcd_u64(q, modulus) != 1 {
        return Err(CosetError::NotCoprime { q, modulus });
    }
    let start = i % modulus;
    let mut out = vec![start];
    let mut j = mul_mod(start, q, modulus);
    while j != start {
        out.push(j);
        j = mul_mod(j, q, modulus);
    }
    out.sort_unstable();
    Ok(out)
}

/// Smallest `t >= 1` with `q^t ≡ 1 (mod modulus)`.
pub fn multiplicative_order(q: u64, modulus: u64) -> Result<u64, CosetError> {
    if modulus == 0 || gcd_u64(q, modulus) != 1 {
        return Err(CosetError::NotCoprime { q, modulus });
    }
    if modulus == 1 {
        return Ok(1);
    }
    let mut t = 1;
    let mut x = q % modulus;
    while x != 1 {
        x = mul_mod(x, q, modulus);
        t += 1;
    }
    Ok(t)
}

/// `ord_{rn}(q)` from `ℓ = ord_n(q)` as `r / gcd((q^ℓ - 1)/n, r) · ℓ`,
/// valid when `r | q - 1`.
pub fn order_from_subgroup(q: u64, n: u64, r: u64) -> Result<u64, CosetError> {
    let l = multiplicative_order(q, n)?;
    let nr = n as u128 * r as u128;
    let mut acc: u128 = 1;
    for _ in 0..l {
        acc = acc * q as u128 % nr;
    }
    // acc ≡ q^ℓ (mod nr) and q^ℓ ≡ 1 (mod n), so this is ((q^ℓ-1)/n) mod r.
    let x = ((acc + nr - 1) % nr / n as u128) as u64;
    Ok(r / gcd_u64(x, r) * l)
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// The partition of `Z_M` into q-cyclotomic cosets.
#[derive(Debug, Clone)]
pub struct CosetTable {
    q: u64,
    modulus: u64,
    /// Cosets sorted by leader; each coset sorted ascending.
    cosets: Vec<Vec<u64>>,
    /// `coset_of[i]` is the position of i's coset in `cosets`.
    coset_of: Vec<u32>,
}

impl CosetTable {
    pub fn new(q: u64, modulus: u64) -> Result<Self, CosetError> {
        if modulus == 0 || gcd_u64(q, modulus) != 1 {
            return Err(CosetError::NotCoprime { q, modulus });
        }
        if modulus > MAX_MODULUS {
            return Err(CosetError::TooLarge(modulus));
        }
        let mut coset_of = vec![u32::MAX; modulus as usize];
        let mut cosets = Vec::new();
        for i in 0..modulus {
            if coset_of[i as usize] != u32::MAX {
                continue;
            }
            let idx = cosets.len() as u32;
            let mut members = Vec::new();
            let mut j = i;
            loop {
                coset_of[j as usize] = idx;
                members.push(j);
                j = mul_mod(j, q, modulus);
                if j == i {
                    break;
                }
            }
            members.sort_unstable();
            cosets.push(members);
        }
        Ok(CosetTable {
            q,
            modulus,
            cosets,
            coset_of,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    /// Coset leaders (smallest members), ascending.
    pub fn leaders(&self) -> Vec<u64> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    pub fn coset_containing(&self, i: u64) -> &[u64] {
        &self.cosets[self.coset_of[(i % self.modulus) as usize] as usize]
    }

    pub fn leader_of(&self, i: u64) -> u64 {
        self.coset_containing(i)[0]
    }

    /// Leaders `≡ 1 (mod r)`.
    pub fn leaders_congruent(&self, residue: u64, r: u64) -> Vec<u64> {
        self.cosets
            .iter()
            .map(|c| c[0])
            .filter(|&l| l % r == residue % r)
            .collect()
    }
}

/// `Γ^(1)`: leaders of q-cyclotomic cosets mod N that are `≡ 1 (mod r)`.
pub fn gamma_one(q: u64, modulus: u64, r: u64) -> Result<Vec<u64>, CosetError> {
    check_divisor(q, r)?;
    Ok(CosetTable::new(q, modulus)?.leaders_congruent(1, r))
}

fn check_divisor(q: u64, r: u64) -> Result<(), CosetError> {
    if r <= 1 || q < 2 || (q - 1) % r != 0 {
        return Err(CosetError::BadDivisor { r, qm1: q.saturating_sub(1) });
    }
    Ok(())
}

/// q-adic digits of `i`, least significant first, exactly `m` of them.
pub fn digits(i: u64, q: u64, m: u32) -> Result<Vec<u64>, CosetError> {
    let max = q.checked_pow(m).map_or(u64::MAX, |v| v - 1);
    if i > max {
        return Err(CosetError::OutOfRange { i, max });
    }
    let mut rest = i;
    Ok((0..m)
        .map(|_| {
            let d = rest % q;
            rest /= q;
            d
        })
        .collect())
}

/// Number of nonzero q-adic digits of `i` (with `0 <= i <= q^m - 1`).
pub fn wt(i: u64, q: u64, m: u32) -> Result<u64, CosetError> {
    Ok(digits(i, q, m)?.iter().filter(|&&d| d != 0).count() as u64)
}

/// Sum of the q-adic digits of `i` (with `0 <= i <= q^m - 1`).
pub fn wt_q(i: u64, q: u64, m: u32) -> Result<u64, CosetError> {
    Ok(digits(i, q, m)?.iter().sum())
}

#[inline]
fn wt_unchecked(mut i: u64, q: u64) -> u64 {
    let mut w = 0;
    while i > 0 {
        w += (i % q != 0) as u64;
        i /= q;
    }
    w
}

#[inline]
fn wt_q_unchecked(mut i: u64, q: u64) -> u64 {
    let mut w = 0;
    while i > 0 {
        w += i % q;
        i /= q;
    }
    w
}

/// Which family a defining set was built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    CPrime,
    C,
    Custom,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::CPrime => "cprime",
            FamilyTag::C => "c",
            FamilyTag::Custom => "custom",
        })
    }
}

/// `(q, m, r, ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub q: u64,
    pub m: u32,
    pub r: u64,
    pub ell: u64,
}

impl FamilyParams {
    pub fn new(q: u64, m: u32, r: u64, ell: u64) -> Self {
        FamilyParams { q, m, r, ell }
    }

    /// `N = q^m - 1`.
    pub fn big_n(&self) -> u64 {
        self.q.pow(self.m) - 1
    }

    /// `n = (q^m - 1) / r`.
    pub fn n(&self) -> u64 {
        self.big_n() / self.r
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.q, self.m, self.r, self.ell)
    }
}

/// A subset of `Z_M` (sorted, with a bitset for membership).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    indices: Vec<u64>,
    bits: Vec<u64>,
    modulus: u64,
    tag: FamilyTag,
    params: Option<FamilyParams>,
}

impl DefiningSet {
    /// An arbitrary set of residues mod `modulus`.
    pub fn custom(mut indices: Vec<u64>, modulus: u64) -> Self {
        for i in indices.iter_mut() {
            *i %= modulus;
        }
        indices.sort_unstable();
        indices.dedup();
        Self::build(indices, modulus, FamilyTag::Custom, None)
    }

    fn build(indices: Vec<u64>, modulus: u64, tag: FamilyTag, params: Option<FamilyParams>) -> Self {
        let mut bits = vec![0u64; (modulus as usize).div_ceil(64)];
        for &i in &indices {
            bits[(i / 64) as usize] |= 1 << (i % 64);
        }
        DefiningSet {
            indices,
            bits,
            modulus,
            tag,
            params,
        }
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn params(&self) -> Option<FamilyParams> {
        self.params
    }

    #[inline]
    pub fn contains(&self, i: u64) -> bool {
        let i = i % self.modulus;
        self.bits[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    /// Smallest member of each q-cyclotomic coset in the set.
    pub fn leaders(&self, q: u64) -> Vec<u64> {
        self.indices
            .iter()
            .copied()
            .filter(|&i| {
                let mut j = mul_mod(i, q, self.modulus);
                while j != i {
                    if j < i {
                        return false;
                    }
                    j = mul_mod(j, q, self.modulus);
                }
                true
            })
            .collect()
    }

    pub fn is_closed_under(&self, q: u64) -> bool {
        self.indices
            .iter()
            .all(|&i| self.contains(mul_mod(i, q, self.modulus)))
    }
}

fn family_modulus(q: u64, m: u32) -> Result<u64, CosetError> {
    if crate::algebra::prime_power(q).is_none() {
        return Err(CosetError::NotPrimePower(q));
    }
    match q.checked_pow(m) {
        Some(v) if v <= MAX_MODULUS && m >= 1 => Ok(v - 1),
        _ => Err(CosetError::TooLarge(q.saturating_pow(m))),
    }
}

/// `D' = {i in Z_N : i ≡ 1 (mod r), 1 <= wt(i) <= ℓ}` with `N = q^m - 1`.
pub fn defining_set_cprime(q: u64, m: u32, r: u64, ell: u64) -> Result<DefiningSet, CosetError> {
    check_divisor(q, r)?;
    if ell < 1 || ell > m as u64 {
        return Err(CosetError::EllOutOfRange { ell, min: 1, max: m as u64 });
    }
    let big_n = family_modulus(q, m)?;
    let indices = (0..big_n)
        .filter(|&i| {
            let w = wt_unchecked(i, q);
            i % r == 1 % r && (1..=ell).contains(&w)
        })
        .collect();
    Ok(DefiningSet::build(
        indices,
        big_n,
        FamilyTag::CPrime,
        Some(FamilyParams::new(q, m, r, ell)),
    ))
}

/// `D = {i in Z_N : wt_q(i) < (q-1)m - ℓ, wt_q(i) ≡ 1 (mod r)}`.
pub fn defining_set_c(q: u64, m: u32, r: u64, ell: u64) -> Result<DefiningSet, CosetError> {
    check_divisor(q, r)?;
    let big_n = family_modulus(q, m)?;
    let top = (q - 1) * m as u64;
    if ell + 1 >= top {
        return Err(CosetError::EllOutOfRange { ell, min: 0, max: top.saturating_sub(2) });
    }
    let indices = (0..big_n)
        .filter(|&i| {
            let w = wt_q_unchecked(i, q);
            w < top - ell && w % r == 1
        })
        .collect();
    Ok(DefiningSet::build(
        indices,
        big_n,
        FamilyTag::C,
        Some(FamilyParams::new(q, m, r, ell)),
    ))
}

/// Where a value of ℓ lands after normalizing 𝒞(q,m,r,ℓ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllClass {
    /// The code is `{0}`.
    Zero,
    /// The code equals 𝒞(q,m,r,ℓ') for this ℓ' ≡ r-1 (mod r).
    Canonical(u64),
}

/// Writes `ℓ = rℓ₁ + ℓ₀`: if `ℓ₁ = 0` and `ℓ₀ <= r-2` the code is zero;
/// otherwise it equals the code for `rℓ₂ + r - 1`, where `ℓ₂ = ℓ₁` when
/// `ℓ₀ = r-1` and `ℓ₂ = ℓ₁ - 1` otherwise.
pub fn normalize_ell(r: u64, ell: u64) -> EllClass {
    let (l1, l0) = (ell / r, ell % r);
    if l0 == r - 1 {
        EllClass::Canonical(ell)
    } else if l1 == 0 {
        EllClass::Zero
    } else {
        EllClass::Canonical(r * (l1 - 1) + r - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(0, 3, 80).unwrap(), vec![0]);
        assert_eq!(cyclotomic_coset(1, 3, 80).unwrap(), vec![1, 3, 9, 27]);
        assert_eq!(
            cyclotomic_coset(1, 3, 81).unwrap_err(),
            CosetError::NotCoprime { q: 3, modulus: 81 }
        );
    }

    #[test]
    fn gamma_one_accounting() {
        let t = CosetTable::new(3, 80).unwrap();
        let g = gamma_one(3, 80, 2).unwrap();
        assert!(g.contains(&1) && !g.contains(&0));
        let total: usize = g.iter().map(|&l| t.coset_containing(l).len()).sum();
        assert_eq!(total, 40);
        let t = CosetTable::new(5, 24).unwrap();
        let g = gamma_one(5, 24, 2).unwrap();
        let total: usize = g.iter().map(|&l| t.coset_containing(l).len()).sum();
        assert_eq!(total, 12);
        assert_eq!(
            gamma_one(3, 80, 4).unwrap_err(),
            CosetError::BadDivisor { r: 4, qm1: 2 }
        );
    }

    #[test]
    fn weight_examples() {
        assert_eq!(wt(13, 3, 3).unwrap(), 3);
        assert_eq!(wt_q(13, 3, 3).unwrap(), 3);
        assert_eq!(wt_q(80, 3, 4).unwrap(), 8);
        assert_eq!(wt(80, 3, 4).unwrap(), 4);
        assert_eq!(wt(81, 3, 4).unwrap_err(), CosetError::OutOfRange { i: 81, max: 80 });
    }

    #[test]
    fn cprime_sets() {
        assert_eq!(defining_set_cprime(3, 4, 2, 1).unwrap().len(), 4);
        assert_eq!(defining_set_cprime(5, 2, 2, 1).unwrap().len(), 4);
        assert_eq!(defining_set_cprime(3, 4, 2, 4).unwrap().len(), 40);
        assert!(matches!(
            defining_set_cprime(3, 4, 2, 5),
            Err(CosetError::EllOutOfRange { .. })
        ));
    }

    #[test]
    fn c_sets() {
        let d = defining_set_c(3, 3, 2, 3).unwrap();
        assert_eq!(13 - d.len(), 10);
        assert_eq!(
            defining_set_c(3, 4, 2, 4).unwrap().indices(),
            defining_set_c(3, 4, 2, 3).unwrap().indices()
        );
        assert!(matches!(
            defining_set_c(3, 4, 2, 7),
            Err(CosetError::EllOutOfRange { .. })
        ));
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_ell(3, 1), EllClass::Zero);
        assert_eq!(normalize_ell(3, 2), EllClass::Canonical(2));
        assert_eq!(normalize_ell(3, 4), EllClass::Canonical(2));
        assert_eq!(normalize_ell(2, 4), EllClass::Canonical(3));
    }

    #[test]
    fn leaders_of_defining_set() {
        let d = defining_set_cprime(3, 4, 2, 1).unwrap();
        assert_eq!(d.leaders(3), vec![1]);
    }
}
