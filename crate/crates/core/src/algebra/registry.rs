//! Default primitive moduli.
//!
//! Weight distributions of the codes depend on the choice of `β`, so the
//! fields used by the published examples are pinned here. Any other `(p, K)`
//! falls back to the lexicographically first primitive monic polynomial.

use std::sync::Arc;

use super::{AlgebraError, FiniteField, MAX_FIELD_ORDER};

/// `(p, K, ascending coefficients)`.
const PINNED: &[(u32, u32, &[u32])] = &[
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
];

/// The pinned modulus for `(p, K)`, if any.
pub fn pinned_modulus(p: u32, degree: u32) -> Option<&'static [u32]> {
    PINNED
        .iter()
        .find(|&&(pp, k, _)| pp == p && k == degree)
        .map(|&(_, _, c)| c)
}

/// All pinned `(p, K, modulus)` entries.
pub fn pinned() -> impl Iterator<Item = (u32, u32, &'static [u32])> {
    PINNED.iter().copied()
}

/// The default modulus for GF(p^K): pinned if available, else searched.
pub fn default_modulus(p: u32, degree: u32) -> Result<Vec<u32>, AlgebraError> {
    if let Some(c) = pinned_modulus(p, degree) {
        return Ok(c.to_vec());
    }
    search_primitive(p, degree).map(|f| f.modulus().to_vec())
}

/// Builds GF(p^K) with the default modulus.
pub fn default_field(p: u32, degree: u32) -> Result<Arc<FiniteField>, AlgebraError> {
    if let Some(c) = pinned_modulus(p, degree) {
        return FiniteField::new(p, degree, c).map(Arc::new);
    }
    search_primitive(p, degree).map(Arc::new)
}

fn search_primitive(p: u32, degree: u32) -> Result<FiniteField, AlgebraError> {
    if !super::field::is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    if (p as u64).checked_pow(degree).map_or(true, |o| o > MAX_FIELD_ORDER) {
        return Err(AlgebraError::FieldTooLarge { p, degree });
    }
    let k = degree as usize;
    let count = (p as u64).pow(degree);
    let mut coeffs = vec![0u32; k + 1];
    coeffs[k] = 1;
    // Lexicographic in (c_{K-1}, ..., c_0), with c_0 != 0 required for primitivity.
    for idx in 0..count {
        let mut rest = idx;
        for c in coeffs[..k].iter_mut().rev() {
            *c = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        if coeffs[0] == 0 {
            continue;
        }
        match FiniteField::new(p, degree, &coeffs) {
            Ok(f) => return Ok(f),
            Err(AlgebraError::NotIrreducible | AlgebraError::NotPrimitive) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(AlgebraError::NotPrimitive)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_pinned_modulus_is_primitive() {
        for (p, k, c) in pinned() {
            let f = FiniteField::new(p, k, c).unwrap();
            assert_eq!(f.element_order(f.primitive()), Some(f.group_order()));
        }
    }

    #[test]
    fn gf81_pinned_equals_x4_minus_x3_minus_1() {
        // x^4 - x^3 - 1 reduces to x^4 + 2x^3 + 2 mod 3.
        let c = pinned_modulus(3, 4).unwrap();
        let alt: Vec<u32> = [-1i64, 0, 0, -1, 1]
            .iter()
            .map(|v| v.rem_euclid(3) as u32)
            .collect();
        assert_eq!(c, alt.as_slice());
    }

    #[test]
    fn search_finds_primitive_for_unpinned() {
        let f = default_field(7, 1).unwrap();
        assert_eq!(f.element_order(f.primitive()), Some(6));
        let f = default_field(2, 5).unwrap();
        assert_eq!(f.order(), 32);
        let f = default_field(3, 2).unwrap();
        assert_eq!(f.element_order(f.primitive()), Some(8));
    }
}
