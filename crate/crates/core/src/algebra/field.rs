//! Prime-power fields GF(p^K) with discrete-log tables.
//!
//! Elements are stored in logarithmic form relative to the root `β` of the
//! (primitive) field modulus. Multiplication is exponent addition; addition
//! goes through a Zech-logarithm table, so no operation ever touches the
//! polynomial-basis representation except at the I/O boundary.

use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// Largest supported field order. Exp/log/Zech tables are `3 * 4 * 2^20` bytes.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of a [`FiniteField`]: either zero or `β^i` with
/// `0 <= i < p^K - 1`.
///
/// The element carries no reference to its field; every operation goes
/// through the owning [`FiniteField`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Discrete logarithm to base `β`, `None` for zero.
    #[inline]
    pub fn log(self) -> Option<u32> {
        self.0.checked_sub(1)
    }

    #[inline]
    pub(crate) fn from_log_unchecked(i: u32) -> Self {
        FieldElement(i + 1)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(i) => write!(f, "b^{i}"),
        }
    }
}

/// The finite field GF(p^K) = GF(p)[x]/(f(x)) for a primitive modulus `f`.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    /// `exp[i]` is the packed base-p polynomial-basis form of `β^i`.
    exp: Vec<u32>,
    /// Inverse of `exp`; `log[0]` is unused.
    log: Vec<u32>,
    /// `zech[i]` is the element `1 + β^i`.
    zech: Vec<FieldElement>,
    neg_one: FieldElement,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField({})", self.spec_string())
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// Builds GF(p^K) from a monic modulus given as ascending coefficients
    /// `c0, c1, ..., cK` (integers mod p).
    pub fn new(p: u32, degree: u32, modulus: &[u32]) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if degree == 0 {
            return Err(AlgebraError::WrongDegree { expected: 1, found: 0 });
        }
        let order = (p as u64)
            .checked_pow(degree)
            .filter(|&o| o <= MAX_FIELD_ORDER)
            .ok_or(AlgebraError::FieldTooLarge { p, degree })?;
        if modulus.len() != degree as usize + 1 {
            return Err(AlgebraError::WrongDegree {
                expected: degree,
                found: modulus.len().saturating_sub(1) as u32,
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(AlgebraError::CoefficientOutOfRange { value: c, p });
        }
        if modulus[degree as usize] != 1 {
            return Err(AlgebraError::NotMonic);
        }
        if !is_irreducible_mod_p(modulus, p) {
            return Err(AlgebraError::NotIrreducible);
        }

        let order = order as u32;
        let group = (order - 1) as usize;
        let k = degree as usize;
        let mut exp = Vec::with_capacity(group);
        let mut log = vec![u32::MAX; order as usize];
        let mut digits = vec![0u32; k];
        digits[0] = 1;
        for i in 0..group {
            let packed = pack(&digits, p);
            if log[packed as usize] != u32::MAX {
                return Err(AlgebraError::NotPrimitive);
            }
            log[packed as usize] = i as u32;
            exp.push(packed);
            times_x(&mut digits, modulus, p);
        }
        if pack(&digits, p) != 1 {
            return Err(AlgebraError::NotPrimitive);
        }

        let zech = exp
            .iter()
            .map(|&packed| {
                let d0 = packed % p;
                let sum = packed - d0 + (d0 + 1) % p;
                if sum == 0 {
                    FieldElement::ZERO
                } else {
                    FieldElement::from_log_unchecked(log[sum as usize])
                }
            })
            .collect();
        let neg_one = if p == 2 {
            FieldElement::ONE
        } else {
            FieldElement::from_log_unchecked((order - 1) / 2)
        };
        Ok(FiniteField {
            p,
            degree,
            order,
            modulus: modulus.to_vec(),
            exp,
            log,
            zech,
            neg_one,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree K over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements p^K.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Size of the multiplicative group, p^K - 1.
    pub fn group_order(&self) -> u32 {
        self.order - 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `p^K:c0,c1,...,cK`
    pub fn spec_string(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
        format!("{}^{}:{}", self.p, self.degree, coeffs.join(","))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The primitive element `β`, a root of the modulus.
    pub fn primitive(&self) -> FieldElement {
        self.beta_pow(1)
    }

    /// `β^i` for any integer exponent (reduced modulo p^K - 1).
    pub fn beta_pow(&self, i: i64) -> FieldElement {
        let g = self.group_order() as i64;
        FieldElement::from_log_unchecked(i.rem_euclid(g) as u32)
    }

    /// The element with the given discrete logarithm.
    pub fn from_log(&self, i: u32) -> FieldElement {
        FieldElement::from_log_unchecked(i % self.group_order())
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a.log(), b.log()) {
            (None, _) => b,
            (_, None) => a,
            (Some(i), Some(j)) => {
                let g = self.group_order();
                let d = if j >= i { j - i } else { j + g - i };
                self.mul(a, self.zech[d as usize])
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.mul(a, self.neg_one)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a.log(), b.log()) {
            (Some(i), Some(j)) => {
                let g = self.group_order();
                let s = i + j;
                FieldElement::from_log_unchecked(if s >= g { s - g } else { s })
            }
            _ => FieldElement::ZERO,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        a.log().map(|i| {
            let g = self.group_order();
            FieldElement::from_log_unchecked((g - i) % g)
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        match a.log() {
            None if e == 0 => FieldElement::ONE,
            None => FieldElement::ZERO,
            Some(i) => {
                let g = self.group_order() as u64;
                FieldElement::from_log_unchecked(((i as u64 * (e % g)) % g) as u32)
            }
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Option<u32> {
        a.log().map(|i| {
            let g = self.group_order();
            g / gcd_u64(i as u64, g as u64) as u32
        })
    }

    /// Element from polynomial-basis coordinates (ascending powers of `β`,
    /// integers mod p). Shorter slices are zero-padded.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, AlgebraError> {
        if coeffs.len() > self.degree as usize {
            return Err(AlgebraError::WrongDegree {
                expected: self.degree,
                found: coeffs.len() as u32,
            });
        }
        let mut packed = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(AlgebraError::CoefficientOutOfRange { value: c, p: self.p });
            }
            packed = packed * self.p + c;
        }
        Ok(self.from_packed(packed))
    }

    /// Prime-field element `c mod p`.
    pub fn from_int(&self, c: u64) -> FieldElement {
        self.from_packed((c % self.p as u64) as u32)
    }

    fn from_packed(&self, packed: u32) -> FieldElement {
        if packed == 0 {
            FieldElement::ZERO
        } else {
            FieldElement::from_log_unchecked(self.log[packed as usize])
        }
    }

    /// Polynomial-basis coordinates (length K, ascending powers of `β`).
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut packed = match a.log() {
            None => 0,
            Some(i) => self.exp[i as usize],
        };
        (0..self.degree)
            .map(|_| {
                let d = packed % self.p;
                packed /= self.p;
                d
            })
            .collect()
    }

    /// Integer value of a prime-field element, `None` outside GF(p).
    pub fn to_int(&self, a: FieldElement) -> Option<u32> {
        let c = self.coeffs(a);
        c[1..].iter().all(|&d| d == 0).then_some(c[0])
    }

    /// All elements: zero followed by `β^0, β^1, ...`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(FieldElement)
    }
}

impl FromStr for FiniteField {
    type Err = AlgebraError;

    /// Parses `p^K:c0,c1,...,cK`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::ParseFieldSpec(s.to_string());
        let (head, tail) = s.trim().split_once(':').ok_or_else(bad)?;
        let (p, k) = head.split_once('^').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let k: u32 = k.trim().parse().map_err(|_| bad())?;
        let coeffs = tail
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteField::new(p, k, &coeffs)
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, e)` with `q = p^e`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 || q > u32::MAX as u64 {
        return None;
    }
    let q = q as u32;
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// digits <- digits * x mod f, over GF(p).
fn times_x(digits: &mut [u32], modulus: &[u32], p: u32) {
    let k = digits.len();
    let top = digits[k - 1];
    for i in (1..k).rev() {
        digits[i] = digits[i - 1];
    }
    digits[0] = 0;
    if top != 0 {
        let p64 = p as u64;
        for (i, d) in digits.iter_mut().enumerate() {
            let sub = (top as u64 * modulus[i] as u64) % p64;
            *d = ((*d as u64 + p64 - sub) % p64) as u32;
        }
    }
}

/// Trial division by every monic polynomial of degree 1..=K/2 over GF(p).
pub(crate) fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        let mut divisor = vec![0u32; d + 1];
        divisor[d] = 1;
        for idx in 0..count {
            let mut rest = idx;
            for c in divisor.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            if divides_mod_p(&divisor, f, p) {
                return false;
            }
        }
    }
    true
}

/// Whether the monic `divisor` divides `f` over GF(p).
fn divides_mod_p(divisor: &[u32], f: &[u32], p: u32) -> bool {
    let p64 = p as u64;
    let mut rem: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let d = divisor.len() - 1;
    for top in (d..rem.len()).rev() {
        let c = rem[top] % p64;
        if c == 0 {
            continue;
        }
        for (j, &dc) in divisor.iter().enumerate() {
            let idx = top - d + j;
            rem[idx] = (rem[idx] + p64 * p64 - c * dc as u64) % p64;
        }
    }
    rem[..d].iter().all(|&c| c % p64 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf81() -> FiniteField {
        FiniteField::new(3, 4, &[2, 0, 0, 2, 1]).unwrap()
    }

    #[test]
    fn builds_gf81_with_primitive_beta() {
        let f = gf81();
        assert_eq!(f.order(), 81);
        assert_eq!(f.element_order(f.primitive()), Some(80));
        // β^4 + 2β^3 + 2 = 0
        let b = f.primitive();
        let lhs = f.add(
            f.add(f.pow(b, 4), f.mul(f.from_int(2), f.pow(b, 3))),
            f.from_int(2),
        );
        assert!(lhs.is_zero());
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^4 + x^3 + 2x^2 + 1 = (x^2 + x + 2)(x^2 + 2) over GF(3)
        let err = FiniteField::new(3, 4, &[1, 0, 2, 1, 1]).unwrap_err();
        assert_eq!(err, AlgebraError::NotIrreducible);
    }

    #[test]
    fn rejects_irreducible_but_not_primitive() {
        // x^2 + 1 is irreducible over GF(3), but its root has order 4, not 8.
        let err = FiniteField::new(3, 2, &[1, 0, 1]).unwrap_err();
        assert_eq!(err, AlgebraError::NotPrimitive);
    }

    #[test]
    fn distinct_construction_errors() {
        assert_eq!(FiniteField::new(4, 1, &[1, 1]).unwrap_err(), AlgebraError::NotPrime(4));
        assert_eq!(FiniteField::new(3, 2, &[2, 1, 2]).unwrap_err(), AlgebraError::NotMonic);
        assert!(matches!(
            FiniteField::new(2, 21, &[0; 22]).unwrap_err(),
            AlgebraError::FieldTooLarge { .. }
        ));
    }

    #[test]
    fn prime_field_gf2() {
        let f = FiniteField::new(2, 1, &[1, 1]).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.primitive(), f.one());
        assert!(f.add(f.one(), f.one()).is_zero());
    }

    #[test]
    fn log_tables_are_consistent() {
        let f = gf81();
        for x in f.elements().skip(1) {
            let c = f.coeffs(x);
            assert_eq!(f.from_coeffs(&c).unwrap(), x);
        }
        for i in 0..80 {
            for j in 0..80 {
                assert_eq!(
                    f.mul(f.from_log(i), f.from_log(j)),
                    f.from_log((i + j) % 80)
                );
            }
        }
    }

    #[test]
    fn addition_matches_coordinates() {
        let f = FiniteField::new(5, 2, &[2, 4, 1]).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let ca = f.coeffs(a);
                let cb = f.coeffs(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % 5).collect();
                assert_eq!(f.add(a, b), f.from_coeffs(&sum).unwrap());
            }
        }
    }

    #[test]
    fn frobenius_fixes_nothing_but_itself() {
        let f = gf81();
        for x in f.elements() {
            assert_eq!(f.pow(x, 81), x);
        }
    }

    #[test]
    fn spec_string_round_trip() {
        let f = gf81();
        assert_eq!(f.spec_string(), "3^4:2,0,0,2,1");
        let g: FiniteField = f.spec_string().parse().unwrap();
        assert_eq!(f, g);
        assert!(matches!(
            "3-4:1".parse::<FiniteField>(),
            Err(AlgebraError::ParseFieldSpec(_))
        ));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
