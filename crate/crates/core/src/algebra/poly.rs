//! Dense polynomials with coefficients in a subfield GF(q) of GF(p^K).

use std::fmt;

use super::{AlgebraError, FieldElement, FiniteField, Subfield};

/// A polynomial over a [`Subfield`], coefficients in ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient
/// is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
    base: Subfield,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.base.display(c);
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Builds a polynomial, trimming trailing zeros and checking that every
    /// coefficient lies in `base`.
    pub fn new(coeffs: Vec<FieldElement>, base: &Subfield) -> Result<Self, AlgebraError> {
        if let Some(&c) = coeffs.iter().find(|&&c| !base.contains(c)) {
            return Err(AlgebraError::NotInSubfield(c));
        }
        Ok(Self::from_trusted(coeffs, base))
    }

    pub(crate) fn from_trusted(mut coeffs: Vec<FieldElement>, base: &Subfield) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial {
            coeffs,
            base: base.clone(),
        }
    }

    /// Coefficients given as subfield indices (0 = zero, j+1 = `ω^j`).
    pub fn from_indices(indices: &[u32], base: &Subfield) -> Result<Self, AlgebraError> {
        let q = base.order();
        let coeffs = indices
            .iter()
            .map(|&i| {
                if i >= q {
                    Err(AlgebraError::CoefficientOutOfRange { value: i, p: q })
                } else {
                    Ok(base.from_index(i))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_trusted(coeffs, base))
    }

    pub fn zero(base: &Subfield) -> Self {
        Self::from_trusted(Vec::new(), base)
    }

    pub fn one(base: &Subfield) -> Self {
        Self::from_trusted(vec![FieldElement::ONE], base)
    }

    /// `x^n - c`.
    pub fn binomial(n: usize, c: FieldElement, base: &Subfield) -> Result<Self, AlgebraError> {
        let f = base.field();
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[n] = FieldElement::ONE;
        coeffs[0] = f.sub(coeffs[0], c);
        Self::new(coeffs, base)
    }

    /// `∏ (x - r)` over the given roots, computed in the big field.
    /// Fails if the product does not have coefficients in `base`.
    pub fn from_roots(roots: &[FieldElement], base: &Subfield) -> Result<Self, AlgebraError> {
        let f = base.field();
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(FieldElement::ONE);
        for &r in roots {
            let neg_r = f.neg(r);
            coeffs.push(FieldElement::ZERO);
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 { coeffs[i - 1] } else { FieldElement::ZERO };
                coeffs[i] = f.add(lower, f.mul(neg_r, coeffs[i]));
            }
        }
        Self::new(coeffs, base)
    }

    pub fn base(&self) -> &Subfield {
        &self.base
    }

    fn field(&self) -> &FiniteField {
        self.base.field()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Subfield indices of the coefficients, ascending.
    pub fn indices(&self) -> Vec<u32> {
        self.coeffs
            .iter()
            .map(|&c| self.base.index_of(c).expect("coefficients lie in the base"))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FieldElement::ONE
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_same(&self, other: &Self) {
        assert!(self.base == other.base, "polynomials over different subfields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let f = self.field();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_trusted(coeffs, &self.base)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.field().neg(FieldElement::ONE)))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = self.field();
        let coeffs = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        Self::from_trusted(coeffs, &self.base)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.base);
        }
        let f = self.field();
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::from_trusted(out, &self.base)
    }

    /// `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and `deg remainder < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        if self.base != divisor.base {
            return Err(AlgebraError::SubfieldMismatch);
        }
        let d = divisor.degree().ok_or(AlgebraError::DivisionByZeroPoly)?;
        let f = self.field();
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(&self.base), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[top - d] = factor;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = top - d + j;
                rem[idx] = f.sub(rem[idx], f.mul(factor, b));
            }
        }
        rem.truncate(d);
        Ok((
            Self::from_trusted(quot, &self.base),
            Self::from_trusted(rem, &self.base),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Exact quotient, `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>, AlgebraError> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Self) -> Result<bool, AlgebraError> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Scales to leading coefficient one; the zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        match self.field().inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = self.field();
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `h_0^{-1} x^k h(1/x)`: the reversed polynomial scaled to be monic.
    pub fn reciprocal(&self) -> Result<Self, AlgebraError> {
        let h0 = self.coeff(0);
        let inv = self
            .field()
            .inv(h0)
            .ok_or(AlgebraError::ZeroConstantTerm)?;
        let rev: Vec<FieldElement> = self.coeffs.iter().rev().copied().collect();
        Ok(Self::from_trusted(rev, &self.base).scale(inv))
    }

    /// Polynomial with the same coefficients viewed over a larger subfield.
    pub fn lift(&self, base: &Subfield) -> Result<Self, AlgebraError> {
        Self::new(self.coeffs.clone(), base)
    }
}

/// Minimal polynomial of `β^i` over `base`:
/// `∏_{j ∈ C_i} (x - β^j)` with `C_i` the q-cyclotomic coset of `i`
/// modulo `p^K - 1`.
pub fn minimal_poly(i: u64, base: &Subfield) -> Polynomial {
    let f = base.field();
    let g = f.group_order() as u64;
    let q = base.order() as u64;
    let start = i % g;
    let mut roots = Vec::new();
    let mut j = start;
    loop {
        roots.push(f.from_log(j as u32));
        j = (j * q) % g;
        if j == start {
            break;
        }
    }
    Polynomial::from_roots(&roots, base).expect("conjugate products lie in the base")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn gf81() -> Arc<FiniteField> {
        Arc::new(FiniteField::new(3, 4, &[2, 0, 0, 2, 1]).unwrap())
    }

    fn gf3(f: &Arc<FiniteField>) -> Subfield {
        Subfield::new(f.clone(), 1).unwrap()
    }

    fn ints(p: &Polynomial) -> Vec<u32> {
        let f = p.base().field();
        p.coeffs().iter().map(|&c| f.to_int(c).unwrap()).collect()
    }

    fn from_ints(c: &[u64], base: &Subfield) -> Polynomial {
        let f = base.field();
        Polynomial::new(c.iter().map(|&v| f.from_int(v)).collect(), base).unwrap()
    }

    #[test]
    fn minimal_poly_of_beta_is_the_modulus() {
        let f = gf81();
        let s = gf3(&f);
        assert_eq!(ints(&minimal_poly(1, &s)), vec![2, 0, 0, 2, 1]);
        assert_eq!(ints(&minimal_poly(0, &s)), vec![2, 1]);
    }

    #[test]
    fn minimal_poly_conjugates_agree() {
        let f = gf81();
        let s = gf3(&f);
        for i in 0..80 {
            assert_eq!(minimal_poly(i, &s), minimal_poly((3 * i) % 80, &s));
        }
    }

    #[test]
    fn minimal_poly_in_gf27() {
        let f = Arc::new(FiniteField::new(3, 3, &[1, 2, 0, 1]).unwrap());
        let s = gf3(&f);
        let m = minimal_poly(2, &s);
        let expected = Polynomial::from_roots(
            &[f.from_log(2), f.from_log(6), f.from_log(18)],
            &Subfield::full(f.clone()),
        )
        .unwrap();
        assert_eq!(m.coeffs(), expected.coeffs());
        assert_eq!(m.degree(), Some(3));
        assert!(m.coeffs().iter().all(|&c| s.contains(c)));
    }

    #[test]
    fn reciprocal_examples() {
        let f = gf81();
        let s = gf3(&f);
        let h = from_ints(&[2, 1, 1], &s);
        assert_eq!(ints(&h.reciprocal().unwrap()), vec![2, 2, 1]);
        let lin = from_ints(&[2, 1], &s);
        assert_eq!(lin.reciprocal().unwrap(), lin);
        assert_eq!(h.reciprocal().unwrap().reciprocal().unwrap(), h.monic());
        assert_eq!(
            from_ints(&[0, 1], &s).reciprocal().unwrap_err(),
            AlgebraError::ZeroConstantTerm
        );
    }

    #[test]
    fn gcd_examples() {
        let f = gf81();
        let s = gf3(&f);
        let a = from_ints(&[2, 0, 1], &s);
        let b = from_ints(&[2, 1], &s);
        assert_eq!(ints(&a.gcd(&b)), vec![2, 1]);
        let c = from_ints(&[1, 2, 2], &s);
        assert_eq!(c.gcd(&Polynomial::zero(&s)), c.monic());
    }

    #[test]
    fn product_of_minimal_polys_is_x_to_the_group_order_minus_one() {
        let f = gf81();
        let s = gf3(&f);
        let mut seen = vec![false; 80];
        let mut prod = Polynomial::one(&s);
        for i in 0..80u64 {
            if seen[i as usize] {
                continue;
            }
            let mut j = i;
            loop {
                seen[j as usize] = true;
                j = j * 3 % 80;
                if j == i {
                    break;
                }
            }
            prod = prod.mul(&minimal_poly(i, &s));
        }
        assert_eq!(prod, Polynomial::binomial(80, f.one(), &s).unwrap());
    }

    #[test]
    fn divmod_rejects_zero_divisor() {
        let f = gf81();
        let s = gf3(&f);
        let a = from_ints(&[1, 1], &s);
        assert_eq!(
            a.divmod(&Polynomial::zero(&s)).unwrap_err(),
            AlgebraError::DivisionByZeroPoly
        );
    }

    #[test]
    fn from_roots_rejects_non_subfield_products() {
        let f = gf81();
        let s = gf3(&f);
        assert!(matches!(
            Polynomial::from_roots(&[f.from_log(1)], &s),
            Err(AlgebraError::NotInSubfield(_))
        ));
    }
}
