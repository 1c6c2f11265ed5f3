//! Finite fields, subfields and polynomial arithmetic.

mod alphabet;
mod field;
mod poly;
pub mod registry;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use alphabet::{Alphabet, Symbol};
pub use field::{prime_power, FieldElement, FiniteField, MAX_FIELD_ORDER};
pub use poly::{minimal_poly, Polynomial};

pub(crate) use field::gcd_u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus is not irreducible")]
    NotIrreducible,
    #[error("modulus is irreducible but its root is not primitive")]
    NotPrimitive,
    #[error("GF({p}^{degree}) exceeds the supported order {MAX_FIELD_ORDER}")]
    FieldTooLarge { p: u32, degree: u32 },
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("coefficient {value} is not reduced mod {p}")]
    CoefficientOutOfRange { value: u32, p: u32 },
    #[error("cannot parse field spec `{0}` (expected p^K:c0,...,cK)")]
    ParseFieldSpec(String),
    #[error("{e} does not divide the extension degree {degree}")]
    NotADivisor { e: u32, degree: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("element {0} is outside the coefficient subfield")]
    NotInSubfield(FieldElement),
    #[error("operands live over different subfields")]
    SubfieldMismatch,
    #[error("alphabet GF({0}) is larger than 256 symbols")]
    AlphabetTooLarge(u32),
}

/// The subfield GF(p^e) of a field GF(p^K), `e | K`.
///
/// Its nonzero elements are the powers of `ω = β^((p^K-1)/(p^e-1))`.
#[derive(Clone)]
pub struct Subfield {
    field: Arc<FiniteField>,
    e: u32,
    q: u32,
    step: u32,
}

impl fmt::Debug for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) in {:?}", self.q, self.field)
    }
}

impl PartialEq for Subfield {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for Subfield {}

impl Subfield {
    pub fn new(field: Arc<FiniteField>, e: u32) -> Result<Self, AlgebraError> {
        if e == 0 || field.degree() % e != 0 {
            return Err(AlgebraError::NotADivisor {
                e,
                degree: field.degree(),
            });
        }
        let q = field.characteristic().pow(e);
        let step = field.group_order() / (q - 1);
        Ok(Subfield { field, e, q, step })
    }

    /// The subfield of order `q` (which must be `p^e` with `e | K`).
    pub fn of_order(field: Arc<FiniteField>, q: u32) -> Result<Self, AlgebraError> {
        let p = field.characteristic();
        let (pp, e) = prime_power(q as u64).ok_or(AlgebraError::NotPrime(q))?;
        if pp != p {
            return Err(AlgebraError::NotPrime(q));
        }
        Subfield::new(field, e)
    }

    /// The whole field viewed as its own subfield.
    pub fn full(field: Arc<FiniteField>) -> Self {
        let e = field.degree();
        Subfield::new(field, e).expect("K divides K")
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    /// Degree e over the prime field.
    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Number of elements q = p^e.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Exponent of `β` giving `ω`.
    pub fn omega_log(&self) -> u32 {
        self.step
    }

    pub fn omega(&self) -> FieldElement {
        self.field.from_log(self.step % self.field.group_order())
    }

    /// `ω^j`.
    pub fn omega_pow(&self, j: i64) -> FieldElement {
        let qm1 = (self.q - 1) as i64;
        self.field
            .from_log(j.rem_euclid(qm1) as u32 * self.step)
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.log().map_or(true, |i| i % self.step == 0)
    }

    /// `0, ω^0, ω^1, ..., ω^(q-2)`.
    pub fn elements(&self) -> Vec<FieldElement> {
        std::iter::once(FieldElement::ZERO)
            .chain((0..self.q - 1).map(|j| self.field.from_log(j * self.step)))
            .collect()
    }

    /// Position of `x` in [`Subfield::elements`]: 0 for zero, `j + 1` for `ω^j`.
    pub fn index_of(&self, x: FieldElement) -> Result<u32, AlgebraError> {
        match x.log() {
            None => Ok(0),
            Some(i) if i % self.step == 0 => Ok(i / self.step + 1),
            Some(_) => Err(AlgebraError::NotInSubfield(x)),
        }
    }

    pub fn from_index(&self, idx: u32) -> FieldElement {
        if idx == 0 {
            FieldElement::ZERO
        } else {
            self.field.from_log((idx - 1) * self.step)
        }
    }

    /// `0` or `w^j`; elements outside the subfield print as `b^i`.
    pub fn display(&self, x: FieldElement) -> String {
        match self.index_of(x) {
            Ok(0) => "0".to_string(),
            Ok(j) => format!("w^{}", j - 1),
            Err(_) => x.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_inside_gf81() {
        let f = Arc::new(FiniteField::new(3, 4, &[2, 0, 0, 2, 1]).unwrap());
        let s = Subfield::new(f.clone(), 1).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.omega(), f.from_log(40));
        assert_eq!(f.mul(s.omega(), s.omega()), f.one());
        assert_eq!(s.elements().len(), 3);
        assert_eq!(f.to_int(s.omega()), Some(2));
        assert_eq!(s.display(s.omega()), "w^1");
        assert_eq!(s.display(f.from_log(3)), "b^3");
    }

    #[test]
    fn whole_field_as_subfield() {
        let f = Arc::new(FiniteField::new(3, 4, &[2, 0, 0, 2, 1]).unwrap());
        let s = Subfield::new(f.clone(), 4).unwrap();
        assert_eq!(s.order(), 81);
        assert!(f.elements().all(|x| s.contains(x)));
        assert_eq!(
            Subfield::new(f, 3).unwrap_err(),
            AlgebraError::NotADivisor { e: 3, degree: 4 }
        );
    }

    #[test]
    fn gf4_inside_gf64() {
        let f = Arc::new(FiniteField::new(2, 6, &[1, 1, 0, 1, 1, 0, 1]).unwrap());
        let s = Subfield::new(f, 2).unwrap();
        assert_eq!(s.omega_log(), 21);
        assert_eq!(s.elements().len(), 4);
    }
}
