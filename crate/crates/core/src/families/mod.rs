//! The code families 𝒞′(q,m,r,ℓ) and 𝒞(q,m,r,ℓ), punctured Dilix codes,
//! and the evaluation-code machinery around them.

mod companion;
mod counting;
mod monomial;
mod predict;
mod reference;
mod witness;

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{minimal_poly, prime_power, registry, AlgebraError, Alphabet, FieldElement, FiniteField, Polynomial, Subfield};
use crate::codes::{CodeError, ConstacyclicCode};
use crate::cosets::{self, CosetError, CosetTable, DefiningSet, EllClass};

pub use companion::{companion_sequence, CompanionSequence};
pub use counting::{binomial, bounded_compositions, congruent_tuple_count};
pub use monomial::{
    evaluate_monomial, evaluation_code, gc_code, hat_code, ngrm, ngrm_dimension, projective_tilde_code, tilde_code,
    MonomialSpace, MonomialVariant, MAX_MONOMIALS,
};
pub use predict::{predict_params, Claim, DistancePrediction, Prediction};
pub use reference::{
    c_dimension, c_dimension_upper, cprime_dimension, cprime_dual_table, dilix_dimension, prm2_weight_distribution,
    prm_params,
};
pub use witness::{distance_witness, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field GF({order}) is not GF({q}^{m})")]
    FieldMismatch { order: u64, q: u64, m: u32 },
    #[error("ell = {ell} is not congruent to r - 1 = {} mod {r}", r - 1)]
    EllNotCanonical { ell: u64, r: u64 },
    #[error("h = {h} outside {min}..={max}")]
    HOutOfRange { h: u64, min: u64, max: u64 },
    #[error("{count} points requested, at most {max} available")]
    CountTooLarge { count: usize, max: usize },
    #[error("ell = {ell} has no decomposition (q-1)ℓ₁ + ℓ₀ with ℓ₀ ≡ r-1 (mod r), ℓ₀ >= r-1 and ℓ < (q-1)m - 1")]
    EllNotDecomposable { ell: u64 },
    #[error("ell = (q-1)h + ℓ₀ = {ell} needs 0 <= ℓ₀ <= q-2, ℓ₀ ≡ 0 (mod r) and ℓ < (q-1)m")]
    BadEllDecomposition { ell: u64 },
    #[error("{0}")]
    OutOfTheoremRange(String),
    #[error("points have length {found}, expected {expected}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("monomial space too large ({0} monomials)")]
    TooManyMonomials(u64),
}

/// GF(q) inside GF(q^m), with β the primitive root of the field modulus.
#[derive(Debug, Clone)]
pub struct Ambient {
    q: u64,
    m: u32,
    field: Arc<FiniteField>,
    alphabet: Arc<Alphabet>,
}

impl Ambient {
    /// Uses the registry modulus for GF(q^m).
    pub fn new(q: u64, m: u32) -> Result<Self, FamilyError> {
        let (p, e) = prime_power(q).ok_or(FamilyError::NotPrimePower(q))?;
        let field = registry::default_field(p, e * m)?;
        Self::with_field(q, m, field)
    }

    pub fn with_field(q: u64, m: u32, field: Arc<FiniteField>) -> Result<Self, FamilyError> {
        prime_power(q).ok_or(FamilyError::NotPrimePower(q))?;
        if q.checked_pow(m) != Some(field.order() as u64) {
            return Err(FamilyError::FieldMismatch { order: field.order() as u64, q, m });
        }
        let base = Subfield::of_order(field.clone(), q as u32)?;
        let alphabet = Arc::new(Alphabet::new(&base)?);
        Ok(Ambient { q, m, field, alphabet })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn base(&self) -> &Subfield {
        self.alphabet.base()
    }

    /// `N = q^m - 1`.
    pub fn big_n(&self) -> u64 {
        self.q.pow(self.m) - 1
    }

    /// `(q^m - 1) / (q - 1)`.
    pub fn projective_len(&self) -> u64 {
        self.big_n() / (self.q - 1)
    }

    /// `λ = β^n` with `n = N / r`; it has order r.
    pub fn lambda(&self, r: u64) -> FieldElement {
        self.field.beta_pow((self.big_n() / r) as i64)
    }

    /// `ω = β^((q^m-1)/(q-1))`.
    pub fn omega(&self) -> FieldElement {
        self.base().omega()
    }

    /// The λ-constacyclic code of length `N / r` whose generator is the
    /// product of `𝕄_{β^i}` over the coset leaders of `set`.
    pub fn code_from_defining_set(&self, r: u64, set: DefiningSet) -> Result<ConstacyclicCode, FamilyError> {
        let g = self.product_of_minimal_polys(&set.leaders(self.q));
        let n = (self.big_n() / r) as usize;
        let code = ConstacyclicCode::from_generator(&g, self.lambda(r), n, self.alphabet.clone())?;
        Ok(code.with_defining_set(set))
    }

    fn product_of_minimal_polys(&self, leaders: &[u64]) -> Polynomial {
        let base = self.base();
        leaders
            .iter()
            .fold(Polynomial::one(base), |acc, &i| acc.mul(&minimal_poly(i, base)))
    }
}

/// 𝒞′(q,m,r,ℓ): zeros `β^i` for `i ≡ 1 (mod r)`, `1 <= wt(i) <= ℓ`.
pub fn cprime(amb: &Ambient, r: u64, ell: u64) -> Result<ConstacyclicCode, FamilyError> {
    let set = cosets::defining_set_cprime(amb.q, amb.m, r, ell)?;
    amb.code_from_defining_set(r, set)
}

/// 𝒞(q,m,r,ℓ): zeros `β^i` for `wt_q(i) < (q-1)m - ℓ`, `wt_q(i) ≡ 1 (mod r)`.
pub fn cfamily(amb: &Ambient, r: u64, ell: u64) -> Result<ConstacyclicCode, FamilyError> {
    let set = cosets::defining_set_c(amb.q, amb.m, r, ell)?;
    amb.code_from_defining_set(r, set)
}

/// Generator of 𝒞(q,m,r,ℓ)^⊥ as a λ⁻¹-constacyclic code: the product of
/// `𝕄_{β^i}` over leaders with `wt_q(i) ≡ r-1 (mod r)` and `wt_q(i) <= ℓ`.
pub fn cfamily_dual_generator(amb: &Ambient, r: u64, ell: u64) -> Result<Polynomial, FamilyError> {
    // validates r and the range of ℓ
    cosets::defining_set_c(amb.q, amb.m, r, ell)?;
    if cosets::normalize_ell(r, ell) != EllClass::Canonical(ell) {
        return Err(FamilyError::EllNotCanonical { ell, r });
    }
    let table = CosetTable::new(amb.q, amb.big_n())?;
    let leaders: Vec<u64> = table
        .leaders()
        .into_iter()
        .filter(|&i| {
            let w = cosets::wt_q(i, amb.q, amb.m).expect("i < N");
            w % r == r - 1 && w <= ell
        })
        .collect();
    Ok(amb.product_of_minimal_polys(&leaders))
}

/// The cyclic code Ω(q,m,h) of length `N` with zeros `β^a`,
/// `1 <= a <= N-1`, `1 <= wt(a) <= h`.
pub fn dilix(amb: &Ambient, h: u64) -> Result<ConstacyclicCode, FamilyError> {
    let m = amb.m as u64;
    if h < 1 || h + 1 > m {
        return Err(FamilyError::HOutOfRange { h, min: 1, max: m.saturating_sub(1) });
    }
    let big_n = amb.big_n();
    let indices = (1..big_n)
        .filter(|&a| {
            let w = cosets::wt(a, amb.q, amb.m).expect("a < N");
            (1..=h).contains(&w)
        })
        .collect();
    let set = DefiningSet::custom(indices, big_n);
    amb.code_from_defining_set(1, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ambient_rejects_wrong_field() {
        let f = registry::default_field(3, 3).unwrap();
        assert!(matches!(
            Ambient::with_field(3, 4, f),
            Err(FamilyError::FieldMismatch { .. })
        ));
        assert_eq!(Ambient::new(6, 2).unwrap_err(), FamilyError::NotPrimePower(6));
    }

    #[test]
    fn small_family_dimensions() {
        let amb = Ambient::new(3, 4).unwrap();
        assert_eq!(cprime(&amb, 2, 1).unwrap().k(), 36);
        assert_eq!(cfamily(&amb, 2, 1).unwrap().k(), 4);
        let amb = Ambient::new(4, 2).unwrap();
        let c = cfamily(&amb, 3, 2).unwrap();
        assert_eq!((c.n(), c.k()), (5, 3));
    }

    #[test]
    fn lambda_has_order_r() {
        let amb = Ambient::new(5, 2).unwrap();
        for r in [2, 4] {
            assert_eq!(amb.field().element_order(amb.lambda(r)), Some(r as u32));
        }
    }

    #[test]
    fn dual_generator_needs_canonical_ell() {
        let amb = Ambient::new(3, 3).unwrap();
        assert_eq!(
            cfamily_dual_generator(&amb, 2, 2).unwrap_err(),
            FamilyError::EllNotCanonical { ell: 2, r: 2 }
        );
    }

    #[test]
    fn dilix_h_range() {
        let amb = Ambient::new(3, 3).unwrap();
        assert!(matches!(dilix(&amb, 0), Err(FamilyError::HOutOfRange { .. })));
        assert!(matches!(dilix(&amb, 3), Err(FamilyError::HOutOfRange { .. })));
    }
}
