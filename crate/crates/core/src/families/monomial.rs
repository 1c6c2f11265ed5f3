//! Monomial spaces evaluated along the companion-matrix point sequence.

use crate::algebra::{Alphabet, Symbol};
use crate::codes::GeneratorMatrix;
use crate::cosets;

use super::counting::binomial;
use super::{companion_sequence, Ambient, CompanionSequence, FamilyError};

/// Upper limit on the size of a generated monomial set.
pub const MAX_MONOMIALS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialVariant {
    /// Exponents in `[0, q-1]`, `Σ ≡ r-1 (mod r)`, `Σ <= ℓ`.
    M,
    /// Exponents in `[0, q-1]`, `Σ ≡ ℓ (mod q-1)`, `Σ <= ℓ`.
    TildeM,
    /// Exponents in `[0, q-1]`, `Σ ≡ 0 (mod r)`, `Σ <= ℓ`.
    Ngrm,
    /// T-reductions of the monomials of total degree exactly ℓ.
    Homogeneous,
    Empty,
}

#[derive(Debug, Clone)]
pub struct MonomialSpace {
    variant: MonomialVariant,
    q: u64,
    m: usize,
    exponents: Vec<Vec<u32>>,
}

impl MonomialSpace {
    pub fn m_space(q: u64, m: u32, r: u64, ell: u64) -> Result<Self, FamilyError> {
        Self::capped(MonomialVariant::M, q, m, |s| s % r == r - 1 && s <= ell)
    }

    pub fn tilde(q: u64, m: u32, ell: u64) -> Result<Self, FamilyError> {
        Self::capped(MonomialVariant::TildeM, q, m, |s| s % (q - 1) == ell % (q - 1) && s <= ell)
    }

    pub fn ngrm(q: u64, m: u32, r: u64, ell: u64) -> Result<Self, FamilyError> {
        Self::capped(MonomialVariant::Ngrm, q, m, |s| s % r == 0 && s <= ell)
    }

    /// Every exponent tuple of total degree ℓ, each reduced by T:
    /// `0 ↦ 0`, `i > 0 ↦ i' in [1, q-1]` with `i' ≡ i (mod q-1)`.
    pub fn homogeneous(q: u64, m: u32, ell: u64) -> Result<Self, FamilyError> {
        let total = binomial((ell + m as u64) as i64 - 1, m as i64 - 1);
        if total > MAX_MONOMIALS as u128 {
            return Err(FamilyError::TooManyMonomials(total as u64));
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; m as usize];
        compositions(ell as u32, 0, &mut cur, &mut |e| {
            out.push(
                e.iter()
                    .map(|&i| if i == 0 { 0 } else { (i - 1) % (q as u32 - 1) + 1 })
                    .collect(),
            )
        });
        out.sort();
        out.dedup();
        Ok(MonomialSpace { variant: MonomialVariant::Homogeneous, q, m: m as usize, exponents: out })
    }

    pub fn empty(q: u64, m: u32) -> Self {
        MonomialSpace { variant: MonomialVariant::Empty, q, m: m as usize, exponents: Vec::new() }
    }

    fn capped(variant: MonomialVariant, q: u64, m: u32, keep: impl Fn(u64) -> bool) -> Result<Self, FamilyError> {
        let total = q.checked_pow(m).unwrap_or(u64::MAX);
        if total > MAX_MONOMIALS {
            return Err(FamilyError::TooManyMonomials(total));
        }
        let exponents = (0..total)
            .map(|i| cosets::digits(i, q, m).expect("i < q^m"))
            .filter(|d| keep(d.iter().sum()))
            .map(|d| d.into_iter().map(|x| x as u32).collect())
            .collect();
        Ok(MonomialSpace { variant, q, m: m as usize, exponents })
    }

    pub fn variant(&self) -> MonomialVariant {
        self.variant
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

fn compositions(left: u32, pos: usize, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        emit(cur);
        return;
    }
    for i in 0..=left {
        cur[pos] = i;
        compositions(left - i, pos + 1, cur, emit);
    }
}

/// `∏ x_j^{e_j}` with `0^0 = 1`.
pub fn evaluate_monomial(a: &Alphabet, exps: &[u32], point: &[Symbol]) -> Symbol {
    let mut acc: Symbol = 1;
    for (&e, &x) in exps.iter().zip(point) {
        if e == 0 {
            continue;
        }
        if x == 0 {
            return 0;
        }
        // x = ω^(x-1)
        acc = a.mul(acc, a.omega_pow((x as i64 - 1) * e as i64));
    }
    acc
}

/// One row per monomial: its values at the points of `seq`.
pub fn evaluation_code(space: &MonomialSpace, seq: &CompanionSequence) -> Result<GeneratorMatrix, FamilyError> {
    if space.m != seq.m() || space.q != seq.alphabet().q() as u64 {
        return Err(FamilyError::ShapeMismatch { expected: space.m, found: seq.m() });
    }
    let a = seq.alphabet();
    let rows = space
        .exponents
        .iter()
        .map(|e| seq.points().iter().map(|p| evaluate_monomial(a, e, p)).collect())
        .collect();
    Ok(GeneratorMatrix::new(a.clone(), seq.len(), rows).expect("rows have the sequence length"))
}

/// GC(q,m,r,ℓ): the space M evaluated at `eM^i`, `i < n`.
pub fn gc_code(amb: &Ambient, r: u64, ell: u64) -> Result<GeneratorMatrix, FamilyError> {
    let space = MonomialSpace::m_space(amb.q(), amb.m(), r, ell)?;
    let seq = companion_sequence(amb, (amb.big_n() / r) as usize)?;
    evaluation_code(&space, &seq)
}

/// C̃(q,m,r,ℓ): the space M̃ evaluated at `eM^i`, `i < n`.
pub fn tilde_code(amb: &Ambient, r: u64, ell: u64) -> Result<GeneratorMatrix, FamilyError> {
    let space = MonomialSpace::tilde(amb.q(), amb.m(), ell)?;
    let seq = companion_sequence(amb, (amb.big_n() / r) as usize)?;
    evaluation_code(&space, &seq)
}

/// P(C̃)(q,m,r,ℓ): M̃ evaluated at the first `(q^m-1)/(q-1)` points.
pub fn projective_tilde_code(amb: &Ambient, ell: u64) -> Result<GeneratorMatrix, FamilyError> {
    let space = MonomialSpace::tilde(amb.q(), amb.m(), ell)?;
    let seq = companion_sequence(amb, amb.projective_len() as usize)?;
    evaluation_code(&space, &seq)
}

/// Ĉ(q,m,ℓ): homogeneous polynomials of degree ℓ at the first
/// `(q^m-1)/(q-1)` points.
pub fn hat_code(amb: &Ambient, ell: u64) -> Result<GeneratorMatrix, FamilyError> {
    let space = MonomialSpace::homogeneous(amb.q(), amb.m(), ell)?;
    let seq = companion_sequence(amb, amb.projective_len() as usize)?;
    evaluation_code(&space, &seq)
}

/// NGRM(q,m,r,h) with `ℓ = (q-1)h + ℓ₀`.
pub fn ngrm(amb: &Ambient, r: u64, h: u64, ell0: u64) -> Result<GeneratorMatrix, FamilyError> {
    let (q, m) = (amb.q(), amb.m() as u64);
    let ell = (q - 1) * h + ell0;
    if ell0 > q - 2 || ell0 % r != 0 || ell >= (q - 1) * m || (q - 1) % r != 0 {
        return Err(FamilyError::BadEllDecomposition { ell });
    }
    let space = MonomialSpace::ngrm(q, amb.m(), r, ell)?;
    let seq = companion_sequence(amb, (amb.big_n() / r) as usize)?;
    evaluation_code(&space, &seq)
}

/// `|{0 <= j <= (q^m-1)/r : wt_q(jr) <= ℓ}|`.
pub fn ngrm_dimension(q: u64, m: u32, r: u64, ell: u64) -> u64 {
    let big_n = q.pow(m) - 1;
    (0..=big_n / r)
        .filter(|&j| cosets::wt_q(j * r, q, m).expect("jr <= N") <= ell)
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneous_is_reduced() {
        let s = MonomialSpace::homogeneous(3, 2, 3).unwrap();
        // x^3 -> x, x^2 y -> x^2 y, x y^2, y^3 -> y
        assert_eq!(s.exponents(), &[vec![0, 1], vec![1, 0], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn empty_space_gives_zero_code() {
        let amb = Ambient::new(3, 3).unwrap();
        let seq = companion_sequence(&amb, 13).unwrap();
        let g = evaluation_code(&MonomialSpace::empty(3, 3), &seq).unwrap();
        assert_eq!(g.rank(), 0);
    }

    #[test]
    fn bad_ngrm_decomposition() {
        let amb = Ambient::new(3, 4).unwrap();
        assert!(matches!(ngrm(&amb, 2, 0, 1), Err(FamilyError::BadEllDecomposition { .. })));
        assert!(matches!(ngrm(&amb, 2, 4, 0), Err(FamilyError::BadEllDecomposition { .. })));
    }
}
