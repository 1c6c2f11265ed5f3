//! From cyclic codes of length rn to λ-constacyclic codes of length n.
//!
//! `x^(rn) - 1 = ∏_{i<r} (x^n - λ^i)`, so a cyclic code's generator splits
//! into the pieces `gcd(g, x^n - λ^i)`.

use std::sync::Arc;

use crate::algebra::{Alphabet, FieldElement, Polynomial};

use super::{from_symbols, to_symbols, CodeError, ConstacyclicCode};

#[derive(Debug, Clone)]
pub struct Restriction {
    /// `gcd(g, x^n - λ)`.
    pub underline: Polynomial,
    /// `{i : gcd(g, x^n - λ^i) != 1}`.
    pub ind: Vec<usize>,
}

/// Splits a divisor `g` of `x^(rn) - 1`, where r is the order of `lambda`.
pub fn restrict_cyclic(g: &Polynomial, n: usize, lambda: FieldElement) -> Result<Restriction, CodeError> {
    let base = g.base();
    let f = base.field();
    let r = f.element_order(lambda).ok_or(CodeError::BadLambda)? as usize;
    if !base.contains(lambda) {
        return Err(CodeError::BadLambda);
    }
    let full = Polynomial::binomial(r * n, f.one(), base)?;
    if g.is_zero() || !g.divides(&full)? {
        return Err(CodeError::NotADivisor(r * n));
    }
    let mut ind = Vec::new();
    let mut underline = None;
    for i in 0..r {
        let lam_i = f.pow(lambda, i as u64);
        let piece = g.gcd(&Polynomial::binomial(n, lam_i, base)?);
        if piece.degree() != Some(0) {
            ind.push(i);
        }
        if i == 1 % r.max(1) && underline.is_none() {
            underline = Some(piece);
        }
    }
    Ok(Restriction {
        underline: underline.expect("i = 1 visited"),
        ind,
    })
}

/// The λ-constacyclic code of residues `c(x) mod (x^n - λ)` over the
/// codewords of a cyclic code of length rn.
pub fn residue_code(cyclic: &ConstacyclicCode, lambda: FieldElement) -> Result<ConstacyclicCode, CodeError> {
    let a: &Arc<Alphabet> = cyclic.alphabet();
    let f = cyclic.field();
    let r = f.element_order(lambda).ok_or(CodeError::BadLambda)? as usize;
    let big = cyclic.n();
    if big % r != 0 {
        return Err(CodeError::LengthNotDivisible { n: big, r });
    }
    let n = big / r;
    let modulus = Polynomial::binomial(n, lambda, a.base())?;
    let mut g = modulus.clone();
    for row in cyclic.generator_matrix().rows() {
        let reduced = from_symbols(row, a).rem(&modulus)?;
        g = g.gcd(&reduced);
    }
    ConstacyclicCode::from_generator(&g, lambda, n, a.clone())
}

/// Each generator row reduced mod `x^n - λ` (length n).
pub fn residue_rows(cyclic: &ConstacyclicCode, lambda: FieldElement, n: usize) -> Result<Vec<Vec<u8>>, CodeError> {
    let a = cyclic.alphabet();
    let modulus = Polynomial::binomial(n, lambda, a.base())?;
    cyclic
        .generator_matrix()
        .rows()
        .iter()
        .map(|row| {
            let reduced = from_symbols(row, a).rem(&modulus)?;
            let mut v = to_symbols(&reduced, a);
            v.resize(n, 0);
            Ok(v)
        })
        .collect()
}
