//! A low-weight codeword of 𝒞(q,m,r,ℓ) from an explicit polynomial:
//! `f = ∏_{i<ℓ₁} (1 - x_i^(q-1)) · x_{ℓ₁}^(r-1) · ∏_{i=1}^{(ℓ₀-r+1)/r} (x_{ℓ₁}^r - ω^(ri))`
//! evaluated at `eM^j`, `j < n`.

use crate::algebra::{Alphabet, Symbol};
use crate::codes::weight;

use super::{companion_sequence, Ambient, FamilyError};

#[derive(Debug, Clone)]
pub struct Witness {
    pub word: Vec<Symbol>,
    pub weight: usize,
    /// `(q - ℓ₀ + r - 2) q^(m-1-ℓ₁) / r`.
    pub predicted: u64,
    pub ell1: u64,
    pub ell0: u64,
}

pub fn distance_witness(amb: &Ambient, r: u64, ell: u64) -> Result<Witness, FamilyError> {
    let (q, m) = (amb.q(), amb.m() as u64);
    let (ell1, ell0) = (ell / (q - 1), ell % (q - 1));
    if r < 2 || (q - 1) % r != 0 || ell + 1 >= (q - 1) * m || ell0 % r != r - 1 {
        return Err(FamilyError::EllNotDecomposable { ell });
    }
    let n = (amb.big_n() / r) as usize;
    let seq = companion_sequence(amb, n)?;
    let a = amb.alphabet();
    let lead = ell1 as usize;
    let shifts: Vec<Symbol> = (1..=(ell0 + 1 - r) / r)
        .map(|i| a.omega_pow((r * i) as i64))
        .collect();
    let word: Vec<Symbol> = seq
        .points()
        .iter()
        .map(|x| {
            let mut acc: Symbol = 1;
            for &xi in &x[..lead] {
                acc = a.mul(acc, a.sub(1, pow(a, xi, q - 1)));
            }
            let y = x[lead];
            acc = a.mul(acc, pow(a, y, r - 1));
            let yr = pow(a, y, r);
            for &s in &shifts {
                acc = a.mul(acc, a.sub(yr, s));
            }
            acc
        })
        .collect();
    let w = weight(&word);
    Ok(Witness {
        word,
        weight: w,
        predicted: (q - ell0 + r - 2) * q.pow((m - 1 - ell1) as u32) / r,
        ell1,
        ell0,
    })
}

fn pow(a: &Alphabet, x: Symbol, e: u64) -> Symbol {
    (0..e).fold(1, |acc, _| a.mul(acc, x))
}
