//! The companion matrix of 𝕄_β and the point sequence e, eM, eM², ….
//!
//! `eM^i` is the coordinate vector of `β^i` in the basis `1, β, …, β^(m-1)`.

use std::sync::Arc;

use crate::algebra::{minimal_poly, Alphabet, Symbol};

use super::{Ambient, FamilyError};

#[derive(Debug, Clone)]
pub struct CompanionSequence {
    alphabet: Arc<Alphabet>,
    m: usize,
    matrix: Vec<Vec<Symbol>>,
    points: Vec<Vec<Symbol>>,
}

/// The first `count` points `eM^i`; at most `q^m - 1` of them are distinct.
pub fn companion_sequence(amb: &Ambient, count: usize) -> Result<CompanionSequence, FamilyError> {
    let max = amb.big_n() as usize;
    if count > max {
        return Err(FamilyError::CountTooLarge { count, max });
    }
    let a = amb.alphabet().clone();
    let m = amb.m() as usize;
    let mb = minimal_poly(1, amb.base());
    debug_assert_eq!(mb.degree(), Some(m));
    let mut matrix = vec![vec![0; m]; m];
    for (i, row) in matrix.iter_mut().enumerate().take(m - 1) {
        row[i + 1] = 1;
    }
    for j in 0..m {
        let eps = a.from_element(mb.coeff(j)).expect("coefficients lie in GF(q)");
        matrix[m - 1][j] = a.neg(eps);
    }
    let mut points = Vec::with_capacity(count);
    let mut v = vec![0; m];
    v[0] = 1;
    for _ in 0..count {
        let next = row_times(&a, &v, &matrix);
        points.push(std::mem::replace(&mut v, next));
    }
    Ok(CompanionSequence { alphabet: a, m, matrix, points })
}

fn row_times(a: &Alphabet, v: &[Symbol], mat: &[Vec<Symbol>]) -> Vec<Symbol> {
    let mut out = vec![0; mat[0].len()];
    for (&c, row) in v.iter().zip(mat) {
        if c != 0 {
            a.axpy(&mut out, c, row);
        }
    }
    out
}

impl CompanionSequence {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &[Vec<Symbol>] {
        &self.matrix
    }

    pub fn points(&self) -> &[Vec<Symbol>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `M^k` by repeated squaring.
    pub fn matrix_pow(&self, mut k: u64) -> Vec<Vec<Symbol>> {
        let a = &self.alphabet;
        let mut result: Vec<Vec<Symbol>> = (0..self.m)
            .map(|i| {
                let mut row = vec![0; self.m];
                row[i] = 1;
                row
            })
            .collect();
        let mut base = self.matrix.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = mat_mul(a, &result, &base);
            }
            base = mat_mul(a, &base, &base);
            k >>= 1;
        }
        result
    }
}

fn mat_mul(a: &Alphabet, x: &[Vec<Symbol>], y: &[Vec<Symbol>]) -> Vec<Vec<Symbol>> {
    x.iter().map(|row| row_times(a, row, y)).collect()
}
