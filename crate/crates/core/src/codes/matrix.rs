//! Generator matrices and reduced row echelon form over GF(q).

use std::sync::{Arc, OnceLock};

use crate::algebra::{Alphabet, Symbol};

use super::CodeError;

/// Reduced row echelon form: pivots are 1 and are the only nonzero entries
/// of their columns; zero rows are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub rows: Vec<Vec<Symbol>>,
    pub pivots: Vec<usize>,
}

/// A set of spanning rows of a linear code. Rows may be dependent; the
/// row space is what matters for equality.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    alphabet: Arc<Alphabet>,
    n: usize,
    rows: Vec<Vec<Symbol>>,
    rref: OnceLock<Rref>,
}

impl GeneratorMatrix {
    pub fn new(alphabet: Arc<Alphabet>, n: usize, rows: Vec<Vec<Symbol>>) -> Result<Self, CodeError> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(CodeError::LengthMismatch { expected: n, found: r.len() });
        }
        Ok(GeneratorMatrix {
            alphabet,
            n,
            rows,
            rref: OnceLock::new(),
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.alphabet.q()
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn rref(&self) -> &Rref {
        self.rref.get_or_init(|| rref(&self.alphabet, self.n, &self.rows))
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        self.rref().rows.len()
    }

    /// The matrix reduced to an independent basis (its RREF).
    pub fn basis(&self) -> GeneratorMatrix {
        let r = self.rref().clone();
        GeneratorMatrix {
            alphabet: self.alphabet.clone(),
            n: self.n,
            rows: r.rows.clone(),
            rref: OnceLock::from(r),
        }
    }

    fn same_shape(&self, other: &GeneratorMatrix) -> bool {
        self.n == other.n && self.alphabet.base() == other.alphabet.base()
    }

    /// Whether the word lies in the row space.
    pub fn contains(&self, word: &[Symbol]) -> Result<bool, CodeError> {
        if word.len() != self.n {
            return Err(CodeError::LengthMismatch { expected: self.n, found: word.len() });
        }
        let a = &self.alphabet;
        let r = self.rref();
        let mut w = word.to_vec();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            let c = w[p];
            if c != 0 {
                a.axpy(&mut w, a.neg(c), row);
            }
        }
        Ok(w.iter().all(|&s| s == 0))
    }

    /// A basis of the dual code (the null space of the rows).
    pub fn dual(&self) -> GeneratorMatrix {
        let a = &self.alphabet;
        let r = self.rref();
        let mut is_pivot = vec![false; self.n];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.n];
                v[free] = 1;
                for (row, &p) in r.rows.iter().zip(&r.pivots) {
                    v[p] = a.neg(row[free]);
                }
                v
            })
            .collect();
        GeneratorMatrix::new(self.alphabet.clone(), self.n, rows).expect("rows have length n")
    }

    /// `Σ message_i · row_i` over the given rows.
    pub fn combine(&self, message: &[Symbol]) -> Result<Vec<Symbol>, CodeError> {
        if message.len() != self.rows.len() {
            return Err(CodeError::LengthMismatch { expected: self.rows.len(), found: message.len() });
        }
        let mut w = vec![0; self.n];
        for (row, &m) in self.rows.iter().zip(message) {
            self.alphabet.axpy(&mut w, m, row);
        }
        Ok(w)
    }

    /// Every row of `self` is orthogonal to every row of `other`.
    pub fn is_orthogonal_to(&self, other: &GeneratorMatrix) -> Result<bool, CodeError> {
        if !self.same_shape(other) {
            return Err(CodeError::ShapeMismatch);
        }
        Ok(self
            .rows
            .iter()
            .all(|a| other.rows.iter().all(|b| self.alphabet.dot(a, b) == 0)))
    }

    /// Appends `other`'s rows (same length and alphabet).
    pub fn stack(&self, other: &GeneratorMatrix) -> Result<GeneratorMatrix, CodeError> {
        if !self.same_shape(other) {
            return Err(CodeError::ShapeMismatch);
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        GeneratorMatrix::new(self.alphabet.clone(), self.n, rows)
    }
}

/// Row-space equality through RREF comparison.
pub fn code_equal(a: &GeneratorMatrix, b: &GeneratorMatrix) -> Result<bool, CodeError> {
    if !a.same_shape(b) {
        return Err(CodeError::ShapeMismatch);
    }
    Ok(a.rref() == b.rref())
}

fn rref(a: &Alphabet, n: usize, rows: &[Vec<Symbol>]) -> Rref {
    let mut m: Vec<Vec<Symbol>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        if rank == m.len() {
            break;
        }
        let Some(found) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, found);
        let inv = a.inv(m[rank][col]);
        a.scale(&mut m[rank], inv);
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let c = a.neg(row[col]);
                a.axpy(row, c, &pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    Rref { rows: m, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{registry, Subfield};

    fn gf3() -> Arc<Alphabet> {
        let f = registry::default_field(3, 4).unwrap();
        Arc::new(Alphabet::new(&Subfield::new(f, 1).unwrap()).unwrap())
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let a = gf3();
        let two = a.from_int(2);
        let rows = vec![vec![1, 1, 0], vec![two, two, 0], vec![0, 1, 1]];
        let g = GeneratorMatrix::new(a, 3, rows).unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.rref().pivots, vec![0, 1]);
    }

    #[test]
    fn dual_is_orthogonal_and_complementary() {
        let a = gf3();
        let rows = vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]];
        let g = GeneratorMatrix::new(a, 4, rows).unwrap();
        let d = g.dual();
        assert_eq!(d.rank(), 2);
        assert!(g.is_orthogonal_to(&d).unwrap());
        assert!(code_equal(&d.dual(), &g).unwrap());
    }

    #[test]
    fn shape_mismatch() {
        let a = gf3();
        let g = GeneratorMatrix::new(a.clone(), 3, vec![vec![1, 0, 0]]).unwrap();
        let h = GeneratorMatrix::new(a, 4, vec![vec![1, 0, 0, 0]]).unwrap();
        assert_eq!(code_equal(&g, &h).unwrap_err(), CodeError::ShapeMismatch);
    }
}
