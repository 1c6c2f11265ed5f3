//! Dense lookup tables for a small coefficient field GF(q), q <= 256.
//!
//! Codewords are stored as symbol sequences. A symbol is the subfield index
//! of an element: 0 is zero and `j + 1` is `ω^j`.

use super::{AlgebraError, FieldElement, Subfield};

pub type Symbol = u8;

#[derive(Clone, Debug)]
pub struct Alphabet {
    base: Subfield,
    q: usize,
    p: u32,
    e: u32,
    add: Vec<Symbol>,
    mul: Vec<Symbol>,
    neg: Vec<Symbol>,
    inv: Vec<Symbol>,
    /// Coordinates over GF(p) in the basis `1, ω, ..., ω^(e-1)`.
    digits: Vec<Vec<u8>>,
    /// Packed base-p coordinates back to symbols.
    from_packed: Vec<Symbol>,
}

impl Alphabet {
    pub fn new(base: &Subfield) -> Result<Self, AlgebraError> {
        let q = base.order();
        if q > 256 {
            return Err(AlgebraError::AlphabetTooLarge(q));
        }
        let f = base.field();
        let q = q as usize;
        let elems = base.elements();
        let sym = |x: FieldElement| base.index_of(x).expect("closed under field ops") as Symbol;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = sym(f.add(elems[a], elems[b]));
                mul[a * q + b] = sym(f.mul(elems[a], elems[b]));
            }
        }
        let neg = elems.iter().map(|&x| sym(f.neg(x))).collect();
        let inv = elems
            .iter()
            .map(|&x| f.inv(x).map_or(0, sym))
            .collect();

        let p = f.characteristic();
        let e = base.degree();
        let mut digits = vec![Vec::new(); q];
        let mut from_packed = vec![0; q];
        let powers: Vec<FieldElement> = (0..e as i64).map(|i| base.omega_pow(i)).collect();
        for packed in 0..q {
            let mut rest = packed as u32;
            let mut x = FieldElement::ZERO;
            let mut ds = Vec::with_capacity(e as usize);
            for &w in &powers {
                let d = rest % p;
                rest /= p;
                ds.push(d as u8);
                x = f.add(x, f.mul(f.from_int(d as u64), w));
            }
            let s = sym(x);
            from_packed[packed] = s;
            digits[s as usize] = ds;
        }
        Ok(Alphabet {
            base: base.clone(),
            q,
            p,
            e,
            add,
            mul,
            neg,
            inv,
            digits,
            from_packed,
        })
    }

    pub fn base(&self) -> &Subfield {
        &self.base
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree e of GF(q) over GF(p).
    pub fn degree(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Symbol) -> Symbol {
        self.neg[a as usize]
    }

    /// Multiplicative inverse, 0 for 0.
    #[inline]
    pub fn inv(&self, a: Symbol) -> Symbol {
        self.inv[a as usize]
    }

    /// `ω^j`.
    pub fn omega_pow(&self, j: i64) -> Symbol {
        (j.rem_euclid(self.q as i64 - 1) + 1) as Symbol
    }

    pub fn to_element(&self, s: Symbol) -> FieldElement {
        self.base.from_index(s as u32)
    }

    pub fn from_element(&self, x: FieldElement) -> Result<Symbol, AlgebraError> {
        self.base.index_of(x).map(|i| i as Symbol)
    }

    /// Integer value of a prime-field symbol, `None` outside GF(p).
    pub fn to_int(&self, s: Symbol) -> Option<u32> {
        let d = &self.digits[s as usize];
        d[1..].iter().all(|&x| x == 0).then_some(d[0] as u32)
    }

    /// Symbol of the prime-field element `c mod p`.
    pub fn from_int(&self, c: u64) -> Symbol {
        self.from_packed[(c % self.p as u64) as usize]
    }

    /// GF(p)-coordinates of `s` in the basis `1, ω, ..., ω^(e-1)`.
    pub fn digits(&self, s: Symbol) -> &[u8] {
        &self.digits[s as usize]
    }

    pub fn from_digits(&self, ds: &[u8]) -> Symbol {
        let packed = ds
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * self.p as usize + d as usize);
        self.from_packed[packed]
    }

    /// Symbols for every element: `0, 1, ..., q-1`.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (0..self.q).map(|s| s as Symbol)
    }

    /// Standard dot product.
    pub fn dot(&self, a: &[Symbol], b: &[Symbol]) -> Symbol {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// `dst += c * src`.
    pub fn axpy(&self, dst: &mut [Symbol], c: Symbol, src: &[Symbol]) {
        if c == 0 {
            return;
        }
        let row = &self.mul[c as usize * self.q..(c as usize + 1) * self.q];
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, row[s as usize]);
        }
    }

    pub fn scale(&self, v: &mut [Symbol], c: Symbol) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteField;
    use std::sync::Arc;

    #[test]
    fn gf4_tables_are_a_field() {
        let f = Arc::new(FiniteField::new(2, 4, &[1, 1, 0, 0, 1]).unwrap());
        let a = Alphabet::new(&Subfield::new(f, 2).unwrap()).unwrap();
        assert_eq!(a.q(), 4);
        for x in a.symbols() {
            assert_eq!(a.add(x, x), 0);
            if x != 0 {
                assert_eq!(a.mul(x, a.inv(x)), 1);
            }
            assert_eq!(a.from_digits(a.digits(x)), x);
            for y in a.symbols() {
                let sum: Vec<u8> = a
                    .digits(x)
                    .iter()
                    .zip(a.digits(y))
                    .map(|(u, v)| (u + v) % 2)
                    .collect();
                assert_eq!(a.from_digits(&sum), a.add(x, y));
            }
        }
    }

    #[test]
    fn prime_field_symbols_map_to_integers() {
        let f = Arc::new(FiniteField::new(5, 2, &[2, 4, 1]).unwrap());
        let a = Alphabet::new(&Subfield::new(f, 1).unwrap()).unwrap();
        for c in 0..5u64 {
            assert_eq!(a.to_int(a.from_int(c)), Some(c as u32));
        }
        assert_eq!(a.neg(a.from_int(2)), a.from_int(3));
    }

    #[test]
    fn rejects_large_alphabet() {
        let f = Arc::new(FiniteField::new(2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]).unwrap());
        assert_eq!(
            Alphabet::new(&Subfield::full(f)).unwrap_err(),
            AlgebraError::AlphabetTooLarge(1024)
        );
    }
}
