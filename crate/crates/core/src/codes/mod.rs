//! λ-constacyclic codes over GF(q).

mod bch;
mod matrix;
mod record;
mod restrict;

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, Alphabet, FieldElement, FiniteField, Polynomial, Subfield, Symbol};
use crate::cosets::DefiningSet;

pub use bch::{bch_bound_detailed, bch_lower_bound, BchBound, DEFAULT_MAX_MULTIPLIERS};
pub use matrix::{code_equal, GeneratorMatrix, Rref};
pub use record::CodeRecord;
pub use restrict::{residue_code, residue_rows, restrict_cyclic, Restriction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("generator does not divide x^n - λ")]
    NotADivisorOfXnMinusLambda,
    #[error("polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("codes differ in length or alphabet")]
    ShapeMismatch,
    #[error("length {n} is not divisible by {r}")]
    LengthNotDivisible { n: usize, r: usize },
    #[error("trace coefficient {index} lies outside its field GF(q^{degree})")]
    WrongSubfield { index: usize, degree: usize },
    #[error("expected {expected} trace coefficients, found {found}")]
    CoefficientCount { expected: usize, found: usize },
    #[error("the field does not contain the {0}-th roots of unity")]
    NoSplittingField(usize),
    #[error("λ must be a nonzero element of the coefficient field")]
    BadLambda,
    #[error("length must be positive")]
    EmptyLength,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Roots of `x^n - λ` indexed as `γ^(u + r t)` for `t` in `Z_n`, where `γ`
/// is a primitive `rn`-th root of unity with `γ^(nu) = λ`.
#[derive(Debug, Clone)]
pub struct RootIndexing {
    /// `log_β γ`.
    pub gamma_log: u64,
    /// Order of λ.
    pub r: usize,
    pub u: usize,
    pub n: usize,
}

impl RootIndexing {
    /// Exponent of `γ` for the t-th root.
    pub fn exponent(&self, t: usize) -> usize {
        self.u + self.r * (t % self.n)
    }

    pub fn root(&self, field: &FiniteField, t: usize) -> FieldElement {
        field.from_log(((self.exponent(t) as u64 * self.gamma_log) % field.group_order() as u64) as u32)
    }
}

/// A λ-constacyclic code of length n over GF(q) given by its monic
/// generator polynomial `g | x^n - λ`.
#[derive(Clone)]
pub struct ConstacyclicCode {
    alphabet: Arc<Alphabet>,
    n: usize,
    lambda: FieldElement,
    generator: Polynomial,
    check: Polynomial,
    gen_syms: Vec<Symbol>,
    defining_set: Option<DefiningSet>,
}

impl std::fmt::Debug for ConstacyclicCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ConstacyclicCode[q={}, n={}, k={}, λ={}]",
            self.q(),
            self.n,
            self.k(),
            self.lambda
        )
    }
}

impl ConstacyclicCode {
    pub fn from_generator(
        generator: &Polynomial,
        lambda: FieldElement,
        n: usize,
        alphabet: Arc<Alphabet>,
    ) -> Result<Self, CodeError> {
        let base = alphabet.base();
        if n == 0 {
            return Err(CodeError::EmptyLength);
        }
        if lambda.is_zero() || !base.contains(lambda) {
            return Err(CodeError::BadLambda);
        }
        if generator.base() != base {
            return Err(AlgebraError::SubfieldMismatch.into());
        }
        let g = generator.monic();
        let xn = Polynomial::binomial(n, lambda, base)?;
        let check = xn
            .exact_div(&g)
            .map_err(|_| CodeError::NotADivisorOfXnMinusLambda)?
            .ok_or(CodeError::NotADivisorOfXnMinusLambda)?;
        let gen_syms = to_symbols(&g, &alphabet);
        Ok(ConstacyclicCode {
            alphabet,
            n,
            lambda,
            generator: g,
            check,
            gen_syms,
            defining_set: None,
        })
    }

    /// Attaches the defining set the generator was built from.
    pub fn with_defining_set(mut self, set: DefiningSet) -> Self {
        self.defining_set = Some(set);
        self
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn base(&self) -> &Subfield {
        self.alphabet.base()
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.alphabet.base().field()
    }

    pub fn q(&self) -> usize {
        self.alphabet.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generator.degree().expect("generator is nonzero")
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    /// Multiplicative order of λ.
    pub fn r(&self) -> usize {
        self.field().element_order(self.lambda).expect("λ is nonzero") as usize
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    pub fn check(&self) -> &Polynomial {
        &self.check
    }

    pub fn defining_set(&self) -> Option<&DefiningSet> {
        self.defining_set.as_ref()
    }

    pub fn is_zero_code(&self) -> bool {
        self.k() == 0
    }

    /// The dual code, generated by the reciprocal of the check polynomial;
    /// it is λ⁻¹-constacyclic.
    pub fn dual(&self) -> ConstacyclicCode {
        let hhat = self.check.reciprocal().expect("h(0) != 0 since λ != 0");
        let lambda_inv = self.field().inv(self.lambda).expect("λ is nonzero");
        ConstacyclicCode::from_generator(&hhat, lambda_inv, self.n, self.alphabet.clone())
            .expect("the reciprocal check polynomial divides x^n - 1/λ")
    }

    /// `message(x) · g(x)`.
    pub fn encode(&self, message: &[Symbol]) -> Result<Vec<Symbol>, CodeError> {
        let k = self.k();
        if message.len() != k {
            return Err(CodeError::LengthMismatch { expected: k, found: message.len() });
        }
        let a = &self.alphabet;
        let mut word = vec![0; self.n];
        for (i, &m) in message.iter().enumerate() {
            a.axpy(&mut word[i..i + self.gen_syms.len()], m, &self.gen_syms);
        }
        Ok(word)
    }

    /// Whether `g(x)` divides the word polynomial.
    pub fn contains(&self, word: &[Symbol]) -> Result<bool, CodeError> {
        if word.len() != self.n {
            return Err(CodeError::LengthMismatch { expected: self.n, found: word.len() });
        }
        Ok(rem_monic(word, &self.gen_syms, &self.alphabet).iter().all(|&s| s == 0))
    }

    /// The λ-twisted shift `(λc_{n-1}, c_0, ..., c_{n-2})`.
    pub fn shift(&self, word: &[Symbol]) -> Vec<Symbol> {
        let lam = self.alphabet.from_element(self.lambda).expect("λ in base");
        let mut out = Vec::with_capacity(word.len());
        out.push(self.alphabet.mul(lam, word[word.len() - 1]));
        out.extend_from_slice(&word[..word.len() - 1]);
        out
    }

    /// Rows `x^i g(x)` for `0 <= i < k`.
    pub fn generator_matrix(&self) -> GeneratorMatrix {
        let rows = (0..self.k())
            .map(|i| {
                let mut row = vec![0; self.n];
                row[i..i + self.gen_syms.len()].copy_from_slice(&self.gen_syms);
                row
            })
            .collect();
        GeneratorMatrix::new(self.alphabet.clone(), self.n, rows).expect("rows have length n")
    }

    /// Indexing of the roots of `x^n - λ` in the ambient field, if it
    /// contains the `rn`-th roots of unity.
    pub fn root_indexing(&self) -> Option<RootIndexing> {
        let f = self.field();
        let g = f.group_order() as u64;
        let r = self.r();
        let rn = (r * self.n) as u64;
        if g % rn != 0 {
            return None;
        }
        let gamma_log = g / rn;
        let lam_log = self.lambda.log().expect("λ is nonzero") as u64;
        // λ = γ^(nu) = β^(gamma_log * n * u)
        let u = (lam_log / (gamma_log * self.n as u64)) as usize % r.max(1);
        Some(RootIndexing { gamma_log, r, u, n: self.n })
    }

    /// `zero[t]` is true when `γ^(u + r t)` is a root of g.
    pub fn zero_pattern(&self) -> Option<(RootIndexing, Vec<bool>)> {
        let idx = self.root_indexing()?;
        let f = self.field();
        let pattern = (0..self.n)
            .map(|t| self.generator.eval(idx.root(f, t)).is_zero())
            .collect();
        Some((idx, pattern))
    }

    /// `c_t = Σ_j Tr_{q^{m_j}/q}(a_j η_j^{-t})` where `η_j` runs over one root
    /// of h per GF(q)-conjugacy class (see [`ConstacyclicCode::nonzero_classes`]).
    pub fn trace_codeword(&self, coeffs: &[FieldElement]) -> Result<Vec<Symbol>, CodeError> {
        let classes = self.nonzero_classes()?;
        if coeffs.len() != classes.len() {
            return Err(CodeError::CoefficientCount { expected: classes.len(), found: coeffs.len() });
        }
        let f = self.field();
        let q = self.q() as u64;
        let g = f.group_order() as u64;
        for (idx, (&a, &(_, size))) in coeffs.iter().zip(&classes).enumerate() {
            if f.pow(a, q.pow(size as u32)) != a {
                return Err(CodeError::WrongSubfield { index: idx, degree: size });
            }
        }
        let mut word = vec![0; self.n];
        for (t, c) in word.iter_mut().enumerate() {
            let mut acc = FieldElement::ZERO;
            for (&a, &(eta_log, size)) in coeffs.iter().zip(&classes) {
                if a.is_zero() {
                    continue;
                }
                let e = (g - (eta_log * t as u64) % g) % g;
                let mut x = f.mul(a, f.from_log(e as u32));
                for _ in 0..size {
                    acc = f.add(acc, x);
                    x = f.pow(x, q);
                }
            }
            *c = self.alphabet.from_element(acc)?;
        }
        Ok(word)
    }

    /// `(log_β η, class size)` for one root `η` of h per conjugacy class,
    /// ordered by the smallest root index.
    pub fn nonzero_classes(&self) -> Result<Vec<(u64, usize)>, CodeError> {
        let (idx, zero) = self
            .zero_pattern()
            .ok_or(CodeError::NoSplittingField(self.r() * self.n))?;
        let f = self.field();
        let g = f.group_order() as u64;
        let q = self.q() as u64;
        let rn = (idx.r * self.n) as u64;
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for t in 0..self.n {
            if zero[t] || seen[t] {
                continue;
            }
            let start = idx.exponent(t) as u64;
            let mut e = start;
            let mut size = 0;
            loop {
                seen[((e - idx.u as u64) / idx.r as u64) as usize] = true;
                size += 1;
                e = e * q % rn;
                if e == start {
                    break;
                }
            }
            out.push((start * idx.gamma_log % g, size));
        }
        Ok(out)
    }

    pub fn record(&self) -> CodeRecord {
        CodeRecord::from_code(self)
    }
}

pub(crate) fn to_symbols(p: &Polynomial, alphabet: &Alphabet) -> Vec<Symbol> {
    p.coeffs()
        .iter()
        .map(|&c| alphabet.from_element(c).expect("coefficients lie in the base"))
        .collect()
}

pub(crate) fn from_symbols(word: &[Symbol], alphabet: &Alphabet) -> Polynomial {
    let coeffs = word.iter().map(|&s| alphabet.to_element(s)).collect();
    Polynomial::new(coeffs, alphabet.base()).expect("symbols lie in the base")
}

/// Remainder of `word` divided by the monic `g` (symbol-level).
fn rem_monic(word: &[Symbol], g: &[Symbol], a: &Alphabet) -> Vec<Symbol> {
    let d = g.len() - 1;
    let mut rem = word.to_vec();
    if rem.len() <= d {
        return rem;
    }
    for top in (d..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        let neg = a.neg(c);
        a.axpy(&mut rem[top - d..=top], neg, g);
    }
    rem.truncate(d);
    rem
}

/// Number of nonzero symbols.
pub fn weight(word: &[Symbol]) -> usize {
    word.iter().filter(|&&s| s != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{minimal_poly, registry};

    fn gf3_in_gf81() -> Arc<Alphabet> {
        let f = registry::default_field(3, 4).unwrap();
        Arc::new(Alphabet::new(&Subfield::new(f, 1).unwrap()).unwrap())
    }

    #[test]
    fn trivial_generators() {
        let a = gf3_in_gf81();
        let f = a.base().field().clone();
        let minus_one = f.neg(f.one());
        let full = ConstacyclicCode::from_generator(&Polynomial::one(a.base()), minus_one, 40, a.clone()).unwrap();
        assert_eq!(full.k(), 40);
        let xn = Polynomial::binomial(40, minus_one, a.base()).unwrap();
        let zero = ConstacyclicCode::from_generator(&xn, minus_one, 40, a.clone()).unwrap();
        assert!(zero.is_zero_code());
        assert!(full.dual().is_zero_code());
        assert_eq!(zero.dual().k(), 40);
    }

    #[test]
    fn negacyclic_from_minimal_poly() {
        let a = gf3_in_gf81();
        let f = a.base().field().clone();
        let m = minimal_poly(1, a.base());
        let c = ConstacyclicCode::from_generator(&m, f.neg(f.one()), 40, a.clone()).unwrap();
        assert_eq!(c.k(), 36);
        assert_eq!(c.dual().k(), 4);
        assert_eq!(c.r(), 2);
        let bad = ConstacyclicCode::from_generator(&m, f.one(), 41, a);
        assert_eq!(bad.unwrap_err(), CodeError::NotADivisorOfXnMinusLambda);
    }

    #[test]
    fn encode_contains_and_shift() {
        let a = gf3_in_gf81();
        let f = a.base().field().clone();
        let m = minimal_poly(1, a.base());
        let c = ConstacyclicCode::from_generator(&m, f.neg(f.one()), 40, a).unwrap();
        assert_eq!(c.encode(&vec![0; 36]).unwrap(), vec![0; 40]);
        let msg: Vec<Symbol> = (0..36).map(|i| (i % 3) as Symbol).collect();
        let w = c.encode(&msg).unwrap();
        assert!(c.contains(&w).unwrap());
        assert!(c.contains(&c.shift(&w)).unwrap());
        let mut bad = w.clone();
        bad[0] = c.alphabet().add(bad[0], 1);
        assert!(!c.contains(&bad).unwrap());
        assert!(matches!(c.encode(&[0; 3]), Err(CodeError::LengthMismatch { .. })));
    }

    #[test]
    fn root_indexing_for_negacyclic() {
        let a = gf3_in_gf81();
        let f = a.base().field().clone();
        let c = ConstacyclicCode::from_generator(&minimal_poly(1, a.base()), f.neg(f.one()), 40, a).unwrap();
        let (idx, zeros) = c.zero_pattern().unwrap();
        assert_eq!((idx.gamma_log, idx.r, idx.u), (1, 2, 1));
        let z: Vec<usize> = (0..40).filter(|&t| zeros[t]).map(|t| idx.exponent(t)).collect();
        assert_eq!(z, vec![1, 3, 9, 27]);
    }
}
