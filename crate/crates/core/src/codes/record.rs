//! JSON form of a code.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Alphabet, FiniteField, Polynomial, Subfield};

use super::{CodeError, ConstacyclicCode};

/// Serialized code. Generator coefficients are ascending subfield indices:
/// 0 is zero and `j + 1` is `ω^j` with `ω = β^((p^K-1)/(q-1))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub q: usize,
    pub n: usize,
    pub r: usize,
    pub lambda_log: u32,
    pub field_spec: String,
    pub generator_coeffs: Vec<u32>,
    pub k: usize,
}

impl CodeRecord {
    pub fn from_code(code: &ConstacyclicCode) -> Self {
        CodeRecord {
            q: code.q(),
            n: code.n(),
            r: code.r(),
            lambda_log: code.lambda().log().expect("λ is nonzero"),
            field_spec: code.field().spec_string(),
            generator_coeffs: code.generator().indices(),
            k: code.k(),
        }
    }

    /// Rebuilds the code, checking the stored k and r.
    pub fn to_code(&self) -> Result<ConstacyclicCode, CodeError> {
        let field: FiniteField = self.field_spec.parse()?;
        let field = Arc::new(field);
        let base = Subfield::of_order(field.clone(), self.q as u32)?;
        let alphabet = Arc::new(Alphabet::new(&base)?);
        let g = Polynomial::from_indices(&self.generator_coeffs, &base)?;
        let lambda = field.from_log(self.lambda_log);
        let code = ConstacyclicCode::from_generator(&g, lambda, self.n, alphabet)?;
        if code.k() != self.k {
            return Err(CodeError::LengthMismatch { expected: self.k, found: code.k() });
        }
        if code.r() != self.r {
            return Err(CodeError::BadLambda);
        }
        Ok(code)
    }
}
