//! Exhaustive weight enumeration.
//!
//! A code over GF(q), q = p^e, with k basis rows is a GF(p)-space spanned by
//! the `k·e` rows `ω^j g_i`. Codewords are visited in a p-ary Gray order:
//! step t adds row `v_p(t)` (the position of the lowest nonzero base-p
//! digit of t), so each step costs one row addition.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::algebra::{Alphabet, Symbol};
use crate::codes::GeneratorMatrix;

use super::{AnalysisError, WeightDistribution};

/// Default enumeration limit (number of codewords).
pub const DEFAULT_CAP: u64 = 1 << 26;

/// `CONSTACODE_CAP` if set and valid, else [`DEFAULT_CAP`].
pub fn cap_from_env() -> u64 {
    std::env::var("CONSTACODE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// `q^k` if it fits in a u64.
pub(crate) fn code_size(q: u64, k: usize) -> Option<u64> {
    u32::try_from(k).ok().and_then(|k| q.checked_pow(k))
}

/// Weight distribution of the row space of `gm` by visiting every codeword.
pub fn enumerate_weights(gm: &GeneratorMatrix, cap: u64) -> Result<WeightDistribution, AnalysisError> {
    let basis = gm.basis();
    let k = basis.rows().len();
    let n = gm.n();
    let q = gm.q() as u64;
    match code_size(q, k) {
        Some(s) if s <= cap => {}
        _ => {
            return Err(AnalysisError::TooLargeToEnumerate {
                q,
                k,
                dual_k: n - k,
                cap,
            })
        }
    }
    let a = gm.alphabet();
    let rows = prime_rows(a, basis.rows());
    let counts = if a.characteristic() == 2 {
        binary_kernel(a.degree() as usize, n, &rows)
    } else {
        odd_kernel(a.characteristic() as u8, a.degree() as usize, n, &rows)
    };
    let counts = counts.into_iter().map(BigUint::from).collect();
    WeightDistribution::new(n, q, counts)
}

/// GF(p)-spanning rows as digit vectors: entry `s·e + d` is digit d of
/// symbol s.
fn prime_rows(a: &Alphabet, rows: &[Vec<Symbol>]) -> Vec<Vec<u8>> {
    let e = a.degree() as usize;
    let mut out = Vec::with_capacity(rows.len() * e);
    for row in rows {
        for j in 0..e {
            let w = a.omega_pow(j as i64);
            let mut v = Vec::with_capacity(row.len() * e);
            for &s in row {
                v.extend_from_slice(a.digits(a.mul(w, s)));
            }
            out.push(v);
        }
    }
    out
}

/// Number of leading rows fixed per parallel chunk.
fn split(p: usize, rows: usize) -> usize {
    let mut b = 0;
    let mut chunks = 1;
    while b < rows && rows - b > 8 && chunks < 256 {
        b += 1;
        chunks *= p;
    }
    b
}

fn merge(parts: Vec<Vec<u64>>, n: usize) -> Vec<u64> {
    parts.into_iter().fold(vec![0; n + 1], |mut acc, part| {
        for (a, b) in acc.iter_mut().zip(part) {
            *a += b;
        }
        acc
    })
}

/// Characteristic 2: each digit is a bit plane; a symbol is nonzero when
/// any of its planes has a 1.
fn binary_kernel(e: usize, n: usize, rows: &[Vec<u8>]) -> Vec<u64> {
    let words = n.div_ceil(64);
    let packed: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0u64; e * words];
            for s in 0..n {
                for d in 0..e {
                    if r[s * e + d] != 0 {
                        v[d * words + s / 64] |= 1 << (s % 64);
                    }
                }
            }
            v
        })
        .collect();
    let kk = packed.len();
    let b = split(2, kk);
    let (high, low) = (&packed[kk - b..], &packed[..kk - b]);
    let parts: Vec<Vec<u64>> = (0..1u64 << b)
        .into_par_iter()
        .map(|chunk| {
            let mut cur = vec![0u64; e * words];
            for (i, row) in high.iter().enumerate() {
                if chunk >> i & 1 == 1 {
                    xor_into(&mut cur, row);
                }
            }
            let mut counts = vec![0u64; n + 1];
            counts[binary_weight(&cur, e, words)] += 1;
            for t in 1..1u64 << low.len() {
                xor_into(&mut cur, &low[t.trailing_zeros() as usize]);
                counts[binary_weight(&cur, e, words)] += 1;
            }
            counts
        })
        .collect();
    merge(parts, n)
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

#[inline]
fn binary_weight(cur: &[u64], e: usize, words: usize) -> usize {
    (0..words)
        .map(|w| {
            let mut any = 0;
            for d in 0..e {
                any |= cur[d * words + w];
            }
            any.count_ones() as usize
        })
        .sum()
}

/// Odd characteristic: digits mod p, with a per-symbol count of nonzero
/// digits so the weight is maintained incrementally.
fn odd_kernel(p: u8, e: usize, n: usize, rows: &[Vec<u8>]) -> Vec<u64> {
    let sparse: Vec<Vec<(u32, u8)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| (i as u32, v))
                .collect()
        })
        .collect();
    let kk = sparse.len();
    let b = split(p as usize, kk);
    let (low, high) = sparse.split_at(kk - b);
    let chunks = (p as u64).pow(b as u32);
    let total_low = (p as u64).pow(low.len() as u32);
    let parts: Vec<Vec<u64>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut state = OddState::new(p, e, n);
            let mut c = chunk;
            for row in high {
                let times = (c % p as u64) as u8;
                c /= p as u64;
                for _ in 0..times {
                    state.add(row);
                }
            }
            let mut counts = vec![0u64; n + 1];
            counts[state.weight] += 1;
            let mut digits = vec![0u8; low.len()];
            for _ in 1..total_low {
                let mut j = 0;
                while digits[j] == p - 1 {
                    digits[j] = 0;
                    j += 1;
                }
                digits[j] += 1;
                state.add(&low[j]);
                counts[state.weight] += 1;
            }
            counts
        })
        .collect();
    merge(parts, n)
}

struct OddState {
    p: u8,
    e: usize,
    digits: Vec<u8>,
    nonzero_digits: Vec<u8>,
    weight: usize,
}

impl OddState {
    fn new(p: u8, e: usize, n: usize) -> Self {
        OddState { p, e, digits: vec![0; n * e], nonzero_digits: vec![0; n], weight: 0 }
    }

    #[inline]
    fn add(&mut self, row: &[(u32, u8)]) {
        for &(i, v) in row {
            let i = i as usize;
            let old = self.digits[i];
            // u16 so that primes above 127 cannot overflow
            let mut sum = old as u16 + v as u16;
            if sum >= self.p as u16 {
                sum -= self.p as u16;
            }
            let new = sum as u8;
            self.digits[i] = new;
            if (old == 0) != (new == 0) {
                let s = i / self.e;
                if old == 0 {
                    self.nonzero_digits[s] += 1;
                    if self.nonzero_digits[s] == 1 {
                        self.weight += 1;
                    }
                } else {
                    self.nonzero_digits[s] -= 1;
                    if self.nonzero_digits[s] == 0 {
                        self.weight -= 1;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn gray_order_visits_every_message() {
        // the counter-driven additions reach all p^K coefficient vectors
        let (p, kk) = (3u8, 4usize);
        let mut coeff = vec![0u8; kk];
        let mut seen = std::collections::HashSet::new();
        seen.insert(coeff.clone());
        let mut digits = vec![0u8; kk];
        for _ in 1..(p as usize).pow(kk as u32) {
            let mut j = 0;
            while digits[j] == p - 1 {
                digits[j] = 0;
                j += 1;
            }
            digits[j] += 1;
            coeff[j] = (coeff[j] + 1) % p;
            seen.insert(coeff.clone());
        }
        assert_eq!(seen.len(), 81);
    }

    #[test]
    fn large_prime_digits_do_not_overflow() {
        use std::sync::Arc;

        use crate::algebra::{registry, Alphabet, Subfield};
        use crate::codes::GeneratorMatrix;

        let field = registry::default_field(131, 1).unwrap();
        let a = Arc::new(Alphabet::new(&Subfield::full(field)).unwrap());
        let gm = GeneratorMatrix::new(a, 3, vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(super::enumerate_weights(&gm, 1 << 10).unwrap().to_string(), "1+130z^3");
    }
}
