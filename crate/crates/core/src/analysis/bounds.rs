//! Sphere-packing checks and self-duality.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::codes::ConstacyclicCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpherePacking {
    /// `Σ_{i <= (d-1)/2} C(n,i)(q-1)^i <= q^(n-k)`.
    pub satisfies: bool,
    /// Equality in the bound above.
    pub is_perfect: bool,
    /// For even d: `Σ_{i <= (d-2)/2} C(n-1,i)(q-1)^i <= q^(n-1-k)`.
    pub even_refinement: Option<bool>,
    /// Parameters `[n, k, d+1]` violate one of the bounds, so no
    /// `[n, k, d+1]` code exists.
    pub distance_optimal: bool,
}

fn ball(n: usize, radius: usize, q: u64) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::one();
    let mut pw = BigUint::one();
    for i in 0..=radius.min(n) {
        total += &binom * &pw;
        binom = binom * BigUint::from(n - i) / BigUint::from(i + 1);
        pw *= BigUint::from(q - 1);
    }
    total
}

fn lemma_main(n: usize, k: usize, d: usize, q: u64) -> (bool, bool) {
    let lhs = ball(n, (d - 1) / 2, q);
    let rhs = BigUint::from(q).pow((n - k) as u32);
    (lhs <= rhs, lhs == rhs)
}

fn lemma_even(n: usize, k: usize, d: usize, q: u64) -> bool {
    if n == 0 || k >= n {
        return d <= 1;
    }
    ball(n - 1, (d - 2) / 2, q) <= BigUint::from(q).pow((n - 1 - k) as u32)
}

fn admissible(n: usize, k: usize, d: usize, q: u64) -> bool {
    if d == 0 || k > n || d > n + 1 - k.min(n) {
        return false;
    }
    let (ok, _) = lemma_main(n, k, d, q);
    ok && (d % 2 == 1 || lemma_even(n, k, d, q))
}

pub fn sphere_packing_check(n: usize, k: usize, d: usize, q: u64) -> SpherePacking {
    let d = d.max(1);
    let (satisfies, is_perfect) = lemma_main(n, k, d, q);
    let even_refinement = (d % 2 == 0).then(|| lemma_even(n, k, d, q));
    SpherePacking {
        satisfies,
        is_perfect,
        even_refinement,
        distance_optimal: !admissible(n, k, d + 1, q),
    }
}

/// Largest d allowed by the Singleton and sphere-packing bounds for an
/// `[n, k]` code with `k >= 1`.
pub fn sphere_packing_max_d(n: usize, k: usize, q: u64) -> usize {
    (1..=n + 1 - k.clamp(1, n))
        .rev()
        .find(|&d| admissible(n, k, d, q))
        .unwrap_or(1)
}

/// The code equals its dual (same monic generator polynomial).
pub fn self_dual_check(code: &ConstacyclicCode) -> bool {
    2 * code.k() == code.n() && code.dual().generator() == code.generator()
}
