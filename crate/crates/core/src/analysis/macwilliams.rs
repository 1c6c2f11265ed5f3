//! `B_j = q^{-k} Σ_i A_i K_j(i)` with the Krawtchouk polynomials
//! `K_j(x) = Σ_s (-1)^s (q-1)^(j-s) C(x,s) C(n-x,j-s)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::{AnalysisError, WeightDistribution};

/// The weight distribution of the dual code.
pub fn macwilliams(dist: &WeightDistribution) -> Result<WeightDistribution, AnalysisError> {
    let (n, q) = (dist.n(), dist.q());
    if dist.get(0) != BigUint::one() {
        return Err(AnalysisError::InvalidDistribution("A_0 != 1".into()));
    }
    let size = BigInt::from(dist.total());
    if dist.dimension().is_none() {
        return Err(AnalysisError::InvalidDistribution(format!(
            "total {size} is not a power of {q}"
        )));
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a) in dist.nonzero() {
        let a = BigInt::from(a);
        for (j, kj) in krawtchouk_column(n, q, i).into_iter().enumerate() {
            acc[j] += &a * kj;
        }
    }
    let mut counts = Vec::with_capacity(n + 1);
    for (j, v) in acc.into_iter().enumerate() {
        let (quot, rem) = (&v / &size, &v % &size);
        if !rem.is_zero() || quot.sign() == Sign::Minus {
            return Err(AnalysisError::InvalidDistribution(format!(
                "dual count at weight {j} is not a nonnegative integer"
            )));
        }
        counts.push(quot.to_biguint().expect("nonnegative"));
    }
    WeightDistribution::new(n, q, counts)
}

/// `K_0(x), …, K_n(x)` via
/// `(j+1) K_{j+1} = ((n-j)(q-1) + j - q x) K_j - (q-1)(n-j+1) K_{j-1}`.
fn krawtchouk_column(n: usize, q: u64, x: usize) -> Vec<BigInt> {
    let q = BigInt::from(q);
    let qm1 = &q - 1;
    let x = BigInt::from(x);
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    if n == 0 {
        return out;
    }
    out.push(&qm1 * BigInt::from(n) - &q * &x);
    for j in 1..n {
        let jj = BigInt::from(j);
        let lin = &qm1 * BigInt::from(n - j) + &jj - &q * &x;
        let next = (lin * &out[j] - &qm1 * BigInt::from(n - j + 1) * &out[j - 1]) / BigInt::from(j + 1);
        out.push(next);
    }
    out
}
