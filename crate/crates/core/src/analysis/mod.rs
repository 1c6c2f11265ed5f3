//! Weight distributions, minimum distance, and bound checks.

mod bounds;
mod distance;
mod enumerate;
mod macwilliams;
mod weights;

use serde::Serialize;
use thiserror::Error;

use crate::codes::{CodeError, ConstacyclicCode, GeneratorMatrix};
use crate::families::{self, Ambient, FamilyError};

pub use bounds::{self_dual_check, sphere_packing_check, sphere_packing_max_d, SpherePacking};
pub use distance::{
    exact_distance_by_enumeration, min_distance, sample_upper, Certificate, DistanceKind, DistanceOptions,
    DistanceResult,
};
pub use enumerate::{cap_from_env, enumerate_weights, DEFAULT_CAP};
pub use macwilliams::macwilliams;
pub use weights::WeightDistribution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("code has {q}^{k} words and its dual {q}^{dual_k}; both exceed the cap of {cap}")]
    TooLargeToEnumerate { q: u64, k: usize, dual_k: usize, cap: u64 },
    #[error("invalid weight distribution: {0}")]
    InvalidDistribution(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Which side was enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Code,
    Dual,
}

/// Exact weight distribution of `code`, enumerating whichever of the code
/// and its dual is smaller.
pub fn weight_distribution(code: &ConstacyclicCode, cap: u64) -> Result<(WeightDistribution, Side), AnalysisError> {
    weight_distribution_matrix(&code.generator_matrix(), cap)
}

pub fn weight_distribution_matrix(gm: &GeneratorMatrix, cap: u64) -> Result<(WeightDistribution, Side), AnalysisError> {
    let k = gm.rank();
    let n = gm.n();
    let q = gm.q() as u64;
    let size = |k| enumerate::code_size(q, k);
    let direct = size(k).is_some_and(|s| s <= cap);
    let dual_ok = size(n - k).is_some_and(|s| s <= cap);
    match (direct, dual_ok) {
        (false, false) => Err(AnalysisError::TooLargeToEnumerate { q, k, dual_k: n - k, cap }),
        (true, false) => Ok((enumerate_weights(gm, cap)?, Side::Code)),
        (false, true) => Ok((macwilliams(&enumerate_weights(&gm.dual(), cap)?)?, Side::Dual)),
        (true, true) if k <= n - k => Ok((enumerate_weights(gm, cap)?, Side::Code)),
        (true, true) => Ok((macwilliams(&enumerate_weights(&gm.dual(), cap)?)?, Side::Dual)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub q: u64,
    pub m: u32,
    pub r: u64,
    pub enumerated: WeightDistribution,
    pub closed_form: WeightDistribution,
    pub equal: bool,
}

/// Compares the enumerated distribution of `𝒞′(q,m,(q-1)/2,1)^⊥` with the
/// closed-form tables.
pub fn table1_table2_check(q: u64, m: u32, cap: u64) -> Result<TableComparison, AnalysisError> {
    let prime = crate::algebra::prime_power(q).is_some_and(|(_, e)| e == 1);
    if !prime || q % 2 == 0 || q < 5 || m < 2 {
        return Err(AnalysisError::HypothesisViolated(format!(
            "needs an odd prime q with (q-1)/2 > 1 and m >= 2, got q = {q}, m = {m}"
        )));
    }
    let r = (q - 1) / 2;
    let amb = Ambient::new(q, m)?;
    let code = families::cprime(&amb, r, 1)?;
    let dual = code.dual().generator_matrix();
    let (enumerated, _) = weight_distribution_matrix(&dual, cap)?;
    let closed_form = families::cprime_dual_table(q, m)?;
    let equal = enumerated == closed_form;
    Ok(TableComparison { q, m, r, enumerated, closed_form, equal })
}
