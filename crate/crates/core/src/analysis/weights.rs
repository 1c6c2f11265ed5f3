use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::AnalysisError;

/// `A_0, …, A_n`: number of codewords of each weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    n: usize,
    q: u64,
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(n: usize, q: u64, counts: Vec<BigUint>) -> Result<Self, AnalysisError> {
        if counts.len() != n + 1 {
            return Err(AnalysisError::InvalidDistribution(format!(
                "{} counts for length {n}",
                counts.len()
            )));
        }
        Ok(WeightDistribution { n, q, counts })
    }

    /// Builds from `(weight, count)` pairs; unspecified weights are zero.
    pub fn from_sparse<C: Into<BigUint> + Clone>(n: usize, q: u64, pairs: &[(usize, C)]) -> Result<Self, AnalysisError> {
        let mut counts = vec![BigUint::zero(); n + 1];
        for (w, c) in pairs {
            let slot = counts
                .get_mut(*w)
                .ok_or_else(|| AnalysisError::InvalidDistribution(format!("weight {w} exceeds length {n}")))?;
            *slot += c.clone().into();
        }
        Ok(WeightDistribution { n, q, counts })
    }

    /// Distribution of `{0}`.
    pub fn zero_code(n: usize, q: u64) -> Self {
        let mut counts = vec![BigUint::zero(); n + 1];
        counts[0] = BigUint::one();
        WeightDistribution { n, q, counts }
    }

    /// Distribution of GF(q)^n: `A_w = C(n,w)(q-1)^w`.
    pub fn full_space(n: usize, q: u64) -> Self {
        let mut counts = Vec::with_capacity(n + 1);
        let mut binom = BigUint::one();
        let mut pw = BigUint::one();
        for w in 0..=n {
            counts.push(&binom * &pw);
            binom = binom * BigUint::from(n - w) / BigUint::from(w + 1);
            pw *= BigUint::from(q - 1);
        }
        WeightDistribution { n, q, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// `Σ A_w`.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `log_q(Σ A_w)` when the total is a power of q.
    pub fn dimension(&self) -> Option<u32> {
        let total = self.total();
        let q = BigUint::from(self.q);
        let mut acc = BigUint::one();
        for k in 0..=self.n as u32 {
            if acc == total {
                return Some(k);
            }
            if acc > total {
                return None;
            }
            acc *= &q;
        }
        None
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        (1..=self.n).find(|&w| !self.counts[w].is_zero())
    }

    /// `(w, A_w)` for every `A_w != 0`.
    pub fn nonzero(&self) -> Vec<(usize, BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }

    /// Number of distinct nonzero weights.
    pub fn weight_count(&self) -> usize {
        self.nonzero().iter().filter(|(w, _)| *w > 0).count()
    }

    pub fn to_sparse_map(&self) -> BTreeMap<usize, String> {
        self.nonzero().into_iter().map(|(w, c)| (w, c.to_string())).collect()
    }
}

/// Prints the enumerator as `1+8z^6+144z^8`.
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.nonzero() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match w {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}z")?,
                _ => write!(f, "{c}z^{w}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let nz = self.nonzero();
        let mut map = s.serialize_map(Some(nz.len()))?;
        for (w, c) in nz {
            map.serialize_entry(&w.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_space_totals() {
        let d = WeightDistribution::full_space(4, 3);
        assert_eq!(d.total(), BigUint::from(81u32));
        assert_eq!(d.get(4), BigUint::from(16u32));
        assert_eq!(d.dimension(), Some(4));
        assert_eq!(d.min_distance(), Some(1));
    }

    #[test]
    fn display_and_json() {
        let d = WeightDistribution::from_sparse(5, 4, &[(0, 1u32), (3, 30), (4, 15), (5, 18)]).unwrap();
        assert_eq!(d.to_string(), "1+30z^3+15z^4+18z^5");
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"0":"1","3":"30","4":"15","5":"18"}"#
        );
    }

    #[test]
    fn zero_code_has_no_distance() {
        let d = WeightDistribution::zero_code(7, 2);
        assert_eq!(d.min_distance(), None);
        assert_eq!(d.dimension(), Some(0));
    }
}
