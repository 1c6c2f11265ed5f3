//! BCH bound for constacyclic codes.
//!
//! With roots of `x^n - λ` written `γ^(u + r t)`, a run of `δ - 1` zeros at
//! `t = e h, e(h+1), ..., e(h+δ-2)` (mod n) for a unit `e` gives `d >= δ`.

use crate::algebra::gcd_u64;

use super::ConstacyclicCode;

/// Multipliers tried by [`bch_lower_bound`].
pub const DEFAULT_MAX_MULTIPLIERS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BchBound {
    pub delta: usize,
    /// The unit `e` achieving the run.
    pub multiplier: usize,
    /// Start `t = e h` of the run.
    pub start: usize,
    /// Number of consecutive zeros.
    pub run: usize,
}

/// Best BCH bound over all units `e` mod n (up to the default cap).
/// Returns 1 when the code has no zeros or the roots are not available.
pub fn bch_lower_bound(code: &ConstacyclicCode) -> usize {
    bch_bound_detailed(code, DEFAULT_MAX_MULTIPLIERS).map_or(1, |b| b.delta)
}

/// `None` when the ambient field lacks the `rn`-th roots of unity.
pub fn bch_bound_detailed(code: &ConstacyclicCode, max_multipliers: usize) -> Option<BchBound> {
    let (_, zero) = code.zero_pattern()?;
    Some(best_run(&zero, max_multipliers))
}

pub(crate) fn best_run(zero: &[bool], max_multipliers: usize) -> BchBound {
    let n = zero.len();
    let mut best = BchBound { delta: 1, multiplier: 1, start: 0, run: 0 };
    if !zero.iter().any(|&z| z) {
        return best;
    }
    if zero.iter().all(|&z| z) {
        return BchBound { delta: n, multiplier: 1, start: 0, run: n };
    }
    let units = (1..=n.max(1)).filter(|&e| gcd_u64(e as u64, n as u64) == 1);
    for e in units.take(max_multipliers) {
        let (run, start_j) = longest_cyclic_run(n, |j| zero[(e * j) % n]);
        if run > best.run {
            best = BchBound {
                delta: (run + 1).min(n),
                multiplier: e % n.max(1),
                start: (e * start_j) % n,
                run,
            };
        }
    }
    best
}

/// Longest run of consecutive true values in a cyclic sequence that is not
/// entirely true; returns `(length, start)`.
fn longest_cyclic_run(n: usize, bit: impl Fn(usize) -> bool) -> (usize, usize) {
    let Some(anchor) = (0..n).find(|&j| !bit(j)) else {
        return (n, 0);
    };
    let mut best = (0, 0);
    let mut cur = 0;
    for step in 1..=n {
        let j = (anchor + step) % n;
        if bit(j) {
            cur += 1;
            if cur > best.0 {
                best = (cur, (j + n + 1 - cur) % n);
            }
        } else {
            cur = 0;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_wrap_around() {
        let z = [true, false, false, true, true];
        let b = best_run(&z, 16);
        assert_eq!(b.run, 3);
        assert_eq!(b.delta, 4);
    }

    #[test]
    fn no_zeros_gives_one() {
        assert_eq!(best_run(&[false; 7], 16).delta, 1);
    }

    #[test]
    fn multiplier_spreads_zeros() {
        // zeros at t = 0, 2, 4 (mod 7): e = 2 turns them consecutive
        let mut z = [false; 7];
        for t in [0, 2, 4] {
            z[t] = true;
        }
        let b = best_run(&z, 16);
        assert_eq!(b.run, 3);
        assert_eq!(b.multiplier, 2);
    }
}
