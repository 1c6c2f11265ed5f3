//! Closed-form counts used by the dimension formulas.

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Ways to place `t` identical objects into `m` cells with at most `s`
/// per cell: `Σ_j (-1)^j C(m,j) C(t - j(s+1) + m - 1, t - j(s+1))`.
pub fn bounded_compositions(t: u64, m: u64, s: u64) -> u128 {
    if m == 0 {
        return u128::from(t == 0);
    }
    let mut total: i128 = 0;
    for j in 0..=m {
        let rest = t as i64 - (j * (s + 1)) as i64;
        if rest < 0 {
            break;
        }
        let term = (binomial(m as i64, j as i64) * binomial(rest + m as i64 - 1, rest)) as i128;
        total += if j % 2 == 0 { term } else { -term };
    }
    total as u128
}

/// Number of `(x_1,…,x_t)` in `{1..q-1}^t` with `Σ x_i ≡ 1 (mod r)`:
/// `(q-1)^t / r`.
pub fn congruent_tuple_count(q: u64, t: u32, r: u64) -> u128 {
    ((q - 1) as u128).pow(t) / r as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, -1), 0);
    }

    #[test]
    fn compositions_small() {
        // t = 3 into 2 cells, at most 2 each: (1,2), (2,1)
        assert_eq!(bounded_compositions(3, 2, 2), 2);
        assert_eq!(bounded_compositions(0, 4, 1), 1);
        assert_eq!(bounded_compositions(5, 2, 2), 0);
    }
}
