use std::collections::BTreeSet;
use std::sync::Arc;

use num_integer::gcd;
use proptest::prelude::*;

use constacode::algebra::{minimal_poly, registry, Alphabet, Polynomial, Subfield};
use constacode::analysis::{enumerate_weights, macwilliams};
use constacode::codes::{
    bch_lower_bound, code_equal, residue_code, residue_rows, restrict_cyclic, ConstacyclicCode, GeneratorMatrix,
};
use constacode::cosets::{multiplicative_order, normalize_ell, CosetTable, EllClass};
use constacode::families::{self, bounded_compositions, congruent_tuple_count, Ambient};

const CAP: u64 = 1 << 16;

/// Small ambients `(q, m)` with `q^m <= 125`.
const AMBIENTS: &[(u64, u32)] = &[(3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2), (5, 3), (7, 2), (8, 2), (9, 2), (11, 2)];

fn divisors(q: u64) -> Vec<u64> {
    (2..q).filter(|r| (q - 1) % r == 0).collect()
}

/// A family code: `(q, m, r, ell, which)` where `which` is 0 for 𝒞′, 1 for 𝒞
/// and 2 for Dilix.
fn family_code() -> impl Strategy<Value = (u64, u32, u64, u64, u8)> {
    prop::sample::select(AMBIENTS)
        .prop_flat_map(|(q, m)| (Just(q), Just(m), prop::sample::select(divisors(q)), 0u8..3))
        .prop_flat_map(|(q, m, r, which)| {
            let range = match which {
                0 => 1..=m as u64,
                1 => 0..=(q - 1) * m as u64 - 2,
                _ => 1..=m as u64 - 1,
            };
            (Just(q), Just(m), Just(r), range, Just(which))
        })
}

fn build(q: u64, m: u32, r: u64, ell: u64, which: u8) -> ConstacyclicCode {
    let amb = Ambient::new(q, m).unwrap();
    match which {
        0 => families::cprime(&amb, r, ell),
        1 => families::cfamily(&amb, r, ell),
        _ => families::dilix(&amb, ell),
    }
    .unwrap()
}

fn alphabet(q: u64) -> Arc<Alphabet> {
    let (p, k) = constacode::algebra::prime_power(q).unwrap();
    let field = registry::default_field(p, k).unwrap();
    Arc::new(Alphabet::new(&Subfield::full(field)).unwrap())
}

/// A random matrix over GF(q), reduced to a basis, small enough that both
/// the code and its dual can be enumerated.
fn random_matrix() -> impl Strategy<Value = GeneratorMatrix> {
    (prop::sample::select(vec![2u64, 3, 4, 5, 7]), 1usize..=6)
        .prop_flat_map(|(q, n)| {
            let rows = prop::collection::vec(prop::collection::vec(0..q as u8, n), 1..=n.min(4));
            (Just(q), Just(n), rows)
        })
        .prop_map(|(q, n, rows)| GeneratorMatrix::new(alphabet(q), n, rows).unwrap().basis())
}

fn brute_congruent(q: u64, t: u32, r: u64) -> u128 {
    let mut count = 0;
    let mut digits = vec![1u64; t as usize];
    loop {
        if digits.iter().sum::<u64>() % r == 1 % r {
            count += 1;
        }
        let Some(i) = digits.iter().position(|&d| d < q - 1) else {
            return count;
        };
        digits[i] += 1;
        digits[..i].iter_mut().for_each(|d| *d = 1);
    }
}

fn brute_compositions(t: u64, m: u64, s: u64) -> u128 {
    if m == 0 {
        return u128::from(t == 0);
    }
    (0..=s.min(t)).map(|x| brute_compositions(t - x, m - 1, s)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn macwilliams_matches_enumerated_dual(gm in random_matrix()) {
        let code = enumerate_weights(&gm, CAP).unwrap();
        let dual = enumerate_weights(&gm.dual(), CAP).unwrap();
        prop_assert_eq!(macwilliams(&code).unwrap(), dual.clone());
        prop_assert_eq!(macwilliams(&dual).unwrap(), code);
    }

    #[test]
    fn generator_times_check_is_binomial((q, m, r, ell, which) in family_code()) {
        let c = build(q, m, r, ell, which);
        let xn = Polynomial::binomial(c.n(), c.lambda(), c.base()).unwrap();
        prop_assert_eq!(c.generator().mul(c.check()), xn);
        prop_assert_eq!(c.k() + c.generator().degree().unwrap(), c.n());
    }

    #[test]
    fn dual_is_orthogonal((q, m, r, ell, which) in family_code()) {
        let c = build(q, m, r, ell, which);
        let d = c.dual();
        prop_assert_eq!(c.k() + d.k(), c.n());
        prop_assert!(c.generator_matrix().is_orthogonal_to(&d.generator_matrix()).unwrap());
    }

    #[test]
    fn encoded_words_shift_inside((q, m, r, ell, which) in family_code(), seed in any::<u64>()) {
        let c = build(q, m, r, ell, which);
        prop_assume!(c.k() > 0);
        let msg: Vec<u8> = (0..c.k()).map(|i| ((seed >> (i % 60)) ^ i as u64) as u8 % q as u8).collect();
        let mut word = c.encode(&msg).unwrap();
        for _ in 0..3 {
            prop_assert!(c.contains(&word).unwrap());
            word = c.shift(&word);
        }
    }

    #[test]
    fn bch_bound_below_distance((q, m, r, ell, which) in family_code()) {
        let c = build(q, m, r, ell, which);
        prop_assume!(c.k() > 0 && (q as f64).powi(c.k() as i32) <= CAP as f64);
        let d = enumerate_weights(&c.generator_matrix(), CAP).unwrap().min_distance().unwrap();
        prop_assert!(bch_lower_bound(&c) <= d);
    }

    #[test]
    fn congruent_tuples(q in prop::sample::select(vec![3u64, 4, 5, 7, 9, 13]), t in 1u32..=4, pick in any::<prop::sample::Index>()) {
        let rs = divisors(q);
        let r = rs[pick.index(rs.len())];
        prop_assert_eq!(congruent_tuple_count(q, t, r), brute_congruent(q, t, r));
    }

    #[test]
    fn compositions(t in 0u64..20, m in 0u64..6, s in 0u64..6) {
        prop_assert_eq!(bounded_compositions(t, m, s), brute_compositions(t, m, s));
    }

    #[test]
    fn cosets_partition(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]), modulus in 1u64..3000) {
        prop_assume!(gcd(q, modulus) == 1);
        let t = CosetTable::new(q, modulus).unwrap();
        let mut seen = BTreeSet::new();
        for coset in t.cosets() {
            let i = coset[0];
            let sub = modulus / gcd(i, modulus);
            prop_assert_eq!(coset.len() as u64, multiplicative_order(q, sub).unwrap());
            for &j in coset {
                prop_assert!(seen.insert(j));
                prop_assert!(coset.contains(&(j * q % modulus)));
            }
        }
        prop_assert_eq!(seen.len() as u64, modulus);
    }

    #[test]
    fn field_logs(pk in prop::sample::select(vec![(2u32, 4u32), (2, 8), (3, 4), (5, 3), (7, 2), (13, 2)]), a in any::<u32>(), b in any::<u32>()) {
        let f = registry::default_field(pk.0, pk.1).unwrap();
        let n = f.group_order();
        let (x, y) = (f.from_log(a % n), f.from_log(b % n));
        prop_assert_eq!(x.log(), Some(a % n));
        prop_assert_eq!(f.mul(x, y), f.from_log((a % n + b % n) % n));
        prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        prop_assert_eq!(f.pow(x, n as u64), f.one());
        prop_assert_eq!(f.add(f.sub(x, y), y), x);
    }

    #[test]
    fn residue_equals_restriction(amb_pick in any::<prop::sample::Index>(), picks in prop::collection::vec(any::<bool>(), 64)) {
        let (q, m) = [(3u64, 2u32), (3, 3), (4, 2), (5, 2), (7, 2)][amb_pick.index(5)];
        let amb = Ambient::new(q, m).unwrap();
        let big = amb.big_n();
        let table = CosetTable::new(q, big).unwrap();
        let mut g = Polynomial::one(amb.base());
        for (coset, &take) in table.cosets().iter().zip(picks.iter().cycle()) {
            if take {
                g = g.mul(&minimal_poly(coset[0], amb.base()));
            }
        }
        prop_assume!(g.degree() != Some(big as usize));
        let one = amb.field().one();
        let cyclic = ConstacyclicCode::from_generator(&g, one, big as usize, amb.alphabet().clone()).unwrap();
        for r in divisors(q) {
            let lambda = amb.lambda(r);
            let n = (big / r) as usize;
            let res = residue_code(&cyclic, lambda).unwrap();
            let under = restrict_cyclic(&g, n, lambda).unwrap().underline;
            let direct = ConstacyclicCode::from_generator(&under, lambda, n, amb.alphabet().clone()).unwrap();
            prop_assert!(code_equal(&res.generator_matrix(), &direct.generator_matrix()).unwrap());
            let rows = GeneratorMatrix::new(amb.alphabet().clone(), n, residue_rows(&cyclic, lambda, n).unwrap()).unwrap();
            prop_assert!(code_equal(&rows, &direct.generator_matrix()).unwrap());
        }
    }
}

#[test]
fn ell_normalization_preserves_code() {
    for &(q, m) in AMBIENTS {
        let amb = Ambient::new(q, m).unwrap();
        for r in divisors(q) {
            for ell in 0..(q - 1) * m as u64 - 1 {
                let c = families::cfamily(&amb, r, ell).unwrap();
                match normalize_ell(r, ell) {
                    EllClass::Zero => assert_eq!(c.k(), 0, "({q},{m},{r},{ell})"),
                    EllClass::Canonical(l) => {
                        assert_eq!(l % r, r - 1);
                        let canon = families::cfamily(&amb, r, l).unwrap();
                        assert_eq!(c.generator(), canon.generator(), "({q},{m},{r},{ell}) vs {l}");
                    }
                }
            }
        }
    }
}
