use constacode::algebra::{minimal_poly, Polynomial};
use constacode::analysis::{enumerate_weights, macwilliams, min_distance, weight_distribution_matrix, DistanceOptions};
use constacode::codes::{code_equal, residue_code, restrict_cyclic, ConstacyclicCode, GeneratorMatrix};
use constacode::families::{self, Ambient};

const CAP: u64 = 1 << 22;

/// Distance by enumerating whichever side is smaller.
fn distance(gm: &GeneratorMatrix) -> Option<usize> {
    weight_distribution_matrix(gm, CAP).unwrap().0.min_distance()
}

/// Certified distance of a code too large to enumerate.
fn certified_distance(code: &ConstacyclicCode) -> Option<usize> {
    let opts = DistanceOptions { cap: CAP, samples: 0, ..DistanceOptions::default() };
    min_distance(code, &opts).exact().map(|d| d as usize)
}

/// `{i : g has a root x with x^n = λ^i}`, found by evaluating g at every
/// power of β. With λ = β^(N/r), `β^t` is such a root iff `t ≡ i (mod r)`.
fn ind_by_roots(g: &Polynomial, amb: &Ambient, r: u64) -> Vec<usize> {
    let f = amb.field();
    let mut ind: Vec<usize> = (0..amb.big_n())
        .filter(|&t| g.eval(f.beta_pow(t as i64)).is_zero())
        .map(|t| (t % r) as usize)
        .collect();
    ind.sort_unstable();
    ind.dedup();
    ind
}

#[test]
fn cyclic_length_80_restricts_to_negacyclic_40() {
    let amb = Ambient::new(3, 4).unwrap();
    let base = amb.base().clone();
    let one = amb.field().one();
    let m_beta = minimal_poly(1, &base);
    let x_minus_1 = Polynomial::binomial(1, one, &base).unwrap();
    let x40_minus_1 = Polynomial::binomial(40, one, &base).unwrap();
    let lambda = amb.lambda(2);
    let cases = [
        (m_beta.clone(), (76, 2), vec![1]),
        (x_minus_1.mul(&m_beta), (75, 3), vec![0, 1]),
        (x40_minus_1.mul(&m_beta), (36, 6), vec![0, 1]),
    ];
    for (g, (k, d), ind) in cases {
        let cyclic = ConstacyclicCode::from_generator(&g, one, 80, amb.alphabet().clone()).unwrap();
        assert_eq!((cyclic.k(), certified_distance(&cyclic)), (k, Some(d)));

        let res = restrict_cyclic(&g, 40, lambda).unwrap();
        assert_eq!(res.ind, ind);
        assert_eq!(res.ind, ind_by_roots(&g, &amb, 2));

        let under = ConstacyclicCode::from_generator(&res.underline, lambda, 40, amb.alphabet().clone()).unwrap();
        assert_eq!((under.k(), distance(&under.generator_matrix())), (36, Some(3)));
        // the restricted generator is M_β in every case
        assert_eq!(res.underline, m_beta);

        let residue = residue_code(&cyclic, lambda).unwrap();
        assert!(code_equal(&residue.generator_matrix(), &under.generator_matrix()).unwrap());

        let ind_len = res.ind.len();
        assert!(d <= ind_len * 3);
        if ind_len < 2 {
            assert!((2..=ind_len + 1).contains(&d));
        }
    }
}

#[test]
fn gc_equals_c_small() {
    for (q, m) in [(3, 2), (3, 3), (4, 2), (5, 2), (7, 2)] {
        let amb = Ambient::new(q, m).unwrap();
        for r in (2..q).filter(|r| (q - 1) % r == 0) {
            for ell in 0..=(q - 1) * m as u64 - 2 {
                let gc = families::gc_code(&amb, r, ell).unwrap();
                let c = families::cfamily(&amb, r, ell).unwrap();
                assert!(code_equal(&gc, &c.generator_matrix()).unwrap(), "({q},{m},{r},{ell})");
            }
        }
    }
}

#[test]
fn ngrm_at_3_4_2() {
    let amb = Ambient::new(3, 4).unwrap();
    let expected = [(1, 40), (11, 13), (30, 4), (40, 1)];
    for (h, (k, d)) in expected.into_iter().enumerate() {
        let gm = families::ngrm(&amb, 2, h as u64, 0).unwrap();
        assert_eq!(gm.n(), 40);
        assert_eq!(gm.rank(), k, "h = {h}");
        assert_eq!(families::ngrm_dimension(3, 4, 2, 2 * h as u64), k as u64);
        assert_eq!(distance(&gm), Some(d), "h = {h}");
    }
}

#[test]
fn prm_distances_match_enumeration() {
    // (3,3): N/(q-1) = 13 points
    let amb = Ambient::new(3, 3).unwrap();
    for h in 1..=4 {
        let gm = families::hat_code(&amb, h).unwrap();
        let (n, k, d) = families::prm_params(3, 3, h).unwrap();
        assert_eq!(gm.n() as u64, n);
        assert_eq!(gm.rank() as u128, k, "h = {h}");
        assert_eq!(distance(&gm).map(|d| d as u64), Some(d), "h = {h}");
    }
    let ds: Vec<u64> = (1..=6).map(|h| families::prm_params(3, 4, h).unwrap().2).collect();
    assert_eq!(ds, [27, 18, 9, 6, 3, 2]);
}

#[test]
fn prm2_closed_form_matches_enumeration() {
    for m in 2..=4 {
        let amb = Ambient::new(4, m).unwrap();
        let code = families::cfamily(&amb, 3, 2).unwrap();
        let enumerated = enumerate_weights(&code.generator_matrix(), CAP).unwrap();
        assert_eq!(families::prm2_weight_distribution(4, m).unwrap(), enumerated, "m = {m}");
    }
}

#[test]
fn dilix_dimension_matches_rank() {
    for (q, m) in [(3, 3), (3, 4), (4, 3), (5, 3)] {
        let amb = Ambient::new(q, m).unwrap();
        for h in 1..m as u64 {
            let code = families::dilix(&amb, h).unwrap();
            assert_eq!(code.k() as u128, families::dilix_dimension(q, m, h), "({q},{m},{h})");
        }
    }
    let ks: Vec<u128> = (1..=3).map(|h| families::dilix_dimension(3, 4, h)).collect();
    assert_eq!(ks, [72, 48, 16]);
}

#[test]
fn dual_tables_from_both_sides() {
    // the enumerated dual of C'(q,m,(q-1)/2,1) and the closed-form dual table agree
    for (q, m) in [(5, 2), (5, 3), (7, 2)] {
        let amb = Ambient::new(q, m).unwrap();
        let code = families::cprime(&amb, (q - 1) / 2, 1).unwrap();
        let dual = enumerate_weights(&code.dual().generator_matrix(), CAP).unwrap();
        assert_eq!(families::cprime_dual_table(q, m).unwrap(), dual);
        if q.checked_pow(code.k() as u32).is_some_and(|v| v <= CAP) {
            let direct = enumerate_weights(&code.generator_matrix(), CAP).unwrap();
            assert_eq!(macwilliams(&dual).unwrap(), direct);
        }
    }
}
