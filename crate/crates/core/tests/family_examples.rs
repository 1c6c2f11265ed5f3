use constacode::analysis::{
    min_distance, self_dual_check, sphere_packing_check, weight_distribution, DistanceKind, DistanceOptions,
    DEFAULT_CAP,
};
use constacode::families::{self, Ambient};

fn exact_d(code: &constacode::codes::ConstacyclicCode) -> Option<u64> {
    let opts = DistanceOptions { samples: 0, ..DistanceOptions::default() };
    min_distance(code, &opts).exact()
}

fn cprime_params(q: u64, m: u32, r: u64, ell: u64) -> ((usize, usize, Option<u64>), (usize, usize, Option<u64>)) {
    let amb = Ambient::new(q, m).unwrap();
    let c = families::cprime(&amb, r, ell).unwrap();
    let d = c.dual();
    ((c.n(), c.k(), exact_d(&c)), (d.n(), d.k(), exact_d(&d)))
}

fn cfamily_params(q: u64, m: u32, r: u64, ell: u64) -> ((usize, usize, Option<u64>), (usize, usize, Option<u64>)) {
    let amb = Ambient::new(q, m).unwrap();
    let c = families::cfamily(&amb, r, ell).unwrap();
    let d = c.dual();
    ((c.n(), c.k(), exact_d(&c)), (d.n(), d.k(), exact_d(&d)))
}

#[test]
fn cprime_parameter_table() {
    let cases = [
        ((3, 4, 2, 1), (40, 36, 3), (40, 4, 27)),
        ((3, 4, 2, 2), (40, 24, 8), (40, 16, 12)),
        ((3, 4, 2, 3), (40, 8, 21), (40, 32, 4)),
        ((4, 3, 3, 2), (21, 9, 8), (21, 12, 6)),
        ((5, 2, 2, 1), (12, 8, 4), (12, 4, 6)),
        ((5, 3, 2, 1), (62, 56, 4), (62, 6, 45)),
        ((7, 2, 2, 1), (24, 18, 5), (24, 6, 0)),
    ];
    for ((q, m, r, l), c, dual) in cases {
        let (got, got_dual) = cprime_params(q, m, r, l);
        assert_eq!(got, (c.0, c.1, Some(c.2)), "({q},{m},{r},{l})");
        assert_eq!((got_dual.0, got_dual.1), (dual.0, dual.1));
        if dual.2 > 0 {
            assert_eq!(got_dual.2, Some(dual.2));
        }
    }
    assert!(sphere_packing_check(40, 36, 3, 3).is_perfect);
}

#[test]
fn cfamily_parameter_table() {
    let cases = [
        ((3, 3, 2, 3), (13, 10, 3)),
        ((5, 2, 2, 3), (12, 6, 5)),
        ((3, 4, 2, 1), (40, 4, 27)),
        ((4, 3, 3, 5), (21, 18, 3)),
        ((4, 3, 3, 4), (21, 6, 12)),
        ((5, 3, 4, 3), (31, 10, 15)),
    ];
    for ((q, m, r, l), c) in cases {
        let (got, _) = cfamily_params(q, m, r, l);
        assert_eq!(got, (c.0, c.1, Some(c.2)), "({q},{m},{r},{l})");
    }
    assert_eq!(cfamily_params(4, 3, 3, 5).1, (21, 3, Some(16)));
    assert_eq!(cfamily_params(4, 3, 3, 4).1, (21, 15, Some(4)));
    assert_eq!(cfamily_params(5, 3, 4, 3).1, (31, 21, Some(5)));
}

#[test]
fn weight_enumerators() {
    let amb = Ambient::new(4, 2).unwrap();
    let c = families::cfamily(&amb, 3, 2).unwrap();
    assert_eq!(weight_distribution(&c, DEFAULT_CAP).unwrap().0.to_string(), "1+30z^3+15z^4+18z^5");
    let amb = Ambient::new(4, 3).unwrap();
    let c = families::cfamily(&amb, 3, 2).unwrap();
    assert_eq!(weight_distribution(&c, DEFAULT_CAP).unwrap().0.to_string(), "1+630z^12+3087z^16+378z^20");
    let amb = Ambient::new(5, 2).unwrap();
    let c = families::cprime(&amb, 2, 1).unwrap().dual();
    assert_eq!(
        weight_distribution(&c, DEFAULT_CAP).unwrap().0.to_string(),
        "1+8z^6+144z^8+144z^9+168z^10+96z^11+64z^12"
    );
}

#[test]
fn self_dual_sixty_two_without_enumeration() {
    let amb = Ambient::new(5, 3).unwrap();
    let c = families::cfamily(&amb, 2, 5).unwrap();
    assert_eq!((c.n(), c.k()), (62, 31));
    assert!(self_dual_check(&c));
    let opts = DistanceOptions { allow_enumeration: false, samples: 0, ..DistanceOptions::default() };
    let res = min_distance(&c, &opts);
    assert_eq!(res.kind, DistanceKind::Exact);
    assert_eq!(res.exact(), Some(10));
    assert!(!res.enumerated);
}
