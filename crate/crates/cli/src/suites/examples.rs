//! Worked examples with literal expected values.

use constacode::algebra::{minimal_poly, Polynomial};
use constacode::analysis::{
    enumerate_weights, min_distance, self_dual_check, sphere_packing_check, table1_table2_check,
    weight_distribution, weight_distribution_matrix, DistanceKind, DistanceOptions,
};
use constacode::codes::{code_equal, residue_code, restrict_cyclic, ConstacyclicCode};
use constacode::families::{self, Ambient};

use super::{enumerated_pair, err, triple, Check, Outcome};
use crate::report::Status;

pub(super) fn checks() -> Vec<Check> {
    let mut out = Vec::new();
    cprime_examples(&mut out);
    weight_enumerators(&mut out);
    dual_tables(&mut out);
    cfamily_examples(&mut out);
    restriction_example(&mut out);
    reference_codes(&mut out);
    out
}

pub(super) fn extended() -> Vec<Check> {
    vec![Check::new(
        "extended/c-4-5-3-2-weights",
        10,
        "full enumeration of the 4^15 codewords of C(4,5,3,2)",
        |_| {
            let amb = Ambient::new(4, 5).map_err(err)?;
            let code = families::cfamily(&amb, 3, 2).map_err(err)?;
            let dist = enumerate_weights(&code.generator_matrix(), u64::MAX).map_err(err)?;
            Ok(Outcome::compare(
                "1+173910z^192+140241024z^240+809480463z^256+123742080z^272+104346z^320",
                dist,
            ))
        },
    )]
}

fn cprime_examples(out: &mut Vec<Check>) {
    let cases: [((u64, u32, u64, u64), &str, &str); 7] = [
        ((3, 4, 2, 1), "[40,36,3]", "[40,4,27]"),
        ((3, 4, 2, 2), "[40,24,8]", "[40,16,12]"),
        ((3, 4, 2, 3), "[40,8,21]", "[40,32,4]"),
        ((4, 3, 3, 2), "[21,9,8]", "[21,12,6]"),
        ((5, 2, 2, 1), "[12,8,4]", "[12,4,6]"),
        ((5, 3, 2, 1), "[62,56,4]", "[62,6,45]"),
        ((7, 2, 2, 1), "[24,18,5]", ""),
    ];
    for ((q, m, r, l), code, dual) in cases {
        out.push(Check::new(
            format!("cprime-examples/{q}-{m}-{r}-{l}"),
            1,
            format!("C'({q},{m},{r},{l}) and its dual have the listed parameters"),
            move |ctx| {
                let amb = Ambient::new(q, m).map_err(err)?;
                let c = families::cprime(&amb, r, l).map_err(err)?;
                let (got, got_dual) = enumerated_pair(&c, ctx.cap).map_err(err)?;
                if dual.is_empty() {
                    // only the dual's length and dimension are listed here
                    let computed = format!("{got} dual [{},{}]", c.n(), c.n() - c.k());
                    return Ok(Outcome::compare(format!("{code} dual [24,6]"), computed));
                }
                Ok(Outcome::compare(format!("{code} dual {dual}"), format!("{got} dual {got_dual}")))
            },
        ));
    }
    out.push(Check::new(
        "cprime-examples/3-4-2-1-perfect",
        1,
        "C'(3,4,2,1) meets the sphere-packing bound with equality",
        |ctx| {
            let amb = Ambient::new(3, 4).map_err(err)?;
            let c = families::cprime(&amb, 2, 1).map_err(err)?;
            let (dist, _) = weight_distribution(&c, ctx.cap).map_err(err)?;
            let d = dist.min_distance().unwrap_or(0);
            let sp = sphere_packing_check(c.n(), c.k(), d, 3);
            Ok(Outcome::judged(sp.is_perfect, "perfect", format!("d = {d}, perfect = {}", sp.is_perfect)))
        },
    ));
    for (q, m, r, l) in [(5u64, 2u32, 2u64, 1u64), (5, 3, 2, 1)] {
        out.push(Check::new(
            format!("cprime-examples/{q}-{m}-{r}-{l}-distance-optimal"),
            1,
            format!("no code with the length and dimension of C'({q},{m},{r},{l}) has a larger distance"),
            move |ctx| {
                let amb = Ambient::new(q, m).map_err(err)?;
                let c = families::cprime(&amb, r, l).map_err(err)?;
                let (dist, _) = weight_distribution(&c, ctx.cap).map_err(err)?;
                let d = dist.min_distance().unwrap_or(0);
                let sp = sphere_packing_check(c.n(), c.k(), d, q);
                Ok(Outcome::judged(sp.distance_optimal, "distance-optimal", format!("d = {d}, optimal = {}", sp.distance_optimal)))
            },
        ));
    }
}

fn weight_enumerators(out: &mut Vec<Check>) {
    let cases: [(&str, u64, u32, u64, u64, &str); 5] = [
        ("cprime-dual", 5, 2, 2, 1, "1+8z^6+144z^8+144z^9+168z^10+96z^11+64z^12"),
        ("cprime-dual", 5, 3, 2, 1, "1+3720z^45+9424z^50+2480z^55"),
        ("c", 4, 2, 3, 2, "1+30z^3+15z^4+18z^5"),
        ("c", 4, 3, 3, 2, "1+630z^12+3087z^16+378z^20"),
        ("c", 4, 4, 3, 2, "1+10710z^48+411264z^60+257295z^64+362880z^68+6426z^80"),
    ];
    for (kind, q, m, r, l, expected) in cases {
        out.push(Check::new(
            format!("weight-enumerators/{kind}-{q}-{m}-{r}-{l}"),
            2,
            format!("weight enumerator of the {kind} code at ({q},{m},{r},{l})"),
            move |ctx| {
                let amb = Ambient::new(q, m).map_err(err)?;
                let code = if kind == "c" {
                    families::cfamily(&amb, r, l)
                } else {
                    families::cprime(&amb, r, l).map(|c| c.dual())
                }
                .map_err(err)?;
                let (dist, _) = weight_distribution(&code, ctx.cap).map_err(err)?;
                Ok(Outcome::compare(expected, dist))
            },
        ));
    }
}

fn dual_tables(out: &mut Vec<Check>) {
    for (q, m) in [(5u64, 2u32), (5, 3), (7, 2)] {
        out.push(Check::new(
            format!("dual-tables/{q}-{m}"),
            3,
            format!("closed-form weight table equals the enumerated dual of C'({q},{m},{},1)", (q - 1) / 2),
            move |ctx| {
                let t = table1_table2_check(q, m, ctx.cap).map_err(err)?;
                Ok(Outcome::judged(t.equal, &t.closed_form, &t.enumerated))
            },
        ));
    }
}

fn cfamily_examples(out: &mut Vec<Check>) {
    let cases: [((u64, u32, u64, u64), &str, Option<&str>); 6] = [
        ((3, 3, 2, 3), "[13,10,3]", None),
        ((5, 2, 2, 3), "[12,6,5]", Some("[12,6,5]")),
        ((3, 4, 2, 1), "[40,4,27]", None),
        ((4, 3, 3, 5), "[21,18,3]", Some("[21,3,16]")),
        ((4, 3, 3, 4), "[21,6,12]", Some("[21,15,4]")),
        ((5, 3, 4, 3), "[31,10,15]", Some("[31,21,5]")),
    ];
    for ((q, m, r, l), code, dual) in cases {
        out.push(Check::new(
            format!("c-examples/{q}-{m}-{r}-{l}"),
            4,
            format!("C({q},{m},{r},{l}) has the listed parameters"),
            move |ctx| {
                let amb = Ambient::new(q, m).map_err(err)?;
                let c = families::cfamily(&amb, r, l).map_err(err)?;
                let (got, got_dual) = enumerated_pair(&c, ctx.cap).map_err(err)?;
                Ok(match dual {
                    Some(d) => Outcome::compare(format!("{code} dual {d}"), format!("{got} dual {got_dual}")),
                    None => Outcome::compare(code, got),
                })
            },
        ));
    }
    out.push(Check::new(
        "c-examples/5-2-2-3-self-dual",
        4,
        "C(5,2,2,3) is self-dual",
        |_| {
            let amb = Ambient::new(5, 2).map_err(err)?;
            let c = families::cfamily(&amb, 2, 3).map_err(err)?;
            Ok(Outcome::compare(true, self_dual_check(&c)))
        },
    ));
    out.push(Check::new(
        "c-examples/5-3-2-5-certified",
        4,
        "C(5,3,2,5) is a self-dual [62,31,10] code with d fixed by matching certificates, no enumeration",
        |_| {
            let amb = Ambient::new(5, 3).map_err(err)?;
            let c = families::cfamily(&amb, 2, 5).map_err(err)?;
            let opts = DistanceOptions { allow_enumeration: false, samples: 0, ..DistanceOptions::default() };
            let res = min_distance(&c, &opts);
            let kind = match res.kind {
                DistanceKind::Exact => "exact",
                DistanceKind::Range => "range",
                DistanceKind::Undefined => "undefined",
            };
            let computed = format!(
                "{} {kind}, self-dual {}, enumerated {}",
                triple(c.n(), c.k(), res.lo),
                self_dual_check(&c),
                res.enumerated
            );
            Ok(Outcome::compare("[62,31,10] exact, self-dual true, enumerated false", computed))
        },
    ));
    out.push(Check::new(
        "c-examples/5-3-4-7-length",
        4,
        "C(5,3,4,7) is listed as [30,28,3]; its dual is listed as [31,3,25]",
        |ctx| {
            let amb = Ambient::new(5, 3).map_err(err)?;
            let c = families::cfamily(&amb, 4, 7).map_err(err)?;
            let (got, got_dual) = enumerated_pair(&c, ctx.cap).map_err(err)?;
            let computed = format!("{got} dual {got_dual}");
            let expected = "[30,28,3] dual [31,3,25]";
            // the listed code length 30 cannot hold: n = (5^3-1)/4 = 31
            let status = if computed == expected {
                Status::Pass
            } else if got == "[31,28,3]" && got_dual == "[31,3,25]" {
                Status::Flagged
            } else {
                Status::Fail
            };
            Ok(Outcome { expected: expected.into(), computed, status })
        },
    ));
}

/// The cyclic code of length 80 over GF(3) for `g`, its restriction to
/// negacyclic length 40, and the bounds linking their distances.
fn restriction_case(which: usize, cap: u64) -> Result<Outcome, String> {
    let amb = Ambient::new(3, 4).map_err(err)?;
    let base = amb.base().clone();
    let f = amb.field().clone();
    let m_beta = minimal_poly(1, &base);
    let g = match which {
        0 => m_beta,
        1 => Polynomial::binomial(1, f.one(), &base).map_err(err)?.mul(&m_beta),
        _ => Polynomial::binomial(40, f.one(), &base).map_err(err)?.mul(&m_beta),
    };
    let cyclic = ConstacyclicCode::from_generator(&g, f.one(), 80, amb.alphabet().clone()).map_err(err)?;
    let lambda = amb.lambda(2);
    let res = restrict_cyclic(&g, 40, lambda).map_err(err)?;
    let under = ConstacyclicCode::from_generator(&res.underline, lambda, 40, amb.alphabet().clone()).map_err(err)?;
    let residue = residue_code(&cyclic, lambda).map_err(err)?;
    let same = code_equal(&residue.generator_matrix(), &under.generator_matrix()).map_err(err)?;

    let opts = DistanceOptions { cap, samples: 0, ..DistanceOptions::default() };
    let dc = min_distance(&cyclic, &opts).exact().ok_or("cyclic distance not determined")?;
    let du = min_distance(&under, &opts).exact().ok_or("restricted distance not determined")?;
    let (r, ind) = (2, res.ind.len() as u64);
    let mut bounds = dc <= ind * du;
    if (1..r).contains(&ind) {
        bounds &= 2 <= dc && dc <= ind + 1;
    }
    let ind_list: Vec<String> = res.ind.iter().map(|i| i.to_string()).collect();
    Ok(Outcome::compare(
        match which {
            0 => "[80,76,2] -> [40,36,3], Ind {1}, residue equal, bounds hold",
            1 => "[80,75,3] -> [40,36,3], Ind {0,1}, residue equal, bounds hold",
            _ => "[80,36,6] -> [40,36,3], Ind {0,1}, residue equal, bounds hold",
        },
        format!(
            "{} -> {}, Ind {{{}}}, residue {}, bounds {}",
            triple(80, cyclic.k(), Some(dc)),
            triple(40, under.k(), Some(du)),
            ind_list.join(","),
            if same { "equal" } else { "differs" },
            if bounds { "hold" } else { "fail" }
        ),
    ))
}

fn restriction_example(out: &mut Vec<Check>) {
    let names = ["m-beta", "x-minus-one-m-beta", "x40-minus-one-m-beta"];
    for (which, name) in names.into_iter().enumerate() {
        out.push(Check::new(
            format!("cyclic-restriction/{name}"),
            7,
            "cyclic code of length 80 over GF(3) restricts to a negacyclic [40,36,3] code within the distance bounds",
            move |ctx| restriction_case(which, ctx.cap),
        ));
    }
}

fn reference_codes(out: &mut Vec<Check>) {
    out.push(Check::new(
        "reference/ngrm-3-4-2",
        8,
        "NGRM(3,4,2,h) for h = 0..3",
        |ctx| {
            let amb = Ambient::new(3, 4).map_err(err)?;
            let mut got = Vec::new();
            for h in 0..4 {
                let gm = families::ngrm(&amb, 2, h, 0).map_err(err)?;
                let (dist, _) = weight_distribution_matrix(&gm, ctx.cap).map_err(err)?;
                let k = gm.rank();
                let formula = families::ngrm_dimension(3, 4, 2, 2 * h);
                if formula != k as u64 {
                    return Err(format!("h = {h}: rank {k}, dimension formula {formula}"));
                }
                got.push(triple(gm.n(), k, dist.min_distance().map(|d| d as u64)));
            }
            Ok(Outcome::compare("[40,1,40] [40,11,13] [40,30,4] [40,40,1]", got.join(" ")))
        },
    ));
    out.push(Check::new("reference/prm-3-4-distances", 8, "d(PRM(3,4,h)) for h = 1..6", |_| {
        let ds: Result<Vec<String>, _> =
            (1..=6).map(|h| families::prm_params(3, 4, h).map(|p| p.2.to_string())).collect();
        Ok(Outcome::compare("27,18,9,6,3,2", ds.map_err(err)?.join(",")))
    }));
    out.push(Check::new(
        "reference/prm-3-4-enumerated",
        8,
        "the projective evaluation code of degree h at (3,4) has the PRM distance where it can be enumerated",
        |ctx| {
            let amb = Ambient::new(3, 4).map_err(err)?;
            let (mut exp, mut got) = (Vec::new(), Vec::new());
            for h in 1..=6 {
                let gm = families::hat_code(&amb, h).map_err(err)?;
                let Ok((dist, _)) = weight_distribution_matrix(&gm, ctx.cap) else {
                    continue;
                };
                let (_, k, d) = families::prm_params(3, 4, h).map_err(err)?;
                exp.push(format!("h={h}:{}", triple(40, k as usize, Some(d))));
                got.push(format!("h={h}:{}", triple(gm.n(), gm.rank(), dist.min_distance().map(|d| d as u64))));
            }
            Ok(Outcome::compare(exp.join(" "), got.join(" ")))
        },
    ));
    for m in 2..=4u32 {
        out.push(Check::new(
            format!("reference/prm2-closed-form-4-{m}"),
            8,
            format!("closed-form PRM(4,{m},2) weights equal the enumerated weights of C(4,{m},3,2)"),
            move |ctx| {
                let amb = Ambient::new(4, m).map_err(err)?;
                let c = families::cfamily(&amb, 3, 2).map_err(err)?;
                let (dist, _) = weight_distribution(&c, ctx.cap).map_err(err)?;
                let closed = families::prm2_weight_distribution(4, m).map_err(err)?;
                Ok(Outcome::compare(closed, dist))
            },
        ));
    }
    out.push(Check::new(
        "reference/dilix-dimension-3-4-2",
        8,
        "dim of the Dilix code with h = 1..3 at (3,4) is 2 dim C'(3,4,2,h)",
        |_| {
            let amb = Ambient::new(3, 4).map_err(err)?;
            let (mut exp, mut got) = (Vec::new(), Vec::new());
            for h in 1..=3 {
                let omega = families::dilix(&amb, h).map_err(err)?;
                let cp = families::cprime(&amb, 2, h).map_err(err)?;
                exp.push(format!("{}", 2 * cp.k()));
                got.push(format!("{}", omega.k()));
                if families::dilix_dimension(3, 4, h) != omega.k() as u128 {
                    return Err(format!("h = {h}: dimension formula disagrees with construction"));
                }
            }
            Ok(Outcome::compare(exp.join(","), got.join(",")))
        },
    ));
}
