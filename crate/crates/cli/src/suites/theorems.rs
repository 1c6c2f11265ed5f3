//! Grid sweeps: dimension formulas and evaluation-code equalities.

use std::collections::BTreeSet;

use constacode::codes::{code_equal, GeneratorMatrix};
use constacode::cosets::FamilyTag;
use constacode::families::{self, Ambient};

use super::{divisors, err, grid, Check, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check::new(
            "dimensions/cprime-grid",
            5,
            "dim C'(q,m,r,l) = (q^m - sum_{i<=l} C(m,i)(q-1)^i)/r equals n - deg g for q^m <= 1024",
            |_| sweep_dimensions(FamilyTag::CPrime),
        ),
        Check::new(
            "dimensions/c-grid",
            5,
            "dim C(q,m,r,l) from the placement count equals n - deg g for q^m <= 1024",
            |_| sweep_dimensions(FamilyTag::C),
        ),
        Check::new(
            "dimensions/claims-grid",
            5,
            "every closed-form dimension claim for both families matches the construction for q^m <= 1024",
            |_| sweep_claims(),
        ),
        Check::new(
            "evaluation/gc-equals-c",
            6,
            "the companion-matrix evaluation code GC(q,m,r,l) equals C(q,m,r,l) for q^m <= 243",
            |_| sweep_gc(),
        ),
        Check::new(
            "evaluation/hat-equals-projective-tilde",
            6,
            "the homogeneous evaluation code equals P(C~(q,m,r,l)) with the PRM dimension for q^m <= 243",
            |_| sweep_hat(),
        ),
        Check::new(
            "evaluation/tilde-concatenation",
            6,
            "each monomial row of C~ is the concatenation of omega^(jl) times its projective row, and C~ lies in C",
            |_| sweep_concatenation(),
        ),
    ]
}

fn ells(tag: FamilyTag, q: u64, m: u32) -> std::ops::RangeInclusive<u64> {
    match tag {
        FamilyTag::CPrime => 1..=m as u64,
        _ => 0..=((q - 1) * m as u64).saturating_sub(2),
    }
}

fn sweep_dimensions(tag: FamilyTag) -> Result<Outcome, String> {
    let mut count = 0usize;
    let mut bad = Vec::new();
    for (q, m) in grid(1024, 2) {
        let amb = Ambient::new(q, m).map_err(err)?;
        for r in divisors(q) {
            for l in ells(tag, q, m) {
                let (code, formula) = match tag {
                    FamilyTag::CPrime => (families::cprime(&amb, r, l), families::cprime_dimension(q, m, r, l)),
                    _ => (families::cfamily(&amb, r, l), families::c_dimension(q, m, r, l)),
                };
                let code = code.map_err(err)?;
                let deg = code.generator().degree().unwrap_or(0);
                count += 1;
                if (code.n() - deg) as u128 != formula {
                    bad.push(format!("({q},{m},{r},{l}): n-deg g = {}, formula {formula}", code.n() - deg));
                }
            }
        }
    }
    Ok(Outcome::judged(bad.is_empty(), format!("{count} instances agree"), summary(count, &bad)))
}

fn summary(count: usize, bad: &[String]) -> String {
    match bad.first() {
        None => format!("{count} instances agree"),
        Some(first) => format!("{} of {count} disagree, first {first}", bad.len()),
    }
}

fn sweep_claims() -> Result<Outcome, String> {
    let mut count = 0usize;
    let mut bad = Vec::new();
    for (q, m) in grid(1024, 2) {
        let amb = Ambient::new(q, m).map_err(err)?;
        for r in divisors(q) {
            for tag in [FamilyTag::CPrime, FamilyTag::C] {
                for l in ells(tag, q, m) {
                    let Ok(pred) = families::predict_params(tag, q, m, r, l) else {
                        continue;
                    };
                    let code = match tag {
                        FamilyTag::CPrime => families::cprime(&amb, r, l),
                        _ => families::cfamily(&amb, r, l),
                    }
                    .map_err(err)?;
                    let (k, dual_k) = (code.k() as u64, (code.n() - code.k()) as u64);
                    count += 1;
                    if pred.k != k || pred.dual_k != dual_k {
                        bad.push(format!("{tag}({q},{m},{r},{l}): predicted k {}, built {k}", pred.k));
                    }
                    if pred.k_upper.is_some_and(|u| k > u) {
                        bad.push(format!("{tag}({q},{m},{r},{l}): k {k} above the upper bound"));
                    }
                    for c in &pred.claims {
                        if c.k.is_some_and(|ck| ck != k) || c.dual_k.is_some_and(|ck| ck != dual_k) {
                            bad.push(format!("{tag}({q},{m},{r},{l}): claim {} disagrees", c.source));
                        }
                    }
                }
            }
        }
    }
    Ok(Outcome::judged(bad.is_empty(), format!("{count} instances agree"), summary(count, &bad)))
}

fn sweep_gc() -> Result<Outcome, String> {
    let mut count = 0usize;
    let mut bad = Vec::new();
    for (q, m) in grid(243, 2) {
        let amb = Ambient::new(q, m).map_err(err)?;
        for r in divisors(q) {
            for l in ells(FamilyTag::C, q, m) {
                let gc = families::gc_code(&amb, r, l).map_err(err)?;
                let c = families::cfamily(&amb, r, l).map_err(err)?;
                count += 1;
                if !code_equal(&gc, &c.generator_matrix()).map_err(err)? {
                    bad.push(format!("({q},{m},{r},{l})"));
                }
            }
        }
    }
    Ok(Outcome::judged(bad.is_empty(), format!("{count} instances agree"), summary(count, &bad)))
}

/// `ℓ` with `r-1 <= ℓ <= (q-1)(m-1)-1` and `ℓ ≡ r-1 (mod r)` for some r.
fn hypothesis_ells(q: u64, m: u32) -> BTreeSet<u64> {
    divisors(q)
        .into_iter()
        .flat_map(|r| (r - 1..(q - 1) * (m as u64 - 1)).step_by(r as usize))
        .collect()
}

fn sweep_hat() -> Result<Outcome, String> {
    let mut count = 0usize;
    let mut bad = Vec::new();
    for (q, m) in grid(243, 2) {
        let amb = Ambient::new(q, m).map_err(err)?;
        for l in hypothesis_ells(q, m) {
            let hat = families::hat_code(&amb, l).map_err(err)?;
            let proj = families::projective_tilde_code(&amb, l).map_err(err)?;
            let (_, k, _) = families::prm_params(q, m, l).map_err(err)?;
            count += 1;
            if !code_equal(&hat, &proj).map_err(err)? {
                bad.push(format!("({q},{m},{l}): row spaces differ"));
            } else if proj.rank() as u128 != k {
                bad.push(format!("({q},{m},{l}): rank {}, formula {k}", proj.rank()));
            }
        }
    }
    Ok(Outcome::judged(bad.is_empty(), format!("{count} instances agree"), summary(count, &bad)))
}

/// `row(C~) = (p ‖ ω^ℓ p ‖ … ‖ ω^((q-1)/r-1)ℓ p)` with `p` the projective row.
fn concatenation_holds(tilde: &GeneratorMatrix, proj: &GeneratorMatrix, l: u64) -> bool {
    let a = tilde.alphabet();
    let nbar = proj.n();
    tilde.rows().iter().zip(proj.rows()).all(|(row, p)| {
        row.chunks(nbar).enumerate().all(|(j, block)| {
            let s = a.omega_pow(j as i64 * l as i64);
            block.iter().zip(p).all(|(&x, &y)| x == a.mul(s, y))
        })
    })
}

fn sweep_concatenation() -> Result<Outcome, String> {
    let mut count = 0usize;
    let mut bad = Vec::new();
    for (q, m) in grid(243, 2) {
        let amb = Ambient::new(q, m).map_err(err)?;
        for r in divisors(q) {
            for l in (r - 1..(q - 1) * (m as u64 - 1)).step_by(r as usize) {
                let tilde = families::tilde_code(&amb, r, l).map_err(err)?;
                let proj = families::projective_tilde_code(&amb, l).map_err(err)?;
                let c = families::cfamily(&amb, r, l).map_err(err)?.generator_matrix();
                count += 1;
                if tilde.rows().len() != proj.rows().len() || !concatenation_holds(&tilde, &proj, l) {
                    bad.push(format!("({q},{m},{r},{l}): concatenation"));
                    continue;
                }
                let inside = tilde.rows().iter().try_fold(true, |acc, row| c.contains(row).map(|b| acc && b));
                if !inside.map_err(err)? {
                    bad.push(format!("({q},{m},{r},{l}): C~ not inside C"));
                } else if r == q - 1 && !code_equal(&tilde, &c).map_err(err)? {
                    bad.push(format!("({q},{m},{r},{l}): C~ != C at r = q-1"));
                }
            }
        }
    }
    Ok(Outcome::judged(bad.is_empty(), format!("{count} instances agree"), summary(count, &bad)))
}
