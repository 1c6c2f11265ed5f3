//! Invariants checked over whole parameter grids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use constacode::algebra::{Polynomial, Symbol};
use constacode::analysis::{enumerate_weights, macwilliams, weight_distribution};
use constacode::codes::{bch_lower_bound, ConstacyclicCode};
use constacode::cosets::{multiplicative_order, normalize_ell, CosetTable, EllClass, FamilyTag};
use constacode::families::{self, bounded_compositions, congruent_tuple_count, Ambient};

use super::{divisors, err, grid, Check, Outcome};

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check::new(
            "properties/generator-times-check",
            9,
            "g(x) h(x) = x^n - lambda for every constructed code with q^m <= 243",
            |_| for_each_code(243, |c, _| generator_times_check(c)),
        ),
        Check::new(
            "properties/dual-orthogonality",
            9,
            "every code is orthogonal to its dual and the dimensions add up to n, q^m <= 243",
            |_| for_each_code(243, |c, _| dual_orthogonal(c)),
        ),
        Check::new(
            "properties/shift-closure",
            9,
            "the twisted shift of random codewords stays in the code, q^m <= 81",
            |ctx| {
                let seed = ctx.seed;
                for_each_code(81, move |c, label| shift_closure(c, seed ^ hash(label)))
            },
        ),
        Check::new(
            "properties/macwilliams-involution",
            9,
            "MacWilliams maps the code distribution to the enumerated dual distribution and back",
            |_| for_each_code(243, |c, _| macwilliams_involution(c)),
        ),
        Check::new(
            "properties/distance-bounds",
            9,
            "BCH bound <= d, predictions admit d, and d(C'^dual) >= q^(m-l) wherever d is enumerable",
            |ctx| {
                let cap = ctx.cap.min(1 << 20);
                for_each_code(1024, move |c, _| distance_bounds(c, cap))
            },
        ),
        Check::new(
            "properties/congruent-tuple-count",
            9,
            "tuples in {1..q-1}^t with sum = 1 mod r number (q-1)^t/r, t <= 4, q <= 9",
            |_| tuple_counts(),
        ),
        Check::new(
            "properties/bounded-compositions",
            9,
            "placements of t objects in m cells with at most s per cell match brute force, t,m,s <= 6",
            |_| compositions(),
        ),
        Check::new(
            "properties/coset-partition",
            9,
            "q-cyclotomic cosets partition Z_M into q-orbits led by their minima, M <= 3000",
            |_| coset_partition(),
        ),
        Check::new(
            "properties/ell-normalization",
            9,
            "C(q,m,r,l) is zero or equals the code at the canonical l, q^m <= 243",
            |_| normalization(),
        ),
    ]
}

fn hash(label: &str) -> u64 {
    label.bytes().fold(0xcbf29ce484222325, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

enum Probe {
    Holds,
    /// The property could not be tested on this code.
    Skipped,
    Violated(String),
}

use Probe::{Holds, Skipped, Violated};

/// Runs `f` on every 𝒞′, 𝒞 and Dilix code of the grid.
fn for_each_code(max: u64, f: impl Fn(&ConstacyclicCode, &str) -> Result<Probe, String>) -> Result<Outcome, String> {
    let (mut count, mut skipped) = (0usize, 0usize);
    let mut bad = Vec::new();
    let mut visit = |c: &ConstacyclicCode, label: String| -> Result<(), String> {
        match f(c, &label)? {
            Holds => count += 1,
            Skipped => skipped += 1,
            Violated(problem) => {
                count += 1;
                bad.push(format!("{label}: {problem}"));
            }
        }
        Ok(())
    };
    for (q, m) in grid(max, 2) {
        let amb = Ambient::new(q, m).map_err(err)?;
        for r in divisors(q) {
            for l in 1..=m as u64 {
                let c = families::cprime(&amb, r, l).map_err(err)?;
                visit(&c, format!("cprime({q},{m},{r},{l})"))?;
            }
            for l in 0..((q - 1) * m as u64).saturating_sub(1) {
                let c = families::cfamily(&amb, r, l).map_err(err)?;
                visit(&c, format!("c({q},{m},{r},{l})"))?;
            }
        }
        for h in 1..m as u64 {
            let c = families::dilix(&amb, h).map_err(err)?;
            visit(&c, format!("dilix({q},{m},{h})"))?;
        }
    }
    let expected = format!("{count} codes satisfy it, {skipped} not testable");
    Ok(match bad.first() {
        None => Outcome::judged(true, &expected, &expected),
        Some(first) => Outcome::judged(false, expected, format!("{} of {count} violate it, first {first}", bad.len())),
    })
}

fn probe(problem: Option<String>) -> Probe {
    problem.map_or(Holds, Violated)
}

fn generator_times_check(c: &ConstacyclicCode) -> Result<Probe, String> {
    let xn = Polynomial::binomial(c.n(), c.lambda(), c.base()).map_err(err)?;
    Ok(probe((c.generator().mul(c.check()) != xn).then(|| "g h != x^n - lambda".into())))
}

fn dual_orthogonal(c: &ConstacyclicCode) -> Result<Probe, String> {
    let d = c.dual();
    if c.k() + d.k() != c.n() {
        return Ok(Violated(format!("k + dual k = {}", c.k() + d.k())));
    }
    let ok = c.generator_matrix().is_orthogonal_to(&d.generator_matrix()).map_err(err)?;
    Ok(probe((!ok).then(|| "not orthogonal".into())))
}

fn shift_closure(c: &ConstacyclicCode, seed: u64) -> Result<Probe, String> {
    if c.is_zero_code() {
        return Ok(Skipped);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let msg: Vec<Symbol> = (0..c.k()).map(|_| rng.gen_range(0..c.q()) as Symbol).collect();
        let word = c.encode(&msg).map_err(err)?;
        if !c.contains(&c.shift(&word)).map_err(err)? {
            return Ok(Violated("shifted codeword left the code".into()));
        }
    }
    Ok(Holds)
}

fn macwilliams_involution(c: &ConstacyclicCode) -> Result<Probe, String> {
    const LIMIT: u64 = 1 << 16;
    let q = c.q() as u64;
    let fits = |k: usize| q.checked_pow(k as u32).is_some_and(|s| s <= LIMIT);
    if !fits(c.k()) || !fits(c.n() - c.k()) {
        return Ok(Skipped);
    }
    let a = enumerate_weights(&c.generator_matrix(), LIMIT).map_err(err)?;
    let b = enumerate_weights(&c.dual().generator_matrix(), LIMIT).map_err(err)?;
    let ta = macwilliams(&a).map_err(err)?;
    if ta != b {
        return Ok(Violated("transform differs from the enumerated dual".into()));
    }
    Ok(probe((macwilliams(&ta).map_err(err)? != a).then(|| "transform is not an involution".into())))
}

fn distance_bounds(c: &ConstacyclicCode, cap: u64) -> Result<Probe, String> {
    let Ok((dist, _)) = weight_distribution(c, cap) else {
        return Ok(Skipped);
    };
    let d = dist.min_distance().map(|d| d as u64);
    if let Some(d) = d {
        let bch = bch_lower_bound(c) as u64;
        if bch > d {
            return Ok(Violated(format!("BCH bound {bch} exceeds d = {d}")));
        }
    }
    let Some(p) = c.defining_set().and_then(|s| s.params()) else {
        return Ok(Holds);
    };
    let tag = c.defining_set().map(|s| s.tag()).unwrap_or(FamilyTag::Custom);
    if let Ok(pred) = families::predict_params(tag, p.q, p.m, p.r, p.ell) {
        if !pred.d.admits(d) {
            return Ok(Violated(format!("prediction {:?} does not admit d = {d:?}", pred.d)));
        }
        let dual = macwilliams(&dist).map_err(err)?;
        let dd = dual.min_distance().map(|d| d as u64);
        if !pred.dual_d.admits(dd) {
            return Ok(Violated(format!("dual prediction {:?} does not admit {dd:?}", pred.dual_d)));
        }
        if tag == FamilyTag::CPrime {
            let floor = p.q.pow(p.m - p.ell as u32);
            if dd.is_some_and(|dd| dd < floor) {
                return Ok(Violated(format!("dual distance {dd:?} below q^(m-l) = {floor}")));
            }
        }
    }
    Ok(Holds)
}

fn tally(count: usize, bad: Vec<String>) -> Outcome {
    let expected = format!("{count} cases agree");
    match bad.first() {
        None => Outcome::judged(true, &expected, &expected),
        Some(first) => Outcome::judged(false, expected, format!("{} of {count} disagree, first {first}", bad.len())),
    }
}

fn tuple_counts() -> Result<Outcome, String> {
    let (mut count, mut bad) = (0, Vec::new());
    for q in [3u64, 4, 5, 7, 8, 9] {
        for r in (1..q).filter(|r| (q - 1) % r == 0) {
            for t in 1..=4u32 {
                let brute = (0..(q - 1).pow(t))
                    .filter(|&i| {
                        let mut i = i;
                        let mut sum = 0;
                        for _ in 0..t {
                            sum += i % (q - 1) + 1;
                            i /= q - 1;
                        }
                        sum % r == 1 % r
                    })
                    .count() as u128;
                count += 1;
                let formula = congruent_tuple_count(q, t, r);
                if brute != formula {
                    bad.push(format!("q={q} t={t} r={r}: brute {brute}, formula {formula}"));
                }
            }
        }
    }
    Ok(tally(count, bad))
}

fn compositions() -> Result<Outcome, String> {
    let (mut count, mut bad) = (0, Vec::new());
    for m in 1..=6u64 {
        for s in 0..=6u64 {
            let mut brute = vec![0u128; (6 * m + 1) as usize];
            for i in 0..(s + 1).pow(m as u32) {
                let mut i = i;
                let mut sum = 0;
                for _ in 0..m {
                    sum += i % (s + 1);
                    i /= s + 1;
                }
                brute[sum as usize] += 1;
            }
            for t in 0..=6u64 {
                count += 1;
                let formula = bounded_compositions(t, m, s);
                if brute[t as usize] != formula {
                    bad.push(format!("t={t} m={m} s={s}: brute {}, formula {formula}", brute[t as usize]));
                }
            }
        }
    }
    Ok(tally(count, bad))
}

fn coset_partition() -> Result<Outcome, String> {
    let (mut count, mut bad) = (0, Vec::new());
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for modulus in (1..=3000u64).filter(|&m| num_integer::gcd(q, m) == 1) {
            count += 1;
            let t = CosetTable::new(q, modulus).map_err(err)?;
            let ord = multiplicative_order(q, modulus).map_err(err)?;
            let mut seen = vec![false; modulus as usize];
            let mut ok = true;
            for coset in t.cosets() {
                let orbit = {
                    let mut o = vec![coset[0]];
                    let mut j = coset[0] * q % modulus;
                    while j != coset[0] {
                        o.push(j);
                        j = j * q % modulus;
                    }
                    o.sort_unstable();
                    o
                };
                ok &= orbit == *coset && ord % coset.len() as u64 == 0;
                for &i in coset {
                    ok &= !std::mem::replace(&mut seen[i as usize], true);
                }
            }
            ok &= seen.iter().all(|&s| s);
            let leaders = t.leaders();
            ok &= leaders.windows(2).all(|w| w[0] < w[1]);
            if !ok {
                bad.push(format!("q={q} M={modulus}"));
            }
        }
    }
    Ok(tally(count, bad))
}

fn normalization() -> Result<Outcome, String> {
    let (mut count, mut bad) = (0, Vec::new());
    for (q, m) in grid(243, 2) {
        let amb = Ambient::new(q, m).map_err(err)?;
        for r in divisors(q) {
            for l in 0..((q - 1) * m as u64).saturating_sub(1) {
                count += 1;
                let c = families::cfamily(&amb, r, l).map_err(err)?;
                let ok = match normalize_ell(r, l) {
                    EllClass::Zero => c.is_zero_code(),
                    EllClass::Canonical(l2) => {
                        families::cfamily(&amb, r, l2).map_err(err)?.generator() == c.generator()
                    }
                };
                if !ok {
                    bad.push(format!("({q},{m},{r},{l})"));
                }
            }
        }
    }
    Ok(tally(count, bad))
}
