//! The subcommands, producing text rather than printing it.

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use constacode::algebra::FiniteField;
use constacode::analysis::{
    min_distance, sphere_packing_check, weight_distribution, weight_distribution_matrix, AnalysisError,
    Certificate, DistanceKind, DistanceOptions, DistanceResult,
};
use constacode::codes::{CodeRecord, ConstacyclicCode, GeneratorMatrix};
use constacode::cosets::{self, CosetTable, FamilyTag};
use constacode::families;

use crate::report::align;
use crate::spec::{Built, FamilySpec, TableRanges};
use crate::suites::{self, Ctx, Suite};
use crate::{exit, CliError, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "human" | "table" => Ok(Format::Human),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Usage(format!("unknown format '{other}' (human, csv, json)"))),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn predicted(spec: &FamilySpec) -> Value {
    match *spec {
        FamilySpec::CPrime { q, m, r, ell } => {
            families::predict_params(FamilyTag::CPrime, q, m, r, ell).map_or(Value::Null, |p| json!(p))
        }
        FamilySpec::C { q, m, r, ell } => {
            families::predict_params(FamilyTag::C, q, m, r, ell).map_or(Value::Null, |p| json!(p))
        }
        FamilySpec::Ngrm { q, m, r, h, ell0 } => {
            json!({ "k": families::ngrm_dimension(q, m, r, (q - 1) * h + ell0) })
        }
        FamilySpec::Dilix { q, m, h } => json!({ "k": families::dilix_dimension(q, m, h).to_string() }),
    }
}

fn matrix_json(gm: &GeneratorMatrix) -> Value {
    json!({
        "q": gm.q(),
        "n": gm.n(),
        "k": gm.rank(),
        "rows": gm.basis().rows(),
    })
}

/// `construct SPEC`: the code record plus the closed-form predictions.
pub fn construct(spec: &str, field: Option<Arc<FiniteField>>) -> Result<Output, CliError> {
    let spec: FamilySpec = spec.parse()?;
    let built = spec.build(field)?;
    let body = match &built {
        Built::Constacyclic(c) => json!({
            "spec": spec.to_string(),
            "n": c.n(),
            "k": c.k(),
            "record": CodeRecord::from_code(c),
            "predicted": predicted(&spec),
        }),
        Built::Evaluation(gm) => json!({
            "spec": spec.to_string(),
            "n": gm.n(),
            "k": gm.rank(),
            "matrix": matrix_json(gm),
            "predicted": predicted(&spec),
        }),
    };
    Ok(Output::ok(pretty(&body)))
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub distance: bool,
    pub weights: bool,
    pub dual: bool,
    pub cap: Option<u64>,
    pub seed: u64,
}

/// Reads a family spec, a construct output, or a bare code record.
pub fn load(input: &str, field: Option<Arc<FiniteField>>) -> Result<Built, CliError> {
    if let Ok(spec) = input.parse::<FamilySpec>() {
        return spec.build(field);
    }
    let text = if input == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Usage(e.to_string()))?
    } else if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::Usage(format!("'{input}' is neither a family spec nor a readable file: {e}")))?
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad JSON: {e}")))?;
    let record = v.get("record").cloned().unwrap_or(v);
    let record: CodeRecord =
        serde_json::from_value(record).map_err(|e| CliError::Usage(format!("not a code record: {e}")))?;
    let code = record.to_code().map_err(|e| CliError::Construction(e.to_string()))?;
    Ok(Built::Constacyclic(code))
}

fn distance_json(res: &DistanceResult) -> Value {
    json!({
        "kind": res.kind,
        "d": res.exact(),
        "lo": res.lo,
        "hi": res.hi,
        "certificates": res.certificates,
        "enumerated": res.enumerated,
        "sampled_upper": res.sampled_upper,
    })
}

/// Distance of an evaluation code: enumeration when it fits, else the
/// Singleton range.
fn matrix_distance(gm: &GeneratorMatrix, cap: u64) -> DistanceResult {
    let (n, k) = (gm.n(), gm.rank());
    if k == 0 {
        return DistanceResult {
            kind: DistanceKind::Undefined,
            lo: None,
            hi: None,
            certificates: Vec::new(),
            enumerated: false,
            sampled_upper: None,
        };
    }
    let singleton = (n - k + 1) as u64;
    match weight_distribution_matrix(gm, cap) {
        Ok((dist, side)) => {
            let d = dist.min_distance().expect("nonzero code") as u64;
            DistanceResult {
                kind: DistanceKind::Exact,
                lo: Some(d),
                hi: Some(d),
                certificates: vec![Certificate::Enumeration { d, side }],
                enumerated: true,
                sampled_upper: None,
            }
        }
        Err(_) => DistanceResult {
            kind: if singleton == 1 { DistanceKind::Exact } else { DistanceKind::Range },
            lo: Some(1),
            hi: Some(singleton),
            certificates: vec![Certificate::Singleton { value: singleton }],
            enumerated: false,
            sampled_upper: None,
        },
    }
}

enum Subject {
    Code(ConstacyclicCode),
    Matrix(GeneratorMatrix),
}

/// `analyze INPUT`: distance (default) and weight distribution.
pub fn analyze(input: &str, field: Option<Arc<FiniteField>>, opts: &AnalyzeOptions) -> Result<Output, CliError> {
    let built = load(input, field)?;
    let subject = match (built, opts.dual) {
        (Built::Constacyclic(c), false) => Subject::Code(c),
        (Built::Constacyclic(c), true) => Subject::Code(c.dual()),
        (Built::Evaluation(g), false) => Subject::Matrix(g),
        (Built::Evaluation(g), true) => Subject::Matrix(g.dual()),
    };
    let cap = opts.cap.unwrap_or_else(constacode::analysis::cap_from_env);
    let want_distance = opts.distance || !opts.weights;
    let (n, k, q) = match &subject {
        Subject::Code(c) => (c.n(), c.k(), c.q()),
        Subject::Matrix(g) => (g.n(), g.rank(), g.q()),
    };
    let mut body = json!({ "input": input, "dual": opts.dual, "q": q, "n": n, "k": k });
    if let Subject::Code(c) = &subject {
        body["record"] = json!(CodeRecord::from_code(c));
    }
    let mut incomplete = Vec::new();
    if want_distance {
        let res = match &subject {
            Subject::Code(c) => {
                let dopts = DistanceOptions { cap, seed: opts.seed, ..DistanceOptions::default() };
                min_distance(c, &dopts)
            }
            Subject::Matrix(g) => matrix_distance(g, cap),
        };
        if res.kind == DistanceKind::Range {
            incomplete.push(format!("distance only known to lie in [{}, {}]", res.lo.unwrap_or(1), res.hi.unwrap_or(0)));
        }
        if let Some(d) = res.exact() {
            body["sphere_packing"] = json!(sphere_packing_check(n, k, d as usize, q as u64));
        }
        body["distance"] = distance_json(&res);
    }
    if opts.weights {
        let dist = match &subject {
            Subject::Code(c) => weight_distribution(c, cap),
            Subject::Matrix(g) => weight_distribution_matrix(g, cap),
        };
        match dist {
            Ok((w, side)) => {
                body["weights"] = json!({
                    "enumerator": w.to_string(),
                    "distribution": w,
                    "enumerated_side": side,
                });
            }
            Err(e @ AnalysisError::TooLargeToEnumerate { .. }) => {
                incomplete.push(e.to_string());
                body["weights"] = Value::Null;
            }
            Err(e) => return Err(CliError::Analysis(e.to_string())),
        }
    }
    body["complete"] = json!(incomplete.is_empty());
    let mut out = Output::ok(pretty(&body));
    if !incomplete.is_empty() {
        out.stderr = incomplete.join("\n") + "\n";
        out.code = exit::INCOMPLETE;
    }
    Ok(out)
}

/// `verify SUITE`.
pub fn verify(suite: &str, extended: bool, ctx: &Ctx, format: Format) -> Result<Output, CliError> {
    let suite: Suite = suite.parse()?;
    let report = suites::run(suite, extended, ctx);
    let human = report.human();
    let (stdout, stderr) = match format {
        Format::Json => (pretty(&json!(report)), human),
        Format::Human => (human, String::new()),
        Format::Csv => return Err(CliError::Usage("verify supports human or json output".into())),
    };
    let code = if report.ok() { exit::OK } else { exit::VERIFICATION };
    Ok(Output { stdout, stderr, code })
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub family: String,
    pub q: u64,
    pub m: u32,
    pub r: u64,
    pub ell: u64,
    pub n: usize,
    pub k: usize,
    pub d: Option<u64>,
    pub d_lo: Option<u64>,
    pub d_hi: Option<u64>,
    pub certificates: Vec<&'static str>,
    pub perfect: Option<bool>,
    pub distance_optimal: Option<bool>,
}

fn certificate_name(c: &Certificate) -> &'static str {
    match c {
        Certificate::Bch { .. } => "bch",
        Certificate::FormulaLower { .. } => "formula-lower",
        Certificate::FormulaExact { .. } => "formula-exact",
        Certificate::Witness { .. } => "witness",
        Certificate::GeneratorWeight { .. } => "generator-weight",
        Certificate::Singleton { .. } => "singleton",
        Certificate::SpherePacking { .. } => "sphere-packing",
        Certificate::Enumeration { .. } => "enumeration",
    }
}

/// Largest `q^m` a table row may have.
pub const TABLE_MAX_QM: u64 = 1 << 12;

/// One row per valid instance in the ranges, in (q, m, r, ℓ) order.
pub fn table_rows(family: &str, ranges: &TableRanges, cap: u64) -> Result<Vec<TableRow>, CliError> {
    let tag = match family {
        "cprime" => FamilyTag::CPrime,
        "c" => FamilyTag::C,
        "dilix" => FamilyTag::Custom,
        other => return Err(CliError::Usage(format!("table supports cprime, c, dilix; got '{other}'"))),
    };
    let (qr, mr) = (ranges.q.expect("checked by parse"), ranges.m.expect("checked by parse"));
    let mut rows = Vec::new();
    for q in qr.values() {
        if constacode::algebra::prime_power(q).is_none() {
            continue;
        }
        for m in mr.values() {
            let m = u32::try_from(m).map_err(|_| CliError::Construction(format!("m = {m} out of range")))?;
            if m == 0 {
                continue;
            }
            if q.checked_pow(m).is_none_or(|v| v > TABLE_MAX_QM) {
                return Err(CliError::Construction(format!("q^m = {q}^{m} exceeds the table cap {TABLE_MAX_QM}")));
            }
            let amb = families::Ambient::new(q, m).map_err(|e| CliError::Construction(e.to_string()))?;
            let rs: Vec<u64> = match tag {
                FamilyTag::Custom => vec![1],
                _ => (2..q).filter(|r| (q - 1) % r == 0).collect(),
            };
            for r in rs {
                if tag != FamilyTag::Custom && ranges.r.is_some_and(|rr| !(rr.lo..=rr.hi).contains(&r)) {
                    continue;
                }
                let all = match tag {
                    FamilyTag::CPrime => 1..=m as u64,
                    FamilyTag::C => 0..=((q - 1) * m as u64).saturating_sub(2),
                    FamilyTag::Custom => 1..=(m as u64).saturating_sub(1),
                };
                for ell in all {
                    if ranges.ell.is_some_and(|er| !(er.lo..=er.hi).contains(&ell)) {
                        continue;
                    }
                    let code = match tag {
                        FamilyTag::CPrime => families::cprime(&amb, r, ell),
                        FamilyTag::C => families::cfamily(&amb, r, ell),
                        FamilyTag::Custom => families::dilix(&amb, ell),
                    }
                    .map_err(|e| CliError::Construction(e.to_string()))?;
                    rows.push(row(family, q, m, r, ell, &code, cap));
                }
            }
        }
    }
    Ok(rows)
}

fn row(family: &str, q: u64, m: u32, r: u64, ell: u64, code: &ConstacyclicCode, cap: u64) -> TableRow {
    let opts = DistanceOptions { cap, samples: 0, ..DistanceOptions::default() };
    let res = min_distance(code, &opts);
    let mut certificates: Vec<&'static str> = res.certificates.iter().map(certificate_name).collect();
    certificates.dedup();
    let sp = res.exact().map(|d| sphere_packing_check(code.n(), code.k(), d as usize, q));
    TableRow {
        family: family.to_string(),
        q,
        m,
        r,
        ell,
        n: code.n(),
        k: code.k(),
        d: res.exact(),
        d_lo: res.lo,
        d_hi: res.hi,
        certificates,
        perfect: sp.map(|s| s.is_perfect),
        distance_optimal: sp.map(|s| s.distance_optimal),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}

fn d_cell(r: &TableRow) -> String {
    match (r.d, r.d_lo, r.d_hi) {
        (Some(d), _, _) => d.to_string(),
        (None, Some(lo), Some(hi)) => format!("[{lo},{hi}]"),
        _ => "-".to_string(),
    }
}

const TABLE_HEADER: [&str; 10] = ["family", "q", "m", "r", "ell", "n", "k", "d", "perfect", "certificates"];

fn cells(r: &TableRow) -> [String; 10] {
    [
        r.family.clone(),
        r.q.to_string(),
        r.m.to_string(),
        r.r.to_string(),
        r.ell.to_string(),
        r.n.to_string(),
        r.k.to_string(),
        d_cell(r),
        opt(r.perfect),
        r.certificates.join(";"),
    ]
}

/// `table FAMILY RANGES...`.
pub fn table(family: &str, args: &[String], format: Format, cap: u64) -> Result<Output, CliError> {
    let ranges = TableRanges::parse(args)?;
    let rows = table_rows(family, &ranges, cap)?;
    let stdout = match format {
        Format::Json => pretty(&json!(rows)),
        Format::Human => {
            let body: Vec<[String; 10]> = rows.iter().map(cells).collect();
            align(&TABLE_HEADER.map(String::from), &body)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header: Vec<&str> = TABLE_HEADER.to_vec();
            header.extend(["d_lo", "d_hi", "distance_optimal"]);
            w.write_record(&header).map_err(|e| CliError::Analysis(e.to_string()))?;
            for r in &rows {
                let mut rec = cells(r).to_vec();
                rec.extend([opt(r.d_lo), opt(r.d_hi), opt(r.distance_optimal)]);
                w.write_record(&rec).map_err(|e| CliError::Analysis(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Analysis(e.to_string()))?)
                .expect("CSV of ASCII cells")
        }
    };
    Ok(Output::ok(stdout))
}

/// `inspect cosets Q MODULUS [--r R]`.
pub fn inspect_cosets(q: u64, modulus: u64, r: Option<u64>) -> Result<Output, CliError> {
    let t = CosetTable::new(q, modulus).map_err(|e| CliError::Construction(e.to_string()))?;
    let cosets: Vec<Value> = t
        .cosets()
        .iter()
        .map(|c| json!({ "leader": c[0], "size": c.len(), "members": c }))
        .collect();
    let mut body = json!({ "q": q, "modulus": modulus, "count": cosets.len(), "cosets": cosets });
    if let Some(r) = r {
        let g = cosets::gamma_one(q, modulus, r).map_err(|e| CliError::Construction(e.to_string()))?;
        body["gamma_one"] = json!(g);
    }
    Ok(Output::ok(pretty(&body)))
}

/// `inspect field`: modulus, primitive element and subfield data.
pub fn inspect_field(field: &FiniteField) -> Output {
    let body = json!({
        "spec": field.spec_string(),
        "characteristic": field.characteristic(),
        "degree": field.degree(),
        "order": field.order(),
        "modulus": field.modulus(),
        "subfields": (1..=field.degree()).filter(|e| field.degree() % e == 0).collect::<Vec<_>>(),
    });
    Output::ok(pretty(&body))
}

/// `inspect code SPEC`: generator, check polynomial and defining set.
pub fn inspect_code(spec: &str, field: Option<Arc<FiniteField>>) -> Result<Output, CliError> {
    let spec: FamilySpec = spec.parse()?;
    let body = match spec.build(field)? {
        Built::Constacyclic(c) => {
            let set = c.defining_set();
            json!({
                "spec": spec.to_string(),
                "n": c.n(),
                "k": c.k(),
                "r": c.r(),
                "lambda_log": c.lambda().log(),
                "generator": c.generator().indices(),
                "check": c.check().indices(),
                "defining_set_size": set.map(|s| s.len()),
                "coset_leaders": set.map(|s| s.leaders(c.q() as u64)),
            })
        }
        Built::Evaluation(gm) => json!({ "spec": spec.to_string(), "matrix": matrix_json(&gm) }),
    };
    Ok(Output::ok(pretty(&body)))
}
