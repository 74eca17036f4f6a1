//! Command-line front end: argument handling, commands and JSON reports.
//!
//! Every run prints one JSON document (keys sorted, integers as decimal
//! strings) and maps its outcome to an exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | usage, parse or bounds error |
//! | 3 | not rectangular or not faithful |
//! | 4 | verification mismatch |
//! | 5 | internal invariant violation |

pub mod parse;

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{ArgAction, Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use rectrep::charcalc::{character_of, is_faithful, is_multiplicity_free};
use rectrep::classify::{
    catalogue_lengths, catalogue_spec, decompose, enumerate_for_algebra, enumerate_rectangular,
    estimate_enumeration, long_roots_3space_census, roots_in_plane_census,
    verify_classification, verify_howe, ClassifyError, DecomposeError, EnumeratedRep,
    SubspaceRecord,
};
use rectrep::exactlin::random_unimodular;
use rectrep::liealg::to_orthogonal;
use rectrep::rectkit::{
    automorphism_order, diagnose_rectangular, is_hypercubic, lengths, verify_certificate,
};
use rectrep::{Family, RepSpec, SemisimpleAlgebra, SimpleType, WeightMultiset};

use parse::{parse_algebra, parse_spec, render_rep};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REJECTED: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

/// Entry bound for the random unimodular change of basis behind `--seed`.
const SEED_ENTRY_BOUND: u64 = 4;

#[derive(Debug, Parser)]
#[command(name = "rectrep", version, about = "Characters, rectangularity and decompositions of semisimple Lie algebra representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// Algebra, e.g. "A1*B3".
    #[arg(long)]
    pub algebra: Option<String>,
    /// Representation, e.g. "sym2*spin + triv*std".
    #[arg(long)]
    pub rep: Option<String>,
    #[arg(long)]
    pub max_rank: Option<usize>,
    #[arg(long)]
    pub max_dim: Option<u64>,
    /// Print the JSON report on standard output.
    #[arg(long, default_value_t = true, action = ArgAction::Set, num_args = 0..=1, default_missing_value = "true")]
    pub json: bool,
    /// Print a human-readable summary on standard error.
    #[arg(long)]
    pub pretty: bool,
    /// Seed for the random change-of-basis check in `rect`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Report estimated work instead of running an enumeration.
    #[arg(long)]
    pub dry_run: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Formal character of a representation.
    Char(Common),
    /// Rectangularity certificate and lengths.
    Rect(Common),
    /// Unique decomposition into catalogue items.
    Decompose(Common),
    /// Brute-force list of faithful rectangular representations.
    Enumerate(Common),
    /// Enumeration against the catalogue closure.
    VerifyCatalogue(Common),
    /// Multiplicity-free irreducibles against the known list.
    VerifyHowe(Common),
    /// Root counts of subspaces in type B.
    Census(Common),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Char(_) => "char",
            Command::Rect(_) => "rect",
            Command::Decompose(_) => "decompose",
            Command::Enumerate(_) => "enumerate",
            Command::VerifyCatalogue(_) => "verify-catalogue",
            Command::VerifyHowe(_) => "verify-howe",
            Command::Census(_) => "census",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Char(c)
            | Command::Rect(c)
            | Command::Decompose(c)
            | Command::Enumerate(c)
            | Command::VerifyCatalogue(c)
            | Command::VerifyHowe(c)
            | Command::Census(c) => c,
        }
    }
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone)]
struct ErrorInfo {
    kind: &'static str,
    message: String,
    line: Option<usize>,
    column: Option<usize>,
    field: Option<&'static str>,
    failure: Option<&'static str>,
}

impl ErrorInfo {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        ErrorInfo {
            kind,
            message: message.into(),
            line: None,
            column: None,
            field: None,
            failure: None,
        }
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind));
        m.insert("message".into(), json!(self.message));
        m.insert("line".into(), self.line.map_or(Value::Null, |l| json!(l.to_string())));
        m.insert("column".into(), self.column.map_or(Value::Null, |c| json!(c.to_string())));
        if let Some(f) = self.field {
            m.insert("field".into(), json!(f));
        }
        if let Some(r) = self.failure {
            m.insert("failure".into(), json!(r));
        }
        Value::Object(m)
    }
}

/// A command's result before it is printed.
struct Report {
    code: i32,
    result: Option<Value>,
    error: Option<ErrorInfo>,
    pretty: Vec<String>,
}

impl Report {
    fn ok(result: Value, pretty: Vec<String>) -> Self {
        Report {
            code: EXIT_OK,
            result: Some(result),
            error: None,
            pretty,
        }
    }

    fn fail(code: i32, error: ErrorInfo) -> Self {
        Report {
            code,
            result: None,
            error: Some(error),
            pretty: Vec::new(),
        }
    }
}

fn usage(message: impl Into<String>) -> Report {
    Report::fail(EXIT_USAGE, ErrorInfo::new("usage", message))
}

fn classify_failure(e: ClassifyError) -> Report {
    match e {
        ClassifyError::Bounds(m) => Report::fail(EXIT_USAGE, ErrorInfo::new("bounds", m)),
        other => Report::fail(EXIT_USAGE, ErrorInfo::new("invalid", other.to_string())),
    }
}

fn s<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(s).collect())
}

/// Parses `--algebra` and `--rep`, both required.
fn read_spec(c: &Common) -> Result<RepSpec, Report> {
    let (Some(a), Some(r)) = (&c.algebra, &c.rep) else {
        return Err(usage("this command needs --algebra and --rep"));
    };
    parse_spec(a, r).map(|(_, spec)| spec).map_err(|e| {
        let p = e.position();
        Report::fail(
            EXIT_USAGE,
            ErrorInfo {
                line: Some(p.line),
                column: Some(p.column),
                field: Some(e.field()),
                ..ErrorInfo::new("parse", p.message.clone())
            },
        )
    })
}

fn spec_json(spec: &RepSpec) -> Value {
    json!({
        "algebra": spec.algebra().to_string(),
        "rep": render_rep(spec),
    })
}

fn cmd_char(c: &Common) -> Report {
    let spec = match read_spec(c) {
        Ok(s) => s,
        Err(r) => return r,
    };
    let character = match character_of(&spec) {
        Ok(ch) => ch,
        Err(e) => return Report::fail(EXIT_USAGE, ErrorInfo::new("invalid", e.to_string())),
    };
    let algebra = spec.algebra();
    let classical = algebra.factors().iter().all(|t| t.is_classical());
    let weights: Vec<Value> = character
        .iter()
        .map(|(w, m)| {
            let ortho = if classical {
                let mut coords = Vec::new();
                for i in 0..algebra.num_factors() {
                    let o = to_orthogonal(algebra, w, i).expect("classical factor");
                    coords.extend(o.coords().iter().map(ToString::to_string));
                }
                strings(coords)
            } else {
                Value::Null
            };
            json!({
                "weight": strings(w.coords().iter()),
                "multiplicity": s(m),
                "orthogonal": ortho,
            })
        })
        .collect();
    let dimension = character.mass();
    let result = json!({
        "algebra": algebra.to_string(),
        "rep": render_rep(&spec),
        "dimension": s(&dimension),
        "constituents": s(spec.num_constituents()),
        "distinct_weights": s(character.len()),
        "multiplicity_free": is_multiplicity_free(&character),
        "faithful": is_faithful(&spec),
        "weights": weights,
    });
    let pretty = vec![format!(
        "{} on {}: dimension {}, {} distinct weights",
        render_rep(&spec),
        algebra,
        dimension,
        character.len()
    )];
    Report::ok(result, pretty)
}

fn cmd_rect(c: &Common) -> Report {
    let spec = match read_spec(c) {
        Ok(s) => s,
        Err(r) => return r,
    };
    let character = match character_of(&spec) {
        Ok(ch) => ch,
        Err(e) => return Report::fail(EXIT_USAGE, ErrorInfo::new("invalid", e.to_string())),
    };
    let rank = spec.algebra().rank();
    let ms = WeightMultiset::from_character(&character);
    let cert = match diagnose_rectangular(&ms) {
        Ok(cert) => cert.padded_to(rank),
        Err(failure) => {
            let mut r = Report::fail(
                EXIT_REJECTED,
                ErrorInfo {
                    failure: Some(failure.code()),
                    ..ErrorInfo::new("not_rectangular", format!("not rectangular: {failure}"))
                },
            );
            r.result = Some(json!({"rectangular": false, "reason": "not rectangular", "failure": failure.code()}));
            r.pretty = vec![format!("not rectangular: {failure}")];
            return r;
        }
    };
    let ls = lengths(&cert);
    let hyper = is_hypercubic(&cert);
    let verified = verify_certificate(&ms, &cert);
    let mut result = Map::new();
    result.insert("rectangular".into(), json!(true));
    result.insert("lengths".into(), strings(&ls));
    result.insert("hypercubic".into(), json!(hyper.is_some()));
    result.insert("length".into(), hyper.map_or(Value::Null, s));
    result.insert(
        "automorphism_order".into(),
        automorphism_order(&ls).map_or(Value::Null, s),
    );
    result.insert(
        "certificate".into(),
        json!({
            "denominator": s(ms.denominator()),
            "vertex": strings(cert.vertex.iter()),
            "edges": Value::Array(cert.edges.iter().map(|e| strings(e.iter())).collect()),
            "degrees": strings(&cert.degrees),
            "padding": s(cert.padding),
            "verified": verified,
        }),
    );
    let mut pretty = vec![format!("rectangular, lengths {ls:?}")];
    let mut code = if verified { EXIT_OK } else { EXIT_INTERNAL };
    if let Some(seed) = c.seed {
        let m = random_unimodular(rank, seed, SEED_ENTRY_BOUND);
        let moved = diagnose_rectangular(&ms.transform(&m)).ok().map(|t| lengths(&t.padded_to(rank)));
        let preserved = moved.as_ref() == Some(&ls);
        result.insert(
            "change_of_basis".into(),
            json!({
                "seed": s(seed),
                "lengths": moved.as_ref().map_or(Value::Null, strings),
                "preserved": preserved,
            }),
        );
        pretty.push(format!("seed {seed}: lengths preserved = {preserved}"));
        if !preserved {
            code = EXIT_INTERNAL;
        }
    }
    let mut r = Report::ok(Value::Object(result), pretty);
    if code != EXIT_OK {
        r.code = code;
        r.error = Some(ErrorInfo::new("internal", "certificate or change-of-basis check failed"));
    }
    r
}

fn cmd_decompose(c: &Common) -> Report {
    let spec = match read_spec(c) {
        Ok(s) => s,
        Err(r) => return r,
    };
    match decompose(&spec) {
        Ok(d) => {
            let parts: Vec<Value> = d
                .parts
                .iter()
                .map(|p| {
                    let (alg, item_spec) = catalogue_spec(p.item).expect("decomposition items are valid");
                    json!({
                        "factors": strings(&p.factors),
                        "item": p.item.to_string(),
                        "algebra": alg.to_string(),
                        "rep": render_rep(&item_spec),
                        "lengths": strings(catalogue_lengths(p.item)),
                    })
                })
                .collect();
            let result = json!({
                "algebra": spec.algebra().to_string(),
                "rep": render_rep(&spec),
                "parts": parts,
                "summary": d.to_string(),
            });
            Report::ok(result, vec![d.to_string()])
        }
        Err(DecomposeError::NotFaithful) => {
            let mut r = Report::fail(EXIT_REJECTED, ErrorInfo::new("not_faithful", "representation is not faithful"));
            r.result = Some(json!({"faithful": false, "reason": "not faithful"}));
            r
        }
        Err(DecomposeError::NotRectangular(f)) => {
            let mut r = Report::fail(
                EXIT_REJECTED,
                ErrorInfo {
                    failure: Some(f.code()),
                    ..ErrorInfo::new("not_rectangular", format!("not rectangular: {f}"))
                },
            );
            r.result = Some(json!({
                "faithful": true,
                "rectangular": false,
                "reason": "not rectangular",
                "failure": f.code(),
            }));
            r
        }
        Err(DecomposeError::Char(e)) => Report::fail(EXIT_USAGE, ErrorInfo::new("invalid", e.to_string())),
        Err(e @ DecomposeError::CatalogueMismatch(_)) => {
            Report::fail(EXIT_INTERNAL, ErrorInfo::new("internal", e.to_string()))
        }
    }
}

fn bounds(c: &Common, rank: usize, dim: u64) -> (usize, u64) {
    (c.max_rank.unwrap_or(rank), c.max_dim.unwrap_or(dim))
}

fn estimate_report(max_rank: usize, max_dim: u64) -> Report {
    match estimate_enumeration(max_rank, max_dim) {
        Ok(e) => Report::ok(
            json!({
                "dry_run": true,
                "max_rank": s(max_rank),
                "max_dim": s(max_dim),
                "algebras": s(e.algebras),
                "candidate_irreps": s(e.candidate_irreps),
            }),
            vec![format!("{} algebras, {} candidate irreducibles", e.algebras, e.candidate_irreps)],
        ),
        Err(e) => classify_failure(e),
    }
}

fn entry_json(e: &EnumeratedRep) -> Value {
    json!({
        "algebra": e.spec.algebra().to_string(),
        "rep": render_rep(&e.spec),
        "lengths": strings(&e.lengths),
        "constituents": s(e.spec.num_constituents()),
        "dimension": s(e.spec.dimension().unwrap_or_default()),
    })
}

fn cmd_enumerate(c: &Common) -> Report {
    let (max_rank, max_dim) = bounds(c, 2, 64);
    let single = match &c.algebra {
        Some(text) => match parse_algebra(text) {
            Ok(a) => Some(a),
            Err(e) => {
                return Report::fail(
                    EXIT_USAGE,
                    ErrorInfo {
                        line: Some(e.line),
                        column: Some(e.column),
                        field: Some("algebra"),
                        ..ErrorInfo::new("parse", e.message)
                    },
                )
            }
        },
        None => None,
    };
    if c.dry_run {
        let rank = single.as_ref().map_or(max_rank, SemisimpleAlgebra::rank);
        return estimate_report(rank, max_dim);
    }
    let found = match &single {
        Some(a) => enumerate_for_algebra(a, max_dim),
        None => enumerate_rectangular(max_rank, max_dim),
    };
    let found = match found {
        Ok(f) => f,
        Err(e) => return classify_failure(e),
    };
    let pretty = found
        .iter()
        .map(|e| format!("{:<12} {:<40} lengths {:?}", e.spec.algebra().to_string(), render_rep(&e.spec), e.lengths))
        .collect();
    let mut result = Map::new();
    result.insert("count".into(), s(found.len()));
    result.insert("entries".into(), Value::Array(found.iter().map(entry_json).collect()));
    result.insert("max_dim".into(), s(max_dim));
    match &single {
        Some(a) => result.insert("algebra".into(), s(a)),
        None => result.insert("max_rank".into(), s(max_rank)),
    };
    Report::ok(Value::Object(result), pretty)
}

fn cmd_verify_catalogue(c: &Common) -> Report {
    let (max_rank, max_dim) = bounds(c, 2, 64);
    if c.dry_run {
        return estimate_report(max_rank, max_dim);
    }
    let report = match verify_classification(max_rank, max_dim) {
        Ok(r) => r,
        Err(e) => return classify_failure(e),
    };
    let clean = report.is_clean();
    let verdict = if clean { "equal" } else { "mismatch" };
    let with_reason = |xs: &[(RepSpec, String)]| -> Value {
        Value::Array(
            xs.iter()
                .map(|(sp, why)| {
                    let mut v = spec_json(sp);
                    v["reason"] = json!(why);
                    v
                })
                .collect(),
        )
    };
    let result = json!({
        "verdict": verdict,
        "max_rank": s(max_rank),
        "max_dim": s(max_dim),
        "enumerated": s(report.enumerated.len()),
        "catalogue": s(report.catalogue_size),
        "missing_from_enumeration": Value::Array(report.missing_from_enumeration.iter().map(spec_json).collect()),
        "missing_from_catalogue": Value::Array(report.missing_from_catalogue.iter().map(spec_json).collect()),
        "decompose_failures": with_reason(&report.decompose_failures),
        "corollary_violations": with_reason(&report.corollary_violations),
    });
    let pretty = vec![format!(
        "{verdict}: {} enumerated, {} from the catalogue",
        report.enumerated.len(),
        report.catalogue_size
    )];
    let mut r = Report::ok(result, pretty);
    if !clean {
        r.code = EXIT_MISMATCH;
        r.error = Some(ErrorInfo::new("mismatch", "enumeration and catalogue disagree"));
    }
    r
}

/// Types surveyed when no algebra is given.
fn default_howe_types() -> Vec<SimpleType> {
    let mut out = Vec::new();
    for (f, ranks) in [
        (Family::A, 1..=4),
        (Family::B, 2..=4),
        (Family::C, 3..=3),
        (Family::D, 4..=4),
        (Family::G, 2..=2),
        (Family::F, 4..=4),
    ] {
        for r in ranks {
            out.push(SimpleType::new(f, r).expect("valid type"));
        }
    }
    out
}

fn cmd_verify_howe(c: &Common) -> Report {
    let max_dim = c.max_dim.unwrap_or(128);
    let types = match &c.algebra {
        Some(text) => match parse_algebra(text) {
            Ok(a) if a.num_factors() == 1 => vec![a.factors()[0]],
            Ok(_) => return usage("verify-howe needs a simple algebra"),
            Err(e) => {
                return Report::fail(
                    EXIT_USAGE,
                    ErrorInfo {
                        line: Some(e.line),
                        column: Some(e.column),
                        field: Some("algebra"),
                        ..ErrorInfo::new("parse", e.message)
                    },
                )
            }
        },
        None => default_howe_types(),
    };
    let mut all_ok = true;
    let mut entries = Vec::new();
    let mut pretty = Vec::new();
    for t in types {
        let rep = match verify_howe(t, max_dim) {
            Ok(r) => r,
            Err(e) => return classify_failure(e),
        };
        all_ok &= rep.ok();
        let flagged: Vec<Value> = rep
            .flagged()
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "weight": strings(e.highest_weight.coords().iter()),
                    "dimension": s(&e.dimension),
                })
            })
            .collect();
        let names = |ws: &[rectrep::Weight]| -> Value {
            strings(ws.iter().map(|w| rectrep::charcalc::name_irrep(t, w)))
        };
        pretty.push(format!(
            "{t}: {} multiplicity-free of {} surveyed, ok = {}",
            flagged.len(),
            rep.entries.len(),
            rep.ok()
        ));
        entries.push(json!({
            "type": t.to_string(),
            "surveyed": s(rep.entries.len()),
            "flagged": flagged,
            "unexpected": names(&rep.unexpected),
            "missing": names(&rep.missing),
            "ok": rep.ok(),
        }));
    }
    let result = json!({
        "verdict": if all_ok { "match" } else { "mismatch" },
        "max_dim": s(max_dim),
        "types": entries,
    });
    let mut r = Report::ok(result, pretty);
    if !all_ok {
        r.code = EXIT_MISMATCH;
        r.error = Some(ErrorInfo::new("mismatch", "multiplicity-free survey disagrees with the known list"));
    }
    r
}

fn record_json(r: &SubspaceRecord) -> Value {
    json!({
        "basis": Value::Array(r.basis.iter().map(strings).collect()),
        "long_roots": s(r.long_roots),
        "short_roots": s(r.short_roots),
        "standard": r.standard,
        "complement_of": r.complement_of.as_ref().map_or(Value::Null, strings),
    })
}

fn cmd_census(c: &Common) -> Report {
    let n = c.max_rank.unwrap_or(4);
    let planes = match roots_in_plane_census(n) {
        Ok(p) => p,
        Err(e) => return classify_failure(e),
    };
    let spaces = match long_roots_3space_census(n) {
        Ok(p) => p,
        Err(e) => return classify_failure(e),
    };
    let clean = planes.violations.is_empty() && spaces.violations.is_empty();
    let result = json!({
        "verdict": if clean { "confirmed" } else { "violations" },
        "n": s(n),
        "planes": {
            "distinct": s(planes.planes),
            "large": Value::Array(planes.large.iter().map(record_json).collect()),
            "violations": Value::Array(planes.violations.iter().map(record_json).collect()),
        },
        "spaces": {
            "distinct": s(spaces.spaces),
            "large": Value::Array(spaces.large.iter().map(record_json).collect()),
            "complements": Value::Array(spaces.complements.iter().map(record_json).collect()),
            "violations": Value::Array(spaces.violations.iter().map(record_json).collect()),
        },
    });
    let pretty = vec![
        format!("B{n}: {} planes, {} with at least 8 roots", planes.planes, planes.large.len()),
        format!(
            "B{n}: {} long-root 3-spaces, {} with at least 12 long roots",
            spaces.spaces,
            spaces.large.len()
        ),
    ];
    let mut r = Report::ok(result, pretty);
    if !clean {
        r.code = EXIT_MISMATCH;
        r.error = Some(ErrorInfo::new("mismatch", "census found violations"));
    }
    r
}

fn input_json(c: &Common) -> Value {
    let mut m = Map::new();
    if let Some(a) = &c.algebra {
        m.insert("algebra".into(), json!(a));
    }
    if let Some(r) = &c.rep {
        m.insert("rep".into(), json!(r));
    }
    if let Some(x) = c.max_rank {
        m.insert("max_rank".into(), s(x));
    }
    if let Some(x) = c.max_dim {
        m.insert("max_dim".into(), s(x));
    }
    if let Some(x) = c.seed {
        m.insert("seed".into(), s(x));
    }
    if c.dry_run {
        m.insert("dry_run".into(), json!(true));
    }
    Value::Object(m)
}

fn document(command: Option<&str>, input: Value, report: &Report) -> String {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), command.map_or(Value::Null, |c| json!(c)));
    m.insert("input".into(), input);
    if let Some(r) = &report.result {
        m.insert("result".into(), r.clone());
    }
    if let Some(e) = &report.error {
        m.insert("error".into(), e.to_json());
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(m)).expect("JSON values serialize");
    out.push('\n');
    out
}

/// Runs one command line (including the program name) without touching the
/// process's streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let report = Report::fail(EXIT_USAGE, ErrorInfo::new("usage", e.to_string().trim_end()));
            return Outcome {
                code: EXIT_USAGE,
                stdout: document(None, Value::Object(Map::new()), &report),
                stderr: String::new(),
            };
        }
    };
    let common = cli.command.common().clone();
    let outcome = catch_unwind(AssertUnwindSafe(|| match &cli.command {
        Command::Char(c) => cmd_char(c),
        Command::Rect(c) => cmd_rect(c),
        Command::Decompose(c) => cmd_decompose(c),
        Command::Enumerate(c) => cmd_enumerate(c),
        Command::VerifyCatalogue(c) => cmd_verify_catalogue(c),
        Command::VerifyHowe(c) => cmd_verify_howe(c),
        Command::Census(c) => cmd_census(c),
    }));
    let report = outcome.unwrap_or_else(|payload| {
        let message = payload
            .downcast_ref::<&str>()
            .map(|m| m.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "internal error".into());
        Report::fail(EXIT_INTERNAL, ErrorInfo::new("internal", message))
    });
    let stdout = if common.json {
        document(Some(cli.command.name()), input_json(&common), &report)
    } else {
        String::new()
    };
    let mut stderr = String::new();
    if common.pretty {
        for line in &report.pretty {
            stderr.push_str(line);
            stderr.push('\n');
        }
        if let Some(e) = &report.error {
            stderr.push_str(&format!("error ({}): {}\n", e.kind, e.message));
        }
    }
    Outcome {
        code: report.code,
        stdout,
        stderr,
    }
}
