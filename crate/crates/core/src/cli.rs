//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it with in-memory streams.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::angle::{angle_poly, AngleOutcome, CaseUsed};
use crate::classify::{classify_case, CaseKind};
use crate::complexrep::{check_curve, to_complex};
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, ratio, Rational};
use crate::orientation::{Orientation, OrientationFilter};
use crate::parse::parse_curve;
use crate::poly::{realroots::isolate_real_roots, MultiPoly, RealNumber};
use crate::solver::{decide_similar, ComplexNumber, Decision, Options, Similarity};

/// Digits after the decimal point in approximations.
const PLACES: usize = 12;
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "curvesim", version, about = "Exact similarity detection for implicit plane algebraic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum OrientationArg {
    Preserving,
    Reversing,
    #[default]
    Both,
}

impl From<OrientationArg> for OrientationFilter {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::Preserving => OrientationFilter::Preserving,
            OrientationArg::Reversing => OrientationFilter::Reversing,
            OrientationArg::Both => OrientationFilter::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find every similarity mapping the curve F = 0 onto G = 0.
    Check {
        /// First curve, inline or as @file (@- reads stdin).
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Second curve, inline or as @file.
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t)]
        orientation: OrientationArg,
        /// Print a JSON document instead of text.
        #[arg(long)]
        json: bool,
        /// Also sample N points on each curve (approximate, for plotting).
        #[arg(long, value_name = "N")]
        emit_points: Option<usize>,
        /// Include case analysis details and timings.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Print the coefficients of the complex representation of a curve.
    Complexify {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the rotation-angle polynomial of two curves.
    AnglePoly {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t)]
        orientation: OrientationArg,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the command line and returns the exit code: 0 similar (or success),
/// 1 not similar, 2 input or precondition error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check { f, g, orientation, json, emit_points, diagnostics } => {
            read_pair(&f, &g, stdin).and_then(|(f, g)| cmd_check(&f, &g, orientation.into(), json, emit_points, diagnostics))
        }
        Command::Complexify { f, json } => read_input(&f, stdin).and_then(|f| cmd_complexify(&f, json).map(|s| (s, 0))),
        Command::AnglePoly { f, g, orientation, json } => {
            read_pair(&f, &g, stdin).and_then(|(f, g)| cmd_angle_poly(&f, &g, orientation.into(), json).map(|s| (s, 0)))
        }
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_input(arg: &str, stdin: &mut dyn Read) -> Result<MultiPoly<Rational>> {
    let text = match arg.strip_prefix('@') {
        Some("-") => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
            s
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read `{path}`: {e}")))?,
        None => arg.to_string(),
    };
    parse_curve(&text)
}

fn read_pair(f: &str, g: &str, stdin: &mut dyn Read) -> Result<(MultiPoly<Rational>, MultiPoly<Rational>)> {
    Ok((read_input(f, stdin)?, read_input(g, stdin)?))
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum RealJson {
    Rational(String),
    Algebraic { defining_poly: String, interval_lo: String, interval_hi: String },
}

#[derive(Serialize)]
struct RealValue {
    #[serde(flatten)]
    exact: RealJson,
    approx: String,
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum ComplexJson {
    Rational(String),
    Algebraic { re: RealJson, im: RealJson },
}

#[derive(Serialize)]
struct ComplexValue {
    #[serde(flatten)]
    exact: ComplexJson,
    approx: String,
}

fn real_json(x: &RealNumber) -> RealJson {
    match x {
        RealNumber::Rational(q) => RealJson::Rational(fmt_rational(q)),
        RealNumber::Algebraic(a) => RealJson::Algebraic {
            defining_poly: a.defining().to_string(),
            interval_lo: fmt_rational(a.lo()),
            interval_hi: fmt_rational(a.hi()),
        },
    }
}

fn real_value(x: &RealNumber) -> RealValue {
    RealValue { exact: real_json(x), approx: x.approx(PLACES) }
}

fn complex_approx(z: &ComplexNumber) -> String {
    let im = z.im.approx(PLACES);
    match im.strip_prefix('-') {
        Some(abs) => format!("{} - {} i", z.re.approx(PLACES), abs),
        None => format!("{} + {} i", z.re.approx(PLACES), im),
    }
}

fn complex_value(z: &ComplexNumber) -> ComplexValue {
    let exact = match z.as_gaussian() {
        Some(g) => ComplexJson::Rational(g.to_string()),
        None => ComplexJson::Algebraic { re: real_json(&z.re), im: real_json(&z.im) },
    };
    ComplexValue { exact, approx: complex_approx(z) }
}

#[derive(Serialize)]
struct SimilarityJson {
    orientation: Orientation,
    a: ComplexValue,
    b: ComplexValue,
    lambda: ComplexValue,
    ratio_squared: RealValue,
}

impl From<&Similarity> for SimilarityJson {
    fn from(s: &Similarity) -> Self {
        SimilarityJson {
            orientation: s.orientation,
            a: complex_value(&s.a),
            b: complex_value(&s.b),
            lambda: complex_value(&s.lambda),
            ratio_squared: real_value(&s.scale_squared),
        }
    }
}

#[derive(Serialize)]
struct BranchJson {
    branch: crate::simsystem::Branch,
    solutions: usize,
}

#[derive(Serialize)]
struct OrientationJson {
    orientation: Orientation,
    angle_case: Option<CaseUsed>,
    angle_poly: Option<String>,
    translation: Option<String>,
    branches: Vec<BranchJson>,
    rejected: usize,
    note: Option<String>,
}

#[derive(Serialize)]
struct DiagnosticsJson {
    case: Option<CaseKind>,
    witness_j: Option<u32>,
    orientations: Vec<OrientationJson>,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct PointsJson {
    f: Vec<[String; 2]>,
    g: Vec<[String; 2]>,
}

#[derive(Serialize)]
struct CheckDocument {
    schema_version: u32,
    verdict: &'static str,
    reason: Option<String>,
    case: Option<CaseKind>,
    similarities: Vec<SimilarityJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnostics: Option<DiagnosticsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<PointsJson>,
}

fn diagnostics_json(d: &Decision, elapsed_ms: u128) -> DiagnosticsJson {
    DiagnosticsJson {
        case: d.case,
        witness_j: d.witness_j,
        orientations: d
            .reports
            .iter()
            .map(|r| OrientationJson {
                orientation: r.orientation,
                angle_case: r.angle_case,
                angle_poly: r.angle_poly.clone(),
                translation: r.translation.as_ref().map(|k| k.to_string()),
                branches: r.branches.iter().map(|&(branch, solutions)| BranchJson { branch, solutions }).collect(),
                rejected: r.rejected,
                note: r.note.clone(),
            })
            .collect(),
        elapsed_ms,
    }
}

/// Up to `n` points of the real curve, on vertical lines through evenly
/// spaced rational abscissae in `[-4, 4]`. The abscissa is exact, the
/// ordinate an approximation.
pub fn sample_points(f: &MultiPoly<Rational>, n: usize) -> Vec<[String; 2]> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let steps = (2 * n).max(2) as i64;
    for k in 0..=steps {
        let x = ratio(-4, 1) + ratio(8 * k, steps);
        let Ok(line) = f.substitute("x", &MultiPoly::constant_in(&["x", "y"], x.clone())) else { continue };
        let Ok(p) = line.to_univariate("y") else { continue };
        if p.is_zero() {
            continue;
        }
        for y in isolate_real_roots(&p).unwrap_or_default() {
            out.push([fmt_rational(&x), y.approx(PLACES)]);
            if out.len() == n {
                return out;
            }
        }
    }
    out
}

fn check_json(d: &Decision, diagnostics: Option<DiagnosticsJson>, points: Option<PointsJson>) -> String {
    let doc = CheckDocument {
        schema_version: SCHEMA_VERSION,
        verdict: if d.similar { "similar" } else { "not-similar" },
        reason: d.reason.clone(),
        case: d.case,
        similarities: d.similarities.iter().map(SimilarityJson::from).collect(),
        diagnostics,
        points,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
    s.push('\n');
    s
}

/// The JSON document printed by `check --json` for a decision.
pub fn decision_json(d: &Decision) -> String {
    check_json(d, None, None)
}

fn cmd_check(
    f: &MultiPoly<Rational>,
    g: &MultiPoly<Rational>,
    filter: OrientationFilter,
    json: bool,
    emit_points: Option<usize>,
    diagnostics: bool,
) -> Result<(String, i32)> {
    let start = Instant::now();
    let d = decide_similar(f, g, &Options { orientation: filter })?;
    let elapsed_ms = start.elapsed().as_millis();
    let code = if d.similar { 0 } else { 1 };
    let points = emit_points.map(|n| PointsJson { f: sample_points(f, n), g: sample_points(g, n) });
    if json {
        let diag = diagnostics.then(|| diagnostics_json(&d, elapsed_ms));
        return Ok((check_json(&d, diag, points), code));
    }
    let mut s = String::new();
    if d.similar {
        let k = d.similarities.len();
        s.push_str(&format!("similar: {k} {}\n", if k == 1 { "similarity" } else { "similarities" }));
        for h in &d.similarities {
            let map = match h.orientation {
                Orientation::Preserving => "z -> a z + b",
                Orientation::Reversing => "z -> a conj(z) + b",
            };
            s.push_str(&format!(
                "{} ({map}): a = {}, b = {}, lambda = {}, ratio^2 = {}\n",
                h.orientation,
                h.a,
                h.b,
                h.lambda,
                real_text(&h.scale_squared)
            ));
        }
    } else {
        s.push_str(&format!("not similar: {}\n", d.reason.as_deref().unwrap_or("no similarity found")));
    }
    if diagnostics {
        s.push_str(&format!("case: {}\n", d.case.map(|c| format!("{c:?}").to_lowercase()).unwrap_or_else(|| "-".into())));
        if let Some(j) = d.witness_j {
            s.push_str(&format!("witness j: {j}\n"));
        }
        for r in &d.reports {
            s.push_str(&format!("{}:\n", r.orientation));
            if let Some(p) = &r.angle_poly {
                s.push_str(&format!("  angle polynomial ({:?}): {p}\n", r.angle_case.expect("set with the polynomial")));
            }
            if let Some(k) = &r.translation {
                s.push_str(&format!("  translation: {k}\n"));
            }
            for (b, n) in &r.branches {
                s.push_str(&format!("  {b:?} branch: {n} real solutions\n"));
            }
            if r.rejected > 0 {
                s.push_str(&format!("  rejected by verification: {}\n", r.rejected));
            }
            if let Some(note) = &r.note {
                s.push_str(&format!("  {note}\n"));
            }
        }
        s.push_str(&format!("elapsed: {elapsed_ms} ms\n"));
    }
    if let Some(p) = points {
        for (name, pts) in [("f", &p.f), ("g", &p.g)] {
            s.push_str(&format!("points on {name}:\n"));
            for [x, y] in pts {
                s.push_str(&format!("  {x} {y}\n"));
            }
        }
    }
    Ok((s, code))
}

fn real_text(x: &RealNumber) -> String {
    match x {
        RealNumber::Rational(q) => fmt_rational(q),
        RealNumber::Algebraic(_) => format!("~ {}", x.approx(PLACES)),
    }
}

#[derive(Serialize)]
struct CoefficientJson {
    s: u32,
    t: u32,
    value: String,
}

#[derive(Serialize)]
struct ComplexifyDocument {
    schema_version: u32,
    degree: u32,
    coefficients: Vec<CoefficientJson>,
}

fn cmd_complexify(f: &MultiPoly<Rational>, json: bool) -> Result<String> {
    // Circles are fine here; only the similarity problem excludes them.
    match check_curve(f) {
        Ok(()) | Err(Error::Circle) => {}
        Err(e) => return Err(e),
    }
    let c = crate::complexrep::complexify(f);
    let mut entries: Vec<(u32, u32, String)> = c.entries().map(|(&(s, t), v)| (s, t, v.to_string())).collect();
    // Highest total degree first, then by decreasing power of z.
    entries.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
    if json {
        let doc = ComplexifyDocument {
            schema_version: SCHEMA_VERSION,
            degree: c.degree(),
            coefficients: entries.into_iter().map(|(s, t, value)| CoefficientJson { s, t, value }).collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
        s.push('\n');
        return Ok(s);
    }
    Ok(entries.into_iter().map(|(s, t, v)| format!("({s},{t}): {v}\n")).collect())
}

#[derive(Serialize)]
struct AngleJson {
    orientation: Orientation,
    case_used: CaseUsed,
    outcome: &'static str,
    angle_poly: Option<String>,
    cos_zero_branch: bool,
}

#[derive(Serialize)]
struct AngleDocument {
    schema_version: u32,
    results: Vec<AngleJson>,
}

fn cmd_angle_poly(f: &MultiPoly<Rational>, g: &MultiPoly<Rational>, filter: OrientationFilter, json: bool) -> Result<String> {
    let fc = to_complex(f)?;
    let gc = to_complex(g)?;
    if fc.degree() != gc.degree() {
        return Err(Error::InvalidInput(format!("degree mismatch: {} vs {}", fc.degree(), gc.degree())));
    }
    if classify_case(&gc).kind == CaseKind::Special || classify_case(&fc).kind == CaseKind::Special {
        return Err(Error::InvalidInput("angle polynomial not used in special case".into()));
    }
    let n = gc.degree();
    let (f_n, g_n) = (f.homogeneous_part(n), g.homogeneous_part(n));
    let mut results = Vec::new();
    for &o in filter.orientations() {
        let a = angle_poly(&f_n, &g_n, o)?;
        let (outcome, poly) = match &a.outcome {
            AngleOutcome::Poly(_) => ("polynomial", a.reduced().map(|p| p.to_string())),
            AngleOutcome::IdenticallyZero => ("identically zero", None),
            AngleOutcome::Incompatible => ("incompatible", None),
        };
        results.push(AngleJson {
            orientation: o,
            case_used: a.case_used,
            outcome,
            angle_poly: poly,
            cos_zero_branch: a.cos_zero_must_branch,
        });
    }
    if json {
        let mut s = serde_json::to_string_pretty(&AngleDocument { schema_version: SCHEMA_VERSION, results }).expect("serialisable");
        s.push('\n');
        return Ok(s);
    }
    let mut s = String::new();
    for r in results {
        let body = r.angle_poly.map(|p| format!("P(t) = {p}")).unwrap_or_else(|| r.outcome.to_string());
        s.push_str(&format!("{} ({:?}): {body}\n", r.orientation, r.case_used));
    }
    Ok(s)
}
