//! Command-line front end. Every subcommand calls the library and wraps the
//! result in a versioned JSON envelope (or CSV / text).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chainseq::{certify_support, SupportCertificate, SupportReport};
use crate::error::{Error, Result};
use crate::hankel::{classify, MomentClassReport};
use crate::interval::Interval;
use crate::measures::{
    density_catalog, linear_combination_transform, subsequence_transform, verify_representation,
    Density, RepresentationReport,
};
use crate::orthopoly::{ops_from_recurrence, ops_zeros};
use crate::poly::Polynomial;
use crate::rational::{parse_rational, to_plain_string, Rational};
use crate::seqcore::{catalan_like, make_spec, CatalogId, Sequence, SigmaTauSpec};

pub const SCHEMA: &str = "momentlab/1";
pub const PRECISION_ENV: &str = "MOMENTLAB_PRECISION";
pub const DEFAULT_TOLERANCE: f64 = 1e-7;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_OPTION_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "momentlab",
    version,
    about = "Catalan-like sequences and their moment problems"
)]
pub struct CommandRequest {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a Catalan-like sequence.
    Gen(GenArgs),
    /// Hamburger / Stieltjes / Hausdorff tests on a sequence.
    Classify(ClassifyArgs),
    /// Certify [s-2sqrt(t), s+2sqrt(t)] for y(p,s;q,t).
    Support(SupportArgs),
    /// Compare a catalog sequence with the moments of its density.
    Verify(VerifyArgs),
    /// Affine subsequence or linear combination of a sequence.
    Transform(TransformArgs),
    /// Monic orthogonal polynomials and their zeros.
    Ops(OpsArgs),
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args, Clone, Default)]
pub struct SpecArgs {
    /// Catalog name, e.g. catalan, motzkin, delannoy.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub p: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub s: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub q: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub t: Option<Rational>,
}

impl SpecArgs {
    pub fn resolve(&self) -> Result<(String, SigmaTauSpec)> {
        let params = (&self.p, &self.s, &self.q, &self.t);
        match (&self.name, params) {
            (Some(name), (None, None, None, None)) => {
                let id: CatalogId = name.parse()?;
                Ok((id.name().to_string(), id.spec()))
            }
            (None, (Some(p), Some(s), Some(q), Some(t))) => {
                let label = format!(
                    "y({},{};{},{})",
                    to_plain_string(p),
                    to_plain_string(s),
                    to_plain_string(q),
                    to_plain_string(t)
                );
                Ok((
                    label,
                    make_spec(p.clone(), s.clone(), q.clone(), t.clone())?,
                ))
            }
            _ => Err(Error::InvalidInput(
                "give either --name or all of --p --s --q --t".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Largest index generated.
    #[arg(long, default_value_t = 20)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// JSON array (or CSV column) of exact values.
    #[arg(long, conflicts_with = "name")]
    pub input: Option<PathBuf>,
    /// Classify a generated catalog sequence instead.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    /// `a,b` with rationals or the tokens `s-2sqrt(t)`, `s+2sqrt(t)`.
    #[arg(long, allow_hyphen_values = true)]
    pub interval: Option<String>,
    /// `s` for resolving `sqrt` interval tokens.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub s: Option<Rational>,
    /// `t` for resolving `sqrt` interval tokens.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub t: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct SupportArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Number of recurrence indices checked.
    #[arg(long, default_value_t = 200)]
    pub check: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub name: String,
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    /// Relative tolerance; defaults to $MOMENTLAB_PRECISION, then 1e-7.
    #[arg(long, env = PRECISION_ENV)]
    pub tol: Option<f64>,
    /// Also write `x,w(x)` plot data for the density here.
    #[arg(long)]
    pub plot: Option<PathBuf>,
    #[arg(long, default_value_t = 400)]
    pub plot_points: usize,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, conflicts_with = "input")]
    pub name: Option<String>,
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Terms of the input sequence to generate.
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    /// Affine subsequence, `d=2,l=0`.
    #[arg(long, conflicts_with = "lincomb")]
    pub sub: Option<String>,
    /// Coefficients of g at a shift offset: `4,-1@1` is `4x - x^2`.
    #[arg(long, allow_hyphen_values = true)]
    pub lincomb: Option<String>,
    /// Interval for the `g >= 0` check; defaults to the catalog support.
    #[arg(long, allow_hyphen_values = true)]
    pub interval: Option<String>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub s: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub t: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct OpsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value_t = 6)]
    pub deg: usize,
    /// Include zeros (Jacobi eigenvalues) of each P_k.
    #[arg(long)]
    pub zeros: bool,
}

/// What a subcommand produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    /// The rendered artifact.
    pub artifact: String,
    /// Diagnostics for stderr.
    pub message: String,
}

/// `{"schema", "command", "passed", "result"}`.
pub fn envelope<T: Serialize>(command: &str, passed: bool, result: &T) -> Value {
    json!({ "schema": SCHEMA, "command": command, "passed": passed, "result": result })
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Parses one interval token: a rational, `s-2sqrt(t)` or `s+2sqrt(t)`.
enum Endpoint {
    Exact(Rational),
    Lower,
    Upper,
}

fn parse_endpoint(token: &str) -> Result<Endpoint> {
    let compact: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "s-2sqrt(t)" | "s-2*sqrt(t)" => Ok(Endpoint::Lower),
        "s+2sqrt(t)" | "s+2*sqrt(t)" => Ok(Endpoint::Upper),
        _ => Ok(Endpoint::Exact(parse_rational(&compact)?)),
    }
}

/// `a,b` into an exact interval; sqrt tokens need `s` and `t`.
pub fn parse_interval(text: &str, s: Option<&Rational>, t: Option<&Rational>) -> Result<Interval> {
    let parts: Vec<&str> = text.split(',').collect();
    let [lo, hi] = parts.as_slice() else {
        return Err(Error::InvalidInput(format!(
            "interval must be `a,b`, got `{text}`"
        )));
    };
    match (parse_endpoint(lo)?, parse_endpoint(hi)?) {
        (Endpoint::Exact(a), Endpoint::Exact(b)) => Interval::closed(a, b),
        (Endpoint::Lower, Endpoint::Upper) => match (s, t) {
            (Some(s), Some(t)) => Interval::support_of(s, t),
            _ => Err(Error::InvalidInput(
                "sqrt interval tokens need --s and --t".into(),
            )),
        },
        _ => Err(Error::InvalidInput(format!(
            "interval `{text}` mixes exact and sqrt endpoints or is reversed"
        ))),
    }
}

/// `d=2,l=0` into `(d, ℓ)`.
pub fn parse_sub(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidInput(format!("--sub expects `d=<int>,l=<int>`, got `{text}`"));
    let (mut d, mut l) = (None, Some(0));
    for part in text.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(bad)?;
        let value: usize = value.trim().parse().map_err(|_| bad())?;
        match key.trim() {
            "d" => d = Some(value),
            "l" => l = Some(value),
            _ => return Err(bad()),
        }
    }
    match (d, l) {
        (Some(d), Some(l)) if d >= 1 => Ok((d, l)),
        _ => Err(bad()),
    }
}

/// `c0,c1,...@k` into `x^k (c0 + c1 x + ...)`.
pub fn parse_lincomb(text: &str) -> Result<Polynomial> {
    let (coeffs, offset) = match text.split_once('@') {
        Some((c, k)) => (
            c,
            k.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad shift offset in `{text}`")))?,
        ),
        None => (text, 0),
    };
    let coeffs = coeffs
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    let g = Polynomial::new(coeffs).shift_up(offset);
    if g.is_zero() {
        return Err(Error::InvalidInput("g must be nonzero".into()));
    }
    Ok(g)
}

fn read_sequence(path: &PathBuf) -> Result<Sequence> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    if text.trim_start().starts_with(['[', '{']) {
        Sequence::from_json_str(&text, label)
    } else {
        Sequence::from_csv_str(&text, label)
    }
}

fn catalog_terms(name: &str, n: usize) -> Result<(CatalogId, Sequence)> {
    let id: CatalogId = name.parse()?;
    Ok((id, catalan_like(&id.spec(), n).with_label(id.name())))
}

/// Runs a request, writing `--output` if given. Errors in options or
/// inputs give exit 2; failed checks give exit 1 with the report intact.
pub fn run(request: &CommandRequest) -> Outcome {
    let result = match &request.command {
        Command::Gen(a) => run_gen(a, request.format),
        Command::Classify(a) => run_classify(a, request.format),
        Command::Support(a) => run_support(a, request.format),
        Command::Verify(a) => run_verify(a, request.format),
        Command::Transform(a) => run_transform(a, request.format),
        Command::Ops(a) => run_ops(a, request.format),
    };
    let (passed, artifact) = match result {
        Ok(v) => v,
        Err(e) => {
            return Outcome {
                code: EXIT_OPTION_ERROR,
                artifact: String::new(),
                message: format!("error: {e}\n"),
            }
        }
    };
    let code = if passed { EXIT_PASS } else { EXIT_FAILED_CHECK };
    if let Some(path) = &request.output {
        if let Err(e) = std::fs::write(path, &artifact) {
            return Outcome {
                code: EXIT_OPTION_ERROR,
                artifact: String::new(),
                message: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
        return Outcome {
            code,
            artifact: String::new(),
            message: String::new(),
        };
    }
    Outcome {
        code,
        artifact,
        message: String::new(),
    }
}

/// Parses `args` (including the program name) and runs.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CommandRequest::try_parse_from(args) {
        Ok(request) => run(&request),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_OPTION_ERROR
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    artifact: String::new(),
                    message: rendered,
                }
            } else {
                Outcome {
                    code,
                    artifact: rendered,
                    message: String::new(),
                }
            }
        }
    }
}

type Rendered = Result<(bool, String)>;

/// The `gen` artifact for a resolved spec.
pub fn render_gen(label: &str, spec: &SigmaTauSpec, n: usize, format: Format) -> String {
    let seq = catalan_like(spec, n).with_label(label);
    match format {
        Format::Json => to_json_text(&envelope(
            "gen",
            true,
            &json!({ "label": label, "spec": spec.to_string(), "n": n, "values": seq.to_json_array() }),
        )),
        Format::Csv => seq.to_csv(),
        Format::Text => {
            let vals: Vec<String> = seq.values().iter().map(to_plain_string).collect();
            format!("{label}: {}\n", vals.join(", "))
        }
    }
}

fn run_gen(a: &GenArgs, format: Format) -> Rendered {
    let (label, spec) = a.spec.resolve()?;
    Ok((true, render_gen(&label, &spec, a.n, format)))
}

/// The `classify` artifact; passes iff every requested test passes.
pub fn render_classify(report: &MomentClassReport, format: Format) -> (bool, String) {
    let passed = report.all_pass();
    let out = match format {
        Format::Json => to_json_text(&envelope("classify", passed, report)),
        Format::Csv => {
            let mut out = String::from("order,hankel,shifted,localizing,delta\n");
            for (o, d) in report.orders.iter().zip(&report.delta_values) {
                let loc = o.localizing.map(|s| status_name(&s)).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    o.order,
                    status_name(&o.hankel),
                    status_name(&o.shifted),
                    loc,
                    to_plain_string(d)
                );
            }
            out
        }
        Format::Text => {
            let verdict = |ok: bool| if ok { "pass" } else { "fail" };
            let mut out = format!("{} up to order {}\n", report.label, report.max_order);
            let _ = writeln!(out, "hamburger: {}", verdict(report.hamburger_pass()));
            let _ = writeln!(out, "stieltjes: {}", verdict(report.stieltjes_pass()));
            if let (Some(iv), Some(ok)) = (&report.hausdorff_interval, report.hausdorff_pass()) {
                let _ = writeln!(out, "hausdorff {iv}: {}", verdict(ok));
            }
            out
        }
    };
    (passed, out)
}

fn status_name<T: Serialize>(s: &T) -> String {
    serde_json::to_value(s)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn run_classify(a: &ClassifyArgs, format: Format) -> Rendered {
    let interval = a
        .interval
        .as_deref()
        .map(|t| parse_interval(t, a.s.as_ref(), a.t.as_ref()))
        .transpose()?;
    let needed = 2 * a.m + 3;
    let seq = match (&a.input, &a.name) {
        (Some(path), None) => read_sequence(path)?,
        (None, Some(name)) => catalog_terms(name, needed)?.1,
        _ => return Err(Error::InvalidInput("give --input or --name".into())),
    };
    let report = classify(&seq, a.m, interval.as_ref())?;
    Ok(render_classify(&report, format))
}

#[derive(Serialize)]
struct SupportOutput<'a> {
    certificate: &'a SupportCertificate,
    report: Option<&'a SupportReport>,
    hypotheses_failed: Vec<String>,
}

/// `support` artifact: the certificate always, the full check when the
/// hypotheses hold.
pub fn render_support(spec: &SigmaTauSpec, check: usize, format: Format) -> Result<(bool, String)> {
    let sh = spec
        .shorthand()
        .ok_or_else(|| Error::InvalidInput("support needs a (p,s;q,t) spec".into()))?;
    let certificate =
        SupportCertificate::evaluate(sh.p.clone(), sh.s.clone(), sh.q.clone(), sh.t.clone())?;
    let (report, failed) = match certify_support(spec, check) {
        Ok(r) => (Some(r), Vec::new()),
        Err(Error::HypothesisFailure { failed }) => (None, failed),
        Err(e) => return Err(e),
    };
    let passed = report.as_ref().is_some_and(|r| r.passed);
    let out = match format {
        Format::Json => to_json_text(&envelope(
            "support",
            passed,
            &SupportOutput {
                certificate: &certificate,
                report: report.as_ref(),
                hypotheses_failed: failed,
            },
        )),
        Format::Csv => format!(
            "lower,upper,stieltjes,certified\n{},{},{},{}\n",
            certificate.interval.lower_string(),
            certificate.interval.upper_string(),
            certificate.stieltjes_flag,
            passed
        ),
        Format::Text => {
            let mut out = format!("interval: {}\n", certificate.interval);
            let _ = writeln!(out, "stieltjes: {}", certificate.stieltjes_flag);
            let _ = writeln!(out, "certified: {passed}");
            for f in &failed {
                let _ = writeln!(out, "hypothesis: {f}");
            }
            out
        }
    };
    Ok((passed, out))
}

fn run_support(a: &SupportArgs, format: Format) -> Rendered {
    let (_, spec) = a.spec.resolve()?;
    render_support(&spec, a.check, format)
}

/// `verify` artifact for a report.
pub fn render_representation(
    command: &str,
    report: &RepresentationReport,
    format: Format,
) -> (bool, String) {
    let out = match format {
        Format::Json => to_json_text(&envelope(command, report.passed, report)),
        Format::Csv => {
            let mut out = String::from("n,target,computed,abs_error,rel_error\n");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{:e},{:e}",
                    r.n,
                    to_plain_string(&r.target_exact),
                    r.computed,
                    r.abs_error,
                    r.rel_error
                );
            }
            out
        }
        Format::Text => format!(
            "{} vs {}: max relative error {:e} (tol {:e}) {}\n",
            report.label,
            report.density.formula,
            report.max_rel_error,
            report.tol,
            if report.passed { "pass" } else { "fail" }
        ),
    };
    (report.passed, out)
}

fn tolerance(tol: Option<f64>) -> Result<f64> {
    let t = tol.unwrap_or(DEFAULT_TOLERANCE);
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {t}"
        )))
    }
}

fn write_plot(dens: &Density, path: &PathBuf, points: usize) -> Result<()> {
    std::fs::write(path, dens.to_csv(points))
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn run_verify(a: &VerifyArgs, format: Format) -> Rendered {
    let tol = tolerance(a.tol)?;
    let dens = density_catalog(&a.name)?;
    let (_, seq) = catalog_terms(&a.name, a.n)?;
    let report = verify_representation(&seq, &dens, a.n, tol)?;
    if let Some(path) = &a.plot {
        write_plot(&dens, path, a.plot_points)?;
    }
    Ok(render_representation("verify", &report, format))
}

fn run_transform(a: &TransformArgs, format: Format) -> Rendered {
    let (catalog, seq) = match (&a.name, &a.input) {
        (Some(name), None) => {
            let (id, seq) = catalog_terms(name, a.n)?;
            (Some(id), seq)
        }
        (None, Some(path)) => (None, read_sequence(path)?),
        _ => return Err(Error::InvalidInput("give --name or --input".into())),
    };
    let interval = match (&a.interval, catalog) {
        (Some(text), _) => Some(parse_interval(text, a.s.as_ref(), a.t.as_ref())?),
        (None, Some(id)) => Some(id.published_support()),
        (None, None) => None,
    };
    let sequence;
    let detail: Value;
    match (&a.sub, &a.lincomb) {
        (Some(sub), None) => {
            let (d, l) = parse_sub(sub)?;
            let s = subsequence_transform(&seq, d, l, interval.as_ref())?;
            detail = json!({ "kind": "subsequence", "d": d, "l": l, "support": s.support });
            sequence = s.sequence;
        }
        (None, Some(text)) => {
            let g = parse_lincomb(text)?;
            let iv = interval.clone().ok_or_else(|| {
                Error::InvalidInput("--lincomb on --input needs --interval".into())
            })?;
            let lc = linear_combination_transform(&seq, &g, &iv, None)?;
            detail = json!({ "kind": "linear_combination", "g": lc.g, "g_display": lc.g.to_string(), "interval": iv, "check": lc.check });
            sequence = lc.sequence;
        }
        _ => {
            return Err(Error::InvalidInput(
                "give exactly one of --sub or --lincomb".into(),
            ))
        }
    }
    let out = match format {
        Format::Json => to_json_text(&envelope(
            "transform",
            true,
            &json!({ "input": seq.label(), "transform": detail, "label": sequence.label(), "values": sequence.to_json_array() }),
        )),
        Format::Csv => sequence.to_csv(),
        Format::Text => {
            let vals: Vec<String> = sequence.values().iter().map(to_plain_string).collect();
            format!("{}: {}\n", sequence.label(), vals.join(", "))
        }
    };
    Ok((true, out))
}

/// `ops` artifact: `P_0..P_deg`, optionally with zeros.
pub fn render_ops(
    label: &str,
    spec: &SigmaTauSpec,
    deg: usize,
    zeros: bool,
    format: Format,
) -> Result<String> {
    let polys = ops_from_recurrence(spec, deg);
    let zero_sets: Option<Vec<Vec<f64>>> = if zeros {
        Some(
            (1..=deg)
                .map(|k| ops_zeros(spec, k))
                .collect::<Result<_>>()?,
        )
    } else {
        None
    };
    Ok(match format {
        Format::Json => {
            let items: Vec<Value> = polys
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    let mut v = json!({ "degree": k, "coefficients": p, "display": p.to_string() });
                    if let Some(z) = &zero_sets {
                        v["zeros"] = json!(if k == 0 { Vec::new() } else { z[k - 1].clone() });
                    }
                    v
                })
                .collect();
            to_json_text(&envelope(
                "ops",
                true,
                &json!({ "label": label, "spec": spec.to_string(), "polynomials": items }),
            ))
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficients,zeros\n");
            for (k, p) in polys.iter().enumerate() {
                let coeffs: Vec<String> = p.coeffs().iter().map(to_plain_string).collect();
                let z = match (&zero_sets, k) {
                    (Some(z), k) if k > 0 => z[k - 1]
                        .iter()
                        .map(f64::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                    _ => String::new(),
                };
                let _ = writeln!(out, "{k},{},{z}", coeffs.join(" "));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, p) in polys.iter().enumerate() {
                let _ = write!(out, "P_{k} = {p}");
                if let (Some(z), true) = (&zero_sets, k > 0) {
                    let _ = write!(out, "  zeros {:?}", z[k - 1]);
                }
                out.push('\n');
            }
            out
        }
    })
}

fn run_ops(a: &OpsArgs, format: Format) -> Rendered {
    let (label, spec) = a.spec.resolve()?;
    Ok((true, render_ops(&label, &spec, a.deg, a.zeros, format)?))
}
