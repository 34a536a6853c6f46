//! The `braidkit` command line.
//!
//! Every command builds a JSON value; `--format table` renders that same value as text.

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::braided_space::{BracketMap, BraidedSpace};
use crate::error::{Error, Result};
use crate::io::{self, GeneratorParams, Input};
use crate::quotients::{enveloping_algebra, iota_report, nichols_algebra, symmetric_algebra, theta_map};
use crate::scalars::{q_binom, FieldSpec, Scalar};
use crate::tensor_engine::{graded_primitives, FilteredBialgebra, TruncatedBraidedBialgebra, TruncatedTensorBialgebra};
use crate::theorems::{self, TheoremReport, Verdict};

#[derive(Parser, Debug)]
#[command(name = "braidkit", version, about = "Exact computations with braided vector spaces and braided bialgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub job: JobArgs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the braid equation and every bialgebra axiom up to the cutoff.
    Validate,
    /// Minimal polynomial and Hecke marks of the braiding.
    Hecke,
    /// Gaussian binomial coefficient `[n k]_λ`.
    Qbinom {
        #[arg(value_name = "N")]
        top: u32,
        #[arg(value_name = "K")]
        k: u32,
    },
    /// Dimensions of the braided symmetric algebra.
    Sym,
    /// Dimensions of the Nichols algebra.
    Nichols,
    /// Enveloping algebra of a braided bracket.
    Env,
    /// Primitive elements of a truncated bialgebra.
    Primitives,
    /// Run a theorem verifier, or `all` for the bundled examples.
    Verify { theorem: String },
    /// Write a truncated bialgebra as JSON.
    Export,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Tensor,
    Sym,
    Nichols,
    Env,
}

#[derive(Args, Debug, Clone)]
pub struct JobArgs {
    /// JSON file holding a braided space or a truncated bialgebra.
    #[arg(long, global = true, conflicts_with = "gen")]
    pub input: Option<String>,
    /// Built-in braiding: flip, dj_hecke, scalar or diagonal.
    #[arg(long, global = true)]
    pub gen: Option<String>,
    #[arg(long = "n", global = true)]
    pub n: Option<usize>,
    #[arg(long = "q", global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long = "mu", global = true, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Rows separated by `;`, entries by `,`.
    #[arg(long = "q-matrix", global = true, allow_hyphen_values = true)]
    pub q_matrix: Option<String>,
    /// Degree cutoff.
    #[arg(short = 'N', long = "cutoff", global = true, default_value_t = 3)]
    pub cutoff: usize,
    /// Closure cutoff for enveloping algebras; defaults to N + 2.
    #[arg(short = 'M', long = "closure", global = true)]
    pub closure: Option<usize>,
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// `zero`, `sl2`, or n³ comma-separated scalars.
    #[arg(long, global = true)]
    pub bracket: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub algebra: Option<Algebra>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// What a run printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    value: Value,
    ok: bool,
    failure: String,
}

impl Reply {
    fn ok(value: Value) -> Self {
        Reply {
            value,
            ok: true,
            failure: String::new(),
        }
    }

    fn checked(value: Value, ok: bool, failure: impl Into<String>) -> Self {
        Reply {
            value,
            ok,
            failure: failure.into(),
        }
    }
}

fn error_object(kind: &str, message: &str) -> String {
    json!({ "error": kind, "message": message }).to_string() + "\n"
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: error_object("usage", e.to_string().trim()),
                },
            };
        }
    };
    match execute(&cli) {
        Ok(reply) => {
            let stdout = match cli.job.format {
                Format::Json => serde_json::to_string_pretty(&reply.value).expect("serializable") + "\n",
                Format::Table => render_table(&cli.command, &reply.value),
            };
            let (code, stderr) = if reply.ok {
                (0, String::new())
            } else {
                (1, error_object("check_failed", &reply.failure))
            };
            Outcome { code, stdout, stderr }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: error_object(e.kind(), &e.to_string()),
        },
    }
}

struct Job<'a> {
    args: &'a JobArgs,
}

impl<'a> Job<'a> {
    fn closure(&self) -> Result<usize> {
        let m = self.args.closure.unwrap_or(self.args.cutoff + 2);
        if m < self.args.cutoff {
            return Err(Error::Precondition(format!("closure cutoff M = {m} is below N = {}", self.args.cutoff)));
        }
        Ok(m)
    }

    fn explicit_field(&self) -> Result<Option<FieldSpec>> {
        self.args.field.as_deref().map(FieldSpec::parse).transpose()
    }

    fn input(&self, check: bool) -> Result<Input> {
        if let Some(path) = &self.args.input {
            let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            let input = io::parse_input_with(&text, check)?;
            let field = match &input {
                Input::Space(s) => s.space.field(),
                Input::Bialgebra(b) => b.field(),
            };
            if let Some(f) = self.explicit_field()? {
                if f != field {
                    return Err(Error::FieldMismatch {
                        left: f.to_string(),
                        right: field.to_string(),
                    });
                }
            }
            return Ok(input);
        }
        let name = self
            .args
            .gen
            .as_deref()
            .ok_or_else(|| Error::Parse("one of --input or --gen is required".into()))?;
        let field = self.explicit_field()?.unwrap_or(FieldSpec::Rationals);
        let params = GeneratorParams {
            n: self.args.n,
            q: self.args.q.clone(),
            mu: self.args.mu.clone(),
            q_matrix: self.args.q_matrix.clone(),
        };
        let space = io::generate(name, field, &params)?;
        Ok(Input::Space(io::SpaceInput { space, bracket: None }))
    }

    fn space(&self) -> Result<(BraidedSpace, Option<BracketMap>)> {
        match self.input(true)? {
            Input::Space(s) => {
                let bracket = match &self.args.bracket {
                    Some(text) => Some(io::parse_bracket(text, s.space.field(), s.space.dim())?),
                    None => s.bracket,
                };
                Ok((s.space, bracket))
            }
            Input::Bialgebra(_) => Err(Error::Precondition("this command needs a braided space, not a bialgebra".into())),
        }
    }

    fn lambda(&self, space: &BraidedSpace) -> Result<Scalar> {
        match &self.args.lambda {
            Some(text) => space.field().parse_scalar(text),
            None => io::default_mark(space),
        }
    }

    fn user_lambda(&self, field: FieldSpec) -> Result<Option<Scalar>> {
        self.args.lambda.as_deref().map(|s| field.parse_scalar(s)).transpose()
    }

    /// The algebra selected by `--algebra` (default `fallback`), or the input bialgebra.
    fn algebra(&self, fallback: Algebra) -> Result<(String, FilteredBialgebra)> {
        let n = self.args.cutoff;
        if let Input::Bialgebra(b) = self.input(true)? {
            let b = if b.cutoff() > n { b.truncate(n)? } else { b };
            return Ok(("input".into(), FilteredBialgebra::from_graded(&b)));
        }
        let (space, bracket) = self.space()?;
        let graded = |b: &TruncatedBraidedBialgebra| FilteredBialgebra::from_graded(b);
        match self.args.algebra.unwrap_or(fallback) {
            Algebra::Tensor => Ok(("T".into(), graded(&TruncatedTensorBialgebra::new(&space, n).to_bialgebra()))),
            Algebra::Sym => Ok(("S".into(), graded(symmetric_algebra(&space, &self.lambda(&space)?, n)?.bialgebra()))),
            Algebra::Nichols => Ok(("B".into(), graded(nichols_algebra(&space, n)?.bialgebra()))),
            Algebra::Env => {
                let b = bracket.unwrap_or_else(|| BracketMap::zero(space.field(), space.dim()));
                let u = enveloping_algebra(&space, &self.lambda(&space)?, &b, n, self.closure()?)?;
                Ok(("U".into(), u.to_filtered_bialgebra()))
            }
        }
    }

    fn graded_algebra(&self, fallback: Algebra) -> Result<TruncatedBraidedBialgebra> {
        let n = self.args.cutoff;
        if let Input::Bialgebra(b) = self.input(true)? {
            return if b.cutoff() > n { b.truncate(n) } else { Ok(b) };
        }
        let (space, _) = self.space()?;
        match self.args.algebra.unwrap_or(fallback) {
            Algebra::Tensor => Ok(TruncatedTensorBialgebra::new(&space, n).to_bialgebra()),
            Algebra::Sym => Ok(symmetric_algebra(&space, &self.lambda(&space)?, n)?.bialgebra().clone()),
            Algebra::Nichols => Ok(nichols_algebra(&space, n)?.bialgebra().clone()),
            Algebra::Env => Err(Error::Unsupported("the enveloping algebra is filtered, not graded".into())),
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn validation_json(report: &crate::tensor_engine::ValidationReport) -> Value {
    let failures: Vec<Value> = report.failures().map(to_value).collect();
    json!({
        "all_pass": report.all_pass(),
        "axioms_checked": report.entries.len(),
        "instances": report.entries.iter().map(|e| e.instances).sum::<usize>(),
        "failures": failures,
    })
}

fn execute(cli: &Cli) -> Result<Reply> {
    let job = Job { args: &cli.job };
    let n = cli.job.cutoff;
    match &cli.command {
        Command::Validate => cmd_validate(&job),
        Command::Hecke => {
            let (space, _) = job.space()?;
            let report = space.hecke_analysis();
            let mut value = io::hecke_json(&report);
            value["field"] = json!(space.field().to_string());
            value["dim"] = json!(space.dim());
            Ok(Reply::ok(value))
        }
        Command::Qbinom { top, k } => {
            let field = job.explicit_field()?.unwrap_or(FieldSpec::Rationals);
            let text = cli
                .job
                .lambda
                .as_deref()
                .ok_or_else(|| Error::Parse("qbinom needs --lambda".into()))?;
            let lambda = field.parse_scalar(text)?;
            let value = q_binom(*top, *k, &lambda)?;
            Ok(Reply::ok(json!({
                "field": field.to_string(),
                "n": top,
                "k": k,
                "lambda": lambda.to_string(),
                "value": value.to_string(),
            })))
        }
        Command::Sym => {
            let (space, _) = job.space()?;
            let lambda = job.lambda(&space)?;
            let s = symmetric_algebra(&space, &lambda, n)?;
            let mut value = to_value(&s.report());
            value["lambda"] = json!(lambda.to_string());
            value["cutoff"] = json!(n);
            Ok(Reply::ok(value))
        }
        Command::Nichols => {
            let (space, _) = job.space()?;
            let b = nichols_algebra(&space, n)?;
            let mut value = to_value(&b.report());
            value["cutoff"] = json!(n);
            Ok(Reply::ok(value))
        }
        Command::Env => cmd_env(&job),
        Command::Primitives => {
            let a = job.graded_algebra(Algebra::Sym)?;
            let graded = graded_primitives(&a).dims();
            let total = FilteredBialgebra::from_graded(&a).primitives().dim();
            Ok(Reply::ok(json!({
                "dims": a.dims(),
                "graded_primitives": graded,
                "primitives": total,
                "strict": total == a.dim(1),
                "cutoff": a.cutoff(),
            })))
        }
        Command::Verify { theorem } => cmd_verify(&job, theorem),
        Command::Export => {
            let a = job.graded_algebra(Algebra::Tensor)?;
            Ok(Reply::ok(to_value(&a.to_json())))
        }
    }
}

fn cmd_validate(job: &Job) -> Result<Reply> {
    let n = job.args.cutoff;
    match job.input(false)? {
        Input::Bialgebra(b) => {
            let report = b.validate();
            let ok = report.all_pass();
            Ok(Reply::checked(
                json!({ "object": "bialgebra", "dims": b.dims(), "axioms": validation_json(&report) }),
                ok,
                "bialgebra axioms fail",
            ))
        }
        Input::Space(s) => {
            let space = s.space;
            let braid = space.check_braid_equation();
            let mut value = json!({
                "object": "space",
                "field": space.field().to_string(),
                "dim": space.dim(),
                "braid_equation": to_value(&braid),
            });
            if let Some(w) = braid.witness {
                return Ok(Reply::checked(
                    value,
                    false,
                    format!("braid equation fails on basis vector {w}"),
                ));
            }
            let report = TruncatedTensorBialgebra::new(&space, n).to_bialgebra().validate();
            let mut ok = report.all_pass();
            value["tensor_axioms"] = validation_json(&report);
            value["cutoff"] = json!(n);
            let bracket = match &job.args.bracket {
                Some(text) => Some(io::parse_bracket(text, space.field(), space.dim())?),
                None => s.bracket,
            };
            if let Some(b) = bracket {
                let compat = space.check_bracket_compat(&b);
                ok &= compat.holds;
                value["bracket_compatibility"] = to_value(&compat);
            }
            Ok(Reply::checked(value, ok, "structural checks fail"))
        }
    }
}

fn cmd_env(job: &Job) -> Result<Reply> {
    let (space, bracket) = job.space()?;
    let lambda = job.lambda(&space)?;
    let b = bracket.unwrap_or_else(|| BracketMap::zero(space.field(), space.dim()));
    let u = enveloping_algebra(&space, &lambda, &b, job.args.cutoff, job.closure()?)?;
    let mut value = to_value(&u.report());
    value["lambda"] = json!(lambda.to_string());
    value["cutoff"] = json!(u.cutoff());
    value["closure"] = json!(u.closure());
    value["bracket_zero"] = json!(b.is_zero());
    value["graded_dims"] = json!(u.graded_dims());
    value["iota"] = to_value(&iota_report(&u));
    value["theta"] = match theta_map(&u) {
        Ok(t) => to_value(&t),
        Err(e) => json!({ "error": e.kind(), "message": e.to_string() }),
    };
    Ok(Reply::ok(value))
}

fn cmd_verify(job: &Job, theorem: &str) -> Result<Reply> {
    let n = job.args.cutoff;
    if theorem == "all" {
        let reports = theorems::verify_all();
        let ok = reports.iter().all(|r| r.as_expected());
        let failures: Vec<&str> = reports.iter().filter(|r| !r.as_expected()).map(|r| r.example.as_str()).collect();
        return Ok(Reply::checked(
            to_value(&reports),
            ok,
            format!("unexpected verdicts: {}", failures.join(", ")),
        ));
    }
    let report: TheoremReport = match theorem {
        "type-one" => {
            let a = job.graded_algebra(Algebra::Sym)?;
            let (space, _) = job.space()?;
            theorems::verify_type_one(&a, &job.lambda(&space)?, n)
        }
        "strict-symmetric" => {
            let (space, _) = job.space()?;
            theorems::verify_strict_symmetric(&space, &job.lambda(&space)?, n)
        }
        "bracket-triviality" => {
            let (space, bracket) = job.space()?;
            theorems::verify_bracket_triviality(&space, &job.lambda(&space)?, bracket.as_ref())
        }
        "milnor-moore" => {
            let (_, w) = job.algebra(Algebra::Sym)?;
            let lambda = job.user_lambda(w.field())?;
            theorems::verify_milnor_moore(&w, lambda.as_ref())
        }
        "categorical-rigidity" => {
            let (space, _) = job.space()?;
            theorems::verify_categorical_rigidity(&space, &job.lambda(&space)?)
        }
        other => return Err(Error::Parse(format!("unknown theorem {other}"))),
    };
    let verdict = report.conclusion.verdict;
    let failure = format!("conclusion {}", to_value(&verdict).as_str().unwrap_or("?"));
    Ok(Reply::checked(to_value(&report), verdict == Verdict::Pass, failure))
}

/// Renders a command's JSON result as indented text.
pub fn render_table(command: &Command, value: &Value) -> String {
    if let (Command::Qbinom { .. }, Some(v)) = (command, value.get("value")) {
        return format!("{}\n", plain(v));
    }
    let mut out = String::new();
    render(value, 0, &mut out);
    out
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Array(items) if items.iter().all(is_leaf) => {
                        let row: Vec<String> = items.iter().map(plain).collect();
                        let row = if row.is_empty() { "-".into() } else { row.join(" ") };
                        out.push_str(&format!("{pad}{k}: {row}\n"));
                    }
                    v if is_leaf(v) => out.push_str(&format!("{pad}{k}: {}\n", plain(v))),
                    v => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                if is_leaf(item) {
                    out.push_str(&format!("{pad}- {}\n", plain(item)));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    render(item, indent + 2, out);
                }
            }
        }
        leaf => out.push_str(&format!("{pad}{}\n", plain(leaf))),
    }
}
