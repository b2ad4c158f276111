//! Command-line front end.
//!
//! Subcommands: `analyze`, `approx-root`, `expand`, `gnp`, `discriminant`,
//! `semigroup`, `oracle-branch`, `oracle-verify`. Input files hold a single
//! polynomial expression (see [`parse`]) or, for the oracle commands, a
//! branch spec (see [`branch_spec`]). Exit codes: 0 for a clean run (either
//! verdict), 1 for parse/contract errors, 2 for internal diagnostics such as
//! an ambiguous initial monomial.

pub mod branch_spec;
pub mod parse;
pub mod report;

use crate::charseq::VectorStrictness;
use crate::criterion::{analyze, Config, FailureKind};
use crate::error::Error;
use crate::gadic;
use crate::oracle;
use crate::polyring::{discriminant_y, YPoly};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use crate::criterion::Report;
pub use parse::{parse_expression, parse_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrictArg {
    Weak,
    Strong,
}

impl From<StrictArg> for VectorStrictness {
    fn from(s: StrictArg) -> Self {
        match s {
            StrictArg::Weak => VectorStrictness::WeakStrict,
            StrictArg::Strong => VectorStrictness::StrongStrict,
        }
    }
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Input file (UTF-8 polynomial expression or branch spec).
    #[arg(long)]
    input: String,
    /// Number of x-variables; inferred from the expression when omitted.
    #[arg(long)]
    vars: Option<usize>,
    /// Strict-inequality semantics for the growth and straightness checks.
    #[arg(long, value_enum, default_value = "weak")]
    strict_order: StrictArg,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Debug, Parser)]
#[command(name = "quasiord", version, about = "Irreducibility of quasi-ordinary polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full irreducibility analysis and print the report.
    Analyze(CommonArgs),
    /// Compute the d-th approximate root.
    ApproxRoot {
        #[command(flatten)]
        common: CommonArgs,
        /// Divisor d of the degree.
        #[arg(short = 'd', long = "divisor")]
        divisor: usize,
    },
    /// Expand the input in one base (g-adic) or several (multi-base).
    Expand {
        #[command(flatten)]
        common: CommonArgs,
        /// Expansion base expression; repeat for a multi-base expansion.
        #[arg(long, required = true)]
        base: Vec<String>,
    },
    /// Print the generalized Newton polygons checked by the criterion.
    Gnp(CommonArgs),
    /// Print the y-discriminant and its monomial-times-unit split.
    Discriminant(CommonArgs),
    /// Print the semigroup generators of an irreducible input.
    Semigroup(CommonArgs),
    /// Build the minimal polynomial of a branch spec.
    OracleBranch {
        #[command(flatten)]
        common: CommonArgs,
        /// Override the branch truncation bound.
        #[arg(long)]
        truncation: Option<u64>,
    },
    /// Check a branch spec against the analysis of its minimal polynomial.
    OracleVerify {
        #[command(flatten)]
        common: CommonArgs,
        /// Override the branch truncation bound.
        #[arg(long)]
        truncation: Option<u64>,
    },
}

/// Outcome of a CLI invocation, separated for testability.
#[derive(Debug)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn failure_exit_code(report: &Report) -> i32 {
    match &report.failure {
        Some(f) if matches!(f.kind, FailureKind::AmbiguousInitialMonomial { .. }) => 2,
        _ => 0,
    }
}

fn error_exit(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => 2,
        _ => 1,
    }
}

fn render(doc: Value, text: String, format: FormatArg) -> String {
    match format {
        FormatArg::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        FormatArg::Text => text,
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Contract(format!("cannot read '{path}': {e}")))
}

fn load_poly(common: &CommonArgs) -> Result<(YPoly, usize, String), Error> {
    let text = read_input(&common.input)?;
    let (poly, vars) = parse_poly(&text, common.vars)?;
    Ok((poly, vars, poly.to_string()))
}

fn cmd_analyze(common: &CommonArgs) -> Result<(Value, String, i32), Error> {
    let (poly, _, printed) = load_poly(common)?;
    let config = Config { strictness: common.strict_order.into() };
    let rep = analyze(&poly, config)?;
    let code = failure_exit_code(&rep);
    Ok((report::report_json(&rep, &printed), report::report_text(&rep, &printed), code))
}

fn cmd_approx_root(common: &CommonArgs, divisor: usize) -> Result<(Value, String, i32), Error> {
    let (poly, _, printed) = load_poly(common)?;
    let root = gadic::approximate_root(&poly, divisor)?;
    let doc = json!({
        "command": "approx-root",
        "input": printed,
        "d": divisor,
        "root": root.to_string(),
    });
    let text = format!("App_{divisor}({printed}) = {root}\n");
    Ok((doc, text, 0))
}

fn cmd_expand(common: &CommonArgs, bases: &[String]) -> Result<(Value, String, i32), Error> {
    let (poly, vars, printed) = load_poly(common)?;
    let parsed: Vec<YPoly> = bases
        .iter()
        .map(|b| parse_expression(b, Some(vars)).map(|(p, _)| p))
        .collect::<Result<_, _>>()?;
    if parsed.len() == 1 {
        let expansion = gadic::g_adic(&poly, &parsed[0])?;
        let coeffs: Vec<String> =
            expansion.coefficients.iter().map(ToString::to_string).collect();
        let doc = json!({
            "command": "expand",
            "input": printed,
            "base": bases[0],
            "d": expansion.exponent_d,
            "coefficients": coeffs,
        });
        let mut text = format!("g-adic expansion of {printed} in base {}:\n", parsed[0]);
        for (i, c) in expansion.coefficients.iter().enumerate() {
            text.push_str(&format!("a_{} = {c}\n", i + 1));
        }
        Ok((doc, text, 0))
    } else {
        let mut bounds: Vec<Option<u64>> = (0..parsed.len() - 1)
            .map(|i| {
                let lo = parsed[i].degree().max(1);
                Some((parsed[i + 1].degree() / lo) as u64)
            })
            .collect();
        bounds.push(None);
        let support = gadic::g_support(&poly, &parsed, &bounds)?;
        let entries: Vec<Value> = support
            .entries
            .iter()
            .map(|(theta, c)| {
                json!({
                    "theta": theta,
                    "coefficient": c.to_string(),
                })
            })
            .collect();
        let doc = json!({
            "command": "expand",
            "input": printed,
            "bases": bases,
            "support": entries,
        });
        let mut text = format!("multi-base expansion of {printed}:\n");
        for (theta, c) in &support.entries {
            text.push_str(&format!("theta = {theta:?}: {c}\n"));
        }
        Ok((doc, text, 0))
    }
}

fn cmd_gnp(common: &CommonArgs) -> Result<(Value, String, i32), Error> {
    let (poly, _, printed) = load_poly(common)?;
    let config = Config { strictness: common.strict_order.into() };
    let rep = analyze(&poly, config)?;
    let full = report::report_json(&rep, &printed);
    let doc = json!({
        "command": "gnp",
        "input": printed,
        "verdict": full["verdict"],
        "polygons": full["polygons"],
    });
    let mut text = format!("input: {printed}\n");
    for record in &rep.polygons {
        let pts = record
            .polygon
            .points
            .iter()
            .map(|p| format!("({}, {})", p.a_order, p.g_order_scaled))
            .collect::<Vec<_>>()
            .join(", ");
        text.push_str(&format!("GNP({} | {}): {{{pts}}}\n", record.target, record.base));
    }
    Ok((doc, text, failure_exit_code(&rep)))
}

fn cmd_discriminant(common: &CommonArgs) -> Result<(Value, String, i32), Error> {
    let (poly, _, printed) = load_poly(common)?;
    let disc = discriminant_y(&poly)?;
    let split = if disc.is_zero() { None } else { disc.monomial_unit_split()? };
    let split_json = split.as_ref().map(|(n, u)| {
        json!({
            "monomial": n.components().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "unit": u.to_string(),
        })
    });
    let doc = json!({
        "command": "discriminant",
        "input": printed,
        "discriminant": disc.to_string(),
        "monomial_unit_split": split_json,
    });
    let text = match &split {
        Some((n, u)) => format!("disc = {disc}\nsplit: x^{n:?} * ({u})\n"),
        None => format!("disc = {disc}\nsplit: none (not monomial times unit)\n"),
    };
    Ok((doc, text, 0))
}

fn cmd_semigroup(common: &CommonArgs) -> Result<(Value, String, i32), Error> {
    let (poly, _, printed) = load_poly(common)?;
    let config = Config { strictness: common.strict_order.into() };
    let rep = analyze(&poly, config)?;
    let doc = json!({
        "command": "semigroup",
        "input": printed,
        "verdict": report::verdict_code(rep.verdict),
        "generators": report::vectors_json(&rep.semigroup_generators),
    });
    let text = if rep.is_irreducible() {
        format!(
            "semigroup generators: [{}]\n",
            rep.semigroup_generators
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    } else {
        "not an irreducible quasi-ordinary polynomial; no semigroup\n".to_string()
    };
    Ok((doc, text, failure_exit_code(&rep)))
}

fn cmd_oracle_branch(
    common: &CommonArgs,
    truncation: Option<u64>,
) -> Result<(Value, String, i32), Error> {
    let text = read_input(&common.input)?;
    let branch = branch_spec::parse_branch_spec(&text, truncation)?;
    let poly = oracle::branch_to_poly(&branch)?;
    let doc = json!({
        "command": "oracle-branch",
        "n": branch.n(),
        "vars": branch.vars(),
        "truncation": branch.truncation(),
        "polynomial": poly.to_string(),
    });
    let text = format!("minimal polynomial: {poly}\n(truncation bound {})\n", branch.truncation());
    Ok((doc, text, 0))
}

fn cmd_oracle_verify(
    common: &CommonArgs,
    truncation: Option<u64>,
) -> Result<(Value, String, i32), Error> {
    let text = read_input(&common.input)?;
    let branch = branch_spec::parse_branch_spec(&text, truncation)?;
    let poly = oracle::branch_to_poly(&branch)?;
    let config = Config { strictness: common.strict_order.into() };
    let rep = analyze(&poly, config)?;
    let mut orders = Vec::new();
    let mut all_match = rep.is_irreducible();
    for (k, (root, r_k)) in rep.approximate_roots.iter().zip(&rep.r_seq).enumerate() {
        let observed = oracle::order_of(root, &branch)?;
        let matches = &observed == r_k;
        all_match &= matches;
        orders.push(json!({
            "k": k + 1,
            "order_of_root": report::vector_json(&observed),
            "r_k": report::vector_json(r_k),
            "match": matches,
        }));
    }
    let doc = json!({
        "command": "oracle-verify",
        "polynomial": poly.to_string(),
        "verdict": report::verdict_code(rep.verdict),
        "orders": orders,
        "all_match": all_match,
    });
    let text = format!(
        "polynomial: {poly}\nverdict: {}\norders agree: {all_match}\n",
        report::verdict_code(rep.verdict)
    );
    Ok((doc, text, failure_exit_code(&rep)))
}

/// Run the CLI on `argv` (including the program name). Never panics on bad
/// input; the exit code communicates the outcome.
pub fn run(argv: &[String]) -> CliOutput {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through the "error" path as well
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { 1 } else { 0 };
            return if code == 0 {
                CliOutput { code, stdout: rendered, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let (common, result) = match &cli.command {
        Command::Analyze(c) => (c, cmd_analyze(c)),
        Command::ApproxRoot { common, divisor } => (common, cmd_approx_root(common, *divisor)),
        Command::Expand { common, base } => (common, cmd_expand(common, base)),
        Command::Gnp(c) => (c, cmd_gnp(c)),
        Command::Discriminant(c) => (c, cmd_discriminant(c)),
        Command::Semigroup(c) => (c, cmd_semigroup(c)),
        Command::OracleBranch { common, truncation } => {
            (common, cmd_oracle_branch(common, *truncation))
        }
        Command::OracleVerify { common, truncation } => {
            (common, cmd_oracle_verify(common, *truncation))
        }
    };
    match result {
        Ok((doc, text, code)) => CliOutput {
            code,
            stdout: render(doc, text, common.format),
            stderr: String::new(),
        },
        Err(err) => CliOutput {
            code: error_exit(&err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}
