//! Command-line front end.
//!
//! Every command reads one scheme description (JSON, see [`SchemeSpec`])
//! and prints a text or JSON report. Exit codes: 0 success, 2 parse or
//! usage error, 3 scheme axiom violation, 4 analysis failure.

mod render;
mod spec;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::analysis::{
    character_table, check_p_polynomial, express_in_terms_of, find_generic_element,
    minimal_generating_sets, PPolyFailure, DEFAULT_MAX_ATTEMPTS, DEFAULT_MAX_COEFF,
};
use crate::error::Error;
use crate::exactmath::rational::pow10_neg;
use crate::exactmath::Rational;
use crate::fglm::fglm_convert;
use crate::polyring::{MonomialOrder, OrderKind, PolyBasis};
use crate::scheme::Scheme;
use crate::structure_ideal::structure_basis;
use render::*;
pub use spec::SchemeSpec;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_SCHEME: u8 = 3;
pub const EXIT_ANALYSIS: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "assoc-scheme",
    version,
    about = "Exact analysis of commutative association schemes"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Decimal digits shown for irrational values.
    #[arg(long, global = true, default_value_t = 10)]
    precision: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Degree,
    Lex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the scheme axioms and print d, v and the valencies.
    Validate { spec: PathBuf },
    /// First and second eigenvalue matrices P and Q.
    Chartab { spec: PathBuf },
    /// Decide P-polynomiality, with per-variable diagnostics.
    Ppoly { spec: PathBuf },
    /// Express every variable in terms of `--vars`, or list the minimal
    /// generating sets when `--vars` is absent.
    Express {
        spec: PathBuf,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<usize>>,
    },
    /// Find a linear combination of relations whose eigenvalues separate
    /// the points of the variety.
    Generator {
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_COEFF)]
        max_coeff: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
        max_attempts: usize,
    },
    /// Reduced Gröbner basis of the structure ideal.
    Gb {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
        /// Smallest variable of the lex order (default: the last one).
        #[arg(long)]
        smallest: Option<usize>,
        /// Full variable priority, greatest first, e.g. `0,3,2,1`.
        #[arg(long, value_delimiter = ',', conflicts_with = "smallest")]
        priority: Option<Vec<usize>>,
    },
}

/// A failed command: exit code and message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidArgument(_) | Error::InvalidOrder(_) => EXIT_USAGE,
            e if e.is_scheme_violation() => EXIT_SCHEME,
            _ => EXIT_ANALYSIS,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message,
    }
}

/// Parses `args` (program name first) and runs the command, returning
/// the report on success.
pub fn execute<I, T>(args: I) -> Result<String, Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Failure {
        code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
        message: e.render().to_string(),
    })?;
    let json = cli.format == Format::Json;
    let digits = cli.precision;
    let load = |path: &PathBuf| -> Result<Scheme, Failure> {
        let spec = SchemeSpec::load(path).map_err(usage)?;
        Ok(spec.build()?)
    };
    let out = match &cli.command {
        Command::Validate { spec } => validate(&load(spec)?, json),
        Command::Chartab { spec } => chartab(&load(spec)?, json, digits)?,
        Command::Ppoly { spec } => ppoly(&load(spec)?, json)?,
        Command::Express { spec, vars } => express(&load(spec)?, vars.as_deref(), json)?,
        Command::Generator {
            spec,
            seed,
            max_coeff,
            max_attempts,
        } => generator(&load(spec)?, *seed, *max_coeff, *max_attempts, json)?,
        Command::Gb {
            spec,
            order,
            smallest,
            priority,
        } => gb(&load(spec)?, *order, *smallest, priority.clone(), json)?,
    };
    Ok(out)
}

/// Entry point of the binary.
pub fn run() -> ExitCode {
    match execute(std::env::args_os()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) if f.code == EXIT_OK => {
            print!("{}", f.message);
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message.trim_end());
            ExitCode::from(f.code)
        }
    }
}

fn to_json(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn validate(s: &Scheme, json: bool) -> String {
    if json {
        return to_json(json!({
            "d": s.d(),
            "v": s.v(),
            "valencies": s.valencies(),
            "symmetric": s.is_symmetric(),
            "commutative": true,
        }));
    }
    format!(
        "d={} v={} valencies {}\nsymmetric: {}\ncommutative: yes\n",
        s.d(),
        s.v(),
        join(s.valencies()),
        if s.is_symmetric() { "yes" } else { "no" }
    )
}

fn chartab(s: &Scheme, json: bool, digits: u32) -> Result<String, Failure> {
    let precision: Rational = pow10_neg(digits.max(28) + 2);
    let t = character_table(s, &precision)?;
    if json {
        return Ok(to_json(json!({
            "v": t.v,
            "P": grid_json(&t.p),
            "Q": grid_json(&t.q),
        })));
    }
    let mut out = String::new();
    for (name, grid) in [("P", &t.p), ("Q", &t.q)] {
        let cells: Vec<Vec<String>> = grid
            .iter()
            .map(|row| row.iter().map(|r| root_text(r, digits)).collect())
            .collect();
        let _ = writeln!(out, "{name} =");
        out.push_str(&table_text(&cells));
    }
    let notes: Vec<String> = irrational_notes("P", &t.p, digits)
        .into_iter()
        .chain(irrational_notes("Q", &t.q, digits))
        .collect();
    if !notes.is_empty() {
        out.push('\n');
        for n in notes {
            let _ = writeln!(out, "{n}");
        }
    }
    Ok(out)
}

fn failure_text(f: &PPolyFailure) -> String {
    match f {
        PPolyFailure::EliminantDegree { found, needed } => {
            format!("eliminant has degree {found}, need {needed}")
        }
        PPolyFailure::NotExpressible { var } => format!("x{var} is not a polynomial in it"),
        PPolyFailure::ExpressionDegrees { degrees } => {
            format!("expression degrees {} are not 2..d", join(degrees))
        }
    }
}

fn ppoly(s: &Scheme, json: bool) -> Result<String, Failure> {
    let r = check_p_polynomial(s)?;
    if json {
        let diagnostics: Vec<Value> = r
            .diagnostics
            .iter()
            .map(|d| match &d.outcome {
                Ok(()) => json!({"var": d.var, "ok": true}),
                Err(f) => json!({"var": d.var, "ok": false, "reason": failure_text(f)}),
            })
            .collect();
        return Ok(to_json(json!({
            "ppoly": r.is_p_polynomial,
            "generator_variable": r.generator_variable,
            "distance_relabeling": r.distance_relabeling,
            "basis": r.witness_basis.as_ref().map(|b| basis_json(b.basis())),
            "diagnostics": diagnostics,
        })));
    }
    let mut out = String::new();
    match (r.generator_variable, &r.distance_relabeling) {
        (Some(i), Some(dist)) => {
            let _ = writeln!(out, "P-polynomial with x{i} as the distance-1 relation");
            let _ = writeln!(out, "distances {}", join(dist));
        }
        _ if r.is_p_polynomial => {
            let _ = writeln!(out, "P-polynomial");
        }
        _ => {
            let _ = writeln!(out, "not P-polynomial");
        }
    }
    for d in &r.diagnostics {
        let line = match &d.outcome {
            Ok(()) => "generates".to_string(),
            Err(f) => failure_text(f),
        };
        let _ = writeln!(out, "  x{}: {line}", d.var);
    }
    if let Some(b) = &r.witness_basis {
        let _ = writeln!(out, "basis:");
        for l in b.basis().display_lines() {
            let _ = writeln!(out, "  {l}");
        }
    }
    Ok(out)
}

fn express(s: &Scheme, vars: Option<&[usize]>, json: bool) -> Result<String, Failure> {
    let Some(vars) = vars else {
        let sets = minimal_generating_sets(s)?;
        if json {
            return Ok(to_json(json!({ "generating_sets": sets })));
        }
        let mut out = String::new();
        for set in sets {
            let names: Vec<String> = set.iter().map(|v| format!("x{v}")).collect();
            let _ = writeln!(out, "{{{}}}", names.join(", "));
        }
        return Ok(out);
    };
    let exprs = express_in_terms_of(s, vars)?;
    if json {
        let mut m = Map::new();
        for (v, e) in &exprs {
            m.insert(format!("x{v}"), Value::String(e.to_string()));
        }
        return Ok(to_json(json!({ "vars": vars, "expressions": m })));
    }
    let mut out = String::new();
    for (v, e) in &exprs {
        let _ = writeln!(out, "x{v} = {e}");
    }
    Ok(out)
}

fn generator(
    s: &Scheme,
    seed: u64,
    max_coeff: u64,
    max_attempts: usize,
    json: bool,
) -> Result<String, Failure> {
    let g = find_generic_element(s, seed, max_coeff, max_attempts)?;
    if json {
        let trace: Vec<Value> = g
            .trace
            .iter()
            .map(|c| json!({"variable": c.variable, "multiplier": c.multiplier}))
            .collect();
        return Ok(to_json(json!({
            "generator": {
                "seed": seed,
                "coefficients": g.coefficients,
                "eliminant": unipoly_json(&g.eliminant),
                "expressions": g.expressions.iter().map(unipoly_json).collect::<Vec<_>>(),
                "trace": trace,
            }
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "coefficients {}", join(&g.coefficients));
    for c in &g.trace {
        let _ = writeln!(
            out,
            "change: last coordinate += {}*x{}",
            c.multiplier, c.variable
        );
    }
    let _ = writeln!(out, "eliminant {}", g.eliminant.display_with("y"));
    for (j, e) in g.expressions.iter().enumerate() {
        let _ = writeln!(out, "x{j} = {}", e.display_with("y"));
    }
    Ok(out)
}

fn gb(
    s: &Scheme,
    order: OrderArg,
    smallest: Option<usize>,
    priority: Option<Vec<usize>>,
    json: bool,
) -> Result<String, Failure> {
    let sb = structure_basis(s)?;
    let n = sb.nvars();
    let kind = match order {
        OrderArg::Degree => OrderKind::DegLex,
        OrderArg::Lex => OrderKind::Lex,
    };
    let priority = match (priority, smallest) {
        (Some(p), _) => p,
        (None, Some(i)) if i >= n => {
            return Err(Error::InvalidArgument(format!("no variable x{i}; there are {n}")).into());
        }
        (None, Some(i)) => MonomialOrder::lex_smallest(n, i).priority().to_vec(),
        (None, None) if kind == OrderKind::Lex => {
            MonomialOrder::lex_smallest(n, n - 1).priority().to_vec()
        }
        (None, None) => (0..n).collect(),
    };
    let target = MonomialOrder::new(kind, priority)?;
    let basis: PolyBasis = if kind == OrderKind::DegLex && target == *sb.basis().order() {
        sb.basis().clone()
    } else {
        fglm_convert(&sb, &target)?.basis().clone()
    };
    if json {
        return Ok(to_json(json!({
            "order": format!("{target:?}"),
            "basis": basis_json(&basis),
        })));
    }
    let mut out = format!("{target:?}\n");
    for l in basis.display_lines() {
        let _ = writeln!(out, "  {l}");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String, Failure> {
        execute(std::iter::once("assoc-scheme").chain(args.iter().copied()))
    }

    fn spec_file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        std::io::Write::write_all(&mut f, text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn validate_reports_valencies() {
        let f = spec_file(r#"{"type":"orbit","m":9,"r":2}"#);
        let out = run_args(&["validate", f.path().to_str().unwrap()]).unwrap();
        assert!(out.starts_with("d=2 v=9 valencies 1,6,2\n"), "{out}");
        let k3 = spec_file(r#"{"type":"relations","labels":[[0,1,1],[1,0,1],[1,1,0]]}"#);
        let out = run_args(&["validate", k3.path().to_str().unwrap()]).unwrap();
        assert!(out.starts_with("d=1 v=3 valencies 1,2\n"));
    }

    #[test]
    fn exit_codes() {
        let bad_radix = spec_file(r#"{"type":"orbit","m":9,"r":3}"#);
        assert_eq!(
            run_args(&["validate", bad_radix.path().to_str().unwrap()])
                .unwrap_err()
                .code,
            EXIT_SCHEME
        );
        let garbage = spec_file("{");
        assert_eq!(
            run_args(&["validate", garbage.path().to_str().unwrap()])
                .unwrap_err()
                .code,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["frobnicate"]).unwrap_err().code, EXIT_USAGE);
        let ok = spec_file(r#"{"type":"orbit","m":8,"r":3}"#);
        let p = ok.path().to_str().unwrap();
        let e = run_args(&["generator", p, "--max-attempts", "0"]).unwrap_err();
        assert_eq!(e.code, EXIT_ANALYSIS);
        assert_eq!(
            run_args(&["gb", p, "--smallest", "9"]).unwrap_err().code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["gb", p, "--priority", "0,0,1,2"])
                .unwrap_err()
                .code,
            EXIT_USAGE
        );
    }

    #[test]
    fn k3_chartab_text() {
        let f = spec_file(r#"{"type":"relations","labels":[[0,1,1],[1,0,1],[1,1,0]]}"#);
        let out = run_args(&["chartab", f.path().to_str().unwrap()]).unwrap();
        assert_eq!(out, "P =\n  1   2\n  1  -1\nQ =\n  1   2\n  1  -1\n");
    }

    #[test]
    fn express_text() {
        let f = spec_file(r#"{"type":"orbit","m":8,"r":3}"#);
        let p = f.path().to_str().unwrap();
        assert_eq!(run_args(&["express", p]).unwrap(), "{x1, x2}\n{x1, x3}\n");
        let out = run_args(&["express", p, "--vars", "1,2"]).unwrap();
        assert!(out.contains("x3 = "), "{out}");
    }
}
