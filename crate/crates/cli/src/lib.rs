//! Command-line front end for the motivic engine.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use motivic_core::oracle::{Oracle, OracleError};
use motivic_core::operators::{verify_operator_identities, OperatorSet};
use motivic_core::ring::render;
use motivic_core::surface::{
    adjudicate, closed_form, evaluate_tqft, evaluate_word, parse_word, EvalError, GRAMMAR,
};
use motivic_core::{CoreMatrix, Format, FormulaVariant, Scalar, SurfaceSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const PUNCTURE_GRAMMAR: &str = "punctures := \"\" | item (\",\" item)*\n\
item      := kind \":\" count      kind in {jp, jm, mi}, each at most once";

#[derive(Parser, Debug)]
#[command(name = "motivic", version, about = "Motivic classes of parabolic SL2 representation varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Motivic class of a punctured surface.
    Class {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        punctures: String,
        #[arg(long, value_enum, default_value_t = Method::Tqft)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Variant::Section5)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Dump an operator matrix.
    Matrix {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Count points over F_p by convolution.
    Count {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        punctures: String,
        #[arg(long)]
        prime: u32,
    },
    /// Operator identities, closed forms and point counts over a grid.
    Verify {
        #[arg(long, default_value_t = 2)]
        max_genus: u32,
        #[arg(long, default_value_t = 2)]
        max_punctures: u32,
        #[arg(long, value_delimiter = ',', default_value = "3,5")]
        primes: Vec<u32>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Compare the composed class with every closed-form reading.
    Adjudicate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        punctures: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Evaluate a bordism word such as "Dt . JP . L^2 . D".
    Eval {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Tqft,
    Closed,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Variant {
    Section5,
    Intro,
}

impl From<Variant> for FormulaVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Section5 => FormulaVariant::Section5,
            Variant::Intro => FormulaVariant::Intro,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Latex => Format::Latex,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Op {
    L,
    Jp,
    Jm,
    Mi,
    Eta,
    EtaInv,
    Sigma,
    ZgL,
}

/// One comparison in a `verify` or `class --method both` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub spec: SurfaceSpec,
    pub method_a: String,
    pub method_b: String,
    pub value_a: String,
    pub value_b: String,
    pub pass: bool,
}

impl Record {
    /// Prime of a counting record, if any; closed-form records sort first.
    fn prime(&self) -> Option<u32> {
        self.method_b.strip_prefix("count@").and_then(|p| p.parse().ok())
    }

    fn sort_key(&self) -> (u32, u32, u32, u32, Option<u32>) {
        let s = &self.spec;
        (s.genus, s.r_plus, s.r_minus, s.t, self.prime())
    }
}

/// Text or JSON report, ordered by `(genus, r+, r-, t, prime)`.
pub fn emit_report(records: &[Record], json: bool) -> String {
    let mut sorted = records.to_vec();
    sorted.sort_by_key(Record::sort_key);
    if json {
        return serde_json::to_string_pretty(&sorted).expect("records serialize") + "\n";
    }
    sorted
        .iter()
        .map(|r| {
            format!(
                "{} [{}] {} vs {}: {} | {}\n",
                if r.pass { "PASS" } else { "FAIL" },
                r.spec,
                r.method_a,
                r.method_b,
                r.value_a,
                r.value_b
            )
        })
        .collect()
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::FormulaUndefined { .. } => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::NotOddPrime(_) | OracleError::PrimeTooLarge(_) => Failure::Usage(e.to_string()),
            OracleError::Eval(inner) => inner.into(),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn spec_arg(genus: u32, punctures: &str) -> Result<SurfaceSpec, Failure> {
    SurfaceSpec::parse(genus, punctures)
        .map_err(|e| Failure::Usage(format!("--punctures: {e}\n\n{PUNCTURE_GRAMMAR}")))
}

fn operator(op: Op) -> CoreMatrix {
    let ops = OperatorSet::shared();
    match op {
        Op::L => ops.cz_l.clone(),
        Op::Jp => ops.cz_jp.clone(),
        Op::Jm => ops.cz_jm.clone(),
        Op::Mi => ops.cz_mi.clone(),
        Op::Eta => ops.eta.clone(),
        Op::EtaInv => ops.eta_inv.clone(),
        Op::Sigma => ops.sigma.clone(),
        Op::ZgL => ops.zg_l.clone(),
    }
}

fn show(value: &Scalar, fmt: OutFormat) -> String {
    render::render(value, fmt.into())
}

fn integer_text(v: &num_rational::BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        v.to_string()
    }
}

fn verify(max_genus: u32, max_punctures: u32, primes: &[u32]) -> Result<Vec<Record>, Failure> {
    let identities = verify_operator_identities();
    if !identities.all_passed() {
        return Err(Failure::Internal(format!("operator identities failed:\n{identities}")));
    }
    let oracles = primes
        .iter()
        .map(|&p| Oracle::new(p))
        .collect::<Result<Vec<_>, _>>()?;
    let grid = SurfaceSpec::grid(max_genus, max_punctures);
    let per_spec = grid
        .par_iter()
        .map(|spec| -> Result<Vec<Record>, Failure> {
            let tqft = evaluate_tqft(spec)?;
            let closed = closed_form(spec, FormulaVariant::Section5)?;
            let mut out = vec![Record {
                spec: *spec,
                method_a: "tqft".into(),
                method_b: "closed:section5".into(),
                value_a: tqft.to_string(),
                value_b: closed.to_string(),
                pass: tqft == closed,
            }];
            for oracle in &oracles {
                let c = oracle.cross_check(spec)?;
                out.push(Record {
                    spec: *spec,
                    method_a: format!("tqft@{}", c.p),
                    method_b: format!("count@{}", c.p),
                    value_a: integer_text(&c.polynomial),
                    value_b: c.count.to_string(),
                    pass: c.pass,
                });
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(per_spec.into_iter().flatten().collect())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut code = EXIT_OK;
    let text = match cmd {
        Command::Class { genus, punctures, method, variant, format } => {
            let spec = spec_arg(genus, &punctures)?;
            match method {
                Method::Tqft => show(&evaluate_tqft(&spec)?, format) + "\n",
                Method::Closed => show(&closed_form(&spec, variant.into())?, format) + "\n",
                Method::Both => {
                    let a = evaluate_tqft(&spec)?;
                    let b = closed_form(&spec, variant.into())?;
                    let pass = a == b;
                    if !pass {
                        code = EXIT_MISMATCH;
                    }
                    match format {
                        OutFormat::Json => {
                            let rec = Record {
                                spec,
                                method_a: "tqft".into(),
                                method_b: format!("closed:{}", FormulaVariant::from(variant)),
                                value_a: a.to_string(),
                                value_b: b.to_string(),
                                pass,
                            };
                            emit_report(&[rec], true)
                        }
                        _ if pass => show(&a, format) + "\n",
                        _ => format!("MISMATCH\n  tqft:   {}\n  closed: {}\n", show(&a, format), show(&b, format)),
                    }
                }
            }
        }
        Command::Matrix { op, format } => {
            let mut s = operator(op).render(format.into());
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
        Command::Count { genus, punctures, prime } => {
            let spec = spec_arg(genus, &punctures)?;
            let n = Oracle::new(prime)?.count(&spec)?;
            format!("{n}\n")
        }
        Command::Verify { max_genus, max_punctures, primes, format } => {
            let records = verify(max_genus, max_punctures, &primes)?;
            if records.iter().any(|r| !r.pass) {
                code = EXIT_MISMATCH;
            }
            emit_report(&records, format == ReportFormat::Json)
        }
        Command::Adjudicate { genus, punctures, format } => {
            let spec = spec_arg(genus, &punctures)?;
            let rep = adjudicate(&spec)?;
            if !rep.section5_matches() {
                code = EXIT_MISMATCH;
            }
            match format {
                ReportFormat::Text => rep.to_string(),
                ReportFormat::Json => serde_json::to_string_pretty(&rep.to_json()).expect("json") + "\n",
            }
        }
        Command::Eval { word, format } => {
            let w = parse_word(&word).map_err(|e| Failure::Usage(format!("--word: {e}\n\n{GRAMMAR}")))?;
            show(&evaluate_word(&w)?, format) + "\n"
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Internal(format!("write failed: {e}")))?;
    Ok(code)
}

/// Runs the CLI on `argv` (including the program name) with explicit sinks.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}\n{PUNCTURE_GRAMMAR}\n\n{GRAMMAR}\n");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn execute<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}
