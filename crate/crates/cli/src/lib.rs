//! Command-line front end for `hypersum-core`: evaluate a quantity, run the
//! identity-verification suite, or emit value tables.
//!
//! Exit codes: 0 success, 1 identity failure, 2 usage error, 3 internal
//! consistency violation, 4 I/O error.

pub mod output;
pub mod quantity;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hypersum_core::{Error, Rational};
use rayon::prelude::*;

use output::{Format, Table};
use quantity::{Params, Quantity};
use verify::{Bounds, IdentityReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Upper limit on the number of rows a single `table` call may produce.
pub const MAX_TABLE_ROWS: usize = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "hypersum",
    version,
    about = "Exact hyperharmonic numbers, power sums and Bernoulli polynomials"
)]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity exactly.
    Eval(EvalArgs),
    /// Run identity sweeps; exits 1 if any cell fails.
    Verify(VerifyArgs),
    /// Emit a table of values over parameter ranges.
    Table(TableArgs),
    /// List quantities with their methods, or identities.
    List {
        #[arg(value_enum, default_value_t = ListWhat::Quantities)]
        what: ListWhat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ListWhat {
    Quantities,
    Identities,
}

/// Integer parameters shared by `eval`; each applies only to some quantities.
#[derive(Debug, Args)]
pub struct ScalarParams {
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub j: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub index: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub order: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
}

impl ScalarParams {
    fn named(&self) -> [(&'static str, Option<i64>); 7] {
        [
            ("k", self.k),
            ("n", self.n),
            ("j", self.j),
            ("index", self.index),
            ("order", self.order),
            ("r", self.r),
            ("m", self.m),
        ]
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    #[command(flatten)]
    pub params: ScalarParams,
    /// Rational argument `p/q` or `p`: the point at which a polynomial is
    /// evaluated, or the upper argument of `binomial`.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<Rational>,
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

/// Range parameters of `table`: `a..b` (inclusive) or a single integer.
#[derive(Debug, Args)]
pub struct RangeParams {
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<ParamRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<ParamRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<ParamRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub index: Option<ParamRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub order: Option<ParamRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<ParamRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<ParamRange>,
}

impl RangeParams {
    fn named(&self) -> [(&'static str, Option<ParamRange>); 7] {
        [
            ("k", self.k),
            ("n", self.n),
            ("j", self.j),
            ("index", self.index),
            ("order", self.order),
            ("r", self.r),
            ("m", self.m),
        ]
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    #[command(flatten)]
    pub ranges: RangeParams,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<Rational>,
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write the table to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id or alias, or `all`.
    pub identity: String,
    #[arg(long, default_value_t = Bounds::default().k_max as i64, allow_negative_numbers = true)]
    pub k_max: i64,
    #[arg(long, default_value_t = Bounds::default().n_max as i64, allow_negative_numbers = true)]
    pub n_max: i64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

/// An inclusive integer range parsed from `a..b` or `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamRange {
    pub start: i64,
    pub end: i64,
}

impl ParamRange {
    /// Number of values, at least one.
    pub fn count(&self) -> usize {
        (self.end - self.start + 1) as usize
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }
}

impl std::str::FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("expected an integer or a range a..b, got {s:?}"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        if end
            .checked_sub(start)
            .is_none_or(|d| d >= MAX_TABLE_ROWS as i64)
        {
            return Err(format!("range {s:?} exceeds {MAX_TABLE_ROWS} values"));
        }
        Ok(ParamRange { start, end })
    }
}

/// What a command produced: exit code and the text for each stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Failures of a command, each mapped to its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NotInteger { .. } | Error::IdentityViolation { .. }) => {
                EXIT_INCONSISTENT
            }
            CliError::Core(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli.command)
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Eval(args) => cmd_eval(&args).map(Outcome::ok),
        Command::Verify(args) => cmd_verify(&args),
        Command::Table(args) => cmd_table(&args).map(Outcome::ok),
        Command::List { what } => Ok(Outcome::ok(cmd_list(what))),
    };
    result.unwrap_or_else(|e| Outcome::fail(e.exit_code(), e))
}

fn reject_unused<T>(
    quantity: Quantity,
    named: &[(&'static str, Option<T>)],
) -> Result<(), CliError> {
    let wanted = quantity.params();
    for (name, value) in named {
        if value.is_some() && !wanted.contains(name) {
            return Err(CliError::Usage(format!(
                "--{name} does not apply to {}; its parameters are {}",
                quantity.name(),
                flags(wanted)
            )));
        }
    }
    Ok(())
}

fn flags(names: &[&str]) -> String {
    names
        .iter()
        .map(|n| format!("--{n}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn cmd_eval(args: &EvalArgs) -> Result<String, CliError> {
    let named = args.params.named();
    reject_unused(args.quantity, &named)?;
    let mut params = Params::new();
    for (name, value) in named {
        if let Some(v) = value {
            params.set(name, v);
        }
    }
    let value = args
        .quantity
        .evaluate(&params, args.method.as_deref(), args.x.as_ref())?;
    Ok(match args.format {
        Format::Plain => format!("{value}\n"),
        format => {
            let columns = args.quantity.params().to_vec();
            let row = columns
                .iter()
                .map(|c| params.get(c).expect("checked by evaluate"))
                .collect();
            Table {
                columns,
                rows: vec![(row, value.to_string())],
            }
            .render(format)
        }
    })
}

/// Cartesian product of the quantity's parameter ranges, in column order.
fn table_cells(quantity: Quantity, ranges: &RangeParams) -> Result<Vec<Vec<i64>>, CliError> {
    let named = ranges.named();
    reject_unused(quantity, &named)?;
    let mut cells: Vec<Vec<i64>> = vec![Vec::new()];
    for column in quantity.params() {
        let range = named
            .iter()
            .find(|(name, _)| name == column)
            .and_then(|(_, r)| *r)
            .ok_or_else(|| {
                CliError::Usage(format!("missing range --{column} for {}", quantity.name()))
            })?;
        if cells.len().saturating_mul(range.count()) > MAX_TABLE_ROWS {
            return Err(Error::ResourceLimit(format!(
                "a table is capped at {MAX_TABLE_ROWS} rows"
            ))
            .into());
        }
        cells = cells
            .into_iter()
            .flat_map(|prefix| {
                range.values().map(move |v| {
                    let mut cell = prefix.clone();
                    cell.push(v);
                    cell
                })
            })
            .collect();
    }
    Ok(cells)
}

pub fn build_table(args: &TableArgs) -> Result<Table, CliError> {
    let quantity = args.quantity;
    let columns = quantity.params().to_vec();
    let cells = table_cells(quantity, &args.ranges)?;
    let rows = cells
        .into_par_iter()
        .map(|cell| {
            let mut params = Params::new();
            for (name, v) in columns.iter().zip(&cell) {
                params.set(name, *v);
            }
            match quantity.evaluate(&params, args.method.as_deref(), args.x.as_ref()) {
                Ok(value) => Ok((cell, value.to_string())),
                Err(e) => Err((cell, e)),
            }
        })
        .collect::<Vec<_>>();
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        match row {
            Ok(row) => out.push(row),
            Err((cell, e)) => {
                let at: Vec<String> = columns
                    .iter()
                    .zip(&cell)
                    .map(|(n, v)| format!("{n}={v}"))
                    .collect();
                let err = CliError::Core(e);
                if err.exit_code() != EXIT_USAGE {
                    return Err(err);
                }
                return Err(CliError::Usage(format!("at {}: {err}", at.join(" "))));
            }
        }
    }
    Ok(Table { columns, rows: out })
}

pub fn cmd_table(args: &TableArgs) -> Result<String, CliError> {
    let text = build_table(args)?.render(args.format);
    match &args.out {
        None => Ok(text),
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(String::new())
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let bounds = Bounds::new(args.k_max, args.n_max)?;
    let identities: Vec<_> = if args.identity == "all" {
        verify::registry().iter().collect()
    } else {
        let identity = verify::find(&args.identity).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown identity {:?}; run `hypersum list identities`",
                args.identity
            ))
        })?;
        vec![identity]
    };
    let reports = verify::run_all(&identities, &bounds);
    let passed = reports.iter().all(IdentityReport::passed);
    let stdout = match args.format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&reports).expect("report JSON");
            text.push('\n');
            text
        }
        _ => plain_reports(&reports),
    };
    Ok(Outcome {
        code: if passed {
            EXIT_OK
        } else {
            EXIT_IDENTITY_FAILURE
        },
        stdout,
        stderr: String::new(),
    })
}

fn plain_reports(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {} cells={} failures={} elapsed_ms={}",
            r.identity_id,
            r.cells_checked,
            r.failures.len(),
            r.elapsed_ms
        );
        for f in &r.failures {
            let at: Vec<String> = f.params.iter().map(|(n, v)| format!("{n}={v}")).collect();
            let _ = writeln!(out, "  at {}: lhs={} rhs={}", at.join(" "), f.lhs, f.rhs);
        }
    }
    let cells: usize = reports.iter().map(|r| r.cells_checked).sum();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(
        out,
        "{} identities, {cells} cells, {failed} failed",
        reports.len()
    );
    out
}

fn cmd_list(what: ListWhat) -> String {
    let mut out = String::new();
    match what {
        ListWhat::Quantities => {
            for q in <Quantity as clap::ValueEnum>::value_variants() {
                let _ = writeln!(
                    out,
                    "{:<24} {:<20} methods: {}",
                    q.name(),
                    flags(q.params()),
                    q.methods().join(", ")
                );
            }
        }
        ListWhat::Identities => {
            for i in verify::registry() {
                let alias = if i.aliases.is_empty() {
                    String::new()
                } else {
                    format!(" (alias {})", i.aliases.join(", "))
                };
                let _ = writeln!(out, "{}{alias}\n    {}", i.id, i.summary);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("1..5".parse(), Ok(ParamRange { start: 1, end: 5 }));
        assert_eq!("3".parse(), Ok(ParamRange { start: 3, end: 3 }));
        assert_eq!("-3..-1".parse(), Ok(ParamRange { start: -3, end: -1 }));
        assert!("5..1".parse::<ParamRange>().is_err());
        assert!("1.5".parse::<ParamRange>().is_err());
        assert!("0..100000".parse::<ParamRange>().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), EXIT_USAGE);
        assert_eq!(
            CliError::Core(Error::ResourceLimit("x".into())).exit_code(),
            EXIT_USAGE
        );
        let ni = Error::NotInteger {
            what: "x",
            value: "1/2".into(),
        };
        assert_eq!(CliError::Core(ni).exit_code(), EXIT_INCONSISTENT);
    }

    #[test]
    fn quantity_names_match_the_parser() {
        for q in <Quantity as clap::ValueEnum>::value_variants() {
            let parsed = <Quantity as clap::ValueEnum>::from_str(q.name(), false).unwrap();
            assert_eq!(parsed, *q);
        }
    }

    #[test]
    fn help_exits_zero() {
        let out = run(["hypersum", "--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("eval"));
    }
}
