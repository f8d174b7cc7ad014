//! The `tribraid` command line.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::{enumerate_table3, verify_table1, verify_table2, RowStatus, Table3Row};
use crate::classify::{bennequin, classify, is_invertible};
use crate::conjugacy::{are_conjugate, xu_invariant};
use crate::error::Error;
use crate::jones::{jones_closure, torus_jones};
use crate::normal_form::normalize;
use crate::word::{parse_word, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tribraid",
    version,
    about = "Normal forms, conjugacy and knot data for 3-braids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form δ^q·P
    Normalize { word: String },
    /// Print the conjugacy invariant (power; exponents)
    Symbol { word: String },
    /// Decide whether two braids are conjugate
    Conjugate { first: String, second: String },
    /// Classify the closed braid (JSON)
    Classify { word: String },
    /// Decide invertibility of the closed braid (JSON)
    Invertible { word: String },
    /// Print writhe minus 3
    Bennequin { word: String },
    /// Jones polynomial of the closed braid
    Jones { word: String },
    /// Jones polynomial of the (r, s) torus link from the closed formula
    TorusJones {
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
    /// Knots with transversally distinct flype pairs
    Table3 {
        #[arg(long, default_value_t = 12)]
        max_cb: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare computed symbols with the reference tables
    VerifyTables {
        #[arg(long, default_value_t = 8)]
        range: i64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct CsvRow {
    cb: i64,
    beta: i64,
    u: i64,
    v: i64,
    w: i64,
    u2: i64,
    v2: i64,
    w2: i64,
    symbol1: String,
    symbol2: String,
    jones: String,
}

impl From<&Table3Row> for CsvRow {
    fn from(r: &Table3Row) -> Self {
        CsvRow {
            cb: r.c_b,
            beta: r.bennequin,
            u: r.triple.u,
            v: r.triple.v,
            w: r.triple.w,
            u2: r.partner.u,
            v2: r.partner.v,
            w2: r.partner.w,
            symbol1: r.symbol_pair[0].to_string(),
            symbol2: r.symbol_pair[1].to_string(),
            jones: r.jones.to_string(),
        }
    }
}

enum Failure {
    Usage(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::MixedAlphabet => Failure::Usage(e.to_string()),
            other => Failure::Refused(other.to_string()),
        }
    }
}

fn word(text: &str) -> Result<Word, Failure> {
    parse_word(text).map_err(|e| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Refused(e.to_string());
    match command {
        Command::Normalize { word: w } => writeln!(out, "{}", normalize(&word(&w)?)).map_err(io),
        Command::Symbol { word: w } => writeln!(out, "{}", xu_invariant(&word(&w)?)).map_err(io),
        Command::Conjugate { first, second } => {
            let answer = are_conjugate(&word(&first)?, &word(&second)?);
            writeln!(out, "conjugate: {answer}").map_err(io)
        }
        Command::Classify { word: w } => {
            writeln!(out, "{}", json(&classify(&word(&w)?))).map_err(io)
        }
        Command::Invertible { word: w } => {
            writeln!(out, "{}", json(&is_invertible(&word(&w)?))).map_err(io)
        }
        Command::Bennequin { word: w } => writeln!(out, "{}", bennequin(&word(&w)?)).map_err(io),
        Command::Jones { word: w } => writeln!(out, "{}", jones_closure(&word(&w)?)).map_err(io),
        Command::TorusJones { r, s } => writeln!(out, "{}", torus_jones(r, s)?).map_err(io),
        Command::Table3 { max_cb, format } => {
            if max_cb < 5 {
                return Err(Failure::Refused(format!(
                    "--max-cb must be at least 5, got {max_cb}"
                )));
            }
            let rows = enumerate_table3(max_cb);
            match format {
                Format::Json => writeln!(out, "{}", json(&rows)).map_err(io),
                Format::Csv => {
                    let mut writer = csv::Writer::from_writer(out);
                    for row in &rows {
                        writer
                            .serialize(CsvRow::from(row))
                            .map_err(|e| Failure::Refused(e.to_string()))?;
                    }
                    writer.flush().map_err(io)
                }
            }
        }
        Command::VerifyTables { range } => {
            if range < 0 {
                return Err(Failure::Refused(format!(
                    "--range must be nonnegative, got {range}"
                )));
            }
            writeln!(
                out,
                "conjugacy classes of braid index below 3, k in [-{range}, {range}]"
            )
            .map_err(io)?;
            let entries = verify_table1(range);
            for e in &entries {
                let tag = match e.status {
                    RowStatus::Confirmed => "ok",
                    RowStatus::Erratum => "ERRATUM",
                    RowStatus::Mismatch => "MISMATCH",
                };
                write!(
                    out,
                    "{tag:9} {:16} reference {:24} computed {}",
                    e.word,
                    e.reference.to_string(),
                    e.computed
                )
                .map_err(io)?;
                if e.note.is_empty() {
                    writeln!(out).map_err(io)?;
                } else {
                    writeln!(out, "  ({})", e.note).map_err(io)?;
                }
            }
            let confirmed = entries
                .iter()
                .filter(|e| e.status == RowStatus::Confirmed)
                .count();
            writeln!(out, "{confirmed}/{} rows confirmed", entries.len()).map_err(io)?;
            let report = verify_table2(5);
            writeln!(
                out,
                "flype classes, p,q,r <= 5: {} triples checked, {} failures",
                report.checked,
                report.failures.len()
            )
            .map_err(io)?;
            for f in &report.failures {
                writeln!(out, "  {}", json(f)).map_err(io)?;
            }
            Ok(())
        }
    }
}

/// Runs the command line on `args` (including the program name) and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Refused(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_REFUSED
        }
    }
}
