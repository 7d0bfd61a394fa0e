//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical mismatch,
//! 2 on usage or I/O errors.

pub mod cache;
pub mod document;
pub mod oeis;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use cache::{cached_table, Cache};
pub use document::{Entry, Meta, TableDocument, TableKind, VERSION};
pub use oeis::{parse_bfile, OeisReference, Sequence};
pub use verify::{run_claim, Claim, NRange, Outcome};

use crate::error::Error;
use crate::poly::DEFAULT_SEED;
use crate::refined::{drefined_f, extend_matrix, VerificationReport};
use crate::triangle::refined_count;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "asmref", version, about = "Refined enumeration of alternating sign matrices")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Directory for cached tables; defaults to $ASMREF_CACHE.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Seed for the rational sample points of the identity checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Refined counts A_{n,i_1,...,i_d}.
    Count {
        #[arg(long)]
        n: usize,
        /// Refinement depth; every increasing tuple is listed.
        #[arg(long, conflicts_with = "indices")]
        d: Option<usize>,
        /// A single increasing tuple, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        indices: Option<Vec<usize>>,
    },
    /// The extended n x n matrix, or binomial-basis coefficients for d != 2.
    Extend {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Checks a claim over a range of orders.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// Orders to check: `a..b` (inclusive), `a..=b` or `a`.
        #[arg(long = "n", visible_alias = "n-range")]
        range: Option<NRange>,
        /// Refinement depth for conj3, conj4 and gn-reflection.
        #[arg(long)]
        d: Option<usize>,
    },
    /// The triangle of A_{n,k} for n <= 7 and the extended matrices for n = 3..7.
    AppendixA,
    /// Compares computed values with an OEIS b-file.
    OeisCheck {
        bfile: PathBuf,
        #[arg(long, value_enum)]
        which: Sequence,
    },
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return EXIT_USAGE;
            }
            let _ = out.write_all(text.as_bytes());
            return EXIT_PASS;
        }
    };
    let cache = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("ASMREF_CACHE").filter(|v| !v.is_empty()).map(PathBuf::from))
        .map(Cache::new);
    let result = execute(&cli, cache.as_ref(), err);
    match result {
        Ok((text, passed)) => {
            if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if passed {
                EXIT_PASS
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Output text and whether every check passed.
type Rendered = (String, bool);

fn execute(cli: &Cli, cache: Option<&Cache>, err: &mut dyn Write) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Count { n, d, indices } => count(cli.format, cache, *n, *d, indices.as_deref()),
        Command::Extend { n, d } => extend(cli.format, cache, *n, *d),
        Command::Verify { claim, range, d } => {
            let range = range.unwrap_or_else(|| claim.default_range());
            let outcome = run_claim(*claim, range, *d, cli.seed, cache)?;
            Ok(render_reports(cli.format, &outcome.summary, &outcome.orders))
        }
        Command::AppendixA => appendix_a(cli.format, cache),
        Command::OeisCheck { bfile, which } => oeis_check(cli.format, cache, bfile, *which, err),
    }
}

fn render_table(format: Format, doc: &TableDocument) -> String {
    match format {
        Format::Pretty => doc.to_pretty(),
        Format::Json => doc.to_json() + "\n",
        Format::Csv => doc.to_csv(),
    }
}

fn check_order(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    Ok(())
}

fn count(
    format: Format,
    cache: Option<&Cache>,
    n: usize,
    d: Option<usize>,
    indices: Option<&[usize]>,
) -> Result<Rendered, CliError> {
    check_order(n)?;
    let doc = match indices {
        Some(ix) => {
            let v = refined_count(n, ix)?;
            TableDocument::from_refined_entries(n, ix.len(), vec![(ix.to_vec(), v)])
        }
        None => {
            let d = d.unwrap_or(1);
            if d == 0 || d > n {
                return Err(CliError::Usage(format!("depth d = {d} must lie in 1..={n}")));
            }
            TableDocument::from_refined(&cached_table(cache, n, d)?)
        }
    };
    Ok((render_table(format, &doc), true))
}

fn extend(format: Format, cache: Option<&Cache>, n: usize, d: usize) -> Result<Rendered, CliError> {
    if n < 3 {
        return Err(CliError::Usage("extend needs n >= 3".into()));
    }
    if d == 0 || d > n {
        return Err(CliError::Usage(format!("depth d = {d} must lie in 1..={n}")));
    }
    if d == 2 {
        let m = extend_matrix(&cached_table(cache, n, 2)?)?;
        return Ok((render_table(format, &TableDocument::from_extended(&m)), true));
    }
    let f = drefined_f(n, d)?;
    let doc = TableDocument::from_expansion(&f);
    Ok((render_table(format, &doc), f.is_integral()))
}

#[derive(Serialize)]
struct AppendixDocument {
    triangle: Vec<TableDocument>,
    matrices: Vec<TableDocument>,
}

fn appendix_a(format: Format, cache: Option<&Cache>) -> Result<Rendered, CliError> {
    let triangle = (1..=7)
        .map(|n| Ok(TableDocument::from_refined(&cached_table(cache, n, 1)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let matrices = (3..=7)
        .map(|n| Ok(TableDocument::from_extended(&extend_matrix(&cached_table(cache, n, 2)?)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let text = match format {
        Format::Json => {
            let doc = AppendixDocument { triangle, matrices };
            serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("kind,n,indices,value\n");
            let kinds = triangle.iter().map(|d| ("refined", d)).chain(matrices.iter().map(|d| ("extended", d)));
            for (kind, doc) in kinds {
                for e in &doc.entries {
                    let ix: Vec<String> = e.indices.iter().map(ToString::to_string).collect();
                    let _ = writeln!(s, "{kind},{},{},{}", doc.n, ix.join(" "), e.value);
                }
            }
            s
        }
        Format::Pretty => {
            let width = triangle
                .iter()
                .flat_map(|d| d.entries.iter().map(|e| e.value.len()))
                .max()
                .unwrap_or(1);
            let rows: Vec<String> = triangle
                .iter()
                .map(|d| {
                    let cells: Vec<String> = d.entries.iter().map(|e| format!("{:>width$}", e.value)).collect();
                    cells.join(" ")
                })
                .collect();
            let longest = rows.last().map_or(0, String::len);
            let mut s = String::from("A(n, k), 1 <= n <= 7\n\n");
            for row in &rows {
                let pad = (longest - row.len()) / 2;
                let _ = writeln!(s, "{}{}", " ".repeat(pad), row.trim_end());
            }
            for doc in &matrices {
                let _ = write!(s, "\nn = {}\n{}", doc.n, doc.to_pretty());
            }
            s
        }
    };
    Ok((text, true))
}

fn oeis_check(
    format: Format,
    cache: Option<&Cache>,
    path: &std::path::Path,
    which: Sequence,
    err: &mut dyn Write,
) -> Result<Rendered, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let reference = parse_bfile(&text, oeis::id_from_path(path))?;
    let max_n = crate::triangle::Budget::default().max_n_shallow;
    // Order of the table holding the term with file index `m`.
    let order = |m: i64| match which {
        Sequence::Totals => m,
        Sequence::RefinedRow1 => m + 1,
    };
    let overlap: Vec<(i64, crate::arith::Int)> = reference
        .indexed()
        .filter(|&(m, _)| (0..=max_n as i64).contains(&order(m)))
        .collect();
    let range = match (overlap.first(), overlap.last()) {
        (Some((a, _)), Some((b, _))) => format!("index = {a}..{b}"),
        _ => "empty".to_string(),
    };
    let mut report = VerificationReport::new(format!("oeis {} {}", reference.id, which.name()), range);
    if overlap.is_empty() {
        let _ = writeln!(err, "warning: no terms of {} fall in the computable range", reference.id);
    }
    for (m, value) in &overlap {
        let n = order(*m) as usize;
        let computed = match (which, n) {
            (_, 0) => crate::arith::int(1),
            (Sequence::Totals, _) => cached_table(cache, n, 1)?.total(),
            (Sequence::RefinedRow1, _) => cached_table(cache, n, 1)?.get(&[1]).expect("complete row").clone(),
        };
        report.compare(|| format!("term {m}"), value, &computed);
    }
    let passed = report.passed();
    Ok((render_reports(format, &report, &[]).0, passed))
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    #[serde(flatten)]
    summary: &'a VerificationReport,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    orders: &'a [VerificationReport],
}

fn render_reports(format: Format, summary: &VerificationReport, orders: &[VerificationReport]) -> Rendered {
    let text = match format {
        Format::Pretty => {
            let mut s = String::new();
            if orders.len() > 1 {
                for r in orders {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{status} {} ({}): {} checks, {} failures", r.claim, r.range, r.checked, r.failures);
                }
            }
            let _ = writeln!(s, "{summary}");
            s
        }
        Format::Json => {
            let doc = ReportDocument { summary, orders };
            serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("claim,range,status,checked,failures\n");
            for r in orders.iter().chain(std::iter::once(summary)) {
                let status = if r.passed() { "pass" } else { "fail" };
                let _ = writeln!(s, "{},{},{status},{},{}", r.claim, r.range, r.checked, r.failures);
            }
            s
        }
    };
    (text, summary.passed())
}
