//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure or disagreement, 2 usage
//! error. All numbers are printed as exact decimal strings.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::exact::{Int, Rational};
use crate::multiangle::{tan_addition_oracle, tan_beeler, tan_float_check, tan_gaussian_oracle, FloatCheck, TanValue};
use crate::symbolic::{hoffman_p, hoffman_q, r_poly_closed, t_poly_closed, YPoly};
use crate::triangles::{Family, TriangleRow};
use crate::verify::{self, Suite, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Row cap for `M` and `N`, whose entries grow factorially.
pub const MAX_FACTORIAL_ROWS: u64 = 60;

#[derive(Debug, Parser)]
#[command(name = "tanpoly", version, about = "Exact tan(nx) coefficient triangles and derivative polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows of a coefficient triangle.
    Triangle {
        /// R, T, M, N, Rtilde or Ttilde.
        #[arg(long)]
        name: Family,
        #[arg(long)]
        rows: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print one polynomial of the R, T, P or Q family.
    Poly {
        #[arg(long, value_enum)]
        family: PolyFamily,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Evaluate tan(n·x) exactly for tan(x) = t.
    Tan {
        #[arg(long)]
        n: u32,
        /// Rational `p/q` or integer.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum, default_value_t = Method::Beeler)]
        method: Method,
        /// Also print the difference from f64 trigonometry.
        #[arg(long)]
        float: bool,
    },
    /// Run identity-checking suites.
    Verify {
        /// rt-recurrences, corollary, dz-expansion, hoffman, theorem2, tables, beeler or all.
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Bfile,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    #[value(name = "R")]
    R,
    #[value(name = "T")]
    T,
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Beeler,
    Addition,
    Gaussian,
    All,
}

/// A rejected invocation; always exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn join(entries: &[Int], sep: &str) -> String {
    entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(sep)
}

/// Renders triangle rows. `bfile` numbers entries from 1, reading rows left
/// to right; every line ends with `\n`.
pub fn render_rows(rows: &[TriangleRow], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Table | OutputFormat::Csv => {
            let sep = if format == OutputFormat::Table { " " } else { "," };
            for row in rows {
                out.push_str(&join(&row.entries, sep));
                out.push('\n');
            }
        }
        OutputFormat::Bfile => {
            for (i, v) in rows.iter().flat_map(|r| &r.entries).enumerate() {
                out.push_str(&format!("{} {}\n", i + 1, v));
            }
        }
        OutputFormat::Json => {
            out.push_str(&serde_json::to_string(rows).expect("rows serialize"));
            out.push('\n');
        }
    }
    out
}

/// Parses b-file text into its values, checking that indices run 1, 2, 3, ...
/// Blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<Int>, UsageError> {
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || usage(format!("b-file line {}: {line:?}", lineno + 1));
        let (idx, val) = line.split_once(' ').ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx != values.len() + 1 {
            return Err(bad());
        }
        values.push(Int::from_str(val).map_err(|_| bad())?);
    }
    Ok(values)
}

/// Splits a flat sequence back into rows of the given family, starting at
/// its first row. Fails unless the values fill whole rows exactly.
pub fn chunk_rows(family: Family, values: &[Int]) -> Result<Vec<TriangleRow>, UsageError> {
    let mut rows = Vec::new();
    let mut rest = values;
    let mut n = family.first_row();
    while !rest.is_empty() {
        let len = family.row_len(n);
        if len > rest.len() {
            return Err(usage(format!("{} values do not fill row {n} of {family}", rest.len())));
        }
        let (head, tail) = rest.split_at(len);
        rows.push(TriangleRow::new(n, head.to_vec()));
        rest = tail;
        n += 1;
    }
    Ok(rows)
}

pub fn cmd_triangle(family: Family, rows: u64, format: OutputFormat) -> Result<String, UsageError> {
    if rows == 0 {
        return Err(usage("--rows must be at least 1"));
    }
    if matches!(family, Family::M | Family::N) && rows > MAX_FACTORIAL_ROWS {
        return Err(usage(format!("--rows for {family} must be at most {MAX_FACTORIAL_ROWS}")));
    }
    let rows = family.rows(rows).map_err(|e| usage(e.to_string()))?;
    Ok(render_rows(&rows, format))
}

pub fn poly(family: PolyFamily, n: u32) -> Result<YPoly, UsageError> {
    let res = match family {
        PolyFamily::R => r_poly_closed(n),
        PolyFamily::T => t_poly_closed(n),
        PolyFamily::P => Ok(hoffman_p(n)),
        PolyFamily::Q => Ok(hoffman_q(n)),
    };
    res.map_err(|e| usage(e.to_string()))
}

pub fn cmd_poly(family: PolyFamily, n: u32, format: OutputFormat) -> Result<String, UsageError> {
    let p = poly(family, n)?;
    let body = match format {
        OutputFormat::Table => p.to_string(),
        OutputFormat::Json => serde_json::to_string(&p).expect("poly serializes"),
        OutputFormat::Csv => p.terms().map(|(e, c)| format!("{e},{c}")).collect::<Vec<_>>().join("\n"),
        OutputFormat::Bfile => return Err(usage("bfile output applies to triangles only")),
    };
    Ok(body + "\n")
}

/// Returns the text and whether all requested methods agree.
pub fn cmd_tan(n: u32, t: &str, method: Method, float: bool) -> Result<(String, bool), UsageError> {
    let t: Rational = t.parse().map_err(|e| usage(format!("--t: {e}")))?;
    let mut out = String::new();
    let mut agree = true;
    match method {
        Method::Beeler => out.push_str(&format!("{}\n", tan_beeler(n, &t))),
        Method::Addition => out.push_str(&format!("{}\n", tan_addition_oracle(n, &t))),
        Method::Gaussian => out.push_str(&format!("{}\n", tan_gaussian_oracle(n, &t))),
        Method::All => {
            let values: [(&str, TanValue); 3] = [
                ("beeler", tan_beeler(n, &t)),
                ("addition", tan_addition_oracle(n, &t)),
                ("gaussian", tan_gaussian_oracle(n, &t)),
            ];
            for (name, v) in &values {
                out.push_str(&format!("{name} {v}\n"));
            }
            agree = values.iter().all(|(_, v)| *v == values[0].1);
            out.push_str(if agree { "agree\n" } else { "disagree\n" });
        }
    }
    if float {
        match tan_float_check(n, &t) {
            FloatCheck::Diff(d) => out.push_str(&format!("float-diff {d:e}\n")),
            FloatCheck::NotApplicable => out.push_str("float-diff n/a\n"),
        }
    }
    Ok((out, agree))
}

pub fn cmd_verify(suite: Suite, max_n: u64) -> Result<VerifyReport, UsageError> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    Ok(verify::run(suite, max_n))
}

fn dispatch(cmd: Command) -> Result<(String, i32), UsageError> {
    match cmd {
        Command::Triangle { name, rows, format } => Ok((cmd_triangle(name, rows, format)?, EXIT_OK)),
        Command::Poly { family, n, format } => Ok((cmd_poly(family, n, format)?, EXIT_OK)),
        Command::Tan { n, t, method, float } => {
            let (text, agree) = cmd_tan(n, &t, method, float)?;
            Ok((text, if agree { EXIT_OK } else { EXIT_FAILURE }))
        }
        Command::Verify { suite, max_n, json } => {
            let report = cmd_verify(suite, max_n)?;
            let text = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.render_text()
            };
            Ok((text, if report.pass { EXIT_OK } else { EXIT_FAILURE }))
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_FAILURE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
