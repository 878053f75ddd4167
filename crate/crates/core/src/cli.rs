//! Command-line front end. `run` returns the exit code and rendered output so
//! the binary and the tests share one code path.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::verify::{spanning_suite, verify_suite, Report, DEFAULT_SEED};
use crate::algebra::words::spanning_count;
use crate::algebra::{AlgebraElement, Engine};
use crate::connector::{connector_count, enumerate_connectors};
use crate::diagram::SliceWord;
use crate::error::{Error, Result};
use crate::kauffman::{gram_certificate, gram_matrix, DEFAULT_MAX_GRAM_N};

/// Largest n for which `connectors` lists the basis.
pub const MAX_LIST_N: usize = 8;
/// Largest n for which `spanning` builds the family word by word.
pub const MAX_SPANNING_BUILD_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bmw",
    version,
    about = "Exact computation in the Kauffman tangle algebra"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_GRAM_N, global = true)]
    pub max_gram_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of connectors on n strands, (2n-1)!!
    Dim { n: usize },
    /// List the connectors on n strands in canonical order
    Connectors { n: usize },
    /// Normal form of a word in g_i, g_i^-1, e_i
    Normalize {
        #[arg(short = 'n')]
        n: usize,
        word: String,
    },
    /// Product of two elements; each is a word or `coef * [connector] + ...`
    Mul {
        #[arg(short = 'n')]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Dubrovnik polynomial of the closure of a word
    Kauffman {
        #[arg(short = 'n')]
        n: usize,
        word: String,
    },
    /// Gram matrix of the closure pairing and its certificate
    Gram { n: usize },
    /// Check the defining relations and derived identities
    Verify {
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Sizes of the rank-filtered spanning family against dim
    Spanning { n: usize, r: Option<usize> },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn checked(stdout: String, passed: bool) -> Self {
        Outcome {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses a word, or `0` / an element literal when the text contains `[`.
pub fn parse_operand(eng: &Engine, n: usize, text: &str) -> Result<AlgebraElement> {
    if text.contains('[') || text.trim() == "0" {
        AlgebraElement::parse(n, text)
    } else {
        Ok(eng.normalize(&SliceWord::parse(n, text)?))
    }
}

fn json_line(v: Value) -> String {
    // serde_json's default map is ordered, so keys come out sorted
    let mut s = serde_json::to_string(&v).expect("values serialise");
    s.push('\n');
    s
}

fn element_json(n: usize, x: &AlgebraElement) -> Value {
    json!({ "n": n, "terms": x.to_json(), "text": x.to_string() })
}

fn report_text(report: &Report) -> String {
    let mut out = String::new();
    for c in report.checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(
            out,
            "FAIL {}: {}",
            c.name,
            c.detail.as_deref().unwrap_or("")
        );
    }
    let _ = writeln!(
        out,
        "n={} seed={} checks={} failures={}",
        report.n,
        report.seed,
        report.checks.len(),
        report.failures()
    );
    out
}

fn report_json(report: &Report) -> Value {
    let mut v = serde_json::to_value(report).expect("report serialises");
    v["failures"] = json!(report.failures());
    v
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    let eng = Engine::new();
    match &cli.command {
        Command::Dim { n } => {
            let d = connector_count(*n);
            Ok(Outcome::ok(if json {
                json_line(json!({ "dim": d.to_string(), "n": n }))
            } else {
                format!("{d}\n")
            }))
        }
        Command::Connectors { n } => {
            if *n > MAX_LIST_N {
                return Err(Error::LimitExceeded {
                    n: *n,
                    max: MAX_LIST_N,
                });
            }
            let all: Vec<String> = enumerate_connectors(*n)
                .iter()
                .map(|c| c.to_string())
                .collect();
            Ok(Outcome::ok(if json {
                json_line(json!({ "connectors": all, "n": n }))
            } else {
                all.iter().map(|c| format!("{c}\n")).collect()
            }))
        }
        Command::Normalize { n, word } => {
            let x = eng.normalize(&SliceWord::parse(*n, word)?);
            Ok(Outcome::ok(if json {
                json_line(element_json(*n, &x))
            } else {
                format!("{x}\n")
            }))
        }
        Command::Mul { n, a, b } => {
            let x = parse_operand(&eng, *n, a)?;
            let y = parse_operand(&eng, *n, b)?;
            let p = eng.multiply(&x, &y)?;
            Ok(Outcome::ok(if json {
                json_line(element_json(*n, &p))
            } else {
                format!("{p}\n")
            }))
        }
        Command::Kauffman { n, word } => {
            let w = SliceWord::parse(*n, word)?;
            let d = eng.dubrovnik(&w);
            Ok(Outcome::ok(if json {
                json_line(json!({ "dubrovnik": d.to_string(), "n": n, "word": w.to_string() }))
            } else {
                format!("{d}\n")
            }))
        }
        Command::Gram { n } => {
            let g = gram_matrix(&eng, *n, cli.max_gram_n)?;
            let cert = gram_certificate(&g)?;
            let passed = cert.pattern_ok && cert.det_nonzero;
            let out = if json {
                let matrix: Vec<Vec<String>> = g
                    .entries
                    .iter()
                    .map(|row| row.iter().map(|v| v.to_string()).collect())
                    .collect();
                let conns: Vec<String> = g.connectors.iter().map(|c| c.to_string()).collect();
                json_line(json!({
                    "certificate": serde_json::to_value(&cert).expect("certificate serialises"),
                    "connectors": conns,
                    "det_nonzero": cert.det_nonzero,
                    "delta_n2_coeff": cert.delta_n2_coeff,
                    "matrix": matrix,
                    "n": n,
                    "pattern_ok": cert.pattern_ok,
                }))
            } else {
                let mut s = String::new();
                for (c, row) in g.connectors.iter().zip(&g.entries) {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(s, "{c}: {}", cells.join(" | "));
                }
                let _ = writeln!(s, "pattern_ok: {}", cert.pattern_ok);
                for f in &cert.pattern_failures {
                    let _ = writeln!(s, "  {f}");
                }
                let _ = writeln!(s, "e(det A) = {}", cert.brauer_det);
                let _ = writeln!(s, "delta_n2_coeff: {}", cert.delta_n2_coeff);
                let _ = writeln!(s, "top_coeff: {}", cert.top_coeff);
                let _ = writeln!(
                    s,
                    "det_nonzero: {} ({})",
                    cert.det_nonzero, cert.det_witness
                );
                s
            };
            Ok(Outcome::checked(out, passed))
        }
        Command::Verify { n, samples } => {
            let report = verify_suite(&eng, *n, cli.seed, *samples)?;
            let out = if json {
                json_line(report_json(&report))
            } else {
                report_text(&report)
            };
            Ok(Outcome::checked(out, report.ok()))
        }
        Command::Spanning { n, r } => {
            let ranks: Vec<usize> = match r {
                Some(r) => vec![*r],
                None => (n % 2..=*n).step_by(2).collect(),
            };
            let mut sizes = Vec::new();
            for &r in &ranks {
                let size = spanning_count(*n, r).ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "n - r must be a non-negative even number (n={n}, r={r})"
                    ))
                })?;
                sizes.push((r, size));
            }
            let report = spanning_suite(&eng, *n, MAX_SPANNING_BUILD_N)?;
            let out = if json {
                let per: Vec<Value> = sizes
                    .iter()
                    .map(|(r, s)| json!({ "r": r, "size": s.to_string() }))
                    .collect();
                json_line(json!({
                    "dim": connector_count(*n).to_string(),
                    "n": n,
                    "report": report_json(&report),
                    "sizes": per,
                }))
            } else {
                let mut s = String::new();
                for (r, size) in &sizes {
                    let _ = writeln!(s, "r={r}: {size}");
                }
                let _ = writeln!(s, "dim: {}", connector_count(*n));
                s.push_str(&report_text(&report));
                s
            };
            Ok(Outcome::checked(out, report.ok()))
        }
    }
}

/// Parses arguments (the first is the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
