//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
//! 3 undecided stream comparison.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::error::Error;
use crate::exactnum::{cf_expand, CfStream, Rational, DEFAULT_COMPARE_ITERS};
use crate::expr::parse_rational_function;
use crate::render::{cf_json, emit_json, path_dot, path_json, ringgens_json, trace_dot, trace_json};
use crate::resolution::resolve;
use crate::valring::{membership_by_value, membership_structural, membership_union, ring_generators, UnionSearch};
use crate::valtree::{positive_path, PathStatus, DEFAULT_MAX_STEPS};
use crate::valuation::{MonomialValuation, Value};
use crate::verify::run_verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_INDECISIVE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "cuspval",
    version,
    about = "Monomial valuations, valuation-tree paths and cusp resolutions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continued fraction of a rational `p/q`.
    Cf {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Positive path of `nu(x) = a, nu(y) = b`, or of `nu(x) = rho, nu(y) = 1`.
    Path {
        #[arg(requires = "b")]
        a: Option<i64>,
        b: Option<i64>,
        /// `sqrt2`, or digits with a parenthesized period such as `2;(1,1,1,4)`.
        #[arg(long, conflicts_with = "a")]
        stream: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Convergent brackets allowed per stream comparison.
        #[arg(long, default_value_t = DEFAULT_COMPARE_ITERS)]
        compare_iters: usize,
    },
    /// Generators `u, v` of the valuation ring.
    Ringgens { a: i64, b: i64 },
    /// Membership of a rational function in the valuation ring.
    Member {
        expr: String,
        #[arg(long, requires = "b")]
        a: Option<i64>,
        #[arg(long, requires = "a")]
        b: Option<i64>,
        #[arg(long, conflicts_with = "a")]
        stream: Option<String>,
        /// Path vertices searched for monomials under a stream valuation.
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Convergent brackets allowed per stream comparison.
        #[arg(long, default_value_t = DEFAULT_COMPARE_ITERS)]
        compare_iters: usize,
    },
    /// Resolve `x^b = y^a` by blow-ups.
    Resolve {
        a: i64,
        b: i64,
        #[arg(long)]
        trace: bool,
    },
    /// Check every coprime `1 < b < a <= max`.
    Verify {
        #[arg(long)]
        max: i64,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = std::result::Result<(String, i32), Failure>;

/// Parses `sqrt2` or a digit list whose period is in parentheses.
pub fn parse_stream(text: &str) -> crate::error::Result<CfStream> {
    let text = text.trim();
    if text == "sqrt2" {
        return Ok(CfStream::sqrt2());
    }
    let bad = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("stream '{text}': {msg}"),
    };
    let (pre, rest) = text
        .split_once('(')
        .ok_or_else(|| bad("expected a parenthesized period"))?;
    let period = rest
        .strip_suffix(')')
        .ok_or_else(|| bad("period must close the stream"))?;
    let digits = |s: &str| -> crate::error::Result<Vec<BigInt>> {
        s.split([',', ';'])
            .map(str::trim)
            .filter(|d| !d.is_empty())
            .map(|d| d.parse::<BigInt>().map_err(|_| bad(&format!("bad digit '{d}'"))))
            .collect()
    };
    CfStream::periodic(digits(pre)?, digits(period)?)
}

fn no_dot(format: Format) -> std::result::Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::Usage(
            "dot output is only available for path and resolve".into(),
        ))
    } else {
        Ok(())
    }
}

fn cmd_cf(value: &str, format: Format) -> CmdResult {
    no_dot(format)?;
    let r: Rational = value
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("'{value}' is not a rational p/q")))?;
    let cf = cf_expand(&r);
    Ok(match format {
        Format::Json => (emit_json(&cf_json(&cf)), EXIT_OK),
        _ => (format!("{cf}\n"), EXIT_OK),
    })
}

fn cmd_path(
    a: Option<i64>,
    b: Option<i64>,
    stream: Option<&str>,
    max_steps: usize,
    compare_iters: usize,
    format: Format,
) -> CmdResult {
    let nu = match (a, b, stream) {
        (Some(a), Some(b), None) => MonomialValuation::integral(a, b)?,
        (None, None, Some(s)) => MonomialValuation::stream(parse_stream(s)?)?.with_compare_iters(compare_iters),
        _ => return Err(Failure::Usage("path needs <a> <b> or --stream".into())),
    };
    let path = positive_path(&nu, max_steps)?;
    Ok(match format {
        Format::Json => (emit_json(&path_json(&path)), EXIT_OK),
        Format::Dot => (path_dot(&path), EXIT_OK),
        Format::Text => {
            let mut s = String::new();
            for v in &path.vertices {
                writeln!(s, "{v}").unwrap();
            }
            match path.status {
                PathStatus::Complete => s.push_str("status: complete\n"),
                PathStatus::Truncated { at } => writeln!(s, "status: truncated after {at}").unwrap(),
            }
            (s, EXIT_OK)
        }
    })
}

fn cmd_ringgens(a: i64, b: i64, format: Format) -> CmdResult {
    no_dot(format)?;
    let r = ring_generators(a, b)?;
    Ok(match format {
        Format::Json => (emit_json(&ringgens_json(&r)), EXIT_OK),
        _ => (format!("u = {}\nv = {}\np = {}, q = {}\n", r.u, r.v, r.p, r.q), EXIT_OK),
    })
}

fn cmd_member(
    expr: &str,
    ab: Option<(i64, i64)>,
    stream: Option<&str>,
    max_steps: usize,
    compare_iters: usize,
    format: Format,
) -> CmdResult {
    no_dot(format)?;
    let r = parse_rational_function(expr)?;
    if r.is_zero() {
        // nu(0) is infinite, so 0 is always a member
        let out = match format {
            Format::Json => emit_json(&json!({ "member": true, "value": "infinity" })),
            _ => "member: true\nvalue: infinity\n".into(),
        };
        return Ok((out, EXIT_OK));
    }
    match (ab, stream) {
        (Some((a, b)), None) => {
            let pres = ring_generators(a, b)?;
            let nu = MonomialValuation::integral(a, b)?;
            let structural = membership_structural(&r, &pres)?;
            let by_value = membership_by_value(&r, &nu)?;
            let v = nu.value_of_rational_function(&r)?;
            let value = v.m * a + v.n * b;
            let code = if structural.member == by_value && structural.gap == value {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            let out = match format {
                Format::Json => emit_json(&json!({
                    "member": structural.member,
                    "by_value": by_value,
                    "gap": structural.gap,
                    "value": value,
                })),
                _ => format!(
                    "member: {}\nvalue: {value}\nv-gap: {}\nby value: {by_value}\n",
                    structural.member, structural.gap
                ),
            };
            Ok((out, code))
        }
        (None, Some(s)) => {
            let nu = MonomialValuation::stream(parse_stream(s)?)?.with_compare_iters(compare_iters);
            let v = nu.value_of_rational_function(&r)?;
            let member = membership_by_value(&r, &nu)?;
            let union = match (r.denom().as_term(), r.numer().as_term()) {
                (Some(_), Some((m, _))) => Some(membership_union(m, &nu, max_steps)?),
                _ => None,
            };
            let out = match format {
                Format::Json => {
                    let union = union.map(|u| match u {
                        UnionSearch::Found { index, vertex } => json!({
                            "found": true,
                            "index": index,
                            "vertex": { "f": vertex.f.to_string(), "g": vertex.g.to_string() },
                        }),
                        UnionSearch::NotFoundWithinBound { searched } => {
                            json!({ "found": false, "searched": searched })
                        }
                    });
                    emit_json(&json!({
                        "member": member,
                        "value": { "m": v.m, "n": v.n },
                        "union": union,
                    }))
                }
                _ => {
                    let mut s = format!("member: {member}\nvalue: {}\n", stream_value(v));
                    match union {
                        Some(UnionSearch::Found { index, vertex }) => {
                            writeln!(s, "found at path vertex {index}: {vertex}").unwrap()
                        }
                        Some(UnionSearch::NotFoundWithinBound { searched }) => {
                            writeln!(s, "not in the first {searched} path vertices").unwrap()
                        }
                        None => {}
                    }
                    s
                }
            };
            Ok((out, EXIT_OK))
        }
        _ => Err(Failure::Usage("member needs --a and --b, or --stream".into())),
    }
}

fn stream_value(v: Value) -> String {
    let rho = match v.m {
        0 => return v.n.to_string(),
        1 => "rho".to_string(),
        -1 => "-rho".to_string(),
        m => format!("{m}*rho"),
    };
    match v.n.cmp(&0) {
        std::cmp::Ordering::Equal => rho,
        std::cmp::Ordering::Less => format!("{rho} - {}", -v.n),
        std::cmp::Ordering::Greater => format!("{rho} + {}", v.n),
    }
}

fn cmd_resolve(a: i64, b: i64, trace: bool, format: Format) -> CmdResult {
    let t = resolve(a, b)?;
    Ok(match format {
        Format::Json => (emit_json(&trace_json(&t)), EXIT_OK),
        Format::Dot => (trace_dot(&t), EXIT_OK),
        Format::Text => {
            let mut s = format!("blow-ups: {}\n", t.blow_up_count());
            if trace {
                for (i, step) in t.steps.iter().enumerate() {
                    writeln!(s, "{i}: {} {}", step.classification, step.chart).unwrap();
                    for (c, k) in &step.children {
                        writeln!(s, "   -> {k} {c}").unwrap();
                    }
                }
            }
            (s, EXIT_OK)
        }
    })
}

fn cmd_verify(max: i64, format: Format) -> CmdResult {
    no_dot(format)?;
    let report = run_verify(max);
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    Ok(match format {
        Format::Json => (emit_json(&report.to_json()), code),
        _ => (report.to_text(), code),
    })
}

fn dispatch(cli: &Cli) -> CmdResult {
    let f = cli.format;
    match &cli.command {
        Command::Cf { value } => cmd_cf(value, f),
        Command::Path {
            a,
            b,
            stream,
            max_steps,
            compare_iters,
        } => cmd_path(*a, *b, stream.as_deref(), *max_steps, *compare_iters, f),
        Command::Ringgens { a, b } => cmd_ringgens(*a, *b, f),
        Command::Member {
            expr,
            a,
            b,
            stream,
            max_steps,
            compare_iters,
        } => cmd_member(expr, a.zip(*b), stream.as_deref(), *max_steps, *compare_iters, f),
        Command::Resolve { a, b, trace } => cmd_resolve(*a, *b, *trace, f),
        Command::Verify { max } => cmd_verify(*max, f),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stderr: text,
                    code,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    stdout: text,
                    code,
                    ..Outcome::default()
                }
            };
        }
    };
    let (stdout, code) = match dispatch(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            return Outcome {
                stderr: format!("error: {msg}\n"),
                code: EXIT_USAGE,
                ..Outcome::default()
            }
        }
        Err(Failure::Lib(e)) => {
            let code = match e {
                Error::Indecisive { .. } => EXIT_INDECISIVE,
                _ => EXIT_USAGE,
            };
            return Outcome {
                stderr: format!("error: {e}\n"),
                code,
                ..Outcome::default()
            };
        }
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &stdout) {
            Ok(()) => Outcome {
                code,
                ..Outcome::default()
            },
            Err(e) => Outcome {
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
                code: EXIT_USAGE,
                ..Outcome::default()
            },
        },
        None => Outcome {
            stdout,
            code,
            ..Outcome::default()
        },
    }
}
