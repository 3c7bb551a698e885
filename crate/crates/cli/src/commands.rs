//! The `trop` command surface.
//!
//! Exit codes: 0 for success or an affirmative answer, 1 for a negative
//! answer or a failing check, 2 for any error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use trop_core::duality::{theta, theta_prime, SpanCheck};
use trop_core::greens::{decide, DOptions};
use trop_core::{ConvexSpan, Domain, Orientation, Relation, TropMatrix, TropVector};

use crate::harness::{self, HarnessConfig};
use crate::io::{self, CliError};
use crate::json;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trop",
    version,
    about = "Exact max-plus linear algebra and Green's relations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Row,
    Col,
}

impl Side {
    fn orientation(self) -> Orientation {
        match self {
            Side::Row => Orientation::Row,
            Side::Col => Orientation::Column,
        }
    }
}

fn parse_domain(s: &str) -> Result<Domain, String> {
    s.parse()
        .map_err(|_| format!("unknown domain `{s}` (expected ft, t or tbar)"))
}

fn parse_relation(s: &str) -> Result<Relation, String> {
    s.parse()
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected `min:max`")?;
    let lo = lo.parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi = hi.parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    Ok((lo, hi))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The residual <x|y>.
    Bracket { x: PathBuf, y: PathBuf },
    /// The Hilbert projective distance.
    Metric { x: PathBuf, y: PathBuf },
    /// The max-plus product A B.
    Mul { a: PathBuf, b: PathBuf },
    /// theta_A(x) = A(-x)^T for a row vector, or theta'_A(y) with --inverse.
    Dual {
        a: PathBuf,
        v: PathBuf,
        #[arg(long)]
        inverse: bool,
        /// Reject inputs outside the span instead of warning.
        #[arg(long)]
        strict: bool,
    },
    /// Membership of a vector in the span of the rows or columns of S.
    Member {
        v: PathBuf,
        s: PathBuf,
        #[arg(long, value_enum, default_value = "col")]
        orientation: Side,
        #[arg(long, value_parser = parse_domain, default_value = "tbar")]
        domain: Domain,
    },
    /// The weak basis of the span of the rows or columns of S.
    Basis {
        s: PathBuf,
        #[arg(long, value_enum, default_value = "col")]
        orientation: Side,
        #[arg(long, value_parser = parse_domain, default_value = "tbar")]
        domain: Domain,
    },
    /// Decides a Green's relation between two square matrices.
    Green {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_parser = parse_relation)]
        relation: Relation,
        #[arg(long, value_parser = parse_domain, default_value = "t")]
        domain: Domain,
        /// Writes the verified verdict with its witness here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Lifts the size limits of the D search.
        #[arg(long)]
        no_size_guard: bool,
    },
    /// Runs a property of the catalog, or replays a counterexample file.
    Check {
        #[arg(long, required_unless_present = "replay")]
        property: Option<String>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_parser = parse_dims)]
        dims: Option<(usize, usize)>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for counterexample files.
        #[arg(long, default_value = "trop-counterexamples")]
        out: PathBuf,
        #[arg(long, conflicts_with_all = ["property", "trials", "dims"])]
        replay: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn out(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn warn(mut self, line: String) -> Self {
        self.stderr.push_str(&line);
        self.stderr.push('\n');
        self
    }
}

pub fn execute(cli: Cli) -> Outcome {
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_ERROR,
        },
    }
}

fn yes_no(holds: bool) -> i32 {
    if holds {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

/// The rel_D limits: `TROP_MAX_N` raises the dimension bound and
/// `--no-size-guard` removes both bounds.
fn d_options(no_guard: bool) -> Result<DOptions, CliError> {
    if no_guard {
        return Ok(DOptions::unguarded());
    }
    let mut opts = DOptions::default();
    if let Ok(v) = std::env::var("TROP_MAX_N") {
        opts.max_n = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("TROP_MAX_N must be a count, found `{v}`")))?;
    }
    Ok(opts)
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Bracket { x, y } => {
            let (x, y) = (io::read_vector(&x)?, io::read_vector(&y)?);
            Ok(Outcome::out(format!("{}\n", x.bracket(&y)?), EXIT_YES))
        }
        Command::Metric { x, y } => {
            let (x, y) = (io::read_vector(&x)?, io::read_vector(&y)?);
            Ok(Outcome::out(format!("{}\n", x.hilbert(&y)?), EXIT_YES))
        }
        Command::Mul { a, b } => {
            let (a, b) = (io::read_matrix(&a)?, io::read_matrix(&b)?);
            Ok(Outcome::out(a.mul(&b)?.to_string(), EXIT_YES))
        }
        Command::Dual {
            a,
            v,
            inverse,
            strict,
        } => dual(&a, &v, inverse, strict),
        Command::Member {
            v,
            s,
            orientation,
            domain,
        } => {
            let v = io::read_vector(&v)?.with_orientation(orientation.orientation());
            let span = span_of(&io::read_matrix(&s)?, orientation, domain)?;
            Ok(match span.member(&v)? {
                Some(coeffs) => Outcome::out(
                    format!("yes\n{}", TropMatrix::from_vector(&TropVector::row(coeffs))),
                    EXIT_YES,
                ),
                None => Outcome::out("no\n".into(), EXIT_NO),
            })
        }
        Command::Basis {
            s,
            orientation,
            domain,
        } => {
            let basis = span_of(&io::read_matrix(&s)?, orientation, domain)?.weak_basis();
            let text = match basis.to_matrix() {
                Some(m) => m.to_string(),
                None => match orientation {
                    Side::Row => format!("0 {}\n", basis.dim()),
                    Side::Col => format!("{} 0\n", basis.dim()),
                },
            };
            Ok(Outcome::out(text, EXIT_YES))
        }
        Command::Green {
            a,
            b,
            relation,
            domain,
            witness,
            format,
            no_size_guard,
        } => {
            let (a, b) = (io::read_matrix(&a)?, io::read_matrix(&b)?);
            let verdict = decide(relation, &a, &b, domain, &d_options(no_size_guard)?)?;
            if let Some(path) = witness {
                io::write_text(&path, &verdict.to_string())?;
            }
            let code = yes_no(verdict.holds);
            Ok(match format {
                Format::Json => Outcome::out(to_json(&json::verdict(&verdict)), code),
                Format::Text => {
                    let answer = if verdict.holds { "yes" } else { "no" };
                    let mut o = Outcome::out(format!("{answer}\n"), code);
                    for r in &verdict.refutation {
                        o = o.warn(format!("reason: {r}"));
                    }
                    o
                }
            })
        }
        Command::Check {
            property,
            trials,
            dims,
            seed,
            out,
            replay,
            format,
        } => match replay {
            Some(path) => replay_file(&path, format),
            None => {
                let property = property.expect("clap requires --property without --replay");
                let mut cfg = HarnessConfig::defaults(&property)?.with_seed(seed);
                if let Some(t) = trials {
                    cfg = cfg.with_trials(t);
                }
                if let Some((lo, hi)) = dims {
                    cfg = cfg.with_dims(lo, hi);
                }
                check(&cfg, &out, format)
            }
        },
    }
}

fn span_of(m: &TropMatrix, side: Side, domain: Domain) -> Result<ConvexSpan, CliError> {
    Ok(match side {
        Side::Row => ConvexSpan::row_space(m, domain)?,
        Side::Col => ConvexSpan::column_space(m, domain)?,
    })
}

fn dual(
    a: &std::path::Path,
    v: &std::path::Path,
    inverse: bool,
    strict: bool,
) -> Result<Outcome, CliError> {
    let a = io::read_matrix(a)?;
    let v = io::read_vector(v)?;
    let mode = if strict {
        SpanCheck::Strict
    } else {
        SpanCheck::Lenient
    };
    let (v, span, name) = if inverse {
        let v = v.with_orientation(Orientation::Column);
        (v, ConvexSpan::column_space(&a, Domain::Completed)?, "C(A)")
    } else {
        let v = v.with_orientation(Orientation::Row);
        (v, ConvexSpan::row_space(&a, Domain::Completed)?, "R(A)")
    };
    let result = if inverse {
        theta_prime(&a, &v, mode)?
    } else {
        theta(&a, &v, mode)?
    };
    let mut o = Outcome::out(TropMatrix::from_vector(&result).to_string(), EXIT_YES);
    if !strict && !span.contains(&v)? {
        o = o.warn(format!(
            "warning: the input is not in {name}, so the duality laws do not apply"
        ));
    }
    Ok(o)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn check(cfg: &HarnessConfig, out: &std::path::Path, format: Format) -> Result<Outcome, CliError> {
    let report = harness::run(cfg)?;
    let files = report
        .write_counterexamples(out)
        .map_err(|source| CliError::Io {
            path: out.to_path_buf(),
            source,
        })?;
    let mut stdout = match format {
        Format::Text => report.render(),
        Format::Json => to_json(&report.to_json()),
    };
    if format == Format::Text {
        for f in &files {
            stdout.push_str(&format!("counterexample {}\n", f.display()));
        }
    }
    let code = if report.passed() { EXIT_YES } else { EXIT_NO };
    Ok(Outcome::out(stdout, code).warn(format!("elapsed {:.3}s", report.elapsed.as_secs_f64())))
}

fn replay_file(path: &std::path::Path, format: Format) -> Result<Outcome, CliError> {
    let inst = io::read_instance(path)?;
    let result = harness::check_instance(&inst)?;
    let code = if result.is_ok() { EXIT_YES } else { EXIT_NO };
    let stdout = match format {
        Format::Text => match &result {
            Ok(()) => format!("property {}\nresult pass\n", inst.property),
            Err(m) => format!("property {}\nresult fail\nmessage {m}\n", inst.property),
        },
        Format::Json => to_json(&serde_json::json!({
            "property": inst.property,
            "passed": result.is_ok(),
            "message": result.err(),
        })),
    };
    Ok(Outcome::out(stdout, code))
}
