//! Command-line front end.
//!
//! Exit codes: 0 success or holds, 1 an identity fails, 2 usage or parse
//! error, 3 inconclusive.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::compositions::{compositions_up_to, dual, encode_word, parse_composition, Composition};
use crate::qpoly::{fmt_rational, parse_rational};
use crate::sums::{eval_sum, qzeta_truncated, truncated_limit, SumKind, TruncationResult};
use crate::verify::{
    aggregate, check_identity, check_pair, sweep, IdentityId, Params, Report, SweepBounds, Verdict,
    DEFAULT_SEED,
};

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "QHARMONIC_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qharmonic",
    about = "Finite multiple harmonic q-series and their duality"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for sampled checks (overridden by QHARMONIC_SEED).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Evaluate one sum symbolically, or exactly at a rational q.
    Eval {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<String>,
    },
    /// Print the dual composition and both words.
    Dual {
        #[arg(long)]
        s: String,
    },
    /// Run one identity check.
    Verify(VerifyArgs),
    /// Run a check over a parameter grid.
    Sweep {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long = "N")]
        big_n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Emit the duality table for every composition up to a weight.
    Table {
        #[arg(long)]
        id: String,
        #[arg(long)]
        max_weight: u32,
        #[arg(long)]
        n: usize,
    },
    /// Truncated n -> infinity limit at a rational point.
    Limit {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        q: String,
        #[arg(long = "N")]
        big_n: usize,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity id, e.g. THEOREM1, GEORGE, FULAS, UCHIMURA_LIMIT
    #[arg(long)]
    id: String,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Integer for DUALITY_AB, rational for FULAS.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    /// Compare Z_n[s] against A_n of this composition instead of the dual.
    #[arg(long, hide = true)]
    probe_against: Option<String>,
}

/// A usage or runtime error; always exit code 2.
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

struct Output {
    text: String,
    code: i32,
}

fn rational(flag: &str, text: &str) -> Result<BigRational, CliError> {
    parse_rational(text)
        .ok_or_else(|| CliError(format!("--{flag}: expected p or p/r, got {text:?}")))
}

fn opt_rational(flag: &str, text: &Option<String>) -> Result<Option<BigRational>, CliError> {
    text.as_deref().map(|t| rational(flag, t)).transpose()
}

fn composition(text: &str) -> Result<Composition, CliError> {
    parse_composition(text).map_err(|e| CliError(format!("--s: {e}")))
}

fn coeff_list(f: &crate::qpoly::QPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.coeffs()
        .iter()
        .map(fmt_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

fn csv_text(rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(vec![]);
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(
        w.into_inner().map_err(|e| CliError(e.to_string()))?,
    )?)
}

fn json_text<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Holds => EXIT_OK,
        Verdict::Fails => EXIT_FAILS,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

const REPORT_HEADER: [&str; 10] = [
    "id",
    "params",
    "method",
    "verdict",
    "witness_case",
    "witness_lhs",
    "witness_rhs",
    "seed",
    "residual",
    "tail_bound",
];

fn report_row(r: &Report) -> Vec<String> {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let w = r.witness.as_ref();
    vec![
        r.id.to_string(),
        params.join(";"),
        r.method.to_string(),
        r.verdict.to_string(),
        w.map(|w| w.case.clone()).unwrap_or_default(),
        w.map(|w| w.lhs.clone()).unwrap_or_default(),
        w.map(|w| w.rhs.clone()).unwrap_or_default(),
        r.seed.map(|s| s.to_string()).unwrap_or_default(),
        r.residual.clone().unwrap_or_default(),
        r.tail_bound.clone().unwrap_or_default(),
    ]
}

fn render_reports(reports: &[Report], format: Format, single: bool) -> Result<String, CliError> {
    match format {
        Format::Json if single => json_text(&reports[0]),
        Format::Json => json_text(&reports),
        Format::Csv => {
            let mut rows = vec![REPORT_HEADER.iter().map(|s| s.to_string()).collect()];
            rows.extend(reports.iter().map(report_row));
            csv_text(&rows)
        }
        Format::Text => {
            let mut out: String = reports.iter().map(|r| r.summary() + "\n").collect();
            if !single {
                out.push_str(&format!(
                    "aggregate: {} ({} reports)\n",
                    aggregate(reports),
                    reports.len()
                ));
            }
            Ok(out)
        }
    }
}

fn cmd_eval(
    kind: &str,
    s: &str,
    n: usize,
    q: &Option<String>,
    format: Format,
) -> Result<Output, CliError> {
    let kind: SumKind = kind
        .parse()
        .map_err(|e: String| CliError(format!("--kind: {e}")))?;
    let s = composition(s)?;
    let f = eval_sum(kind, &s, n);
    let text = match q {
        Some(q) => {
            let value = fmt_rational(&f.eval_at(&rational("q", q)?)?);
            match format {
                Format::Text => value + "\n",
                Format::Json => json_text(&serde_json::json!({
                    "kind": kind.tag(), "s": s.to_string(), "n": n, "q": q, "value": value,
                }))?,
                Format::Csv => csv_text(&[
                    vec![
                        "kind".into(),
                        "s".into(),
                        "n".into(),
                        "q".into(),
                        "value".into(),
                    ],
                    vec![
                        kind.tag().into(),
                        s.to_string(),
                        n.to_string(),
                        q.clone(),
                        value,
                    ],
                ])?,
            }
        }
        None => {
            let (num, den) = (coeff_list(f.num()), coeff_list(f.den()));
            match format {
                Format::Text => format!("num: {num}\nden: {den}\n"),
                Format::Json => json_text(&serde_json::json!({
                    "kind": kind.tag(), "s": s.to_string(), "n": n,
                    "num": f.num().coeffs().iter().map(fmt_rational).collect::<Vec<_>>(),
                    "den": f.den().coeffs().iter().map(fmt_rational).collect::<Vec<_>>(),
                }))?,
                Format::Csv => csv_text(&[
                    vec![
                        "kind".into(),
                        "s".into(),
                        "n".into(),
                        "num".into(),
                        "den".into(),
                    ],
                    vec![kind.tag().into(), s.to_string(), n.to_string(), num, den],
                ])?,
            }
        }
    };
    Ok(Output {
        text,
        code: EXIT_OK,
    })
}

fn cmd_dual(s: &str, format: Format) -> Result<Output, CliError> {
    let s = composition(s)?;
    let d = dual(&s)?;
    let (w, dw) = (encode_word(&s)?.to_string(), encode_word(&d)?.to_string());
    let text = match format {
        Format::Text => format!("dual: {d}\nword: {w}\ndual word: {dw}\n"),
        Format::Json => json_text(&serde_json::json!({
            "s": s.to_string(), "dual": d.to_string(), "word": w, "dual_word": dw,
        }))?,
        Format::Csv => csv_text(&[
            vec!["s".into(), "dual".into(), "word".into(), "dual_word".into()],
            vec![s.to_string(), d.to_string(), w, dw],
        ])?,
    };
    Ok(Output {
        text,
        code: EXIT_OK,
    })
}

fn identity(tag: &str) -> Result<IdentityId, CliError> {
    tag.parse()
        .map_err(|e: String| CliError(format!("--id: {e}")))
}

fn cmd_verify(v: &VerifyArgs, seed: u64, format: Format) -> Result<Output, CliError> {
    let id = identity(&v.id)?;
    let report = if let Some(t) = &v.probe_against {
        let s = composition(v.s.as_deref().ok_or(CliError("--s is required".into()))?)?;
        let n = v.n.ok_or(CliError("--n is required".into()))?;
        check_pair(&s, &composition(t)?, n)?
    } else {
        let mut p = Params {
            n: v.n,
            m: v.m,
            k: v.k,
            s: v.s.as_deref().map(composition).transpose()?,
            q: opt_rational("q", &v.q)?,
            big_n: v.big_n,
            x: opt_rational("x", &v.x)?,
            y: opt_rational("y", &v.y)?,
            seed: Some(seed),
            samples: v.samples,
            ..Params::default()
        };
        if id == IdentityId::DualityAb {
            let int = |flag: &str, t: &Option<String>| -> Result<Option<u32>, CliError> {
                t.as_deref()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|_| CliError(format!("--{flag}: expected a positive integer")))
                    })
                    .transpose()
            };
            p.a = int("a", &v.a)?;
            p.b = int("b", &v.b)?;
        } else {
            p.fa = opt_rational("a", &v.a)?;
            p.fb = opt_rational("b", &v.b)?;
            p.fc = opt_rational("c", &v.c)?;
            p.fz = opt_rational("z", &v.z)?;
        }
        check_identity(id, &p)?
    };
    let code = verdict_code(report.verdict);
    Ok(Output {
        text: render_reports(std::slice::from_ref(&report), format, true)?,
        code,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    id: &str,
    max_weight: u32,
    max_n: usize,
    max_m: usize,
    threads: Option<usize>,
    q: &Option<String>,
    big_n: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    format: Format,
) -> Result<Output, CliError> {
    let id = identity(id)?;
    let bounds = SweepBounds {
        max_weight,
        max_n,
        max_m,
        q: opt_rational("q", q)?,
        big_n,
        seed: Some(seed),
        samples,
        threads,
    };
    let reports = sweep(id, &bounds)?;
    Ok(Output {
        text: render_reports(&reports, format, false)?,
        code: verdict_code(aggregate(&reports)),
    })
}

fn cmd_table(id: &str, max_weight: u32, n: usize, format: Format) -> Result<Output, CliError> {
    if identity(id)? != IdentityId::Theorem1 {
        return Err(CliError("table supports only --id THEOREM1".into()));
    }
    let mut rows = vec![];
    let mut all_equal = true;
    for s in compositions_up_to(max_weight) {
        let d = dual(&s)?;
        let z = eval_sum(SumKind::ZWeak, &s, n);
        let a = eval_sum(SumKind::AWeak, &d, n);
        all_equal &= z == a;
        rows.push(vec![
            s.to_string(),
            d.to_string(),
            z.to_string(),
            a.to_string(),
            (z == a).to_string(),
        ]);
    }
    let header: Vec<String> = ["s", "dual", "Z", "A", "equal"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let text = match format {
        Format::Json => {
            let objs: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({"s": r[0], "dual": r[1], "Z": r[2], "A": r[3], "equal": r[4] == "true"})
                })
                .collect();
            json_text(&objs)?
        }
        Format::Csv | Format::Text => {
            let mut all = vec![header];
            all.extend(rows);
            csv_text(&all)?
        }
    };
    Ok(Output {
        text,
        code: if all_equal { EXIT_OK } else { EXIT_FAILS },
    })
}

fn cmd_limit(
    kind: &str,
    s: &str,
    q: &str,
    big_n: usize,
    format: Format,
) -> Result<Output, CliError> {
    let s = composition(s)?;
    let q0 = rational("q", q)?;
    let (result, via_strict): (TruncationResult, Option<BigRational>) = match kind {
        "Z" => (truncated_limit(SumKind::ZWeak, &s, &q0, big_n)?, None),
        "A" => (truncated_limit(SumKind::AWeak, &s, &q0, big_n)?, None),
        "qzeta" => {
            let z = qzeta_truncated(&s, &q0, big_n)?;
            (z.series, Some(z.via_strict))
        }
        other => {
            return Err(CliError(format!(
                "--kind: expected Z, A or qzeta, got {other:?}"
            )))
        }
    };
    let value = fmt_rational(&result.value);
    let bound = fmt_rational(&result.tail_bound);
    let via = via_strict.as_ref().map(fmt_rational);
    let text = match format {
        Format::Text => {
            let mut t = format!(
                "value: {value}\nterms_used: {}\ntail_bound: {bound}\n",
                result.terms_used
            );
            if let Some(v) = &via {
                t.push_str(&format!("via_strict: {v}\n"));
            }
            t
        }
        Format::Json => {
            let mut obj = serde_json::json!({
                "kind": kind, "s": s.to_string(), "q": fmt_rational(&q0), "N": big_n,
                "value": value, "terms_used": result.terms_used, "tail_bound": bound,
            });
            if let Some(v) = via {
                obj["via_strict"] = v.into();
            }
            json_text(&obj)?
        }
        Format::Csv => {
            let mut header: Vec<String> =
                ["kind", "s", "q", "N", "value", "terms_used", "tail_bound"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
            let mut row = vec![
                kind.to_string(),
                s.to_string(),
                fmt_rational(&q0),
                big_n.to_string(),
                value,
                result.terms_used.to_string(),
                bound,
            ];
            if let Some(v) = via {
                header.push("via_strict".into());
                row.push(v);
            }
            csv_text(&[header, row])?
        }
    };
    Ok(Output {
        text,
        code: EXIT_OK,
    })
}

fn dispatch(cli: &Cli, seed: u64) -> Result<Output, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Eval { kind, s, n, q } => cmd_eval(kind, s, *n, q, f),
        Command::Dual { s } => cmd_dual(s, f),
        Command::Verify(v) => cmd_verify(v, seed, f),
        Command::Sweep {
            id,
            max_weight,
            max_n,
            max_m,
            threads,
            q,
            big_n,
            samples,
        } => cmd_sweep(
            id,
            *max_weight,
            *max_n,
            *max_m,
            *threads,
            q,
            *big_n,
            *samples,
            seed,
            f,
        ),
        Command::Table { id, max_weight, n } => cmd_table(id, *max_weight, *n, f),
        Command::Limit { kind, s, q, big_n } => cmd_limit(kind, s, q, *big_n, f),
    }
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("usage error");
            let _ = writeln!(stderr, "{line}");
            return EXIT_USAGE;
        }
    };
    let seed = match std::env::var(SEED_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(s) => s,
            Err(_) => {
                let _ = writeln!(stderr, "error: {SEED_ENV} must be an unsigned integer");
                return EXIT_USAGE;
            }
        },
        Err(_) => cli.seed.unwrap_or(DEFAULT_SEED),
    };
    match dispatch(&cli, seed) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.text),
                None => stdout.write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            out.code
        }
        Err(CliError(msg)) => {
            let _ = writeln!(stderr, "error: {}", msg.lines().next().unwrap_or(""));
            EXIT_USAGE
        }
    }
}

/// Runs the CLI on the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
