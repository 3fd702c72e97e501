//! Command-line front end: isolate roots, compute transforms and Bernstein
//! coefficients, run seeded check campaigns, and emit SVG figures.
//!
//! Exit codes: 0 success, 1 usage/parse (or a failed campaign), 2 bisection
//! depth exhausted, 3 generator budget exhausted.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certcheck::{run_campaign, CampaignConfig, CheckKind, CheckReport, RootSpec};
use crate::error::{Error, Result};
use crate::isolator::{isolate, IsolationResult, IsolatorConfig};
use crate::normal::{is_normal, normal_via_properties};
use crate::poly::Polynomial;
use crate::rat::{format_rational, parse_rational, Rational};
use crate::regions::IntervalLR;
use crate::signs::bernstein_coeffs;
use crate::svg::render_scene;

const SEED_ENV: &str = "THREECIRCLES_SEED";

#[derive(Parser)]
#[command(
    name = "three-circles",
    version,
    about = "Exact real-root isolation by Descartes' method, plus the disc geometry behind it"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct IntervalArgs {
    /// Left endpoint, as an exact rational like -1 or 2/3.
    #[arg(short, long = "l", allow_hyphen_values = true)]
    l: String,
    /// Right endpoint.
    #[arg(short, long = "r", allow_hyphen_values = true)]
    r: String,
}

impl IntervalArgs {
    fn parse(&self) -> Result<IntervalLR> {
        IntervalLR::new(parse_rational(&self.l)?, parse_rational(&self.r)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Isolate the real roots of a polynomial on an open interval.
    Isolate {
        /// Coefficients low-to-high, e.g. "2/9,-1,1".
        #[arg(short, long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, default_value_t = 64)]
        max_depth: u32,
        /// Replace the input by its squarefree part first, reporting the
        /// multiplicity structure.
        #[arg(long)]
        squarefree_auto: bool,
    },
    /// Print the Möbius transform coefficients for an interval.
    Mobius {
        #[arg(short, long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        interval: IntervalArgs,
    },
    /// Print Bernstein coefficients on an interval at basis degree n.
    Bernstein {
        #[arg(short, long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        interval: IntervalArgs,
        /// Basis degree; defaults to the polynomial degree.
        #[arg(short, long)]
        n: Option<usize>,
    },
    /// Test whether a polynomial is normal, with the property-based oracle.
    CheckNormal {
        #[arg(short, long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Run a seeded validation campaign.
    Check {
        kind: CheckKindArg,
        /// Master seed; falls back to $THREECIRCLES_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 6)]
        degree_bound: u32,
        /// Left endpoint of the test interval.
        #[arg(short, long = "l", allow_hyphen_values = true, default_value = "0")]
        l: String,
        /// Right endpoint of the test interval.
        #[arg(short, long = "r", allow_hyphen_values = true, default_value = "1")]
        r: String,
        /// Worker threads; reports are identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: u32,
        #[arg(long, default_value_t = 256)]
        precision_bits: u32,
        /// Obreshkoff lower root count p (obreshkoff kind only).
        #[arg(long, default_value_t = 1)]
        p_count: u32,
        /// Obreshkoff upper root count q (obreshkoff kind only).
        #[arg(long, default_value_t = 1)]
        q_count: u32,
    },
    /// Render the interval, discs, and optional roots to an SVG file.
    Plot {
        #[command(flatten)]
        interval: IntervalArgs,
        /// Obreshkoff disc index; omitted means the three-circles layout.
        #[arg(short, long)]
        k: Option<u32>,
        /// File of prescribed roots in the line-oriented text form.
        #[arg(long)]
        roots: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKindArg {
    #[value(name = "three-circles-1")]
    ThreeCircles1,
    #[value(name = "three-circles-2")]
    ThreeCircles2,
    #[value(name = "obreshkoff")]
    Obreshkoff,
    #[value(name = "normal-closure")]
    NormalClosure,
    #[value(name = "bernq-oracle")]
    BernqOracle,
}

#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    command: String,
    inputs: I,
    result: R,
    seed: u64,
    version: &'static str,
}

fn emit_json<I: Serialize, R: Serialize>(command: &str, inputs: I, result: R, seed: u64) {
    let env = Envelope {
        command: command.to_string(),
        inputs,
        result,
        seed,
        version: env!("CARGO_PKG_VERSION"),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&env).expect("report serialization")
    );
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    let format = cli.format;
    match dispatch(cli.command, format) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_exit_code(&e)
        }
    }
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::DepthExhausted { .. } => 2,
        Error::GeneratorExhausted { .. } => 3,
        _ => 1,
    }
}

fn dispatch(command: Command, format: OutputFormat) -> Result<i32> {
    match command {
        Command::Isolate {
            poly,
            interval,
            max_depth,
            squarefree_auto,
        } => cmd_isolate(&poly, &interval, max_depth, squarefree_auto, format),
        Command::Mobius { poly, interval } => cmd_mobius(&poly, &interval, format),
        Command::Bernstein { poly, interval, n } => cmd_bernstein(&poly, &interval, n, format),
        Command::CheckNormal { poly } => cmd_check_normal(&poly, format),
        Command::Check {
            kind,
            seed,
            trials,
            degree_bound,
            l,
            r,
            jobs,
            precision_bits,
            p_count,
            q_count,
        } => cmd_check(
            kind,
            seed,
            trials,
            degree_bound,
            &l,
            &r,
            jobs,
            precision_bits,
            p_count,
            q_count,
            format,
        ),
        Command::Plot {
            interval,
            k,
            roots,
            out,
        } => cmd_plot(&interval, k, roots.as_deref(), &out, format),
    }
}

#[derive(Serialize)]
struct IsolateInputs {
    poly: String,
    l: String,
    r: String,
    max_depth: u32,
    squarefree_auto: bool,
}

#[derive(Serialize)]
struct IsolateOutput {
    status: String,
    exact_roots: Vec<String>,
    intervals: Vec<(String, String)>,
    depth_reached: u32,
    node_count: u64,
    endpoint_roots: Vec<(String, u32)>,
    squarefree_multiplicities: Option<Vec<(String, u32)>>,
}

fn isolate_output(
    status: &str,
    res: &IsolationResult,
    endpoint_roots: &[(Rational, u32)],
    multiplicities: &Option<Vec<(Polynomial, u32)>>,
) -> IsolateOutput {
    IsolateOutput {
        status: status.to_string(),
        exact_roots: res.exact_roots.iter().map(format_rational).collect(),
        intervals: res
            .intervals
            .iter()
            .map(|(lo, hi)| (format_rational(lo), format_rational(hi)))
            .collect(),
        depth_reached: res.depth_reached,
        node_count: res.node_count,
        endpoint_roots: endpoint_roots
            .iter()
            .map(|(x, m)| (format_rational(x), *m))
            .collect(),
        squarefree_multiplicities: multiplicities
            .as_ref()
            .map(|fs| fs.iter().map(|(f, m)| (f.to_string(), *m)).collect()),
    }
}

fn cmd_isolate(
    poly_text: &str,
    interval: &IntervalArgs,
    max_depth: u32,
    squarefree_auto: bool,
    format: OutputFormat,
) -> Result<i32> {
    let original: Polynomial = poly_text.parse()?;
    let iv = interval.parse()?;
    let mut work = original.clone();
    let multiplicities = if squarefree_auto {
        let factors = work.squarefree_decomposition()?;
        work = work.squarefree_part()?;
        Some(factors)
    } else {
        None
    };
    // the open interval cannot hold its endpoints, so factor endpoint roots
    // out instead of failing on them
    let mut endpoint_roots: Vec<(Rational, u32)> = Vec::new();
    for endpoint in [iv.l().clone(), iv.r().clone()] {
        let mut mult = 0u32;
        let factor = Polynomial::new(vec![-endpoint.clone(), Rational::from_integer(1.into())]);
        while !work.is_zero() && work.degree() > Some(0) && work.is_root(&endpoint) {
            work = work.div_rem(&factor)?.0;
            mult += 1;
        }
        if mult > 0 {
            endpoint_roots.push((endpoint, mult));
        }
    }
    let cfg = IsolatorConfig { max_depth };
    let inputs = IsolateInputs {
        poly: poly_text.to_string(),
        l: interval.l.clone(),
        r: interval.r.clone(),
        max_depth,
        squarefree_auto,
    };
    let print_text = |status: &str, res: &IsolationResult| {
        if let Some(fs) = &multiplicities {
            if fs.iter().any(|(_, m)| *m > 1) {
                println!("multiplicity structure:");
                for (f, m) in fs {
                    println!("  ({f}) ^ {m}");
                }
            } else {
                println!("input was already squarefree");
            }
        }
        for (x, m) in &endpoint_roots {
            println!(
                "endpoint root {} (multiplicity {m}) excluded from the open interval",
                format_rational(x)
            );
        }
        if status != "ok" {
            println!("status: {status}");
        }
        print!("{}", res.describe());
    };
    match isolate(&work, &iv, &cfg) {
        Ok(res) => {
            match format {
                OutputFormat::Text => print_text("ok", &res),
                OutputFormat::Json => emit_json(
                    "isolate",
                    inputs,
                    isolate_output("ok", &res, &endpoint_roots, &multiplicities),
                    0,
                ),
            }
            Ok(0)
        }
        Err(Error::DepthExhausted { max_depth, partial }) => {
            match format {
                OutputFormat::Text => print_text("depth-exhausted", &partial),
                OutputFormat::Json => emit_json(
                    "isolate",
                    inputs,
                    isolate_output(
                        "depth-exhausted",
                        &partial,
                        &endpoint_roots,
                        &multiplicities,
                    ),
                    0,
                ),
            }
            eprintln!("error: isolation exceeded max depth {max_depth}");
            Ok(2)
        }
        Err(other) => Err(other),
    }
}

#[derive(Serialize)]
struct PolyIntervalInputs {
    poly: String,
    l: String,
    r: String,
}

#[derive(Serialize)]
struct CoefficientsOutput {
    coefficients: Vec<String>,
}

fn cmd_mobius(poly_text: &str, interval: &IntervalArgs, format: OutputFormat) -> Result<i32> {
    let p: Polynomial = poly_text.parse()?;
    let iv = interval.parse()?;
    let m = p.mobius(iv.l(), iv.r())?;
    match format {
        OutputFormat::Text => println!("{m}"),
        OutputFormat::Json => emit_json(
            "mobius",
            PolyIntervalInputs {
                poly: poly_text.to_string(),
                l: interval.l.clone(),
                r: interval.r.clone(),
            },
            CoefficientsOutput {
                coefficients: m.coeffs().iter().map(format_rational).collect(),
            },
            0,
        ),
    }
    Ok(0)
}

#[derive(Serialize)]
struct BernsteinInputs {
    poly: String,
    l: String,
    r: String,
    n: usize,
}

#[derive(Serialize)]
struct BernsteinOutput {
    n: usize,
    b: Vec<String>,
}

fn cmd_bernstein(
    poly_text: &str,
    interval: &IntervalArgs,
    n: Option<usize>,
    format: OutputFormat,
) -> Result<i32> {
    let p: Polynomial = poly_text.parse()?;
    let iv = interval.parse()?;
    let n = match n {
        Some(n) => n,
        None => p.degree().ok_or_else(|| {
            Error::InvalidArgument("zero polynomial needs an explicit basis degree".into())
        })?,
    };
    let bc = bernstein_coeffs(&p, iv.l(), iv.r(), n)?;
    match format {
        OutputFormat::Text => {
            let parts: Vec<String> = bc.b.iter().map(format_rational).collect();
            println!("{}", parts.join(","));
        }
        OutputFormat::Json => emit_json(
            "bernstein",
            BernsteinInputs {
                poly: poly_text.to_string(),
                l: interval.l.clone(),
                r: interval.r.clone(),
                n,
            },
            BernsteinOutput {
                n,
                b: bc.b.iter().map(format_rational).collect(),
            },
            0,
        ),
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheckNormalInputs {
    poly: String,
}

#[derive(Serialize)]
struct CheckNormalOutput {
    is_normal: bool,
    via_properties: bool,
    failing_index: Option<usize>,
}

fn cmd_check_normal(poly_text: &str, format: OutputFormat) -> Result<i32> {
    let p: Polynomial = poly_text.parse()?;
    let recursive = is_normal(&p);
    let verdict = normal_via_properties(&p);
    match format {
        OutputFormat::Text => {
            println!("normal: {recursive}");
            match verdict.failing_index {
                Some(i) => println!("property check: fails first at index {i}"),
                None => println!("property check: all four properties hold"),
            }
        }
        OutputFormat::Json => emit_json(
            "check-normal",
            CheckNormalInputs {
                poly: poly_text.to_string(),
            },
            CheckNormalOutput {
                is_normal: recursive,
                via_properties: verdict.is_normal,
                failing_index: verdict.failing_index,
            },
            0,
        ),
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheckInputs {
    kind: String,
    trials: u64,
    degree_bound: u32,
    l: String,
    r: String,
    precision_bits: u32,
    p_count: Option<u32>,
    q_count: Option<u32>,
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("bad {SEED_ENV} value {v:?}"))),
        Err(_) => Ok(0),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    kind: CheckKindArg,
    seed: Option<u64>,
    trials: u64,
    degree_bound: u32,
    l: &str,
    r: &str,
    jobs: u32,
    precision_bits: u32,
    p_count: u32,
    q_count: u32,
    format: OutputFormat,
) -> Result<i32> {
    let seed = resolve_seed(seed)?;
    let interval = IntervalLR::new(parse_rational(l)?, parse_rational(r)?)?;
    let (check_kind, pq) = match kind {
        CheckKindArg::ThreeCircles1 => (CheckKind::ThreeCircles1, None),
        CheckKindArg::ThreeCircles2 => (CheckKind::ThreeCircles2, None),
        CheckKindArg::Obreshkoff => (
            CheckKind::Obreshkoff { p_count, q_count },
            Some((p_count, q_count)),
        ),
        CheckKindArg::NormalClosure => (CheckKind::NormalClosure, None),
        CheckKindArg::BernqOracle => (CheckKind::BernqOracle, None),
    };
    let cfg = CampaignConfig {
        seed,
        trials,
        degree_bound,
        interval,
        jobs,
        precision_bits,
    };
    let report = run_campaign(check_kind, &cfg)?;
    let inputs = CheckInputs {
        kind: check_kind.name(),
        trials,
        degree_bound,
        l: l.to_string(),
        r: r.to_string(),
        precision_bits,
        p_count: pq.map(|x| x.0),
        q_count: pq.map(|x| x.1),
    };
    match format {
        OutputFormat::Text => print_report_text(&report),
        OutputFormat::Json => emit_json("check", inputs, &report, seed),
    }
    Ok(if report.is_pass() { 0 } else { 1 })
}

fn print_report_text(report: &CheckReport) {
    println!("kind: {}", report.kind);
    println!("trials: {}", report.trials);
    println!("passed: {}", report.passed);
    println!("skipped (boundary): {}", report.skipped_boundary);
    println!("rejected (hypotheses): {}", report.rejected);
    println!("generator retries: {}", report.generator_retries);
    println!("failures: {}", report.failures.len());
    for f in &report.failures {
        println!(
            "  seed {}: observed {}, expected {}",
            f.seed, f.observed, f.expected
        );
    }
}

#[derive(Serialize)]
struct PlotInputs {
    l: String,
    r: String,
    k: Option<u32>,
    roots: Option<String>,
    out: String,
}

#[derive(Serialize)]
struct PlotOutput {
    out: String,
    bytes: usize,
}

fn cmd_plot(
    interval: &IntervalArgs,
    k: Option<u32>,
    roots: Option<&std::path::Path>,
    out: &std::path::Path,
    format: OutputFormat,
) -> Result<i32> {
    let iv = interval.parse()?;
    let points = match roots {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            let spec: RootSpec = text.parse()?;
            spec.roots().into_iter().map(|(z, _)| z).collect()
        }
        None => Vec::new(),
    };
    let svg = render_scene(&iv, k, &points);
    std::fs::write(out, &svg)
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", out.display())))?;
    match format {
        OutputFormat::Text => println!("wrote {}", out.display()),
        OutputFormat::Json => emit_json(
            "plot",
            PlotInputs {
                l: interval.l.clone(),
                r: interval.r.clone(),
                k,
                roots: roots.map(|p| p.display().to_string()),
                out: out.display().to_string(),
            },
            PlotOutput {
                out: out.display().to_string(),
                bytes: svg.len(),
            },
            0,
        ),
    }
    Ok(0)
}
