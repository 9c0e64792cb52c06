//! `gkdim` command-line frontend.
//!
//! [`run`] takes the argument list, the `FUSION_THREADS` value and the output
//! streams explicitly so the whole command is testable in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gkdim_core::analysis::{
    estimate_gkdim, find_witness, growth_series_with, Classification, GkEstimate, GrowthOptions, GrowthSeries, IsoMap,
    WitnessCertificate,
};
use gkdim_core::catalog::{parse_ring, FiniteRingTable, RING_IDS};
use gkdim_core::dsl::{parse_ring_spec, validate_table, Diagnostics};
use gkdim_core::{Error, Expansion, Generators, UnitPolicy};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

const LABEL_HELP: &str = "Label syntax: integers for sl2, be:<d>, sln:2 and torus:1; tuples such as (1,0) \
for gl2, gef:<d>, sln:<n> partitions and torus:<r> with r >= 2; [a|b] for product rings; \
names for dsl rings. Lists are separated by `;` (or `,` between bare integers).";

#[derive(Parser, Debug)]
#[command(name = "gkdim", version, about = "Tensor-power growth and GK-dimension estimates for fusion rings")]
#[command(after_help = LABEL_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print (n, |F_n|, dim V^n, log2 dim V^n) for n = 1..=steps.
    Series {
        #[command(flatten)]
        growth: GrowthArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Estimate the growth degree from the doubling exponents; steps must be a power of two >= 16.
    Gkdim {
        #[command(flatten)]
        growth: GrowthArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a .ring file; exits 2 if it has errors.
    Validate { path: PathBuf },
    /// Look for a simple X with dim X > dim f(X) under a fusion-compatible map f: A -> B.
    Witness {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Generator map `x=y;...`, labels in the syntax of A and B.
        #[arg(long)]
        map: String,
        /// Fusion steps to extend the map by.
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// List ring identifiers.
    Rings,
}

#[derive(Args, Debug)]
#[command(after_help = LABEL_HELP)]
struct GrowthArgs {
    /// Ring identifier, see `gkdim rings`.
    #[arg(long)]
    ring: String,
    /// Generating labels; the unit is adjoined if missing.
    #[arg(long, allow_hyphen_values = true)]
    gens: String,
    #[arg(long)]
    steps: usize,
    /// Worker threads; overrides FUSION_THREADS.
    #[arg(long)]
    threads: Option<usize>,
    /// Reject generator sets without the unit instead of adjoining it.
    #[arg(long)]
    strict_unit: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    ring: &'a str,
    generators: Vec<String>,
    unit_adjoined: bool,
    records: Vec<RecordJson>,
}

#[derive(Serialize)]
struct RecordJson {
    n: usize,
    support_size: String,
    dim_vn: String,
    log2_dim_vn: f64,
}

#[derive(Serialize)]
struct EstimateJson<'a> {
    classification: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rate: Option<f64>,
    doubling_exponents: &'a [f64],
    n_max: usize,
}

#[derive(Serialize)]
struct WitnessJson {
    witness: String,
    dim_x: String,
    dim_fx: String,
    ratio: String,
    ratio_value: f64,
    bound: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::SeriesTooShort { .. } | Error::NotPowerOfTwo { .. } => EXIT_USAGE,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Runs one command and returns its exit code.
pub fn run<I, T>(args: I, env_threads: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, env_threads, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, env_threads: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Series { growth, format, output } => {
            let series = compute(&growth, env_threads, err)?;
            let text = match format {
                Format::Csv => series_csv(&series),
                Format::Json => series_json(&series),
            };
            emit(&text, output.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Gkdim { growth, output } => {
            if growth.steps < 16 || !growth.steps.is_power_of_two() {
                return Err(usage(format!("--steps must be a power of two >= 16, got {}", growth.steps)));
            }
            let series = compute(&growth, env_threads, err)?;
            let est = estimate_gkdim(&series)?;
            emit(&estimate_json(&est), output.as_ref(), out)?;
            Ok(if est.classification == Classification::Inconclusive { EXIT_INCONCLUSIVE } else { EXIT_OK })
        }
        Command::Validate { path } => validate(&path, out),
        Command::Witness { a, b, map, depth } => {
            let (ra, rb) = (parse_ring(&a)?, parse_ring(&b)?);
            let m = IsoMap::parse(&ra, &rb, &map)?;
            let text = match find_witness(&ra, &rb, &m, depth)? {
                Some(cert) => witness_json(&cert),
                None => "none\n".to_string(),
            };
            emit(&text, None, out)?;
            Ok(EXIT_OK)
        }
        Command::Rings => {
            let width = RING_IDS.iter().map(|(id, _)| id.len()).max().unwrap_or(0);
            let mut text = String::new();
            for (id, about) in RING_IDS {
                text.push_str(&format!("{id:<width$}  {about}\n"));
            }
            emit(&text, None, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn threads(flag: Option<usize>, env: Option<&str>) -> Result<Option<usize>, Failure> {
    let n = match (flag, env.map(str::trim).filter(|s| !s.is_empty())) {
        (Some(n), _) => Some(n),
        (None, Some(s)) => Some(s.parse().map_err(|_| usage(format!("FUSION_THREADS must be a positive integer, got `{s}`")))?),
        (None, None) => None,
    };
    if n == Some(0) {
        return Err(usage("thread count must be at least 1"));
    }
    Ok(n)
}

fn compute(args: &GrowthArgs, env_threads: Option<&str>, err: &mut dyn Write) -> Result<GrowthSeries, Failure> {
    if args.steps == 0 {
        return Err(usage("--steps must be at least 1"));
    }
    let threads = threads(args.threads, env_threads)?;
    let ring = parse_ring(&args.ring)?;
    let policy = if args.strict_unit { UnitPolicy::Strict } else { UnitPolicy::Adjoin };
    let gens = Generators::parse(&ring, &args.gens, policy)?;
    if gens.unit_adjoined() {
        let _ = writeln!(err, "warning: unit adjoined to the generators (`{}` added)", ring.unit());
    }
    let expansion = if threads == Some(1) { Expansion::Sequential } else { Expansion::default() };
    let opts = GrowthOptions { expansion, ..GrowthOptions::default() };
    in_pool(threads, || growth_series_with(&ring, &gens, args.steps, opts)).map_err(Failure::from)
}

#[cfg(feature = "parallel")]
fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn in_pool<T: Send>(_threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    f()
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

pub fn series_csv(s: &GrowthSeries) -> String {
    let mut text = String::from("n,support_size,dim_vn,log2_dim_vn\n");
    for r in &s.records {
        text.push_str(&format!("{},{},{},{:.6}\n", r.n, r.support_size, r.dim_vn, r.log2_dim_vn));
    }
    text
}

pub fn series_json(s: &GrowthSeries) -> String {
    let doc = SeriesJson {
        ring: &s.ring,
        generators: s.generators.iter().map(|l| l.to_string()).collect(),
        unit_adjoined: s.unit_adjoined,
        records: s
            .records
            .iter()
            .map(|r| RecordJson {
                n: r.n,
                support_size: r.support_size.to_string(),
                dim_vn: r.dim_vn.to_string(),
                log2_dim_vn: round6(r.log2_dim_vn),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

fn estimate_json(est: &GkEstimate) -> String {
    let doc = EstimateJson {
        classification: est.classification.as_str(),
        degree: est.degree,
        rate: est.rate,
        doubling_exponents: &est.doubling_exponents,
        n_max: est.n_max,
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

fn witness_json(c: &WitnessCertificate) -> String {
    let ratio = if c.ratio_den == 1u32.into() {
        c.ratio_num.to_string()
    } else {
        format!("{}/{}", c.ratio_num, c.ratio_den)
    };
    let doc = WitnessJson {
        witness: c.witness.to_string(),
        dim_x: c.dim_x.to_string(),
        dim_fx: c.dim_fx.to_string(),
        ratio,
        ratio_value: c.ratio,
        bound: c.bound(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

fn validate(path: &PathBuf, out: &mut dyn Write) -> Result<i32, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut report = Diagnostics::default();
    let table: Option<FiniteRingTable> = match parse_ring_spec(&src) {
        Ok(parsed) => {
            report.extend(parsed.warnings);
            report.extend(validate_table(&parsed.table));
            Some(parsed.table)
        }
        Err(d) => {
            report.extend(d);
            None
        }
    };
    let mut text = String::new();
    if !report.is_empty() {
        text.push_str(&format!("{report}\n"));
    }
    let code = match table {
        Some(t) if !report.has_errors() => {
            text.push_str(&format!("ok: ring {} with {} simples\n", t.name, t.simples.len()));
            EXIT_OK
        }
        _ => EXIT_INVALID,
    };
    emit(&text, None, out)?;
    Ok(code)
}
