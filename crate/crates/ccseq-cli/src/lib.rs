//! Implementation of the `ccseq` command line tool.
//!
//! Subcommands generate code sets (`gen-gcp`, `gen-igc`, `gen-zcac`,
//! `gen-zcacs`), re-verify stored files (`verify`) and export correlation
//! grids for plotting (`export-grid`). Exit codes: 0 success, 1 a requested
//! verification failed, 2 invalid parameters (nothing written), 3 I/O
//! failure. `CCSEQ_THREADS` caps the verifier's parallelism.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use ccseq::correlation::{accf_2d, code_accf, shifts_1d, shifts_2d, CorrelationValue};
use ccseq::gcp::{paterson_pair, GcpParams};
use ccseq::igc::{build_igc_codeset, IgcParams};
use ccseq::io::{self, CodesetDoc, DecodedSet};
use ccseq::radix::{default_modulus, RadixProfile};
use ccseq::verify::{verify_zccs_bound, VerificationReport};
use ccseq::zcacs::{build_zcac, build_zcacs, select_quads, QuadStrategy, ZetaQuad};

/// A fully parsed invocation.
#[derive(Debug, Parser)]
#[command(
    name = "ccseq",
    version,
    about = "Generate and verify complementary code sets"
)]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a Golay complementary pair of length 2^m.
    GenGcp(GenGcpArgs),
    /// Generate an inter-group complementary code set.
    GenIgc(GenIgcArgs),
    /// Generate one 2-D Z-complementary array code.
    GenZcac(GenZcacArgs),
    /// Generate a 2-D Z-complementary array code set.
    GenZcacs(GenZcacsArgs),
    /// Re-verify a stored codeset file.
    Verify(VerifyArgs),
    /// Export a correlation grid (tau1,tau2,re,im,abs) for plotting.
    ExportGrid(ExportGridArgs),
}

#[derive(Debug, Args)]
pub struct GenGcpArgs {
    /// Boolean dimension m; the pair has length 2^m.
    #[arg(long)]
    pub m: usize,
    /// Even phase modulus (default 2).
    #[arg(long)]
    pub lambda: Option<u32>,
    /// Chain permutation as a comma list, e.g. 2,1,3.
    #[arg(long)]
    pub pi: Option<String>,
    /// Linear coefficients g_1..g_m as a comma list.
    #[arg(long)]
    pub g: Option<String>,
    /// Constant offset of the first member.
    #[arg(long, default_value_t = 0)]
    pub e: u32,
    /// Constant offset of the second member.
    #[arg(long = "e-prime", default_value_t = 0)]
    pub e_prime: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GenIgcArgs {
    /// Length profile p^m[,p^m...], distinct primes, every m >= 2.
    #[arg(long)]
    pub profile: String,
    /// Phase modulus; defaults to the least common multiple of the primes.
    #[arg(long)]
    pub lambda: Option<u32>,
    /// Per-factor chain permutation (repeat once per factor), e.g. --perm 2,1.
    #[arg(long = "perm")]
    pub perms: Vec<String>,
    /// Per-factor linear coefficients (repeat once per factor).
    #[arg(long = "lin")]
    pub lins: Vec<String>,
    /// Per-factor constant term (repeat once per factor).
    #[arg(long = "const")]
    pub consts: Vec<u32>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TwoDimArgs {
    /// Length profile p^m[,p^m...], distinct primes, every m >= 2.
    #[arg(long)]
    pub profile: String,
    /// Boolean dimension of the row direction; arrays have 2^m rows.
    #[arg(long)]
    pub m: usize,
    /// Even phase modulus; defaults to lcm of the primes, doubled if odd.
    #[arg(long)]
    pub lambda: Option<u32>,
    /// Chain permutation of the Golay part.
    #[arg(long)]
    pub pi: Option<String>,
    /// Linear coefficients of the Golay part.
    #[arg(long)]
    pub g: Option<String>,
    /// Constant offset of the left half.
    #[arg(long, default_value_t = 0)]
    pub e: u32,
    /// Constant offset of the right half.
    #[arg(long = "e-prime", default_value_t = 0)]
    pub e_prime: u32,
}

#[derive(Debug, Args)]
pub struct GenZcacArgs {
    #[command(flatten)]
    pub dims: TwoDimArgs,
    /// Left-half s label (comma list); all four labels or none.
    #[arg(long)]
    pub s1: Option<String>,
    /// Right-half s label.
    #[arg(long)]
    pub s2: Option<String>,
    /// Left-half t label.
    #[arg(long)]
    pub t1: Option<String>,
    /// Right-half t label.
    #[arg(long)]
    pub t2: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    /// Pair consecutive t indices with zero s labels.
    Consecutive,
    /// Seeded random pairing of t indices and random s labels.
    Seeded,
}

#[derive(Debug, Args)]
pub struct GenZcacsArgs {
    #[command(flatten)]
    pub dims: TwoDimArgs,
    /// How to select the label quadruples.
    #[arg(long, value_enum, default_value_t = StrategyArg::Consecutive)]
    pub strategy: StrategyArg,
    /// Seed for the seeded strategy.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output codeset file (JSON).
    #[arg(long)]
    pub out: PathBuf,
    /// Verification report path (default: `<out>.report.json`).
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Skip verification (no report is written).
    #[arg(long, default_value_t = false)]
    pub no_verify: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Codeset file to check.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Report path; printed to stdout when omitted.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ExportGridArgs {
    /// Codeset file to read.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Grid output path.
    #[arg(long)]
    pub out: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = GridFormat::Csv)]
    pub format: GridFormat,
    /// First member index (code or array set, kind dependent).
    #[arg(long, default_value_t = 0)]
    pub first: usize,
    /// Second member index.
    #[arg(long, default_value_t = 0)]
    pub second: usize,
}

/// Failure modes with their exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2; nothing has been written.
    Invalid(String),
    /// Exit 3.
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "invalid parameters: {msg}"),
            CliError::Io(msg) => write!(f, "i/o failure: {msg}"),
        }
    }
}

impl From<ccseq::Error> for CliError {
    fn from(err: ccseq::Error) -> Self {
        CliError::Invalid(err.to_string())
    }
}

/// What a successful run reports back to `main`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outcome {
    /// Some(passed) when a verification ran.
    pub verification_passed: Option<bool>,
}

pub fn run(job: &JobSpec) -> Result<Outcome, CliError> {
    match &job.command {
        Command::GenGcp(args) => gen_gcp(args),
        Command::GenIgc(args) => gen_igc(args),
        Command::GenZcac(args) => gen_zcac(args),
        Command::GenZcacs(args) => gen_zcacs(args),
        Command::Verify(args) => verify(args),
        Command::ExportGrid(args) => export_grid(args),
    }
}

/// Cap rayon's global pool from `CCSEQ_THREADS` when the variable is set.
pub fn init_threads() {
    if let Ok(value) = std::env::var("CCSEQ_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| CliError::Invalid(format!("cannot parse {what} entry {part:?}")))
        })
        .collect()
}

fn parse_profile(text: &str) -> Result<Vec<(u32, u32)>, CliError> {
    text.split(',')
        .map(|part| {
            let (p, m) = part
                .trim()
                .split_once('^')
                .ok_or_else(|| CliError::Invalid(format!("profile entry {part:?} is not p^m")))?;
            let p = p
                .parse::<u32>()
                .map_err(|_| CliError::Invalid(format!("bad prime in {part:?}")))?;
            let m = m
                .parse::<u32>()
                .map_err(|_| CliError::Invalid(format!("bad exponent in {part:?}")))?;
            Ok((p, m))
        })
        .collect()
}

fn build_gcp_params(
    m: usize,
    lambda: u32,
    pi: &Option<String>,
    g: &Option<String>,
    e: u32,
    e_prime: u32,
) -> Result<GcpParams, CliError> {
    let mut gp = GcpParams::new(m, lambda)?;
    if let Some(pi) = pi {
        gp = gp.with_permutation(parse_list(pi, "permutation")?)?;
    }
    if let Some(g) = g {
        gp = gp.with_linear(parse_list(g, "linear coefficient")?)?;
    }
    Ok(gp.with_offsets(e, e_prime))
}

fn build_igc_params(args: &GenIgcArgs) -> Result<(RadixProfile, IgcParams), CliError> {
    let factors = parse_profile(&args.profile)?;
    let lambda = args
        .lambda
        .unwrap_or_else(|| default_modulus(&factors, false));
    let profile = RadixProfile::new(factors, lambda)?;
    let k = profile.num_factors();
    for (name, given) in [
        ("--perm", args.perms.len()),
        ("--lin", args.lins.len()),
        ("--const", args.consts.len()),
    ] {
        if given > k {
            return Err(CliError::Invalid(format!(
                "{name} given {given} times for {k} factors"
            )));
        }
    }
    let mut params = IgcParams::new(profile.clone());
    for (alpha, perm) in args.perms.iter().enumerate() {
        params = params.with_permutation(alpha, parse_list(perm, "permutation")?)?;
    }
    for (alpha, lin) in args.lins.iter().enumerate() {
        params = params.with_linear_coeffs(alpha, parse_list(lin, "linear coefficient")?)?;
    }
    for (alpha, &value) in args.consts.iter().enumerate() {
        params = params.with_constant(alpha, value)?;
    }
    Ok((profile, params))
}

fn build_two_dim(args: &TwoDimArgs) -> Result<(RadixProfile, IgcParams, GcpParams), CliError> {
    let factors = parse_profile(&args.profile)?;
    let lambda = args
        .lambda
        .unwrap_or_else(|| default_modulus(&factors, true));
    let profile = RadixProfile::new(factors, lambda)?;
    let params = IgcParams::new(profile.clone());
    let gp = build_gcp_params(args.m, lambda, &args.pi, &args.g, args.e, args.e_prime)?;
    Ok((profile, params, gp))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))
}

fn report_path(out: &OutputArgs) -> PathBuf {
    out.report.clone().unwrap_or_else(|| {
        let mut name = out.out.as_os_str().to_owned();
        name.push(".report.json");
        PathBuf::from(name)
    })
}

/// Write the codeset and, unless suppressed, its verification report.
fn emit(
    out: &OutputArgs,
    doc: &CodesetDoc,
    report: Option<VerificationReport>,
) -> Result<Outcome, CliError> {
    write_file(&out.out, &doc.to_json())?;
    let Some(report) = report else {
        return Ok(Outcome {
            verification_passed: None,
        });
    };
    write_file(&report_path(out), &report.to_json())?;
    println!(
        "verification: {} (peak {}, {} violation(s))",
        if report.passed { "PASS" } else { "FAIL" },
        report.peak,
        report.violation_count
    );
    Ok(Outcome {
        verification_passed: Some(report.passed),
    })
}

fn gen_gcp(args: &GenGcpArgs) -> Result<Outcome, CliError> {
    let lambda = args.lambda.unwrap_or(2);
    let gp = build_gcp_params(args.m, lambda, &args.pi, &args.g, args.e, args.e_prime)?;
    let (a, b) = paterson_pair(&gp);
    let doc = io::encode_gcp(&a, &b, args.m);
    println!("gcp: length {} over Z_{lambda}", a.len());
    let report = (!args.out.no_verify)
        .then(|| ccseq::verify::verify_gcp(&a, &b))
        .transpose()?;
    emit(&args.out, &doc, report)
}

fn gen_igc(args: &GenIgcArgs) -> Result<Outcome, CliError> {
    let (profile, params) = build_igc_params(args)?;
    let codes = build_igc_codeset(&params);
    let doc = io::encode_igc(&profile, &codes);
    let (k, m, l, z) = (
        profile.set_size(),
        profile.rows_per_code(),
        profile.seq_len(),
        profile.zcz_width(),
    );
    println!("igc: K={k} codes of {m}x{l}, zone Z={z}");
    if args.out.no_verify {
        return emit(&args.out, &doc, None);
    }
    let report = ccseq::verify::verify_igc(&codes, z)?;
    let (_, optimal) = verify_zccs_bound(k, m, l, z);
    println!(
        "bound: K = M*floor(L/Z) {}",
        if optimal { "attained" } else { "NOT attained" }
    );
    // the set-size bound is a separate claim; it gates the exit code, not
    // the correlation report
    let scan_passed = report.passed;
    let mut outcome = emit(&args.out, &doc, Some(report))?;
    outcome.verification_passed = Some(scan_passed && optimal);
    Ok(outcome)
}

fn parse_quad(profile: &RadixProfile, args: &GenZcacArgs) -> Result<ZetaQuad, CliError> {
    let given = [&args.s1, &args.s2, &args.t1, &args.t2];
    if given.iter().all(|o| o.is_none()) {
        return Ok(select_quads(profile, QuadStrategy::ConsecutivePairs)?.remove(0));
    }
    let [Some(s1), Some(s2), Some(t1), Some(t2)] = given else {
        return Err(CliError::Invalid(
            "give all of --s1 --s2 --t1 --t2 or none".into(),
        ));
    };
    Ok(ZetaQuad::new(
        profile,
        parse_list(s1, "s1")?,
        parse_list(s2, "s2")?,
        parse_list(t1, "t1")?,
        parse_list(t2, "t2")?,
    )?)
}

fn gen_zcac(args: &GenZcacArgs) -> Result<Outcome, CliError> {
    let (profile, params, gp) = build_two_dim(&args.dims)?;
    let quad = parse_quad(&profile, args)?;
    let arrays = build_zcac(&params, &gp, &quad)?;
    let doc = io::encode_zcac(&profile, args.dims.m, &quad, &arrays);
    let (z1, z2) = (1u64 << args.dims.m, profile.zcz_width());
    println!(
        "zcac: {} arrays of {}x{}, zone {z1}x{z2}",
        arrays.len(),
        arrays[0].rows(),
        arrays[0].cols()
    );
    let report = (!args.out.no_verify)
        .then(|| ccseq::verify::verify_zcac(&arrays, z1, z2))
        .transpose()?;
    emit(&args.out, &doc, report)
}

fn gen_zcacs(args: &GenZcacsArgs) -> Result<Outcome, CliError> {
    let (profile, params, gp) = build_two_dim(&args.dims)?;
    let strategy = match args.strategy {
        StrategyArg::Consecutive => QuadStrategy::ConsecutivePairs,
        StrategyArg::Seeded => QuadStrategy::Seeded(args.seed),
    };
    let quads = select_quads(&profile, strategy)?;
    let sets = build_zcacs(&params, &gp, &quads)?;
    let doc = io::encode_zcacs(&profile, args.dims.m, &quads, &sets);
    let (z1, z2) = (1u64 << args.dims.m, profile.zcz_width());
    println!(
        "zcacs: {} sets of {} arrays of {}x{}, zone {z1}x{z2}",
        sets.len(),
        sets[0].len(),
        sets[0][0].rows(),
        sets[0][0].cols()
    );
    let report = (!args.out.no_verify)
        .then(|| ccseq::verify::verify_zcacs(&sets, z1, z2))
        .transpose()?;
    emit(&args.out, &doc, report)
}

fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let doc = CodesetDoc::from_json(&read_file(&args.input)?)?;
    let report = io::verify_document(&doc)?;
    match &args.report {
        Some(path) => write_file(path, &report.to_json())?,
        None => println!("{}", report.to_json()),
    }
    eprintln!(
        "verification: {} ({} violation(s))",
        if report.passed { "PASS" } else { "FAIL" },
        report.violation_count
    );
    Ok(Outcome {
        verification_passed: Some(report.passed),
    })
}

type GridPoint = (i64, i64, CorrelationValue);

fn grid_points(doc: &CodesetDoc, first: usize, second: usize) -> Result<Vec<GridPoint>, CliError> {
    let check_index = |idx: usize, len: usize, what: &str| {
        if idx >= len {
            Err(CliError::Invalid(format!(
                "{what} index {idx} out of range (have {len})"
            )))
        } else {
            Ok(())
        }
    };
    let mut points = Vec::new();
    match io::decode(doc)? {
        DecodedSet::Gcp { a, b } => {
            for tau in shifts_1d(a.len() as i64) {
                let mut sum = ccseq::correlation::aacf(&a, tau)?;
                sum.merge(&ccseq::correlation::aacf(&b, tau)?);
                points.push((tau, 0, sum));
            }
        }
        DecodedSet::Igc { codes, .. } => {
            check_index(first, codes.len(), "--first")?;
            check_index(second, codes.len(), "--second")?;
            let len = codes[first].seq_len() as i64;
            for tau in shifts_1d(len) {
                points.push((
                    tau,
                    0,
                    code_accf(codes[first].rows(), codes[second].rows(), tau)?,
                ));
            }
        }
        DecodedSet::Zcac { arrays, .. } => {
            let (l1, l2) = (arrays[0].rows() as i64, arrays[0].cols() as i64);
            for (t1, t2) in shifts_2d(l1, l2) {
                let mut sum = CorrelationValue::zero(arrays[0].lambda());
                for array in &arrays {
                    sum.merge(&accf_2d(array, array, t1, t2)?);
                }
                points.push((t1, t2, sum));
            }
        }
        DecodedSet::Zcacs { sets, .. } => {
            check_index(first, sets.len(), "--first")?;
            check_index(second, sets.len(), "--second")?;
            let (l1, l2) = (sets[0][0].rows() as i64, sets[0][0].cols() as i64);
            for (t1, t2) in shifts_2d(l1, l2) {
                let mut sum = CorrelationValue::zero(sets[0][0].lambda());
                for (x, y) in sets[first].iter().zip(&sets[second]) {
                    sum.merge(&accf_2d(x, y, t1, t2)?);
                }
                points.push((t1, t2, sum));
            }
        }
    }
    Ok(points)
}

fn export_grid(args: &ExportGridArgs) -> Result<Outcome, CliError> {
    let doc = CodesetDoc::from_json(&read_file(&args.input)?)?;
    let points = grid_points(&doc, args.first, args.second)?;
    let contents = match args.format {
        GridFormat::Csv => {
            let mut text = String::from("tau1,tau2,re,im,abs\r\n");
            for (t1, t2, value) in &points {
                let c = value.complex();
                let _ = write!(text, "{t1},{t2},{},{},{}\r\n", c.re, c.im, c.norm());
            }
            text
        }
        GridFormat::Json => {
            let rows: Vec<serde_json::Value> = points
                .iter()
                .map(|(t1, t2, value)| {
                    let c = value.complex();
                    serde_json::json!({
                        "tau1": t1,
                        "tau2": t2,
                        "re": c.re,
                        "im": c.im,
                        "abs": c.norm(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("grid serializes")
        }
    };
    write_file(&args.out, &contents)?;
    println!(
        "grid: {} shifts written to {}",
        points.len(),
        args.out.display()
    );
    Ok(Outcome {
        verification_passed: None,
    })
}
