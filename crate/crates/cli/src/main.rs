//! an-forge: build alternating-group polynomials, certify specializations,
//! census the fields they cut out, and tabulate the exponent laws.
//!
//! Exit codes: 0 success, 2 invalid input, 3 resource cap refused the run,
//! 4 an internal invariant broke (the offending parameter tuple is printed).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use an_forge::census::{
    census_csv, census_json, count_fields, density_csv, density_json, density_scan, growth_fit,
    BoxSpec, CensusError, CountReport, DensityPoint, GrowthFit,
};
use an_forge::construct::{
    build, reference_even, reference_odd, ConstructError, ConstructionRecord, Specialization,
};
use an_forge::exponents::{comparison_table, identity_check, table_csv, table_text, ExponentError};
use an_forge::galois::{certify_an, CertError, GaloisCertificate, IrredProof, Irreducibility};
use an_forge::IntPoly;

#[derive(Parser)]
#[command(name = "an-forge", version, about = "Alternating-group polynomial workbench")]
struct Cli {
    /// Worker threads for bulk runs (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for sampled runs
    #[arg(long, global = true, env = "AN_FORGE_SEED", default_value_t = 0)]
    seed: u64,

    /// Write the result to this file (atomically) instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output format; each command has a sensible default
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one specialization (or a reference point) and print every stage
    Construct(ConstructArgs),
    /// Certify the Galois group of an integer polynomial
    Certify(CertifyArgs),
    /// Count distinct certified fields over parameter boxes
    Census(CensusArgs),
    /// Estimate the certified fraction at growing box edges
    Density(DensityArgs),
    /// Tabulate the exponent laws
    Exponents(ExponentArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Degree of the output polynomial
    #[arg(long)]
    n: usize,

    /// Assert the degree is even
    #[arg(long, conflicts_with = "odd")]
    even: bool,

    /// Assert the degree is odd
    #[arg(long)]
    odd: bool,

    /// Use the built-in reference specialization for this degree
    #[arg(long)]
    reference: bool,

    /// Node perturbation for the odd reference, a rational like 1/100
    #[arg(long, default_value = "0")]
    perturb: String,

    /// Free coefficients alpha_1,...,alpha_r, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alphas: Option<Vec<i64>>,

    /// Double-root location
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,

    /// Offset parameter; the vertical shift is built from tau^2
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<i64>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Integer coefficients c0,c1,...,cn in ascending powers
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    coeffs: Vec<String>,

    /// How many good primes to sample
    #[arg(long, default_value_t = 200)]
    budget: usize,
}

#[derive(Args)]
struct CensusArgs {
    /// Degree
    #[arg(long)]
    n: usize,

    /// Box edges, comma separated, strictly increasing
    #[arg(long = "Y", value_delimiter = ',', required = true)]
    y: Vec<f64>,

    /// Prime budget per certification
    #[arg(long, default_value_t = 200)]
    budget: usize,

    /// Splitting primes per fingerprint
    #[arg(long, default_value_t = 20)]
    k: usize,

    /// Refuse boxes holding more tuples than this
    #[arg(long, default_value_t = 10_000_000)]
    cap: u128,

    /// Append a least-squares growth fit
    #[arg(long)]
    fit: bool,
}

#[derive(Args)]
struct DensityArgs {
    /// Degree
    #[arg(long)]
    n: usize,

    /// Thresholds, comma separated, strictly increasing
    #[arg(long = "T", value_delimiter = ',', required = true)]
    t: Vec<f64>,

    /// Prime budget per certification
    #[arg(long, default_value_t = 200)]
    budget: usize,

    /// Exhaustive below this tuple count, sampled above it
    #[arg(long = "sample-cap", default_value_t = 20_000)]
    sample_cap: u64,
}

#[derive(Args)]
struct ExponentArgs {
    /// Degree range lo,hi (inclusive)
    #[arg(long, value_delimiter = ',', default_value = "6,12")]
    range: Vec<usize>,

    /// Run the identity suite instead of printing the table
    #[arg(long)]
    check: bool,
}

enum Failure {
    Validation(String),
    Cap(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Cap(m) | Failure::Internal(m) => m,
        }
    }
}

fn validation(msg: impl Into<String>) -> Failure {
    Failure::Validation(msg.into())
}

fn construct_fail(e: ConstructError) -> Failure {
    match e {
        ConstructError::Internal { .. } => Failure::Internal(e.to_string()),
        other => Failure::Validation(other.to_string()),
    }
}

fn census_fail(e: CensusError) -> Failure {
    match e {
        CensusError::BoxTooLarge { .. } => Failure::Cap(e.to_string()),
        CensusError::Internal { .. } => Failure::Internal(e.to_string()),
        other => Failure::Validation(other.to_string()),
    }
}

fn cert_fail(e: CertError) -> Failure {
    match e {
        CertError::SignCoherence { .. } | CertError::BadPrime { .. } => {
            Failure::Internal(e.to_string())
        }
        other => Failure::Validation(other.to_string()),
    }
}

fn exp_fail(e: ExponentError) -> Failure {
    Failure::Validation(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .is_err()
        {
            eprintln!("error: worker pool already initialized");
            return ExitCode::from(4);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let rendered = match &cli.command {
        Cmd::Construct(a) => cmd_construct(a, cli.format)?,
        Cmd::Certify(a) => cmd_certify(a, cli.format)?,
        Cmd::Census(a) => cmd_census(a, cli.format)?,
        Cmd::Density(a) => cmd_density(a, cli.format, cli.seed)?,
        Cmd::Exponents(a) => cmd_exponents(a, cli.format)?,
    };
    deliver(&rendered, cli.output.as_deref())
}

fn deliver(content: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => write_atomic(p, content)
            .map_err(|e| validation(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Temp file in the target directory, then rename; a crashed run never
/// leaves a partial file at the destination.
fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, content)?;
    fs::rename(&tmp, path)
}

fn check_parity_flags(n: usize, even: bool, odd: bool) -> Result<(), Failure> {
    if even && n % 2 != 0 {
        return Err(validation(format!("--even given but n = {n} is odd")));
    }
    if odd && n % 2 != 1 {
        return Err(validation(format!("--odd given but n = {n} is even")));
    }
    Ok(())
}

fn cmd_construct(a: &ConstructArgs, format: Option<Format>) -> Result<String, Failure> {
    if matches!(format, Some(Format::Json) | Some(Format::Csv)) {
        return Err(validation("construct renders text only"));
    }
    check_parity_flags(a.n, a.even, a.odd)?;
    if a.reference {
        if a.n % 2 == 0 {
            let r = reference_even(a.n).map_err(construct_fail)?;
            let mut out = String::new();
            let _ = writeln!(out, "reference specialization, n = {}", r.n);
            let _ = writeln!(out, "h   = {}", r.h);
            let _ = writeln!(out, "g   = {}", r.g);
            let _ = writeln!(out, "f~  = {}", r.f_tilde);
            for (i, v) in r.values.iter().enumerate() {
                let _ = writeln!(out, "f~({}) = {}", i + 1, v);
            }
            if let Some(tau) = a.tau {
                let rec = r.with_tau(tau).map_err(construct_fail)?;
                out.push('\n');
                out.push_str(&render_record(&rec));
            }
            Ok(out)
        } else {
            let eps = BigRational::from_str(a.perturb.trim())
                .map_err(|e| validation(format!("bad --perturb value {:?}: {e}", a.perturb)))?;
            let r = reference_odd(a.n, &eps).map_err(construct_fail)?;
            let mut out = String::new();
            let _ = writeln!(out, "reference family, n = {}, perturbation = {}", r.n, eps);
            let _ = writeln!(out, "alpha = {}", r.alpha);
            let _ = writeln!(out, "g     = {}", r.g);
            let _ = writeln!(out, "P~    = {}", r.poly);
            for (b, s) in r.betas.iter().zip(&r.slopes) {
                let _ = writeln!(out, "P~'({b}) = {s}");
            }
            let _ = writeln!(out, "P~'(alpha) = {}", r.slope_at_alpha);
            Ok(out)
        }
    } else {
        let alphas = a
            .alphas
            .clone()
            .ok_or_else(|| validation("provide --alphas (or use --reference)"))?;
        let alpha = a
            .alpha
            .ok_or_else(|| validation("provide --alpha (or use --reference)"))?;
        let tau = a
            .tau
            .ok_or_else(|| validation("provide --tau (or use --reference)"))?;
        let spec = Specialization::new(a.n, alphas, alpha, tau).map_err(construct_fail)?;
        let rec = build(&spec).map_err(construct_fail)?;
        Ok(render_record(&rec))
    }
}

fn render_record(rec: &ConstructionRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "specialization {}", rec.spec);
    let _ = writeln!(out, "h        = {}", rec.h);
    let _ = writeln!(out, "g        = {}", rec.g);
    let _ = writeln!(out, "f~       = {}", rec.f_tilde);
    let _ = writeln!(out, "gamma    = {}", rec.gamma);
    let _ = writeln!(out, "f~_gamma = {}", rec.f_tilde_gamma);
    let _ = writeln!(out, "f_gamma  = {}", rec.f_gamma);
    out
}

fn cmd_certify(a: &CertifyArgs, format: Option<Format>) -> Result<String, Failure> {
    let coeffs: Vec<BigInt> = a
        .coeffs
        .iter()
        .map(|s| BigInt::from_str(s.trim()))
        .collect::<Result<_, _>>()
        .map_err(|e| validation(format!("bad coefficient: {e}")))?;
    let f = IntPoly::new(coeffs);
    let cert = certify_an(&f, a.budget).map_err(cert_fail)?;
    match format.unwrap_or(Format::Text) {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&cert).expect("certificate serialization cannot fail");
            s.push('\n');
            Ok(s)
        }
        Format::Text => Ok(render_cert(&f, &cert)),
        Format::Csv => Err(validation("certify renders text or json")),
    }
}

fn render_cert(f: &IntPoly, cert: &GaloisCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {f}");
    let _ = writeln!(out, "verdict: {:?}", cert.verdict);
    let _ = writeln!(out, "discriminant is a square: {}", cert.disc_is_square);
    let irr = match &cert.irreducibility {
        Irreducibility::CertifiedIrreducible(IrredProof::IrreducibleModP(p)) => {
            format!("irreducible (single factor mod {p})")
        }
        Irreducibility::CertifiedIrreducible(IrredProof::SubsetSumGap { primes }) => {
            format!("irreducible (no common factor degree across primes {primes:?})")
        }
        Irreducibility::CertifiedReducible(d) => format!("reducible (factor of degree {d})"),
        Irreducibility::Unknown => "unknown".to_string(),
    };
    let _ = writeln!(out, "irreducibility: {irr}");
    let _ = writeln!(out, "block sizes refuted: {:?}", cert.block_sizes_refuted);
    let plural = if cert.primes_used == 1 { "prime" } else { "primes" };
    let _ = writeln!(out, "witnesses ({} {plural} sampled):", cert.primes_used);
    for (p, ty) in &cert.witnesses {
        let _ = writeln!(out, "  p={p}: {ty}");
    }
    out
}

fn cmd_census(a: &CensusArgs, format: Option<Format>) -> Result<String, Failure> {
    let mut reports: Vec<CountReport> = Vec::with_capacity(a.y.len());
    for &y in &a.y {
        let bx = BoxSpec::new(a.n, y, true).map_err(census_fail)?;
        reports.push(count_fields(&bx, a.budget, a.k, a.cap).map_err(census_fail)?);
    }
    let fit: Option<GrowthFit> = if a.fit {
        Some(growth_fit(&reports).map_err(census_fail)?)
    } else {
        None
    };
    Ok(match format.unwrap_or(Format::Json) {
        Format::Json => census_json(&reports, fit.as_ref()),
        Format::Csv => {
            let mut s = census_csv(&reports);
            if let Some(f) = &fit {
                let _ = writeln!(s, "# fit slope={:.6} target={}", f.slope, f.target);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(
                    s,
                    "Y={} tuples={} disc_zero={} certified={} distinct={} max|D|={}",
                    r.box_spec.y,
                    r.specializations,
                    r.disc_zero_excluded,
                    r.certified_an,
                    r.distinct_fingerprints,
                    r.max_abs_disc
                );
            }
            if let Some(f) = &fit {
                let _ = writeln!(s, "fit: slope={:.6} target={}", f.slope, f.target);
            }
            s
        }
    })
}

fn cmd_density(a: &DensityArgs, format: Option<Format>, seed: u64) -> Result<String, Failure> {
    let points: Vec<DensityPoint> =
        density_scan(a.n, &a.t, a.budget, a.sample_cap, seed).map_err(census_fail)?;
    Ok(match format.unwrap_or(Format::Json) {
        Format::Json => density_json(&points),
        Format::Csv => density_csv(&points),
        Format::Text => {
            let mut s = String::new();
            for p in &points {
                let _ = writeln!(
                    s,
                    "T={} sampled={} full={} estimate={} ci=[{:.4}, {:.4}]",
                    p.t, p.sampled, p.full_group, p.estimate, p.ci_low, p.ci_high
                );
            }
            s
        }
    })
}

fn cmd_exponents(a: &ExponentArgs, format: Option<Format>) -> Result<String, Failure> {
    let [lo, hi] = a.range[..] else {
        return Err(validation("--range takes exactly lo,hi"));
    };
    if a.check {
        let failures = identity_check(lo, hi).map_err(exp_fail)?;
        if !failures.is_empty() {
            return Err(Failure::Internal(format!(
                "identity suite failed:\n{}",
                failures.join("\n")
            )));
        }
        return Ok(format!("identity suite clean for n in {lo}..={hi}\n"));
    }
    let rows = comparison_table(lo, hi).map_err(exp_fail)?;
    match format.unwrap_or(Format::Text) {
        Format::Text => Ok(table_text(&rows)),
        Format::Csv => Ok(table_csv(&rows)),
        Format::Json => Err(validation("exponents renders text or csv")),
    }
}
