//! Command-line front end: construction, classification, verification and
//! data emission as subcommands with machine-readable output.
//!
//! Exit-code contract: 0 on success, 1 when a verification suite reports
//! failures, 2 on usage or domain errors. Exact-mode subcommands (`poly`,
//! `window`, `spectrum`) reject float λ; numeric-mode ones (`verify
//! --suite numeric`, `plot-data`) accept both `p/q` strings and decimals.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::exactmath::rational::{self, Rational};
use crate::extension::{extended_spectrum, extended_potential_log_form};
use crate::numverify::{sample_potential, GridSpec};
use crate::parajacobi::{nodeless_window, para_jacobi, theta};
use crate::tdpt::{jacobi_poly, tdpt_potential_z, TdptParams};
use crate::verify::{exact_suite, numeric_suite, NumericConfig};

/// Version tag carried by every emission so downstream scripts can pin
/// formats.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "parajac",
    version,
    about = "Exact para-Jacobi polynomials, nodeless windows, rational TDPT extensions"
)]
pub struct Cli {
    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output to this path instead of standard output
    /// (for plot-data: the output directory).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Construct a para-Jacobi, Jacobi, or Θ-basis polynomial.
    Poly(PolyArgs),
    /// Print the nodeless λ window of an index.
    Window(IndexArgs),
    /// Print the spectrum of the extended model.
    Spectrum(SpectrumArgs),
    /// Run a verification suite; exits 1 on any failed check.
    Verify(VerifyArgs),
    /// Emit x,V CSV curves for extended potentials plus the partner.
    PlotData(PlotDataArgs),
}

#[derive(Args)]
pub struct IndexArgs {
    /// Polynomial degree n.
    #[arg(short = 'n')]
    pub n: u32,
    /// Jacobi parameter N (α = -N).
    #[arg(short = 'N')]
    pub big_n: u32,
    /// Jacobi parameter M (β = -M).
    #[arg(short = 'M')]
    pub big_m: u32,
}

/// Which polynomial family to construct; exactly one must be chosen.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct FamilyFlags {
    /// Para-Jacobi p_n^(-N,-M)(z;λ); requires -n -N -M --lambda.
    #[arg(long)]
    pub para: bool,
    /// Classical Jacobi P_n^(α,β); requires -n --alpha --beta.
    #[arg(long)]
    pub jacobi: bool,
    /// Θ1 basis polynomial; requires -n -N -M.
    #[arg(long)]
    pub theta1: bool,
    /// Θ2 basis polynomial; requires -n -N -M.
    #[arg(long)]
    pub theta2: bool,
}

#[derive(Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub family: FamilyFlags,

    /// Polynomial degree n.
    #[arg(short = 'n')]
    pub n: u32,
    /// Jacobi parameter N (α = -N).
    #[arg(short = 'N', required_unless_present = "jacobi")]
    pub big_n: Option<u32>,
    /// Jacobi parameter M (β = -M).
    #[arg(short = 'M', required_unless_present = "jacobi")]
    pub big_m: Option<u32>,
    /// Exact λ as "p/q" (floats rejected: exact mode).
    #[arg(long, required_if_eq("para", "true"))]
    pub lambda: Option<String>,
    /// Jacobi α as "p/q".
    #[arg(long, required_if_eq("jacobi", "true"))]
    pub alpha: Option<String>,
    /// Jacobi β as "p/q".
    #[arg(long, required_if_eq("jacobi", "true"))]
    pub beta: Option<String>,
}

#[derive(Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub index: IndexArgs,
    /// Highest old level k to list alongside the added level.
    #[arg(long, default_value_t = 8)]
    pub cutoff: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteKind {
    Exact,
    Numeric,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum)]
    pub suite: SuiteKind,
    /// Sweep bound on N and M for the exact suite.
    #[arg(long = "max-NM", default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_nm: u32,
    /// Model degree for the numeric suite.
    #[arg(short = 'n', default_value_t = 2)]
    pub n: u32,
    /// Model parameter N for the numeric suite.
    #[arg(short = 'N', default_value_t = 2)]
    pub big_n: u32,
    /// Model parameter M for the numeric suite.
    #[arg(short = 'M', default_value_t = 2)]
    pub big_m: u32,
    /// λ values for the numeric suite; "p/q" or decimal (numeric mode).
    #[arg(long = "lambda", value_delimiter = ',')]
    pub lambdas: Vec<String>,
    /// Gauss-Jacobi quadrature order.
    #[arg(long, default_value_t = 64)]
    pub quad_order: usize,
    /// Interior grid points of the finite-difference solver.
    #[arg(long, default_value_t = 500)]
    pub grid: usize,
    /// Tolerance on normalized Gram off-diagonals.
    #[arg(long = "tol-ortho", default_value_t = crate::numverify::DEFAULT_ORTHO_TOL)]
    pub tol_ortho: f64,
    /// Relative tolerance on finite-difference eigenvalues.
    #[arg(long = "tol-fd", default_value_t = crate::numverify::DEFAULT_FD_REL_TOL)]
    pub tol_fd: f64,
    /// Tolerance of the quadrature moment self-test.
    #[arg(long = "tol-quad", default_value_t = crate::numverify::DEFAULT_QUAD_TOL)]
    pub tol_quad: f64,
}

#[derive(Args)]
pub struct PlotDataArgs {
    #[command(flatten)]
    pub index: IndexArgs,
    /// Comma-separated λ list; "p/q" or decimal (numeric mode).
    #[arg(long, value_delimiter = ',', default_value = "1/2,1,3/2")]
    pub lambdas: Vec<String>,
    /// Number of uniform subdivisions of (0, π/2); samples sit at the
    /// interior division points, so even counts hit x = π/4 exactly.
    #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u32).range(2..))]
    pub grid: u32,
}

/// Parses λ in exact mode: `p/q` only, floats rejected.
fn parse_lambda_exact(s: &str) -> Result<Rational, String> {
    if s.contains('.') || s.contains(['e', 'E']) {
        return Err(format!(
            "lambda {s:?} looks like a float; this subcommand is exact-mode and takes \"p/q\""
        ));
    }
    rational::from_str(s).map_err(|e| e.to_string())
}

/// Parses λ in numeric mode: `p/q`, or a decimal lifted to its exact dyadic
/// value.
fn parse_lambda_numeric(s: &str) -> Result<Rational, String> {
    if let Ok(r) = rational::from_str(s) {
        return Ok(r);
    }
    let x: f64 = s
        .parse()
        .map_err(|_| format!("lambda {s:?} is neither \"p/q\" nor a decimal"))?;
    rational::from_f64(x).ok_or_else(|| format!("lambda {s:?} is not finite"))
}

/// Everything a subcommand can produce.
enum Emission {
    Text(String),
    Files(Vec<(PathBuf, String)>),
}

/// Error carrying the process exit code.
struct CmdError {
    code: i32,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Emission::Text(text)) => match &cli.out {
            None => {
                println!("{text}");
                0
            }
            Some(path) => match fs::write(path, text + "\n") {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    2
                }
            },
        },
        Ok(Emission::Files(files)) => {
            let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
            for (name, content) in &files {
                let path = dir.join(name);
                if let Err(e) = fs::write(&path, content) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
                println!("{}", path.display());
            }
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Emission, CmdError> {
    match &cli.command {
        Command::Poly(args) => cmd_poly(args, cli.format),
        Command::Window(args) => cmd_window(args, cli.format),
        Command::Spectrum(args) => cmd_spectrum(args, cli.format),
        Command::Verify(args) => cmd_verify(args),
        Command::PlotData(args) => cmd_plot_data(args),
    }
}

#[derive(Serialize)]
struct PolyOut {
    schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    big_n: Option<u32>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    big_m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<String>,
    coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    window: Option<Vec<WindowIntervalOut>>,
}

#[derive(Serialize)]
struct WindowIntervalOut {
    lo: String,
    hi: String,
    case: String,
}

fn case_tag(case: crate::parajacobi::WindowCase) -> String {
    serde_json::to_value(case)
        .expect("case serializes")
        .as_str()
        .expect("case is a string")
        .to_string()
}

fn cmd_poly(args: &PolyArgs, format: Format) -> Result<Emission, CmdError> {
    let mut out = PolyOut {
        schema_version: SCHEMA_VERSION,
        n: Some(args.n),
        big_n: None,
        big_m: None,
        lambda: None,
        alpha: None,
        beta: None,
        coeffs: Vec::new(),
        window: None,
    };

    if args.family.jacobi {
        let alpha = parse_lambda_exact(args.alpha.as_deref().expect("required by clap"))
            .map_err(CmdError::usage)?;
        let beta = parse_lambda_exact(args.beta.as_deref().expect("required by clap"))
            .map_err(CmdError::usage)?;
        out.alpha = Some(rational::to_string(&alpha));
        out.beta = Some(rational::to_string(&beta));
        out.coeffs = jacobi_poly(args.n, &alpha, &beta).coeff_strings();
    } else {
        let bn = args.big_n.expect("required by clap");
        let bm = args.big_m.expect("required by clap");
        out.big_n = Some(bn);
        out.big_m = Some(bm);
        let poly = if args.family.para {
            let lam = parse_lambda_exact(args.lambda.as_deref().expect("required by clap"))
                .map_err(CmdError::usage)?;
            out.lambda = Some(rational::to_string(&lam));
            let p = para_jacobi(args.n, bn, bm, &lam)
                .map_err(|e| CmdError::usage(e.to_string()))?;
            let window = nodeless_window(args.n, bn, bm)
                .map_err(|e| CmdError::usage(e.to_string()))?;
            out.window = Some(
                window
                    .intervals
                    .iter()
                    .map(|iv| WindowIntervalOut {
                        lo: iv.lo.to_wire(),
                        hi: iv.hi.to_wire(),
                        case: case_tag(window.case),
                    })
                    .collect(),
            );
            p
        } else {
            let which = if args.family.theta1 { 1 } else { 2 };
            theta(args.n, bn, bm, which).map_err(|e| CmdError::usage(e.to_string()))?
        };
        out.coeffs = poly.coeff_strings();
    }

    Ok(Emission::Text(match format {
        Format::Json => serde_json::to_string_pretty(&out).expect("serializable"),
        Format::Csv => {
            let mut s = format!("# parajac-schema {SCHEMA_VERSION}\n# coeffs\n");
            s.push_str(&out.coeffs.join(","));
            s
        }
    }))
}

#[derive(Serialize)]
struct WindowOut {
    schema_version: u32,
    n: u32,
    #[serde(rename = "N")]
    big_n: u32,
    #[serde(rename = "M")]
    big_m: u32,
    #[serde(flatten)]
    window: crate::parajacobi::LambdaWindow,
}

fn cmd_window(args: &IndexArgs, format: Format) -> Result<Emission, CmdError> {
    let window = nodeless_window(args.n, args.big_n, args.big_m)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let out = WindowOut {
        schema_version: SCHEMA_VERSION,
        n: args.n,
        big_n: args.big_n,
        big_m: args.big_m,
        window: window.clone(),
    };
    Ok(Emission::Text(match format {
        Format::Json => serde_json::to_string_pretty(&out).expect("serializable"),
        Format::Csv => {
            let mut s = format!(
                "# parajac-schema {SCHEMA_VERSION}\n# case,lo,hi,lambda_n\n"
            );
            for iv in &window.intervals {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    case_tag(window.case),
                    iv.lo.to_wire(),
                    iv.hi.to_wire(),
                    rational::to_string(&window.lambda_n)
                );
            }
            s.trim_end().to_string()
        }
    }))
}

#[derive(Serialize)]
struct SpectrumOut {
    schema_version: u32,
    n: u32,
    #[serde(rename = "N")]
    big_n: u32,
    #[serde(rename = "M")]
    big_m: u32,
    levels: Vec<(i64, String)>,
}

fn cmd_spectrum(args: &SpectrumArgs, format: Format) -> Result<Emission, CmdError> {
    let ix = &args.index;
    let levels = extended_spectrum(ix.n, ix.big_n, ix.big_m, args.cutoff)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let out = SpectrumOut {
        schema_version: SCHEMA_VERSION,
        n: ix.n,
        big_n: ix.big_n,
        big_m: ix.big_m,
        levels: levels
            .iter()
            .map(|(k, e)| (*k, rational::to_string(e)))
            .collect(),
    };
    Ok(Emission::Text(match format {
        Format::Json => serde_json::to_string_pretty(&out).expect("serializable"),
        Format::Csv => {
            let mut s = format!("# parajac-schema {SCHEMA_VERSION}\n# k,E\n");
            for (k, e) in &out.levels {
                let _ = writeln!(s, "{k},{e}");
            }
            s.trim_end().to_string()
        }
    }))
}

fn cmd_verify(args: &VerifyArgs) -> Result<Emission, CmdError> {
    let report = match args.suite {
        SuiteKind::Exact => exact_suite(args.max_nm),
        SuiteKind::Numeric => {
            let mut config = NumericConfig {
                n: args.n,
                big_n: args.big_n,
                big_m: args.big_m,
                quad_order: args.quad_order,
                grid: GridSpec {
                    interior: args.grid,
                },
                ortho_tol: args.tol_ortho,
                fd_rel_tol: args.tol_fd,
                quad_tol: args.tol_quad,
                ..NumericConfig::default()
            };
            if !args.lambdas.is_empty() {
                config.lambdas = args
                    .lambdas
                    .iter()
                    .map(|s| parse_lambda_numeric(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(CmdError::usage)?;
            }
            numeric_suite(&config)
        }
    };
    let text = serde_json::to_string_pretty(&serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "suite": report.suite,
        "checks_run": report.checks_run,
        "failures": report.failures,
    }))
    .expect("serializable");
    if report.passed() {
        Ok(Emission::Text(text))
    } else {
        println!("{text}");
        Err(CmdError::verification(format!(
            "{} of {} checks failed",
            report.failures.len(),
            report.checks_run
        )))
    }
}

fn lambda_file_tag(s: &str) -> String {
    s.replace('/', "_").replace('-', "m").replace('.', "p")
}

fn format_curve(header_values: &str, samples: &[(f64, f64)]) -> String {
    let mut s = format!(
        "# parajac-schema {SCHEMA_VERSION}\n# n N M lambda\n# {header_values}\n# x,V\n"
    );
    for (x, v) in samples {
        let _ = writeln!(s, "{x},{v}");
    }
    s
}

fn cmd_plot_data(args: &PlotDataArgs) -> Result<Emission, CmdError> {
    let ix = &args.index;
    let grid = GridSpec {
        interior: args.grid as usize - 1,
    };
    let mut files = Vec::new();
    for s in &args.lambdas {
        let lam = parse_lambda_numeric(s).map_err(CmdError::usage)?;
        let v = extended_potential_log_form(ix.n, ix.big_n, ix.big_m, &lam)
            .map_err(|e| CmdError::usage(e.to_string()))?;
        let samples = sample_potential(&v, grid);
        let lam_str = rational::to_string(&lam);
        files.push((
            PathBuf::from(format!(
                "extended_n{}_N{}_M{}_lambda{}.csv",
                ix.n,
                ix.big_n,
                ix.big_m,
                lambda_file_tag(&lam_str)
            )),
            format_curve(
                &format!("{} {} {} {}", ix.n, ix.big_n, ix.big_m, lam_str),
                &samples,
            ),
        ));
    }
    // the unextended partner V(x; N, M)
    let partner = tdpt_potential_z(&TdptParams::from_ints(
        ix.big_n as i64,
        ix.big_m as i64,
    ));
    let samples = sample_potential(&partner, grid);
    files.push((
        PathBuf::from(format!("partner_N{}_M{}.csv", ix.big_n, ix.big_m)),
        format_curve(&format!("- {} {} -", ix.big_n, ix.big_m), &samples),
    ));
    Ok(Emission::Files(files))
}
