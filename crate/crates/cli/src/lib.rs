//! Command-line front end of the laboratory.

mod parse;

use std::io::Write;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use zetalab::claims::{
    binomial_series_partials, critical_zero_scan, evaluate_claims, refinement_series,
    BinomialCoefficients, ClaimConfig, ClaimId, Verdict,
};
use zetalab::continuation::{zeta_via_theta_quotient, PoleTerm};
use zetalab::levy::{levy_fractional_moment, levy_moment_mc, FractionalMoment};
use zetalab::reference::{eta, zeta_anywhere};
use zetalab::stochastic::{sample_path, wr_moment, wr_moment_closed_form, PathGrid, WrConfig};
use zetalab::transforms::{make_poisson_element, psf_sides, TestFunction};
use zetalab::{ComplexValue, SeedValue};

pub use parse::{parse_complex, ParseError};

/// Exit status for a numeric, oracle or tolerance failure.
pub const EXIT_NUMERIC: i32 = 2;
/// Exit status for a malformed command line.
pub const EXIT_USAGE: i32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "zetalab",
    version,
    about = "Numerical laboratory for theta/Mellin zeta identities, the Wiener–Riemann measure and ½-stable Lévy moments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Poisson summation identity (1/x)θ(c)(1/x) + 1/(2x) = 1/2 + θ(c)(x).
    Psf {
        #[arg(long, value_enum)]
        function: PsfFunction,
        /// Points x > 0.
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Riemann zeta by one of the representations under study.
    Zeta {
        /// Complex argument such as 0.5+14.1347i.
        #[arg(long, value_parser = parse_arg, allow_hyphen_values = true)]
        s: ComplexValue,
        #[arg(long, value_enum)]
        method: ZetaMethod,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Fractional moment E[L^u] of the ½-stable Lévy law (finite iff u < 1/2).
    Levy {
        #[arg(long)]
        u: f64,
        #[arg(long, default_value_t = 1.0)]
        y0: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Wiener–Riemann moment ∫c(t)dr(c) by Monte Carlo.
    Wiener {
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 100_000)]
        paths: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also dump one Brownian path on [0, max(t, 1)] with this seed.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Evaluate asserted identities and write a verdict report.
    Claims {
        #[arg(long = "id")]
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: PathBuf,
        #[arg(long, default_value_t = 256)]
        precision_bits: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sign changes of ζ*(1/2 + it), refined by bisection.
    Zeros {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PsfFunction {
    Gaussian,
    /// The normalized element (peak·G) + its cosine image.
    Peakgauss,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ZetaMethod {
    /// η(s)/(1 − 2^{1−s}), Re s > 0.
    Eta,
    /// Theta quotient through the Mellin transform of G.
    Continuation,
    /// Binomial series with the coefficients as stated and the published form.
    Maslanka,
    /// Reciprocal of the series for 1/ζ, 0 < Re s < 1/2.
    Refinement,
}

fn parse_arg(text: &str) -> Result<ComplexValue, String> {
    parse_complex(text).map_err(|e| e.to_string())
}

/// Significant digits of human-readable output.
fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = 10;
    let mag = x.abs().log10().floor() as i32;
    if (-5..10).contains(&mag) {
        let decimals = (digits - 1 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.prec$e}", prec = digits as usize - 1)
    }
}

fn csig(z: ComplexValue) -> String {
    if z.im == 0.0 {
        sig(z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", sig(z.re), sig(-z.im))
    } else {
        format!("{} + {}i", sig(z.re), sig(z.im))
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs the command line `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let mut text = e.render().to_string();
            if code != 0 && !text.contains("Usage:") {
                text.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\n{}", Cli::command().render_usage());
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_NUMERIC
        }
    }
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<zetalab::Error> for Failure {
    fn from(e: zetalab::Error) -> Self {
        Failure::Numeric(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Numeric(format!("i/o: {e}"))
    }
}

fn execute(command: Command, out: Out) -> Result<i32, Failure> {
    match command {
        Command::Psf { function, x, tol } => {
            let c = match function {
                PsfFunction::Gaussian => TestFunction::gaussian(),
                PsfFunction::Peakgauss => {
                    make_poisson_element(&TestFunction::peak_times_gaussian(), true)?
                }
            };
            writeln!(
                out,
                "{:>14}  {:>18}  {:>18}  {:>12}",
                "x", "lhs", "rhs", "residual"
            )?;
            let mut code = 0;
            for &xi in &x {
                let (l, r) = psf_sides(&c, xi, tol)?;
                let residual = (l.re() - r.re()).abs();
                writeln!(
                    out,
                    "{:>14}  {:>18}  {:>18}  {:>12}",
                    sig(xi),
                    sig(l.re()),
                    sig(r.re()),
                    sig(residual)
                )?;
                if residual > l.err_bound + r.err_bound + tol * r.re().abs().max(1.0) {
                    code = EXIT_NUMERIC;
                }
            }
            Ok(code)
        }
        Command::Zeta { s, method, tol } => zeta_command(s, method, tol, out),
        Command::Levy {
            u,
            y0,
            samples,
            seed,
        } => {
            let e = levy_moment_mc(u, y0, samples, SeedValue(seed))?;
            writeln!(
                out,
                "u = {}, y0 = {}, samples = {samples}, seed = {seed}",
                sig(u),
                sig(y0)
            )?;
            writeln!(
                out,
                "monte carlo mean  {} ± {}",
                sig(e.mean),
                sig(e.std_error)
            )?;
            match levy_fractional_moment(u, y0)? {
                FractionalMoment::Finite { value } => {
                    writeln!(out, "closed form       {}", sig(value))?
                }
                FractionalMoment::Divergent { .. } => {
                    writeln!(out, "closed form       divergent (u ≥ 1/2)")?
                }
            }
            if let Some((alpha, se)) = e.tail_index {
                writeln!(
                    out,
                    "tail index of L^u {} ± {} (exact {})",
                    sig(alpha),
                    sig(se),
                    sig(0.5 / u)
                )?;
            }
            for (n, m, s) in &e.diagnostic {
                writeln!(out, "  n = {n:>9}  mean {}  se {}", sig(*m), sig(*s))?;
            }
            writeln!(out, "divergence_flag = {}", e.divergence_flag)?;
            Ok(0)
        }
        Command::Wiener {
            t,
            paths,
            seed,
            csv,
        } => {
            let cfg = WrConfig::default();
            let e = wr_moment(t, paths, SeedValue(seed), &cfg)?;
            let exact = wr_moment_closed_form(t, cfg.n_max)?;
            writeln!(out, "t = {}, paths = {paths}, seed = {seed}", sig(t))?;
            writeln!(out, "monte carlo  {} ± {}", sig(e.mean), sig(e.std_error))?;
            writeln!(out, "closed form  {}", sig(exact))?;
            if let Some(path) = csv {
                let grid = PathGrid::uniform(t.max(1.0), 1e-3)?;
                sample_path(&grid, SeedValue(seed)).write_csv(&path)?;
                writeln!(out, "path written to {}", path.display())?;
            }
            Ok(0)
        }
        Command::Claims {
            ids,
            all,
            json,
            precision_bits,
            seed,
            tol,
        } => {
            let ids: Vec<ClaimId> = if all {
                ClaimId::ALL.to_vec()
            } else {
                ids.iter()
                    .map(|s| s.parse::<ClaimId>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| Failure::Usage(e.to_string()))?
            };
            if ids.is_empty() {
                return Err(Failure::Usage("give --all or at least one --id".into()));
            }
            let report = evaluate_claims(
                &ids,
                &ClaimConfig {
                    seed,
                    precision_bits,
                    tol,
                },
            )?;
            std::fs::write(&json, report.to_json() + "\n")?;
            writeln!(
                out,
                "{:<24}  {:<12}  {:>6}  variants",
                "claim", "verdict", "points"
            )?;
            for c in &report.claims {
                let variants: Vec<String> = c
                    .variants
                    .iter()
                    .map(|v| format!("{}: {}", v.name, v.verdict))
                    .collect();
                writeln!(
                    out,
                    "{:<24}  {:<12}  {:>6}  {}",
                    c.claim.to_string(),
                    c.verdict.to_string(),
                    c.points.len(),
                    variants.join("; ")
                )?;
            }
            let count = |v: Verdict| report.claims.iter().filter(|c| c.verdict == v).count();
            writeln!(
                out,
                "{} supported, {} refuted, {} inconclusive; report written to {}",
                count(Verdict::Supported),
                count(Verdict::Refuted),
                count(Verdict::Inconclusive),
                json.display()
            )?;
            Ok(0)
        }
        Command::Zeros { from, to, step } => {
            let zeros = critical_zero_scan(from, to, step)?;
            writeln!(
                out,
                "{} sign change(s) of ζ*(1/2 + it) in [{}, {}]",
                zeros.len(),
                sig(from),
                sig(to)
            )?;
            for t in zeros {
                writeln!(out, "{}", sig(t))?;
            }
            Ok(0)
        }
    }
}

fn zeta_command(s: ComplexValue, method: ZetaMethod, tol: f64, out: Out) -> Result<i32, Failure> {
    let reference = zeta_anywhere(s).ok();
    let value = match method {
        ZetaMethod::Eta => {
            if s.re <= 0.0 {
                return Err(Failure::Numeric(format!(
                    "the eta representation needs Re s > 0, got {}",
                    csig(s)
                )));
            }
            let denom = 1.0 - (ComplexValue::new(2f64.ln(), 0.0) * (1.0 - s)).exp();
            eta(s)? / denom
        }
        ZetaMethod::Continuation => zeta_via_theta_quotient(s, PoleTerm::Corrected, tol)?.value,
        ZetaMethod::Maslanka => {
            const K: usize = 128;
            let stated = binomial_series_partials(s, K, BinomialCoefficients::AsPrinted, 256)?;
            let published = binomial_series_partials(s, K, BinomialCoefficients::Literature, 256)?;
            writeln!(out, "coefficients as stated, K = {K}: {}", csig(stated[K]))?;
            writeln!(out, "  K = {}: {}", K / 2, csig(stated[K / 2]))?;
            published[K]
        }
        ZetaMethod::Refinement => {
            if !(s.re > 0.0 && s.re < 0.5) {
                return Err(Failure::Numeric(format!(
                    "the refinement series is stated for 0 < Re s < 1/2, got {}",
                    csig(s)
                )));
            }
            let (sum, _) = refinement_series(s, tol)?;
            1.0 / sum
        }
    };
    writeln!(out, "zeta({}) = {}", csig(s), csig(value))?;
    if let Some(r) = reference {
        writeln!(
            out,
            "reference  {}  |difference| = {}",
            csig(r),
            sig((value - r).norm())
        )?;
    }
    Ok(0)
}
