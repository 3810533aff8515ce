//! `zetakit` — batch front end for the zeta/L-function library.
//!
//! Every evaluation is emitted as one table row (CSV or JSON) carrying
//! the value, its error estimate, and the method tag.  The process exits
//! 0 exactly when all requested evaluations succeed and every checking
//! subcommand meets its tolerance.

mod complex;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use num::integer::gcd;

use complex::parse_complex;
use output::{write_rows, Format, Row};
use zetakit::characters::{enumerate_characters, euler_phi};
use zetakit::lfunc;
use zetakit::theta;

const COMPLEX_GRAMMAR: &str = "Complex literals: `a`, `ai`, `a+bi`, `a-bi` \
with decimal reals (scientific notation allowed), e.g. `2`, `-1.5i`, \
`0.5+14.134725i`.";

#[derive(Parser)]
#[command(name = "zetakit", version, about = "Zeta and L-function evaluations, sweeps and scans", long_about = None, after_help = COMPLEX_GRAMMAR)]
struct Cli {
    /// Tolerance for checking subcommands
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the table to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: ZETAKIT_THREADS or the number of cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZetaMethod {
    Auto,
    Theta,
    EulerMaclaurin,
    Product,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Riemann zeta function at each point
    Zeta {
        /// Points s as complex literals
        #[arg(required = true)]
        s: Vec<String>,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Auto)]
        method: ZetaMethod,
    },
    /// Evaluate a Dirichlet L-function L(chi, s)
    Lfun {
        /// Modulus q
        q: u64,
        /// Character index in enumeration order (0 = trivial/principal)
        chi_index: usize,
        /// Points s as complex literals
        #[arg(required = true)]
        s: Vec<String>,
    },
    /// Evaluate the Jacobi theta function at each tau (Im tau > 0)
    Theta {
        #[arg(required = true)]
        tau: Vec<String>,
    },
    /// Sweep |Lambda(s) - Lambda(1-s)| over a grid; exit 0 iff within --tol
    FeCheck {
        /// Number of grid points (Re in [-2,3], |Im| <= 10, away from poles)
        #[arg(long, default_value_t = 50)]
        grid: usize,
    },
    /// Scan the critical line for zero ordinates in (0, t-max]
    Zeros {
        t_max: f64,
    },
    /// Prime tables: counts, witnesses, Chebyshev divergence
    Primes {
        #[command(subcommand)]
        action: PrimesCmd,
    },
    /// Table of special values (junk value, even zeta values, ...)
    Special,
}

#[derive(Subcommand)]
enum PrimesCmd {
    /// #{p <= x : p = a mod q}
    Count { q: u64, a: u64, x: u64 },
    /// Smallest prime p > n with p = a mod q
    Witness { q: u64, a: u64, n: u64 },
    /// Chebyshev partial sums sum_{n = a mod q} Lambda(n)/n vs log(x)/phi(q);
    /// exit 0 iff every drift is within 4
    Divergence { q: u64, x: u64 },
}

/// Order-preserving parallel map over the inputs of one command.
fn par_map<T, R, F>(items: Vec<T>, threads: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.into_iter().map(f).collect();
    }
    let mut slots: Vec<Option<R>> = Vec::with_capacity(items.len());
    slots.resize_with(items.len(), || None);
    let work: Vec<(usize, T)> = items.into_iter().enumerate().collect();
    let queue = std::sync::Mutex::new(work);
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let item = queue.lock().unwrap().pop();
                let Some((idx, value)) = item else { break };
                let r = f(value);
                results.lock().unwrap()[idx] = Some(r);
            });
        }
    });
    slots.into_iter().map(|r| r.expect("worker finished")).collect()
}

fn thread_count(cli: &Cli) -> usize {
    cli.threads
        .or_else(|| {
            std::env::var("ZETAKIT_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn parse_points(raw: &[String]) -> Result<Vec<Complex64>, String> {
    raw.iter().map(|s| parse_complex(s)).collect()
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Low-discrepancy functional-equation grid avoiding the poles at 0 and 1.
fn fe_grid(n: usize) -> Vec<Complex64> {
    let mut points = Vec::with_capacity(n);
    let mut i = 0u64;
    while points.len() < n {
        i += 1;
        let fi = i as f64;
        let re = -2.0 + 5.0 * (0.5 + fi * 0.618_033_988_749_894_9).fract();
        let im = -10.0 + 20.0 * (0.5 + fi * 0.754_877_666_246_692_9).fract();
        let s = Complex64::new(re, im);
        if s.norm() < 0.3 || (s - 1.0).norm() < 0.3 {
            continue;
        }
        points.push(s);
    }
    points
}

fn run(cli: &Cli) -> Result<(Vec<Row>, bool), String> {
    let threads = thread_count(cli);
    let tol = cli.tol;
    if !(tol > 0.0) {
        return Err("--tol must be positive".into());
    }
    match &cli.command {
        Command::Zeta { s, method } => {
            let points = parse_points(s)?;
            let method = *method;
            let rows = par_map(points, threads, |s| -> Result<Row, String> {
                let v = match method {
                    ZetaMethod::Auto | ZetaMethod::Theta => lfunc::riemann_zeta(s),
                    ZetaMethod::EulerMaclaurin => lfunc::zeta_euler_maclaurin(s),
                    ZetaMethod::Product => lfunc::euler_product_zeta(s, 1_000_000),
                }
                .map_err(|e| format!("zeta({}): {e}", fmt_c(s)))?;
                Ok(Row::from_eval(format!("s={}", fmt_c(s)), &v))
            });
            let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
            Ok((rows, true))
        }
        Command::Lfun { q, chi_index, s } => {
            let chars = enumerate_characters(*q);
            let chi = chars.get(*chi_index).ok_or_else(|| {
                format!(
                    "character index {chi_index} out of range (q = {q} has {} characters)",
                    chars.len()
                )
            })?;
            let points = parse_points(s)?;
            let rows = par_map(points, threads, |s| -> Result<Row, String> {
                let v = lfunc::dirichlet_l(chi, s, tol.min(1e-9))
                    .map_err(|e| format!("L(chi_{chi_index} mod {q}, {}): {e}", fmt_c(s)))?;
                Ok(Row::from_eval(
                    format!("q={q} chi={chi_index} s={}", fmt_c(s)),
                    &v,
                ))
            });
            let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
            Ok((rows, true))
        }
        Command::Theta { tau } => {
            let points = parse_points(tau)?;
            let rows = par_map(points, threads, |tau| -> Result<Row, String> {
                let p = theta::UpperHalfPoint::new(tau)
                    .map_err(|e| format!("theta({}): {e}", fmt_c(tau)))?;
                let v = theta::jacobi_theta(p, 1e-14)
                    .map_err(|e| format!("theta({}): {e}", fmt_c(tau)))?;
                Ok(Row {
                    inputs: format!("tau={}", fmt_c(tau)),
                    re: v.value.re,
                    im: v.value.im,
                    err: v.tail_bound,
                    method: "theta-series".into(),
                })
            });
            let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
            Ok((rows, true))
        }
        Command::FeCheck { grid } => {
            let points = fe_grid(*grid);
            let rows = par_map(points, threads, |s| -> Result<Row, String> {
                let a = lfunc::completed_zeta(s).map_err(|e| e.to_string())?;
                let b = lfunc::completed_zeta(1.0 - s).map_err(|e| e.to_string())?;
                let resid = (a.value - b.value).norm();
                Ok(Row {
                    inputs: format!("s={}", fmt_c(s)),
                    re: resid,
                    im: 0.0,
                    err: a.err + b.err,
                    method: "theta-mellin".into(),
                })
            });
            let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
            let ok = rows.iter().all(|r| r.re <= tol);
            Ok((rows, ok))
        }
        Command::Zeros { t_max } => {
            let scan = lfunc::critical_line_zeros(*t_max).map_err(|e| e.to_string())?;
            let mut rows: Vec<Row> = scan
                .zeros
                .iter()
                .map(|&t| Row {
                    inputs: format!("t_max={t_max}"),
                    re: t,
                    im: 0.0,
                    err: 1e-9,
                    method: "theta-mellin".into(),
                })
                .collect();
            rows.push(Row {
                inputs: format!("t_max={t_max} max|Im Lambda|"),
                re: scan.max_im_lambda,
                im: 0.0,
                err: 0.0,
                method: "theta-mellin".into(),
            });
            let ok = scan.max_im_lambda <= 1e-10;
            Ok((rows, ok))
        }
        Command::Primes { action } => run_primes(action),
        Command::Special => {
            let mut rows = Vec::new();
            let junk = lfunc::riemann_zeta(Complex64::new(1.0, 0.0)).map_err(|e| e.to_string())?;
            rows.push(Row::from_eval("zeta(1) [junk value]", &junk));
            for k in 1..=5u32 {
                let v = lfunc::zeta_even_value(k).map_err(|e| e.to_string())?;
                rows.push(Row::from_eval(format!("zeta({})", 2 * k), &v));
            }
            for &(alpha, k) in &[(0.25, 1u32), (0.5, 1), (0.25, 2), (0.5, 3)] {
                let v = lfunc::hurwitz_neg_int(alpha, k).map_err(|e| e.to_string())?;
                rows.push(Row::plain(
                    format!("hurwitz alpha={alpha} s=-{k}"),
                    v,
                    "bernoulli-formula",
                ));
            }
            rows.push(Row::plain(
                "euler_gamma",
                zetakit::special::euler_gamma(),
                "euler-maclaurin",
            ));
            Ok((rows, true))
        }
    }
}

fn run_primes(action: &PrimesCmd) -> Result<(Vec<Row>, bool), String> {
    match action {
        PrimesCmd::Count { q, a, x } => {
            let sieve = zetakit::primes::sieve(*x).map_err(|e| e.to_string())?;
            let n = sieve.count_primes_mod(*x, *q, *a);
            Ok((
                vec![Row::plain(
                    format!("count q={q} a={a} x={x}"),
                    n as f64,
                    "sieve",
                )],
                true,
            ))
        }
        PrimesCmd::Witness { q, a, n } => {
            let p = zetakit::primes::infinitude_witness(*q, *a, *n).map_err(|e| e.to_string())?;
            Ok((
                vec![Row::plain(
                    format!("witness q={q} a={a} n={n}"),
                    p as f64,
                    "sieve",
                )],
                true,
            ))
        }
        PrimesCmd::Divergence { q, x } => {
            let sieve = zetakit::primes::sieve(*x).map_err(|e| e.to_string())?;
            let phi = euler_phi(*q) as f64;
            let target = (*x as f64).ln() / phi;
            let mut rows = Vec::new();
            let mut ok = true;
            for a in 1..=*q {
                if gcd(a, *q) != 1 {
                    continue;
                }
                let s = sieve.chebyshev_progression_partial(*q, a, *x);
                let drift = s - target;
                ok &= drift.abs() <= 4.0;
                rows.push(Row {
                    inputs: format!("divergence q={q} a={a} x={x}"),
                    re: s,
                    im: drift,
                    err: 0.0,
                    method: "sieve".into(),
                });
            }
            Ok((rows, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((rows, ok)) => {
            let result = match &cli.output {
                Some(path) => std::fs::File::create(path)
                    .map_err(|e| e.to_string())
                    .and_then(|mut f| write_rows(&mut f, &rows, cli.format).map_err(|e| e.to_string())),
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    write_rows(&mut lock, &rows, cli.format)
                        .and_then(|()| lock.flush())
                        .map_err(|e| e.to_string())
                }
            };
            if let Err(e) = result {
                eprintln!("zetakit: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("zetakit: {e}");
            ExitCode::from(1)
        }
    }
}
