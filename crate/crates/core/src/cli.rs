//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when the requested
//! matrix is infeasible. Errors are reported on stderr as `error[Name]: ...`.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::benchmark::{rows_to_csv, run_benchmark, BenchmarkSpec};
use crate::error::{Error, Result};
use crate::gauss;
use crate::gim::{self, IntegrationMatrix};
use crate::optimal::{self, FallbackAlpha, NearBoundary, OptimalConfig};
use crate::poly::GegenbauerParam;
use crate::reference::TestFunction;
use crate::solvers::{solve_example1, solve_example2};

#[derive(Parser, Debug)]
#[command(name = "bgim", version, about = "Barycentric Gegenbauer integration matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variant {
    Plain,
    Guarded,
    Bumped,
    Basis,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IntervalArg {
    /// [-1, 1]
    Symmetric,
    /// [0, 1]
    Unit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleArg {
    Gg,
    Lg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FallbackArg {
    Chebyshev,
    Legendre,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a square integration matrix on GG nodes.
    Gim {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "plain")]
        variant: Variant,
        #[arg(long, default_value_t = 1)]
        q: u32,
        #[arg(long, value_enum, default_value = "symmetric")]
        interval: IntervalArg,
        /// Collision tolerance for the guarded and bumped variants.
        #[arg(long, default_value_t = f64::EPSILON)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-node quadrature errors of barycentric and basis GIMs.
    Quadbench {
        /// f1, f2, f3 or expr:<expression in x>
        #[arg(long)]
        function: String,
        /// Comma list or start:end / start:step:end range.
        #[arg(long)]
        n: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report construction time on stderr.
        #[arg(long)]
        time: bool,
    },
    /// Scan the GIM sufficient condition over (n, alpha) grids.
    Feasibility {
        #[arg(long, default_value = "1:100")]
        n: String,
        #[arg(long, default_value = "-0.4:0.1:2", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = f64::EPSILON)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve one of the collocation examples.
    Example {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a Gauss rule.
    Rule {
        #[arg(long, value_enum, default_value = "gg")]
        kind: RuleArg,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an optimal GIM on the GG nodes of (n, alpha).
    Optimal {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        m_max: usize,
        #[arg(long, default_value_t = 2.0)]
        r: f64,
        #[arg(long, value_enum, default_value = "chebyshev")]
        alpha_a: FallbackArg,
        #[arg(long, default_value_t = 1)]
        q: u32,
        #[arg(long, value_enum, default_value = "symmetric")]
        interval: IntervalArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `a,b,c`, `start:end` (unit step) or `start:step:end`.
pub fn parse_usize_grid(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidInput(format!("malformed integer grid {text:?}"));
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let parts: Vec<&str> = text.split(':').collect();
    let grid = match parts.as_slice() {
        [single] => single.split(',').map(parse).collect::<Result<Vec<_>>>()?,
        [a, b] => (parse(a)?..=parse(b)?).collect(),
        [a, s, b] => {
            let step = parse(s)?;
            if step == 0 {
                return Err(bad());
            }
            (parse(a)?..=parse(b)?).step_by(step).collect()
        }
        _ => return Err(bad()),
    };
    if grid.is_empty() {
        return Err(bad());
    }
    Ok(grid)
}

/// Parses `a,b,c` or `start:step:end`; range values are `start + i·step`
/// rounded to 10 decimals.
pub fn parse_f64_grid(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::InvalidInput(format!("malformed real grid {text:?}"));
    let parse = |s: &str| s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    let parts: Vec<&str> = text.split(':').collect();
    let grid = match parts.as_slice() {
        [single] => single.split(',').map(parse).collect::<Result<Vec<_>>>()?,
        [a, s, b] => {
            let (start, step, end) = (parse(a)?, parse(s)?, parse(b)?);
            if step <= 0.0 || end < start {
                return Err(bad());
            }
            let count = ((end - start) / step + 1e-9).floor() as usize + 1;
            (0..count)
                .map(|i| ((start + i as f64 * step) * 1e10).round() / 1e10)
                .collect()
        }
        _ => return Err(bad()),
    };
    if grid.is_empty() {
        return Err(bad());
    }
    Ok(grid)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::InvalidInput(format!("cannot write to stdout: {e}")))
        }
    }
}

fn finish(m: IntegrationMatrix, q: u32, interval: IntervalArg) -> Result<IntegrationMatrix> {
    let m = m.qth_order(q)?;
    Ok(match interval {
        IntervalArg::Symmetric => m,
        IntervalArg::Unit => m.to_unit_interval(),
    })
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Gim { n, alpha, variant, q, interval, epsilon, out } => {
            let param = GegenbauerParam::new(alpha)?;
            let m = match variant {
                Variant::Plain => gim::build_gim_gg(n, param)?,
                Variant::Guarded => gim::build_gim_gg_guarded(n, param, epsilon)?,
                Variant::Bumped => gim::build_gim_gg_bumped(n, param, epsilon)?,
                Variant::Basis => gim::build_basis_gim(n, param)?,
            };
            emit(&out, &finish(m, q, interval)?.to_csv())
        }
        Command::Quadbench { function, n, alpha, out, time } => {
            let spec = BenchmarkSpec {
                integrand: TestFunction::parse(&function)?,
                n_grid: parse_usize_grid(&n)?,
                alpha_grid: parse_f64_grid(&alpha)?,
            };
            if time {
                report_timing(&spec)?;
            }
            emit(&out, &rows_to_csv(&run_benchmark(&spec)?))
        }
        Command::Feasibility { n, alpha, epsilon, out } => {
            let ns = parse_usize_grid(&n)?;
            let alphas = parse_f64_grid(&alpha)?;
            let mut text = String::from("n,alpha,feasible\n");
            for &n in &ns {
                for &a in &alphas {
                    let report = gim::check_gg_condition(n, GegenbauerParam::new(a)?, epsilon)?;
                    text.push_str(&format!("{n},{a},{}\n", report.feasible));
                }
            }
            emit(&out, &text)
        }
        Command::Example { id, n, m, alpha, out } => {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| Error::InvalidInput(format!("example {id} needs --{name}")))
            };
            let param = GegenbauerParam::new(
                alpha.ok_or_else(|| Error::InvalidInput(format!("example {id} needs --alpha")))?,
            )?;
            let solution = match id {
                1 => solve_example1(need(n, "n")?, param, &OptimalConfig::new(m.unwrap_or(14)))?,
                2 => solve_example2(need(n, "n")?, param)?,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "example {other} is out of scope; available examples are 1 and 2"
                    )))
                }
            };
            let kappa = solution.kappa2.map_or("NA".to_string(), |k| format!("{k:.4}"));
            println!(
                "example {id}: n = {}, alpha = {}, MAE = {:.4e}, cd = {:.3}, kappa2 = {kappa}",
                solution.n, solution.alpha, solution.mae, solution.cd
            );
            if out.is_some() {
                emit(&out, &solution.to_csv())?;
            }
            Ok(())
        }
        Command::Rule { kind, n, alpha, out } => {
            let rule = match kind {
                RuleArg::Gg => gauss::gg_rule(n, GegenbauerParam::new(alpha)?)?,
                RuleArg::Lg => gauss::lg_rule(n)?,
            };
            emit(&out, &rule.to_csv())
        }
        Command::Optimal { n, alpha, m, m_max, r, alpha_a, q, interval, out } => {
            let rule = gauss::gg_rule(n, GegenbauerParam::new(alpha)?)?;
            let config = OptimalConfig {
                m_max,
                r,
                alpha_a: match alpha_a {
                    FallbackArg::Chebyshev => FallbackAlpha::Chebyshev,
                    FallbackArg::Legendre => FallbackAlpha::Legendre,
                },
                alpha_b: NearBoundary::Fallback,
                ..OptimalConfig::new(m)
            };
            let pm = if m % 2 == 0 {
                optimal::build_optimal_gim_symmetric(rule.nodes(), &config)?
            } else {
                optimal::build_optimal_gim(rule.nodes(), &config)?
            }
            .qth_order(q)?;
            let pm = match interval {
                IntervalArg::Symmetric => pm,
                IntervalArg::Unit => pm.to_unit_interval(),
            };
            emit(&out, &pm.to_csv())
        }
    }
}

fn report_timing(spec: &BenchmarkSpec) -> Result<()> {
    for &n in &spec.n_grid {
        for &a in &spec.alpha_grid {
            let param = GegenbauerParam::new(a)?;
            let t0 = Instant::now();
            let bary = gim::build_gim_gg(n, param);
            let t_bary = t0.elapsed();
            let t1 = Instant::now();
            gim::build_basis_gim(n, param)?;
            let t_basis = t1.elapsed();
            let bary_text = match bary {
                Ok(_) => format!("{:.3e}", t_bary.as_secs_f64()),
                Err(_) => "infeasible".to_string(),
            };
            eprintln!(
                "time n={n} alpha={a}: barycentric {bary_text} s, basis {:.3e} s",
                t_basis.as_secs_f64()
            );
        }
    }
    Ok(())
}

/// Runs the front end on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            match e {
                Error::Infeasible(_) => 2,
                _ => 1,
            }
        }
    }
}
