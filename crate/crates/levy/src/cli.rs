//! The `levy` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use levy_core::combinatorics::{euler_zigzag_enumerate, euler_zigzag_table, ENUMERATION_CAP};
use levy_core::levy::{cross_validate, moment_result, sech_taylor, CrossValidateOptions, MomentMethod, MomentResult};
use levy_core::parse_scalar;
use levy_core::sim::{
    check_multiplicativity, levy_area_samples, theorem5_estimates, CharFnEstimate, MCEstimate, SimConfig,
};
use levy_core::tensor::TensorElement;
use num_traits::{Signed, ToPrimitive};

use crate::fixtures::parse_inline;
use crate::report::{Cell, Format, Report};
use crate::runner::{RayonRunner, StdClock};
use crate::verify::{self, Fault, Profile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Acceptance threshold for Monte Carlo rows.
pub const Z_LIMIT: f64 = 4.0;

#[derive(Debug, Parser)]
#[command(
    name = "levy",
    version,
    about = "Exact and simulated moments of Lévy's stochastic area"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler zigzag numbers A_0..=A_n.
    Euler {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Compare against exhaustive enumeration for n ≤ 10.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
    /// w_n and E[A^n] for n = 0..=n_max.
    Moments {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Interval length as an exact rational, e.g. `1/3`.
        #[arg(long, default_value = "1")]
        interval_length: String,
        #[arg(long, value_enum, default_value = "euler")]
        method: MethodArg,
    },
    /// Exact Taylor coefficients of sech.
    Sech {
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// Monte Carlo checks on simulated paths.
    Mc {
        #[command(subcommand)]
        which: McCommand,
    },
    /// Runs the named invariant suite.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        profile: Profile,
        #[arg(long, value_enum)]
        inject_fault: Vec<Fault>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum MethodArg {
    Direct,
    Digraph,
    Euler,
    All,
}

#[derive(Debug, Args)]
struct SimArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    b: f64,
    #[arg(long, default_value_t = 1000)]
    steps: usize,
    #[arg(long, default_value_t = 100_000)]
    paths: usize,
    #[arg(long, default_value_t = 20_240_601)]
    seed: u64,
}

impl SimArgs {
    fn config(&self) -> levy_core::Result<SimConfig> {
        SimConfig::new(self.a, self.b, self.steps, self.paths, self.seed)
    }

    fn record(&self, r: &mut Report) {
        r.param("a", self.a)
            .param("b", self.b)
            .param("steps", self.steps)
            .param("paths", self.paths)
            .param("seed", self.seed);
    }
}

#[derive(Debug, Subcommand)]
enum McCommand {
    /// E[A^n] against the exact moment.
    Moment {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// E[exp(izA)] against sech(z(b − a)/2).
    Charfn {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        z: f64,
    },
    /// Mean square of J(α)J(β) − J(αβ) at steps/4, steps/2 and steps.
    Multiplicativity {
        #[command(flatten)]
        sim: SimArgs,
        /// Element as `c:word;c:word`, e.g. `1:dX*dY;-1:dY*dX`.
        #[arg(long, default_value = "dX")]
        alpha: String,
        #[arg(long, default_value = "dX")]
        beta: String,
    },
    /// E[J(w)] = 0 for every word with a dX or dY.
    Theorem5 {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
    },
}

/// Why a command stopped early.
#[derive(Debug)]
enum Halt {
    Usage(String),
}

impl From<levy_core::Error> for Halt {
    fn from(e: levy_core::Error) -> Self {
        Halt::Usage(e.to_string())
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            for n in &report.notes {
                if cli.format != Format::Table {
                    let _ = writeln!(err, "note: {n}");
                }
            }
            if report.pass {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(Halt::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Report, Halt> {
    match cmd {
        Command::Euler {
            n_max,
            check,
            inject_fault,
        } => Ok(cmd_euler(*n_max, *check, *inject_fault)),
        Command::Moments {
            n_max,
            interval_length,
            method,
        } => cmd_moments(*n_max, interval_length, *method),
        Command::Sech { order } => cmd_sech(*order),
        Command::Mc { which } => cmd_mc(which),
        Command::Verify { profile, inject_fault } => Ok(cmd_verify(*profile, inject_fault)),
    }
}

fn cmd_euler(n_max: usize, check: bool, fault: Option<Fault>) -> Report {
    let mut table = euler_zigzag_table(n_max);
    if fault == Some(Fault::Euler) {
        *table.last_mut().expect("n_max + 1 entries") += 1;
    }
    let mut r = if check {
        Report::new("euler", &["n", "A_n", "enumerated"])
    } else {
        Report::new("euler", &["n", "A_n"])
    };
    r.param("n_max", n_max).param("check", check);
    for (n, a) in table.iter().enumerate() {
        let mut row = vec![Cell::Int(n as i64), Cell::exact(a)];
        if check {
            if n <= ENUMERATION_CAP {
                let e = euler_zigzag_enumerate(n).expect("within cap");
                r.pass &= &e == a;
                row.push(Cell::exact(e));
            } else {
                row.push(Cell::Empty);
            }
        }
        r.push(row);
    }
    if check && n_max > ENUMERATION_CAP {
        r.notes
            .push(format!("enumeration only checked for n ≤ {ENUMERATION_CAP}"));
    }
    r
}

fn ms(d: std::time::Duration) -> Cell {
    Cell::Float(d.as_secs_f64() * 1e3)
}

fn cmd_moments(n_max: usize, interval_length: &str, method: MethodArg) -> Result<Report, Halt> {
    let t = parse_scalar(interval_length)?;
    if !t.is_positive() {
        return Err(levy_core::Error::NonPositiveInterval.into());
    }
    let method_name = match method {
        MethodArg::Direct => "direct",
        MethodArg::Digraph => "digraph",
        MethodArg::Euler => "euler",
        MethodArg::All => "all",
    };
    if method == MethodArg::All {
        let clock = StdClock::start();
        let report = cross_validate(n_max, CrossValidateOptions::default(), &clock);
        let mut r = Report::new(
            "moments",
            &["n", "w_n", "moment", "euler_ms", "direct_ms", "digraph_ms"],
        );
        r.param("n_max", n_max)
            .param("interval_length", &t)
            .param("method", method_name);
        match report {
            Ok(report) => {
                for row in &report.rows {
                    let m = MomentResult::new(row.n, row.w.clone(), MomentMethod::Euler).moment(&t);
                    let time = |k: MomentMethod| {
                        row.timings
                            .iter()
                            .find(|(m, _)| *m == k)
                            .map(|(_, d)| ms(*d))
                            .unwrap_or(Cell::Empty)
                    };
                    r.push(vec![
                        Cell::Int(row.n as i64),
                        Cell::exact(&row.w),
                        Cell::exact(m),
                        time(MomentMethod::Euler),
                        time(MomentMethod::Direct),
                        time(MomentMethod::Digraph),
                    ]);
                }
                r.notes = report.notes();
            }
            Err(e) => {
                r.pass = false;
                r.notes.push(e.to_string());
            }
        }
        return Ok(r);
    }
    let m = match method {
        MethodArg::Direct => MomentMethod::Direct,
        MethodArg::Digraph => MomentMethod::Digraph,
        _ => MomentMethod::Euler,
    };
    let mut r = Report::new("moments", &["n", "w_n", "moment"]);
    r.param("n_max", n_max)
        .param("interval_length", &t)
        .param("method", method_name);
    for n in 0..=n_max {
        let res = moment_result(n, m)?;
        r.push(vec![
            Cell::Int(n as i64),
            Cell::exact(&res.w),
            Cell::exact(res.moment(&t)),
        ]);
    }
    Ok(r)
}

fn cmd_sech(order: usize) -> Result<Report, Halt> {
    let mut r = Report::new("sech", &["k", "c_k"]);
    r.param("order", order);
    match sech_taylor(order) {
        Ok(s) => {
            for (k, c) in s.coefficients.iter().enumerate() {
                r.push(vec![Cell::Int(k as i64), Cell::exact(c)]);
            }
        }
        Err(e) => {
            r.pass = false;
            r.notes.push(e.to_string());
        }
    }
    Ok(r)
}

const MC_COLUMNS: [&str; 5] = ["quantity", "estimate", "std_error", "target", "z_score"];

fn estimate_row(r: &mut Report, quantity: String, e: &MCEstimate, target: f64) {
    let z = e.z_score(target);
    r.pass &= z.abs() <= Z_LIMIT;
    r.push(vec![
        Cell::Text(quantity),
        Cell::Float(e.mean),
        Cell::Float(e.std_error),
        Cell::Float(target),
        Cell::Float(z),
    ]);
}

fn cmd_mc(which: &McCommand) -> Result<Report, Halt> {
    let mut r = Report::new("mc", &MC_COLUMNS);
    match which {
        McCommand::Moment { sim, n } => {
            let cfg = sim.config()?;
            r.param("test", "moment").param("n", n);
            sim.record(&mut r);
            let exact = moment_result(*n, MomentMethod::Euler)?;
            let target = exact.moment_unit_interval.to_f64().unwrap_or(f64::NAN) * cfg.length().powi(*n as i32);
            let xs: Vec<f64> = levy_area_samples(&cfg, &RayonRunner)?
                .into_iter()
                .map(|a| a.powi(*n as i32))
                .collect();
            let e = MCEstimate::from_samples(&xs)?;
            estimate_row(&mut r, format!("E[A^{n}]"), &e, target);
        }
        McCommand::Charfn { sim, z } => {
            let cfg = sim.config()?;
            r.param("test", "charfn").param("z", z);
            sim.record(&mut r);
            let areas = levy_area_samples(&cfg, &RayonRunner)?;
            let c = CharFnEstimate::from_area_samples(*z, &areas)?;
            estimate_row(
                &mut r,
                format!("Re E[exp({z}iA)]"),
                &c.re,
                1.0 / (0.5 * z * cfg.length()).cosh(),
            );
            estimate_row(&mut r, format!("Im E[exp({z}iA)]"), &c.im, 0.0);
        }
        McCommand::Multiplicativity { sim, alpha, beta } => {
            let cfg = sim.config()?;
            let a = parse_inline(alpha)?;
            let b = parse_inline(beta)?;
            r.param("test", "multiplicativity")
                .param("alpha", alpha)
                .param("beta", beta);
            sim.record(&mut r);
            multiplicativity_rows(&mut r, &a, &b, &cfg)?;
        }
        McCommand::Theorem5 { sim, max_rank } => {
            let cfg = sim.config()?;
            r.param("test", "theorem5").param("max_rank", max_rank);
            sim.record(&mut r);
            for (w, e) in theorem5_estimates(&cfg, *max_rank, &RayonRunner)? {
                estimate_row(&mut r, format!("E[J({w})]"), &e, 0.0);
            }
        }
    }
    Ok(r)
}

/// The residual is path-wise, so there is no target to hit; the check is
/// that its mean square falls as the grid is refined.
fn multiplicativity_rows(r: &mut Report, a: &TensorElement, b: &TensorElement, cfg: &SimConfig) -> Result<(), Halt> {
    let grids: Vec<usize> = [cfg.steps / 4, cfg.steps / 2, cfg.steps]
        .into_iter()
        .filter(|&s| s > 0)
        .collect();
    let mut previous: Option<f64> = None;
    for steps in grids {
        let c = SimConfig { steps, ..*cfg };
        let rep = check_multiplicativity(a, b, &c, &RayonRunner)?;
        let m = rep.mean_square.mean;
        if let Some(p) = previous {
            // an exact identity stays at zero
            r.pass &= m < p || (m == 0.0 && p == 0.0);
        }
        previous = Some(m);
        r.push(vec![
            Cell::Text(format!("E[residual^2] steps={steps}")),
            Cell::Float(m),
            Cell::Float(rep.mean_square.std_error),
            Cell::Empty,
            Cell::Empty,
        ]);
    }
    Ok(())
}

fn cmd_verify(profile: Profile, faults: &[Fault]) -> Report {
    let mut r = Report::new("verify", &["invariant", "status", "ms", "detail"]);
    r.param("profile", format!("{profile:?}").to_lowercase());
    if !faults.is_empty() {
        let names: Vec<String> = faults.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
        r.param("inject_fault", names.join(","));
    }
    for o in verify::run(profile, faults) {
        r.pass &= o.passed;
        r.push(vec![
            Cell::text(o.name),
            Cell::text(if o.passed { "pass" } else { "FAIL" }),
            ms(o.elapsed),
            Cell::Text(o.detail),
        ]);
    }
    r
}
