mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{InputError, Overrides, RunConfig};
use primezeta::estimates::BoundVariant;
use primezeta::Mode;

/// Closed-form primes, truncated zeta approximants and action-based zero location.
#[derive(Debug, Parser)]
#[command(name = "primezeta", version, propagate_version = true)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Flat `key = value` configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory receiving CSV and SVG files
    #[arg(long, global = true, env = "PRIMEZETA_OUTPUT_DIR")]
    output_dir: Option<PathBuf>,
    /// Stem of the main output file, overriding the subcommand's default
    #[arg(long, global = true)]
    name: Option<String>,
    /// Worker threads for grid evaluations
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Also render an SVG next to each CSV
    #[arg(long, global = true)]
    plot: bool,
    /// Upper index of the truncated series
    #[arg(long, global = true)]
    n_max: Option<u64>,
    #[arg(long, global = true)]
    sigma_step: Option<f64>,
    #[arg(long, global = true)]
    tau_step: Option<f64>,
    #[arg(long, global = true)]
    zoom_step: Option<f64>,
    #[arg(long, global = true)]
    quad_tol: Option<f64>,
    /// `literal` or `optimized` evaluation of the prime indicator
    #[arg(long, global = true)]
    mode: Option<Mode>,
    /// `sqrt-x-log` or `sqrt-of-x-log`
    #[arg(long, global = true)]
    bound_variant: Option<BoundVariant>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

impl GlobalArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            n_max: self.n_max,
            sigma_step: self.sigma_step,
            tau_step: self.tau_step,
            zoom_step: self.zoom_step,
            quad_tol: self.quad_tol,
            mode: self.mode,
            bound_variant: self.bound_variant,
            seed: self.seed,
            output_dir: self.output_dir.clone(),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prime indicator, generator and counter
    #[command(subcommand)]
    Primes(PrimesCmd),
    /// Counting function against Li and x/ln x, or a π-bound check
    Estimates(EstimatesArgs),
    /// Truncated Euler product for real σ > 1
    Euler(EulerArgs),
    /// Truncated eta-series approximants of ζ
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Action functional scans and zero location
    #[command(subcommand)]
    Action(ActionCmd),
    /// F = [E(1-σ) - ½]·A(σ) along τ or σ
    FScan(FScanArgs),
    /// Chebyshev ψ and its sharp bound
    #[command(subcommand)]
    Chebyshev(ChebyshevCmd),
    /// Random odd integers classified by the generator
    Table(TableArgs),
}

#[derive(Debug, Subcommand)]
enum PrimesCmd {
    /// Indicator and generator at one argument
    Check {
        #[arg(long)]
        u: f64,
    },
    /// Indicator, generator and its differences over a range
    List {
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 101.0)]
        to: f64,
        #[arg(long, default_value_t = 1.0)]
        step: f64,
    },
    /// Number of primes in [from, to]
    Count {
        #[arg(long, default_value_t = 2)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PiBound {
    SchoenfeldPi,
    Trudgian,
}

#[derive(Debug, Args)]
struct EstimatesArgs {
    #[arg(long, default_value_t = 2.0)]
    from: f64,
    #[arg(long, default_value_t = 102.0)]
    to: f64,
    #[arg(long, default_value_t = 1.0)]
    step: f64,
    /// Check a sharp bound instead of tabulating the estimates
    #[arg(long, value_enum)]
    bound: Option<PiBound>,
}

#[derive(Debug, Args)]
struct EulerArgs {
    #[arg(long, default_value_t = 1.1)]
    sigma_from: f64,
    #[arg(long, default_value_t = 6.0)]
    sigma_to: f64,
    #[arg(long, default_value_t = 0.1)]
    step: f64,
    /// Number of primes in the product
    #[arg(long, default_value_t = 100)]
    h: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Ex,
    App,
    P,
    C,
}

#[derive(Debug, Subcommand)]
enum ZetaCmd {
    /// One evaluation
    Eval {
        #[arg(long)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        tau: f64,
        #[arg(long, value_enum, default_value_t = Variant::Ex)]
        which: Variant,
    },
    /// Fixed σ, τ over a range
    Scan {
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        #[arg(long, default_value_t = -30.0, allow_hyphen_values = true)]
        tau_from: f64,
        #[arg(long, default_value_t = 30.0, allow_hyphen_values = true)]
        tau_to: f64,
        #[arg(long, value_enum, default_value_t = Variant::Ex)]
        which: Variant,
    },
}

#[derive(Debug, Args)]
struct WindowArgs {
    #[arg(long, default_value_t = 32.9)]
    tau_center: f64,
    /// Full width of the τ window
    #[arg(long, default_value_t = 3.0)]
    window: f64,
    #[arg(long, default_value_t = 0.1)]
    sigma_from: f64,
    #[arg(long, default_value_t = 0.9)]
    sigma_to: f64,
}

#[derive(Debug, Subcommand)]
enum ActionCmd {
    /// Action on a (σ, τ) grid, keyed by ω and η
    Scan {
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Locate a zero from the ω and η minima
    Roots {
        #[command(flatten)]
        window: WindowArgs,
        /// Half width of the refinement window on each axis
        #[arg(long, default_value_t = 0.5)]
        zoom_window: f64,
    },
    /// Action against σ for a list of τ
    Parametric {
        #[arg(long, value_delimiter = ',', default_values_t = [14.13, 21.02, 25.01, 30.43, 32.94])]
        taus: Vec<f64>,
        #[arg(long, default_value_t = 0.1)]
        sigma_from: f64,
        #[arg(long, default_value_t = 0.9)]
        sigma_to: f64,
        /// σ spacing of the tabulated curves
        #[arg(long, default_value_t = 0.01)]
        curve_step: f64,
    },
    /// ln M, ln A and ln(E - ½) along τ, with fitted slopes
    Loglog {
        #[arg(long, value_delimiter = ',', default_values_t = [0.5])]
        sigmas: Vec<f64>,
        #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
        tau_from: f64,
        #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
        tau_to: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FAxis {
    Tau,
    Sigma,
}

#[derive(Debug, Args)]
struct FScanArgs {
    #[arg(long, value_enum, default_value_t = FAxis::Tau)]
    axis: FAxis,
    /// Value of the other coordinate (σ for a τ-scan, τ for a σ-scan)
    #[arg(long, allow_hyphen_values = true)]
    fixed: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    from: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    to: Option<f64>,
    /// Defaults to the tau or sigma step of the run configuration
    #[arg(long)]
    step: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum ChebyshevCmd {
    /// Exact and table-free ψ over a range
    Eval {
        #[arg(long, default_value_t = 2.0)]
        from: f64,
        #[arg(long, default_value_t = 200.0)]
        to: f64,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
    },
    /// |ψ(x) - x| against √x (ln x)² / 8π
    Bound {
        #[arg(long, default_value_t = 2.0)]
        from: f64,
        #[arg(long, default_value_t = 400.0)]
        to: f64,
        #[arg(long, default_value_t = 1.0)]
        step: f64,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 4)]
    sets: usize,
}

/// Settings shared by every handler.
pub struct Ctx {
    pub cfg: RunConfig,
    pub plot: bool,
    pub name: Option<String>,
}

impl Ctx {
    pub fn stem<'a>(&'a self, default: &'a str) -> &'a str {
        self.name.as_deref().unwrap_or(default)
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let cfg = RunConfig::resolve(cli.global.config.as_deref(), &cli.global.overrides())?;
    if let Some(n) = cli.global.threads {
        if n == 0 {
            return Err(config::input_error("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let ctx = Ctx {
        cfg,
        plot: cli.global.plot,
        name: cli.global.name,
    };
    use commands as c;
    match cli.command {
        Command::Primes(PrimesCmd::Check { u }) => c::primes_check(&ctx, u),
        Command::Primes(PrimesCmd::List { from, to, step }) => c::primes_list(&ctx, from, to, step),
        Command::Primes(PrimesCmd::Count { from, to }) => c::primes_count(&ctx, from, to),
        Command::Estimates(a) => c::estimates(&ctx, a.from, a.to, a.step, a.bound),
        Command::Euler(a) => c::euler(&ctx, a.sigma_from, a.sigma_to, a.step, a.h),
        Command::Zeta(ZetaCmd::Eval { sigma, tau, which }) => c::zeta_eval(&ctx, sigma, tau, which),
        Command::Zeta(ZetaCmd::Scan {
            sigma,
            tau_from,
            tau_to,
            which,
        }) => c::zeta_scan(&ctx, sigma, tau_from, tau_to, which),
        Command::Action(ActionCmd::Scan { window }) => c::action_scan(&ctx, &window),
        Command::Action(ActionCmd::Roots { window, zoom_window }) => {
            c::action_roots(&ctx, &window, zoom_window)
        }
        Command::Action(ActionCmd::Parametric {
            taus,
            sigma_from,
            sigma_to,
            curve_step,
        }) => c::action_parametric(&ctx, &taus, sigma_from, sigma_to, curve_step),
        Command::Action(ActionCmd::Loglog {
            sigmas,
            tau_from,
            tau_to,
        }) => c::action_loglog(&ctx, &sigmas, tau_from, tau_to),
        Command::FScan(a) => c::f_scan(&ctx, a.axis, a.fixed, a.from, a.to, a.step),
        Command::Chebyshev(ChebyshevCmd::Eval { from, to, step }) => {
            c::chebyshev_eval(&ctx, from, to, step)
        }
        Command::Chebyshev(ChebyshevCmd::Bound { from, to, step }) => {
            c::chebyshev_bound(&ctx, from, to, step)
        }
        Command::Table(a) => c::table(&ctx, a.sets),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<primezeta::Error>() {
        if e.is_numerical_guard() {
            3
        } else {
            2
        }
    } else if err.downcast_ref::<InputError>().is_some() {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
