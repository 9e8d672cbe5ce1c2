//! Command-line driver for the asymptotic SVM predictions.
//!
//! Every command writes one CSV table. The table starts with `#` comment
//! lines holding the tool version and the fully resolved arguments, so the
//! file can be regenerated by passing those arguments back to the binary.

pub mod plot;
pub mod table;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use svm_asymptotics::empirical::experiment::run_monte_carlo;
use svm_asymptotics::figures::{self, Figure, Regime, Sweep, BOUNDARY};
use svm_asymptotics::hard_margin::{predict_hard_margin, separability_threshold};
use svm_asymptotics::soft_margin::solve_soft_margin_saddle;
use svm_asymptotics::{Error, ModelParams};
use table::{fmt_opt, Row, Simulation, Table, Theory};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Relative tolerance against stored theory coordinates.
pub const THEORY_REL_TOL: f64 = 0.01;
/// Absolute slack covering the six-decimal rounding of stored coordinates.
pub const THEORY_ABS_TOL: f64 = 1e-6;
/// Replicates behind each stored simulation marker.
pub const STORED_REPS: f64 = 100.0;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("solver did not converge: {0}")]
    NoConvergence(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::NoConvergence(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::DegenerateSplit { .. } => CliError::Config(e.to_string()),
            Error::Io(m) => CliError::Io(m),
            _ => CliError::NoConvergence(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "svm-asym", version, about = "Asymptotic predictions and simulations for linear SVM on Gaussian mixtures")]
pub struct Cli {
    /// Write the CSV here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write a gnuplot script that plots the CSV.
    #[arg(long, global = true, requires = "out")]
    pub plot: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical sampling ratio δ* as a function of μ/σ.
    PhaseBoundary(BoundaryArgs),
    /// Hard-margin limits (ρ*, q₀*, η*, ε*).
    TheoryHard(ModelArgs),
    /// Soft-margin limits (ρ*, q₀*, η*, ε*).
    TheorySoft(SoftArgs),
    /// Monte Carlo moments of cos∠(ŵ, μ), ‖ŵ‖ and the exact error.
    Simulate(SimArgs),
    /// Theory and simulation on the grid of a standard figure, compared with
    /// its stored coordinates.
    ReproduceFigure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVar {
    Mu,
    Delta,
    Tau,
}

impl SweepVar {
    fn name(self) -> &'static str {
        match self {
            SweepVar::Mu => "mu",
            SweepVar::Delta => "delta",
            SweepVar::Tau => "tau",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BoundaryArgs {
    /// Values of μ/σ; defaults to 0.1, 0.2, …, 3.0.
    #[arg(long, value_delimiter = ',')]
    pub grid: Vec<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    #[arg(long, default_value_t = 0.5)]
    pub pi1: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    /// Sampling ratio n/p.
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    /// Proportion of the class centred at +μ.
    #[arg(long, default_value_t = 0.5)]
    pub pi1: f64,
    /// Variable swept over `--grid`; a single point when absent.
    #[arg(long, value_enum, requires = "grid")]
    pub sweep: Option<SweepVar>,
    /// Strictly increasing, comma separated.
    #[arg(long, value_delimiter = ',', requires = "sweep")]
    pub grid: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SoftArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Penalty τ of the soft-margin program (box bound τ/p).
    #[arg(long)]
    pub tau: f64,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("regime").required(true).args(["hard", "tau"])))]
pub struct SimArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Hard-margin SVM.
    #[arg(long)]
    pub hard: bool,
    /// Soft-margin SVM with penalty τ.
    #[arg(long)]
    pub tau: Option<f64>,
    /// Dimension.
    #[arg(long, default_value_t = 200)]
    pub p: usize,
    #[arg(long, default_value_t = 100)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    /// Figure number, 1 to 6.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=6))]
    pub number: u8,
    /// Reduced profile: p = 60, 20 replicates, 4-standard-error band.
    #[arg(long)]
    pub ci: bool,
    /// Skip the simulation columns.
    #[arg(long)]
    pub theory_only: bool,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub reps: Option<usize>,
    /// Width of the simulation band in standard errors.
    #[arg(long)]
    pub band: Option<f64>,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

/// Runs one parsed command, writing the CSV and the optional plot script.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let table = build_table(&cli.command)?;
    let csv = table.to_csv();
    match &cli.out {
        Some(path) => fs::write(path, &csv).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(csv.as_bytes())?;
            stdout.flush()?;
        }
    }
    if let (Some(script), Some(out)) = (&cli.plot, &cli.out) {
        let text = plot::gnuplot_script(&table, out);
        fs::write(script, text).map_err(|e| CliError::Io(format!("{}: {e}", script.display())))?;
    }
    Ok(())
}

/// Computes the table of a command without writing it.
pub fn build_table(command: &Command) -> Result<Table, CliError> {
    match command {
        Command::PhaseBoundary(a) => phase_boundary(a),
        Command::TheoryHard(a) => theory(a, None),
        Command::TheorySoft(a) => theory(&a.model, Some(a.tau)),
        Command::Simulate(a) => simulate(a),
        Command::ReproduceFigure(a) => reproduce_figure(a),
    }
}

fn check_grid(grid: &[f64]) -> Result<(), CliError> {
    if grid.is_empty() {
        return Err(CliError::Config("grid is empty".into()));
    }
    if grid.iter().any(|x| !x.is_finite()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Config("grid must be finite and strictly increasing".into()));
    }
    Ok(())
}

fn join(grid: &[f64]) -> String {
    grid.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// One resolved point of a sweep.
struct Point {
    value: f64,
    params: ModelParams,
    tau: Option<f64>,
}

fn points(m: &ModelArgs, tau: Option<f64>) -> Result<(&'static str, Vec<Point>), CliError> {
    let (var, grid) = match m.sweep {
        Some(v) => (v, m.grid.clone()),
        None => (SweepVar::Mu, vec![m.mu]),
    };
    check_grid(&grid)?;
    if var == SweepVar::Tau && tau.is_none() {
        return Err(CliError::Config("tau can only be swept for the soft margin".into()));
    }
    let pts = grid
        .iter()
        .map(|&x| {
            let (mu, delta, t) = match var {
                SweepVar::Mu => (x, m.delta, tau),
                SweepVar::Delta => (m.mu, x, tau),
                SweepVar::Tau => (m.mu, m.delta, Some(x)),
            };
            if let Some(t) = t {
                if !(t > 0.0 && t.is_finite()) {
                    return Err(CliError::Config(format!("tau must be positive, got {t}")));
                }
            }
            let params = ModelParams::with_pi1(mu, m.sigma, delta, m.pi1)?;
            Ok(Point { value: x, params, tau: t })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok((var.name(), pts))
}

fn model_args_line(m: &ModelArgs) -> String {
    let mut s = format!("--mu {} --sigma {} --delta {} --pi1 {}", m.mu, m.sigma, m.delta, m.pi1);
    if let Some(v) = m.sweep {
        s.push_str(&format!(" --sweep {} --grid {}", v.name(), join(&m.grid)));
    }
    s
}

fn theory_row(pt: &Point) -> Result<Theory, CliError> {
    match pt.tau {
        None => {
            let pred = predict_hard_margin(&pt.params)?;
            Ok(match pred.limits {
                Some(l) => Theory::Values {
                    rho: l.rho_star,
                    q0: l.q0_star,
                    eta: l.eta_star,
                    err: l.err_total,
                },
                None => Theory::NotSeparable,
            })
        }
        Some(t) => {
            let s = solve_soft_margin_saddle(t, &pt.params)?;
            Ok(Theory::Values {
                rho: s.rho_star,
                q0: s.q0_star,
                eta: s.eta_star,
                err: s.err_total,
            })
        }
    }
}

fn simulation_row(pt: &Point, p: usize, reps: usize, seed: u64) -> Result<Simulation, CliError> {
    match run_monte_carlo(&pt.params, pt.tau, p, reps, seed) {
        Ok(s) => Ok(Simulation::Moments(s)),
        Err(Error::AllInfeasible(n)) => Ok(Simulation::AllInfeasible(n)),
        Err(e) => Err(e.into()),
    }
}

fn phase_boundary(a: &BoundaryArgs) -> Result<Table, CliError> {
    let grid = if a.grid.is_empty() {
        (1..=30).map(|k| k as f64 / 10.0).collect()
    } else {
        a.grid.clone()
    };
    check_grid(&grid)?;
    let args = format!("phase-boundary --grid {} --sigma {} --pi1 {}", join(&grid), a.sigma, a.pi1);
    let mut table = Table::new(&args, None, &["mu_over_sigma", "delta_critical"]);
    for x in grid {
        let params = ModelParams::with_pi1(x * a.sigma, a.sigma, 1.0, a.pi1)?;
        let crit = separability_threshold(&params)?;
        table.push_raw(vec![x.to_string(), crit.to_string()]);
    }
    Ok(table)
}

fn theory(m: &ModelArgs, tau: Option<f64>) -> Result<Table, CliError> {
    let (var, pts) = points(m, tau)?;
    let args = match tau {
        None => format!("theory-hard {}", model_args_line(m)),
        Some(t) => format!("theory-soft {} --tau {t}", model_args_line(m)),
    };
    let mut table = Table::with_schema(&args, None, &[]);
    for pt in &pts {
        table.push(Row {
            sweep_var: var,
            value: pt.value,
            theory: Some(theory_row(pt)?),
            simulation: None,
            extra: Vec::new(),
        });
    }
    Ok(table)
}

fn simulate(a: &SimArgs) -> Result<Table, CliError> {
    if a.p < 2 {
        return Err(CliError::Config(format!("p must be at least 2, got {}", a.p)));
    }
    if a.reps < 2 {
        return Err(CliError::Config(format!("reps must be at least 2, got {}", a.reps)));
    }
    let (var, pts) = points(&a.model, a.tau)?;
    let regime = match a.tau {
        Some(t) => format!("--tau {t}"),
        None => "--hard".to_string(),
    };
    let args = format!(
        "simulate {} {regime} --p {} --reps {} --seed {}",
        model_args_line(&a.model),
        a.p,
        a.reps,
        a.seed
    );
    let mut table = Table::with_schema(&args, Some(a.seed), &[]);
    for pt in &pts {
        table.push(Row {
            sweep_var: var,
            value: pt.value,
            theory: None,
            simulation: Some(simulation_row(pt, a.p, a.reps, a.seed)?),
            extra: Vec::new(),
        });
    }
    Ok(table)
}

fn reproduce_figure(a: &FigureArgs) -> Result<Table, CliError> {
    if a.number == 1 {
        return figure_one();
    }
    let fig = figures::figure(a.number).ok_or_else(|| CliError::Config(format!("no figure {}", a.number)))?;
    let (p, reps, band) = if a.ci { (60, 20, 4.0) } else { (200, 100, 3.0) };
    let p = a.p.unwrap_or(p);
    let reps = a.reps.unwrap_or(reps);
    let band = a.band.unwrap_or(band);
    if p < 2 || reps < 2 {
        return Err(CliError::Config("p and reps must be at least 2".into()));
    }
    if !(band > 0.0) {
        return Err(CliError::Config(format!("band must be positive, got {band}")));
    }
    let mut args = format!("reproduce-figure {} --p {p} --reps {reps} --band {band} --seed {}", a.number, a.seed);
    if a.theory_only {
        args.push_str(" --theory-only");
    }
    let extra_cols = [
        "paper_rho_th",
        "paper_q0_th",
        "paper_err_th",
        "paper_rho_mean",
        "paper_rho_std",
        "paper_norm_mean",
        "paper_norm_std",
        "paper_err_mean",
        "paper_err_std",
        "pass",
    ];
    let seed = if a.theory_only { None } else { Some(a.seed) };
    let mut table = Table::with_schema(&args, seed, &extra_cols);
    let simulated = fig.simulated_grid();
    for x in fig.theory_grid() {
        let pt = figure_point(fig, x)?;
        let theory = theory_row(&pt)?;
        let has_marker = simulated.iter().any(|s| (s - x).abs() <= 1e-12);
        let simulation = if has_marker && !a.theory_only {
            Some(simulation_row(&pt, p, reps, a.seed)?)
        } else {
            None
        };
        let verdict = compare_with_stored(fig, x, &theory, simulation.as_ref(), band);
        let mut extra = Vec::new();
        for panel in [fig.cos, fig.norm, fig.err] {
            extra.push(fmt_opt(panel.theory_at(x)));
        }
        for panel in [fig.cos, fig.norm, fig.err] {
            let m = panel.marker_at(x);
            extra.push(fmt_opt(m.map(|m| m.mean)));
            extra.push(fmt_opt(m.map(|m| m.std)));
        }
        extra.push(
            match verdict {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "",
            }
            .to_string(),
        );
        table.push(Row {
            sweep_var: fig.sweep.name(),
            value: x,
            theory: Some(theory),
            simulation,
            extra,
        });
    }
    Ok(table)
}

fn figure_point(fig: &Figure, x: f64) -> Result<Point, CliError> {
    let (mu, delta) = match fig.sweep {
        Sweep::Mu => (x, fig.delta),
        Sweep::Delta => (fig.mu, x),
        Sweep::Tau => (fig.mu, fig.delta),
    };
    let tau = match (fig.regime, fig.sweep) {
        (Regime::Hard, _) => None,
        (Regime::Soft { .. }, Sweep::Tau) => Some(x),
        (Regime::Soft { tau }, _) => Some(tau),
    };
    Ok(Point {
        value: x,
        params: ModelParams::balanced(mu, 1.0, delta)?,
        tau,
    })
}

/// Whether a row agrees with the stored coordinates: theory within the
/// relative tolerance and simulated means within `band` combined standard
/// errors of the stored means. `None` when nothing is stored at `x`.
pub fn compare_with_stored(fig: &Figure, x: f64, theory: &Theory, sim: Option<&Simulation>, band: f64) -> Option<bool> {
    let ours_th = match theory {
        Theory::Values { rho, q0, err, .. } => Some([*rho, *q0, *err]),
        Theory::NotSeparable => None,
    };
    let mut compared = false;
    let mut ok = true;
    for (k, panel) in [fig.cos, fig.norm, fig.err].iter().enumerate() {
        if let Some(want) = panel.theory_at(x) {
            compared = true;
            ok &= match ours_th {
                Some(v) => (v[k] - want).abs() <= THEORY_REL_TOL * want.abs() + THEORY_ABS_TOL,
                None => false,
            };
        }
        if let (Some(m), Some(s)) = (panel.marker_at(x), sim) {
            compared = true;
            ok &= match s {
                Simulation::Moments(s) => {
                    let (mean, std) = [(s.cos_mean, s.cos_std), (s.norm_mean, s.norm_std), (s.err_mean, s.err_std)][k];
                    let se = (s.standard_error(std).powi(2) + m.std.powi(2) / STORED_REPS).sqrt();
                    (mean - m.mean).abs() <= band * se
                }
                Simulation::AllInfeasible(_) => false,
            };
        }
    }
    compared.then_some(ok)
}

fn figure_one() -> Result<Table, CliError> {
    let mut table = Table::new(
        "reproduce-figure 1",
        None,
        &["mu_over_sigma", "delta_critical", "paper_delta_critical", "pass"],
    );
    for &(x, want) in BOUNDARY {
        let crit = separability_threshold(&ModelParams::balanced(x, 1.0, 1.0)?)?;
        let pass = (crit - want).abs() <= THEORY_REL_TOL * want;
        table.push_raw(vec![
            x.to_string(),
            crit.to_string(),
            want.to_string(),
            if pass { "pass" } else { "fail" }.to_string(),
        ]);
    }
    Ok(table)
}
