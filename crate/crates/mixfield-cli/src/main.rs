//! `mixfield`: evaluate far-beam leakage into a near-field user from the
//! command line, or run parameter sweeps to CSV.
//!
//! Exit status is 0 on success, 2 for invalid arguments or configuration,
//! and 3 when reading or writing a file fails.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mixfield::fresnel::fresnel_cs;
use mixfield::interference::{evaluate_all, power_from_correlation};
use mixfield::link::{linear_to_db, rate_report, watts_to_dbm};
use mixfield::sweep::{emit_csv, load_config, run_sweep_with, write_csv, Execution};
use mixfield::{Error, Method, Preset, Scenario, SweepSpec};

#[derive(Parser)]
#[command(name = "mixfield", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized leakage f by all three methods at one geometry.
    Interference(GeometryArgs),
    /// SINR, rate and rate loss of the near-field user.
    Rate {
        #[command(flatten)]
        geometry: GeometryArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Which evaluation of f feeds the rate.
        #[arg(long, default_value = "exact")]
        method: Method,
    },
    /// Run a preset or a TOML-configured sweep and write CSV.
    Sweep(SweepArgs),
    /// Fresnel integrals C(x) and S(x).
    Fresnel {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Names and descriptions of the built-in sweeps.
    ListPresets,
}

#[derive(Args)]
struct GeometryArgs {
    /// Number of antennas.
    #[arg(long, default_value_t = 256)]
    n: usize,
    /// Carrier frequency in Hz.
    #[arg(long, default_value_t = 30e9)]
    freq: f64,
    /// Spatial angle of the near-field user.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    theta: f64,
    /// Spatial angle of the far-field beam.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    psi: f64,
    /// Distance of the near-field user in meters.
    #[arg(long, default_value_t = 3.0)]
    r: f64,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 20.0, allow_negative_numbers = true)]
    p_near_dbm: f64,
    #[arg(long, default_value_t = 30.0, allow_negative_numbers = true)]
    p_far_dbm: f64,
    /// Reference channel gain at 1 m, in dB.
    #[arg(long, default_value_t = -62.0, allow_negative_numbers = true)]
    beta_db: f64,
    #[arg(long, default_value_t = -70.0, allow_negative_numbers = true)]
    noise_dbm: f64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, conflicts_with = "config", required_unless_present = "config")]
    preset: Option<Preset>,
    /// TOML sweep description.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output CSV path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Evaluate grid points on one thread.
    #[arg(long)]
    serial: bool,
    #[command(flatten)]
    overrides: Overrides,
}

/// Base-scenario values applied on top of the preset or config file.
#[derive(Args)]
struct Overrides {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    freq: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    psi: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    p_near_dbm: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    p_far_dbm: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta_db: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    noise_dbm: Option<f64>,
}

impl Overrides {
    fn apply(&self, base: &mut Scenario) {
        let slots = [
            (&mut base.carrier_freq, self.freq),
            (&mut base.theta, self.theta),
            (&mut base.psi, self.psi),
            (&mut base.r, self.r),
            (&mut base.p_near_dbm, self.p_near_dbm),
            (&mut base.p_far_dbm, self.p_far_dbm),
            (&mut base.beta_db, self.beta_db),
            (&mut base.noise_dbm, self.noise_dbm),
        ];
        for (slot, value) in slots {
            if let Some(v) = value {
                *slot = v;
            }
        }
        if let Some(n) = self.n {
            base.n_antennas = n;
        }
    }
}

impl GeometryArgs {
    fn scenario(&self) -> Scenario {
        Scenario {
            n_antennas: self.n,
            carrier_freq: self.freq,
            theta: self.theta,
            psi: self.psi,
            r: self.r,
            ..Scenario::baseline()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(if err.is_io() { 3 } else { 2 })
        }
    }
}

fn stdout_error(source: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn run(command: Command) -> mixfield::Result<()> {
    let mut out = std::io::stdout().lock();
    let text = match command {
        Command::Interference(geo) => interference_text(&geo.scenario())?,
        Command::Rate {
            geometry,
            budget,
            method,
        } => {
            let scenario = Scenario {
                p_near_dbm: budget.p_near_dbm,
                p_far_dbm: budget.p_far_dbm,
                beta_db: budget.beta_db,
                noise_dbm: budget.noise_dbm,
                ..geometry.scenario()
            };
            rate_text(&scenario, method)?
        }
        Command::Sweep(args) => return sweep(&args, &mut out),
        Command::Fresnel { x } => {
            let (c, s) = fresnel_cs(x)?;
            format!("x = {x}\nC(x) = {c:.15}\nS(x) = {s:.15}\n")
        }
        Command::ListPresets => Preset::ALL
            .iter()
            .map(|p| format!("{:<13} {}\n", p.name(), p.description()))
            .collect(),
    };
    out.write_all(text.as_bytes()).map_err(stdout_error)
}

/// Rounding can leave the closed form a hair above 1; shown values are
/// clamped, computed values are not.
fn shown(g: f64) -> f64 {
    g.clamp(0.0, 1.0)
}

fn interference_text(s: &Scenario) -> mixfield::Result<String> {
    let cfg = s.array()?;
    let point = evaluate_all(&cfg, s.direction()?, s.user()?)?;
    let mut text = format!(
        "N = {}, lambda = {} m, theta = {}, psi = {}, r = {} m\n\
         region = {} (1.2D = {:.4} m, Rayleigh = {:.4} m)\n\
         beta1 = {:.6}, beta2 = {:.6}\n",
        cfg.n_antennas(),
        cfg.wavelength(),
        s.theta,
        s.psi,
        s.r,
        point.region,
        cfg.fresnel_lower(),
        cfg.rayleigh_distance(),
        point.beta.beta1(),
        point.beta.beta2(),
    );
    for m in Method::ALL {
        text += &format!("f_{:<12} = {:.12}\n", m.as_str(), shown(point.get(m)));
    }
    if point.approx_domain_warning {
        text += &format!(
            "warning: r is below {:.4} m, where the phase expansion behind \
             the sum and closed forms loses accuracy\n",
            cfg.approx_valid_distance()
        );
    }
    Ok(text)
}

fn rate_text(s: &Scenario, method: Method) -> mixfield::Result<String> {
    let cfg = s.array()?;
    let link = s.link()?;
    let point = evaluate_all(&cfg, s.direction()?, s.user()?)?;
    let f = point.get(method);
    let rep = rate_report(&link, &cfg, s.r, f)?;
    let power = power_from_correlation(&link, &cfg, s.r, f)?;
    let mut text = format!(
        "f ({method}) = {:.12}\n\
         g_near = {:.6e}\n\
         interference power = {:.4} dBm\n\
         SINR = {:.4} dB\n\
         rate = {:.6} bps/Hz\n\
         interference-free rate = {:.6} bps/Hz\n\
         rate loss = {:.6} bps/Hz (bound {:.6})\n",
        shown(f),
        rep.g_near,
        watts_to_dbm(power),
        linear_to_db(rep.sinr),
        rep.rate,
        rep.rate_ideal,
        rep.rate_loss,
        rep.rate_loss_bound,
    );
    if point.approx_domain_warning && method != Method::Exact {
        text += "warning: r is inside the distance where the approximation is accurate\n";
    }
    Ok(text)
}

fn sweep_spec(args: &SweepArgs) -> mixfield::Result<SweepSpec> {
    let mut spec = match (&args.preset, &args.config) {
        (Some(p), _) => p.spec(),
        (None, Some(path)) => load_config(path)?.into_spec()?,
        (None, None) => unreachable!("clap requires one of --preset/--config"),
    };
    args.overrides.apply(&mut spec.base);
    Ok(spec)
}

fn sweep(args: &SweepArgs, stdout: &mut impl Write) -> mixfield::Result<()> {
    let spec = sweep_spec(args)?;
    let exec = if args.serial {
        Execution::Serial
    } else {
        Execution::Parallel
    };
    let records = run_sweep_with(&spec, exec)?;
    match &args.out {
        Some(path) => {
            emit_csv(&records, path)?;
            eprintln!("wrote {} rows to {}", records.len(), path.display());
            Ok(())
        }
        None => write_csv(&records, stdout).map_err(|source| Error::Csv {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}
