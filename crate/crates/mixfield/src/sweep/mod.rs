//! Parameter sweeps over one scenario axis, with an optional series axis.
//!
//! A [`SweepSpec`] names a base [`Scenario`], the parameter to vary, its grid,
//! and optionally a second parameter whose values produce one curve each.
//! [`run_sweep`] evaluates every (series, grid) point and returns records in
//! series-major, grid-minor order regardless of how the work was scheduled.

mod config;
mod csv_io;
mod presets;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fresnel::{g_function, BetaParams};
use crate::geometry::{ArrayConfig, FieldRegion};
use crate::interference::{evaluate_all, power_from_correlation, Method};
use crate::link::{linear_to_db, rate_report, watts_to_dbm, LinkBudget};
use crate::steering::{FarFieldDirection, NearFieldPoint};

pub use config::{load_config, parse_config, GridSpec, SweepConfig};
pub use csv_io::{emit_csv, read_csv, write_csv, CSV_HEADER};
pub use presets::{preset, Preset};

/// Inputs for a single operating point. Powers in dBm, gain in dB.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub n_antennas: usize,
    pub carrier_freq: f64,
    pub p_near_dbm: f64,
    pub p_far_dbm: f64,
    pub beta_db: f64,
    pub noise_dbm: f64,
    pub theta: f64,
    pub psi: f64,
    pub r: f64,
}

impl Scenario {
    /// 256 antennas at 30 GHz, −62 dB reference gain, 20/30 dBm transmit
    /// powers, −70 dBm noise, user at broadside 3 m away.
    pub fn baseline() -> Self {
        Self {
            n_antennas: 256,
            carrier_freq: 30e9,
            p_near_dbm: 20.0,
            p_far_dbm: 30.0,
            beta_db: -62.0,
            noise_dbm: -70.0,
            theta: 0.0,
            psi: 0.0,
            r: 3.0,
        }
    }

    pub fn array(&self) -> Result<ArrayConfig> {
        ArrayConfig::new(self.n_antennas, self.carrier_freq)
    }

    pub fn link(&self) -> Result<LinkBudget> {
        LinkBudget::from_db(
            self.p_near_dbm,
            self.p_far_dbm,
            self.beta_db,
            self.noise_dbm,
        )
    }

    pub fn direction(&self) -> Result<FarFieldDirection> {
        FarFieldDirection::new(self.psi)
    }

    pub fn user(&self) -> Result<NearFieldPoint> {
        NearFieldPoint::new(self.theta, self.r)
    }

    /// Copy with `param` set to `value`. `AngleDiff` sets `ψ = θ − value`.
    pub fn with(&self, param: SweepParam, value: f64) -> Result<Self> {
        let mut s = *self;
        match param {
            SweepParam::NAntennas => s.n_antennas = antenna_count(value)?,
            SweepParam::Psi => s.psi = value,
            SweepParam::Theta => s.theta = value,
            SweepParam::R => s.r = value,
            SweepParam::AngleDiff => s.psi = s.theta - value,
            SweepParam::Beta1 | SweepParam::Beta2 => {
                return Err(Error::Config(format!(
                    "`{param}` is not a scenario parameter"
                )))
            }
        }
        Ok(s)
    }
}

fn antenna_count(value: f64) -> Result<usize> {
    if value >= 1.0 && value.fract() == 0.0 && value <= u32::MAX as f64 {
        Ok(value as usize)
    } else {
        Err(Error::InvalidGrid(format!(
            "antenna count must be a positive integer, got {value}"
        )))
    }
}

/// A sweepable quantity.
///
/// `Beta1` and `Beta2` drive the closed-form kernel directly and are only
/// valid together (one as the grid, the other as the series).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    NAntennas,
    Psi,
    Theta,
    R,
    /// `θ − ψ`, varied through `ψ` with `θ` held at its base value.
    AngleDiff,
    Beta1,
    Beta2,
}

impl SweepParam {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepParam::NAntennas => "n_antennas",
            SweepParam::Psi => "psi",
            SweepParam::Theta => "theta",
            SweepParam::R => "r",
            SweepParam::AngleDiff => "angle_diff",
            SweepParam::Beta1 => "beta1",
            SweepParam::Beta2 => "beta2",
        }
    }

    fn is_kernel(self) -> bool {
        matches!(self, SweepParam::Beta1 | SweepParam::Beta2)
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "n_antennas" | "n" => SweepParam::NAntennas,
            "psi" => SweepParam::Psi,
            "theta" => SweepParam::Theta,
            "r" => SweepParam::R,
            "angle_diff" => SweepParam::AngleDiff,
            "beta1" => SweepParam::Beta1,
            "beta2" => SweepParam::Beta2,
            other => return Err(Error::Config(format!("unknown sweep parameter `{other}`"))),
        })
    }
}

/// One curve per value of `param`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub param: SweepParam,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: Scenario,
    pub swept: SweepParam,
    pub grid: Vec<f64>,
    pub series: Option<Series>,
    /// Methods whose `f` columns are filled; others are left empty.
    pub methods: Vec<Method>,
    /// Method whose `f` feeds the power, SINR and rate columns.
    pub rate_method: Method,
}

impl SweepSpec {
    /// Number of records the sweep produces.
    pub fn len(&self) -> usize {
        self.grid.len() * self.series.as_ref().map_or(1, |s| s.values.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self) -> Result<()> {
        check_grid("grid", &self.grid)?;
        if let Some(series) = &self.series {
            check_grid("series", &series.values)?;
            if series.param == self.swept {
                return Err(Error::Config(format!(
                    "series parameter `{}` is also the swept parameter",
                    series.param
                )));
            }
        }
        let series_kernel = self.series.as_ref().map(|s| s.param.is_kernel());
        if self.swept.is_kernel() {
            if series_kernel != Some(true) {
                return Err(Error::Config(
                    "beta1/beta2 sweeps need the other beta as the series".into(),
                ));
            }
            if !self.methods.iter().all(|&m| m == Method::ClosedForm) {
                return Err(Error::Config(
                    "beta1/beta2 sweeps support only the closed_form method".into(),
                ));
            }
        } else if series_kernel == Some(true) {
            return Err(Error::Config(
                "beta1/beta2 series need a beta1/beta2 grid".into(),
            ));
        }
        if self.methods.is_empty() {
            return Err(Error::Config("no methods selected".into()));
        }
        if !self.swept.is_kernel() && !self.methods.contains(&self.rate_method) {
            return Err(Error::Config(format!(
                "rate method `{}` is not among the selected methods",
                self.rate_method
            )));
        }
        Ok(())
    }

    fn points(&self) -> Vec<(Option<f64>, f64)> {
        match &self.series {
            Some(s) => s
                .values
                .iter()
                .flat_map(|&sv| self.grid.iter().map(move |&g| (Some(sv), g)))
                .collect(),
            None => self.grid.iter().map(|&g| (None, g)).collect(),
        }
    }
}

fn check_grid(what: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid(format!("{what} is empty")));
    }
    if let Some(bad) = grid.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidGrid(format!("{what} contains {bad}")));
    }
    let increasing = grid.windows(2).all(|w| w[0] < w[1]);
    let decreasing = grid.windows(2).all(|w| w[0] > w[1]);
    if !(increasing || decreasing) {
        return Err(Error::InvalidGrid(format!(
            "{what} is not strictly monotone"
        )));
    }
    Ok(())
}

/// One row of sweep output. `None` fields serialize as empty CSV cells.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub swept_value: f64,
    pub series_value: Option<f64>,
    pub n_antennas: Option<usize>,
    pub theta: Option<f64>,
    pub psi: Option<f64>,
    pub r: Option<f64>,
    pub beta1: f64,
    pub beta2: f64,
    pub f_exact: Option<f64>,
    pub f_sum: Option<f64>,
    pub f_closed: Option<f64>,
    pub interference_power_dbm: Option<f64>,
    pub sinr_db: Option<f64>,
    pub rate: Option<f64>,
    pub rate_ideal: Option<f64>,
    pub rate_loss: Option<f64>,
    pub rate_loss_bound: Option<f64>,
    pub region: Option<FieldRegion>,
    pub approx_domain_warning: Option<bool>,
}

/// How grid points are scheduled. The output is identical either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    run_sweep_with(spec, Execution::Parallel)
}

pub fn run_sweep_with(spec: &SweepSpec, exec: Execution) -> Result<Vec<SweepRecord>> {
    spec.validate()?;
    let points = spec.points();
    let eval = |&(series, value): &(Option<f64>, f64)| evaluate_point(spec, series, value);
    match exec {
        Execution::Serial => points.iter().map(eval).collect(),
        Execution::Parallel => points.par_iter().map(eval).collect(),
    }
}

fn evaluate_point(spec: &SweepSpec, series: Option<f64>, value: f64) -> Result<SweepRecord> {
    if spec.swept.is_kernel() {
        return Ok(kernel_record(spec, series.expect("validated"), value));
    }
    let mut scenario = spec.base;
    if let (Some(s), Some(sv)) = (&spec.series, series) {
        scenario = scenario.with(s.param, sv)?;
    }
    let scenario = scenario.with(spec.swept, value)?;
    let cfg = scenario.array()?;
    let link = scenario.link()?;
    let dir = scenario.direction()?;
    let user = scenario.user()?;

    let point = evaluate_all(&cfg, dir, user)?;
    let wanted = |m: Method| spec.methods.contains(&m).then(|| point.get(m));
    let f = point.get(spec.rate_method);
    let report = rate_report(&link, &cfg, user.r(), f)?;
    let power = power_from_correlation(&link, &cfg, user.r(), f)?;

    Ok(SweepRecord {
        swept_value: value,
        series_value: series,
        n_antennas: Some(scenario.n_antennas),
        theta: Some(scenario.theta),
        psi: Some(scenario.psi),
        r: Some(scenario.r),
        beta1: point.beta.beta1(),
        beta2: point.beta.beta2(),
        f_exact: wanted(Method::Exact),
        f_sum: wanted(Method::FresnelSum),
        f_closed: wanted(Method::ClosedForm),
        interference_power_dbm: Some(watts_to_dbm(power)),
        sinr_db: Some(linear_to_db(report.sinr)),
        rate: Some(report.rate),
        rate_ideal: Some(report.rate_ideal),
        rate_loss: Some(report.rate_loss),
        rate_loss_bound: Some(report.rate_loss_bound),
        region: Some(point.region),
        approx_domain_warning: Some(point.approx_domain_warning),
    })
}

fn kernel_record(spec: &SweepSpec, series: f64, value: f64) -> SweepRecord {
    let (beta1, beta2) = match spec.swept {
        SweepParam::Beta1 => (value, series),
        _ => (series, value),
    };
    let f_closed = BetaParams::new(beta1, beta2).ok().map(g_function);
    SweepRecord {
        swept_value: value,
        series_value: Some(series),
        n_antennas: None,
        theta: None,
        psi: None,
        r: None,
        beta1,
        beta2,
        f_exact: None,
        f_sum: None,
        f_closed,
        interference_power_dbm: None,
        sinr_db: None,
        rate: None,
        rate_ideal: None,
        rate_loss: None,
        rate_loss_bound: None,
        region: None,
        approx_domain_warning: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interference::{interference_approx, interference_exact};
    use crate::link::rate_ideal;

    fn single(swept: SweepParam, value: f64) -> SweepSpec {
        SweepSpec {
            base: Scenario::baseline(),
            swept,
            grid: vec![value],
            series: None,
            methods: Method::ALL.to_vec(),
            rate_method: Method::Exact,
        }
    }

    #[test]
    fn single_point_matches_direct_calls() {
        let recs = run_sweep(&single(SweepParam::Theta, 0.05)).unwrap();
        assert_eq!(recs.len(), 1);
        let rec = &recs[0];
        let cfg = ArrayConfig::new(256, 30e9).unwrap();
        let dir = FarFieldDirection::new(0.0).unwrap();
        let user = NearFieldPoint::new(0.05, 3.0).unwrap();
        assert_eq!(rec.f_exact, Some(interference_exact(&cfg, dir, user)));
        assert_eq!(rec.f_closed, Some(interference_approx(&cfg, dir, user)));
        let ideal = rate_ideal(&LinkBudget::baseline(), &cfg, 3.0).unwrap();
        assert!((rec.rate_ideal.unwrap() - ideal).abs() < 1e-12);
        assert_eq!(rec.region, Some(FieldRegion::NearField));
        assert_eq!(rec.approx_domain_warning, Some(true));
    }

    #[test]
    fn angle_diff_moves_psi() {
        let mut spec = single(SweepParam::AngleDiff, 0.02);
        spec.base.theta = 0.1;
        let rec = &run_sweep(&spec).unwrap()[0];
        assert!((rec.psi.unwrap() - 0.08).abs() < 1e-15);
        assert_eq!(rec.theta, Some(0.1));
    }

    #[test]
    fn unrequested_methods_are_empty() {
        let mut spec = single(SweepParam::R, 9.0);
        spec.methods = vec![Method::ClosedForm];
        spec.rate_method = Method::ClosedForm;
        let rec = &run_sweep(&spec).unwrap()[0];
        assert!(rec.f_exact.is_none() && rec.f_sum.is_none());
        assert!(rec.f_closed.is_some());
    }

    #[test]
    fn rejects_bad_grids() {
        let mut spec = single(SweepParam::Psi, 0.0);
        spec.grid.clear();
        assert!(matches!(run_sweep(&spec), Err(Error::InvalidGrid(_))));
        spec.grid = vec![0.0, 0.1, 0.1];
        assert!(matches!(run_sweep(&spec), Err(Error::InvalidGrid(_))));
        spec.grid = vec![0.0, f64::NAN];
        assert!(run_sweep(&spec).is_err());
        spec.grid = vec![0.5, 0.9, 1.0];
        assert!(matches!(
            run_sweep(&spec),
            Err(Error::AngleOutOfRange { .. })
        ));
        let mut spec = single(SweepParam::NAntennas, 12.5);
        assert!(run_sweep(&spec).is_err());
        spec.grid = vec![0.0];
        assert!(run_sweep(&spec).is_err());
    }

    #[test]
    fn rejects_inconsistent_specs() {
        let mut spec = single(SweepParam::Psi, 0.0);
        spec.rate_method = Method::FresnelSum;
        spec.methods = vec![Method::Exact];
        assert!(spec.validate().is_err());
        let mut spec = single(SweepParam::Beta2, 1.0);
        assert!(spec.validate().is_err());
        spec.series = Some(Series {
            param: SweepParam::Beta1,
            values: vec![0.0],
        });
        spec.methods = vec![Method::ClosedForm];
        assert!(spec.validate().is_ok());
        let mut spec = single(SweepParam::Psi, 0.0);
        spec.series = Some(Series {
            param: SweepParam::Psi,
            values: vec![0.1],
        });
        assert!(spec.validate().is_err());
    }

    #[test]
    fn series_major_order() {
        let mut spec = single(SweepParam::NAntennas, 64.0);
        spec.grid = vec![64.0, 128.0];
        spec.series = Some(Series {
            param: SweepParam::R,
            values: vec![3.0, 9.0],
        });
        let recs = run_sweep(&spec).unwrap();
        let keys: Vec<_> = recs
            .iter()
            .map(|r| (r.series_value.unwrap(), r.n_antennas.unwrap()))
            .collect();
        assert_eq!(keys, vec![(3.0, 64), (3.0, 128), (9.0, 64), (9.0, 128)]);
        assert_eq!(recs.len(), spec.len());
    }

    #[test]
    fn parallel_equals_serial() {
        let mut spec = single(SweepParam::Psi, 0.0);
        spec.grid = (0..41).map(|i| -0.4 + 0.02 * i as f64).collect();
        let a = run_sweep_with(&spec, Execution::Serial).unwrap();
        let b = run_sweep_with(&spec, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
