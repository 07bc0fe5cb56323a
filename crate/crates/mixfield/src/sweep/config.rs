//! TOML sweep configuration.
//!
//! ```toml
//! preset = "fig3b"                 # optional starting point
//! swept = "n_antennas"             # required without a preset
//! grid = [16, 32, 64, 128]         # or { start = 16, stop = 1024, points = 64 }
//! methods = ["exact", "closed_form"]
//! rate_method = "exact"
//!
//! [base]                           # any subset of the scenario fields
//! theta = 0.05
//! noise_dbm = -80
//!
//! [series]
//! param = "r"
//! values = [3, 6, 9]
//! ```
//!
//! Values given in the file replace those of the preset; command-line flags
//! are applied on top by the caller.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::interference::Method;

use super::presets::linspace;
use super::{Preset, Scenario, Series, SweepParam, SweepSpec};

/// Either explicit values or an evenly spaced range.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum GridSpec {
    Values(Vec<Number>),
    Range {
        start: f64,
        stop: f64,
        points: usize,
    },
}

/// TOML numbers may be written as integers or floats.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Float(f64),
}

impl From<Number> for f64 {
    fn from(n: Number) -> f64 {
        match n {
            Number::Int(i) => i as f64,
            Number::Float(f) => f,
        }
    }
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        match self {
            GridSpec::Values(v) => v.iter().copied().map(f64::from).collect(),
            GridSpec::Range {
                start,
                stop,
                points,
            } => linspace(*start, *stop, *points),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseOverrides {
    pub n_antennas: Option<usize>,
    pub carrier_freq: Option<Number>,
    pub p_near_dbm: Option<Number>,
    pub p_far_dbm: Option<Number>,
    pub beta_db: Option<Number>,
    pub noise_dbm: Option<Number>,
    pub theta: Option<Number>,
    pub psi: Option<Number>,
    pub r: Option<Number>,
}

impl BaseOverrides {
    pub fn apply(&self, base: &mut Scenario) {
        fn set(slot: &mut f64, v: Option<Number>) {
            if let Some(v) = v {
                *slot = v.into();
            }
        }
        if let Some(n) = self.n_antennas {
            base.n_antennas = n;
        }
        set(&mut base.carrier_freq, self.carrier_freq);
        set(&mut base.p_near_dbm, self.p_near_dbm);
        set(&mut base.p_far_dbm, self.p_far_dbm);
        set(&mut base.beta_db, self.beta_db);
        set(&mut base.noise_dbm, self.noise_dbm);
        set(&mut base.theta, self.theta);
        set(&mut base.psi, self.psi);
        set(&mut base.r, self.r);
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesConfig {
    pub param: String,
    pub values: GridSpec,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub preset: Option<String>,
    pub swept: Option<String>,
    pub grid: Option<GridSpec>,
    pub methods: Option<Vec<String>>,
    pub rate_method: Option<String>,
    #[serde(default)]
    pub base: BaseOverrides,
    pub series: Option<SeriesConfig>,
}

impl SweepConfig {
    /// Resolves the file against its preset (if any) into a runnable spec.
    pub fn into_spec(self) -> Result<SweepSpec> {
        let mut spec = match &self.preset {
            Some(name) => name.parse::<Preset>()?.spec(),
            None => {
                let swept = self
                    .swept
                    .as_deref()
                    .ok_or_else(|| Error::Config("`swept` is required without a preset".into()))?
                    .parse()?;
                let grid = self
                    .grid
                    .as_ref()
                    .ok_or_else(|| Error::Config("`grid` is required without a preset".into()))?
                    .values();
                SweepSpec {
                    base: Scenario::baseline(),
                    swept,
                    grid,
                    series: None,
                    methods: Method::ALL.to_vec(),
                    rate_method: Method::Exact,
                }
            }
        };
        if let Some(swept) = &self.swept {
            spec.swept = swept.parse::<SweepParam>()?;
        }
        if let Some(grid) = &self.grid {
            spec.grid = grid.values();
        }
        if let Some(methods) = &self.methods {
            spec.methods = methods
                .iter()
                .map(|m| m.parse())
                .collect::<Result<Vec<Method>>>()?;
            if !spec.methods.contains(&spec.rate_method) {
                if let Some(&first) = spec.methods.first() {
                    spec.rate_method = first;
                }
            }
        }
        if let Some(m) = &self.rate_method {
            spec.rate_method = m.parse()?;
        }
        self.base.apply(&mut spec.base);
        if let Some(series) = &self.series {
            spec.series = Some(Series {
                param: series.param.parse()?,
                values: series.values.values(),
            });
        }
        spec.validate()?;
        Ok(spec)
    }
}

pub fn parse_config(text: &str) -> Result<SweepConfig> {
    toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
}

pub fn load_config(path: &Path) -> Result<SweepConfig> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}
