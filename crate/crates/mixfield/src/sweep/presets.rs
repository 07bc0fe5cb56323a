use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interference::Method;

use super::{Scenario, Series, SweepParam, SweepSpec};

/// Built-in sweeps, one per reproduced figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Interference power versus far-field beam angle.
    Fig1,
    /// `G(β₁, β₂)` over the plane.
    Fig2Surface,
    /// Closed form against the exact value versus antenna count.
    Fig3a,
    /// Effect of antenna count.
    Fig3b,
    /// Effect of far-field beam angle.
    Fig4a,
    /// Effect of angle difference, for several distances.
    Fig4b,
    /// Effect of near-field user angle.
    Fig4c,
    /// Effect of distance, for several angle differences.
    Fig4d,
    /// Rate and rate loss versus antenna count.
    Fig6a,
    /// Rate and rate loss versus far-field beam angle.
    Fig6b,
    /// Rate and rate loss versus near-field user angle.
    Fig6c,
    /// Rate and rate loss versus distance.
    Fig6d,
}

/// Points used on continuous axes.
pub const DEFAULT_POINTS: usize = 601;

impl Preset {
    pub const ALL: [Preset; 12] = [
        Preset::Fig1,
        Preset::Fig2Surface,
        Preset::Fig3a,
        Preset::Fig3b,
        Preset::Fig4a,
        Preset::Fig4b,
        Preset::Fig4c,
        Preset::Fig4d,
        Preset::Fig6a,
        Preset::Fig6b,
        Preset::Fig6c,
        Preset::Fig6d,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2Surface => "fig2_surface",
            Preset::Fig3a => "fig3a",
            Preset::Fig3b => "fig3b",
            Preset::Fig4a => "fig4a",
            Preset::Fig4b => "fig4b",
            Preset::Fig4c => "fig4c",
            Preset::Fig4d => "fig4d",
            Preset::Fig6a => "fig6a",
            Preset::Fig6b => "fig6b",
            Preset::Fig6c => "fig6c",
            Preset::Fig6d => "fig6d",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Preset::Fig1 => "interference power at the near user vs far-beam angle psi",
            Preset::Fig2Surface => "G(beta1, beta2) over beta1 in [-3, 3], beta2 in (0, 10]",
            Preset::Fig3a => "closed form vs exact over N, theta=0.05, psi=0, r in {3, 9}",
            Preset::Fig3b => "interference vs N, theta=0.05, psi=0, r in {3, 6, 9}",
            Preset::Fig4a => "interference vs psi, theta=0, N=256, r=3",
            Preset::Fig4b => "interference vs theta-psi, theta=0, N=256, r in {3, 10, 30}",
            Preset::Fig4c => "interference vs theta, psi=0, N=256, r in {3, 10, 30}",
            Preset::Fig4d => {
                "interference vs r, theta=0, N=256, theta-psi in {0.005, 0.1, 0.15, 0.2}"
            }
            Preset::Fig6a => "rate loss vs N, theta=0.05, psi=0, r=3",
            Preset::Fig6b => "rate loss vs psi, theta=0, N=256, r=3",
            Preset::Fig6c => "rate loss vs theta, psi=0, N=256, r=3",
            Preset::Fig6d => "rate loss vs r, theta=0.05, psi=0, N=256",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

/// `points` evenly spaced values from `start` to `stop` inclusive.
pub(crate) fn linspace(start: f64, stop: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (stop - start) / (points - 1) as f64;
            (0..points)
                .map(|i| {
                    if i + 1 == points {
                        stop
                    } else {
                        start + step * i as f64
                    }
                })
                .collect()
        }
    }
}

/// `16, 32, …, 1024`.
fn doubling_antennas() -> Vec<f64> {
    (4..=10).map(|k| f64::from(1u32 << k)).collect()
}

fn series(param: SweepParam, values: &[f64]) -> Option<Series> {
    Some(Series {
        param,
        values: values.to_vec(),
    })
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<SweepSpec> {
    name.parse::<Preset>().map(Preset::spec)
}

impl Preset {
    pub fn spec(self) -> SweepSpec {
        let baseline = Scenario::baseline();
        let all = Method::ALL.to_vec();
        let spec = |base: Scenario, swept, grid, series| SweepSpec {
            base,
            swept,
            grid,
            series,
            methods: all.clone(),
            rate_method: Method::Exact,
        };
        let at = |theta: f64, psi: f64| Scenario {
            theta,
            psi,
            ..baseline
        };
        let angles = linspace(-0.6, 0.6, DEFAULT_POINTS);

        match self {
            Preset::Fig1 => spec(
                at(0.0, 0.0),
                SweepParam::Psi,
                linspace(-0.99, 0.99, DEFAULT_POINTS),
                None,
            ),
            Preset::Fig2Surface => SweepSpec {
                base: baseline,
                swept: SweepParam::Beta2,
                grid: linspace(0.1, 10.0, 100),
                series: series(SweepParam::Beta1, &linspace(-3.0, 3.0, 61)),
                methods: vec![Method::ClosedForm],
                rate_method: Method::ClosedForm,
            },
            Preset::Fig3a => spec(
                at(0.05, 0.0),
                SweepParam::NAntennas,
                (2..=16).map(|k| 32.0 * k as f64).collect(),
                series(SweepParam::R, &[3.0, 9.0]),
            ),
            Preset::Fig3b => spec(
                at(0.05, 0.0),
                SweepParam::NAntennas,
                doubling_antennas(),
                series(SweepParam::R, &[3.0, 6.0, 9.0]),
            ),
            Preset::Fig4a => spec(at(0.0, 0.0), SweepParam::Psi, angles.clone(), None),
            Preset::Fig4b => spec(
                at(0.0, 0.0),
                SweepParam::AngleDiff,
                linspace(0.0, 0.5, DEFAULT_POINTS),
                series(SweepParam::R, &[3.0, 10.0, 30.0]),
            ),
            Preset::Fig4c => spec(
                at(0.0, 0.0),
                SweepParam::Theta,
                linspace(-0.9, 0.9, DEFAULT_POINTS),
                series(SweepParam::R, &[3.0, 10.0, 30.0]),
            ),
            Preset::Fig4d => spec(
                at(0.0, 0.0),
                SweepParam::R,
                linspace(2.0, 300.0, DEFAULT_POINTS),
                series(SweepParam::AngleDiff, &[0.005, 0.1, 0.15, 0.2]),
            ),
            Preset::Fig6a => spec(
                at(0.05, 0.0),
                SweepParam::NAntennas,
                doubling_antennas(),
                None,
            ),
            Preset::Fig6b => spec(at(0.0, 0.0), SweepParam::Psi, angles.clone(), None),
            Preset::Fig6c => spec(at(0.0, 0.0), SweepParam::Theta, angles, None),
            Preset::Fig6d => spec(
                at(0.05, 0.0),
                SweepParam::R,
                linspace(2.0, 300.0, DEFAULT_POINTS),
                None,
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Preset::ALL {
            assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        }
        assert!(matches!(preset("fig5"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn figure_parameters() {
        let s = preset("fig6a").unwrap();
        assert_eq!((s.base.theta, s.base.psi, s.base.r), (0.05, 0.0, 3.0));
        assert_eq!(s.swept, SweepParam::NAntennas);

        let s = preset("fig6b").unwrap();
        assert_eq!((s.base.theta, s.base.n_antennas, s.base.r), (0.0, 256, 3.0));
        assert_eq!(s.swept, SweepParam::Psi);

        let s = preset("fig4b").unwrap();
        assert_eq!(s.swept, SweepParam::AngleDiff);
        assert_eq!(s.series.unwrap().values, vec![3.0, 10.0, 30.0]);

        let s = preset("fig1").unwrap();
        assert_eq!(
            (s.base.p_far_dbm, s.base.r, s.base.n_antennas),
            (30.0, 3.0, 256)
        );
    }

    #[test]
    fn all_presets_are_valid() {
        for p in Preset::ALL {
            let s = p.spec();
            s.validate().unwrap();
            assert!(s.grid.len() <= 2000);
        }
    }

    #[test]
    fn linspace_endpoints() {
        let v = linspace(-0.6, 0.6, 601);
        assert_eq!(v.len(), 601);
        assert_eq!(v[0], -0.6);
        assert_eq!(v[600], 0.6);
        assert!(v[300].abs() < 1e-15);
        assert_eq!(linspace(1.0, 2.0, 1), vec![1.0]);
    }
}
