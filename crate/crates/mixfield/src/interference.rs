//! Normalized interference `f(N, ψ, θ, r) = |bᴴ(θ, r)·a(ψ)|` of a far-field
//! beam at a near-field user.
//!
//! Three evaluations, each one approximation step further from the truth:
//!
//! 1. [`interference_exact`]: the inner product of the exact steering vectors.
//! 2. [`interference_fresnel_sum`]: element distances expanded to second order,
//!    `r⁽ⁿ⁾ ≈ r − δₙdθ + δₙ²d²(1 − θ²)/(2r)`, and the sum re-indexed from `δₙ`
//!    to `n`.
//! 3. [`interference_approx`]: that sum replaced by an integral and written
//!    with Fresnel integrals, `G(β₁, β₂)`.
//!
//! The expansion is accurate for `r ≥ 0.5·√(D³/λ)`; closer users still get a
//! value, flagged through [`InterferencePoint::approx_domain_warning`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fresnel::{beta_params, g_function, BetaParams};
use crate::geometry::{ArrayConfig, FieldRegion};
use crate::link::{channel_gain_near, LinkBudget};
use crate::steering::{far_steering, near_steering, FarFieldDirection, NearFieldPoint};

/// Which evaluation of `f` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    FresnelSum,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Exact, Method::FresnelSum, Method::ClosedForm];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::FresnelSum => "fresnel_sum",
            Method::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "fresnel_sum" | "sum" => Ok(Method::FresnelSum),
            "closed_form" | "approx" => Ok(Method::ClosedForm),
            other => Err(Error::Config(format!("unknown method `{other}`"))),
        }
    }
}

/// Ground truth: `|bᴴ(θ, r)·a(ψ)|` with exact spherical phases.
pub fn interference_exact(cfg: &ArrayConfig, dir: FarFieldDirection, p: NearFieldPoint) -> f64 {
    let b = near_steering(cfg, p);
    let a = far_steering(cfg, dir);
    b.inner(&a).norm()
}

/// `(1/N)·|Σₙ exp(jπ(n²·d(1−θ²)/(2r) − n(θ − ψ + d(N−1)(1−θ²)/(2r))))|`.
pub fn interference_fresnel_sum(
    cfg: &ArrayConfig,
    dir: FarFieldDirection,
    p: NearFieldPoint,
) -> f64 {
    let n_ant = cfg.n_antennas();
    let theta = p.theta();
    let curvature = cfg.spacing() * (1.0 - theta * theta) / (2.0 * p.r());
    let linear = theta - dir.psi() + (n_ant as f64 - 1.0) * curvature;
    let sum: Complex64 = (0..n_ant)
        .map(|n| {
            let n = n as f64;
            Complex64::cis(PI * (n * n * curvature - n * linear))
        })
        .sum();
    sum.norm() / n_ant as f64
}

/// Closed form `G(β₁, β₂)`.
pub fn interference_approx(cfg: &ArrayConfig, dir: FarFieldDirection, p: NearFieldPoint) -> f64 {
    g_function(beta_params(cfg, dir, p))
}

pub fn interference(
    cfg: &ArrayConfig,
    dir: FarFieldDirection,
    p: NearFieldPoint,
    method: Method,
) -> f64 {
    match method {
        Method::Exact => interference_exact(cfg, dir, p),
        Method::FresnelSum => interference_fresnel_sum(cfg, dir, p),
        Method::ClosedForm => interference_approx(cfg, dir, p),
    }
}

/// Interference power received by the near-field user, `P_far·g_near·f²`, in watts.
pub fn received_interference_power(
    link: &LinkBudget,
    cfg: &ArrayConfig,
    dir: FarFieldDirection,
    p: NearFieldPoint,
    method: Method,
) -> Result<f64> {
    let f = interference(cfg, dir, p, method);
    power_from_correlation(link, cfg, p.r(), f)
}

/// `P_far·g_near·f²` for an already computed `f`.
pub fn power_from_correlation(link: &LinkBudget, cfg: &ArrayConfig, r: f64, f: f64) -> Result<f64> {
    Ok(link.p_far() * channel_gain_near(link, cfg, r)? * f * f)
}

/// All three evaluations at one geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferencePoint {
    pub beta: BetaParams,
    pub exact: f64,
    pub fresnel_sum: f64,
    pub closed_form: f64,
    pub region: FieldRegion,
    /// Set when `r` is below the distance where the phase expansion behind
    /// the sum and closed forms is accurate.
    pub approx_domain_warning: bool,
}

impl InterferencePoint {
    pub fn get(&self, method: Method) -> f64 {
        match method {
            Method::Exact => self.exact,
            Method::FresnelSum => self.fresnel_sum,
            Method::ClosedForm => self.closed_form,
        }
    }
}

pub fn evaluate_all(
    cfg: &ArrayConfig,
    dir: FarFieldDirection,
    p: NearFieldPoint,
) -> Result<InterferencePoint> {
    Ok(InterferencePoint {
        beta: beta_params(cfg, dir, p),
        exact: interference_exact(cfg, dir, p),
        fresnel_sum: interference_fresnel_sum(cfg, dir, p),
        closed_form: interference_approx(cfg, dir, p),
        region: cfg.classify_region(p.r())?,
        approx_domain_warning: p.r() < cfg.approx_valid_distance(),
    })
}
