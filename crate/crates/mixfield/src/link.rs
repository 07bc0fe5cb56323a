//! Two-user power budget, SINR and achievable rate at the near-field user.
//!
//! The near-field user is served with `v = b(θ, r)` and leaks power from the
//! far-field beam `a(ψ)`. With `f = |bᴴ(θ, r)·a(ψ)|` and `g = Nβ/r²`:
//!
//! ```text
//! SINR = P_near·g / (P_far·g·f² + σ²)
//! R    = log₂(1 + SINR)
//! R*   = log₂(1 + P_near·g/σ²)
//! ΔR   = R* − R ≤ log₂(1 + (P_near·g/σ²)·P_far·f²/(P_far·f² + P_near))
//! ```
//!
//! Symbol-level quantities (`x_near`, `x_far`, noise `z₀`) enter only through
//! their powers `P_near`, `P_far` and `σ²`. The far-field user's own rate is
//! not modeled.

use serde::{Deserialize, Serialize};

use crate::error::{check_positive, Error, Result};
use crate::geometry::ArrayConfig;

/// `10^((x − 30)/10)`.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// `10^(x/10)`.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn watts_to_dbm(watts: f64) -> f64 {
    10.0 * (watts / 1e-3).log10()
}

pub fn linear_to_db(ratio: f64) -> f64 {
    10.0 * ratio.log10()
}

/// SINR below which a rate is reported as exactly zero.
const RATE_FLOOR: f64 = 1e-15;

fn log2_1p(x: f64) -> f64 {
    if x < RATE_FLOOR {
        0.0
    } else {
        x.ln_1p() / std::f64::consts::LN_2
    }
}

/// Transmit powers, reference gain and noise, all linear (W or ratio).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkBudget {
    p_near: f64,
    p_far: f64,
    beta_ref: f64,
    noise: f64,
}

impl LinkBudget {
    /// `p_near`, `p_far` and `noise` in watts; `beta_ref` is the linear path
    /// gain at 1 m.
    pub fn new(p_near: f64, p_far: f64, beta_ref: f64, noise: f64) -> Result<Self> {
        Ok(Self {
            p_near: check_positive("P_near", p_near)?,
            p_far: check_positive("P_far", p_far)?,
            beta_ref: check_positive("reference gain", beta_ref)?,
            noise: check_positive("noise power", noise)?,
        })
    }

    /// Same as [`LinkBudget::new`] with powers in dBm and the gain in dB.
    pub fn from_db(p_near_dbm: f64, p_far_dbm: f64, beta_db: f64, noise_dbm: f64) -> Result<Self> {
        Self::new(
            dbm_to_watts(p_near_dbm),
            dbm_to_watts(p_far_dbm),
            db_to_linear(beta_db),
            dbm_to_watts(noise_dbm),
        )
    }

    /// 20 dBm / 30 dBm transmit powers, −62 dB reference gain, −70 dBm noise.
    pub fn baseline() -> Self {
        Self::from_db(20.0, 30.0, -62.0, -70.0).expect("finite constants")
    }

    pub fn p_near(&self) -> f64 {
        self.p_near
    }

    pub fn p_far(&self) -> f64 {
        self.p_far
    }

    pub fn beta_ref(&self) -> f64 {
        self.beta_ref
    }

    pub fn noise(&self) -> f64 {
        self.noise
    }

    pub fn with_noise(self, noise: f64) -> Result<Self> {
        Self::new(self.p_near, self.p_far, self.beta_ref, noise)
    }

    pub fn with_p_near(self, p_near: f64) -> Result<Self> {
        Self::new(p_near, self.p_far, self.beta_ref, self.noise)
    }
}

fn check_correlation(f: f64) -> Result<f64> {
    if f.is_finite() && f >= 0.0 {
        Ok(f)
    } else {
        Err(Error::NonFinite {
            what: "normalized interference f (must be finite and non-negative)",
            value: f,
        })
    }
}

/// Near-field channel power gain including array gain, `g = Nβ/r²`.
pub fn channel_gain_near(link: &LinkBudget, cfg: &ArrayConfig, r: f64) -> Result<f64> {
    let r = check_positive("distance r", r)?;
    Ok(cfg.n_antennas() as f64 * link.beta_ref / (r * r))
}

pub fn sinr_near(link: &LinkBudget, cfg: &ArrayConfig, r: f64, f: f64) -> Result<f64> {
    let f = check_correlation(f)?;
    let g = channel_gain_near(link, cfg, r)?;
    Ok(link.p_near * g / (link.p_far * g * f * f + link.noise))
}

/// Achievable rate in bps/Hz under interference level `f`.
pub fn rate_near(link: &LinkBudget, cfg: &ArrayConfig, r: f64, f: f64) -> Result<f64> {
    sinr_near(link, cfg, r, f).map(log2_1p)
}

/// Interference-free rate `R*`.
pub fn rate_ideal(link: &LinkBudget, cfg: &ArrayConfig, r: f64) -> Result<f64> {
    rate_near(link, cfg, r, 0.0)
}

/// Arguments of the two logarithms, sharing every intermediate product so
/// that `loss ≤ bound` holds after rounding as well.
fn loss_terms(link: &LinkBudget, g: f64, f: f64) -> (f64, f64) {
    let interference = link.p_far * g * f * f;
    let numer = link.p_near * interference * g;
    let partial = interference + link.p_near * g;
    let loss = numer / (link.noise * (partial + link.noise));
    let bound = numer / (link.noise * partial);
    (loss, bound)
}

/// `ΔR = R* − R`, evaluated in the cancellation-free form
/// `log₂(1 + P_near·P_far·g²f² / (σ²(P_far·g·f² + P_near·g + σ²)))`.
pub fn rate_loss(link: &LinkBudget, cfg: &ArrayConfig, r: f64, f: f64) -> Result<f64> {
    let f = check_correlation(f)?;
    let g = channel_gain_near(link, cfg, r)?;
    Ok(log2_1p(loss_terms(link, g, f).0))
}

/// Upper bound on [`rate_loss`] obtained by dropping `σ⁴` from the
/// denominator.
pub fn rate_loss_bound(link: &LinkBudget, cfg: &ArrayConfig, r: f64, f: f64) -> Result<f64> {
    let f = check_correlation(f)?;
    let g = channel_gain_near(link, cfg, r)?;
    Ok(log2_1p(loss_terms(link, g, f).1))
}

/// Everything about the near-field user's link at one operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport {
    pub g_near: f64,
    pub sinr: f64,
    pub rate: f64,
    pub rate_ideal: f64,
    pub rate_loss: f64,
    pub rate_loss_bound: f64,
    pub f_used: f64,
}

pub fn rate_report(link: &LinkBudget, cfg: &ArrayConfig, r: f64, f: f64) -> Result<RateReport> {
    let f = check_correlation(f)?;
    let g_near = channel_gain_near(link, cfg, r)?;
    let sinr = link.p_near * g_near / (link.p_far * g_near * f * f + link.noise);
    let ideal_snr = link.p_near * g_near / link.noise;
    let (loss, bound) = loss_terms(link, g_near, f);
    Ok(RateReport {
        g_near,
        sinr,
        rate: log2_1p(sinr),
        rate_ideal: log2_1p(ideal_snr),
        rate_loss: log2_1p(loss),
        rate_loss_bound: log2_1p(bound),
        f_used: f,
    })
}
