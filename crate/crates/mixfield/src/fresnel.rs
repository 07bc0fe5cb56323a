//! Fresnel integrals and the closed-form interference kernel `G(β₁, β₂)`.
//!
//! ```text
//! C(x) = ∫₀ˣ cos(πt²/2) dt        S(x) = ∫₀ˣ sin(πt²/2) dt
//! ```
//!
//! Evaluation uses the Maclaurin series for `|x| ≤ 1.6` and the auxiliary
//! functions `f`, `g` (Cephes rational approximations in `1/(πx²)²`) above it:
//!
//! ```text
//! C(x) = 1/2 + (f·sin(πx²/2) − g·cos(πx²/2)) / (πx)
//! S(x) = 1/2 − (f·cos(πx²/2) + g·sin(πx²/2)) / (πx)
//! ```
//!
//! Both functions are computed on `|x|` and the sign applied afterwards, so
//! oddness holds bit for bit.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::ArrayConfig;
use crate::steering::{FarFieldDirection, NearFieldPoint};

/// Switch point between the power series and the auxiliary functions.
pub const SERIES_LIMIT: f64 = 1.6;

/// Below this `β₂`, [`g_function`] returns its analytic limit 1.
pub const SMALL_BETA2: f64 = 1e-6;

/// Beyond this the auxiliary correction is below half an ulp of 1/2.
const ASYMPTOTIC_LIMIT: f64 = 36974.0;

const MAX_SERIES_TERMS: usize = 60;

// Auxiliary function f(x), numerator and monic denominator.
#[allow(clippy::excessive_precision)]
const FN: [f64; 10] = [
    4.215_435_550_436_775_465_06E-1,
    1.434_079_197_807_588_852_61E-1,
    1.152_209_550_735_857_588_35E-2,
    3.450_179_397_825_740_279_00E-4,
    4.636_137_492_878_673_220_88E-6,
    3.055_689_837_902_576_058_27E-8,
    1.023_045_141_649_072_334_65E-10,
    1.720_107_432_681_618_288_79E-13,
    1.342_832_762_330_627_589_25E-16,
    3.763_297_112_699_878_890_06E-20,
];
#[allow(clippy::excessive_precision)]
const FD: [f64; 10] = [
    7.515_863_983_533_789_471_75E-1,
    1.168_889_258_591_913_821_42E-1,
    6.440_515_265_088_586_110_05E-3,
    1.559_344_091_641_530_208_73E-4,
    1.846_275_673_489_305_458_70E-6,
    1.126_992_247_639_990_352_61E-8,
    3.601_400_295_893_713_704_04E-11,
    5.887_545_336_215_784_100_10E-14,
    4.520_014_340_741_297_014_96E-17,
    1.254_432_370_900_112_643_84E-20,
];

// Auxiliary function g(x).
#[allow(clippy::excessive_precision)]
const GN: [f64; 11] = [
    5.044_420_736_433_832_658_87E-1,
    1.971_028_335_255_234_117_09E-1,
    1.876_485_840_925_752_492_93E-2,
    6.840_793_809_153_930_901_72E-4,
    1.151_388_261_118_842_809_31E-5,
    9.828_524_436_884_222_238_54E-8,
    4.453_444_158_617_501_447_38E-10,
    1.082_680_411_390_208_703_18E-12,
    1.375_554_606_332_617_998_68E-15,
    8.363_544_356_306_774_215_31E-19,
    1.869_587_101_627_832_351_06E-22,
];
#[allow(clippy::excessive_precision)]
const GD: [f64; 11] = [
    1.474_957_599_251_283_245_29E0,
    3.377_489_891_200_199_704_51E-1,
    2.536_037_414_203_387_951_22E-2,
    8.146_791_071_843_061_790_49E-4,
    1.275_450_756_677_291_187_02E-5,
    1.043_145_896_575_719_905_85E-7,
    4.606_807_281_465_204_282_11E-10,
    1.102_732_150_662_402_707_57E-12,
    1.387_965_312_595_788_712_58E-15,
    8.391_588_162_831_187_073_63E-19,
    1.869_587_101_627_832_363_42E-22,
];

fn polevl(x: f64, coeffs: &[f64]) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// Polynomial with an implicit leading coefficient of 1.
fn p1evl(x: f64, coeffs: &[f64]) -> f64 {
    coeffs.iter().fold(1.0, |acc, &c| acc * x + c)
}

/// Maclaurin series, `x ≥ 0`.
///
/// ```text
/// C(x) = x Σ (−1)ᵏ u²ᵏ / ((2k)! (4k+1))
/// S(x) = x Σ (−1)ᵏ u²ᵏ⁺¹ / ((2k+1)! (4k+3)),   u = πx²/2
/// ```
fn series(x: f64) -> (f64, f64) {
    let u = FRAC_PI_2 * x * x;
    let u2 = u * u;
    // a_k = (−1)^k u^{2k} / (2k)!,  b_k = (−1)^k u^{2k+1} / (2k+1)!
    let mut a = 1.0;
    let mut b = u;
    let mut c = x;
    let mut s = x * u / 3.0;
    for k in 1..MAX_SERIES_TERMS {
        let kf = k as f64;
        a *= -u2 / ((2.0 * kf - 1.0) * (2.0 * kf));
        b *= -u2 / ((2.0 * kf) * (2.0 * kf + 1.0));
        let dc = x * a / (4.0 * kf + 1.0);
        let ds = x * b / (4.0 * kf + 3.0);
        c += dc;
        s += ds;
        if dc.abs() <= f64::EPSILON * 1e-2 * c.abs() && ds.abs() <= f64::EPSILON * 1e-2 * s.abs() {
            break;
        }
    }
    (c, s)
}

/// Auxiliary-function form, `x > SERIES_LIMIT`.
fn auxiliary(x: f64) -> (f64, f64) {
    if x > ASYMPTOTIC_LIMIT {
        return (0.5, 0.5);
    }
    let x2 = x * x;
    let t = 1.0 / (PI * x2);
    let u = t * t;
    let f = 1.0 - u * polevl(u, &FN) / p1evl(u, &FD);
    let g = t * polevl(u, &GN) / p1evl(u, &GD);
    let (sin, cos) = (FRAC_PI_2 * x2).sin_cos();
    let px = PI * x;
    (
        0.5 + (f * sin - g * cos) / px,
        0.5 - (f * cos + g * sin) / px,
    )
}

/// `(C(x), S(x))` for finite `x`; callers validate.
pub(crate) fn fresnel_pair(x: f64) -> (f64, f64) {
    let ax = x.abs();
    let (c, s) = if ax <= SERIES_LIMIT {
        series(ax)
    } else {
        auxiliary(ax)
    };
    if x.is_sign_negative() {
        (-c, -s)
    } else {
        (c, s)
    }
}

fn check_finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite {
            what: "Fresnel argument",
            value: x,
        })
    }
}

/// Both Fresnel integrals at once.
pub fn fresnel_cs(x: f64) -> Result<(f64, f64)> {
    Ok(fresnel_pair(check_finite(x)?))
}

/// Fresnel cosine integral `C(x)`.
pub fn fresnel_c(x: f64) -> Result<f64> {
    fresnel_cs(x).map(|(c, _)| c)
}

/// Fresnel sine integral `S(x)`.
pub fn fresnel_s(x: f64) -> Result<f64> {
    fresnel_cs(x).map(|(_, s)| s)
}

/// The pair `(β₁, β₂)` that fully determines the closed-form interference.
///
/// `β₁ = (θ − ψ)·√(r / (d(1 − θ²)))` carries the angle difference and
/// `β₂ = (N/2)·√(d(1 − θ²) / r)` the array size. `β₂` is strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaParams {
    beta1: f64,
    beta2: f64,
}

impl BetaParams {
    pub fn new(beta1: f64, beta2: f64) -> Result<Self> {
        if !beta1.is_finite() {
            return Err(Error::NonFinite {
                what: "beta1",
                value: beta1,
            });
        }
        if !(beta2.is_finite() && beta2 > 0.0) {
            return Err(Error::NonPositive {
                what: "beta2",
                value: beta2,
            });
        }
        Ok(Self { beta1, beta2 })
    }

    pub fn beta1(&self) -> f64 {
        self.beta1
    }

    pub fn beta2(&self) -> f64 {
        self.beta2
    }
}

/// Computes `(β₁, β₂)` for a far-field beam at `dir` and a user at `p`.
pub fn beta_params(cfg: &ArrayConfig, dir: FarFieldDirection, p: NearFieldPoint) -> BetaParams {
    let theta = p.theta();
    let scale = cfg.spacing() * (1.0 - theta * theta);
    let beta1 = (theta - dir.psi()) * (p.r() / scale).sqrt();
    let beta2 = cfg.n_antennas() as f64 / 2.0 * (scale / p.r()).sqrt();
    // θ, r and N are validated by their types, so β₂ > 0 and both are finite.
    BetaParams { beta1, beta2 }
}

/// `Ĉ + jŜ = [C(β₁+β₂) − C(β₁−β₂)] + j[S(β₁+β₂) − S(β₁−β₂)]`.
pub fn fresnel_difference(b: BetaParams) -> Complex64 {
    let (cp, sp) = fresnel_pair(b.beta1 + b.beta2);
    let (cm, sm) = fresnel_pair(b.beta1 - b.beta2);
    Complex64::new(cp - cm, sp - sm)
}

/// `G(β₁, β₂) = |Ĉ + jŜ| / (2β₂)`.
///
/// Symmetric in `β₁`; evaluated on `|β₁|` so the symmetry is exact. For
/// `β₂ <` [`SMALL_BETA2`] returns the limit value 1.
pub fn g_function(b: BetaParams) -> f64 {
    if b.beta2 < SMALL_BETA2 {
        return 1.0;
    }
    let canon = BetaParams {
        beta1: b.beta1.abs(),
        beta2: b.beta2,
    };
    fresnel_difference(canon).norm() / (2.0 * b.beta2)
}

/// [`g_function`] on raw values.
pub fn g(beta1: f64, beta2: f64) -> Result<f64> {
    BetaParams::new(beta1, beta2).map(g_function)
}
