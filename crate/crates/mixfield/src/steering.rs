//! Far-field (planar) and near-field (spherical) steering vectors.
//!
//! Near-field phases always use the exact element-to-user distance. The
//! second-order expansion of that distance lives in [`crate::interference`]
//! so the two can be compared.

use std::f64::consts::PI;
use std::ops::Index;

use num_complex::Complex64;

use crate::error::{check_angle, check_positive, Error, Result};
use crate::geometry::{offset_unchecked, ArrayConfig};

/// Direction of a far-field user, as a spatial angle `ψ ∈ (−1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FarFieldDirection {
    psi: f64,
}

impl FarFieldDirection {
    pub fn new(psi: f64) -> Result<Self> {
        Ok(Self {
            psi: check_angle("psi", psi)?,
        })
    }

    /// From the physical angle of departure `φ` in radians; `ψ = cos φ` for
    /// half-wavelength spacing.
    pub fn from_physical_aod(phi: f64) -> Result<Self> {
        Self::new(phi.cos())
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }
}

/// Location of a near-field user: spatial angle `θ ∈ (−1, 1)` and distance
/// `r` from the array center in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearFieldPoint {
    theta: f64,
    r: f64,
}

impl NearFieldPoint {
    pub fn new(theta: f64, r: f64) -> Result<Self> {
        Ok(Self {
            theta: check_angle("theta", theta)?,
            r: check_positive("distance r", r)?,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn r(&self) -> f64 {
        self.r
    }
}

/// Dense complex vector, used for unit-norm steering vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector(Vec<Complex64>);

impl ComplexVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        Self(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.0.iter()
    }

    /// Hermitian inner product `selfᴴ · other`.
    ///
    /// # Panics
    ///
    /// If the lengths differ.
    pub fn inner(&self, other: &ComplexVector) -> Complex64 {
        assert_eq!(self.len(), other.len(), "inner product length mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl Index<usize> for ComplexVector {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.0[index]
    }
}

impl From<ComplexVector> for Vec<Complex64> {
    fn from(v: ComplexVector) -> Self {
        v.0
    }
}

/// `a(ψ)`: entry `n` is `exp(jπnψ)/√N`.
pub fn far_steering(cfg: &ArrayConfig, dir: FarFieldDirection) -> ComplexVector {
    let n_ant = cfg.n_antennas();
    let scale = 1.0 / (n_ant as f64).sqrt();
    let entries = (0..n_ant)
        .map(|n| Complex64::from_polar(scale, PI * n as f64 * dir.psi()))
        .collect();
    ComplexVector(entries)
}

/// Exact distance `r⁽ⁿ⁾` from element `n` at `(0, δₙd)` to the user.
pub fn element_distance(cfg: &ArrayConfig, p: NearFieldPoint, n: usize) -> Result<f64> {
    if n >= cfg.n_antennas() {
        return Err(Error::IndexOutOfRange {
            index: n,
            n_antennas: cfg.n_antennas(),
        });
    }
    let y = offset_unchecked(n, cfg.n_antennas()) * cfg.spacing();
    let r = p.r();
    Ok((r * r + y * y - 2.0 * r * p.theta() * y).sqrt())
}

/// `r⁽ⁿ⁾ − r` without the cancellation of subtracting two nearly equal
/// distances when `r` is large.
fn path_difference(r: f64, theta: f64, y: f64) -> f64 {
    let numer = y * y - 2.0 * r * theta * y;
    let dist = (r * r + numer).sqrt();
    numer / (dist + r)
}

/// `b(θ, r)`: entry `n` is `exp(−j2π(r⁽ⁿ⁾ − r)/λ)/√N` with the exact `r⁽ⁿ⁾`.
pub fn near_steering(cfg: &ArrayConfig, p: NearFieldPoint) -> ComplexVector {
    let n_ant = cfg.n_antennas();
    let scale = 1.0 / (n_ant as f64).sqrt();
    let k = 2.0 * PI / cfg.wavelength();
    let entries = (0..n_ant)
        .map(|n| {
            let y = offset_unchecked(n, n_ant) * cfg.spacing();
            Complex64::from_polar(scale, -k * path_difference(p.r(), p.theta(), y))
        })
        .collect();
    ComplexVector(entries)
}
