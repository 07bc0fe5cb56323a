//! Uniform linear array geometry and field-region classification.
//!
//! The array lies on the y-axis with its center at the origin. Element `n`
//! sits at `(0, δₙ·d)` with `δₙ = (2n − N + 1)/2` and half-wavelength
//! spacing `d = λ/2`.
//!
//! The aperture is taken as `D = N·d` (not `(N − 1)·d`). With that convention
//! the two usual forms of the Rayleigh distance, `2D²/λ` and `N²λ/2`, are the
//! same number.

use serde::{Deserialize, Serialize};

use crate::error::{check_positive, Error, Result};

/// Speed of light used to turn carrier frequency into wavelength, in m/s.
///
/// The rounded value makes 30 GHz map to a wavelength of exactly 0.01 m.
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Rayleigh distance `2D²/λ` for an aperture `D` and wavelength `λ`, in meters.
pub fn rayleigh_distance(aperture: f64, wavelength: f64) -> f64 {
    2.0 * aperture * aperture / wavelength
}

/// Normalized offset `δₙ = (2n − N + 1)/2` of element `n` from the array center.
pub fn element_offset(n: usize, n_antennas: usize) -> Result<f64> {
    if n >= n_antennas {
        return Err(Error::IndexOutOfRange {
            index: n,
            n_antennas,
        });
    }
    Ok(offset_unchecked(n, n_antennas))
}

#[inline]
pub(crate) fn offset_unchecked(n: usize, n_antennas: usize) -> f64 {
    (2.0 * n as f64 - n_antennas as f64 + 1.0) / 2.0
}

/// Where a user at distance `r` from the array center sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FieldRegion {
    /// Closer than `1.2·D`; per-element amplitude differences are no longer
    /// negligible and the model does not apply.
    TooClose,
    /// Between `1.2·D` and the Rayleigh distance.
    NearField,
    /// At or beyond the Rayleigh distance.
    FarField,
}

impl FieldRegion {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldRegion::TooClose => "too_close",
            FieldRegion::NearField => "near_field",
            FieldRegion::FarField => "far_field",
        }
    }
}

impl std::fmt::Display for FieldRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FieldRegion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "too_close" => Ok(FieldRegion::TooClose),
            "near_field" => Ok(FieldRegion::NearField),
            "far_field" => Ok(FieldRegion::FarField),
            other => Err(Error::Config(format!("unknown field region `{other}`"))),
        }
    }
}

/// A half-wavelength ULA at a given carrier, with its derived lengths.
///
/// All lengths are in meters and the frequency in hertz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayConfig {
    n_antennas: usize,
    carrier_freq: f64,
    wavelength: f64,
    spacing: f64,
    aperture: f64,
    rayleigh_distance: f64,
    fresnel_lower: f64,
    approx_valid_distance: f64,
}

impl ArrayConfig {
    /// Builds the configuration for `n_antennas` elements at `carrier_freq` Hz.
    pub fn new(n_antennas: usize, carrier_freq: f64) -> Result<Self> {
        if n_antennas == 0 {
            return Err(Error::NoAntennas);
        }
        if !(carrier_freq.is_finite() && carrier_freq > 0.0) {
            return Err(Error::InvalidFrequency(carrier_freq));
        }
        let wavelength = SPEED_OF_LIGHT / carrier_freq;
        let spacing = wavelength / 2.0;
        let aperture = n_antennas as f64 * spacing;
        Ok(Self {
            n_antennas,
            carrier_freq,
            wavelength,
            spacing,
            aperture,
            rayleigh_distance: rayleigh_distance(aperture, wavelength),
            fresnel_lower: 1.2 * aperture,
            approx_valid_distance: 0.5 * (aperture.powi(3) / wavelength).sqrt(),
        })
    }

    /// Same carrier, different antenna count.
    pub fn with_antennas(&self, n_antennas: usize) -> Result<Self> {
        Self::new(n_antennas, self.carrier_freq)
    }

    pub fn n_antennas(&self) -> usize {
        self.n_antennas
    }

    pub fn carrier_freq(&self) -> f64 {
        self.carrier_freq
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// Element spacing `d = λ/2`.
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Aperture `D = N·d`.
    pub fn aperture(&self) -> f64 {
        self.aperture
    }

    /// `2D²/λ`, equal to `N²λ/2`.
    pub fn rayleigh_distance(&self) -> f64 {
        self.rayleigh_distance
    }

    /// Lower edge of the radiating near field, `1.2·D`.
    pub fn fresnel_lower(&self) -> f64 {
        self.fresnel_lower
    }

    /// Distance `0.5·√(D³/λ)` beyond which the second-order phase expansion
    /// of the element distances is accurate.
    pub fn approx_valid_distance(&self) -> f64 {
        self.approx_valid_distance
    }

    /// Offset of element `n` in units of the spacing; see [`element_offset`].
    pub fn element_offset(&self, n: usize) -> Result<f64> {
        element_offset(n, self.n_antennas)
    }

    /// Classifies a user at distance `r`.
    pub fn classify_region(&self, r: f64) -> Result<FieldRegion> {
        let r = check_positive("distance r", r)?;
        Ok(if r < self.fresnel_lower {
            FieldRegion::TooClose
        } else if r >= self.rayleigh_distance {
            FieldRegion::FarField
        } else {
            FieldRegion::NearField
        })
    }
}
