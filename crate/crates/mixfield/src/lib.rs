//! Inter-user interference between a far-field beam and a near-field user of
//! an extremely large uniform linear array.
//!
//! A base station serves a far-field user with the planar beam `a(ψ)` and a
//! near-field user at `(θ, r)` with the focused beam `b(θ, r)`. The far beam
//! leaks into the near user with normalized power `f = |bᴴ(θ, r)·a(ψ)|`. This
//! crate computes `f` exactly, through a second-order phase expansion, and in
//! closed form with Fresnel integrals, then turns it into SINR, achievable
//! rate and rate loss.
//!
//! ```
//! use mixfield::{ArrayConfig, FarFieldDirection, NearFieldPoint};
//! use mixfield::interference::{interference_approx, interference_exact};
//!
//! let cfg = ArrayConfig::new(256, 30e9)?;
//! let far = FarFieldDirection::new(0.0)?;
//! let near = NearFieldPoint::new(0.05, 9.0)?;
//! let exact = interference_exact(&cfg, far, near);
//! let closed = interference_approx(&cfg, far, near);
//! assert!((exact - closed).abs() < 0.01);
//! # Ok::<(), mixfield::Error>(())
//! ```
//!
//! The guide in `book/` walks through each module with runnable examples.

pub mod error;
pub mod fresnel;
pub mod geometry;
pub mod interference;
pub mod link;
pub mod steering;
pub mod sweep;

#[cfg(test)]
mod oracle;

pub use error::{Error, Result};
pub use fresnel::{beta_params, fresnel_c, fresnel_s, g_function, BetaParams};
pub use geometry::{element_offset, ArrayConfig, FieldRegion};
pub use interference::{InterferencePoint, Method};
pub use link::{LinkBudget, RateReport};
pub use steering::{ComplexVector, FarFieldDirection, NearFieldPoint};
pub use sweep::{run_sweep, Preset, Scenario, SweepRecord, SweepSpec};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/steering.md")]
    mod steering {}
    #[doc = include_str!("../../../book/src/fresnel.md")]
    mod fresnel {}
    #[doc = include_str!("../../../book/src/interference.md")]
    mod interference {}
    #[doc = include_str!("../../../book/src/rates.md")]
    mod rates {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
