//! Adaptive Simpson quadrature used as an independent reference in tests.
//!
//! Shared by the unit tests (`#[cfg(test)] mod oracle`) and the integration
//! tests (`#[path]` include). Nothing here is reachable from library code.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

/// Absolute tolerance requested from every oracle integral.
pub const ORACLE_TOL: f64 = 1e-12;

const MAX_DEPTH: u32 = 60;

/// Panel length used to split long integrals before adapting.
const PANEL: f64 = 0.25;

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// `∫ₐᵇ f` by adaptive Simpson with Richardson correction.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let panels = ((b - a).abs() / PANEL).ceil().max(1.0) as usize;
    let h = (b - a) / panels as f64;
    let panel_tol = tol / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + i as f64 * h;
            let hi = if i + 1 == panels { b } else { lo + h };
            let (flo, fhi) = (f(lo), f(hi));
            let fm = f(0.5 * (lo + hi));
            let whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
            simpson_step(&f, lo, hi, flo, fm, fhi, whole, panel_tol, MAX_DEPTH)
        })
        .sum()
}

/// `(C(x), S(x))` by direct quadrature of `cos(πt²/2)` and `sin(πt²/2)`.
pub fn fresnel_oracle(x: f64) -> (f64, f64) {
    let c = adaptive_simpson(|t| (FRAC_PI_2 * t * t).cos(), 0.0, x, ORACLE_TOL);
    let s = adaptive_simpson(|t| (FRAC_PI_2 * t * t).sin(), 0.0, x, ORACLE_TOL);
    (c, s)
}

/// `(C(x), S(x))` at every point of an ascending grid, integrating
/// outward from zero one gap at a time so each stretch is covered once.
/// The tolerance is split across gaps so the total stays within
/// [`ORACLE_TOL`].
pub fn fresnel_oracle_grid(xs: &[f64]) -> Vec<(f64, f64)> {
    assert!(
        xs.windows(2).all(|w| w[0] <= w[1]),
        "grid must be ascending"
    );
    let tol = ORACLE_TOL / xs.len().max(1) as f64;
    let step = |a: f64, b: f64| {
        (
            adaptive_simpson(|t| (FRAC_PI_2 * t * t).cos(), a, b, tol),
            adaptive_simpson(|t| (FRAC_PI_2 * t * t).sin(), a, b, tol),
        )
    };
    let mut out = vec![(0.0, 0.0); xs.len()];
    let split = xs.partition_point(|&x| x < 0.0);
    let (mut at, mut acc) = (0.0, (0.0, 0.0));
    for i in split..xs.len() {
        let (c, s) = step(at, xs[i]);
        acc = (acc.0 + c, acc.1 + s);
        at = xs[i];
        out[i] = acc;
    }
    let (mut at, mut acc) = (0.0, (0.0, 0.0));
    for i in (0..split).rev() {
        let (c, s) = step(at, xs[i]);
        acc = (acc.0 + c, acc.1 + s);
        at = xs[i];
        out[i] = acc;
    }
    out
}

/// `G(β₁, β₂)` assembled from quadrature values of `C` and `S`.
pub fn g_oracle(beta1: f64, beta2: f64) -> f64 {
    let c = adaptive_simpson(
        |t| (FRAC_PI_2 * t * t).cos(),
        beta1 - beta2,
        beta1 + beta2,
        ORACLE_TOL,
    );
    let s = adaptive_simpson(
        |t| (FRAC_PI_2 * t * t).sin(),
        beta1 - beta2,
        beta1 + beta2,
        ORACLE_TOL,
    );
    c.hypot(s) / (2.0 * beta2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let v = adaptive_simpson(|t| 3.0 * t * t, 0.0, 2.0, 1e-12);
        assert!((v - 8.0).abs() < 1e-12);
        let v = adaptive_simpson(|t| t, 2.0, 0.0, 1e-12);
        assert!((v + 2.0).abs() < 1e-12);
    }

    #[test]
    fn oscillatory_reference() {
        // ∫₀^{10π} sin² = 5π
        let v = adaptive_simpson(|t| t.sin().powi(2), 0.0, 10.0 * std::f64::consts::PI, 1e-12);
        assert!((v - 5.0 * std::f64::consts::PI).abs() < 1e-10);
    }

    #[test]
    fn grid_matches_pointwise() {
        let xs = [-3.0, -0.5, 0.0, 0.7, 2.0, 6.5];
        for (x, (c, s)) in xs.iter().zip(fresnel_oracle_grid(&xs)) {
            let (pc, ps) = fresnel_oracle(*x);
            assert!((c - pc).abs() < 1e-11 && (s - ps).abs() < 1e-11, "x={x}");
        }
    }
}
