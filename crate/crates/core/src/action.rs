//! Action functional of a perturbed unit oscillator and zero location from it.
//!
//! The trial path is `X(t) = cos t · (1 + M² sin t)` where `M² = |ζ_ex(σ, τ)|²`.
//! With `L = ½Ẋ² - ½X²`, the action over one period `[0, 2π]` integrates to
//! `A = (3π/8)·M⁴`, so `A` vanishes exactly where the truncated series does.
//! Replacing `M²` by `M^{1/σ}` in the perturbation gives the generalised
//! action `(3π/8)·M^{2/σ}`, and the energy dispersion `E - ½ = (5/16)·M^{2/σ}`.
//!
//! `M` always denotes the plain modulus `√M²`.
//!
//! Zeros are located on a rectangular `(σ, τ)` grid by projecting the
//! samples onto the rotated axes `ω = τ - σ` and `η = τ + σ`. Each
//! projection is minimised in three steps: a discrete argmin, a three-point
//! parabola through `ln A`, and a fine re-scan around that point. The two
//! minima then give `σ = (η - ω)/2`, `τ = (η + ω)/2`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::composite_simpson;
use crate::search::{self, argmin, grid, interior_argmin, local_minima, parabolic_vertex};
use crate::zeta::{zeta_ex, ComplexPoint};

pub const ACTION_COEFF: f64 = 3.0 * PI / 8.0;
pub const DISPERSION_COEFF: f64 = 5.0 / 16.0;

/// Panels of the composite Simpson rule in [`action_numeric`]; the estimate
/// is checked against twice as many.
pub const SIMPSON_PANELS: usize = 4096;

/// `|ζ_ex|` below which a located minimum is treated as a zero.
pub const ROOT_RESIDUAL_THRESHOLD: f64 = 0.1;

/// Samples on the critical line `σ = 1/2`.
pub const CRITICAL_SIGMA: f64 = 0.5;

/// Position of the perturbed oscillator.
#[inline]
pub fn oscillator_position(t: f64, m2: f64) -> f64 {
    t.cos() * (1.0 + m2 * t.sin())
}

/// `dX/dt = -sin t + M² cos 2t`.
#[inline]
pub fn oscillator_velocity(t: f64, m2: f64) -> f64 {
    -t.sin() + m2 * (2.0 * t).cos()
}

#[inline]
pub fn lagrangian(t: f64, m2: f64) -> f64 {
    let v = oscillator_velocity(t, m2);
    let x = oscillator_position(t, m2);
    0.5 * v * v - 0.5 * x * x
}

fn modulus_sq(p: ComplexPoint) -> Result<f64> {
    Ok(zeta_ex(p)?.modulus_sq())
}

/// `X(t)` with `M²` taken from `ζ_ex` at `p`.
pub fn test_function(t: f64, p: ComplexPoint) -> Result<f64> {
    Ok(oscillator_position(t, modulus_sq(p)?))
}

/// `∫ L dt` over `[t_i, t_f]` for a given `M²`, by composite Simpson.
///
/// Fails with [`Error::Quadrature`] if doubling the panel count moves the
/// estimate by more than `quad_tol`.
pub fn action_integral(m2: f64, t_i: f64, t_f: f64, quad_tol: f64) -> Result<f64> {
    if !(quad_tol > 0.0) {
        return Err(Error::domain(format!("quadrature tolerance must be positive, got {quad_tol}")));
    }
    let coarse = composite_simpson(|t| lagrangian(t, m2), t_i, t_f, SIMPSON_PANELS);
    let fine = composite_simpson(|t| lagrangian(t, m2), t_i, t_f, 2 * SIMPSON_PANELS);
    let estimate = (fine - coarse).abs();
    if estimate > quad_tol {
        return Err(Error::Quadrature {
            estimate,
            tolerance: quad_tol,
        });
    }
    Ok(fine)
}

/// Numerical action at `p` over `[t_i, t_f]`.
pub fn action_numeric(p: ComplexPoint, t_i: f64, t_f: f64, quad_tol: f64) -> Result<f64> {
    action_integral(modulus_sq(p)?, t_i, t_f, quad_tol)
}

#[inline]
pub fn action_from_modulus_sq(m2: f64) -> f64 {
    ACTION_COEFF * m2 * m2
}

/// `(3π/8)·M⁴`.
pub fn action_analytic(p: ComplexPoint) -> Result<f64> {
    Ok(action_from_modulus_sq(modulus_sq(p)?))
}

/// `M^{2/σ} = (M²)^{1/σ}`, with the `M = 0` limit taken as 0.
#[inline]
pub fn general_power(m2: f64, sigma: f64) -> f64 {
    if m2 == 0.0 {
        0.0
    } else {
        m2.powf(1.0 / sigma)
    }
}

/// `(3π/8)·M^{2/σ}`.
pub fn action_general(p: ComplexPoint) -> Result<f64> {
    Ok(ACTION_COEFF * general_power(modulus_sq(p)?, p.sigma))
}

/// `E_a - ½` of the oscillator.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EnergyDispersion(pub f64);

/// `(5/16)·M^{2/σ}`.
pub fn energy_dispersion(p: ComplexPoint) -> Result<EnergyDispersion> {
    Ok(EnergyDispersion(
        DISPERSION_COEFF * general_power(modulus_sq(p)?, p.sigma),
    ))
}

/// `(E_a - ½)/A`, which is `5/(6π)` wherever `M > 0`.
pub fn dispersion_ratio(p: ComplexPoint) -> Result<f64> {
    Ok(energy_dispersion(p)?.0 / action_general(p)?)
}

/// `F(σ, τ) = [E_a(1-σ, τ) - ½] · A(σ, τ)`, symmetric under `σ ↦ 1-σ`.
///
/// `1 - σ` is snapped to 12 decimals so that grid values mirror exactly.
pub fn f_function(sigma: f64, tau: f64, n_max: u64) -> Result<f64> {
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(Error::domain(format!("F needs 0 < sigma < 1, got {sigma}")));
    }
    let here = ComplexPoint::new(sigma, tau, n_max)?;
    let mirror = ComplexPoint::new(search::snap(1.0 - sigma), tau, n_max)?;
    Ok(energy_dispersion(mirror)?.0 * action_general(here)?)
}

/// One grid evaluation of the action.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActionSample {
    pub sigma: f64,
    pub tau: f64,
    pub action: f64,
    pub log_action: f64,
    pub omega: f64,
    pub eta: f64,
}

impl ActionSample {
    pub fn new(sigma: f64, tau: f64, action: f64) -> Self {
        ActionSample {
            sigma,
            tau,
            action,
            log_action: action.ln(),
            omega: tau - sigma,
            eta: tau + sigma,
        }
    }
}

/// `(3π/8)·M⁴` at `(σ, τ)` packaged as a sample.
pub fn sample_action(sigma: f64, tau: f64, n_max: u64) -> Result<ActionSample> {
    let a = action_analytic(ComplexPoint::new(sigma, tau, n_max)?)?;
    Ok(ActionSample::new(sigma, tau, a))
}

/// Closed interval of a scan axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
}

impl Window {
    pub fn new(lo: f64, hi: f64) -> Self {
        Window { lo, hi }
    }

    pub fn around(center: f64, half_width: f64) -> Self {
        Window {
            lo: center - half_width,
            hi: center + half_width,
        }
    }
}

/// Grid and refinement settings of an `(ω, η)` scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSpec {
    pub sigma: Window,
    pub sigma_step: f64,
    pub tau: Window,
    pub tau_step: f64,
    pub zoom_half_width: f64,
    pub zoom_step: f64,
    pub n_max: u64,
}

impl ScanSpec {
    /// σ over 0.1..0.9 and τ over `center ± half_width`, both at step 0.1,
    /// refined with a ±0.5 window at step 0.001.
    pub fn standard(tau_center: f64, half_width: f64, n_max: u64) -> Self {
        ScanSpec {
            sigma: Window::new(0.1, 0.9),
            sigma_step: 0.1,
            tau: Window::around(tau_center, half_width),
            tau_step: 0.1,
            zoom_half_width: 0.5,
            zoom_step: 0.001,
            n_max,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.zoom_half_width > 0.0 && self.zoom_step > 0.0) {
            return Err(Error::domain("zoom window and step must be positive"));
        }
        if !(self.sigma.lo > 0.0) {
            return Err(Error::domain("sigma window must lie in sigma > 0"));
        }
        Ok(())
    }
}

/// Evaluates `(3π/8)·M⁴` on every node of the scan rectangle, σ-major.
pub fn scan_action(spec: &ScanSpec) -> Result<Vec<ActionSample>> {
    spec.validate()?;
    let sigmas = grid(spec.sigma.lo, spec.sigma.hi, spec.sigma_step)?;
    let taus = grid(spec.tau.lo, spec.tau.hi, spec.tau_step)?;
    let nodes: Vec<(f64, f64)> = sigmas
        .iter()
        .flat_map(|&s| taus.iter().map(move |&t| (s, t)))
        .collect();
    nodes
        .par_iter()
        .map(|&(s, t)| sample_action(s, t, spec.n_max))
        .collect()
}

/// Which rotated coordinate a projection uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// `ω = τ - σ`
    Omega,
    /// `η = τ + σ`
    Eta,
}

impl Axis {
    fn name(self) -> &'static str {
        match self {
            Axis::Omega => "omega",
            Axis::Eta => "eta",
        }
    }

    fn coordinate(self, s: &ActionSample) -> f64 {
        match self {
            Axis::Omega => s.omega,
            Axis::Eta => s.eta,
        }
    }

    /// `τ` on the line `axis = value` at abscissa `σ`.
    fn tau_at(self, value: f64, sigma: f64) -> f64 {
        match self {
            Axis::Omega => value + sigma,
            Axis::Eta => value - sigma,
        }
    }
}

/// Minimum of the action projected onto one rotated axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisMinimum {
    /// Axis value of the best coarse-grid sample.
    pub coarse: f64,
    /// σ of that sample.
    pub coarse_sigma: f64,
    /// Vertex of the parabola through `ln A` at the argmin and its neighbours.
    pub interpolated: f64,
    /// Best axis value of the fine re-scan.
    pub refined: f64,
    /// σ attaining the refined minimum.
    pub refined_sigma: f64,
    pub action: f64,
}

/// Lower envelope of the samples along `axis`: for every distinct axis value,
/// the sample with the smallest action (lower σ on ties).
fn envelope(samples: &[ActionSample], axis: Axis) -> Vec<ActionSample> {
    let mut best: BTreeMap<i64, ActionSample> = BTreeMap::new();
    for s in samples {
        let key = (axis.coordinate(s) * 1e9).round() as i64;
        best.entry(key)
            .and_modify(|cur| {
                if s.action < cur.action {
                    *cur = *s;
                }
            })
            .or_insert(*s);
    }
    best.into_values().collect()
}

fn minimise_axis(samples: &[ActionSample], axis: Axis, spec: &ScanSpec) -> Result<AxisMinimum> {
    let env = envelope(samples, axis);
    let values: Vec<f64> = env.iter().map(|s| s.action).collect();
    let lo = env.first().map_or(f64::NAN, |s| axis.coordinate(s));
    let hi = env.last().map_or(f64::NAN, |s| axis.coordinate(s));
    let i = interior_argmin(&values, axis.name(), lo, hi)?;
    let best = env[i];
    let coarse = axis.coordinate(&best);

    let xs = [
        axis.coordinate(&env[i - 1]),
        coarse,
        axis.coordinate(&env[i + 1]),
    ];
    let ys = [env[i - 1].log_action, best.log_action, env[i + 1].log_action];
    let interpolated = if ys.iter().all(|y| y.is_finite()) {
        parabolic_vertex(xs, ys).unwrap_or(coarse)
    } else {
        coarse
    };

    let fine_axis = grid(
        interpolated - spec.zoom_half_width,
        interpolated + spec.zoom_half_width,
        spec.zoom_step,
    )?;
    let fine_sigmas: Vec<f64> = grid(
        best.sigma - spec.sigma_step,
        best.sigma + spec.sigma_step,
        spec.zoom_step,
    )?
    .into_iter()
    .filter(|&s| s > 0.0)
    .collect();

    let line_minima: Vec<(f64, f64)> = fine_axis
        .par_iter()
        .map(|&value| {
            let mut best_here = (f64::INFINITY, f64::NAN);
            for &s in &fine_sigmas {
                let a = sample_action(s, axis.tau_at(value, s), spec.n_max)?.action;
                if a < best_here.0 {
                    best_here = (a, s);
                }
            }
            Ok(best_here)
        })
        .collect::<Result<_>>()?;
    let fine_values: Vec<f64> = line_minima.iter().map(|m| m.0).collect();
    let j = interior_argmin(
        &fine_values,
        axis.name(),
        fine_axis[0],
        *fine_axis.last().unwrap(),
    )?;

    Ok(AxisMinimum {
        coarse,
        coarse_sigma: best.sigma,
        interpolated,
        refined: fine_axis[j],
        refined_sigma: line_minima[j].1,
        action: line_minima[j].0,
    })
}

/// Result of an `(ω, η)` scan.
#[derive(Debug, Clone)]
pub struct OmegaEtaScan {
    pub samples: Vec<ActionSample>,
    pub omega: AxisMinimum,
    pub eta: AxisMinimum,
}

/// Scans the action over the scan rectangle and minimises both projections.
pub fn scan_omega_eta(spec: &ScanSpec) -> Result<OmegaEtaScan> {
    let samples = scan_action(spec)?;
    let omega = minimise_axis(&samples, Axis::Omega, spec)?;
    let eta = minimise_axis(&samples, Axis::Eta, spec)?;
    Ok(OmegaEtaScan {
        samples,
        omega,
        eta,
    })
}

/// Which procedure produced a [`RootEstimate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSource {
    OmegaEtaScan,
    FTauScan,
    ParametricSigma,
}

impl RootSource {
    pub fn as_str(self) -> &'static str {
        match self {
            RootSource::OmegaEtaScan => "omega_eta_scan",
            RootSource::FTauScan => "f_tau_scan",
            RootSource::ParametricSigma => "parametric_sigma",
        }
    }
}

/// Grid settings recorded alongside an estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridProvenance {
    pub sigma: Window,
    pub sigma_step: f64,
    pub tau: Window,
    pub tau_step: f64,
    pub zoom_half_width: f64,
    pub zoom_step: f64,
    pub n_max: u64,
}

impl From<&ScanSpec> for GridProvenance {
    fn from(s: &ScanSpec) -> Self {
        GridProvenance {
            sigma: s.sigma,
            sigma_step: s.sigma_step,
            tau: s.tau,
            tau_step: s.tau_step,
            zoom_half_width: s.zoom_half_width,
            zoom_step: s.zoom_step,
            n_max: s.n_max,
        }
    }
}

/// A located zero with `residual = |ζ_ex(σ, τ, n_max)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootEstimate {
    pub sigma: f64,
    pub tau: f64,
    pub residual: f64,
    pub source: RootSource,
    pub grid: GridProvenance,
}

impl RootEstimate {
    pub fn omega(&self) -> f64 {
        self.tau - self.sigma
    }

    pub fn eta(&self) -> f64 {
        self.tau + self.sigma
    }
}

/// `|ζ_ex(σ, τ, n_max)|`, evaluated directly.
pub fn residual(sigma: f64, tau: f64, n_max: u64) -> Result<f64> {
    Ok(zeta_ex(ComplexPoint::new(sigma, tau, n_max)?)?.modulus())
}

/// Intersects `τ - σ = ω*` with `τ + σ = η*`.
pub fn solve_root(omega_star: f64, eta_star: f64) -> (f64, f64) {
    (0.5 * (eta_star - omega_star), 0.5 * (eta_star + omega_star))
}

/// Scan, minimise both projections and solve for `(σ, τ)`.
pub fn locate_root(spec: &ScanSpec) -> Result<(OmegaEtaScan, RootEstimate)> {
    let scan = scan_omega_eta(spec)?;
    let (sigma, tau) = solve_root(scan.omega.refined, scan.eta.refined);
    let estimate = RootEstimate {
        sigma,
        tau,
        residual: residual(sigma, tau, spec.n_max)?,
        source: RootSource::OmegaEtaScan,
        grid: spec.into(),
    };
    Ok((scan, estimate))
}

/// Best σ for one `τ` of a parametric scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaMinimum {
    pub tau: f64,
    /// Argmin on the coarse σ grid.
    pub sigma_coarse: f64,
    /// Argmin of the re-scan `sigma_coarse ± coarse step` at the zoom step.
    pub sigma_zoom: f64,
    pub action: f64,
    pub residual: f64,
    /// The coarse argmin is not on either end of the σ window.
    pub interior: bool,
    /// `residual < ROOT_RESIDUAL_THRESHOLD`.
    pub is_root: bool,
}

impl SigmaMinimum {
    pub fn to_root_estimate(&self, grid: GridProvenance) -> RootEstimate {
        RootEstimate {
            sigma: self.sigma_zoom,
            tau: self.tau,
            residual: self.residual,
            source: RootSource::ParametricSigma,
            grid,
        }
    }
}

/// For each `τ`, the σ minimising `(3π/8)·M⁴` over `window`.
pub fn parametric_sigma_scan(
    taus: &[f64],
    window: Window,
    sigma_step: f64,
    zoom_step: f64,
    n_max: u64,
) -> Result<Vec<SigmaMinimum>> {
    let sigmas = grid(window.lo, window.hi, sigma_step)?;
    if !(window.lo > 0.0) {
        return Err(Error::domain("sigma window must lie in sigma > 0"));
    }
    taus.par_iter()
        .map(|&tau| {
            let values = sigmas
                .iter()
                .map(|&s| Ok(sample_action(s, tau, n_max)?.action))
                .collect::<Result<Vec<f64>>>()?;
            let i = argmin(&values).ok_or(Error::NoMinimum {
                axis: "sigma",
                lo: window.lo,
                hi: window.hi,
            })?;
            let coarse = sigmas[i];
            let fine: Vec<f64> = grid(coarse - sigma_step, coarse + sigma_step, zoom_step)?
                .into_iter()
                .filter(|&s| s > 0.0)
                .collect();
            let fine_values = fine
                .iter()
                .map(|&s| Ok(sample_action(s, tau, n_max)?.action))
                .collect::<Result<Vec<f64>>>()?;
            let j = argmin(&fine_values).ok_or(Error::NoMinimum {
                axis: "sigma",
                lo: coarse - sigma_step,
                hi: coarse + sigma_step,
            })?;
            let r = residual(fine[j], tau, n_max)?;
            Ok(SigmaMinimum {
                tau,
                sigma_coarse: coarse,
                sigma_zoom: fine[j],
                action: fine_values[j],
                residual: r,
                interior: i > 0 && i + 1 < sigmas.len(),
                is_root: r < ROOT_RESIDUAL_THRESHOLD,
            })
        })
        .collect()
}

/// A sampled value on a one-dimensional slice of the `(σ, τ)` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub sigma: f64,
    pub tau: f64,
    pub value: f64,
}

impl ScanPoint {
    pub fn omega(&self) -> f64 {
        self.tau - self.sigma
    }

    pub fn eta(&self) -> f64 {
        self.tau + self.sigma
    }
}

/// `F` sampled along a line, with the interior local minima of the samples.
#[derive(Debug, Clone)]
pub struct FScan {
    pub points: Vec<ScanPoint>,
    /// Indices into `points` of the discrete local minima.
    pub minima: Vec<usize>,
    pub n_max: u64,
}

impl FScan {
    pub fn minima_points(&self) -> impl Iterator<Item = &ScanPoint> {
        self.minima.iter().map(move |&i| &self.points[i])
    }

    /// Residuals at every local minimum, tagged as f-scan estimates.
    pub fn root_estimates(&self, grid: GridProvenance) -> Result<Vec<RootEstimate>> {
        self.minima_points()
            .map(|p| {
                Ok(RootEstimate {
                    sigma: p.sigma,
                    tau: p.tau,
                    residual: residual(p.sigma, p.tau, self.n_max)?,
                    source: RootSource::FTauScan,
                    grid,
                })
            })
            .collect()
    }
}

/// Default τ window of the F-scan along the critical line.
pub const F_SCAN_TAU: Window = Window {
    lo: 13.135,
    hi: 25.935,
};

fn finish_f_scan(points: Vec<ScanPoint>, n_max: u64) -> FScan {
    let values: Vec<f64> = points.iter().map(|p| p.value).collect();
    FScan {
        minima: local_minima(&values),
        points,
        n_max,
    }
}

/// `F(σ, τ)` at fixed σ over a τ grid.
pub fn f_scan_tau(sigma: f64, tau: Window, tau_step: f64, n_max: u64) -> Result<FScan> {
    let taus = grid(tau.lo, tau.hi, tau_step)?;
    let points = taus
        .par_iter()
        .map(|&t| {
            Ok(ScanPoint {
                sigma,
                tau: t,
                value: f_function(sigma, t, n_max)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(finish_f_scan(points, n_max))
}

/// `F(σ, τ)` at fixed τ over a σ grid inside `(0, 1)`.
pub fn f_scan_sigma(tau: f64, sigma: Window, sigma_step: f64, n_max: u64) -> Result<FScan> {
    let sigmas = grid(sigma.lo, sigma.hi, sigma_step)?;
    let points = sigmas
        .par_iter()
        .map(|&s| {
            Ok(ScanPoint {
                sigma: s,
                tau,
                value: f_function(s, tau, n_max)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(finish_f_scan(points, n_max))
}

/// Ordinary least-squares line `y = slope·x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::domain("a fit needs at least two paired samples"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::domain("abscissae are all equal"));
    }
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(LinearFit {
        slope,
        intercept: my - slope * mx,
        r_squared,
    })
}

/// `(ln A_general, ln M)` at fixed σ for each τ.
pub fn loglog_points(sigma: f64, taus: &[f64], n_max: u64) -> Result<Vec<(f64, f64)>> {
    taus.iter()
        .map(|&t| {
            let p = ComplexPoint::new(sigma, t, n_max)?;
            let m = zeta_ex(p)?.modulus();
            Ok((action_general(p)?.ln(), m.ln()))
        })
        .collect()
}

/// Regression of `ln M` on `ln A_general` at fixed σ; the slope is `σ/2`.
pub fn loglog_fit(sigma: f64, taus: &[f64], n_max: u64) -> Result<LinearFit> {
    let pts = loglog_points(sigma, taus, n_max)?;
    let (xs, ys): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
    linear_fit(&xs, &ys)
}

/// Evenly spaced τ samples, re-exported for scans that take explicit lists.
pub fn tau_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    search::grid(lo, hi, step)
}
