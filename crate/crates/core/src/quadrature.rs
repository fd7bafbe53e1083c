//! Simpson-rule quadrature.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 48;

/// Adaptive Simpson integration of `f` over `[a, b]` to an absolute tolerance.
///
/// Each panel is split until the two-half estimate agrees with the whole
/// estimate to `15·tol`, with the tolerance halved at each split. Returns
/// [`Error::Quadrature`] if the recursion depth is exhausted first.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson_panel(a, b, fa, fm, fb);
    let mut worst = 0.0_f64;
    let value = refine(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH, &mut worst);
    if worst > tol {
        return Err(Error::Quadrature {
            estimate: worst,
            tolerance: tol,
        });
    }
    Ok(value)
}

#[inline]
fn simpson_panel(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    worst: &mut f64,
) -> f64
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_panel(a, m, fa, flm, fm);
    let right = simpson_panel(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    if depth == 0 {
        *worst += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, worst)
        + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, worst)
}

/// Composite Simpson rule with `panels` (even) sub-intervals.
pub fn composite_simpson<F>(f: F, a: f64, b: f64, panels: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    assert!(panels >= 2 && panels % 2 == 0, "panel count must be even");
    let h = (b - a) / panels as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for k in 1..panels {
        let x = a + h * k as f64;
        if k % 2 == 1 {
            odd += f(x);
        } else {
            even += f(x);
        }
    }
    h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn adaptive_matches_polynomial_exactly() {
        let v = adaptive_simpson(|x| x * x * x - 2.0 * x, 0.0, 3.0, 1e-12).unwrap();
        assert!((v - (81.0 / 4.0 - 9.0)).abs() < 1e-12);
    }

    #[test]
    fn adaptive_handles_smooth_transcendental() {
        let v = adaptive_simpson(f64::sin, 0.0, PI, 1e-10).unwrap();
        assert!((v - 2.0).abs() < 1e-10);
    }

    #[test]
    fn empty_interval_is_zero() {
        assert_eq!(adaptive_simpson(|x| x, 2.0, 2.0, 1e-8).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_positive_tolerance() {
        assert!(adaptive_simpson(|x| x, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn composite_integrates_periodic_square() {
        let v = composite_simpson(|t| t.cos().powi(2), 0.0, 2.0 * PI, 64);
        assert!((v - PI).abs() < 1e-13);
    }
}
