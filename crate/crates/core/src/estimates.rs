//! Logarithmic-integral estimates and the π-difference bounds.
//!
//! `Li(x)` here is the offset integral `∫₂ˣ dt / ln t`, not the principal
//! value integral from 0. The two differ by `li(2) ≈ 1.045`.
//! At `x = 100`: `Li(100) ≈ 29.08` and `100/ln 100 ≈ 21.71`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::primes::{self, Mode};
use crate::quadrature::adaptive_simpson;

/// Default absolute tolerance for [`li_gauss`].
pub const LI_TOLERANCE: f64 = 1e-8;

/// Lower validity threshold of the Schoenfeld π-bound.
pub const SCHOENFELD_PI_MIN_X: u64 = 2657;

/// Which sharp inequality a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundName {
    /// `|π(x) - Li(x)| < √x·ln x / (8π)`, x ≥ 2657.
    SchoenfeldPi,
    /// `|π(x) - Li(x)| < 0.2795·x·(ln x)^(-3/4)·exp(-√(ln x / 6.455))`.
    Trudgian,
    /// `|ψ(x) - x| < √x·(ln x)² / (8π)`, x ≥ 73.2.
    SchoenfeldPsi,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::SchoenfeldPi => "schoenfeld_pi",
            BoundName::Trudgian => "trudgian",
            BoundName::SchoenfeldPsi => "schoenfeld_psi",
        }
    }
}

/// How the Schoenfeld π right-hand side groups its square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BoundVariant {
    /// `√x · ln x / (8π)`, the published form.
    #[default]
    SqrtXTimesLog,
    /// `√(x · ln x) / (8π)`.
    SqrtOfXLog,
}

impl std::str::FromStr for BoundVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt-x-log" => Ok(BoundVariant::SqrtXTimesLog),
            "sqrt-of-x-log" => Ok(BoundVariant::SqrtOfXLog),
            other => Err(Error::domain(format!("unknown bound variant `{other}`"))),
        }
    }
}

/// One sampled point of a sharp-inequality check. `holds ⇔ lhs < rhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub bound_name: BoundName,
    pub variant: Option<BoundVariant>,
}

impl BoundReport {
    pub(crate) fn new(
        x: f64,
        lhs: f64,
        rhs: f64,
        bound_name: BoundName,
        variant: Option<BoundVariant>,
    ) -> Self {
        BoundReport {
            x,
            lhs,
            rhs,
            holds: lhs < rhs,
            bound_name,
            variant,
        }
    }
}

#[inline]
fn inv_log(t: f64) -> f64 {
    1.0 / t.ln()
}

/// `Li(x) = ∫₂ˣ dt / ln t` by adaptive Simpson to absolute tolerance `tol`.
pub fn li_gauss(x: f64, tol: f64) -> Result<f64> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::domain(format!("Li(x) needs x >= 2, got {x}")));
    }
    adaptive_simpson(inv_log, 2.0, x, tol)
}

/// `x / ln x`.
pub fn li_asymptotic(x: f64) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::domain(format!("x/ln x needs x > 1, got {x}")));
    }
    Ok(x / x.ln())
}

/// `C(x, 2) / (x / ln x)`.
pub fn pnt_ratio(x: u64, mode: Mode) -> Result<f64> {
    if x < 3 {
        return Err(Error::domain(format!("PNT ratio needs x >= 3, got {x}")));
    }
    let c = primes::count(x, 2, mode)?.count as f64;
    Ok(c / li_asymptotic(x as f64)?)
}

/// Right-hand side of the selected π-bound at `x`.
pub fn pi_bound_rhs(x: f64, bound: BoundName, variant: BoundVariant) -> Result<f64> {
    let l = x.ln();
    match bound {
        BoundName::SchoenfeldPi => Ok(match variant {
            BoundVariant::SqrtXTimesLog => x.sqrt() * l / (8.0 * PI),
            BoundVariant::SqrtOfXLog => (x * l).sqrt() / (8.0 * PI),
        }),
        BoundName::Trudgian => Ok(0.2795 * x * l.powf(-0.75) * (-(l / 6.455).sqrt()).exp()),
        BoundName::SchoenfeldPsi => Err(Error::domain("the psi bound is not a pi bound")),
    }
}

/// Checks `|C(x, 2) - Li(x)| < rhs(x)` for `x = x_lo, x_lo + step, …, ≤ x_hi`.
///
/// The count and the integral are both advanced incrementally between
/// samples.
pub fn check_pi_bound(
    x_lo: u64,
    x_hi: u64,
    step: u64,
    bound: BoundName,
    variant: BoundVariant,
    mode: Mode,
) -> Result<Vec<BoundReport>> {
    let min_x = match bound {
        BoundName::SchoenfeldPi => SCHOENFELD_PI_MIN_X,
        BoundName::Trudgian => 2,
        BoundName::SchoenfeldPsi => {
            return Err(Error::domain("use chebyshev::check_psi_bound for the psi bound"))
        }
    };
    if x_lo < min_x {
        return Err(Error::domain(format!(
            "{} is only valid for x >= {min_x}, got x_lo = {x_lo}",
            bound.as_str()
        )));
    }
    if step == 0 || x_hi < x_lo {
        return Err(Error::domain("need step > 0 and x_lo <= x_hi"));
    }
    let tol = LI_TOLERANCE;
    let mut reports = Vec::new();
    let mut x = x_lo;
    let mut primes_so_far = primes::count(x_lo, 2, mode)?.count;
    let mut li = li_gauss(x_lo as f64, tol)?;
    loop {
        let lhs = (primes_so_far as f64 - li).abs();
        let rhs = pi_bound_rhs(x as f64, bound, variant)?;
        let tag = (bound == BoundName::SchoenfeldPi).then_some(variant);
        reports.push(BoundReport::new(x as f64, lhs, rhs, bound, tag));
        let next = x + step;
        if next > x_hi {
            break;
        }
        primes_so_far += primes::count(next, x + 1, mode)?.count;
        li += adaptive_simpson(inv_log, x as f64, next as f64, tol)?;
        x = next;
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Ramanujan's series for the principal-value li(x), an independent
    /// route to the same integral.
    fn li_series(x: f64) -> f64 {
        const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
        let l = x.ln();
        let mut sum = 0.0;
        let mut term = 1.0; // (ln x)^n / n!
        for n in 1..400 {
            term *= l / n as f64;
            sum += term / n as f64;
            if term / (n as f64) < 1e-18 * sum {
                break;
            }
        }
        EULER_GAMMA + l.ln() + sum
    }

    fn li_offset_oracle(x: f64) -> f64 {
        li_series(x) - li_series(2.0)
    }

    #[test]
    fn li_examples() {
        assert_eq!(li_gauss(2.0, 1e-8).unwrap(), 0.0);
        let li100 = li_gauss(100.0, 1e-8).unwrap();
        assert!((li100 - 29.08).abs() < 0.01);
        assert!((li100 - li_offset_oracle(100.0)).abs() < 1e-8);
        let li1e5 = li_gauss(1e5, 1e-8).unwrap();
        assert!((li1e5 - 9629.62).abs() < 1.0);
        assert!((li1e5 - li_offset_oracle(1e5)).abs() < 1e-7);
        assert!(li_gauss(1.5, 1e-8).is_err());
    }

    #[test]
    fn li_is_stable_under_tolerance_refinement() {
        for &x in &[3.0, 50.0, 2657.0, 12345.6] {
            let coarse = li_gauss(x, 1e-6).unwrap();
            let fine = li_gauss(x, 1e-6 / 16.0).unwrap();
            assert!((coarse - fine).abs() < 1e-6, "x = {x}");
        }
    }

    #[test]
    fn li_is_monotone() {
        let mut prev = 0.0;
        for k in 1..60 {
            let v = li_gauss(2.0 + 37.0 * k as f64, 1e-8).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn asymptotic_examples() {
        assert!((li_asymptotic(1e5).unwrap() - 8685.89).abs() < 0.01);
        let rel = (li_asymptotic(1000.0).unwrap() - 168.0) / 168.0;
        assert!((rel + 0.1383).abs() < 1e-4);
        assert!((li_asymptotic(std::f64::consts::E).unwrap() - std::f64::consts::E).abs() < 1e-15);
        assert!(li_asymptotic(1.0).is_err());
        assert!(li_asymptotic(0.5).is_err());
    }

    #[test]
    fn pnt_ratio_decreases() {
        let r1 = pnt_ratio(1000, Mode::Optimized).unwrap();
        let r2 = pnt_ratio(100_000, Mode::Optimized).unwrap();
        assert!((r1 - 168.0 / (1000.0 / 1000f64.ln())).abs() < 1e-12);
        assert!((r1 - 1.1605).abs() < 1e-4);
        assert!((r2 - 1.1043).abs() < 1e-4);
        assert!(r2 < r1);
        assert!(pnt_ratio(2, Mode::Optimized).is_err());
    }

    #[test]
    fn schoenfeld_rhs_at_threshold() {
        let rhs = pi_bound_rhs(2657.0, BoundName::SchoenfeldPi, BoundVariant::SqrtXTimesLog).unwrap();
        assert!((rhs - 16.17).abs() < 0.01);
        let alt = pi_bound_rhs(2657.0, BoundName::SchoenfeldPi, BoundVariant::SqrtOfXLog).unwrap();
        assert!((alt - (2657.0 * 2657f64.ln()).sqrt() / (8.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn incremental_reports_match_direct_evaluation() {
        let reports =
            check_pi_bound(2657, 2757, 25, BoundName::Trudgian, BoundVariant::default(), Mode::Optimized)
                .unwrap();
        assert_eq!(reports.len(), 5);
        for r in &reports {
            let x = r.x as u64;
            let c = primes::count(x, 2, Mode::Optimized).unwrap().count as f64;
            let li = li_gauss(r.x, 1e-10).unwrap();
            assert!((r.lhs - (c - li).abs()).abs() < 1e-6);
            assert_eq!(r.holds, r.lhs < r.rhs);
            assert_eq!(r.variant, None);
        }
    }

    #[test]
    fn bounds_hold_near_threshold() {
        for bound in [BoundName::SchoenfeldPi, BoundName::Trudgian] {
            let reports =
                check_pi_bound(2657, 2800, 1, bound, BoundVariant::default(), Mode::Optimized).unwrap();
            assert!(reports.iter().all(|r| r.holds));
        }
    }

    #[test]
    fn grouped_root_variant_is_violated() {
        let reports =
            check_pi_bound(2657, 3000, 1, BoundName::SchoenfeldPi, BoundVariant::SqrtOfXLog, Mode::Optimized)
                .unwrap();
        assert!(reports.iter().all(|r| !r.holds));
        assert!(reports.iter().all(|r| r.variant == Some(BoundVariant::SqrtOfXLog)));
    }

    #[test]
    fn threshold_is_enforced() {
        assert!(check_pi_bound(2000, 3000, 1, BoundName::SchoenfeldPi, BoundVariant::default(), Mode::Optimized).is_err());
        assert!(check_pi_bound(2, 30, 1, BoundName::Trudgian, BoundVariant::default(), Mode::Optimized).is_ok());
    }
}
