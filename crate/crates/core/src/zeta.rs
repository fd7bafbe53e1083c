//! Truncated Dirichlet-eta evaluation of ζ(s) for `Re(s) > 0`.
//!
//! ```text
//! ζ_ex(σ, τ, N) = 1/(1 - 2^{1-s}) · Σ_{n=1}^{N} (-1)^{n-1} n^{-s},   s = σ + iτ
//! ```
//!
//! The same sum split by `Λ(n)` gives a prime part and a composite part.
//! Since every `n ≤ N` lands in exactly one of them, `ζ_P + ζ_C` equals
//! `ζ_ex` up to rounding.

use std::f64::consts::LN_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::primes::{self, Mode};

/// Smallest admissible `|1 - 2^{1-s}|`.
pub const POLE_GUARD: f64 = 1e-9;

/// Smallest `M²` whose reciprocal is reported.
pub const RECIPROCAL_FLOOR: f64 = 1e-300;

/// A point `s = σ + iτ` together with the truncation bound of the sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub sigma: f64,
    pub tau: f64,
    pub n_max: u64,
}

impl ComplexPoint {
    pub fn new(sigma: f64, tau: f64, n_max: u64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::domain(format!("sigma must be positive, got {sigma}")));
        }
        if !tau.is_finite() {
            return Err(Error::domain(format!("tau must be finite, got {tau}")));
        }
        if n_max == 0 {
            return Err(Error::domain("n_max must be at least 1"));
        }
        Ok(ComplexPoint { sigma, tau, n_max })
    }

    pub fn with_sigma(self, sigma: f64) -> Result<Self> {
        ComplexPoint::new(sigma, self.tau, self.n_max)
    }
}

/// Real and imaginary parts of a zeta-family evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ZetaValue {
    pub re: f64,
    pub im: f64,
}

impl ZetaValue {
    pub fn modulus_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(self) -> Self {
        ZetaValue {
            re: self.re,
            im: -self.im,
        }
    }
}

impl From<Complex64> for ZetaValue {
    fn from(z: Complex64) -> Self {
        ZetaValue { re: z.re, im: z.im }
    }
}

impl std::ops::Add for ZetaValue {
    type Output = ZetaValue;

    fn add(self, rhs: ZetaValue) -> ZetaValue {
        ZetaValue {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

/// Accumulation strategy for the truncated series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Summation {
    /// Ascending `n`, naive accumulation.
    #[default]
    Plain,
    /// Ascending `n` with Neumaier compensation per component. Worth it when
    /// `τ` is comparable to `n_max` and the partial sums cancel heavily.
    Compensated,
}

/// Selects the exact series or its prime/composite reassembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Which {
    #[default]
    Ex,
    App,
}

impl std::str::FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ex" => Ok(Which::Ex),
            "app" => Ok(Which::App),
            other => Err(Error::domain(format!("unknown zeta variant `{other}`"))),
        }
    }
}

/// `(-1)^k` for any integer `k`, including negative ones.
#[inline]
fn neg_one_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `1 / (1 - 2^{1-s})`, guarded against its poles on `σ = 1`.
pub fn eta_prefactor(sigma: f64, tau: f64) -> Result<Complex64> {
    let s = Complex64::new(sigma, tau);
    let two_pow = ((Complex64::new(1.0, 0.0) - s) * LN_2).exp();
    let denom = Complex64::new(1.0, 0.0) - two_pow;
    let gap = denom.norm();
    if !(gap > POLE_GUARD) {
        return Err(Error::Pole { sigma, tau, gap });
    }
    Ok(denom.inv())
}

#[derive(Default)]
struct Accumulator {
    re: f64,
    im: f64,
    c_re: f64,
    c_im: f64,
}

impl Accumulator {
    #[inline]
    fn add(&mut self, re: f64, im: f64, summation: Summation) {
        match summation {
            Summation::Plain => {
                self.re += re;
                self.im += im;
            }
            Summation::Compensated => {
                neumaier(&mut self.re, &mut self.c_re, re);
                neumaier(&mut self.im, &mut self.c_im, im);
            }
        }
    }

    fn total(&self) -> Complex64 {
        Complex64::new(self.re + self.c_re, self.im + self.c_im)
    }
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

/// `Σ_{n=1}^{N} weight(n) · n^{-s}`, skipping zero weights.
fn weighted_sum<W>(sigma: f64, tau: f64, n_max: u64, summation: Summation, weight: W) -> Complex64
where
    W: Fn(u64) -> f64,
{
    let mut acc = Accumulator::default();
    for n in 1..=n_max {
        let w = weight(n);
        if w == 0.0 {
            continue;
        }
        let ln_n = (n as f64).ln();
        let magnitude = w * (-sigma * ln_n).exp();
        let (sin, cos) = (tau * ln_n).sin_cos();
        acc.add(magnitude * cos, -magnitude * sin, summation);
    }
    acc.total()
}

/// Reusable evaluator holding `Λ(n)` for `n ≤ n_max`.
#[derive(Debug, Clone)]
pub struct TruncatedEta {
    n_max: u64,
    indicator: Vec<u8>,
    summation: Summation,
}

impl TruncatedEta {
    pub fn new(n_max: u64, mode: Mode) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::domain("n_max must be at least 1"));
        }
        Ok(TruncatedEta {
            n_max,
            indicator: primes::indicator_table(n_max, mode),
            summation: Summation::Plain,
        })
    }

    pub fn with_summation(mut self, summation: Summation) -> Self {
        self.summation = summation;
        self
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    fn point(&self, sigma: f64, tau: f64) -> Result<ComplexPoint> {
        ComplexPoint::new(sigma, tau, self.n_max)
    }

    #[inline]
    fn lambda(&self, n: u64) -> i64 {
        i64::from(self.indicator[n as usize])
    }

    /// `ζ_ex(σ, τ, n_max)`.
    pub fn ex(&self, sigma: f64, tau: f64) -> Result<ZetaValue> {
        self.point(sigma, tau)?;
        let pre = eta_prefactor(sigma, tau)?;
        let sum = weighted_sum(sigma, tau, self.n_max, self.summation, |n| {
            neg_one_pow(n as i64 - 1)
        });
        Ok((pre * sum).into())
    }

    /// `ζ_P`: terms with `Λ(n) = 1`, sign `(-1)^{nΛ(n)-1}`.
    pub fn prime_part(&self, sigma: f64, tau: f64) -> Result<ZetaValue> {
        self.point(sigma, tau)?;
        let pre = eta_prefactor(sigma, tau)?;
        let sum = weighted_sum(sigma, tau, self.n_max, self.summation, |n| {
            let lam = self.lambda(n);
            lam as f64 * neg_one_pow(n as i64 * lam - 1)
        });
        Ok((pre * sum).into())
    }

    /// `ζ_C`: terms with `Λ(n) = 0`, sign `(-1)^{n(1-Λ(n))-1}`.
    pub fn composite_part(&self, sigma: f64, tau: f64) -> Result<ZetaValue> {
        self.point(sigma, tau)?;
        let pre = eta_prefactor(sigma, tau)?;
        let sum = weighted_sum(sigma, tau, self.n_max, self.summation, |n| {
            let rest = 1 - self.lambda(n);
            rest as f64 * neg_one_pow(n as i64 * rest - 1)
        });
        Ok((pre * sum).into())
    }

    /// `ζ_app = ζ_P + ζ_C`.
    pub fn app(&self, sigma: f64, tau: f64) -> Result<ZetaValue> {
        Ok(self.prime_part(sigma, tau)? + self.composite_part(sigma, tau)?)
    }

    pub fn evaluate(&self, sigma: f64, tau: f64, which: Which) -> Result<ZetaValue> {
        match which {
            Which::Ex => self.ex(sigma, tau),
            Which::App => self.app(sigma, tau),
        }
    }

    /// `M² = Re² + Im²` of `ζ_ex`.
    pub fn modulus_squared(&self, sigma: f64, tau: f64) -> Result<f64> {
        Ok(self.ex(sigma, tau)?.modulus_sq())
    }
}

/// `ζ_ex` at a single point. Needs no prime information.
pub fn zeta_ex(p: ComplexPoint) -> Result<ZetaValue> {
    zeta_ex_with(p, Summation::Plain)
}

pub fn zeta_ex_with(p: ComplexPoint, summation: Summation) -> Result<ZetaValue> {
    let p = ComplexPoint::new(p.sigma, p.tau, p.n_max)?;
    let pre = eta_prefactor(p.sigma, p.tau)?;
    let sum = weighted_sum(p.sigma, p.tau, p.n_max, summation, |n| {
        neg_one_pow(n as i64 - 1)
    });
    Ok((pre * sum).into())
}

pub fn zeta_p(p: ComplexPoint, mode: Mode) -> Result<ZetaValue> {
    TruncatedEta::new(p.n_max, mode)?.prime_part(p.sigma, p.tau)
}

pub fn zeta_c(p: ComplexPoint, mode: Mode) -> Result<ZetaValue> {
    TruncatedEta::new(p.n_max, mode)?.composite_part(p.sigma, p.tau)
}

pub fn zeta_app(p: ComplexPoint, mode: Mode) -> Result<ZetaValue> {
    TruncatedEta::new(p.n_max, mode)?.app(p.sigma, p.tau)
}

pub fn modulus_squared(p: ComplexPoint, which: Which, mode: Mode) -> Result<f64> {
    match which {
        Which::Ex => Ok(zeta_ex(p)?.modulus_sq()),
        Which::App => Ok(zeta_app(p, mode)?.modulus_sq()),
    }
}

/// `1 / M²` of `ζ_ex`; refuses values under [`RECIPROCAL_FLOOR`].
pub fn reciprocal_modulus(p: ComplexPoint) -> Result<f64> {
    reciprocal_of(zeta_ex(p)?.modulus_sq())
}

pub fn reciprocal_of(m2: f64) -> Result<f64> {
    if !(m2 >= RECIPROCAL_FLOOR) {
        return Err(Error::Overflow {
            value: m2,
            floor: RECIPROCAL_FLOOR,
        });
    }
    Ok(1.0 / m2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(sigma: f64, tau: f64, n: u64) -> ComplexPoint {
        ComplexPoint::new(sigma, tau, n).unwrap()
    }

    #[test]
    fn real_axis_value_at_two() {
        // alternating series oracle: ζ(2) = 2·Σ(-1)^{n-1}/n²
        let eta: f64 = (1..=100_000u64)
            .rev()
            .map(|n| if n % 2 == 1 { 1.0 } else { -1.0 } / (n as f64 * n as f64))
            .sum();
        let z = zeta_ex(pt(2.0, 0.0, 100_000)).unwrap();
        assert!((z.re - 2.0 * eta).abs() < 1e-12);
        assert!((z.re - 1.6449341).abs() < 1e-6);
        assert_eq!(z.im, 0.0);
    }

    #[test]
    fn pole_is_reported() {
        let err = zeta_ex(pt(1.0, 0.0, 10)).unwrap_err();
        assert!(matches!(err, Error::Pole { .. }));
        assert!(err.is_numerical_guard());
        let tau = 2.0 * std::f64::consts::PI / LN_2;
        assert!(matches!(zeta_ex(pt(1.0, tau, 10)), Err(Error::Pole { .. })));
        assert!(zeta_ex(pt(1.0, 3.0, 10)).is_ok());
    }

    #[test]
    fn point_validation() {
        assert!(ComplexPoint::new(0.0, 1.0, 10).is_err());
        assert!(ComplexPoint::new(-0.5, 1.0, 10).is_err());
        assert!(ComplexPoint::new(0.5, f64::NAN, 10).is_err());
        assert!(ComplexPoint::new(0.5, 1.0, 0).is_err());
    }

    #[test]
    fn two_term_prime_and_composite_parts() {
        let pre = eta_prefactor(2.0, 0.0).unwrap().re;
        let p = zeta_p(pt(2.0, 0.0, 2), Mode::Optimized).unwrap();
        let c = zeta_c(pt(2.0, 0.0, 2), Mode::Optimized).unwrap();
        assert!((p.re - pre * -0.25).abs() < 1e-15);
        assert!((c.re - pre).abs() < 1e-15);
    }

    #[test]
    fn parts_reassemble_the_series() {
        let p = pt(0.5, 14.0, 100);
        let ex = zeta_ex(p).unwrap();
        let app = zeta_app(p, Mode::Optimized).unwrap();
        assert!((ex.re - app.re).abs() < 1e-14);
        assert!((ex.im - app.im).abs() < 1e-14);
        let lit = zeta_app(p, Mode::Literal).unwrap();
        assert_eq!(lit, app);
    }

    #[test]
    fn near_first_zero_and_real_axis() {
        // |ζ_ex(0.5, 14.134725, 100)| = 0.021064 from a direct series evaluation
        let m = zeta_ex(pt(0.5, 14.134725, 100)).unwrap().modulus();
        assert!((m - 0.021064).abs() < 1e-5);
        assert!(zeta_ex(pt(0.5, 0.0, 100)).unwrap().re < 0.0);
    }

    #[test]
    fn squared_modulus_has_small_minimum_near_first_zero() {
        let eval = TruncatedEta::new(100, Mode::Optimized).unwrap();
        let mut best = f64::INFINITY;
        let mut at = 0.0;
        for k in 0..2000 {
            let tau = 13.5 + 0.0005 * k as f64;
            let m2 = eval.modulus_squared(0.5, tau).unwrap();
            if m2 < best {
                best = m2;
                at = tau;
            }
        }
        assert!(best < 1e-3);
        assert!((at - 14.13).abs() < 0.05);
        let app = modulus_squared(pt(0.5, at, 100), Which::App, Mode::Optimized).unwrap();
        assert!((app - best).abs() < 1e-15);
    }

    #[test]
    fn reciprocal_examples() {
        let r = reciprocal_modulus(pt(2.0, 0.0, 100_000)).unwrap();
        assert!((r - 0.3696).abs() < 1e-4);
        assert!(matches!(reciprocal_of(1e-301), Err(Error::Overflow { .. })));
        assert!(reciprocal_of(0.0).is_err());
        assert!(reciprocal_of(4.0).unwrap() < reciprocal_of(2.0).unwrap());
    }

    #[test]
    fn conjugate_symmetry() {
        for &(s, t) in &[(0.5, 14.1), (0.2, 3.3), (0.9, 27.5)] {
            let a = zeta_ex(pt(s, t, 100)).unwrap();
            let b = zeta_ex(pt(s, -t, 100)).unwrap();
            assert!((a.conj().re - b.re).abs() < 1e-14);
            assert!((a.conj().im - b.im).abs() < 1e-14);
        }
    }

    #[test]
    fn truncation_differences_shrink() {
        for &(s, t) in &[(0.5, 10.0), (0.3, 20.0), (0.8, 5.0)] {
            let d = |n: u64| {
                let a = zeta_ex(pt(s, t, 2 * n)).unwrap();
                let b = zeta_ex(pt(s, t, n)).unwrap();
                (a.re - b.re).hypot(a.im - b.im)
            };
            let (d1, d2, d3) = (d(100), d(200), d(400));
            assert!(d2 < d1 && d3 < d2, "{s} {t}: {d1} {d2} {d3}");
        }
    }

    #[test]
    fn compensated_summation_agrees() {
        let p = pt(0.5, 999.0, 1000);
        let plain = zeta_ex(p).unwrap();
        let comp = zeta_ex_with(p, Summation::Compensated).unwrap();
        assert!((plain.re - comp.re).abs() < 1e-12);
        assert!((plain.im - comp.im).abs() < 1e-12);
    }

    #[test]
    fn negative_exponent_parity() {
        assert_eq!(neg_one_pow(-1), -1.0);
        assert_eq!(neg_one_pow(-2), 1.0);
        assert_eq!(neg_one_pow(0), 1.0);
    }
}
