//! Truncated Dirichlet sums and Euler products for real `σ > 1`.
//!
//! [`xi_eulap`] multiplies over every integer `q` in `2..=P(H)` and lets
//! `Λ(q)` and `Ψ(q)` pick the factor: the Euler factor `q^σ/(q^σ - 1)` at
//! primes and exactly 1 elsewhere. No prime list is consulted, yet the
//! result is bit-identical to the product over the first `H` primes.

use crate::error::{Error, Result};
use crate::primes::{self, Mode};

/// A validated `(σ, H)` pair with its largest prime `q_max = P(H)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerConfig {
    pub sigma: f64,
    pub h: u64,
    pub q_max: u64,
}

impl EulerConfig {
    pub fn new(sigma: f64, h: u64, mode: Mode) -> Result<Self> {
        check_sigma(sigma)?;
        if h == 0 {
            return Err(Error::domain("H must be at least 1"));
        }
        Ok(EulerConfig {
            sigma,
            h,
            q_max: primes::nth_prime(h, mode)?,
        })
    }
}

fn check_sigma(sigma: f64) -> Result<()> {
    if sigma > 1.0 && sigma.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("the real series needs sigma > 1, got {sigma}")))
    }
}

/// `Σ_{n=1}^{N} n^{-σ}`, accumulated from the smallest term up.
pub fn xi_sum(sigma: f64, n: u64) -> Result<f64> {
    check_sigma(sigma)?;
    if n == 0 {
        return Err(Error::domain("N must be at least 1"));
    }
    Ok((1..=n).rev().map(|k| (k as f64).powf(-sigma)).sum())
}

#[inline]
fn euler_factor(p_pow: f64) -> f64 {
    p_pow / (p_pow - 1.0)
}

/// `Π_{j=1}^{H} P(j)^σ / (P(j)^σ - 1)` over the first `H` primes.
pub fn xi_product_primes(sigma: f64, h: u64, mode: Mode) -> Result<f64> {
    check_sigma(sigma)?;
    if h == 0 {
        return Err(Error::domain("H must be at least 1"));
    }
    Ok(primes::first_primes(h as usize, mode)
        .into_iter()
        .map(|p| euler_factor((p as f64).powf(sigma)))
        .product())
}

/// Factor of the table-free product at `q`.
///
/// With `λ = Λ(q)` and `w = Ψ(q)^σ` this is `(w + 1 - λ) / (w - 1 + 2(1 - λ))`:
/// `q^σ/(q^σ - 1)` when `q` is prime and `1/1` otherwise.
#[inline]
pub fn eulap_factor(q: u64, sigma: f64, mode: Mode) -> f64 {
    let lam = if primes::is_prime(q, mode) { 1.0 } else { 0.0 };
    let psi = primes::generate_int(q, mode) as f64;
    let w = if psi == 0.0 { 0.0 } else { psi.powf(sigma) };
    (w + (1.0 - lam)) / (w - 1.0 + 2.0 * (1.0 - lam))
}

/// Self-consistent Euler product over `q = 2..=P(H)`, left-to-right.
pub fn xi_eulap(sigma: f64, h: u64, mode: Mode) -> Result<f64> {
    let cfg = EulerConfig::new(sigma, h, mode)?;
    Ok((2..=cfg.q_max).map(|q| eulap_factor(q, sigma, mode)).product())
}

/// Reference `ζ(σ)` for real `σ > 1`: a partial sum plus an Euler–Maclaurin
/// tail, accurate to roughly machine precision.
pub fn zeta_real(sigma: f64) -> Result<f64> {
    check_sigma(sigma)?;
    const N: u64 = 64;
    // B_{2k} / (2k)!
    const BERNOULLI_OVER_FACTORIAL: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
    ];
    let n = N as f64;
    let head: f64 = (1..N).rev().map(|k| (k as f64).powf(-sigma)).sum();
    let mut tail = n.powf(1.0 - sigma) / (sigma - 1.0) + 0.5 * n.powf(-sigma);
    // rising factorial σ(σ+1)…(σ+2k-2) times N^{-σ-2k+1}
    let mut rising = sigma;
    let mut power = n.powf(-sigma - 1.0);
    for (k, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        tail += coeff * rising * power;
        let a = sigma + (2 * k + 1) as f64;
        rising *= a * (a + 1.0);
        power /= n * n;
    }
    Ok(head + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::oracle_is_prime;
    use std::f64::consts::PI;

    const M: Mode = Mode::Optimized;

    fn oracle_product(sigma: f64, h: usize) -> f64 {
        let mut p = 1.0;
        let mut found = 0;
        let mut q = 2u64;
        while found < h {
            if oracle_is_prime(q) {
                let w = (q as f64).powf(sigma);
                p *= w / (w - 1.0);
                found += 1;
            }
            q += 1;
        }
        p
    }

    #[test]
    fn sum_examples() {
        assert_eq!(xi_sum(2.0, 1).unwrap(), 1.0);
        assert!((xi_sum(2.0, 1_000_000).unwrap() - PI * PI / 6.0).abs() < 1.1e-6);
        assert!((xi_sum(4.0, 10_000).unwrap() - PI.powi(4) / 90.0).abs() < 1e-12);
        assert!(xi_sum(1.0, 10).is_err());
        assert!(xi_sum(0.5, 10).is_err());
    }

    #[test]
    fn product_examples() {
        assert!((xi_product_primes(2.0, 1, M).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((xi_product_primes(2.0, 100, M).unwrap() - 1.644515221724293).abs() < 1e-12);
        assert!((xi_product_primes(3.0, 100, M).unwrap() - 1.202056602179509).abs() < 1e-12);
        assert!(xi_product_primes(1.0, 5, M).is_err());
    }

    #[test]
    fn eulap_matches_trial_division_product() {
        // frozen from the trial-division oracle product
        assert!((oracle_product(4.0, 100) - 1.0823232333691943).abs() < 1e-15);
        assert!((xi_eulap(2.0, 100, M).unwrap() - 1.644515221724293).abs() < 1e-12);
        assert!((xi_eulap(4.0, 100, M).unwrap() - oracle_product(4.0, 100)).abs() < 1e-15);
        let rel = (PI * PI / 6.0 - xi_eulap(2.0, 100, M).unwrap()) / (PI * PI / 6.0);
        assert!((rel - 2.546e-4).abs() < 1e-7);
    }

    #[test]
    fn eulap_is_bitwise_the_prime_product() {
        for &sigma in &[1.1, 1.5, 2.0, 3.0, 4.0, 6.5] {
            for &h in &[1u64, 2, 7, 30, 100] {
                assert_eq!(
                    xi_eulap(sigma, h, M).unwrap(),
                    xi_product_primes(sigma, h, M).unwrap(),
                    "sigma={sigma} h={h}"
                );
            }
        }
    }

    #[test]
    fn composite_factors_are_exactly_one() {
        for q in 2..600u64 {
            if !oracle_is_prime(q) {
                assert_eq!(eulap_factor(q, 2.5, M), 1.0);
            }
        }
    }

    #[test]
    fn products_increase_with_h() {
        let mut prev = 1.0;
        for h in 1..60 {
            let v = xi_eulap(2.0, h, M).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn sum_and_product_converge_together() {
        let diff = (xi_sum(2.0, 1_000_000).unwrap() - xi_product_primes(2.0, 100, M).unwrap()).abs();
        assert!(diff < 5e-4);
    }

    #[test]
    fn reference_zeta_values() {
        assert!((zeta_real(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_real(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta_real(6.0).unwrap() - PI.powi(6) / 945.0).abs() < 1e-14);
        assert!((zeta_real(3.0).unwrap() - 1.2020569031595942).abs() < 1e-14);
    }

    #[test]
    fn config_tracks_q_max() {
        let cfg = EulerConfig::new(2.0, 100, M).unwrap();
        assert_eq!(cfg.q_max, 541);
        assert!(EulerConfig::new(1.0, 100, M).is_err());
        assert!(EulerConfig::new(2.0, 0, M).is_err());
    }
}
