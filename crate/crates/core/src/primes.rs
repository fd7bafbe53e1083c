//! Prime discrimination from floor and sign functions alone.
//!
//! For a real `u ≥ 0` the indicator is the double product
//!
//! ```text
//! Λ(u) = Ω0(u) · Π_{m=2}^{h1(u)} Π_{n=2}^{h2(u,m)} Ω1(u,m) · Ω2(u,m,n)
//! ```
//!
//! where `Ω0` vanishes at 0, 1 and at non-integers, `Ω1(u,m)` vanishes when
//! `u = 2m` and `Ω2(u,m,n)` vanishes when `u = (2m-1)(2n-1)`. Every factor
//! is a squared sign, so the product is exactly 0 or 1. Empty products are 1,
//! which is what lets `Λ(2) = Λ(3) = 1`.
//!
//! [`Mode::Literal`] walks the full product. [`Mode::Optimized`] stops at the
//! first vanishing factor and only visits odd factors `2m-1 ≤ ⌊√u⌋`; the two
//! modes are checked against each other and against trial division in tests.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// How the double product is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Every factor within the product bounds is multiplied in.
    Literal,
    /// Short-circuit on the first zero factor, odd factors up to `√u` only.
    #[default]
    Optimized,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(Mode::Literal),
            "optimized" => Ok(Mode::Optimized),
            other => Err(Error::domain(format!("unknown evaluation mode `{other}`"))),
        }
    }
}

/// A non-negative real argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RealArg(f64);

impl RealArg {
    pub fn new(u: f64) -> Result<Self> {
        if u.is_finite() && u >= 0.0 {
            Ok(RealArg(u))
        } else {
            Err(Error::domain(format!("expected a finite u >= 0, got {u}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Output of [`discriminate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeIndicator {
    pub value: u8,
    pub mode: Mode,
}

impl PrimeIndicator {
    pub fn is_prime(self) -> bool {
        self.value == 1
    }
}

/// Primes counted over `[u_in, u]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountResult {
    pub count: u64,
    pub u_in: u64,
    pub u: u64,
}

/// The building blocks of the product at one `(u, m, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxComponents {
    /// `Δ(u) = u - ⌊u⌋`
    pub frac: f64,
    pub h1: u64,
    pub h2: u64,
    /// `η(u, 2m)`
    pub eta_even: f64,
    /// `η(u, (2m-1)(2n-1))`
    pub eta_odd: f64,
    pub omega0: f64,
    pub omega1: f64,
    pub omega2: f64,
}

/// `sign(a - b)` with `sign(0) = 0`.
#[inline]
pub fn eta(a: f64, b: f64) -> f64 {
    let d = a - b;
    if d > 0.0 {
        1.0
    } else if d < 0.0 {
        -1.0
    } else {
        0.0
    }
}

#[inline]
pub fn frac(u: f64) -> f64 {
    u - u.floor()
}

#[inline]
pub fn h1(u: f64) -> u64 {
    1 + (u / 2.0).floor() as u64
}

#[inline]
pub fn h2(u: f64, m: u64) -> u64 {
    let odd = (2 * m - 1) as f64;
    1 + ((u + odd) / (2.0 * odd)).floor() as u64
}

#[inline]
fn omega0(u: f64) -> f64 {
    let a = eta(u, 0.0);
    let b = eta(u, 1.0);
    a * a * b * b * (1.0 - eta(frac(u), 0.0))
}

#[inline]
fn omega1(u: f64, m: u64) -> f64 {
    let e = eta(u, (2 * m) as f64);
    e * e
}

#[inline]
fn omega2(u: f64, m: u64, n: u64) -> f64 {
    let e = eta(u, ((2 * m - 1) * (2 * n - 1)) as f64);
    e * e
}

/// All auxiliary quantities at `(u, m, n)`.
pub fn aux_components(u: f64, m: u64, n: u64) -> Result<AuxComponents> {
    let u = RealArg::new(u)?.get();
    if m < 2 || n < 2 {
        return Err(Error::domain(format!("m and n must be >= 2, got m={m}, n={n}")));
    }
    Ok(AuxComponents {
        frac: frac(u),
        h1: h1(u),
        h2: h2(u, m),
        eta_even: eta(u, (2 * m) as f64),
        eta_odd: eta(u, ((2 * m - 1) * (2 * n - 1)) as f64),
        omega0: omega0(u),
        omega1: omega1(u, m),
        omega2: omega2(u, m, n),
    })
}

fn lambda_literal(u: f64) -> u8 {
    let mut product = omega0(u);
    for m in 2..=h1(u) {
        let o1 = omega1(u, m);
        for n in 2..=h2(u, m) {
            product *= o1 * omega2(u, m, n);
        }
    }
    product as u8
}

fn lambda_optimized(u: f64) -> u8 {
    if omega0(u) == 0.0 {
        return 0;
    }
    // Ω1(u, m) can only vanish at m = u/2, whose inner range is never empty
    // once u >= 4.
    let half = (u / 2.0).floor() as u64;
    if half >= 2 && omega1(u, half) == 0.0 {
        return 0;
    }
    // Ω2(u, m, n) can only vanish at the n solving (2m-1)(2n-1) = u, and
    // pairs with n < m were already visited as (n, m).
    let ui = u as u64;
    let root = ui.isqrt();
    let mut m = 2;
    while 2 * m - 1 <= root {
        let odd = 2 * m - 1;
        if ui % odd == 0 && (ui / odd) % 2 == 1 {
            let n = (ui / odd + 1) / 2;
            if n >= m && n <= h2(u, m) && omega2(u, m, n) == 0.0 {
                return 0;
            }
        }
        m += 1;
    }
    1
}

#[inline]
fn lambda(u: f64, mode: Mode) -> u8 {
    match mode {
        Mode::Literal => lambda_literal(u),
        Mode::Optimized => lambda_optimized(u),
    }
}

/// `Λ(u)`: 1 when `u` is a prime integer, 0 otherwise.
pub fn discriminate(u: f64, mode: Mode) -> Result<PrimeIndicator> {
    let u = RealArg::new(u)?.get();
    Ok(PrimeIndicator {
        value: lambda(u, mode),
        mode,
    })
}

/// Integer shorthand for `Λ(u) = 1`.
#[inline]
pub fn is_prime(u: u64, mode: Mode) -> bool {
    lambda(u as f64, mode) == 1
}

/// `Ψ(u) = u·Λ(u)`.
pub fn generate(u: f64, mode: Mode) -> Result<f64> {
    let indicator = discriminate(u, mode)?;
    Ok(u * f64::from(indicator.value))
}

#[inline]
pub fn generate_int(u: u64, mode: Mode) -> u64 {
    if is_prime(u, mode) {
        u
    } else {
        0
    }
}

/// First and second forward differences of `Ψ` at an integer `u`.
pub fn discrete_derivatives(u: u64, mode: Mode) -> (i64, i64) {
    let p0 = generate_int(u, mode) as i64;
    let p1 = generate_int(u + 1, mode) as i64;
    let p2 = generate_int(u + 2, mode) as i64;
    (p1 - p0, p2 - 2 * p1 + p0)
}

/// `C(u, u_in)`: the number of `j` in `[u_in, u]` with `Λ(j) = 1`.
pub fn count(u: u64, u_in: u64, mode: Mode) -> Result<CountResult> {
    if u_in > u {
        return Err(Error::domain(format!("u_in = {u_in} exceeds u = {u}")));
    }
    let count = (u_in..=u)
        .into_par_iter()
        .filter(|&j| is_prime(j, mode))
        .count() as u64;
    Ok(CountResult { count, u_in, u })
}

/// `Λ(j)` for every `j` in `0..=limit`.
pub fn indicator_table(limit: u64, mode: Mode) -> Vec<u8> {
    (0..=limit)
        .into_par_iter()
        .map(|j| lambda(j as f64, mode))
        .collect()
}

/// Primes not exceeding `limit`, ascending.
pub fn primes_up_to(limit: u64, mode: Mode) -> Vec<u64> {
    (2..=limit.max(1))
        .into_par_iter()
        .filter(|&j| is_prime(j, mode))
        .collect()
}

/// The first `count` primes, found by stepping `Λ` along the integers.
pub fn first_primes(count: usize, mode: Mode) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while out.len() < count {
        if is_prime(candidate, mode) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// `P(j)`, the j-th prime (`P(1) = 2`).
pub fn nth_prime(j: u64, mode: Mode) -> Result<u64> {
    if j == 0 {
        return Err(Error::domain("prime index starts at 1"));
    }
    let mut seen = 0;
    let mut candidate = 1u64;
    while seen < j {
        candidate += 1;
        if is_prime(candidate, mode) {
            seen += 1;
        }
    }
    Ok(candidate)
}

/// Primes among `a, q + a, 2q + a, …` up to `limit`.
pub fn progression_primes(a: u64, q: u64, limit: u64, mode: Mode) -> Result<Vec<u64>> {
    if a < 2 || a > q {
        return Err(Error::domain(format!("need 2 <= a <= q, got a={a}, q={q}")));
    }
    if limit < a {
        return Err(Error::domain(format!("limit {limit} is below the first term {a}")));
    }
    Ok((0..=(limit - a) / q)
        .map(|k| a + k * q)
        .filter(|&t| is_prime(t, mode))
        .collect())
}

/// Trial division up to `⌊√u⌋`. Independent of the closed form; used to
/// validate it.
pub fn oracle_is_prime(u: u64) -> bool {
    if u < 2 {
        return false;
    }
    if u < 4 {
        return true;
    }
    if u % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= u {
        if u % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
