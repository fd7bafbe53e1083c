//! Chebyshev's second function `ψ(x) = Σ_{p^k ≤ x} ln p`.
//!
//! Two evaluations are provided. The exact one sums `⌊ln x / ln p⌋·ln p`
//! over the primes up to `x`. The table-free one sums over every integer
//! `q ≤ x` and gates each term by `Λ(q)`; at composites `Ψ(q) = 0`, so the
//! logarithm is taken of `e` instead and the term vanishes.

use std::f64::consts::{E, PI};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::estimates::{BoundName, BoundReport};
use crate::primes::{self, Mode};
use crate::search::grid;

/// Quotients within this distance of an integer are rounded before the floor.
pub const FLOOR_GUARD: f64 = 1e-12;

/// Lower validity threshold of the ψ-bound.
pub const PSI_BOUND_MIN_X: f64 = 73.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiVariant {
    Exact,
    Approx,
}

impl PsiVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            PsiVariant::Exact => "exact",
            PsiVariant::Approx => "approx",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiValue {
    pub x: f64,
    pub value: f64,
    pub variant: PsiVariant,
}

/// `⌊q⌋`, except that `q` within [`FLOOR_GUARD`] of an integer snaps to it.
#[inline]
pub fn guarded_floor(q: f64) -> f64 {
    let r = q.round();
    if (q - r).abs() < FLOOR_GUARD {
        r
    } else {
        q.floor()
    }
}

fn check_x(x: f64) -> Result<()> {
    if x >= 2.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("psi needs x >= 2, got {x}")))
    }
}

#[inline]
fn term(ln_x: f64, ln_p: f64) -> f64 {
    guarded_floor(ln_x / ln_p) * ln_p
}

/// Precomputed `Λ(q)` for `q ≤ x_max`, shared by many ψ evaluations.
#[derive(Debug, Clone)]
pub struct PsiTable {
    indicator: Vec<u8>,
}

impl PsiTable {
    pub fn new(x_max: f64, mode: Mode) -> Result<Self> {
        check_x(x_max)?;
        Ok(PsiTable {
            indicator: primes::indicator_table(x_max.floor() as u64, mode),
        })
    }

    pub fn x_max(&self) -> u64 {
        self.indicator.len() as u64 - 1
    }

    fn upto(&self, x: f64) -> Result<u64> {
        check_x(x)?;
        let n = x.floor() as u64;
        if n > self.x_max() {
            return Err(Error::domain(format!(
                "x = {x} exceeds the table limit {}",
                self.x_max()
            )));
        }
        Ok(n)
    }

    /// Sum over the primes `p ≤ x`.
    pub fn exact(&self, x: f64) -> Result<PsiValue> {
        let n = self.upto(x)?;
        let ln_x = x.ln();
        let value = (2..=n)
            .filter(|&q| self.indicator[q as usize] == 1)
            .map(|p| term(ln_x, (p as f64).ln()))
            .sum();
        Ok(PsiValue {
            x,
            value,
            variant: PsiVariant::Exact,
        })
    }

    /// Sum over all `q ≤ x`, gated by `Λ(q)`.
    pub fn approx(&self, x: f64) -> Result<PsiValue> {
        let n = self.upto(x)?;
        let ln_x = x.ln();
        let value = (2..=n)
            .map(|q| {
                let lam = f64::from(self.indicator[q as usize]);
                let psi_q = lam * q as f64;
                term(ln_x, (psi_q + E * (1.0 - lam)).ln()) * lam
            })
            .sum();
        Ok(PsiValue {
            x,
            value,
            variant: PsiVariant::Approx,
        })
    }

    pub fn evaluate(&self, x: f64, variant: PsiVariant) -> Result<PsiValue> {
        match variant {
            PsiVariant::Exact => self.exact(x),
            PsiVariant::Approx => self.approx(x),
        }
    }
}

pub fn psi_exact(x: f64, mode: Mode) -> Result<PsiValue> {
    PsiTable::new(x, mode)?.exact(x)
}

pub fn psi_approx(x: f64, mode: Mode) -> Result<PsiValue> {
    PsiTable::new(x, mode)?.approx(x)
}

/// `√x·(ln x)²/(8π)`.
pub fn psi_bound_rhs(x: f64) -> f64 {
    let l = x.ln();
    x.sqrt() * l * l / (8.0 * PI)
}

/// `|ψ(x) - x| < √x·(ln x)²/(8π)` at `x = x_lo, x_lo + step, …`, using the
/// table-free ψ. Points below 73.2 are allowed and typically fail.
pub fn check_psi_bound(x_lo: f64, x_hi: f64, step: f64, mode: Mode) -> Result<Vec<BoundReport>> {
    let xs = grid(x_lo, x_hi, step)?;
    check_x(x_lo)?;
    let table = PsiTable::new(*xs.last().unwrap(), mode)?;
    xs.par_iter()
        .map(|&x| {
            let psi = table.approx(x)?.value;
            Ok(BoundReport::new(
                x,
                (psi - x).abs(),
                psi_bound_rhs(x),
                BoundName::SchoenfeldPsi,
                None,
            ))
        })
        .collect()
}
