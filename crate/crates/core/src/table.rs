//! Random odd-integer sequences classified by `Ψ`.
//!
//! Each set draws `K = 1 + ⌊rnd(100)⌋` and `u₁ = 2⌊rnd(K/2)⌋ + 1`, then
//! `u_{n+1} = 2(u_n + ⌊rnd(u_n/K)⌋) + 1`, for 16 values in total. `rnd(a)` is
//! uniform on `[0, a)`.
//!
//! The seeded source is SplitMix64: state advances by `0x9E3779B97F4A7C15`
//! and each output is the state passed through the xor-shift-multiply
//! finaliser. A draw keeps the top 53 bits as a fraction of `2^53`.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::primes::{self, Mode};

pub const ROWS_PER_SET: usize = 16;

/// Uniform draws on `[0, a)`.
pub trait UniformSource {
    fn rnd(&mut self, a: f64) -> f64;
}

/// [`UniformSource`] backed by a seeded SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SeededSource(SplitMix64);

impl SeededSource {
    pub fn new(seed: u64) -> Self {
        SeededSource(SplitMix64::seed_from_u64(seed))
    }
}

impl UniformSource for SeededSource {
    fn rnd(&mut self, a: f64) -> f64 {
        a * self.0.gen::<f64>()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub u_n: u64,
    pub psi_u: u64,
}

/// One classified set of rows, consuming draws from `rng`.
pub fn generate_set<R: UniformSource>(rng: &mut R, mode: Mode) -> Vec<TableRow> {
    let k = 1 + rng.rnd(100.0).trunc() as u64;
    let mut u = 2 * rng.rnd(k as f64 / 2.0).trunc() as u64 + 1;
    let mut rows = Vec::with_capacity(ROWS_PER_SET);
    for n in 1..=ROWS_PER_SET {
        if n > 1 {
            u = 2 * (u + rng.rnd(u as f64 / k as f64).trunc() as u64) + 1;
        }
        rows.push(TableRow {
            n,
            u_n: u,
            psi_u: primes::generate_int(u, mode),
        });
    }
    rows
}

/// `sets` independent sets. Set `i` draws from its own stream seeded with
/// `seed + i`, so sets can be generated in any order.
pub fn generate_table(seed: u64, sets: usize, mode: Mode) -> Result<Vec<Vec<TableRow>>> {
    if sets == 0 {
        return Err(Error::domain("need at least one set"));
    }
    Ok((0..sets)
        .into_par_iter()
        .map(|i| {
            let mut rng = SeededSource::new(seed.wrapping_add(i as u64));
            generate_set(&mut rng, mode)
        })
        .collect())
}
