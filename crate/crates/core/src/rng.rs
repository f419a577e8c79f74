//! Seeded random numbers for jitter studies.
//!
//! Reproducibility across runs, platforms, and reimplementations matters more
//! here than statistical sophistication, so the generator is pinned to a
//! fully specified algorithm rather than an opaque library default:
//!
//! * stream: SplitMix64 (Steele, Lea & Flood 2014), state advanced by
//!   `0x9E3779B97F4A7C15` per draw, output mixed with the standard
//!   `xor-shift / multiply` finalizer;
//! * uniform: `u = ((x >> 11) + 1) / 2^53`, which lies in `(0, 1]` so
//!   `ln(u)` is always finite;
//! * gaussians: Box–Muller, `z0 = sqrt(-2 ln u1) cos(2 pi u2)`,
//!   `z1 = sqrt(-2 ln u1) sin(2 pi u2)`.
//!
//! Any implementation following the three rules above reproduces the exact
//! same jitter displacements from the same seed.

use std::f64::consts::TAU;

/// SplitMix64 stream with Box–Muller gaussian sampling.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `(0, 1]`.
    pub fn next_unit(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 / (1u64 << 53) as f64
    }

    /// One Box–Muller pair of independent standard gaussians.
    pub fn next_gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = self.next_unit();
        let u2 = self.next_unit();
        let r = (-2.0 * u1.ln()).sqrt();
        (r * (TAU * u2).cos(), r * (TAU * u2).sin())
    }
}
