//! Seeded sampling for all randomized checks.
//!
//! The generator is ChaCha8 keyed through `seed_from_u64`, so a report quoting
//! its seed can be reproduced bit for bit on any platform. Integer draws use
//! plain modular reduction of `next_u64`; the tiny bias is irrelevant for
//! test-point generation and keeps the stream layout dead simple.

use alloc::vec::Vec;

use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::forms::{DualBinaryForm, GroupPair};
use crate::linalg::Matrix;
use crate::Rat;

pub struct Sampler {
    rng: ChaCha8Rng,
}

/// Numerators and denominators of sampled rationals stay within this bound.
pub const COORDINATE_BOUND: u64 = 100;

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.rng.next_u64() % n
    }

    /// Uniform-ish integer in the inclusive range [lo, hi].
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// Rational with numerator in [-bound, bound] and denominator in [1, bound].
    pub fn rational(&mut self, bound: u64) -> Rat {
        let num = self.int_in(-(bound as i64), bound as i64);
        let den = self.int_in(1, bound as i64);
        crate::ratio(num, den)
    }

    pub fn nonzero_rational(&mut self, bound: u64) -> Rat {
        loop {
            let r = self.rational(bound);
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Rational point with at least one nonzero coordinate.
    pub fn point(&mut self, dim: usize, bound: u64) -> Vec<Rat> {
        loop {
            let p: Vec<Rat> = (0..dim).map(|_| self.rational(bound)).collect();
            if p.iter().any(|c| !c.is_zero()) {
                return p;
            }
        }
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| crate::rat(self.int_in(lo, hi)))
    }

    /// Rejection-sample an invertible square matrix with small integer entries.
    pub fn invertible_matrix(&mut self, n: usize, lo: i64, hi: i64) -> Matrix {
        loop {
            let m = self.int_matrix(n, n, lo, hi);
            if m.is_invertible() {
                return m;
            }
        }
    }

    pub fn group_pair(&mut self) -> GroupPair {
        let alpha = self.invertible_matrix(2, -4, 4);
        let beta = self.invertible_matrix(2, -4, 4);
        GroupPair::new(alpha, beta).expect("sampled invertible")
    }

    /// Dual form of the given degree with small integer values, not all zero.
    pub fn dual_form(&mut self, degree: usize, lo: i64, hi: i64) -> DualBinaryForm {
        loop {
            let values: Vec<Rat> = (0..=degree).map(|_| crate::rat(self.int_in(lo, hi))).collect();
            if values.iter().any(|v| !v.is_zero()) {
                return DualBinaryForm::new(values).expect("nonempty");
            }
        }
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::new(0)
    }
}
