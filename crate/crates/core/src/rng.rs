//! SplitMix64: a tiny, portable 64-bit generator.
//!
//! The stream depends only on the seed, so runs reproduce bit for bit on any
//! platform and can be re-implemented in other languages from the constants
//! below.

use num_bigint::BigInt;

use crate::geometry::Scalar;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The SplitMix64 output function.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for task `index` of a run seeded with `seed`.
    pub fn for_task(seed: u64, index: u64) -> Self {
        SplitMix64::new(mix64(
            seed ^ mix64(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)),
        ))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform in `0..n` by rejection. Panics when `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u64;
        (lo as i128 + self.below(span) as i128) as i64
    }

    /// Numerator in `[-bound, bound]`, denominator in `[1, bound]`, reduced.
    pub fn rational(&mut self, bound: u32) -> Scalar {
        let b = i64::from(bound.max(1));
        let num = self.range_i64(-b, b);
        let den = self.range_i64(1, b);
        Scalar::new(BigInt::from(num), BigInt::from(den))
    }

    /// Like [`SplitMix64::rational`] but never zero.
    pub fn nonzero_rational(&mut self, bound: u32) -> Scalar {
        loop {
            let r = self.rational(bound);
            if r != Scalar::from_integer(BigInt::from(0)) {
                return r;
            }
        }
    }

    /// Index drawn with probability proportional to `weights`.
    pub fn weighted(&mut self, weights: &[u32]) -> usize {
        let total: u64 = weights.iter().map(|&w| u64::from(w)).sum();
        let mut pick = self.below(total);
        for (k, &w) in weights.iter().enumerate() {
            if pick < u64::from(w) {
                return k;
            }
            pick -= u64::from(w);
        }
        unreachable!("pick < total")
    }
}
