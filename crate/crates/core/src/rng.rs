//! A small deterministic generator for the seeded sampling paths.
//!
//! SplitMix64 keeps every randomized check reproducible from a single `u64`
//! seed, independent of platform and library versions. Sampled scalar entries
//! are rationals `p/q` with `|p| <= 20` and `1 <= q <= 10`, which keeps
//! big-integer growth bounded in long campaigns.

use crate::scalar::{int, Scalar};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// A generator for a sub-stream, derived deterministically from this
    /// one's seed and a stream index.
    pub fn substream(seed: u64, index: u64) -> Self {
        let mut base = Self::new(seed);
        let a = base.next_u64();
        let b = base.next_u64();
        Self::new(a ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(b))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// A rational `p/q`, `|p| <= 20`, `1 <= q <= 10`; may be zero.
    pub fn rational<T: Scalar>(&mut self) -> T {
        let p = self.range_i64(-20, 20);
        let q = self.range_i64(1, 10);
        int::<T>(p) / int::<T>(q)
    }

    /// A nonzero rational from the same range.
    pub fn nonzero_rational<T: Scalar>(&mut self) -> T {
        loop {
            let p = self.range_i64(-20, 20);
            if p == 0 {
                continue;
            }
            let q = self.range_i64(1, 10);
            return int::<T>(p) / int::<T>(q);
        }
    }

    /// A positive rational from the same range.
    pub fn positive_rational<T: Scalar>(&mut self) -> T {
        let p = self.range_i64(1, 20);
        let q = self.range_i64(1, 10);
        int::<T>(p) / int::<T>(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::{Signed, Zero};

    #[test]
    fn deterministic_streams() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn substreams_differ() {
        let mut a = SplitMix64::substream(7, 0);
        let mut b = SplitMix64::substream(7, 1);
        assert_ne!(
            (a.next_u64(), a.next_u64()),
            (b.next_u64(), b.next_u64())
        );
    }

    #[test]
    fn rational_bounds() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..500 {
            let r: Rational = rng.nonzero_rational();
            assert!(!r.is_zero());
            let twenty = Rational::from_integer(20.into());
            assert!(r.abs() <= twenty);
        }
    }
}
