//! Seedable 64-bit generator used by every randomized routine in the crate.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood's `splitmix64` finalizer,
//! public domain). It is implemented here rather than pulled from a crate so
//! that the exact sequence is pinned: reports and generated graphs must be
//! reproducible bit-for-bit from a seed, including by reimplementations in
//! other languages.
//!
//! One step of the generator, in full:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15                 (mod 2^64)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9    (mod 2^64)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB    (mod 2^64)
//! output = z ^ (z >> 31)
//! ```
//!
//! Bounded draws use rejection sampling on `next_u64` and shuffles are
//! Fisher-Yates from the top index down, so those sequences are pinned too.

/// SplitMix64 stream. `SplitMix64::new(seed)` with the same seed always
/// produces the same sequence.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` via rejection sampling; `bound` must be
    /// positive.
    pub fn next_below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "next_below requires a positive bound");
        let bound = bound as u64;
        // Largest multiple of `bound` that fits in u64; draws at or above it
        // are rejected so the remainder is unbiased.
        let limit = u64::MAX - u64::MAX % bound;
        loop {
            let r = self.next_u64();
            if r < limit {
                return (r % bound) as usize;
            }
        }
    }

    /// Fisher-Yates shuffle, swapping from the last index down.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i + 1);
            items.swap(i, j);
        }
    }
}
