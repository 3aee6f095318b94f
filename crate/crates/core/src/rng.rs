//! Counter-based randomness for edge colorings.
//!
//! Randomized constructions draw one value per vertex pair, indexed by the
//! pair's position in row-major upper-triangular order. The draw is a pure
//! function of (seed, index) — the SplitMix64 output function applied to the
//! index-th state — so results do not depend on the order pairs are visited
//! and identical seeds reproduce identical colorings everywhere.

/// One SplitMix64 step: golden-ratio increment, then the 64-bit finalizer.
#[inline]
fn splitmix64(state: u64) -> u64 {
    let mut z = state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Random-access stream of u64 values keyed by a seed.
///
/// `value(i)` equals the i-th output of the sequential SplitMix64 generator
/// seeded with `seed`, but is computed directly from i.
#[derive(Clone, Copy, Debug)]
pub struct PairStream {
    seed: u64,
}

impl PairStream {
    pub fn new(seed: u64) -> Self {
        PairStream { seed }
    }

    #[inline]
    pub fn value(&self, index: u64) -> u64 {
        splitmix64(
            self.seed
                .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        )
    }

    /// Uniform draw in [0, 1) with 53 random bits.
    #[inline]
    pub fn unit(&self, index: u64) -> f64 {
        (self.value(index) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Index of pair (u, v), u < v, in row-major upper-triangular order over n
/// vertices: (0,1), (0,2), ..., (0,n-1), (1,2), ...
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> u64 {
    debug_assert!(u < v && v < n);
    let (n, u, v) = (n as u64, u as u64, v as u64);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Deterministic per-stream seed derivation, used to give Monte Carlo trials
/// and search restarts independent generators from one base seed.
#[inline]
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    PairStream::new(base).value(stream)
}
