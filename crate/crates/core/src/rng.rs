//! Counter-based random words keyed by `(seed, sample, pair, attempt)`.
//!
//! Every word is a pure function of its key, so any sample can be drawn on
//! any worker in any order with the same result. The construction, pinned
//! for cross-language reproduction (all arithmetic wrapping mod 2^64):
//!
//! ```text
//! mix(z)       = z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
//!                z ^= z >> 27; z *= 0x94d049bb133111eb; z ^ (z >> 31)
//! stream(s, i) = mix(mix(s + GAMMA) ^ (i * GAMMA_2))
//! word(k, p, a)= mix(k ^ ((p + 1) * GAMMA)) + a * GAMMA_2, mixed once more
//! ```
//!
//! with `GAMMA = 0x9e3779b97f4a7c15` and `GAMMA_2 = 0xd1b54a32d192ed03`.
//! Label indices in `0..m` use Lemire's multiply-shift with rejection, which
//! is exactly uniform; a rejected word moves to the next `attempt`.

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;
const GAMMA_2: u64 = 0xd1b5_4a32_d192_ed03;

/// SplitMix64 output function.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The random stream of one sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleStream {
    key: u64,
}

impl SampleStream {
    pub fn new(seed: u64, sample: u64) -> Self {
        let k = mix64(seed.wrapping_add(GAMMA));
        Self { key: mix64(k ^ sample.wrapping_mul(GAMMA_2)) }
    }

    #[inline]
    pub fn word(&self, counter: u64, attempt: u64) -> u64 {
        let w = mix64(self.key ^ counter.wrapping_add(1).wrapping_mul(GAMMA));
        mix64(w.wrapping_add(attempt.wrapping_mul(GAMMA_2)))
    }

    /// Uniform integer in `0..range` for the given counter.
    #[inline]
    pub fn below(&self, counter: u64, range: u64) -> u64 {
        debug_assert!(range > 0);
        let mut attempt = 0;
        loop {
            let x = self.word(counter, attempt);
            let wide = x as u128 * range as u128;
            let low = wide as u64;
            if low >= range || low >= range.wrapping_neg() % range {
                return (wide >> 64) as u64;
            }
            attempt += 1;
        }
    }

    /// Uniform float in `[0, 1)` with 53 random bits.
    pub fn unit(&self, counter: u64) -> f64 {
        (self.word(counter, 0) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
