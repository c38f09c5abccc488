//! Seeded, platform-independent randomness.
//!
//! Everything random in this crate flows through [`SplitMix64`], the
//! standard splitmix generator (Steele/Lea/Flood 2014): the state advances
//! by the 64-bit golden ratio and each output is the murmur-style finalizer
//! of the new state. The algorithm is fixed here byte-for-byte so that a
//! seed means the same sequence on every platform; this is the determinism
//! contract the experiment sweeps and acceptance tests rely on.

/// The splitmix64 finalizer as a standalone mixing function.
pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic per-(cell, trial) seed derivation for sweeps.
pub fn combine_seed(master: u64, cell: u64, trial: u64) -> u64 {
    mix(mix(master ^ mix(cell ^ 0x9E37_79B9_7F4A_7C15)) ^ mix(trial ^ 0xD1B5_4A32_D192_ED03))
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix(self.state)
    }

    /// Uniform draw from `[0, n)` by reduction of one 64-bit output.
    ///
    /// The modulo bias is below 2^-32 for any desk-scale `n`; determinism,
    /// not perfect uniformity, is the contract here.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// `k` distinct values from `[0, n)` via a partial Fisher-Yates shuffle,
    /// returned sorted.
    pub fn sample_distinct(&mut self, n: u64, k: usize) -> Vec<u64> {
        assert!(k as u64 <= n);
        let mut pool: Vec<u64> = (0..n).collect();
        for i in 0..k {
            let j = i as u64 + self.below(n - i as u64);
            pool.swap(i, j as usize);
        }
        let mut out: Vec<u64> = pool[..k].to_vec();
        out.sort_unstable();
        out
    }
}
