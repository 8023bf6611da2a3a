//! Counter-based random streams.
//!
//! Every stream is derived from `(seed, tag, index)`, so a node or an edge
//! draws the same values regardless of the order in which streams are opened.

use rand_core::{impls, Error as RandError, RngCore};

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// FNV-1a, used to turn purpose tags into stream keys.
pub fn fnv1a(tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Stateless draw: the `counter`-th word of stream `(seed, tag, index)`.
#[inline]
pub fn hash_draw(seed: u64, tag: u64, index: u64, counter: u64) -> u64 {
    let k = mix64(seed ^ mix64(tag.wrapping_add(GOLDEN)));
    let k = mix64(k ^ mix64(index.wrapping_mul(GOLDEN).wrapping_add(1)));
    mix64(k ^ counter.wrapping_mul(GOLDEN))
}

/// Uniform float in [0, 1) from a word.
#[inline]
pub fn unit_f64(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[derive(Clone, Debug)]
pub struct StreamRng {
    key: u64,
    counter: u64,
}

impl StreamRng {
    pub fn new(seed: u64, tag: &str, index: u64) -> Self {
        Self::from_tag_hash(seed, fnv1a(tag), index)
    }

    pub fn from_tag_hash(seed: u64, tag: u64, index: u64) -> Self {
        let k = mix64(seed ^ mix64(tag.wrapping_add(GOLDEN)));
        let key = mix64(k ^ mix64(index.wrapping_mul(GOLDEN).wrapping_add(1)));
        StreamRng { key, counter: 0 }
    }

    /// Uniform integer in `[0, bound)` (bound > 0), rejection-free via 128-bit multiply.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    pub fn unit(&mut self) -> f64 {
        unit_f64(self.next_u64())
    }
}

impl RngCore for StreamRng {
    fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }

    fn next_u64(&mut self) -> u64 {
        let out = mix64(self.key ^ self.counter.wrapping_mul(GOLDEN));
        self.counter = self.counter.wrapping_add(1);
        out
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        impls::fill_bytes_via_next(self, dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), RandError> {
        self.fill_bytes(dest);
        Ok(())
    }
}
