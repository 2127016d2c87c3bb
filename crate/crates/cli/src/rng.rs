//! Tiny deterministic generator for sampling base points. Reports must be
//! byte-identical for a fixed input and flag set, so the sampler is seeded
//! and self-contained rather than pulled from a randomness crate.

use cayley_core::perm::Perm;

/// splitmix64
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Uniform-enough random permutation by Fisher-Yates.
pub fn random_perm(n: usize, rng: &mut SplitMix64) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        images.swap(i, j);
    }
    Perm::from_images(images).expect("shuffle of the identity is a bijection")
}
