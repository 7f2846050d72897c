//! Deterministic, splittable random number generation.
//!
//! A counter-based SplitMix64 generator (Steele, Lea & Flood's splittable
//! design): the state is a seed plus an odd increment, and every draw is a
//! pure function of `u64` wrapping arithmetic, so streams are identical
//! across platforms. `split` derives an independent child stream, which
//! keeps parallel experiment sweeps reproducible regardless of scheduling.

use crate::scalar::Scalar;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Splittable counter-based generator. Confine each instance to one thread;
/// hand `split` results to workers.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    gamma: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            seed,
            gamma: GOLDEN_GAMMA,
        }
    }

    fn mix64(mut z: u64) -> u64 {
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn mix_gamma(mut z: u64) -> u64 {
        z = (z ^ (z >> 33)).wrapping_mul(0xFF51_AFD7_ED55_8CCD);
        z = (z ^ (z >> 33)).wrapping_mul(0xC4CE_B9FE_1A85_EC53);
        z = (z ^ (z >> 33)) | 1;
        // U.S. patent-free gamma fixup: keep enough bit transitions.
        if (z ^ (z >> 1)).count_ones() < 24 {
            z ^ 0xAAAA_AAAA_AAAA_AAAA
        } else {
            z
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.seed = self.seed.wrapping_add(self.gamma);
        Self::mix64(self.seed)
    }

    /// Independent child generator; the parent stream advances by two.
    pub fn split(&mut self) -> Rng {
        let seed = self.next_u64();
        self.seed = self.seed.wrapping_add(self.gamma);
        Rng {
            seed,
            gamma: Self::mix_gamma(self.seed),
        }
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.next_u64() >> 11) as f64 * SCALE
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform<F: Scalar>(&mut self, lo: F, hi: F) -> F {
        lo + (hi - lo) * F::lit(self.next_f64())
    }

    /// Uniform index in `[0, n)` via the multiply-shift reduction.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "index range must be non-empty");
        (((self.next_u64() as u128) * (n as u128)) >> 64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_seeds_give_identical_streams() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..10_000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn split_streams_are_independent_of_parent_consumption() {
        let mut a = Rng::new(7);
        let mut b = Rng::new(7);
        let mut child_a = a.split();
        let mut child_b = b.split();
        // Drain the parents differently; children must still agree.
        for _ in 0..100 {
            a.next_u64();
        }
        for _ in 0..3 {
            b.next_f64();
        }
        for _ in 0..1000 {
            assert_eq!(child_a.next_u64(), child_b.next_u64());
        }
    }

    #[test]
    fn split_differs_from_parent() {
        let mut parent = Rng::new(0);
        let mut child = parent.split();
        let p: Vec<u64> = (0..16).map(|_| parent.next_u64()).collect();
        let c: Vec<u64> = (0..16).map(|_| child.next_u64()).collect();
        assert_ne!(p, c);
    }

    #[test]
    fn uniform_stays_in_range() {
        let mut rng = Rng::new(1);
        for _ in 0..10_000 {
            let v: f64 = rng.uniform(-2.5, 1.5);
            assert!((-2.5..1.5).contains(&v));
        }
    }

    #[test]
    fn index_stays_in_range_and_covers() {
        let mut rng = Rng::new(5);
        let mut seen = [false; 7];
        for _ in 0..1000 {
            seen[rng.index(7)] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }
}
