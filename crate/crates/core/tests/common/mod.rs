//! Shared generators for integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sixlines::projgeom::{HomPoint3, OrientedLine};
use sixlines::Config;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> HomPoint3 {
    loop {
        let c: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        if c.iter().any(|&x| x != 0) {
            return HomPoint3::from_ints(c);
        }
    }
}

pub fn random_oriented_line(rng: &mut ChaCha8Rng, bound: i64) -> OrientedLine {
    loop {
        if let Ok(l) = OrientedLine::new(random_point(rng, bound), random_point(rng, bound)) {
            return l;
        }
    }
}

/// `n` pairwise skew lines with small integer points.
pub fn random_config(rng: &mut ChaCha8Rng, n: usize) -> Config {
    loop {
        let lines = (0..n).map(|_| random_oriented_line(rng, 9)).collect();
        if let Ok(c) = Config::new(lines) {
            return c;
        }
    }
}
