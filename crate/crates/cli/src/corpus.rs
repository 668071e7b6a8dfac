//! Seeded random descriptors for property runs.

use frieze_core::QuiddityDescriptor;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const VALIDATION_DEPTH: i64 = 64;

/// `count` distinct descriptors with constant tails 2 or 3, cores of length
/// at most 8 with values in `1..=6`, all positive to the validation depth.
pub fn generate(seed: u64, count: usize) -> Vec<QuiddityDescriptor> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out: Vec<QuiddityDescriptor> = Vec::with_capacity(count);
    while out.len() < count {
        let left = rng.gen_range(2..=3);
        let right = rng.gen_range(2..=3);
        let len = rng.gen_range(0..=8);
        let core: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=6)).collect();
        let start = rng.gen_range(-4..=4);
        let q = QuiddityDescriptor::new(vec![left], core, vec![right], start).expect("nonempty tails");
        if q.validate(VALIDATION_DEPTH).expect("depth >= 2").is_valid() && !out.contains(&q) {
            out.push(q);
        }
    }
    out
}
