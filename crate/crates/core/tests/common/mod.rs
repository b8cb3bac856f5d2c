#![allow(dead_code)]

use rainbow_core::geometry::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random point set in general position, retrying until the coordinates
/// have no collinear triple.
pub fn random_points(n: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let coords: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000)))
            .collect();
        if let Ok(x) = PointSet::from_coords(&coords) {
            return x;
        }
    }
}

/// Random point set with exactly `h` hull points: a regular-ish polygon
/// with the rest scattered near the centre.
pub fn random_points_with_hull(n: usize, h: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut coords = Vec::with_capacity(n);
        for t in 0..h {
            let a = std::f64::consts::TAU * (t as f64 + rng.gen_range(0.0..0.3)) / h as f64;
            coords.push(((100_000.0 * a.cos()) as i64, (100_000.0 * a.sin()) as i64));
        }
        let inner = 100_000.0 * (std::f64::consts::PI / h as f64).cos() * 0.5;
        while coords.len() < n {
            let a = rng.gen_range(0.0..std::f64::consts::TAU);
            let d = rng.gen_range(0.0..inner);
            coords.push(((d * a.cos()) as i64, (d * a.sin()) as i64));
        }
        if let Ok(x) = PointSet::from_coords(&coords) {
            if x.hull().len() == h {
                return x;
            }
        }
    }
}
