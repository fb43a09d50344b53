#![allow(dead_code)]

use annuli::{Point, PointSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn corners() -> Vec<Point> {
    vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)]
}

pub fn corners_center() -> Vec<Point> {
    let mut p = corners();
    p.push(Point::new(0.5, 0.5));
    p
}

pub fn p5() -> Vec<Point> {
    vec![Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(4.0, 2.0), Point::new(0.0, 2.0), Point::new(2.0, 1.0)]
}

/// `n` distinct points: mostly uniform in a randomly placed and scaled box,
/// sometimes on a small integer grid so that ties and collinear triples occur.
pub fn instance(rng: &mut ChaCha8Rng, n: usize) -> Vec<Point> {
    let grid = rng.random_bool(0.25);
    let scale = 10f64.powf(rng.random_range(-1.0..1.5));
    let (ox, oy) = (rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
    let stretch = rng.random_range(0.3..1.0);
    let mut raw = Vec::with_capacity(n);
    let mut tries = 0;
    while raw.len() < n && tries < 100 * n {
        tries += 1;
        let p = if grid {
            Point::new(rng.random_range(0..5) as f64, rng.random_range(0..4) as f64)
        } else {
            Point::new(ox + scale * rng.random_range(0.0..1.0), oy + scale * stretch * rng.random_range(0.0..1.0))
        };
        if !raw.contains(&p) {
            raw.push(p);
        }
    }
    PointSet::new(&raw).expect("finite nonempty").points().to_vec()
}
