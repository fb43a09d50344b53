use std::collections::HashMap;

use rayon::prelude::*;

use super::intervals::{elementary_intervals, Decomposition, ElementaryInterval};
use crate::calipers::{frame_x_fn, frame_y_fn, DBranch, PrimaryInterval};
use crate::empty_rect::{enumerate_mers_with_eps, Support};
use crate::error::Result;
use crate::geom::{diameter, eps_factor, to_frame, OrientedRect, Point};
use crate::trig::Sinusoid;

/// The rectangle inside which maximal empty rectangles are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Container {
    /// R_θ, the smallest enclosing rectangle.
    Rect,
    /// The union of all smallest enclosing θ-aligned squares: R_θ stretched
    /// along its shorter extent to the side length d(θ) on both ends.
    SquareHull,
}

/// Container sides `[top, bottom, left, right]` as sinusoids on a primary
/// interval.
pub fn container_sides(points: &[Point], p: &PrimaryInterval, container: Container) -> [Sinusoid; 4] {
    let [t, b, l, r] = p.tuple.side_fns(points);
    match container {
        Container::Rect => [t, b, l, r],
        Container::SquareHull => {
            let (h, w) = (t - b, r - l);
            match p.d_branch {
                DBranch::Height => [t, b, r - h, l + h],
                DBranch::Width => [b + w, t - w, l, r],
            }
        }
    }
}

/// Combinatorially equivalent maximal empty rectangles over a run of
/// consecutive elementary intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct MerClass {
    /// `[top, bottom, left, right]`.
    pub supports: [Support; 4],
    /// First and last elementary interval (inclusive).
    pub first: usize,
    pub last: usize,
    /// Validity interval J.
    pub lo: f64,
    pub hi: f64,
}

/// One (class, elementary interval) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub class: u32,
    pub interval: u32,
}

#[derive(Debug, Clone)]
pub struct ClassSweep {
    pub decomposition: Decomposition,
    pub container: Container,
    pub classes: Vec<MerClass>,
    pub pieces: Vec<Piece>,
    /// Largest number of MERs at a single sampled orientation.
    pub max_mers: usize,
}

impl ClassSweep {
    pub fn interval(&self, piece: Piece) -> &ElementaryInterval {
        &self.decomposition.elementary[piece.interval as usize]
    }

    pub fn primary(&self, piece: Piece) -> &PrimaryInterval {
        &self.decomposition.primaries[self.interval(piece).primary]
    }

    /// Sides `[top, bottom, left, right]` of the class rectangle on the piece,
    /// with box sides resolved to the container's sides.
    pub fn piece_sides(&self, points: &[Point], piece: Piece) -> [Sinusoid; 4] {
        let c = container_sides(points, self.primary(piece), self.container);
        let s = self.classes[piece.class as usize].supports;
        let pick = |k: usize, f: fn(Point) -> Sinusoid| match s[k] {
            Support::Point(i) => f(points[i]),
            Support::BoxSide => c[k],
        };
        [pick(0, frame_y_fn), pick(1, frame_y_fn), pick(2, frame_x_fn), pick(3, frame_x_fn)]
    }
}

type Key = [u32; 4];

fn encode(s: &[Support; 4]) -> Key {
    s.map(|x| match x {
        Support::Point(i) => i as u32,
        Support::BoxSide => u32::MAX,
    })
}

fn decode(k: &Key) -> [Support; 4] {
    k.map(|x| if x == u32::MAX { Support::BoxSide } else { Support::Point(x as usize) })
}

/// MER classes over [0, π/2): MERs are enumerated at the midpoint of every
/// elementary interval (the combinatorics cannot change inside one) and
/// identical support tuples in adjacent intervals are merged.
pub fn mer_classes(points: &[Point], container: Container) -> Result<ClassSweep> {
    let decomposition = elementary_intervals(points)?;
    let eps = eps_factor() * diameter(points);
    let per_interval: Vec<Vec<Key>> = decomposition
        .elementary
        .par_iter()
        .map(|e| {
            let theta = e.mid();
            let sides = container_sides(points, &decomposition.primaries[e.primary], container);
            let [t, b, l, r] = sides.map(|s| s.value(theta));
            let boxr = OrientedRect { theta, lo_x: l, hi_x: r.max(l), lo_y: b, hi_y: t.max(b) };
            let frame: Vec<Point> = points.iter().map(|&p| to_frame(p, theta)).collect();
            let mers = enumerate_mers_with_eps(&frame, &boxr, eps).expect("container encloses every point");
            mers.iter().map(|m| encode(&m.supports)).collect()
        })
        .collect();

    let mut classes: Vec<MerClass> = Vec::new();
    let mut pieces = Vec::new();
    let mut prev: HashMap<Key, usize> = HashMap::new();
    let mut max_mers = 0;
    for (i, keys) in per_interval.iter().enumerate() {
        let e = decomposition.elementary[i];
        max_mers = max_mers.max(keys.len());
        let mut cur = HashMap::with_capacity(keys.len());
        for k in keys {
            let id = match prev.get(k) {
                Some(&id) => {
                    classes[id].last = i;
                    classes[id].hi = e.hi;
                    id
                }
                None => {
                    classes.push(MerClass { supports: decode(k), first: i, last: i, lo: e.lo, hi: e.hi });
                    classes.len() - 1
                }
            };
            cur.insert(*k, id);
            pieces.push(Piece { class: id as u32, interval: i as u32 });
        }
        prev = cur;
    }
    Ok(ClassSweep { decomposition, container, classes, pieces, max_mers })
}
