//! Rotating extremes: the four extreme points of P as θ varies, the primary
//! intervals on which they stay fixed, the enclosing rectangle R_θ, the
//! enclosing square side d(θ) and the segment C_θ of enclosing-square centers.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::geom::{from_frame, to_frame, OrientedRect, Point, ANGLE_EPS};
use crate::trig::{Sinusoid, AMP_EPS};

/// Frame x-coordinate of `p` as a function of θ: `x cos θ + y sin θ`.
pub fn frame_x_fn(p: Point) -> Sinusoid {
    Sinusoid::harmonic(p.x, p.y)
}

/// Frame y-coordinate of `p` as a function of θ: `y cos θ − x sin θ`.
pub fn frame_y_fn(p: Point) -> Sinusoid {
    Sinusoid::harmonic(p.y, -p.x)
}

/// Indices of the topmost, bottommost, leftmost and rightmost points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtremeTuple {
    pub top: usize,
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
}

impl ExtremeTuple {
    /// R_θ sides as sinusoids `[top, bottom, left, right]` (frame coordinates).
    pub fn side_fns(&self, points: &[Point]) -> [Sinusoid; 4] {
        [
            frame_y_fn(points[self.top]),
            frame_y_fn(points[self.bottom]),
            frame_x_fn(points[self.left]),
            frame_x_fn(points[self.right]),
        ]
    }

    /// Height `y'(q_t) − y'(q_b)` and width `x'(q_r) − x'(q_l)` of R_θ.
    pub fn extent_fns(&self, points: &[Point]) -> (Sinusoid, Sinusoid) {
        let [t, b, l, r] = self.side_fns(points);
        (t - b, r - l)
    }
}

/// Extreme tuple at θ; ties go to the smallest index.
pub fn extremes(points: &[Point], theta: f64) -> Result<ExtremeTuple> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let f = points.iter().map(|&p| to_frame(p, theta));
    let mut e = ExtremeTuple { top: 0, bottom: 0, left: 0, right: 0 };
    let first = to_frame(points[0], theta);
    let (mut ty, mut by, mut lx, mut rx) = (first.y, first.y, first.x, first.x);
    for (i, q) in f.enumerate().skip(1) {
        if q.y > ty {
            ty = q.y;
            e.top = i;
        }
        if q.y < by {
            by = q.y;
            e.bottom = i;
        }
        if q.x < lx {
            lx = q.x;
            e.left = i;
        }
        if q.x > rx {
            rx = q.x;
            e.right = i;
        }
    }
    Ok(e)
}

/// R_θ: the frame bounding box of P.
pub fn enclosing_rect(points: &[Point], theta: f64) -> Result<OrientedRect> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut r = OrientedRect {
        theta,
        lo_x: f64::INFINITY,
        hi_x: f64::NEG_INFINITY,
        lo_y: f64::INFINITY,
        hi_y: f64::NEG_INFINITY,
    };
    for &p in points {
        let q = to_frame(p, theta);
        r.lo_x = r.lo_x.min(q.x);
        r.hi_x = r.hi_x.max(q.x);
        r.lo_y = r.lo_y.min(q.y);
        r.hi_y = r.hi_y.max(q.y);
    }
    Ok(r)
}

/// Which extent of R_θ realizes d(θ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DBranch {
    Height,
    Width,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimaryInterval {
    pub lo: f64,
    pub hi: f64,
    pub tuple: ExtremeTuple,
    pub d_branch: DBranch,
}

impl PrimaryInterval {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// d(θ) on this interval as a single sinusoid.
    pub fn d_fn(&self, points: &[Point]) -> Sinusoid {
        let (h, w) = self.tuple.extent_fns(points);
        match self.d_branch {
            DBranch::Height => h,
            DBranch::Width => w,
        }
    }
}

/// Orientations in (0, π/2) where some pair swaps frame-x or frame-y order.
pub fn pair_swap_angles(points: &[Point]) -> Vec<f64> {
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let (dx, dy) = (q.x - p.x, q.y - p.y);
            if dx == 0.0 && dy == 0.0 {
                continue;
            }
            // dx cos θ + dy sin θ = 0 and −dx sin θ + dy cos θ = 0
            for t in [(-dx).atan2(dy), dy.atan2(dx)] {
                let t = t.rem_euclid(PI);
                if t > ANGLE_EPS && t < FRAC_PI_2 - ANGLE_EPS {
                    out.push(t);
                }
            }
        }
    }
    sort_dedup(&mut out);
    out
}

pub(crate) fn sort_dedup(v: &mut Vec<f64>) {
    v.sort_by(f64::total_cmp);
    v.dedup_by(|a, b| (*a - *b).abs() <= ANGLE_EPS);
}

/// `[0, cuts..., π/2]` with cuts strictly inside.
pub(crate) fn partition(cuts: &[f64]) -> Vec<f64> {
    let mut b = vec![0.0];
    b.extend(cuts.iter().copied().filter(|&t| t > ANGLE_EPS && t < FRAC_PI_2 - ANGLE_EPS));
    b.push(FRAC_PI_2);
    b
}

/// Partition of [0, π/2) into maximal intervals with a constant extreme
/// tuple, refined so that d(θ) comes from one extent throughout.
pub fn primary_intervals(points: &[Point]) -> Result<Vec<PrimaryInterval>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let bounds = partition(&pair_swap_angles(points));
    let mut merged: Vec<(f64, f64, ExtremeTuple)> = Vec::new();
    for w in bounds.windows(2) {
        let tuple = extremes(points, 0.5 * (w[0] + w[1]))?;
        match merged.last_mut() {
            Some(last) if last.2 == tuple => last.1 = w[1],
            _ => merged.push((w[0], w[1], tuple)),
        }
    }
    let mut out = Vec::new();
    for (lo, hi, tuple) in merged {
        let (h, w) = tuple.extent_fns(points);
        let diff = h - w;
        let identical = diff.scale() <= AMP_EPS * h.scale().max(w.scale());
        let mut cuts = vec![lo];
        if !identical {
            for r in diff.roots(lo, hi) {
                if r - cuts.last().unwrap() > ANGLE_EPS && hi - r > ANGLE_EPS {
                    cuts.push(r);
                }
            }
        }
        cuts.push(hi);
        for c in cuts.windows(2) {
            let m = 0.5 * (c[0] + c[1]);
            let d_branch = if identical || diff.value(m) >= 0.0 { DBranch::Height } else { DBranch::Width };
            out.push(PrimaryInterval { lo: c[0], hi: c[1], tuple, d_branch });
        }
    }
    Ok(out)
}

/// d(θ): side of a smallest enclosing θ-aligned square.
pub fn square_side(points: &[Point], theta: f64) -> Result<f64> {
    let r = enclosing_rect(points, theta)?;
    Ok(r.width().max(r.height()))
}

/// Direction of C_θ in the frame of θ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alignment {
    /// Parallel to the frame x axis (θ direction).
    Theta,
    /// Parallel to the frame y axis (θ + π/2 direction).
    ThetaPerp,
}

/// C_θ, the set of centers of all smallest enclosing θ-aligned squares.
/// `start` and `end` are in frame coordinates, `start` having the smaller
/// coordinate along the segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterSegment {
    pub theta: f64,
    pub start: Point,
    pub end: Point,
    pub alignment: Alignment,
}

impl CenterSegment {
    pub fn length(&self) -> f64 {
        self.start.dist(&self.end)
    }

    pub fn world_start(&self) -> Point {
        from_frame(self.start, self.theta)
    }

    pub fn world_end(&self) -> Point {
        from_frame(self.end, self.theta)
    }
}

/// C_θ: runs along the shorter extent of R_θ through its center, with length
/// |height − width|; a single point when R_θ is a square.
pub fn center_segment(points: &[Point], theta: f64) -> Result<CenterSegment> {
    let r = enclosing_rect(points, theta)?;
    Ok(center_segment_of(&r))
}

pub fn center_segment_of(r: &OrientedRect) -> CenterSegment {
    let c = r.frame_center();
    let (w, h) = (r.width(), r.height());
    if h >= w {
        let half = 0.5 * (h - w);
        CenterSegment {
            theta: r.theta,
            start: Point::new(c.x - half, c.y),
            end: Point::new(c.x + half, c.y),
            alignment: Alignment::Theta,
        }
    } else {
        let half = 0.5 * (w - h);
        CenterSegment {
            theta: r.theta,
            start: Point::new(c.x, c.y - half),
            end: Point::new(c.x, c.y + half),
            alignment: Alignment::ThetaPerp,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_4;

    fn corners() -> Vec<Point> {
        vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)]
    }

    fn p5() -> Vec<Point> {
        vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(4.0, 2.0),
            Point::new(0.0, 2.0),
            Point::new(2.0, 1.0),
        ]
    }

    fn p3() -> Vec<Point> {
        vec![Point::new(0.0, 0.0), Point::new(2.0, 0.1), Point::new(1.0, 2.0)]
    }

    fn scan(points: &[Point], theta: f64) -> ExtremeTuple {
        let f: Vec<Point> = points.iter().map(|&p| to_frame(p, theta)).collect();
        let arg = |key: &dyn Fn(&Point) -> f64| {
            let best = f.iter().map(key).fold(f64::NEG_INFINITY, f64::max);
            f.iter().position(|p| key(p) == best).unwrap()
        };
        ExtremeTuple { top: arg(&|p| p.y), bottom: arg(&|p| -p.y), left: arg(&|p| -p.x), right: arg(&|p| p.x) }
    }

    fn random_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<Point> {
        (0..n).map(|_| Point::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0))).collect()
    }

    #[test]
    fn extremes_examples() {
        let e = extremes(&p3(), 0.0).unwrap();
        assert_eq!(e, ExtremeTuple { top: 2, bottom: 0, left: 0, right: 1 });
        let one = extremes(&[Point::new(3.0, 4.0)], 0.7).unwrap();
        assert_eq!(one, ExtremeTuple { top: 0, bottom: 0, left: 0, right: 0 });
        assert_eq!(extremes(&[], 0.0), Err(Error::EmptyInput));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.random_range(1..15);
            let pts = random_points(&mut rng, n);
            let t = rng.random_range(0.0..FRAC_PI_2);
            assert_eq!(extremes(&pts, t).unwrap(), scan(&pts, t));
        }
    }

    #[test]
    fn enclosing_rect_examples() {
        let r = enclosing_rect(&corners(), 0.0).unwrap();
        assert_eq!((r.lo_x, r.hi_x, r.lo_y, r.hi_y), (0.0, 1.0, 0.0, 1.0));
        let r = enclosing_rect(&corners(), FRAC_PI_4).unwrap();
        assert!((r.width() - 2f64.sqrt()).abs() < 1e-12 && (r.area() - 2.0).abs() < 1e-12);
        let r = enclosing_rect(&[Point::new(0.0, 0.0), Point::new(1.0, 0.0)], 0.0).unwrap();
        assert_eq!(r.area(), 0.0);
    }

    fn check_partition(points: &[Point]) {
        let iv = primary_intervals(points).unwrap();
        assert_eq!(iv[0].lo, 0.0);
        assert_eq!(iv.last().unwrap().hi, FRAC_PI_2);
        let total: f64 = iv.iter().map(|i| i.hi - i.lo).sum();
        assert!((total - FRAC_PI_2).abs() < 1e-9);
        for w in iv.windows(2) {
            assert_eq!(w[0].hi, w[1].lo);
        }
        for i in &iv {
            assert_eq!(extremes(points, i.mid()).unwrap(), i.tuple);
            let (h, w) = i.tuple.extent_fns(points);
            for k in 1..20 {
                let t = i.lo + (i.hi - i.lo) * k as f64 / 20.0;
                let want = if h.value(t) >= w.value(t) { DBranch::Height } else { DBranch::Width };
                if (h.value(t) - w.value(t)).abs() > 1e-9 {
                    assert_eq!(want, i.d_branch);
                }
            }
        }
    }

    #[test]
    fn primary_intervals_two_points() {
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
        let iv = primary_intervals(&pts).unwrap();
        assert_eq!(iv.len(), 2);
        assert_eq!(iv[0].tuple, iv[1].tuple);
        assert!((iv[0].hi - FRAC_PI_4).abs() < 1e-15);
        assert_eq!((iv[0].d_branch, iv[1].d_branch), (DBranch::Width, DBranch::Height));
        for k in 1..10_000 {
            let t = FRAC_PI_2 * k as f64 / 10_000.0;
            assert_eq!(extremes(&pts, t).unwrap(), iv[0].tuple);
        }
        check_partition(&pts);
    }

    #[test]
    fn primary_intervals_match_dense_sweep() {
        let pts = p3();
        let iv = primary_intervals(&pts).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let t = rng.random_range(0.0..FRAC_PI_2);
            let i = iv.iter().find(|i| t >= i.lo && t < i.hi).unwrap();
            if t - i.lo > 1e-9 && i.hi - t > 1e-9 {
                assert_eq!(extremes(&pts, t).unwrap(), i.tuple);
            }
        }
        check_partition(&pts);
        check_partition(&p5());
        check_partition(&corners());
        for _ in 0..30 {
            let n = rng.random_range(2..12);
            check_partition(&random_points(&mut rng, n));
        }
    }

    #[test]
    fn square_side_and_center_segment() {
        assert_eq!(square_side(&corners(), 0.0).unwrap(), 1.0);
        let c = center_segment(&corners(), 0.0).unwrap();
        assert_eq!(c.start, Point::new(0.5, 0.5));
        assert_eq!(c.length(), 0.0);
        assert_eq!(square_side(&p5(), 0.0).unwrap(), 4.0);
        // width 4 > height 2: centers of 4×4 squares covering [0,4]×[0,2]
        let c = center_segment(&p5(), 0.0).unwrap();
        assert_eq!((c.start, c.end), (Point::new(2.0, 0.0), Point::new(2.0, 2.0)));
        assert_eq!(c.alignment, Alignment::ThetaPerp);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let pts = random_points(&mut rng, 6);
            let t = rng.random_range(0.0..FRAC_PI_2);
            let r = enclosing_rect(&pts, t).unwrap();
            let d = square_side(&pts, t).unwrap();
            assert!(d >= r.width() && d >= r.height() && r.area() <= d * d);
            let c = center_segment(&pts, t).unwrap();
            assert!((c.length() - (r.width() - r.height()).abs()).abs() < 1e-12);
            let m = c.start.midpoint(&c.end);
            assert!(m.dist(&r.frame_center()) < 1e-12);
        }
    }
}
