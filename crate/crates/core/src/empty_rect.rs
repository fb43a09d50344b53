//! Maximal empty rectangles (MERs) among points inside an axis-parallel box,
//! plus the largest empty rectangle and the largest empty square.
//!
//! Everything here works in the box's own frame: points are given as frame
//! coordinates of `b.theta`. A rectangle is empty when no point lies in its
//! open interior; points on its boundary are allowed and are what block it.

use crate::error::{Error, Result};
use crate::geom::{OrientedRect, Point};

/// What stops a side of a maximal empty rectangle from moving outward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Support {
    /// A point (index into the input) holding the edge.
    Point(usize),
    /// The edge lies on the bounding box.
    BoxSide,
}

/// A maximal empty rectangle with its supports `[top, bottom, left, right]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxEmptyRect {
    pub rect: OrientedRect,
    pub supports: [Support; 4],
}

impl MaxEmptyRect {
    pub fn area(&self) -> f64 {
        self.rect.area()
    }
}

/// Default tolerance for a box: the tolerance factor times its diagonal.
pub fn default_eps(b: &OrientedRect) -> f64 {
    crate::geom::eps_factor() * b.width().hypot(b.height())
}

/// All maximal empty rectangles of `q` inside `b`, sorted by
/// `(lo_x, lo_y, hi_x, hi_y)`.
pub fn enumerate_mers(q: &[Point], b: &OrientedRect) -> Result<Vec<MaxEmptyRect>> {
    enumerate_mers_with_eps(q, b, default_eps(b))
}

/// [`enumerate_mers`] with an explicit tolerance. Coordinates closer than
/// `eps` are merged before enumeration (onto the box side if one is involved),
/// so edges that agree within `eps` count as the same edge.
pub fn enumerate_mers_with_eps(q: &[Point], b: &OrientedRect, eps: f64) -> Result<Vec<MaxEmptyRect>> {
    for (i, p) in q.iter().enumerate() {
        if !b.contains_frame(*p, eps) {
            return Err(Error::PointOutsideBox { index: i });
        }
    }
    if b.width() <= eps || b.height() <= eps {
        return Ok(vec![MaxEmptyRect { rect: *b, supports: [Support::BoxSide; 4] }]);
    }
    let xs = snap_axis(q.iter().map(|p| p.x), b.lo_x, b.hi_x, eps);
    let ys = snap_axis(q.iter().map(|p| p.y), b.lo_y, b.hi_y, eps);
    let pts: Vec<Point> = xs.into_iter().zip(ys).map(|(x, y)| Point::new(x, y)).collect();
    let bx = Bounds { lo_x: b.lo_x, hi_x: b.hi_x, lo_y: b.lo_y, hi_y: b.hi_y };

    let mut rects = sweep_down(&pts, &bx);
    let flipped: Vec<Point> = pts.iter().map(|p| Point::new(p.x, -p.y)).collect();
    let fb = Bounds { lo_y: -bx.hi_y, hi_y: -bx.lo_y, ..bx };
    rects.extend(sweep_down(&flipped, &fb).into_iter().map(|r| Bounds { lo_y: -r.hi_y, hi_y: -r.lo_y, ..r }));
    rects.extend(strips(&pts, &bx));

    rects.sort_by(|a, b| a.key().partial_cmp(&b.key()).expect("finite coordinates"));
    rects.dedup_by(|a, b| a.key() == b.key());
    Ok(rects
        .into_iter()
        .map(|r| MaxEmptyRect {
            rect: OrientedRect::new(b.theta, r.lo_x, r.hi_x, r.lo_y, r.hi_y),
            supports: supports(&pts, &r, &bx),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Bounds {
    lo_x: f64,
    hi_x: f64,
    lo_y: f64,
    hi_y: f64,
}

impl Bounds {
    fn key(&self) -> (f64, f64, f64, f64) {
        (self.lo_x, self.lo_y, self.hi_x, self.hi_y)
    }
}

/// Snaps each value to its ε-cluster representative: the box side when the
/// cluster touches one, else the cluster minimum.
fn snap_axis(values: impl Iterator<Item = f64>, lo: f64, hi: f64, eps: f64) -> Vec<f64> {
    let vals: Vec<f64> = values.collect();
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let mut out = vec![0.0; vals.len()];
    let mut i = 0;
    while i < order.len() {
        let start = vals[order[i]];
        let mut j = i;
        while j < order.len() && vals[order[j]] - start <= eps {
            j += 1;
        }
        let rep = if (start - lo).abs() <= eps || start < lo {
            lo
        } else if (vals[order[j - 1]] - hi).abs() <= eps || vals[order[j - 1]] > hi {
            hi
        } else {
            start
        };
        for &k in &order[i..j] {
            out[k] = rep;
        }
        i = j;
    }
    out
}

/// MERs whose top edge is blocked by a point, found by sweeping down from
/// each point while narrowing the free x-interval around it.
fn sweep_down(pts: &[Point], b: &Bounds) -> Vec<Bounds> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &c| pts[c].y.total_cmp(&pts[a].y));
    let mut out = Vec::new();
    for (rank, &a) in order.iter().enumerate() {
        let p = pts[a];
        if p.x <= b.lo_x || p.x >= b.hi_x || p.y <= b.lo_y {
            continue;
        }
        let (mut l, mut r) = (b.lo_x, b.hi_x);
        let below = order[rank + 1..].iter().map(|&k| pts[k]).skip_while(|s| s.y >= p.y);
        let below: Vec<Point> = below.collect();
        let mut stopped = false;
        let mut g = 0;
        while g < below.len() && below[g].y > b.lo_y {
            let y = below[g].y;
            let mut h = g;
            while h < below.len() && below[h].y == y {
                h += 1;
            }
            let group = &below[g..h];
            if group.iter().any(|s| s.x > l && s.x < r) {
                out.push(Bounds { lo_x: l, hi_x: r, lo_y: y, hi_y: p.y });
                for s in group {
                    if s.x > l && s.x < r {
                        if s.x < p.x {
                            l = s.x;
                        } else if s.x > p.x {
                            r = s.x;
                        } else {
                            stopped = true;
                        }
                    }
                }
                if stopped {
                    break;
                }
            }
            g = h;
        }
        if !stopped {
            out.push(Bounds { lo_x: l, hi_x: r, lo_y: b.lo_y, hi_y: p.y });
        }
    }
    out
}

/// Full-height MERs between consecutive blocking x-coordinates.
fn strips(pts: &[Point], b: &Bounds) -> Vec<Bounds> {
    let mut xs: Vec<f64> = pts.iter().filter(|p| p.y > b.lo_y && p.y < b.hi_y).map(|p| p.x).collect();
    xs.push(b.lo_x);
    xs.push(b.hi_x);
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs.windows(2)
        .filter(|w| w[0] < w[1])
        .map(|w| Bounds { lo_x: w[0], hi_x: w[1], lo_y: b.lo_y, hi_y: b.hi_y })
        .collect()
}

/// A side on the box is `BoxSide`. Otherwise the side is held by the
/// smallest-index point on the open edge, or failing that by one on a corner.
fn supports(pts: &[Point], r: &Bounds, bx: &Bounds) -> [Support; 4] {
    let on_h = |y: f64, boxy: f64| {
        if y == boxy {
            return Support::BoxSide;
        }
        pts.iter()
            .position(|p| p.y == y && p.x > r.lo_x && p.x < r.hi_x)
            .or_else(|| pts.iter().position(|p| p.y == y && p.x >= r.lo_x && p.x <= r.hi_x))
            .map_or(Support::BoxSide, Support::Point)
    };
    let on_v = |x: f64, boxx: f64| {
        if x == boxx {
            return Support::BoxSide;
        }
        pts.iter()
            .position(|p| p.x == x && p.y > r.lo_y && p.y < r.hi_y)
            .or_else(|| pts.iter().position(|p| p.x == x && p.y >= r.lo_y && p.y <= r.hi_y))
            .map_or(Support::BoxSide, Support::Point)
    };
    [on_h(r.hi_y, bx.hi_y), on_h(r.lo_y, bx.lo_y), on_v(r.lo_x, bx.lo_x), on_v(r.hi_x, bx.hi_x)]
}

/// A maximum-area MER; ties go to the lexicographically smallest
/// `(lo_x, lo_y, hi_x, hi_y)`.
pub fn largest_empty_rect(q: &[Point], b: &OrientedRect) -> Result<MaxEmptyRect> {
    let eps = default_eps(b);
    let mers = enumerate_mers_with_eps(q, b, eps)?;
    Ok(best_by(&mers, |m| m.area(), eps * b.width().hypot(b.height())))
}

/// The largest empty square inside `b`, placed at the lower-left corner of
/// the first MER (in sorted order) that attains the maximum side.
pub fn largest_empty_square_fixed(q: &[Point], b: &OrientedRect) -> Result<OrientedRect> {
    let eps = default_eps(b);
    let mers = enumerate_mers_with_eps(q, b, eps)?;
    let best = best_by(&mers, |m| m.rect.width().min(m.rect.height()), eps);
    let s = best.rect.width().min(best.rect.height());
    let r = best.rect;
    Ok(OrientedRect::new(r.theta, r.lo_x, r.lo_x + s, r.lo_y, r.lo_y + s))
}

/// First element whose key beats every earlier one by more than `tol`.
pub(crate) fn best_by(mers: &[MaxEmptyRect], key: impl Fn(&MaxEmptyRect) -> f64, tol: f64) -> MaxEmptyRect {
    let mut best = mers[0];
    let mut bv = key(&best);
    for m in &mers[1..] {
        let v = key(m);
        if v > bv + tol {
            best = *m;
            bv = v;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> OrientedRect {
        OrientedRect::axis(0.0, 1.0, 0.0, 1.0)
    }

    fn keys(m: &[MaxEmptyRect]) -> Vec<(f64, f64, f64, f64)> {
        m.iter().map(|m| (m.rect.lo_x, m.rect.hi_x, m.rect.lo_y, m.rect.hi_y)).collect()
    }

    #[test]
    fn empty_input_gives_box() {
        let m = enumerate_mers(&[], &unit()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].rect, unit());
        assert_eq!(m[0].supports, [Support::BoxSide; 4]);
        assert_eq!(largest_empty_rect(&[], &unit()).unwrap().rect, unit());
        assert_eq!(largest_empty_square_fixed(&[], &unit()).unwrap(), unit());
    }

    #[test]
    fn center_point_gives_four_strips() {
        let m = enumerate_mers(&[Point::new(0.5, 0.5)], &unit()).unwrap();
        assert_eq!(
            keys(&m),
            vec![(0.0, 0.5, 0.0, 1.0), (0.0, 1.0, 0.0, 0.5), (0.0, 1.0, 0.5, 1.0), (0.5, 1.0, 0.0, 1.0)]
        );
        assert_eq!(m[0].supports, [Support::BoxSide, Support::BoxSide, Support::BoxSide, Support::Point(0)]);
        assert_eq!(largest_empty_rect(&[Point::new(0.5, 0.5)], &unit()).unwrap().area(), 0.5);
        let s = largest_empty_square_fixed(&[Point::new(0.5, 0.5)], &unit()).unwrap();
        assert_eq!((s.width(), s.area()), (0.5, 0.25));
    }

    #[test]
    fn two_diagonal_points() {
        let q = [Point::new(0.3, 0.3), Point::new(0.7, 0.7)];
        let m = enumerate_mers(&q, &unit()).unwrap();
        assert_eq!(m.len(), 8);
        let best = largest_empty_rect(&q, &unit()).unwrap();
        assert!((best.area() - 0.49).abs() < 1e-12);
        let s = largest_empty_square_fixed(&q, &unit()).unwrap();
        assert!((s.width() - 0.7).abs() < 1e-12);
    }

    #[test]
    fn off_center_point() {
        let best = largest_empty_rect(&[Point::new(0.25, 0.5)], &unit()).unwrap();
        assert_eq!((best.rect.lo_x, best.rect.hi_x, best.area()), (0.25, 1.0, 0.75));
    }

    #[test]
    fn boundary_points_do_not_block_interior() {
        let q = [Point::new(0.0, 0.0), Point::new(1.0, 1.0), Point::new(0.5, 1.0)];
        let m = enumerate_mers(&q, &unit()).unwrap();
        assert_eq!(keys(&m), vec![(0.0, 1.0, 0.0, 1.0)]);
        assert_eq!(m[0].supports[0], Support::BoxSide);
    }

    #[test]
    fn rejects_points_outside() {
        let e = enumerate_mers(&[Point::new(0.5, 0.5), Point::new(1.5, 0.5)], &unit());
        assert_eq!(e.unwrap_err(), Error::PointOutsideBox { index: 1 });
    }

    #[test]
    fn near_coincident_coordinates_snap() {
        let q = [Point::new(0.5, 0.5), Point::new(0.5 + 1e-13, 0.8)];
        let m = enumerate_mers(&q, &unit()).unwrap();
        assert!(m.iter().all(|m| m.rect.width() > 1e-6));
        assert_eq!(m.len(), 5);
    }
}
