//! δ_E(θ): side length of the largest square centered on C_θ that fits in the
//! class rectangle E_θ.
//!
//! Written for the case where C_θ is parallel to the frame x axis (d = height);
//! the other case swaps the roles of the axes. With the along-axis sides
//! `a_lo`, `a_hi` of E, the across-axis sides `top`, `bottom`, the line `m`
//! carrying C_θ and its ends `c0 ≤ c1`, the inscribed half-side is
//!
//! ```text
//! V = min(top − m, m − bottom)                     (needs both ≥ 0)
//! A = (a_hi − a_lo)/2    if (a_lo + a_hi)/2 ∈ [c0, c1]
//!     a_hi − c0          if it lies before c0       (needs ≥ 0)
//!     c1 − a_lo          if it lies after c1        (needs ≥ 0)
//! δ = 2·min(V, A), or 0 when infeasible.
//! ```
//!
//! Every quantity is a base-0 frequency-1 sinusoid, so splitting the piece at
//! the roots of all case-deciding differences leaves one branch per
//! sub-interval.

use super::classes::{container_sides, ClassSweep, Container, Piece};
use crate::calipers::DBranch;
use crate::error::{Error, Result};
use crate::geom::{Point, ANGLE_EPS};
use crate::trig::{PiecewiseSinusoid, Sinusoid};

/// δ_E on the piece's elementary interval. The sweep must use the square-hull
/// container so that every inscribed square also lies in an enclosing square.
pub fn compute_delta(points: &[Point], sweep: &ClassSweep, piece: Piece, tol: f64) -> Result<PiecewiseSinusoid> {
    if sweep.container != Container::SquareHull {
        return Err(Error::InvalidPiece("square annuli need the square-hull container"));
    }
    let e = sweep.interval(piece);
    let primary = sweep.primary(piece);
    let sides = sweep.piece_sides(points, piece);
    let outer = container_sides(points, primary, Container::Rect);
    Ok(delta_on(sides, outer, primary.d_branch, e.lo, e.hi, tol))
}

/// δ on `[lo, hi]` for E sides and R_θ sides, both `[top, bottom, left, right]`.
pub fn delta_on(
    e: [Sinusoid; 4],
    r: [Sinusoid; 4],
    branch: DBranch,
    lo: f64,
    hi: f64,
    tol: f64,
) -> PiecewiseSinusoid {
    let [et, eb, el, er] = e;
    let [rt, rb, rl, rr] = r;
    let (h, w) = (rt - rb, rr - rl);
    // (top, bottom, a_lo, a_hi, m, c0, c1) in the C-aligned frame
    let (top, bottom, a_lo, a_hi, m, c0, c1) = match branch {
        DBranch::Height => (et, eb, el, er, (rt + rb) * 0.5, rr - h * 0.5, rl + h * 0.5),
        DBranch::Width => (er, el, eb, et, (rl + rr) * 0.5, rt - w * 0.5, rb + w * 0.5),
    };
    let v1 = top - m;
    let v2 = m - bottom;
    let mid_e = (a_lo + a_hi) * 0.5;
    let a_center = (a_hi - a_lo) * 0.5;
    let a_left = a_hi - c0;
    let a_right = c1 - a_lo;

    let mut events = vec![v1, v2, v1 - v2, mid_e - c0, mid_e - c1, a_left, a_right];
    for v in [v1, v2] {
        for a in [a_center, a_left, a_right] {
            events.push(v - a);
        }
    }
    let mut cuts = vec![lo, hi];
    for f in &events {
        if f.scale() > tol {
            cuts.extend(f.roots(lo, hi));
        }
    }
    cuts.sort_by(f64::total_cmp);
    let mut breaks = vec![lo];
    for c in cuts {
        if c - breaks.last().unwrap() > ANGLE_EPS && hi - c > ANGLE_EPS {
            breaks.push(c);
        }
    }
    breaks.push(hi);

    let zero = Sinusoid::harmonic(0.0, 0.0);
    let pieces = breaks
        .windows(2)
        .map(|b| {
            let t = 0.5 * (b[0] + b[1]);
            if v1.value(t) < -tol || v2.value(t) < -tol {
                return zero;
            }
            let v = if v1.value(t) <= v2.value(t) { v1 } else { v2 };
            let a = if mid_e.value(t) < c0.value(t) {
                a_left
            } else if mid_e.value(t) > c1.value(t) {
                a_right
            } else {
                a_center
            };
            if a.value(t) < -tol {
                return zero;
            }
            let radius = if v.value(t) <= a.value(t) { v } else { a };
            if radius.value(t) <= 0.0 {
                zero
            } else {
                radius * 2.0
            }
        })
        .collect();
    PiecewiseSinusoid::new(breaks, pieces).expect("strictly increasing breaks")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calipers::{center_segment_of, enclosing_rect, frame_x_fn, frame_y_fn};
    use crate::rotating::classes::mer_classes;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Largest side of a square centered on C_θ inside [l,r]×[b,t], by sampling.
    fn sampled_delta(rect: [f64; 4], points: &[Point], theta: f64, samples: usize) -> f64 {
        let [t, b, l, r] = rect;
        let c = center_segment_of(&enclosing_rect(points, theta).unwrap());
        let mut best: f64 = 0.0;
        for k in 0..=samples {
            let u = k as f64 / samples as f64;
            let p = Point::new(c.start.x + u * (c.end.x - c.start.x), c.start.y + u * (c.end.y - c.start.y));
            let half = (p.x - l).min(r - p.x).min(p.y - b).min(t - p.y);
            best = best.max(2.0 * half);
        }
        best
    }

    #[test]
    fn matches_sampled_centers() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..6 {
            let pts: Vec<Point> =
                (0..6).map(|_| Point::new(rng.random_range(0.0..3.0), rng.random_range(0.0..1.5))).collect();
            let sweep = mer_classes(&pts, Container::SquareHull).unwrap();
            for _ in 0..30 {
                let piece = sweep.pieces[rng.random_range(0..sweep.pieces.len())];
                let delta = compute_delta(&pts, &sweep, piece, 1e-12).unwrap();
                let sides = sweep.piece_sides(&pts, piece);
                let e = *sweep.interval(piece);
                for _ in 0..50 {
                    let theta = rng.random_range(e.lo..e.hi);
                    let rect = sides.map(|s| s.value(theta));
                    let want = sampled_delta(rect, &pts, theta, 10_000);
                    let got = delta.value(theta);
                    let r = enclosing_rect(&pts, theta).unwrap();
                    assert!(got <= r.width().max(r.height()) + 1e-12);
                    assert!(got <= (rect[0] - rect[1]).min(rect[3] - rect[2]) + 1e-12);
                    // sampling is off by at most one step in center position
                    let c = center_segment_of(&r);
                    let bound = 2.0 * c.length() / 10_000.0 + 1e-12;
                    assert!(got >= want - 1e-12 && got <= want + bound, "{got} vs {want}");
                }
            }
        }
    }

    #[test]
    fn disjoint_center_segment_gives_zero() {
        // E = [0, 0.2]×[0, 1] lies left of C_θ, which stays near the box center
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)];
        let e = [frame_y_fn(pts[2]), frame_y_fn(pts[0]), frame_x_fn(pts[0]), frame_x_fn(Point::new(0.2, 0.0))];
        let primary = crate::calipers::primary_intervals(&pts).unwrap()[0];
        let r = container_sides(&pts, &primary, Container::Rect);
        let d = delta_on(e, r, primary.d_branch, primary.lo, primary.lo + 0.01, 1e-12);
        for (_, _, s) in d.pieces() {
            assert_eq!(s.scale(), 0.0);
        }
    }
}
