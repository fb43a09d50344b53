//! Brute-force reference implementations, slow and deliberately simple.
//!
//! `oracle_mers` and `oracle_fixed` share no code with the solvers they
//! check: they work from frame coordinates and the definitions alone.
//! `oracle_any` scans a uniform θ grid with the exact fixed-orientation
//! solvers.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use crate::calipers::enclosing_rect;
use crate::empty_rect::{largest_empty_rect, largest_empty_square_fixed, MaxEmptyRect, Support};
use crate::error::{Error, Result};
use crate::fixed::solve_fixed;
use crate::geom::{eps_factor, to_frame, OrientedRect, Point};
use crate::problem::{is_supported, Objective, Shape};

/// Largest input accepted by `oracle_mers`.
pub const MER_LIMIT: usize = 10;
/// Largest input accepted by `oracle_fixed` and `oracle_any`.
pub const SOLVER_LIMIT: usize = 12;

/// Agreement tolerance `absolute + relative·scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
}

impl Tolerance {
    pub fn bound(&self, scale: f64) -> f64 {
        self.absolute + self.relative * scale
    }

    pub fn agrees(&self, a: f64, b: f64, scale: f64) -> bool {
        (a - b).abs() <= self.bound(scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub theta_samples: usize,
    pub center_samples: usize,
    /// For values that depend on the square-center grid.
    pub grid: Tolerance,
    /// For values computed exactly.
    pub exact: Tolerance,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            theta_samples: 20_000,
            center_samples: 100_000,
            grid: Tolerance { absolute: 0.0, relative: 1e-5 },
            exact: Tolerance { absolute: 0.0, relative: 1e-12 },
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.theta_samples < 100 {
            return Err(Error::InvalidConfig("theta_samples must be at least 100"));
        }
        if self.center_samples < 100 {
            return Err(Error::InvalidConfig("center_samples must be at least 100"));
        }
        Ok(())
    }

    /// Tolerance for comparing a solver against `oracle_fixed`.
    pub fn fixed_tolerance(&self, shape: Shape) -> Tolerance {
        if shape == Shape::Square {
            self.grid
        } else {
            self.exact
        }
    }
}

/// Reference values; fields that do not apply to the problem are `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub width: Option<f64>,
    pub area: Option<f64>,
    pub side: Option<f64>,
    /// One-sided bound on how far the value may lie above the true optimum
    /// of a minimization (zero for exact values).
    pub error_bound: f64,
}

impl OracleValue {
    /// The value the objective ranks first.
    pub fn primary(&self, shape: Shape, objective: Objective) -> f64 {
        let v = match (shape, objective) {
            (Shape::EmptySquare, _) => self.side,
            (_, Objective::Width | Objective::AreaWidth) => self.width,
            _ => self.area,
        };
        v.expect("primary value present")
    }

    /// The value the objective ranks second, if any.
    pub fn secondary(&self, objective: Objective) -> Option<f64> {
        match objective {
            Objective::AreaWidth => self.area,
            Objective::WidthArea => self.width,
            _ => None,
        }
    }
}

/// Best value over a uniform θ grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleAny {
    pub value: OracleValue,
    pub theta: f64,
    /// Grid spacing in radians.
    pub step: f64,
}

fn check(points: &[Point], limit: usize) -> Result<()> {
    if points.len() > limit {
        return Err(Error::SizeGuard { limit, got: points.len() });
    }
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (index, p) in points.iter().enumerate() {
        if !p.x.is_finite() || !p.y.is_finite() {
            return Err(Error::NonFinite { index });
        }
    }
    Ok(())
}

/// Sorted candidate edge positions: box sides first, then point coordinates
/// not within `eps` of an earlier candidate.
fn candidates(lo: f64, hi: f64, coords: impl Iterator<Item = f64>, eps: f64) -> Vec<f64> {
    let mut out = vec![lo, hi];
    for c in coords {
        if c > lo && c < hi && out.iter().all(|&v| (v - c).abs() > eps) {
            out.push(c);
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Every maximal empty rectangle among the frame points `q` inside `b`,
/// found by trying all support tuples. Sorted by `(lo_x, lo_y, hi_x, hi_y)`.
pub fn oracle_mers(q: &[Point], b: &OrientedRect) -> Result<Vec<MaxEmptyRect>> {
    if q.len() > MER_LIMIT {
        return Err(Error::SizeGuard { limit: MER_LIMIT, got: q.len() });
    }
    exhaustive_mers(q, b)
}

fn exhaustive_mers(q: &[Point], b: &OrientedRect) -> Result<Vec<MaxEmptyRect>> {
    let eps = eps_factor() * b.width().hypot(b.height());
    for (index, p) in q.iter().enumerate() {
        if p.x < b.lo_x - eps || p.x > b.hi_x + eps || p.y < b.lo_y - eps || p.y > b.hi_y + eps {
            return Err(Error::PointOutsideBox { index });
        }
    }
    if b.width() <= eps || b.height() <= eps {
        return Ok(vec![MaxEmptyRect { rect: *b, supports: [Support::BoxSide; 4] }]);
    }
    let xs = candidates(b.lo_x, b.hi_x, q.iter().map(|p| p.x), eps);
    let ys = candidates(b.lo_y, b.hi_y, q.iter().map(|p| p.y), eps);
    let near = |a: f64, c: f64| (a - c).abs() <= eps;
    let inside = |v: f64, lo: f64, hi: f64| v > lo + eps && v < hi - eps;

    let mut out = Vec::new();
    for (i, &lo_x) in xs.iter().enumerate() {
        for &hi_x in &xs[i + 1..] {
            for (j, &lo_y) in ys.iter().enumerate() {
                for &hi_y in &ys[j + 1..] {
                    if q.iter().any(|p| inside(p.x, lo_x, hi_x) && inside(p.y, lo_y, hi_y)) {
                        continue;
                    }
                    let blocks_h = |y: f64| q.iter().any(|p| near(p.y, y) && inside(p.x, lo_x, hi_x));
                    let blocks_v = |x: f64| q.iter().any(|p| near(p.x, x) && inside(p.y, lo_y, hi_y));
                    let maximal = (hi_y == b.hi_y || blocks_h(hi_y))
                        && (lo_y == b.lo_y || blocks_h(lo_y))
                        && (lo_x == b.lo_x || blocks_v(lo_x))
                        && (hi_x == b.hi_x || blocks_v(hi_x));
                    if !maximal {
                        continue;
                    }
                    let rect = OrientedRect::new(b.theta, lo_x, hi_x, lo_y, hi_y);
                    let holder = |box_side: bool, on_edge: &dyn Fn(&Point) -> bool, on_span: &dyn Fn(&Point) -> bool| {
                        if box_side {
                            return Support::BoxSide;
                        }
                        q.iter()
                            .position(|p| on_edge(p) && on_span(p))
                            .or_else(|| q.iter().position(on_edge))
                            .map_or(Support::BoxSide, Support::Point)
                    };
                    let span_x = |p: &Point| inside(p.x, lo_x, hi_x);
                    let span_y = |p: &Point| inside(p.y, lo_y, hi_y);
                    let corner_x = |p: &Point| p.x >= lo_x - eps && p.x <= hi_x + eps;
                    let corner_y = |p: &Point| p.y >= lo_y - eps && p.y <= hi_y + eps;
                    let supports = [
                        holder(hi_y == b.hi_y, &|p| near(p.y, hi_y) && corner_x(p), &span_x),
                        holder(lo_y == b.lo_y, &|p| near(p.y, lo_y) && corner_x(p), &span_x),
                        holder(lo_x == b.lo_x, &|p| near(p.x, lo_x) && corner_y(p), &span_y),
                        holder(hi_x == b.hi_x, &|p| near(p.x, hi_x) && corner_y(p), &span_y),
                    ];
                    out.push(MaxEmptyRect { rect, supports });
                }
            }
        }
    }
    out.sort_by(|a, c| {
        let k = |m: &MaxEmptyRect| [m.rect.lo_x, m.rect.lo_y, m.rect.hi_x, m.rect.hi_y];
        k(a).partial_cmp(&k(c)).expect("finite coordinates")
    });
    Ok(out)
}

/// Frame points and their bounding box `(lo_x, hi_x, lo_y, hi_y)`.
fn frame_box(points: &[Point], theta: f64) -> (Vec<Point>, OrientedRect) {
    let f: Vec<Point> = points.iter().map(|&p| to_frame(p, theta)).collect();
    let fold = |g: fn(&Point) -> f64, init: f64, op: fn(f64, f64) -> f64| f.iter().map(g).fold(init, op);
    let b = OrientedRect::new(
        theta,
        fold(|p| p.x, f64::INFINITY, f64::min),
        fold(|p| p.x, f64::NEG_INFINITY, f64::max),
        fold(|p| p.y, f64::INFINITY, f64::min),
        fold(|p| p.y, f64::NEG_INFINITY, f64::max),
    );
    (f, b)
}

/// Largest L∞ distance from `c` to the nearest frame point.
fn linf_clearance(f: &[Point], c: Point) -> f64 {
    f.iter().map(|p| (p.x - c.x).abs().max((p.y - c.y).abs())).fold(f64::INFINITY, f64::min)
}

/// Square annulus by sampling centers of smallest enclosing squares, then
/// resampling around the best one.
fn square_by_grid(f: &[Point], b: &OrientedRect, samples: usize) -> OracleValue {
    let (w, h) = (b.width(), b.height());
    let d = w.max(h);
    let (start, end) = if h >= w {
        let y = 0.5 * (b.lo_y + b.hi_y);
        (Point::new(b.hi_x - 0.5 * d, y), Point::new(b.lo_x + 0.5 * d, y))
    } else {
        let x = 0.5 * (b.lo_x + b.hi_x);
        (Point::new(x, b.hi_y - 0.5 * d), Point::new(x, b.lo_y + 0.5 * d))
    };
    let at = |u: f64| Point::new(start.x + u * (end.x - start.x), start.y + u * (end.y - start.y));
    let len = start.dist(&end);
    let mut best = (0.0, linf_clearance(f, at(0.0)));
    for k in 1..=samples {
        let u = k as f64 / samples as f64;
        let rho = linf_clearance(f, at(u));
        if rho > best.1 {
            best = (u, rho);
        }
    }
    let du = 1.0 / samples as f64;
    let fine = 1000;
    for k in 0..=fine {
        let u = (best.0 - du + 2.0 * du * k as f64 / fine as f64).clamp(0.0, 1.0);
        let rho = linf_clearance(f, at(u));
        if rho > best.1 {
            best = (u, rho);
        }
    }
    let rho = best.1;
    // clearance is 1-Lipschitz along the segment and every center lies
    // within half a coarse step of a sample
    let e = 0.5 * len * du;
    OracleValue {
        width: Some(0.5 * d - rho),
        area: Some(d * d - 4.0 * rho * rho),
        side: None,
        error_bound: e.max(8.0 * rho * e + 4.0 * e * e),
    }
}

/// Optimal value at orientation θ by exhaustive or sampled search.
pub fn oracle_fixed(
    points: &[Point],
    theta: f64,
    shape: Shape,
    objective: Objective,
    cfg: &OracleConfig,
) -> Result<OracleValue> {
    check(points, SOLVER_LIMIT)?;
    cfg.validate()?;
    if !is_supported(shape, objective) {
        return Err(Error::InvalidConfig("unsupported shape and objective"));
    }
    let (f, b) = frame_box(points, theta);
    let (w, h) = (b.width(), b.height());
    let uniform = || {
        let u = f
            .iter()
            .map(|p| (p.x - b.lo_x).min(b.hi_x - p.x).min(p.y - b.lo_y).min(b.hi_y - p.y))
            .fold(0.0, f64::max);
        (u, w * h - (w - 2.0 * u) * (h - 2.0 * u))
    };
    let gaps = |r: &OrientedRect| {
        (r.lo_x - b.lo_x).max(b.hi_x - r.hi_x).max(r.lo_y - b.lo_y).max(b.hi_y - r.hi_y)
    };
    let exact = |width: Option<f64>, area: Option<f64>, side: Option<f64>| OracleValue {
        width,
        area,
        side,
        error_bound: 0.0,
    };
    let mers = || exhaustive_mers(&f, &b);
    let eps = eps_factor() * w.hypot(h);
    let area_tol = eps * w.hypot(h);
    Ok(match (shape, objective) {
        (Shape::Square, _) => square_by_grid(&f, &b, cfg.center_samples),
        (Shape::UniformRect, _) | (Shape::Rect, Objective::Width) => {
            let (u, a) = uniform();
            exact(Some(u), Some(a), None)
        }
        (Shape::Rect, Objective::Area) => {
            let top = mers()?.iter().map(|m| m.rect.area()).fold(0.0, f64::max);
            exact(None, Some(w * h - top), None)
        }
        (Shape::Rect, Objective::AreaWidth) => {
            let (u, _) = uniform();
            let core = OrientedRect::new(theta, b.lo_x + u, b.hi_x - u, b.lo_y + u, b.hi_y - u);
            let holds = |r: &OrientedRect| {
                r.lo_x <= core.lo_x + eps
                    && r.hi_x >= core.hi_x - eps
                    && r.lo_y <= core.lo_y + eps
                    && r.hi_y >= core.hi_y - eps
            };
            let top = mers()?.iter().filter(|m| holds(&m.rect)).map(|m| m.rect.area()).fold(core.area(), f64::max);
            exact(Some(u), Some(w * h - top), None)
        }
        (Shape::Rect, Objective::WidthArea) => {
            let all = mers()?;
            let top = all.iter().map(|m| m.rect.area()).fold(0.0, f64::max);
            let width = all
                .iter()
                .filter(|m| m.rect.area() >= top - area_tol)
                .map(|m| gaps(&m.rect))
                .fold(f64::INFINITY, f64::min);
            exact(Some(width), Some(w * h - top), None)
        }
        (Shape::EmptyRect, _) => exact(None, Some(mers()?.iter().map(|m| m.rect.area()).fold(0.0, f64::max)), None),
        (Shape::EmptySquare, _) => {
            let s = mers()?.iter().map(|m| m.rect.width().min(m.rect.height())).fold(0.0, f64::max);
            exact(None, Some(s * s), Some(s))
        }
        (Shape::Rect, Objective::Largest) => unreachable!("rejected above"),
    })
}

/// Value of the exact fixed-orientation solver at θ.
fn fixed_value(points: &[Point], theta: f64, shape: Shape, objective: Objective) -> Result<OracleValue> {
    let value = |width, area, side| OracleValue { width, area, side, error_bound: 0.0 };
    match shape {
        Shape::EmptyRect => {
            let b = enclosing_rect(points, theta)?;
            let f: Vec<Point> = points.iter().map(|&p| to_frame(p, theta)).collect();
            Ok(value(None, Some(largest_empty_rect(&f, &b)?.area()), None))
        }
        Shape::EmptySquare => {
            let b = enclosing_rect(points, theta)?;
            let f: Vec<Point> = points.iter().map(|&p| to_frame(p, theta)).collect();
            let s = largest_empty_square_fixed(&f, &b)?.width();
            Ok(value(None, Some(s * s), Some(s)))
        }
        _ => {
            let r = solve_fixed(points, theta, shape, objective)?;
            Ok(value(Some(r.width), Some(r.area), None))
        }
    }
}

/// Best value of the exact fixed-orientation solver over `theta_samples`
/// uniformly spaced orientations in [0, π/2). Minimizes annulus objectives
/// and maximizes empty shapes; ties keep the smaller θ.
pub fn oracle_any(points: &[Point], shape: Shape, objective: Objective, cfg: &OracleConfig) -> Result<OracleAny> {
    check(points, SOLVER_LIMIT)?;
    cfg.validate()?;
    if !is_supported(shape, objective) {
        return Err(Error::InvalidConfig("unsupported shape and objective"));
    }
    let n = cfg.theta_samples;
    let step = FRAC_PI_2 / n as f64;
    let values: Vec<OracleValue> = (0..n)
        .into_par_iter()
        .map(|k| fixed_value(points, k as f64 * step, shape, objective))
        .collect::<Result<_>>()?;
    let sign = if shape.is_empty_shape() { -1.0 } else { 1.0 };
    let key = |v: &OracleValue| (sign * v.primary(shape, objective), v.secondary(objective).unwrap_or(0.0));
    let mut best = 0;
    for k in 1..n {
        if key(&values[k]) < key(&values[best]) {
            best = k;
        }
    }
    Ok(OracleAny { value: values[best], theta: best as f64 * step, step })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> OrientedRect {
        OrientedRect::axis(0.0, 1.0, 0.0, 1.0)
    }

    fn corners() -> Vec<Point> {
        vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)]
    }

    fn corners_center() -> Vec<Point> {
        let mut p = corners();
        p.push(Point::new(0.5, 0.5));
        p
    }

    fn p5() -> Vec<Point> {
        vec![Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(4.0, 2.0), Point::new(0.0, 2.0), Point::new(2.0, 1.0)]
    }

    #[test]
    fn center_point_gives_four_strips() {
        let m = oracle_mers(&[Point::new(0.5, 0.5)], &unit()).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.iter().all(|m| (m.rect.area() - 0.5).abs() < 1e-15));
        assert!(m.iter().all(|m| m.supports.contains(&Support::Point(0))));
    }

    #[test]
    fn no_points_gives_the_box() {
        let m = oracle_mers(&[], &unit()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].rect, unit());
    }

    #[test]
    fn two_diagonal_points() {
        // four strips, two slabs, and two rectangles pinned by both points
        let m = oracle_mers(&[Point::new(0.3, 0.3), Point::new(0.7, 0.7)], &unit()).unwrap();
        assert_eq!(m.len(), 8);
    }

    #[test]
    fn size_guard() {
        let q: Vec<Point> = (0..11).map(|i| Point::new(i as f64 / 11.0, 0.5)).collect();
        assert_eq!(oracle_mers(&q, &unit()), Err(Error::SizeGuard { limit: 10, got: 11 }));
        let p: Vec<Point> = (0..13).map(|i| Point::new(i as f64, 0.0)).collect();
        let cfg = OracleConfig::default();
        assert!(matches!(oracle_fixed(&p, 0.0, Shape::Square, Objective::Width, &cfg), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn config_guard() {
        let cfg = OracleConfig { theta_samples: 99, ..OracleConfig::default() };
        assert!(oracle_any(&corners(), Shape::Square, Objective::Width, &cfg).is_err());
    }

    #[test]
    fn golden_fixed_values() {
        let cfg = OracleConfig::default();
        let v = oracle_fixed(&corners_center(), 0.0, Shape::Square, Objective::Width, &cfg).unwrap();
        assert!((v.width.unwrap() - 0.5).abs() < 1e-5);
        let v = oracle_fixed(&p5(), 0.0, Shape::Square, Objective::Width, &cfg).unwrap();
        assert!((v.width.unwrap() - 1.0).abs() < 1e-4);
        assert!((v.area.unwrap() - 12.0).abs() < 1e-3);
        let v = oracle_fixed(&p5(), 0.0, Shape::UniformRect, Objective::Area, &cfg).unwrap();
        assert_eq!((v.width, v.area), (Some(1.0), Some(8.0)));
        let v = oracle_fixed(&corners_center(), 0.0, Shape::Rect, Objective::AreaWidth, &cfg).unwrap();
        assert_eq!((v.width, v.area), (Some(0.5), Some(0.5)));
        let v = oracle_fixed(&corners_center(), 0.0, Shape::EmptyRect, Objective::Largest, &cfg).unwrap();
        assert_eq!(v.area, Some(0.5));
    }

    #[test]
    fn corners_are_zero() {
        let cfg = OracleConfig { theta_samples: 100, center_samples: 100, ..OracleConfig::default() };
        for (shape, obj) in [
            (Shape::Square, Objective::Width),
            (Shape::UniformRect, Objective::Area),
            (Shape::Rect, Objective::Area),
            (Shape::Rect, Objective::AreaWidth),
            (Shape::Rect, Objective::WidthArea),
        ] {
            let v = oracle_fixed(&corners(), 0.0, shape, obj, &cfg).unwrap();
            assert!(v.primary(shape, obj).abs() < 1e-12, "{shape} {obj}");
            let a = oracle_any(&corners(), shape, obj, &cfg).unwrap();
            assert!(a.value.primary(shape, obj).abs() < 1e-12, "{shape} {obj}");
            assert_eq!(a.theta, 0.0);
        }
    }

    #[test]
    fn grid_scan_near_zero_orientation() {
        let cfg = OracleConfig { theta_samples: 400, ..OracleConfig::default() };
        let a = oracle_any(&corners_center(), Shape::Square, Objective::Width, &cfg).unwrap();
        assert!(a.value.width.unwrap() <= 0.5 + 1e-12);
    }
}
