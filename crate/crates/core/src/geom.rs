//! Planar primitives: points, orientations, rotated frames, projected widths,
//! θ-aligned rectangles and the three annulus shapes.
//!
//! A rectangle aligned with orientation θ is stored in the *frame* of θ: the
//! world rotated by −θ, where the θ direction becomes the x axis. All
//! comparisons against an instance use `eps = eps_factor × diameter`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Default scale factor for the geometric tolerance.
pub const DEFAULT_EPS_FACTOR: f64 = 1e-9;

/// The tolerance scale factor in effect: `ANNULUS_EPS` from the environment
/// when set to a positive number, else [`DEFAULT_EPS_FACTOR`]. Read once.
pub fn eps_factor() -> f64 {
    static FACTOR: std::sync::OnceLock<f64> = std::sync::OnceLock::new();
    *FACTOR.get_or_init(|| {
        std::env::var("ANNULUS_EPS")
            .ok()
            .and_then(|v| v.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v > 0.0)
            .unwrap_or(DEFAULT_EPS_FACTOR)
    })
}

/// Orientations closer than this (radians) are treated as the same angle.
pub const ANGLE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Checked constructor rejecting NaN and infinities.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::NonFinite { index: 0 })
        }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

/// An angle reduced modulo its period: π/2 for problem orientations, π for
/// segment orientations.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Orientation {
    theta: f64,
}

impl Orientation {
    /// Problem-frame orientation in `[0, π/2)`.
    pub fn problem(theta: f64) -> Self {
        Orientation { theta: normalize(theta, FRAC_PI_2) }
    }

    /// Segment orientation in `[0, π)`.
    pub fn segment(theta: f64) -> Self {
        Orientation { theta: normalize(theta, PI) }
    }

    pub fn radians(self) -> f64 {
        self.theta
    }
}

fn normalize(theta: f64, period: f64) -> f64 {
    let mut t = theta.rem_euclid(period);
    if !(0.0..period).contains(&t) || period - t <= ANGLE_EPS {
        t = 0.0;
    }
    t
}

/// Orientation θ_pq ∈ [0, π) of the segment pq.
pub fn segment_orientation(p: Point, q: Point) -> Result<Orientation> {
    let (dx, dy) = (q.x - p.x, q.y - p.y);
    if dx == 0.0 && dy == 0.0 {
        return Err(Error::DegenerateSegment);
    }
    Ok(Orientation::segment(dy.atan2(dx)))
}

/// w_θ(p, q): distance between the projections of p and q on a θ-aligned line.
pub fn project_width(p: Point, q: Point, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    ((q.x - p.x) * c + (q.y - p.y) * s).abs()
}

/// Coordinates of `p` in the frame of θ.
pub fn to_frame(p: Point, theta: f64) -> Point {
    let (s, c) = theta.sin_cos();
    Point::new(p.x * c + p.y * s, -p.x * s + p.y * c)
}

/// Inverse of [`to_frame`].
pub fn from_frame(p: Point, theta: f64) -> Point {
    let (s, c) = theta.sin_cos();
    Point::new(p.x * c - p.y * s, p.x * s + p.y * c)
}

/// Largest pairwise distance; zero for fewer than two points.
pub fn diameter(points: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            d = d.max(p.dist(q));
        }
    }
    d
}

/// A validated, deduplicated input instance.
#[derive(Debug, Clone)]
pub struct PointSet {
    points: Vec<Point>,
    original_index: Vec<usize>,
    duplicates_removed: usize,
    diameter: f64,
    eps_factor: f64,
}

impl PointSet {
    /// Validates finiteness and drops exact duplicates (first occurrence kept).
    pub fn new(raw: &[Point]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut points = Vec::with_capacity(raw.len());
        let mut original_index = Vec::with_capacity(raw.len());
        let mut seen = std::collections::HashSet::new();
        for (i, p) in raw.iter().enumerate() {
            if !(p.x.is_finite() && p.y.is_finite()) {
                return Err(Error::NonFinite { index: i });
            }
            // +0.0 and -0.0 are the same point
            let key = ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits());
            if seen.insert(key) {
                points.push(*p);
                original_index.push(i);
            }
        }
        let duplicates_removed = raw.len() - points.len();
        let diameter = diameter(&points);
        Ok(PointSet {
            points,
            original_index,
            duplicates_removed,
            diameter,
            eps_factor: eps_factor(),
        })
    }

    pub fn with_eps_factor(mut self, factor: f64) -> Self {
        self.eps_factor = factor;
        self
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn original_index(&self, i: usize) -> usize {
        self.original_index[i]
    }

    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn eps_factor(&self) -> f64 {
        self.eps_factor
    }

    /// Length tolerance ε_geo.
    pub fn eps(&self) -> f64 {
        self.eps_factor * self.diameter
    }

    /// Tolerance for area-valued objectives.
    pub fn eps_area(&self) -> f64 {
        self.eps_factor * self.diameter * self.diameter
    }

    pub fn frame(&self, theta: f64) -> Vec<Point> {
        self.points.iter().map(|&p| to_frame(p, theta)).collect()
    }
}

/// A θ-aligned rectangle given by its edges in the frame of θ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedRect {
    pub theta: f64,
    pub lo_x: f64,
    pub hi_x: f64,
    pub lo_y: f64,
    pub hi_y: f64,
}

impl OrientedRect {
    pub fn new(theta: f64, lo_x: f64, hi_x: f64, lo_y: f64, hi_y: f64) -> Self {
        debug_assert!(lo_x <= hi_x && lo_y <= hi_y, "inverted rectangle");
        OrientedRect { theta, lo_x, hi_x, lo_y, hi_y }
    }

    /// Axis-aligned rectangle (θ = 0).
    pub fn axis(lo_x: f64, hi_x: f64, lo_y: f64, hi_y: f64) -> Self {
        Self::new(0.0, lo_x, hi_x, lo_y, hi_y)
    }

    /// Square with the given frame center and side.
    pub fn square(theta: f64, center: Point, side: f64) -> Self {
        let h = 0.5 * side;
        Self::new(theta, center.x - h, center.x + h, center.y - h, center.y + h)
    }

    pub fn width(&self) -> f64 {
        self.hi_x - self.lo_x
    }

    pub fn height(&self) -> f64 {
        self.hi_y - self.lo_y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn perimeter(&self) -> f64 {
        2.0 * (self.width() + self.height())
    }

    /// Center in frame coordinates.
    pub fn frame_center(&self) -> Point {
        Point::new(0.5 * (self.lo_x + self.hi_x), 0.5 * (self.lo_y + self.hi_y))
    }

    /// Closed containment of a frame point.
    pub fn contains_frame(&self, p: Point, eps: f64) -> bool {
        p.x >= self.lo_x - eps && p.x <= self.hi_x + eps && p.y >= self.lo_y - eps && p.y <= self.hi_y + eps
    }

    /// Whether a frame point lies strictly inside, by more than `eps`.
    pub fn interior_contains_frame(&self, p: Point, eps: f64) -> bool {
        p.x > self.lo_x + eps && p.x < self.hi_x - eps && p.y > self.lo_y + eps && p.y < self.hi_y - eps
    }

    pub fn contains_rect(&self, other: &OrientedRect, eps: f64) -> bool {
        other.lo_x >= self.lo_x - eps
            && other.hi_x <= self.hi_x + eps
            && other.lo_y >= self.lo_y - eps
            && other.hi_y <= self.hi_y + eps
    }

    /// World-coordinate corners, counter-clockwise from the frame's bottom-left.
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.lo_x, self.lo_y),
            Point::new(self.hi_x, self.lo_y),
            Point::new(self.hi_x, self.hi_y),
            Point::new(self.lo_x, self.hi_y),
        ]
        .map(|c| from_frame(c, self.theta))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnnulusKind {
    Square,
    UniformRect,
    Rect,
}

/// The closed region between an outer and an inner θ-aligned rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    pub kind: AnnulusKind,
    pub outer: OrientedRect,
    pub inner: OrientedRect,
}

impl Annulus {
    /// Concentric squares around a frame-coordinate center.
    pub fn square(theta: f64, center: Point, outer_radius: f64, inner_radius: f64) -> Self {
        Annulus {
            kind: AnnulusKind::Square,
            outer: OrientedRect::square(theta, center, 2.0 * outer_radius),
            inner: OrientedRect::square(theta, center, 2.0 * inner_radius),
        }
    }

    /// Uniform annulus: `outer` shrunk by `width` on every side.
    pub fn uniform(outer: OrientedRect, width: f64) -> Self {
        let inner = OrientedRect {
            lo_x: outer.lo_x + width,
            hi_x: (outer.hi_x - width).max(outer.lo_x + width),
            lo_y: outer.lo_y + width,
            hi_y: (outer.hi_y - width).max(outer.lo_y + width),
            ..outer
        };
        Annulus { kind: AnnulusKind::UniformRect, outer, inner }
    }

    pub fn rect(outer: OrientedRect, inner: OrientedRect) -> Self {
        Annulus { kind: AnnulusKind::Rect, outer, inner }
    }

    pub fn theta(&self) -> f64 {
        self.outer.theta
    }

    /// Top, bottom, left and right widths.
    pub fn side_widths(&self) -> [f64; 4] {
        [
            self.outer.hi_y - self.inner.hi_y,
            self.inner.lo_y - self.outer.lo_y,
            self.inner.lo_x - self.outer.lo_x,
            self.outer.hi_x - self.inner.hi_x,
        ]
    }

    pub fn width(&self) -> f64 {
        self.side_widths().into_iter().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn area(&self) -> f64 {
        self.outer.area() - self.inner.area()
    }

    /// Square center in world coordinates (squares only).
    pub fn center(&self) -> Option<Point> {
        (self.kind == AnnulusKind::Square).then(|| from_frame(self.outer.frame_center(), self.outer.theta))
    }

    /// (outer radius, inner radius) for squares.
    pub fn radii(&self) -> Option<(f64, f64)> {
        (self.kind == AnnulusKind::Square).then(|| (0.5 * self.outer.width(), 0.5 * self.inner.width()))
    }

    /// Closed containment of a world point in the annulus region.
    pub fn contains(&self, p: Point, eps: f64) -> bool {
        let f = to_frame(p, self.outer.theta);
        self.outer.contains_frame(f, eps) && !self.inner.interior_contains_frame(f, eps)
    }

    /// Indices of points lying on the outer and inner boundaries.
    pub fn boundary_supports(&self, points: &[Point], eps: f64) -> (Vec<usize>, Vec<usize>) {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for (i, &p) in points.iter().enumerate() {
            let f = to_frame(p, self.outer.theta);
            if on_boundary(&self.outer, f, eps) {
                outer.push(i);
            }
            if self.inner.width() > eps && self.inner.height() > eps && on_boundary(&self.inner, f, eps) {
                inner.push(i);
            }
        }
        (outer, inner)
    }
}

fn on_boundary(r: &OrientedRect, f: Point, eps: f64) -> bool {
    r.contains_frame(f, eps) && !r.interior_contains_frame(f, eps)
}
