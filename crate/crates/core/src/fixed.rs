//! Fixed-orientation solvers: square, uniform rectangular and rectangular
//! annuli (width, area and both bicriteria orders).

use crate::calipers::{center_segment_of, enclosing_rect, Alignment};
use crate::empty_rect::{default_eps, enumerate_mers_with_eps, largest_empty_rect, MaxEmptyRect};
use crate::error::{Error, Result};
use crate::geom::{to_frame, Annulus, AnnulusKind, OrientedRect, Point};
use crate::problem::{Objective, Shape};

#[derive(Debug, Clone, PartialEq)]
pub struct FixedSolveResult {
    pub annulus: Annulus,
    pub width: f64,
    pub area: f64,
    /// Indices of points on the outer boundary.
    pub outer_supports: Vec<usize>,
    /// Indices of points on the inner boundary (empty for a degenerate inner).
    pub inner_supports: Vec<usize>,
    /// R_θ has zero width or height.
    pub degenerate: bool,
}

impl FixedSolveResult {
    fn new(points: &[Point], annulus: Annulus, outer: &OrientedRect) -> Self {
        let eps = default_eps(outer);
        let (outer_supports, inner_supports) = annulus.boundary_supports(points, eps);
        FixedSolveResult {
            width: annulus.width(),
            area: annulus.area(),
            annulus,
            outer_supports,
            inner_supports,
            degenerate: outer.width() <= eps || outer.height() <= eps,
        }
    }

    pub fn theta(&self) -> f64 {
        self.annulus.theta()
    }
}

fn frame_points(points: &[Point], theta: f64) -> Vec<Point> {
    points.iter().map(|&p| to_frame(p, theta)).collect()
}

/// Center on C_θ maximizing the L∞ distance to the nearest point, and that
/// distance. Plateaus resolve to the smallest frame x, then frame y.
pub fn best_square_center(points: &[Point], theta: f64) -> Result<(Point, f64)> {
    let r = enclosing_rect(points, theta)?;
    let c = center_segment_of(&r);
    let f = frame_points(points, theta);
    // along-segment coordinate s and perpendicular offset k of every point
    let (s, k): (Vec<f64>, Vec<f64>) = f
        .iter()
        .map(|p| match c.alignment {
            Alignment::Theta => (p.x - c.start.x, (p.y - c.start.y).abs()),
            Alignment::ThetaPerp => (p.y - c.start.y, (p.x - c.start.x).abs()),
        })
        .unzip();
    let len = c.length();
    let rho = |t: f64| s.iter().zip(&k).map(|(&sp, &kp)| (t - sp).abs().max(kp)).fold(f64::INFINITY, f64::min);
    let mut cand = vec![0.0, len];
    for i in 0..s.len() {
        for j in 0..s.len() {
            cand.push(s[i] - k[j]);
            cand.push(s[i] + k[j]);
            if j > i {
                cand.push(0.5 * (s[i] + s[j]));
            }
        }
    }
    let at = |t: f64| match c.alignment {
        Alignment::Theta => Point::new(c.start.x + t, c.start.y),
        Alignment::ThetaPerp => Point::new(c.start.x, c.start.y + t),
    };
    let tol = 1e-12 * r.width().max(r.height());
    let cand: Vec<(f64, Point)> =
        cand.into_iter().filter(|t| (0.0..=len).contains(t)).map(|t| (rho(t), at(t))).collect();
    let top = cand.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    let (v, p) = cand
        .into_iter()
        .filter(|c| c.0 >= top - tol)
        .min_by(|a, b| (a.1.x, a.1.y).partial_cmp(&(b.1.x, b.1.y)).expect("finite"))
        .expect("segment has endpoints");
    Ok((p, v))
}

/// Minimum-width square annulus at θ: outer square is a smallest enclosing
/// one, centered where the nearest point (in L∞) is farthest away.
pub fn min_width_square_annulus_fixed(points: &[Point], theta: f64) -> Result<FixedSolveResult> {
    let r = enclosing_rect(points, theta)?;
    let d = r.width().max(r.height());
    let (center, rho) = best_square_center(points, theta)?;
    let inner = rho.min(0.5 * d).max(0.0);
    let annulus = Annulus::square(theta, center, 0.5 * d, inner);
    Ok(FixedSolveResult::new(points, annulus, &annulus.outer))
}

/// Minimum-area square annulus at θ; the same annulus as the minimum-width one.
pub fn min_area_square_annulus_fixed(points: &[Point], theta: f64) -> Result<FixedSolveResult> {
    min_width_square_annulus_fixed(points, theta)
}

/// w(θ) = max over p of the distance from p to the nearest side of R_θ.
pub fn uniform_width(points: &[Point], theta: f64) -> Result<(OrientedRect, f64)> {
    let r = enclosing_rect(points, theta)?;
    let w = frame_points(points, theta)
        .iter()
        .map(|p| (p.x - r.lo_x).min(r.hi_x - p.x).min(p.y - r.lo_y).min(r.hi_y - p.y))
        .fold(0.0, f64::max);
    Ok((r, w))
}

/// The uniform rectangular annulus at θ, both min-width and min-area.
pub fn uniform_rect_annulus_fixed(points: &[Point], theta: f64) -> Result<FixedSolveResult> {
    let (r, w) = uniform_width(points, theta)?;
    Ok(FixedSolveResult::new(points, Annulus::uniform(r, w), &r))
}

/// Minimum-area rectangular annulus: R_θ minus a largest empty rectangle.
pub fn min_area_rect_annulus_fixed(points: &[Point], theta: f64) -> Result<FixedSolveResult> {
    let r = enclosing_rect(points, theta)?;
    let ler = largest_empty_rect(&frame_points(points, theta), &r)?;
    Ok(FixedSolveResult::new(points, Annulus::rect(r, ler.rect), &r))
}

/// Minimum-area annulus among minimum-width ones: the largest MER that
/// contains the uniform annulus's inner rectangle.
pub fn min_area_min_width_rect_annulus_fixed(points: &[Point], theta: f64) -> Result<FixedSolveResult> {
    let (r, w) = uniform_width(points, theta)?;
    let core = Annulus::uniform(r, w).inner;
    let eps = default_eps(&r);
    let mers = enumerate_mers_with_eps(&frame_points(points, theta), &r, eps)?;
    let area_tol = eps * r.width().hypot(r.height());
    let mut best: Option<&MaxEmptyRect> = None;
    for m in mers.iter().filter(|m| m.rect.contains_rect(&core, eps)) {
        if best.is_none_or(|b| m.area() > b.area() + area_tol) {
            best = Some(m);
        }
    }
    let inner = best.map_or(core, |m| m.rect);
    Ok(FixedSolveResult::new(points, Annulus::rect(r, inner), &r))
}

/// Minimum-width annulus among minimum-area ones.
pub fn min_width_min_area_rect_annulus_fixed(points: &[Point], theta: f64) -> Result<FixedSolveResult> {
    let r = enclosing_rect(points, theta)?;
    let eps = default_eps(&r);
    let area_tol = eps * r.width().hypot(r.height());
    let mers = enumerate_mers_with_eps(&frame_points(points, theta), &r, eps)?;
    let top = mers.iter().map(MaxEmptyRect::area).fold(f64::NEG_INFINITY, f64::max);
    let mut best: Option<(f64, OrientedRect)> = None;
    for m in mers.iter().filter(|m| m.area() >= top - area_tol) {
        let w = Annulus::rect(r, m.rect).width();
        if best.is_none_or(|(bw, _)| w < bw - eps) {
            best = Some((w, m.rect));
        }
    }
    let inner = best.expect("at least one MER").1;
    Ok(FixedSolveResult::new(points, Annulus::rect(r, inner), &r))
}

/// Dispatches an annulus problem at a fixed orientation.
pub fn solve_fixed(points: &[Point], theta: f64, shape: Shape, objective: Objective) -> Result<FixedSolveResult> {
    match (shape, objective) {
        (_, Objective::Largest) | (Shape::EmptyRect | Shape::EmptySquare, _) => {
            Err(Error::InvalidConfig("not an annulus problem"))
        }
        (Shape::Square, Objective::Area) => min_area_square_annulus_fixed(points, theta),
        (Shape::Square, _) => min_width_square_annulus_fixed(points, theta),
        (Shape::UniformRect, _) => uniform_rect_annulus_fixed(points, theta),
        (Shape::Rect, Objective::Width) => {
            let mut res = uniform_rect_annulus_fixed(points, theta)?;
            res.annulus.kind = AnnulusKind::Rect;
            Ok(res)
        }
        (Shape::Rect, Objective::Area) => min_area_rect_annulus_fixed(points, theta),
        (Shape::Rect, Objective::AreaWidth) => min_area_min_width_rect_annulus_fixed(points, theta),
        (Shape::Rect, Objective::WidthArea) => min_width_min_area_rect_annulus_fixed(points, theta),
    }
}
