use std::str::FromStr;

use annuli::calipers::enclosing_rect;
use annuli::empty_rect::{enumerate_mers, largest_empty_rect, largest_empty_square_fixed};
use annuli::fixed::solve_fixed;
use annuli::geom::{diameter, eps_factor, to_frame, Orientation};
use annuli::oracle::{oracle_any, oracle_fixed, OracleConfig, OracleValue};
use annuli::problem::is_supported;
use annuli::rotating::{solve_any, Diagnostics};
use annuli::{Annulus, Objective, OrientedRect, Point, Shape};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Fixed(f64),
    Any,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "any" {
            return Ok(Mode::Any);
        }
        let rad = s.strip_prefix("fixed:").ok_or_else(|| format!("expected \"any\" or \"fixed:<radians>\", got {s:?}"))?;
        match rad.parse::<f64>() {
            Ok(t) if t.is_finite() => Ok(Mode::Fixed(t)),
            _ => Err(format!("not a finite angle: {rad:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Problem {
    pub shape: Shape,
    pub objective: Objective,
    pub mode: Mode,
}

impl Problem {
    pub fn new(shape: Shape, objective: Objective, mode: Mode) -> Result<Self, CliError> {
        if !is_supported(shape, objective) {
            let hint = if shape.is_empty_shape() {
                "empty shapes take the objective \"largest\""
            } else {
                "annuli take width, area, area-width or width-area"
            };
            return Err(CliError::Unsupported(format!("shape {shape} with objective {objective}: {hint}")));
        }
        Ok(Problem { shape, objective, mode })
    }
}

/// A solved problem, with support indices into the solver's point list.
#[derive(Debug, Clone)]
pub struct Solution {
    pub theta_star: f64,
    pub width: Option<f64>,
    pub area: Option<f64>,
    pub side: Option<f64>,
    /// The outer rectangle, or the empty shape itself.
    pub outer: OrientedRect,
    pub inner: Option<OrientedRect>,
    pub outer_supports: Vec<usize>,
    pub inner_supports: Vec<usize>,
    pub diagnostics: Diagnostics,
}

fn inner_or_none(r: OrientedRect) -> Option<OrientedRect> {
    (r.width() > 0.0 || r.height() > 0.0).then_some(r)
}

fn on_boundary(points: &[Point], r: &OrientedRect) -> Vec<usize> {
    let eps = eps_factor() * diameter(points);
    Annulus::rect(*r, *r).boundary_supports(points, eps).0
}

fn solve_fixed_mode(points: &[Point], p: Problem, theta: f64) -> Result<Solution, CliError> {
    let theta = Orientation::problem(theta).radians();
    let b = enclosing_rect(points, theta)?;
    let frame: Vec<Point> = points.iter().map(|&q| to_frame(q, theta)).collect();
    let mer_count = || enumerate_mers(&frame, &b).map(|m| m.len());
    let eps = eps_factor() * diameter(points);
    let degenerate = b.width() <= eps || b.height() <= eps;
    if p.shape.is_empty_shape() {
        let (rect, side) = match p.shape {
            Shape::EmptySquare => {
                let s = largest_empty_square_fixed(&frame, &b)?;
                (s, Some(s.width()))
            }
            _ => (largest_empty_rect(&frame, &b)?.rect, None),
        };
        return Ok(Solution {
            theta_star: theta,
            width: None,
            area: Some(rect.area()),
            side,
            outer: rect,
            inner: None,
            outer_supports: on_boundary(points, &rect),
            inner_supports: Vec::new(),
            diagnostics: Diagnostics { r: Some(mer_count()?), degenerate, ..Diagnostics::default() },
        });
    }
    let res = solve_fixed(points, theta, p.shape, p.objective)?;
    let r = match (p.shape, p.objective) {
        (Shape::Rect, Objective::Area | Objective::AreaWidth | Objective::WidthArea) => Some(mer_count()?),
        _ => None,
    };
    Ok(Solution {
        theta_star: theta,
        width: Some(res.width),
        area: Some(res.area),
        side: None,
        outer: res.annulus.outer,
        inner: inner_or_none(res.annulus.inner),
        outer_supports: res.outer_supports,
        inner_supports: res.inner_supports,
        diagnostics: Diagnostics { r, degenerate: res.degenerate, ..Diagnostics::default() },
    })
}

pub fn solve(points: &[Point], p: Problem) -> Result<Solution, CliError> {
    match p.mode {
        Mode::Fixed(theta) => solve_fixed_mode(points, p, theta),
        Mode::Any => {
            let r = solve_any(points, p.shape, p.objective)?;
            let (outer, inner) = match (r.annulus, r.empty) {
                (Some(a), _) => (a.outer, inner_or_none(a.inner)),
                (None, Some(e)) => (e, None),
                (None, None) => return Err(CliError::Other("solver returned no witness".into())),
            };
            Ok(Solution {
                theta_star: r.theta_star,
                width: r.width,
                area: r.area,
                side: r.side,
                outer,
                inner,
                outer_supports: r.outer_supports,
                inner_supports: r.inner_supports,
                diagnostics: r.diagnostics,
            })
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OracleReport {
    pub value: OracleValue,
    pub theta: Option<f64>,
    pub step: Option<f64>,
}

pub fn oracle(points: &[Point], p: Problem, theta_samples: usize) -> Result<OracleReport, CliError> {
    let cfg = OracleConfig { theta_samples, ..OracleConfig::default() };
    match p.mode {
        Mode::Fixed(theta) => {
            let theta = Orientation::problem(theta).radians();
            let value = oracle_fixed(points, theta, p.shape, p.objective, &cfg)?;
            Ok(OracleReport { value, theta: None, step: None })
        }
        Mode::Any => {
            let a = oracle_any(points, p.shape, p.objective, &cfg)?;
            Ok(OracleReport { value: a.value, theta: Some(a.theta), step: Some(a.step) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_modes() {
        assert_eq!("any".parse::<Mode>(), Ok(Mode::Any));
        assert_eq!("fixed:0.25".parse::<Mode>(), Ok(Mode::Fixed(0.25)));
        assert!("fixed:nan".parse::<Mode>().is_err());
        assert!("0.25".parse::<Mode>().is_err());
    }

    #[test]
    fn rejects_mismatched_objectives() {
        assert!(Problem::new(Shape::Square, Objective::Largest, Mode::Any).is_err());
        assert!(Problem::new(Shape::EmptyRect, Objective::Area, Mode::Any).is_err());
        assert!(Problem::new(Shape::EmptySquare, Objective::Largest, Mode::Fixed(0.0)).is_ok());
    }
}
