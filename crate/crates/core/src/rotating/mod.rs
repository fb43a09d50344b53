//! Solvers over all orientations θ ∈ [0, π/2).
//!
//! Every objective is assembled as a piecewise sinusoid in θ, one function
//! per job (a primary interval, or a maximal-empty-rectangle class on one
//! elementary interval), minimized or maximized in closed form, and reduced
//! to a global optimum. The optimum is then re-solved at the chosen θ* with
//! the fixed-orientation solvers (or evaluated directly for empty shapes), so
//! reported values always come from an explicit witness.

mod classes;
mod delta;
mod intervals;

pub use classes::{container_sides, mer_classes, ClassSweep, Container, MerClass, Piece};
pub use delta::{compute_delta, delta_on};
pub use intervals::{elementary_intervals, Decomposition, ElementaryInterval};

use rayon::prelude::*;

use crate::calipers::{enclosing_rect, frame_x_fn, frame_y_fn, PrimaryInterval};
use crate::error::{Error, Result};
use crate::fixed::{
    min_area_min_width_rect_annulus_fixed, min_width_square_annulus_fixed, uniform_rect_annulus_fixed,
    FixedSolveResult,
};
use crate::geom::{diameter, eps_factor, Annulus, AnnulusKind, Orientation, OrientedRect, Point, ANGLE_EPS};
use crate::problem::{Objective, Shape};
use crate::trig::{lower_envelope, upper_envelope, Extremum, PiecewiseSinusoid, Sense, Sinusoid, AMP_EPS};

/// Counts describing the work a sweep did.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Diagnostics {
    /// Largest number of maximal empty rectangles at one sampled orientation.
    pub r: Option<usize>,
    /// Number of width-minimizing orientations examined.
    pub t: Option<usize>,
    /// Number of (class, elementary interval) pairs.
    pub pairs_t: Option<usize>,
    pub primary_intervals: usize,
    pub elementary_intervals: usize,
    pub mer_classes: Option<usize>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub theta_star: f64,
    /// Annulus width (annulus problems only).
    pub width: Option<f64>,
    /// Annulus area, or the empty shape's area.
    pub area: Option<f64>,
    /// Side of the empty square (largest empty square only).
    pub side: Option<f64>,
    pub annulus: Option<Annulus>,
    /// The empty rectangle or square (empty-shape problems only).
    pub empty: Option<OrientedRect>,
    pub outer_supports: Vec<usize>,
    pub inner_supports: Vec<usize>,
    pub diagnostics: Diagnostics,
}

impl SweepReport {
    fn from_fixed(res: FixedSolveResult, diagnostics: Diagnostics) -> Self {
        SweepReport {
            theta_star: res.theta(),
            width: Some(res.width),
            area: Some(res.area),
            side: None,
            annulus: Some(res.annulus),
            empty: None,
            outer_supports: res.outer_supports,
            inner_supports: res.inner_supports,
            diagnostics: Diagnostics { degenerate: res.degenerate, ..diagnostics },
        }
    }

    fn from_annulus(points: &[Point], annulus: Annulus, diagnostics: Diagnostics) -> Self {
        let eps = eps_factor() * diameter(points);
        let (outer, inner) = annulus.boundary_supports(points, eps);
        let degenerate = annulus.outer.width() <= eps || annulus.outer.height() <= eps;
        SweepReport {
            theta_star: annulus.theta(),
            width: Some(annulus.width()),
            area: Some(annulus.area()),
            side: None,
            annulus: Some(annulus),
            empty: None,
            outer_supports: outer,
            inner_supports: inner,
            diagnostics: Diagnostics { degenerate, ..diagnostics },
        }
    }

    fn from_empty(points: &[Point], rect: OrientedRect, square: bool, diagnostics: Diagnostics) -> Self {
        let eps = eps_factor() * diameter(points);
        let ring = Annulus::rect(rect, rect);
        let (on_boundary, _) = ring.boundary_supports(points, eps);
        SweepReport {
            theta_star: rect.theta,
            width: None,
            area: Some(rect.area()),
            side: square.then(|| rect.width()),
            annulus: None,
            empty: Some(rect),
            outer_supports: on_boundary,
            inner_supports: Vec::new(),
            diagnostics,
        }
    }
}

/// Maps θ into [0, π/2), sending π/2 itself to 0.
fn normalize(theta: f64) -> f64 {
    Orientation::problem(theta).radians()
}

/// The same world rectangle described in the frame of θ − π/2 when θ has
/// reached π/2.
fn normalize_rect(r: OrientedRect) -> OrientedRect {
    if r.theta < std::f64::consts::FRAC_PI_2 - ANGLE_EPS {
        return r;
    }
    OrientedRect::new(normalize(r.theta), -r.hi_y, -r.lo_y, r.lo_x, r.hi_x)
}

fn check_nonempty(points: &[Point]) -> Result<()> {
    if points.is_empty() {
        Err(Error::EmptyInput)
    } else {
        Ok(())
    }
}

/// Length scale used for tolerances (never zero).
fn length_scale(points: &[Point]) -> f64 {
    diameter(points).max(f64::MIN_POSITIVE)
}

/// Index and extremum of the best job. Jobs are evaluated in parallel and
/// reduced in index order: a job wins if it is better by more than `tol`, or
/// equal within `tol` at a smaller θ.
fn best_job<F>(count: usize, sense: Sense, tol: f64, f: F) -> Option<(usize, Extremum)>
where
    F: Fn(usize) -> Option<PiecewiseSinusoid> + Sync,
{
    let ext: Vec<Option<Extremum>> =
        (0..count).into_par_iter().map(|i| f(i).map(|g| g.extremize_all(sense))).collect();
    let mut best: Option<(usize, Extremum)> = None;
    for (i, e) in ext.into_iter().enumerate() {
        let Some(e) = e else { continue };
        best = match best {
            Some((_, b)) if !prefer(sense, tol, e.value, e.theta, b.value, b.theta) => best,
            _ => Some((i, e)),
        };
    }
    best
}

fn prefer(sense: Sense, tol: f64, v: f64, t: f64, bv: f64, bt: f64) -> bool {
    sense.better(v, bv, tol) || (!sense.better(bv, v, tol) && t < bt)
}

/// Outcome of a lexicographic minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Lex {
    job: usize,
    theta: f64,
}

/// Minimizes `secondary` over the set of global minimizers of `primary`
/// (values within `tol1` of the minimum). A flat stretch of the primary at the
/// minimum is searched analytically for the secondary's minimum.
fn lexicographic<F, G>(count: usize, tol1: f64, tol2: f64, primary: F, secondary: G) -> Option<Lex>
where
    F: Fn(usize) -> Option<PiecewiseSinusoid> + Sync,
    G: Fn(usize) -> Option<PiecewiseSinusoid> + Sync,
{
    let ext: Vec<Option<Extremum>> =
        (0..count).into_par_iter().map(|i| primary(i).map(|g| g.extremize_all(Sense::Min))).collect();
    let fstar = ext.iter().flatten().map(|e| e.value).fold(f64::INFINITY, f64::min);
    if !fstar.is_finite() {
        return None;
    }
    let ties: Vec<usize> = (0..count).filter(|&i| ext[i].is_some_and(|e| e.value <= fstar + tol1)).collect();
    let cands: Vec<Vec<(f64, f64)>> = ties
        .par_iter()
        .map(|&i| {
            let (Some(g), Some(s)) = (primary(i), secondary(i)) else { return Vec::new() };
            let flat = AMP_EPS * g.scale();
            let mut out = Vec::new();
            for (a, b, sin) in g.pieces() {
                if sin.is_flat(flat) {
                    if sin.value(a).min(sin.value(b)) <= fstar + tol1 {
                        let ex = s.extremize(a, b, Sense::Min).expect("piece inside domain");
                        out.push((ex.theta, ex.value));
                    }
                    continue;
                }
                let mut ts = vec![a];
                ts.extend(sin.critical_points(a, b));
                ts.push(b);
                for t in ts {
                    if sin.value(t) <= fstar + tol1 {
                        out.push((t, s.value(t)));
                    }
                }
            }
            out
        })
        .collect();
    let mut best: Option<(Lex, f64)> = None;
    for (k, list) in cands.into_iter().enumerate() {
        for (theta, v2) in list {
            best = match best {
                Some((b, bv)) if !prefer(Sense::Min, tol2, v2, theta, bv, b.theta) => best,
                _ => Some((Lex { job: ties[k], theta }, v2)),
            };
        }
    }
    best.map(|b| b.0)
}

fn single(lo: f64, hi: f64, s: Sinusoid) -> PiecewiseSinusoid {
    PiecewiseSinusoid::single(lo, hi, s)
}

fn product(a: &Sinusoid, b: &Sinusoid) -> Sinusoid {
    a.multiply(b).expect("differences of frame coordinates are base-0 frequency-1")
}

/// w(θ) per primary interval: the upper envelope over p of f_p, the distance
/// from p to the nearest side of R_θ.
pub fn uniform_width_functions(points: &[Point]) -> Result<(Vec<PrimaryInterval>, Vec<PiecewiseSinusoid>)> {
    check_nonempty(points)?;
    let prims = crate::calipers::primary_intervals(points)?;
    let ws = prims
        .par_iter()
        .map(|p| {
            let [t, b, l, r] = p.tuple.side_fns(points);
            let fps: Vec<PiecewiseSinusoid> = points
                .iter()
                .map(|&q| {
                    let (x, y) = (frame_x_fn(q), frame_y_fn(q));
                    let four = [y - b, t - y, x - l, r - x].map(|s| single(p.lo, p.hi, s));
                    lower_envelope(&four, p.lo, p.hi)
                })
                .collect::<Result<_>>()?;
            upper_envelope(&fps, p.lo, p.hi)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((prims, ws))
}

/// `peri(R_θ)·w − 4w²` on each piece of `w`.
fn uniform_area_function(points: &[Point], p: &PrimaryInterval, w: &PiecewiseSinusoid) -> PiecewiseSinusoid {
    let (h, wd) = p.tuple.extent_fns(points);
    let half_peri = h + wd;
    w.map(|s| product(&half_peri, s) * 2.0 - product(s, s) * 4.0)
}

fn elementary_count(points: &[Point]) -> Result<usize> {
    Ok(elementary_intervals(points)?.elementary.len())
}

/// Uniform rectangular annulus over all orientations.
pub fn uniform_rect_any(points: &[Point], objective: Objective) -> Result<SweepReport> {
    let (prims, ws) = uniform_width_functions(points)?;
    let areas: Vec<PiecewiseSinusoid> =
        prims.iter().zip(&ws).map(|(p, w)| uniform_area_function(points, p, w)).collect();
    let len = length_scale(points);
    let (tl, ta) = (1e-12 * len, 1e-12 * len * len);
    let (ol, oa) = (eps_factor() * len, eps_factor() * len * len);
    let wf = |i: usize| Some(ws[i].clone());
    let af = |i: usize| Some(areas[i].clone());
    let theta = match objective {
        Objective::Width => best_job(prims.len(), Sense::Min, tl, wf).map(|b| b.1.theta),
        Objective::Area => best_job(prims.len(), Sense::Min, ta, af).map(|b| b.1.theta),
        Objective::AreaWidth => lexicographic(prims.len(), ol, oa, wf, af).map(|b| b.theta),
        Objective::WidthArea => lexicographic(prims.len(), oa, ol, af, wf).map(|b| b.theta),
        Objective::Largest => return Err(Error::InvalidConfig("largest applies to empty shapes")),
    }
    .expect("at least one primary interval");
    let diag = Diagnostics {
        primary_intervals: prims.len(),
        elementary_intervals: elementary_count(points)?,
        ..Diagnostics::default()
    };
    Ok(SweepReport::from_fixed(uniform_rect_annulus_fixed(points, normalize(theta))?, diag))
}

fn sweep_diagnostics(sweep: &ClassSweep) -> Diagnostics {
    Diagnostics {
        r: Some(sweep.max_mers),
        t: None,
        pairs_t: Some(sweep.pieces.len()),
        primary_intervals: sweep.decomposition.primaries.len(),
        elementary_intervals: sweep.decomposition.elementary.len(),
        mer_classes: Some(sweep.classes.len()),
        degenerate: false,
    }
}

/// Width and area functions of square annuli: jobs are the class pieces
/// followed by one "no inner square" job per primary interval.
struct SquareJobs<'a> {
    points: &'a [Point],
    sweep: ClassSweep,
    tol: f64,
}

impl SquareJobs<'_> {
    fn count(&self) -> usize {
        self.sweep.pieces.len() + self.sweep.decomposition.primaries.len()
    }

    /// `(d, δ)` with δ piecewise, or `None` for a baseline job.
    fn parts(&self, job: usize) -> Option<(Sinusoid, PiecewiseSinusoid)> {
        let np = self.sweep.pieces.len();
        if job < np {
            let piece = self.sweep.pieces[job];
            let d = self.sweep.primary(piece).d_fn(self.points);
            let delta = compute_delta(self.points, &self.sweep, piece, self.tol).ok()?;
            Some((d, delta))
        } else {
            let p = &self.sweep.decomposition.primaries[job - np];
            Some((p.d_fn(self.points), single(p.lo, p.hi, Sinusoid::harmonic(0.0, 0.0))))
        }
    }

    fn width(&self, job: usize) -> Option<PiecewiseSinusoid> {
        let (d, delta) = self.parts(job)?;
        Some(delta.map(|s| (d - *s) * 0.5))
    }

    fn area(&self, job: usize) -> Option<PiecewiseSinusoid> {
        let (d, delta) = self.parts(job)?;
        Some(delta.map(|s| product(&d, &d) - product(s, s)))
    }
}

/// Square annulus over all orientations.
pub fn square_annulus_any(points: &[Point], objective: Objective) -> Result<SweepReport> {
    check_nonempty(points)?;
    let len = length_scale(points);
    let jobs = SquareJobs { points, sweep: mer_classes(points, Container::SquareHull)?, tol: 1e-12 * len };
    let (tl, ta) = (1e-12 * len, 1e-12 * len * len);
    let (ol, oa) = (eps_factor() * len, eps_factor() * len * len);
    let n = jobs.count();
    let wf = |i| jobs.width(i);
    let af = |i| jobs.area(i);
    let theta = match objective {
        Objective::Width => best_job(n, Sense::Min, tl, wf).map(|b| b.1.theta),
        Objective::Area => best_job(n, Sense::Min, ta, af).map(|b| b.1.theta),
        Objective::AreaWidth => lexicographic(n, ol, oa, wf, af).map(|b| b.theta),
        Objective::WidthArea => lexicographic(n, oa, ol, af, wf).map(|b| b.theta),
        Objective::Largest => return Err(Error::InvalidConfig("largest applies to empty shapes")),
    }
    .expect("at least one job");
    let diag = sweep_diagnostics(&jobs.sweep);
    Ok(SweepReport::from_fixed(min_width_square_annulus_fixed(points, normalize(theta))?, diag))
}

/// Minimum of w(θ) over all orientations, built as the lower envelope of the
/// per-class widths on every elementary interval (plus the no-inner-square
/// width d/2). An independent assembly of the same optimum as
/// [`square_annulus_any`] with the width objective; limited to 30 points.
pub fn square_width_crosscheck(points: &[Point]) -> Result<(f64, f64)> {
    const LIMIT: usize = 30;
    check_nonempty(points)?;
    if points.len() > LIMIT {
        return Err(Error::SizeGuard { limit: LIMIT, got: points.len() });
    }
    let len = length_scale(points);
    let jobs = SquareJobs { points, sweep: mer_classes(points, Container::SquareHull)?, tol: 1e-12 * len };
    let sweep = &jobs.sweep;
    let mut by_interval: Vec<Vec<usize>> = vec![Vec::new(); sweep.decomposition.elementary.len()];
    for (j, p) in sweep.pieces.iter().enumerate() {
        by_interval[p.interval as usize].push(j);
    }
    let mins: Vec<Result<Extremum>> = sweep
        .decomposition
        .elementary
        .par_iter()
        .enumerate()
        .map(|(i, e)| {
            let d = sweep.decomposition.primaries[e.primary].d_fn(points);
            let mut fns = vec![single(e.lo, e.hi, d * 0.5)];
            fns.extend(by_interval[i].iter().filter_map(|&j| jobs.width(j)));
            Ok(lower_envelope(&fns, e.lo, e.hi)?.extremize_all(Sense::Min))
        })
        .collect();
    let mut best: Option<Extremum> = None;
    for e in mins {
        let e = e?;
        if best.is_none_or(|b| prefer(Sense::Min, 1e-12 * len, e.value, e.theta, b.value, b.theta)) {
            best = Some(e);
        }
    }
    let b = best.expect("at least one interval");
    Ok((normalize(b.theta), b.value))
}

/// Class rectangle sides on a rectangle-container piece, with R_θ sides and
/// R_θ extents.
fn rect_piece(points: &[Point], sweep: &ClassSweep, job: usize) -> ([Sinusoid; 4], [Sinusoid; 4], f64, f64) {
    let piece = sweep.pieces[job];
    let e = sweep.interval(piece);
    let r = container_sides(points, sweep.primary(piece), Container::Rect);
    (sweep.piece_sides(points, piece), r, e.lo, e.hi)
}

fn rect_area_job(points: &[Point], sweep: &ClassSweep, job: usize) -> PiecewiseSinusoid {
    let ([et, eb, el, er], [rt, rb, rl, rr], lo, hi) = rect_piece(points, sweep, job);
    single(lo, hi, product(&(rt - rb), &(rr - rl)) - product(&(et - eb), &(er - el)))
}

fn rect_width_job(points: &[Point], sweep: &ClassSweep, job: usize) -> Option<PiecewiseSinusoid> {
    let ([et, eb, el, er], [rt, rb, rl, rr], lo, hi) = rect_piece(points, sweep, job);
    let four = [rt - et, eb - rb, el - rl, rr - er].map(|s| single(lo, hi, s));
    upper_envelope(&four, lo, hi).ok()
}

/// The class rectangle of `job` at θ, clamped into R_θ.
fn class_rect_at(points: &[Point], sweep: &ClassSweep, job: usize, theta: f64) -> OrientedRect {
    let ([et, eb, el, er], _, _, _) = rect_piece(points, sweep, job);
    let outer = enclosing_rect(points, theta).expect("nonempty");
    let lo_x = el.value(theta).max(outer.lo_x);
    let lo_y = eb.value(theta).max(outer.lo_y);
    let hi_x = er.value(theta).min(outer.hi_x).max(lo_x);
    let hi_y = et.value(theta).min(outer.hi_y).max(lo_y);
    OrientedRect::new(theta, lo_x, hi_x, lo_y, hi_y)
}

fn rect_annulus_report(points: &[Point], sweep: &ClassSweep, job: usize, theta: f64) -> SweepReport {
    let outer = enclosing_rect(points, theta).expect("nonempty");
    let inner = class_rect_at(points, sweep, job, theta);
    let annulus = Annulus::rect(normalize_rect(outer), normalize_rect(inner));
    SweepReport::from_annulus(points, annulus, sweep_diagnostics(sweep))
}

/// Minimum-area rectangular annulus over all orientations.
pub fn min_area_rect_annulus_any(points: &[Point]) -> Result<SweepReport> {
    check_nonempty(points)?;
    let sweep = mer_classes(points, Container::Rect)?;
    let len = length_scale(points);
    let (job, e) = best_job(sweep.pieces.len(), Sense::Min, 1e-12 * len * len, |i| {
        Some(rect_area_job(points, &sweep, i))
    })
    .expect("at least one class");
    Ok(rect_annulus_report(points, &sweep, job, e.theta))
}

/// Minimum-width annulus among all minimum-area rectangular annuli.
pub fn min_width_min_area_rect_annulus_any(points: &[Point]) -> Result<SweepReport> {
    check_nonempty(points)?;
    let sweep = mer_classes(points, Container::Rect)?;
    let len = length_scale(points);
    let lex = lexicographic(
        sweep.pieces.len(),
        eps_factor() * len * len,
        eps_factor() * len,
        |i| Some(rect_area_job(points, &sweep, i)),
        |i| rect_width_job(points, &sweep, i),
    )
    .expect("at least one class");
    Ok(rect_annulus_report(points, &sweep, lex.job, lex.theta))
}

/// Minimum-area annulus among all minimum-width rectangular annuli: the
/// fixed-orientation solver applied at every orientation minimizing w(θ).
pub fn min_area_min_width_rect_annulus_any(points: &[Point]) -> Result<SweepReport> {
    let (prims, ws) = uniform_width_functions(points)?;
    let len = length_scale(points);
    let tol = eps_factor() * len;
    let wstar = ws.iter().map(|w| w.extremize_all(Sense::Min).value).fold(f64::INFINITY, f64::min);
    let mut thetas = Vec::new();
    for w in &ws {
        let flat = AMP_EPS * w.scale();
        for (a, b, s) in w.pieces() {
            // a flat piece of w is identically zero (a point stays on a side
            // of R_θ), where the annulus is R_θ itself; its ends suffice
            let mut ts = vec![a, b];
            if !s.is_flat(flat) {
                ts.extend(s.critical_points(a, b));
            }
            thetas.extend(ts.into_iter().filter(|&t| s.value(t) <= wstar + tol).map(normalize));
        }
    }
    crate::calipers::sort_dedup(&mut thetas);
    let results: Vec<FixedSolveResult> =
        thetas.par_iter().map(|&t| min_area_min_width_rect_annulus_fixed(points, t)).collect::<Result<_>>()?;
    let area_tol = eps_factor() * len * len;
    let mut best: Option<&FixedSolveResult> = None;
    for r in &results {
        if best.is_none_or(|b| prefer(Sense::Min, area_tol, r.area, r.theta(), b.area, b.theta())) {
            best = Some(r);
        }
    }
    let diag = Diagnostics {
        t: Some(thetas.len()),
        primary_intervals: prims.len(),
        elementary_intervals: elementary_count(points)?,
        ..Diagnostics::default()
    };
    Ok(SweepReport::from_fixed(best.expect("w attains its minimum").clone(), diag))
}

fn distinct_count(points: &[Point]) -> usize {
    let mut v: Vec<(u64, u64)> = points.iter().map(|p| ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits())).collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Largest empty square (inside R_θ) over all orientations.
pub fn largest_empty_square_any(points: &[Point]) -> Result<SweepReport> {
    let got = distinct_count(points);
    if got < 2 {
        return Err(Error::TooFewPoints { need: 2, got });
    }
    let sweep = mer_classes(points, Container::Rect)?;
    let len = length_scale(points);
    let (job, e) = best_job(sweep.pieces.len(), Sense::Max, 1e-12 * len, |i| {
        let ([et, eb, el, er], _, lo, hi) = rect_piece(points, &sweep, i);
        lower_envelope(&[single(lo, hi, et - eb), single(lo, hi, er - el)], lo, hi).ok()
    })
    .expect("at least one class");
    let e = class_rect_at(points, &sweep, job, e.theta);
    let s = e.width().min(e.height());
    let square = normalize_rect(OrientedRect::new(e.theta, e.lo_x, e.lo_x + s, e.lo_y, e.lo_y + s));
    Ok(SweepReport::from_empty(points, square, true, sweep_diagnostics(&sweep)))
}

/// Largest empty rectangle (inside R_θ) over all orientations.
pub fn largest_empty_rect_any(points: &[Point]) -> Result<SweepReport> {
    check_nonempty(points)?;
    let sweep = mer_classes(points, Container::Rect)?;
    let len = length_scale(points);
    let (job, e) = best_job(sweep.pieces.len(), Sense::Max, 1e-12 * len * len, |i| {
        let ([et, eb, el, er], _, lo, hi) = rect_piece(points, &sweep, i);
        Some(single(lo, hi, product(&(et - eb), &(er - el))))
    })
    .expect("at least one class");
    let rect = normalize_rect(class_rect_at(points, &sweep, job, e.theta));
    Ok(SweepReport::from_empty(points, rect, false, sweep_diagnostics(&sweep)))
}

/// Dispatches a problem over all orientations.
pub fn solve_any(points: &[Point], shape: Shape, objective: Objective) -> Result<SweepReport> {
    match (shape, objective) {
        (Shape::EmptyRect, Objective::Largest) => largest_empty_rect_any(points),
        (Shape::EmptySquare, Objective::Largest) => largest_empty_square_any(points),
        (_, Objective::Largest) | (Shape::EmptyRect | Shape::EmptySquare, _) => {
            Err(Error::InvalidConfig("unsupported shape and objective"))
        }
        (Shape::Square, _) => square_annulus_any(points, objective),
        (Shape::UniformRect, _) => uniform_rect_any(points, objective),
        (Shape::Rect, Objective::Width) => {
            let mut r = uniform_rect_any(points, Objective::Width)?;
            if let Some(a) = r.annulus.as_mut() {
                a.kind = AnnulusKind::Rect;
            }
            Ok(r)
        }
        (Shape::Rect, Objective::Area) => min_area_rect_annulus_any(points),
        (Shape::Rect, Objective::AreaWidth) => min_area_min_width_rect_annulus_any(points),
        (Shape::Rect, Objective::WidthArea) => min_width_min_area_rect_annulus_any(points),
    }
}
