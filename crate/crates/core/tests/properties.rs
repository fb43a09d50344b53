mod common;

use std::f64::consts::FRAC_PI_2;

use annuli::calipers::{enclosing_rect, extremes};
use annuli::empty_rect::{enumerate_mers, MaxEmptyRect};
use annuli::fixed::{solve_fixed, uniform_width};
use annuli::geom::{diameter, eps_factor, to_frame};
use annuli::oracle::{oracle_any, oracle_mers, OracleConfig};
use annuli::rotating::solve_any;
use annuli::trig::{multiply, Sinusoid};
use annuli::{Objective, OrientedRect, Point, PointSet, Shape};
use proptest::prelude::*;

const ANNULI: [(Shape, Objective); 12] = [
    (Shape::Square, Objective::Width),
    (Shape::Square, Objective::Area),
    (Shape::Square, Objective::AreaWidth),
    (Shape::Square, Objective::WidthArea),
    (Shape::UniformRect, Objective::Width),
    (Shape::UniformRect, Objective::Area),
    (Shape::UniformRect, Objective::AreaWidth),
    (Shape::UniformRect, Objective::WidthArea),
    (Shape::Rect, Objective::Width),
    (Shape::Rect, Objective::Area),
    (Shape::Rect, Objective::AreaWidth),
    (Shape::Rect, Objective::WidthArea),
];

fn points(max: usize) -> impl Strategy<Value = Vec<Point>> {
    let coord = prop_oneof![3 => -10.0..10.0f64, 1 => (-3i32..=3).prop_map(f64::from)];
    prop::collection::vec((coord.clone(), coord), 1..=max)
        .prop_map(|v| PointSet::new(&v.into_iter().map(|(x, y)| Point::new(x, y)).collect::<Vec<_>>()).unwrap().points().to_vec())
}

fn frame(points: &[Point], theta: f64) -> Vec<Point> {
    points.iter().map(|&p| to_frame(p, theta)).collect()
}

fn keys(m: &[MaxEmptyRect]) -> Vec<[f64; 4]> {
    m.iter().map(|m| [m.rect.lo_x, m.rect.lo_y, m.rect.hi_x, m.rect.hi_y]).collect()
}

fn same_geometry(a: &[[f64; 4]], b: &[[f64; 4]], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.iter().zip(y).all(|(u, v)| (u - v).abs() <= tol))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumeration_matches_exhaustive_search(pts in points(7), theta in 0.0..FRAC_PI_2) {
        let b = enclosing_rect(&pts, theta).unwrap();
        let q = frame(&pts, theta);
        let got = enumerate_mers(&q, &b).unwrap();
        let want = oracle_mers(&q, &b).unwrap();
        let eps = eps_factor() * b.width().hypot(b.height());
        prop_assert!(same_geometry(&keys(&got), &keys(&want), eps), "{:?}\n{:?}", got, want);
        let sg: Vec<_> = got.iter().map(|m| m.supports).collect();
        let sw: Vec<_> = want.iter().map(|m| m.supports).collect();
        prop_assert_eq!(sg, sw);
    }

    #[test]
    fn exhaustive_mers_follow_translation_and_scaling(
        pts in points(6),
        dx in -50.0..50.0f64,
        dy in -50.0..50.0f64,
        k in 0.1..20.0f64,
    ) {
        let b = enclosing_rect(&pts, 0.0).unwrap();
        let base = oracle_mers(&pts, &b).unwrap();
        let moved: Vec<Point> = pts.iter().map(|p| Point::new(k * p.x + dx, k * p.y + dy)).collect();
        let mb = OrientedRect::axis(k * b.lo_x + dx, k * b.hi_x + dx, k * b.lo_y + dy, k * b.hi_y + dy);
        let m = oracle_mers(&moved, &mb).unwrap();
        prop_assert_eq!(base.len(), m.len());
        let scale = (b.width() + b.height()).max(1.0) * k + dx.abs() + dy.abs();
        for (x, y) in base.iter().zip(&m) {
            prop_assert_eq!(x.supports, y.supports);
            prop_assert!((k * k * x.rect.area() - y.rect.area()).abs() <= 1e-9 * scale * scale);
        }
    }

    #[test]
    fn fixed_witnesses_cover_every_point(pts in points(9), theta in 0.0..FRAC_PI_2) {
        let eps = eps_factor() * diameter(&pts);
        for (shape, obj) in ANNULI {
            let r = solve_fixed(&pts, theta, shape, obj).unwrap();
            for &p in &pts {
                prop_assert!(r.annulus.contains(p, eps), "{shape} {obj} misses {p:?}");
            }
            prop_assert!(r.width >= -eps && r.area >= -eps * diameter(&pts));
        }
    }

    #[test]
    fn uniform_width_is_at_most_half_the_short_side(pts in points(9), theta in 0.0..FRAC_PI_2) {
        let (r, w) = uniform_width(&pts, theta).unwrap();
        prop_assert!(w >= 0.0);
        prop_assert!(w <= 0.5 * r.width().min(r.height()) + 1e-12 * diameter(&pts));
    }

    #[test]
    fn extremes_realize_the_enclosing_rect(pts in points(9), theta in 0.0..FRAC_PI_2) {
        let e = extremes(&pts, theta).unwrap();
        let f = frame(&pts, theta);
        for (i, p) in f.iter().enumerate() {
            prop_assert!(p.y <= f[e.top].y && p.y >= f[e.bottom].y);
            prop_assert!(p.x <= f[e.right].x && p.x >= f[e.left].x);
            if p.y == f[e.top].y { prop_assert!(i >= e.top); }
            if p.x == f[e.left].x { prop_assert!(i >= e.left); }
        }
    }

    #[test]
    fn sweeps_never_lose_to_a_fixed_orientation(pts in points(6), theta in 0.0..FRAC_PI_2) {
        let len = diameter(&pts);
        for (shape, obj) in [(Shape::Square, Objective::Width), (Shape::UniformRect, Objective::Area), (Shape::Rect, Objective::Area)] {
            let any = solve_any(&pts, shape, obj).unwrap();
            let fixed = solve_fixed(&pts, theta, shape, obj).unwrap();
            let (a, f, tol) = match obj {
                Objective::Width => (any.width.unwrap(), fixed.width, 1e-9 * len),
                _ => (any.area.unwrap(), fixed.area, 1e-9 * len * len),
            };
            prop_assert!(a <= f + tol, "{shape} {obj}: sweep {a} fixed {f} at θ={theta}");
        }
    }

    #[test]
    fn product_matches_pointwise(c1 in -5.0..5.0f64, s1 in -5.0..5.0f64, c2 in -5.0..5.0f64, s2 in -5.0..5.0f64, t in -10.0..10.0f64) {
        let (f, g) = (Sinusoid::harmonic(c1, s1), Sinusoid::harmonic(c2, s2));
        let h = multiply(&f, &g).unwrap();
        prop_assert!((h.value(t) - f.value(t) * g.value(t)).abs() <= 1e-12 * (1.0 + f.scale() * g.scale()));
    }

    #[test]
    fn sums_match_pointwise(c1 in -5.0..5.0f64, s1 in -5.0..5.0f64, c2 in -5.0..5.0f64, s2 in -5.0..5.0f64, t in -10.0..10.0f64) {
        let (f, g) = (Sinusoid::harmonic(c1, s1), Sinusoid::harmonic(c2, s2));
        prop_assert!(((f + g).value(t) - f.value(t) - g.value(t)).abs() <= 1e-12 * (1.0 + f.scale() + g.scale()));
        prop_assert!(((f - g).value(t) - f.value(t) + g.value(t)).abs() <= 1e-12 * (1.0 + f.scale() + g.scale()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn refining_the_grid_never_hurts(pts in points(6)) {
        // the 2N grid contains the N grid
        let coarse = OracleConfig { theta_samples: 200, ..OracleConfig::default() };
        let fine = OracleConfig { theta_samples: 400, ..OracleConfig::default() };
        for (shape, obj) in [(Shape::Square, Objective::Width), (Shape::Rect, Objective::Area)] {
            let a = oracle_any(&pts, shape, obj, &coarse).unwrap().value.primary(shape, obj);
            let b = oracle_any(&pts, shape, obj, &fine).unwrap().value.primary(shape, obj);
            prop_assert!(b <= a);
        }
        let s = Shape::EmptySquare;
        let a = oracle_any(&pts, s, Objective::Largest, &coarse).unwrap().value.primary(s, Objective::Largest);
        let b = oracle_any(&pts, s, Objective::Largest, &fine).unwrap().value.primary(s, Objective::Largest);
        prop_assert!(b >= a);
    }
}
