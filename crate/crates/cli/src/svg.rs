//! Static SVG figure: the annulus region shaded between its outer and inner
//! boundaries, or the empty shape, with the input points as dots.

use std::fmt::Write;

use annuli::Point;

use crate::solve::Solution;

const WIDTH_PX: f64 = 800.0;

pub fn render(points: &[Point], sol: &Solution, annulus: bool) -> String {
    let outer = sol.outer.corners();
    let inner = sol.inner.map(|r| r.corners());
    let all: Vec<Point> = points.iter().chain(outer.iter()).copied().collect();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in &all {
        lo_x = lo_x.min(p.x);
        hi_x = hi_x.max(p.x);
        lo_y = lo_y.min(p.y);
        hi_y = hi_y.max(p.y);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(f64::MIN_POSITIVE);
    let margin = 0.05 * span;
    let (x0, y1) = (lo_x - margin, hi_y + margin);
    let scale = WIDTH_PX / (hi_x - lo_x + 2.0 * margin).max(span * 0.1);
    let height = ((hi_y - lo_y + 2.0 * margin) * scale).max(1.0);
    // data y grows upward, SVG y grows downward
    let px = |p: &Point| ((p.x - x0) * scale, (y1 - p.y) * scale);
    let ring = |cs: &[Point; 4]| {
        let mut d = String::new();
        for (i, c) in cs.iter().enumerate() {
            let (x, y) = px(c);
            let _ = write!(d, "{}{x:.3},{y:.3} ", if i == 0 { "M" } else { "L" });
        }
        d.push('Z');
        d
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH_PX:.0}" height="{height:.0}" viewBox="0 0 {WIDTH_PX:.3} {height:.3}">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    if annulus {
        let mut d = ring(&outer);
        if let Some(inner) = &inner {
            d.push(' ');
            d.push_str(&ring(inner));
        }
        let _ = writeln!(s, r##"<path d="{d}" fill="#9ecae1" fill-rule="evenodd" stroke="none"/>"##);
        let _ = writeln!(s, r##"<path d="{}" fill="none" stroke="#08519c" stroke-width="1.5"/>"##, ring(&outer));
        if let Some(inner) = &inner {
            let _ = writeln!(s, r##"<path d="{}" fill="none" stroke="#08519c" stroke-width="1"/>"##, ring(inner));
        }
    } else {
        let _ = writeln!(s, r##"<path d="{}" fill="#fdd0a2" stroke="#a63603" stroke-width="1.5"/>"##, ring(&outer));
    }
    for p in points {
        let (x, y) = px(p);
        let _ = writeln!(s, r##"<circle cx="{x:.3}" cy="{y:.3}" r="2" fill="#000000"/>"##);
    }
    s.push_str("</svg>\n");
    s
}
