//! JSON report with a fixed field order and floats written with 17
//! significant digits.

use annuli::rotating::Diagnostics;
use annuli::{OrientedRect, Point};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::solve::{OracleReport, Solution};

/// A float serialized as `d.dddddddddddddddde±x`; non-finite values become null.
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0 + 0.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

fn num(v: Option<f64>) -> Option<Num> {
    v.map(Num)
}

#[derive(Serialize)]
pub struct SpecOut {
    pub shape: String,
    pub objective: String,
    pub orientation: String,
    pub input: Option<String>,
    pub random: Option<usize>,
    pub seed: u64,
    pub oracle: bool,
}

#[derive(Serialize)]
struct RectOut {
    theta: Num,
    corners: Vec<[Num; 2]>,
}

impl RectOut {
    fn new(r: &OrientedRect) -> Self {
        RectOut { theta: Num(r.theta), corners: r.corners().iter().map(|c: &Point| [Num(c.x), Num(c.y)]).collect() }
    }
}

#[derive(Serialize)]
struct SupportsOut {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

#[derive(Serialize)]
struct DiagnosticsOut {
    r: Option<usize>,
    t: Option<usize>,
    #[serde(rename = "pairs_T")]
    pairs_t: Option<usize>,
    primary_intervals: usize,
    elementary_intervals: usize,
    mer_classes: Option<usize>,
    duplicates_removed: usize,
    degenerate: bool,
}

#[derive(Serialize)]
struct OracleOut {
    width: Option<Num>,
    area: Option<Num>,
    side: Option<Num>,
    error_bound: Num,
    theta: Option<Num>,
    step: Option<Num>,
}

#[derive(Serialize)]
struct Report {
    spec: SpecOut,
    n: usize,
    theta_star: Num,
    width: Option<Num>,
    area: Option<Num>,
    side: Option<Num>,
    outer: RectOut,
    inner: Option<RectOut>,
    supports: SupportsOut,
    diagnostics: DiagnosticsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleOut>,
    version: &'static str,
}

pub fn render(
    spec: SpecOut,
    n: usize,
    duplicates_removed: usize,
    sol: &Solution,
    oracle: Option<&OracleReport>,
) -> String {
    let d: &Diagnostics = &sol.diagnostics;
    let report = Report {
        spec,
        n,
        theta_star: Num(sol.theta_star),
        width: num(sol.width),
        area: num(sol.area),
        side: num(sol.side),
        outer: RectOut::new(&sol.outer),
        inner: sol.inner.as_ref().map(RectOut::new),
        supports: SupportsOut { outer: sol.outer_supports.clone(), inner: sol.inner_supports.clone() },
        diagnostics: DiagnosticsOut {
            r: d.r,
            t: d.t,
            pairs_t: d.pairs_t,
            primary_intervals: d.primary_intervals,
            elementary_intervals: d.elementary_intervals,
            mer_classes: d.mer_classes,
            duplicates_removed,
            degenerate: d.degenerate,
        },
        oracle: oracle.map(|o| OracleOut {
            width: num(o.value.width),
            area: num(o.value.area),
            side: num(o.value.side),
            error_bound: Num(o.value.error_bound),
            theta: num(o.theta),
            step: num(o.step),
        }),
        version: env!("CARGO_PKG_VERSION"),
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}
