//! Sinusoids `a·sin(ωθ + φ) + b` with ω ∈ {1, 2}, and piecewise sinusoids.
//!
//! Every orientation-dependent length in the solvers (projected widths,
//! rectangle sides, offsets of the center segment) is a frequency-1 base-0
//! sinusoid of θ, and every area is a product of two of them, which lands in
//! frequency 2. This module is the algebra those solvers are written in.
//!
//! Internally a sinusoid is stored as `c·cos(ωθ) + s·sin(ωθ) + b`; sums and
//! products are then exact linear/bilinear maps on the coefficients.
//! [`Sinusoid::amplitude`] and [`Sinusoid::phase`] expose the canonical form
//! (a ≥ 0, φ ∈ [0, 2π)).

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::geom::ANGLE_EPS;

/// Relative amplitude below which two curves are considered identical.
pub const AMP_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frequency {
    One,
    Two,
}

impl Frequency {
    pub fn omega(self) -> f64 {
        match self {
            Frequency::One => 1.0,
            Frequency::Two => 2.0,
        }
    }

    fn as_u8(self) -> u8 {
        match self {
            Frequency::One => 1,
            Frequency::Two => 2,
        }
    }

    pub fn from_u32(w: u32) -> Result<Self> {
        match w {
            1 => Ok(Frequency::One),
            2 => Ok(Frequency::Two),
            other => Err(Error::UnsupportedFrequency(other)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sinusoid {
    cos: f64,
    sin: f64,
    base: f64,
    freq: Frequency,
}

impl Sinusoid {
    /// `amplitude·sin(ω·θ + phase) + base`.
    pub fn new(amplitude: f64, omega: u32, phase: f64, base: f64) -> Result<Self> {
        let freq = Frequency::from_u32(omega)?;
        let (sp, cp) = phase.sin_cos();
        Ok(Sinusoid { cos: amplitude * sp, sin: amplitude * cp, base, freq })
    }

    /// `cos_coeff·cos(ωθ) + sin_coeff·sin(ωθ) + base`.
    pub const fn from_coeffs(freq: Frequency, cos_coeff: f64, sin_coeff: f64, base: f64) -> Self {
        Sinusoid { cos: cos_coeff, sin: sin_coeff, base, freq }
    }

    /// Base-0 frequency-1 sinusoid `c·cos θ + s·sin θ`.
    pub const fn harmonic(cos_coeff: f64, sin_coeff: f64) -> Self {
        Self::from_coeffs(Frequency::One, cos_coeff, sin_coeff, 0.0)
    }

    pub const fn zero(freq: Frequency) -> Self {
        Self::from_coeffs(freq, 0.0, 0.0, 0.0)
    }

    pub const fn constant(freq: Frequency, base: f64) -> Self {
        Self::from_coeffs(freq, 0.0, 0.0, base)
    }

    pub fn freq(&self) -> Frequency {
        self.freq
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn cos_coeff(&self) -> f64 {
        self.cos
    }

    pub fn sin_coeff(&self) -> f64 {
        self.sin
    }

    pub fn amplitude(&self) -> f64 {
        self.cos.hypot(self.sin)
    }

    /// Canonical phase in `[0, 2π)`; zero for a vanishing amplitude.
    pub fn phase(&self) -> f64 {
        if self.amplitude() == 0.0 {
            return 0.0;
        }
        let p = self.cos.atan2(self.sin).rem_euclid(TAU);
        if p >= TAU {
            0.0
        } else {
            p
        }
    }

    /// Magnitude scale used for relative tolerances.
    pub fn scale(&self) -> f64 {
        self.amplitude() + self.base.abs()
    }

    pub fn value(&self, theta: f64) -> f64 {
        let (s, c) = (self.freq.omega() * theta).sin_cos();
        self.cos * c + self.sin * s + self.base
    }

    pub fn derivative(&self, theta: f64) -> f64 {
        let w = self.freq.omega();
        let (s, c) = (w * theta).sin_cos();
        w * (self.sin * c - self.cos * s)
    }

    pub fn is_base_zero_freq_one(&self) -> bool {
        self.freq == Frequency::One && self.base == 0.0
    }

    /// Whether the function is constant up to `tol` in amplitude.
    pub fn is_flat(&self, tol: f64) -> bool {
        self.amplitude() <= tol
    }

    pub fn scaled(&self, k: f64) -> Self {
        Sinusoid { cos: k * self.cos, sin: k * self.sin, base: k * self.base, freq: self.freq }
    }

    pub fn plus_constant(&self, k: f64) -> Self {
        Sinusoid { base: self.base + k, ..*self }
    }

    /// Sum of two sinusoids of the same frequency.
    pub fn try_add(&self, other: &Sinusoid) -> Result<Sinusoid> {
        if self.freq != other.freq {
            return Err(Error::FrequencyMismatch(self.freq.as_u8(), other.freq.as_u8()));
        }
        Ok(Sinusoid {
            cos: self.cos + other.cos,
            sin: self.sin + other.sin,
            base: self.base + other.base,
            freq: self.freq,
        })
    }

    pub fn try_sub(&self, other: &Sinusoid) -> Result<Sinusoid> {
        self.try_add(&other.scaled(-1.0))
    }

    /// Product of two base-0 frequency-1 sinusoids, a frequency-2 sinusoid.
    pub fn multiply(&self, other: &Sinusoid) -> Result<Sinusoid> {
        if !self.is_base_zero_freq_one() || !other.is_base_zero_freq_one() {
            return Err(Error::NotBaseZeroFrequencyOne);
        }
        let (c1, s1, c2, s2) = (self.cos, self.sin, other.cos, other.sin);
        // cos² = (1+cos2θ)/2, sin² = (1−cos2θ)/2, sin·cos = sin2θ/2
        Ok(Sinusoid {
            cos: 0.5 * (c1 * c2 - s1 * s2),
            sin: 0.5 * (c1 * s2 + s1 * c2),
            base: 0.5 * (c1 * c2 + s1 * s2),
            freq: Frequency::Two,
        })
    }

    /// Zeros in the open interval `(lo, hi)`, sorted. A function that vanishes
    /// identically has no isolated zeros and yields an empty list.
    pub fn roots(&self, lo: f64, hi: f64) -> Vec<f64> {
        let a = self.amplitude();
        if a == 0.0 || hi <= lo {
            return Vec::new();
        }
        let r = -self.base / a;
        if r.abs() > 1.0 + 1e-12 {
            return Vec::new();
        }
        let r = r.clamp(-1.0, 1.0);
        let phi = self.cos.atan2(self.sin);
        let w = self.freq.omega();
        let u1 = r.asin();
        let mut out = Vec::new();
        for u in [u1, PI - u1] {
            push_periodic((u - phi) / w, TAU / w, lo, hi, &mut out);
        }
        out.sort_by(f64::total_cmp);
        out.dedup_by(|a, b| (*a - *b).abs() <= ANGLE_EPS);
        out
    }

    /// Interior critical points in `(lo, hi)`, sorted.
    pub fn critical_points(&self, lo: f64, hi: f64) -> Vec<f64> {
        if self.amplitude() == 0.0 || hi <= lo {
            return Vec::new();
        }
        let phi = self.cos.atan2(self.sin);
        let w = self.freq.omega();
        let mut out = Vec::new();
        push_periodic((FRAC_PI_2 - phi) / w, PI / w, lo, hi, &mut out);
        out.sort_by(f64::total_cmp);
        out
    }
}

/// Pushes every `t0 + k·period` lying strictly inside `(lo, hi)`.
fn push_periodic(t0: f64, period: f64, lo: f64, hi: f64, out: &mut Vec<f64>) {
    let k0 = ((lo - t0) / period).floor() as i64;
    let mut k = k0;
    loop {
        let t = t0 + k as f64 * period;
        if t >= hi {
            break;
        }
        if t > lo {
            out.push(t);
        }
        k += 1;
    }
}

impl Add for Sinusoid {
    type Output = Sinusoid;

    /// Panics on a frequency mismatch; use [`Sinusoid::try_add`] for a checked sum.
    fn add(self, rhs: Sinusoid) -> Sinusoid {
        self.try_add(&rhs).expect("sinusoid frequency mismatch")
    }
}

impl Sub for Sinusoid {
    type Output = Sinusoid;

    fn sub(self, rhs: Sinusoid) -> Sinusoid {
        self.try_sub(&rhs).expect("sinusoid frequency mismatch")
    }
}

impl Neg for Sinusoid {
    type Output = Sinusoid;

    fn neg(self) -> Sinusoid {
        self.scaled(-1.0)
    }
}

impl Mul<f64> for Sinusoid {
    type Output = Sinusoid;

    fn mul(self, k: f64) -> Sinusoid {
        self.scaled(k)
    }
}

/// Checked sum of two sinusoids of the same frequency.
pub fn add(f: &Sinusoid, g: &Sinusoid) -> Result<Sinusoid> {
    f.try_add(g)
}

/// Product of two base-0 frequency-1 sinusoids.
pub fn multiply(f: &Sinusoid, g: &Sinusoid) -> Result<Sinusoid> {
    f.multiply(g)
}

/// All crossings of two base-0 frequency-1 sinusoids in the open interval
/// `(lo, hi)` (at most one inside `[0, π)`).
pub fn crossings(f: &Sinusoid, g: &Sinusoid, lo: f64, hi: f64) -> Result<Vec<f64>> {
    if !f.is_base_zero_freq_one() || !g.is_base_zero_freq_one() {
        return Err(Error::NotBaseZeroFrequencyOne);
    }
    let d = *f - *g;
    let scale = f.amplitude().max(g.amplitude());
    if d.amplitude() <= AMP_EPS * scale {
        return Err(Error::IdenticalCurves);
    }
    Ok(d.roots(lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

impl Sense {
    /// Whether `a` is strictly better than `b` by more than `tol`.
    pub fn better(self, a: f64, b: f64, tol: f64) -> bool {
        match self {
            Sense::Min => a < b - tol,
            Sense::Max => a > b + tol,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub theta: f64,
    pub value: f64,
    /// The optimum sits on an end of the queried interval.
    pub on_boundary: bool,
}

/// A function of θ that is a single sinusoid on each half-open piece
/// `[breaks[i], breaks[i+1])`; the last piece also owns its right end.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseSinusoid {
    breaks: Vec<f64>,
    pieces: Vec<Sinusoid>,
}

impl PiecewiseSinusoid {
    pub fn new(breaks: Vec<f64>, pieces: Vec<Sinusoid>) -> Result<Self> {
        if pieces.is_empty() || breaks.len() != pieces.len() + 1 {
            return Err(Error::InvalidPiecewise("need one more breakpoint than pieces"));
        }
        if breaks.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(Ordering::Less)) {
            return Err(Error::InvalidPiecewise("breakpoints must increase strictly"));
        }
        Ok(PiecewiseSinusoid { breaks, pieces })
    }

    pub fn single(lo: f64, hi: f64, s: Sinusoid) -> Self {
        debug_assert!(lo < hi);
        PiecewiseSinusoid { breaks: vec![lo, hi], pieces: vec![s] }
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.breaks[0], *self.breaks.last().unwrap())
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breaks
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// `(lo, hi, sinusoid)` for every piece, left to right.
    pub fn pieces(&self) -> impl Iterator<Item = (f64, f64, &Sinusoid)> + '_ {
        self.pieces.iter().enumerate().map(move |(i, s)| (self.breaks[i], self.breaks[i + 1], s))
    }

    fn piece_index(&self, theta: f64) -> usize {
        let k = self.breaks.partition_point(|&b| b <= theta);
        k.saturating_sub(1).min(self.pieces.len() - 1)
    }

    pub fn piece_at(&self, theta: f64) -> &Sinusoid {
        &self.pieces[self.piece_index(theta)]
    }

    pub fn value(&self, theta: f64) -> f64 {
        self.piece_at(theta).value(theta)
    }

    pub fn scale(&self) -> f64 {
        self.pieces.iter().map(Sinusoid::scale).fold(0.0, f64::max)
    }

    pub fn map(&self, f: impl Fn(&Sinusoid) -> Sinusoid) -> Self {
        PiecewiseSinusoid { breaks: self.breaks.clone(), pieces: self.pieces.iter().map(f).collect() }
    }

    /// Restriction to `[lo, hi]`, which must lie inside the domain.
    pub fn restrict(&self, lo: f64, hi: f64) -> Result<Self> {
        let (dlo, dhi) = self.domain();
        if lo < dlo - ANGLE_EPS || hi > dhi + ANGLE_EPS || lo.partial_cmp(&hi) != Some(Ordering::Less) {
            return Err(Error::OutsideDomain { lo, hi });
        }
        let mut breaks = vec![lo];
        let mut pieces = Vec::new();
        for (a, b, s) in self.pieces() {
            if b <= lo + ANGLE_EPS || a >= hi - ANGLE_EPS {
                continue;
            }
            if a > lo + ANGLE_EPS {
                breaks.push(a);
            }
            pieces.push(*s);
        }
        if pieces.is_empty() {
            pieces.push(*self.piece_at(0.5 * (lo + hi)));
        }
        breaks.push(hi);
        PiecewiseSinusoid::new(breaks, pieces)
    }

    /// Pointwise combination over the intersection of the two domains.
    pub fn combine(
        &self,
        other: &PiecewiseSinusoid,
        op: impl Fn(&Sinusoid, &Sinusoid) -> Result<Sinusoid>,
    ) -> Result<Self> {
        let lo = self.breaks[0].max(other.breaks[0]);
        let hi = self.domain().1.min(other.domain().1);
        if lo.partial_cmp(&hi) != Some(Ordering::Less) {
            return Err(Error::OutsideDomain { lo, hi });
        }
        let cuts = merged_breaks(&[&self.breaks, &other.breaks], lo, hi);
        let mut pieces = Vec::with_capacity(cuts.len() - 1);
        for w in cuts.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            pieces.push(op(self.piece_at(mid), other.piece_at(mid))?);
        }
        Ok(PiecewiseSinusoid { breaks: cuts, pieces })
    }

    pub fn add(&self, other: &PiecewiseSinusoid) -> Result<Self> {
        self.combine(other, Sinusoid::try_add)
    }

    pub fn sub(&self, other: &PiecewiseSinusoid) -> Result<Self> {
        self.combine(other, Sinusoid::try_sub)
    }

    /// Product of two piecewise base-0 frequency-1 functions.
    pub fn multiply(&self, other: &PiecewiseSinusoid) -> Result<Self> {
        self.combine(other, Sinusoid::multiply)
    }

    /// Merges adjacent pieces whose sinusoids agree within `tol`.
    pub fn coalesce(mut self, tol: f64) -> Self {
        let mut breaks = vec![self.breaks[0]];
        let mut pieces: Vec<Sinusoid> = Vec::with_capacity(self.pieces.len());
        for (i, s) in self.pieces.drain(..).enumerate() {
            match pieces.last() {
                Some(prev) if prev.freq == s.freq && (*prev - s).scale() <= tol => {}
                _ => {
                    if i > 0 {
                        breaks.push(self.breaks[i]);
                    }
                    pieces.push(s);
                }
            }
        }
        breaks.push(*self.breaks.last().unwrap());
        PiecewiseSinusoid { breaks, pieces }
    }

    /// Global extremum over the closed interval `[lo, hi]`. Candidates are the
    /// piece ends and interior critical points; ties go to the smaller θ.
    pub fn extremize(&self, lo: f64, hi: f64, sense: Sense) -> Result<Extremum> {
        let (dlo, dhi) = self.domain();
        if lo < dlo - ANGLE_EPS || hi > dhi + ANGLE_EPS || lo > hi {
            return Err(Error::OutsideDomain { lo, hi });
        }
        let lo = lo.max(dlo);
        let hi = hi.min(dhi);
        let tol = 1e-12 * self.scale();
        let mut best: Option<(f64, f64)> = None;
        let mut consider = |t: f64, v: f64| match best {
            Some((_, bv)) if !sense.better(v, bv, tol) => {}
            _ => best = Some((t, v)),
        };
        for (a, b, s) in self.pieces() {
            let a = a.max(lo);
            let b = b.min(hi);
            if a > b {
                continue;
            }
            consider(a, s.value(a));
            for t in s.critical_points(a, b) {
                consider(t, s.value(t));
            }
            consider(b, s.value(b));
        }
        let (theta, value) = best.expect("nonempty interval");
        Ok(Extremum { theta, value, on_boundary: theta <= lo || theta >= hi })
    }

    pub fn extremize_all(&self, sense: Sense) -> Extremum {
        let (lo, hi) = self.domain();
        self.extremize(lo, hi, sense).expect("own domain")
    }
}

/// Sorted union of breakpoints clipped to `[lo, hi]`, dropping near-duplicates.
fn merged_breaks(lists: &[&[f64]], lo: f64, hi: f64) -> Vec<f64> {
    let mut all: Vec<f64> = lists
        .iter()
        .flat_map(|l| l.iter().copied())
        .filter(|&b| b > lo + ANGLE_EPS && b < hi - ANGLE_EPS)
        .collect();
    all.sort_by(f64::total_cmp);
    let mut out = vec![lo];
    for b in all {
        if b - *out.last().unwrap() > ANGLE_EPS {
            out.push(b);
        }
    }
    if hi - *out.last().unwrap() <= ANGLE_EPS && out.len() > 1 {
        out.pop();
    }
    out.push(hi);
    out
}

/// Pointwise max (`Sense::Max`) or min of two piecewise functions over the
/// intersection of their domains. Near-identical curves keep `f`.
pub fn envelope2(f: &PiecewiseSinusoid, g: &PiecewiseSinusoid, sense: Sense) -> Result<PiecewiseSinusoid> {
    let lo = f.breaks[0].max(g.breaks[0]);
    let hi = f.domain().1.min(g.domain().1);
    if lo.partial_cmp(&hi) != Some(Ordering::Less) {
        return Err(Error::OutsideDomain { lo, hi });
    }
    let cuts = merged_breaks(&[&f.breaks, &g.breaks], lo, hi);
    let mut breaks = vec![lo];
    let mut pieces = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = 0.5 * (a + b);
        let (sf, sg) = (*f.piece_at(mid), *g.piece_at(mid));
        let choose = |t: f64| -> Sinusoid {
            let d = sf.value(t) - sg.value(t);
            let keep_f = match sense {
                Sense::Max => d >= 0.0,
                Sense::Min => d <= 0.0,
            };
            if keep_f {
                sf
            } else {
                sg
            }
        };
        let diff = sf.try_sub(&sg)?;
        let tol = AMP_EPS * sf.scale().max(sg.scale());
        let mut sub = vec![a];
        if sf.freq == sg.freq && diff.scale() > tol {
            for r in diff.roots(a, b) {
                if r - *sub.last().unwrap() > ANGLE_EPS && b - r > ANGLE_EPS {
                    sub.push(r);
                }
            }
        }
        sub.push(b);
        for s in sub.windows(2) {
            let pick = if diff.scale() <= tol { sf } else { choose(0.5 * (s[0] + s[1])) };
            pieces.push(pick);
            breaks.push(s[1]);
        }
    }
    let tol = AMP_EPS * f.scale().max(g.scale());
    Ok(PiecewiseSinusoid { breaks, pieces }.coalesce(tol))
}

fn envelope(fs: &[PiecewiseSinusoid], lo: f64, hi: f64, sense: Sense) -> Result<PiecewiseSinusoid> {
    match fs {
        [] => Err(Error::EmptyEnvelope),
        [f] => f.restrict(lo, hi),
        _ => {
            let (l, r) = fs.split_at(fs.len() / 2);
            envelope2(&envelope(l, lo, hi, sense)?, &envelope(r, lo, hi, sense)?, sense)
        }
    }
}

/// Upper envelope on `[lo, hi]`, by divide-and-conquer pairwise merging.
pub fn upper_envelope(fs: &[PiecewiseSinusoid], lo: f64, hi: f64) -> Result<PiecewiseSinusoid> {
    envelope(fs, lo, hi, Sense::Max)
}

/// Lower envelope on `[lo, hi]`.
pub fn lower_envelope(fs: &[PiecewiseSinusoid], lo: f64, hi: f64) -> Result<PiecewiseSinusoid> {
    envelope(fs, lo, hi, Sense::Min)
}
