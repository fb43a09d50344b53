use crate::calipers::{pair_swap_angles, primary_intervals, PrimaryInterval};
use crate::error::Result;
use crate::geom::{Point, ANGLE_EPS};

/// A sub-interval of a primary interval inside which no pair of points swaps
/// frame-x or frame-y order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementaryInterval {
    pub lo: f64,
    pub hi: f64,
    /// Index of the enclosing primary interval.
    pub primary: usize,
}

impl ElementaryInterval {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Primary intervals together with their refinement into elementary ones.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub primaries: Vec<PrimaryInterval>,
    pub elementary: Vec<ElementaryInterval>,
}

/// Partition of [0, π/2) at every pairwise order swap, every primary interval
/// end and every change of the side realizing d(θ).
pub fn elementary_intervals(points: &[Point]) -> Result<Decomposition> {
    let primaries = primary_intervals(points)?;
    let swaps = pair_swap_angles(points);
    let mut elementary = Vec::new();
    let mut k = 0;
    for (pi, p) in primaries.iter().enumerate() {
        while k < swaps.len() && swaps[k] <= p.lo + ANGLE_EPS {
            k += 1;
        }
        let mut lo = p.lo;
        while k < swaps.len() && swaps[k] < p.hi - ANGLE_EPS {
            if swaps[k] - lo > ANGLE_EPS {
                elementary.push(ElementaryInterval { lo, hi: swaps[k], primary: pi });
                lo = swaps[k];
            }
            k += 1;
        }
        elementary.push(ElementaryInterval { lo, hi: p.hi, primary: pi });
    }
    Ok(Decomposition { primaries, elementary })
}
