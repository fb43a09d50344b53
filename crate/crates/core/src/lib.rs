//! Optimal square and rectangular annuli enclosing planar point sets, in a
//! fixed orientation and over all orientations, and largest empty
//! rectangles and squares.

pub mod calipers;
pub mod empty_rect;
pub mod error;
pub mod fixed;
pub mod geom;
pub mod oracle;
pub mod problem;
pub mod rotating;
pub mod trig;

pub use error::{Error, Result};
pub use geom::{Annulus, AnnulusKind, OrientedRect, Point, PointSet};
pub use problem::{Objective, Shape};
