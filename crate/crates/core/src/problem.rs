use std::fmt;
use std::str::FromStr;

/// Annulus or empty-shape family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Square,
    UniformRect,
    Rect,
    EmptyRect,
    EmptySquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Width,
    Area,
    /// Minimum area among minimum-width annuli.
    AreaWidth,
    /// Minimum width among minimum-area annuli.
    WidthArea,
    /// Largest empty shape.
    Largest,
}

impl Shape {
    pub fn is_empty_shape(self) -> bool {
        matches!(self, Shape::EmptyRect | Shape::EmptySquare)
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::Square => "square",
            Shape::UniformRect => "urect",
            Shape::Rect => "rect",
            Shape::EmptyRect => "empty-rect",
            Shape::EmptySquare => "empty-square",
        }
    }
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::Width => "width",
            Objective::Area => "area",
            Objective::AreaWidth => "area-width",
            Objective::WidthArea => "width-area",
            Objective::Largest => "largest",
        }
    }
}

/// Whether a (shape, objective) pair names a solver.
pub fn is_supported(shape: Shape, objective: Objective) -> bool {
    shape.is_empty_shape() == (objective == Objective::Largest)
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Shape::Square, Shape::UniformRect, Shape::Rect, Shape::EmptyRect, Shape::EmptySquare]
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown shape '{s}'"))
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Objective::Width, Objective::Area, Objective::AreaWidth, Objective::WidthArea, Objective::Largest]
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown objective '{s}'"))
    }
}
