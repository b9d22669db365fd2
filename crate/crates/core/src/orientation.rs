use std::fmt;

use serde::Serialize;

/// Whether a similarity keeps (`z -> a z + b`) or flips (`z -> a conj(z) + b`)
/// the orientation of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Preserving => "preserving",
            Orientation::Reversing => "reversing",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which orientations a search should cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OrientationFilter {
    Preserving,
    Reversing,
    #[default]
    Both,
}

impl OrientationFilter {
    pub fn orientations(self) -> &'static [Orientation] {
        match self {
            OrientationFilter::Preserving => &[Orientation::Preserving],
            OrientationFilter::Reversing => &[Orientation::Reversing],
            OrientationFilter::Both => &[Orientation::Preserving, Orientation::Reversing],
        }
    }
}
