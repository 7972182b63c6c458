//! Exact projective primitives on canonical integer homogeneous coordinates.
//!
//! Every point and line is stored as its unique representative: gcd-reduced
//! integers with the first nonzero entry positive. Equality of projective
//! classes is therefore plain structural equality.

mod coords;
mod map;
mod triangle;

pub use coords::{
    canonicalize, collinear, concurrent, det_points, incident, join, meet, ProjLine, ProjPoint,
    Rational,
};
pub use map::{apply_map, ProjMap};
pub use triangle::Triangle;
