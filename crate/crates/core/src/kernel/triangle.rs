use std::fmt;

use num_traits::Zero;

use super::coords::{det_points, join, ProjLine, ProjPoint};
use crate::error::{Error, Result};

/// Ordered triple of non-collinear points `A, B, C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    vertices: [ProjPoint; 3],
}

impl Triangle {
    pub fn new(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Result<Self> {
        if det_points(&a, &b, &c).is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self {
            vertices: [a, b, c],
        })
    }

    pub fn from_array(v: [ProjPoint; 3]) -> Result<Self> {
        let [a, b, c] = v;
        Self::new(a, b, c)
    }

    pub fn a(&self) -> &ProjPoint {
        &self.vertices[0]
    }

    pub fn b(&self) -> &ProjPoint {
        &self.vertices[1]
    }

    pub fn c(&self) -> &ProjPoint {
        &self.vertices[2]
    }

    pub fn vertex(&self, i: usize) -> &ProjPoint {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[ProjPoint; 3] {
        &self.vertices
    }

    /// Side line opposite vertex `i`: 0 is BC, 1 is CA, 2 is AB.
    pub fn side(&self, i: usize) -> ProjLine {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        join(&self.vertices[j], &self.vertices[k]).expect("vertices of a triangle are distinct")
    }

    pub fn sides(&self) -> [ProjLine; 3] {
        [self.side(0), self.side(1), self.side(2)]
    }

    pub fn has_vertex(&self, p: &ProjPoint) -> bool {
        self.vertices.contains(p)
    }

    pub fn is_affine(&self) -> bool {
        self.vertices.iter().all(|v| !v.is_at_infinity())
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.vertices[0], self.vertices[1], self.vertices[2]
        )
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangle{self}")
    }
}
