use num_traits::{One, Zero};

use super::coords::{ProjLine, ProjPoint, Rational};
use super::triangle::Triangle;
use crate::error::{Error, Result};

/// Invertible projective transformation given by a 3×3 rational matrix.
///
/// Points transform as `p ↦ M p`, lines by the cofactor matrix
/// (`l ↦ det(M) M⁻ᵀ l`), which keeps incidence intact without dividing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    m: [[Rational; 3]; 3],
    cof: [[Rational; 3]; 3],
}

fn det(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn cofactors(m: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (i1, i2) = ((i + 1) % 3, (i + 2) % 3);
            let (j1, j2) = ((j + 1) % 3, (j + 2) % 3);
            &m[i1][j1] * &m[i2][j2] - &m[i1][j2] * &m[i2][j1]
        })
    })
}

fn mul_vec(m: &[[Rational; 3]; 3], v: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| &m[i][0] * &v[0] + &m[i][1] * &v[1] + &m[i][2] * &v[2])
}

impl ProjMap {
    pub fn new(m: [[Rational; 3]; 3]) -> Result<Self> {
        if det(&m).is_zero() {
            return Err(Error::SingularMap);
        }
        let cof = cofactors(&m);
        Ok(Self { m, cof })
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Result<Self> {
        Self::new(m.map(|row| row.map(|x| Rational::from_integer(x.into()))))
    }

    pub fn identity() -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
        }))
        .expect("identity is invertible")
    }

    pub fn matrix(&self) -> &[[Rational; 3]; 3] {
        &self.m
    }

    /// True when the bottom row is `(0, 0, 1)`, so finite points stay finite.
    pub fn is_affine(&self) -> bool {
        self.m[2][0].is_zero() && self.m[2][1].is_zero() && self.m[2][2].is_one()
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::from_rationals(&mul_vec(&self.m, &p.to_rationals()))
            .expect("invertible map sends nonzero vectors to nonzero vectors")
    }

    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        ProjLine::from_rationals(&mul_vec(&self.cof, &l.to_rationals()))
            .expect("cofactor matrix of an invertible map is invertible")
    }

    pub fn apply_triangle(&self, t: &Triangle) -> Triangle {
        Triangle::from_array(t.vertices().clone().map(|v| self.apply_point(&v)))
            .expect("invertible map preserves non-collinearity")
    }
}

/// Image of `p` under `t`.
pub fn apply_map(t: &ProjMap, p: &ProjPoint) -> ProjPoint {
    t.apply_point(p)
}
