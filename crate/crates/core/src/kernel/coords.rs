use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact fraction; the only scalar type used by the geometry.
pub type Rational = BigRational;

/// Reduce an integer triple to its canonical projective representative:
/// gcd 1, first nonzero entry positive.
fn canonical_ints(mut v: [BigInt; 3]) -> Result<[BigInt; 3]> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    let negative = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative);
    if negative {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    Ok(v)
}

/// Scale a rational triple by the lcm of its denominators.
fn clear_denominators(raw: &[Rational; 3]) -> [BigInt; 3] {
    let lcm = raw.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    raw.clone()
        .map(|r| (r * Rational::from_integer(lcm.clone())).to_integer())
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn det3(a: &[BigInt; 3], b: &[BigInt; 3], c: &[BigInt; 3]) -> BigInt {
    dot(a, &cross(b, c))
}

macro_rules! homogeneous_triple {
    ($name:ident, $open:literal, $close:literal) => {
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name([BigInt; 3]);

        impl $name {
            /// Canonicalize an integer triple.
            pub fn from_ints(v: [BigInt; 3]) -> Result<Self> {
                canonical_ints(v).map(Self)
            }

            /// Canonicalize a rational triple (denominators are cleared once).
            pub fn from_rationals(raw: &[Rational; 3]) -> Result<Self> {
                Self::from_ints(clear_denominators(raw))
            }

            pub fn new(
                x: impl Into<BigInt>,
                y: impl Into<BigInt>,
                z: impl Into<BigInt>,
            ) -> Result<Self> {
                Self::from_ints([x.into(), y.into(), z.into()])
            }

            pub fn coords(&self) -> &[BigInt; 3] {
                &self.0
            }

            pub fn to_rationals(&self) -> [Rational; 3] {
                self.0.clone().map(Rational::from_integer)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(
                    f,
                    "{}{}:{}:{}{}",
                    $open, self.0[0], self.0[1], self.0[2], $close
                )
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

homogeneous_triple!(ProjPoint, "(", ")");
homogeneous_triple!(ProjLine, "[", "]");

impl ProjPoint {
    /// The finite point `(x, y)`.
    pub fn affine(x: Rational, y: Rational) -> Self {
        Self::from_rationals(&[x, y, Rational::one()]).expect("z = 1 is never the zero vector")
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[2].is_zero()
    }

    /// Dehomogenize to `(x / z, y / z)`; `None` at infinity.
    pub fn to_affine(&self) -> Option<(Rational, Rational)> {
        if self.is_at_infinity() {
            return None;
        }
        let z = &self.0[2];
        Some((
            Rational::new(self.0[0].clone(), z.clone()),
            Rational::new(self.0[1].clone(), z.clone()),
        ))
    }
}

impl ProjLine {
    pub fn at_infinity() -> Self {
        Self([BigInt::zero(), BigInt::zero(), BigInt::one()])
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[0].is_zero() && self.0[1].is_zero()
    }
}

/// Canonical projective point of a nonzero rational triple.
pub fn canonicalize(raw: &[Rational; 3]) -> Result<ProjPoint> {
    ProjPoint::from_rationals(raw)
}

/// Line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    ProjLine::from_ints(cross(&p.0, &q.0))
}

/// Common point of two distinct lines; parallel lines meet at infinity.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    if l == m {
        return Err(Error::IdenticalLines);
    }
    ProjPoint::from_ints(cross(&l.0, &m.0))
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    dot(&p.0, &l.0).is_zero()
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(&p.0, &q.0, &r.0).is_zero()
}

pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> bool {
    det3(&l.0, &m.0, &n.0).is_zero()
}

/// Signed determinant of three points; zero iff collinear.
pub fn det_points(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> BigInt {
    det3(&p.0, &q.0, &r.0)
}
