//! Signed segment ratios, Menelaus products, and the nine-point identity
//! relating two triangles in general position.
//!
//! Ratios use the convention `XU / XV`, both directed segments measured from
//! the point `X` on the side line. With it a Menelaus transversal yields
//! exactly `+1`, and the product over the three cyclic modes of the nine
//! side intersections of two triangles is identically `1`.

use num_traits::{One, Signed, Zero};

use crate::correspondence::Mode;
use crate::error::{Error, Result};
use crate::kernel::{collinear, incident, join, meet, ProjPoint, Rational, Triangle};

/// Signed ratio `XU / XV` of directed segments along a common affine line.
///
/// Lengths are compared in the coordinate (x or y) in which the line's
/// direction is larger in magnitude, ties going to x. Any coordinate with a
/// nonzero direction component gives the same value.
pub fn affine_ratio(x: &ProjPoint, u: &ProjPoint, v: &ProjPoint) -> Result<Rational> {
    let (Some(xa), Some(ua), Some(va)) = (x.to_affine(), u.to_affine(), v.to_affine()) else {
        return Err(Error::PointAtInfinity);
    };
    if !collinear(x, u, v) {
        return Err(Error::NotCollinear);
    }
    if x == v {
        return Err(Error::DenominatorVanishes);
    }
    if x == u {
        return Ok(Rational::zero());
    }
    // Direction of ax + by + c = 0 is (b, -a).
    let line = join(x, v)?;
    let [a, b, _] = line.coords();
    let (num, den) = if b.abs() >= a.abs() {
        (ua.0 - &xa.0, va.0 - &xa.0)
    } else {
        (ua.1 - &xa.1, va.1 - &xa.1)
    };
    Ok(num / den)
}

fn on_side(t: &Triangle, side: usize, p: &ProjPoint) -> Result<()> {
    if p.is_at_infinity() {
        return Err(Error::PointAtInfinity);
    }
    if !incident(p, &t.side(side)) || t.has_vertex(p) {
        return Err(Error::SideMembershipViolated);
    }
    Ok(())
}

/// `(P B / P C) · (Q C / Q A) · (R A / R B)` for points on the side lines
/// `BC`, `CA`, `AB`. Equals `1` exactly when the three points are collinear.
pub fn menelaus_product(
    t: &Triangle,
    p_bc: &ProjPoint,
    q_ca: &ProjPoint,
    r_ab: &ProjPoint,
) -> Result<Rational> {
    if !t.is_affine() {
        return Err(Error::PointAtInfinity);
    }
    on_side(t, 0, p_bc)?;
    on_side(t, 1, q_ca)?;
    on_side(t, 2, r_ab)?;
    let (a, b, c) = (t.a(), t.b(), t.c());
    Ok(affine_ratio(p_bc, b, c)? * affine_ratio(q_ca, c, a)? * affine_ratio(r_ab, a, b)?)
}

/// The nine intersections of the sides of a first triangle with the sides of
/// a second one, grouped by mode.
///
/// For mode `k` and side index `i` (0 = `B₁C₁`, 1 = `A₁C₁`, 2 = `A₁B₁`), the
/// point is the first triangle's side `i` met with the second triangle's
/// side `i + k (mod 3)`. This reproduces the naming `P₁ = B₁C₁ ∩ B₂C₂`,
/// `Q₁ = B₁C₁ ∩ A₂C₂`, `R₁ = B₁C₁ ∩ A₂B₂`, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NineIntersections {
    points: [[ProjPoint; 3]; 3],
}

impl NineIntersections {
    pub fn get(&self, mode: Mode, side: usize) -> &ProjPoint {
        &self.points[mode.shift()][side]
    }

    /// The three points of one mode, ordered by the first triangle's side.
    pub fn mode(&self, mode: Mode) -> &[ProjPoint; 3] {
        &self.points[mode.shift()]
    }

    pub fn p1(&self) -> &ProjPoint {
        self.get(Mode::P, 0)
    }
    pub fn p2(&self) -> &ProjPoint {
        self.get(Mode::P, 1)
    }
    pub fn p3(&self) -> &ProjPoint {
        self.get(Mode::P, 2)
    }
    pub fn q1(&self) -> &ProjPoint {
        self.get(Mode::Q, 0)
    }
    pub fn q2(&self) -> &ProjPoint {
        self.get(Mode::Q, 1)
    }
    pub fn q3(&self) -> &ProjPoint {
        self.get(Mode::Q, 2)
    }
    pub fn r1(&self) -> &ProjPoint {
        self.get(Mode::R, 0)
    }
    pub fn r2(&self) -> &ProjPoint {
        self.get(Mode::R, 1)
    }
    pub fn r3(&self) -> &ProjPoint {
        self.get(Mode::R, 2)
    }
}

const SIDE_NAMES: [&str; 3] = ["BC", "CA", "AB"];

/// Computes the nine side intersections, rejecting configurations in which
/// any of the ratios would be undefined.
pub fn nine_intersections(t1: &Triangle, t2: &Triangle) -> Result<NineIntersections> {
    if !t1.is_affine() {
        return Err(Error::GeneralPositionViolation(
            "first triangle has a vertex at infinity".into(),
        ));
    }
    let s1 = t1.sides();
    let s2 = t2.sides();
    let mut points: Vec<[ProjPoint; 3]> = Vec::with_capacity(3);
    for mode in Mode::ALL {
        let mut row = Vec::with_capacity(3);
        for i in 0..3 {
            let j = (i + mode.shift()) % 3;
            let what = || format!("{}₁ ∩ {}₂", SIDE_NAMES[i], SIDE_NAMES[j]);
            let p = meet(&s1[i], &s2[j])
                .map_err(|_| Error::GeneralPositionViolation(format!("{} coincide", what())))?;
            if p.is_at_infinity() {
                return Err(Error::GeneralPositionViolation(format!(
                    "{} is at infinity",
                    what()
                )));
            }
            if t1.has_vertex(&p) {
                return Err(Error::GeneralPositionViolation(format!(
                    "{} is a vertex of the first triangle",
                    what()
                )));
            }
            row.push(p);
        }
        points.push(row.try_into().expect("three sides"));
    }
    Ok(NineIntersections {
        points: points.try_into().expect("three modes"),
    })
}

/// One grouped factor of the nine-point identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeProduct {
    pub mode: Mode,
    pub value: Rational,
}

/// `(X₁B₁/X₁C₁)(X₂C₁/X₂A₁)(X₃A₁/X₃B₁)` for the points `X` of one mode.
pub fn mode_product(n: &NineIntersections, t1: &Triangle, mode: Mode) -> Result<ModeProduct> {
    let [x1, x2, x3] = n.mode(mode);
    let value = menelaus_product(t1, x1, x2, x3)?;
    Ok(ModeProduct { mode, value })
}

/// Product of the three mode products; identically `1`.
pub fn grand_product(n: &NineIntersections, t1: &Triangle) -> Result<Rational> {
    Mode::ALL.into_iter().try_fold(Rational::one(), |acc, m| {
        Ok(acc * mode_product(n, t1, m)?.value)
    })
}

/// True iff the `Q` product is the reciprocal of the `R` product, which holds
/// exactly when `A₁A₂, B₁B₂, C₁C₂` are concurrent.
pub fn bihomology_criterion(t1: &Triangle, t2: &Triangle) -> Result<bool> {
    let n = nine_intersections(t1, t2)?;
    let q = mode_product(&n, t1, Mode::Q)?.value;
    let r = mode_product(&n, t1, Mode::R)?.value;
    Ok(q * r == Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{concurrent, ProjLine};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new(x, y, z).unwrap()
    }

    fn aff(x: Rational, y: Rational) -> ProjPoint {
        ProjPoint::affine(x, y)
    }

    fn tri(v: [(i64, i64); 3]) -> Triangle {
        Triangle::from_array(v.map(|(x, y)| pt(x, y, 1))).unwrap()
    }

    #[test]
    fn affine_ratio_examples() {
        assert_eq!(
            affine_ratio(&pt(3, 0, 1), &pt(1, 0, 1), &pt(2, 0, 1)).unwrap(),
            q(2, 1)
        );
        assert_eq!(
            affine_ratio(&pt(0, 0, 1), &pt(1, 0, 1), &pt(-1, 0, 1)).unwrap(),
            q(-1, 1)
        );
        assert_eq!(
            affine_ratio(&pt(5, 5, 1), &pt(5, 5, 1), &pt(7, 7, 1)).unwrap(),
            q(0, 1)
        );
    }

    #[test]
    fn affine_ratio_errors() {
        assert_eq!(
            affine_ratio(&pt(0, 0, 1), &pt(1, 0, 1), &pt(0, 1, 1)),
            Err(Error::NotCollinear)
        );
        assert_eq!(
            affine_ratio(&pt(1, 0, 0), &pt(1, 0, 1), &pt(2, 0, 1)),
            Err(Error::PointAtInfinity)
        );
        assert_eq!(
            affine_ratio(&pt(2, 0, 1), &pt(1, 0, 1), &pt(2, 0, 1)),
            Err(Error::DenominatorVanishes)
        );
    }

    #[test]
    fn affine_ratio_on_vertical_and_steep_lines() {
        // x = 4: only the y component is usable.
        assert_eq!(
            affine_ratio(&pt(4, 0, 1), &pt(4, 3, 1), &pt(4, -1, 1)).unwrap(),
            q(-3, 1)
        );
        // Direction (1, 5): y is the larger component; x would give the same.
        let (x, u, v) = (pt(0, 0, 1), pt(2, 10, 1), pt(-1, -5, 1));
        assert_eq!(affine_ratio(&x, &u, &v).unwrap(), q(-2, 1));
    }

    #[test]
    fn menelaus_examples() {
        let t = tri([(0, 0), (1, 0), (0, 1)]);
        let p = aff(q(2, 3), q(1, 3));
        let qq = aff(q(0, 1), q(-1, 1));
        // (-1/2) · 2 · (-1) = 1
        let r = aff(q(1, 2), q(0, 1));
        assert_eq!(menelaus_product(&t, &p, &qq, &r).unwrap(), q(1, 1));

        let r_off = aff(q(1, 4), q(0, 1));
        // (-1/2) · 2 · ((0 - 1/4) / (1 - 1/4)) = 1/3
        assert_eq!(menelaus_product(&t, &p, &qq, &r_off).unwrap(), q(1, 3));

        let mids = [
            aff(q(1, 2), q(1, 2)),
            aff(q(0, 1), q(1, 2)),
            aff(q(1, 2), q(0, 1)),
        ];
        assert_eq!(
            menelaus_product(&t, &mids[0], &mids[1], &mids[2]).unwrap(),
            q(-1, 1)
        );
    }

    #[test]
    fn menelaus_rejects_off_side_points() {
        let t = tri([(0, 0), (1, 0), (0, 1)]);
        let mid = aff(q(1, 2), q(1, 2));
        assert_eq!(
            menelaus_product(&t, &pt(1, 1, 1), &pt(0, 2, 1), &pt(3, 0, 1)),
            Err(Error::SideMembershipViolated)
        );
        assert_eq!(
            menelaus_product(&t, &mid, &pt(0, 1, 1), &pt(3, 0, 1)),
            Err(Error::SideMembershipViolated)
        );
    }

    #[test]
    fn nine_intersections_layout() {
        let t1 = tri([(0, 0), (7, 1), (2, 6)]);
        let t2 = tri([(5, 4), (-3, 2), (1, -4)]);
        let n = nine_intersections(&t1, &t2).unwrap();
        let (s1, s2) = (t1.sides(), t2.sides());
        let on = |p: &ProjPoint, a: &ProjLine, b: &ProjLine| incident(p, a) && incident(p, b);
        assert!(on(n.p1(), &s1[0], &s2[0]));
        assert!(on(n.q1(), &s1[0], &s2[1]));
        assert!(on(n.r1(), &s1[0], &s2[2]));
        assert!(on(n.p2(), &s1[1], &s2[1]));
        assert!(on(n.q2(), &s1[1], &s2[2]));
        assert!(on(n.r2(), &s1[1], &s2[0]));
        assert!(on(n.p3(), &s1[2], &s2[2]));
        assert!(on(n.q3(), &s1[2], &s2[0]));
        assert!(on(n.r3(), &s1[2], &s2[1]));
    }

    #[test]
    fn nine_intersections_general_position() {
        let t1 = tri([(0, 0), (4, 0), (0, 4)]);
        let shared = tri([(9, 1), (4, 0), (0, 4)]);
        assert!(matches!(
            nine_intersections(&t1, &shared),
            Err(Error::GeneralPositionViolation(_))
        ));
        // A₂B₂ parallel to A₁B₁ (both horizontal).
        let parallel = tri([(1, 3), (5, 3), (2, -7)]);
        assert!(matches!(
            nine_intersections(&t1, &parallel),
            Err(Error::GeneralPositionViolation(_))
        ));
    }

    #[test]
    fn grand_product_matches_three_transversals() {
        let t1 = tri([(0, 0), (7, 1), (2, 6)]);
        let t2 = tri([(5, 4), (-3, 2), (1, -4)]);
        let n = nine_intersections(&t1, &t2).unwrap();
        // Transversals P₁Q₃R₂ (line B₂C₂), P₂Q₁R₃ (A₂C₂), P₃Q₂R₁ (A₂B₂).
        let m1 = menelaus_product(&t1, n.p1(), n.r2(), n.q3()).unwrap();
        let m2 = menelaus_product(&t1, n.q1(), n.p2(), n.r3()).unwrap();
        let m3 = menelaus_product(&t1, n.r1(), n.q2(), n.p3()).unwrap();
        assert_eq!(m1, q(1, 1));
        assert_eq!(m2, q(1, 1));
        assert_eq!(m3, q(1, 1));
        assert_eq!(grand_product(&n, &t1).unwrap(), m1 * m2 * m3);
        let by_mode: Rational = Mode::ALL
            .iter()
            .map(|&m| mode_product(&n, &t1, m).unwrap().value)
            .product();
        assert_eq!(by_mode, grand_product(&n, &t1).unwrap());
    }

    /// A pair perspective from `o` under the identity correspondence, with
    /// distinct scale factors so no two sides are parallel.
    fn perspective_pair() -> (Triangle, Triangle) {
        let t1 = tri([(0, 0), (6, 0), (1, 5)]);
        let o = (10, 10);
        let scale = [q(1, 2), q(1, 3), q(2, 3)];
        let v2 = std::array::from_fn(|i| {
            let (x, y) = t1.vertex(i).to_affine().unwrap();
            let s = &scale[i];
            let ox = Rational::from_integer(o.0.into());
            let oy = Rational::from_integer(o.1.into());
            aff(&x + s * (ox - &x), &y + s * (oy - &y))
        });
        (t1, Triangle::from_array(v2).unwrap())
    }

    #[test]
    fn perspective_pair_has_unit_p_product_and_reciprocal_q_r() {
        let (t1, t2) = perspective_pair();
        let n = nine_intersections(&t1, &t2).unwrap();
        assert_eq!(mode_product(&n, &t1, Mode::P).unwrap().value, q(1, 1));
        let qv = mode_product(&n, &t1, Mode::Q).unwrap().value;
        let rv = mode_product(&n, &t1, Mode::R).unwrap().value;
        assert_ne!(qv, q(1, 1));
        assert_eq!(qv, rv.recip());
        assert_eq!(grand_product(&n, &t1).unwrap(), q(1, 1));
        assert!(bihomology_criterion(&t1, &t2).unwrap());
    }

    #[test]
    fn generic_pair_fails_criterion_and_oracle_agrees() {
        let t1 = tri([(0, 0), (7, 1), (2, 6)]);
        let t2 = tri([(5, 4), (-3, 2), (1, -4)]);
        let joins: Vec<_> = (0..3)
            .map(|i| join(t1.vertex(i), t2.vertex(i)).unwrap())
            .collect();
        assert!(!concurrent(&joins[0], &joins[1], &joins[2]));
        assert!(!bihomology_criterion(&t1, &t2).unwrap());
    }
}
