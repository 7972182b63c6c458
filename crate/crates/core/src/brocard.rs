//! Brocard points, the first Brocard triangle, and Neuberg's tri-homology.
//!
//! Triangle centers are expressed in barycentric coordinates with respect to
//! an affine triangle with rational vertices, so every squared side length
//! and every center below is rational.
//!
//! With `a² = |BC|²`, `b² = |CA|²`, `c² = |AB|²`:
//!
//! * first Brocard point `Ω = (1/b² : 1/c² : 1/a²)`, the point with
//!   `∠ΩAB = ∠ΩBC = ∠ΩCA`;
//! * second Brocard point `Ω' = (1/c² : 1/a² : 1/b²)`, with
//!   `∠Ω'AC = ∠Ω'CB = ∠Ω'BA`;
//! * symmedian point `K = (a² : b² : c²)`.
//!
//! Applying the two-point construction of [`crate::constructions`] to
//! `(ABC, Ω, Ω')` yields the first Brocard triangle. Its third homology
//! center with `ABC` is the isotomic conjugate of `K`.
//!
//! The Brocard assignment above is pinned by a floating-point angle test.

use num_traits::{One, Zero};

use crate::constructions::theorem8_triangles;
use crate::correspondence::Mode;
use crate::error::{Error, Result};
use crate::kernel::{ProjPoint, Rational, Triangle};
use crate::perspectivity::{homology_report, HomologyReport};

/// Triangle with finite, rational vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineTriangle {
    coords: [(Rational, Rational); 3],
    triangle: Triangle,
}

impl AffineTriangle {
    pub fn new(
        a: (Rational, Rational),
        b: (Rational, Rational),
        c: (Rational, Rational),
    ) -> Result<Self> {
        let coords = [a, b, c];
        let triangle = Triangle::from_array(coords.clone().map(|(x, y)| ProjPoint::affine(x, y)))?;
        Ok(Self { coords, triangle })
    }

    pub fn from_ints(v: [(i64, i64); 3]) -> Result<Self> {
        let q = |x: i64| Rational::from_integer(x.into());
        let [a, b, c] = v.map(|(x, y)| (q(x), q(y)));
        Self::new(a, b, c)
    }

    pub fn from_triangle(t: &Triangle) -> Result<Self> {
        let mut coords = Vec::with_capacity(3);
        for v in t.vertices() {
            coords.push(v.to_affine().ok_or(Error::PointAtInfinity)?);
        }
        let [a, b, c]: [(Rational, Rational); 3] = coords.try_into().expect("three vertices");
        Self::new(a, b, c)
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn coords(&self) -> &[(Rational, Rational); 3] {
        &self.coords
    }

    /// `z = 1` representative of vertex `i`.
    fn lifted(&self, i: usize) -> [Rational; 3] {
        let (x, y) = &self.coords[i];
        [x.clone(), y.clone(), Rational::one()]
    }
}

/// Barycentric weights, defined up to a common nonzero factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Barycentrics(ProjPoint);

impl Barycentrics {
    pub fn new(weights: [Rational; 3]) -> Result<Self> {
        ProjPoint::from_rationals(&weights).map(Self)
    }

    pub fn weights(&self) -> [Rational; 3] {
        self.0.to_rationals()
    }
}

/// `(a², b², c²)` with `a = |BC|`, `b = |CA|`, `c = |AB|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquaredSides {
    pub a2: Rational,
    pub b2: Rational,
    pub c2: Rational,
}

impl SquaredSides {
    pub fn as_array(&self) -> [Rational; 3] {
        [self.a2.clone(), self.b2.clone(), self.c2.clone()]
    }

    pub fn is_scalene(&self) -> bool {
        self.a2 != self.b2 && self.b2 != self.c2 && self.a2 != self.c2
    }
}

fn dist2(p: &(Rational, Rational), q: &(Rational, Rational)) -> Rational {
    let dx = &p.0 - &q.0;
    let dy = &p.1 - &q.1;
    &dx * &dx + &dy * &dy
}

pub fn squared_sides(t: &AffineTriangle) -> SquaredSides {
    let [a, b, c] = &t.coords;
    SquaredSides {
        a2: dist2(b, c),
        b2: dist2(c, a),
        c2: dist2(a, b),
    }
}

/// The point `αA + βB + γC`; at infinity when the weights sum to zero.
pub fn from_barycentric(t: &AffineTriangle, w: &Barycentrics) -> ProjPoint {
    let w = w.weights();
    let v: [Rational; 3] = std::array::from_fn(|k| (0..3).map(|i| &w[i] * &t.lifted(i)[k]).sum());
    ProjPoint::from_rationals(&v).expect("vertices are affinely independent")
}

fn det(a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> Rational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

/// Barycentric weights of `p` by Cramer's rule on the lifted vertices.
pub fn to_barycentric(t: &AffineTriangle, p: &ProjPoint) -> Barycentrics {
    let v = p.to_rationals();
    let [a, b, c] = [t.lifted(0), t.lifted(1), t.lifted(2)];
    Barycentrics::new([det(&v, &b, &c), det(&a, &v, &c), det(&a, &b, &v)])
        .expect("a nonzero vector has nonzero weights")
}

fn recip(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::DegenerateTriangle);
    }
    Ok(x.recip())
}

/// First and second Brocard points for explicit squared side lengths.
pub fn brocard_points_with(t: &AffineTriangle, s: &SquaredSides) -> Result<(ProjPoint, ProjPoint)> {
    let (ia, ib, ic) = (recip(&s.a2)?, recip(&s.b2)?, recip(&s.c2)?);
    let first = Barycentrics::new([ib.clone(), ic.clone(), ia.clone()])?;
    let second = Barycentrics::new([ic, ia, ib])?;
    Ok((from_barycentric(t, &first), from_barycentric(t, &second)))
}

/// `(Ω, Ω')` of the triangle's own metric.
pub fn brocard_points(t: &AffineTriangle) -> (ProjPoint, ProjPoint) {
    brocard_points_with(t, &squared_sides(t)).expect("sides of a triangle have positive length")
}

pub fn symmedian_point(t: &AffineTriangle) -> ProjPoint {
    let w = Barycentrics::new(squared_sides(t).as_array()).expect("positive weights");
    from_barycentric(t, &w)
}

/// `(α : β : γ) ↦ (1/α : 1/β : 1/γ)` in barycentrics.
pub fn isotomic_conjugate(t: &AffineTriangle, p: &ProjPoint) -> Result<ProjPoint> {
    let w = to_barycentric(t, p).weights();
    if w.iter().any(Zero::is_zero) {
        return Err(Error::OnSideLine);
    }
    let inv = Barycentrics::new(w.map(|x| x.recip()))?;
    Ok(from_barycentric(t, &inv))
}

/// `(α : β : γ) ↦ (a²/α : b²/β : c²/γ)` in barycentrics.
pub fn isogonal_conjugate(t: &AffineTriangle, p: &ProjPoint) -> Result<ProjPoint> {
    let w = to_barycentric(t, p).weights();
    if w.iter().any(Zero::is_zero) {
        return Err(Error::OnSideLine);
    }
    let s = squared_sides(t).as_array();
    let inv = Barycentrics::new(std::array::from_fn(|i| &s[i] / &w[i]))?;
    Ok(from_barycentric(t, &inv))
}

fn brocard_triangle_from(
    t: &AffineTriangle,
    omega: &ProjPoint,
    omega2: &ProjPoint,
) -> Result<Triangle> {
    if omega == omega2 {
        return Err(Error::DegenerateConstruction(
            "the two Brocard points coincide".into(),
        ));
    }
    theorem8_triangles(t.triangle(), omega, omega2).map(|(t1, _)| t1)
}

/// First Brocard triangle for explicit squared side lengths.
pub fn first_brocard_triangle_with(t: &AffineTriangle, s: &SquaredSides) -> Result<Triangle> {
    let (omega, omega2) = brocard_points_with(t, s)?;
    brocard_triangle_from(t, &omega, &omega2)
}

/// The two-point construction applied to `(ABC, Ω, Ω')`, first triangle.
pub fn first_brocard_triangle(t: &AffineTriangle) -> Result<Triangle> {
    first_brocard_triangle_with(t, &squared_sides(t))
}

/// Outcome of checking Neuberg's theorem on one triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeubergReport {
    pub omega: ProjPoint,
    pub omega_prime: ProjPoint,
    pub brocard_triangle: Triangle,
    pub homology: HomologyReport,
    pub trihomological: bool,
    /// Center of the mode whose center is neither Brocard point.
    pub third_center: Option<ProjPoint>,
    pub third_mode: Option<Mode>,
    /// Isotomic conjugate of the symmedian point.
    pub expected_third: ProjPoint,
    pub third_matches: bool,
}

impl NeubergReport {
    pub fn passed(&self) -> bool {
        self.trihomological && self.third_matches
    }
}

pub fn neuberg_check(t: &AffineTriangle) -> Result<NeubergReport> {
    let (omega, omega_prime) = brocard_points(t);
    let brocard_triangle = brocard_triangle_from(t, &omega, &omega_prime)?;
    let homology = homology_report(t.triangle(), &brocard_triangle);
    let trihomological = homology.is_trihomological();
    let third_mode = Mode::ALL.into_iter().find(|&m| match homology.center(m) {
        Some(c) => c != &omega && c != &omega_prime,
        None => false,
    });
    let third_center = third_mode.and_then(|m| homology.center(m).cloned());
    let expected_third = isotomic_conjugate(t, &symmedian_point(t))?;
    let third_matches = third_center.as_ref() == Some(&expected_third);
    Ok(NeubergReport {
        omega,
        omega_prime,
        brocard_triangle,
        homology,
        trihomological,
        third_center,
        third_mode,
        expected_third,
        third_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{collinear, concurrent, join};
    use crate::perspectivity::is_trihomological;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn right345() -> AffineTriangle {
        AffineTriangle::from_ints([(0, 0), (3, 0), (0, 4)]).unwrap()
    }

    fn unit() -> AffineTriangle {
        AffineTriangle::from_ints([(0, 0), (1, 0), (0, 1)]).unwrap()
    }

    fn equilateral_metric() -> SquaredSides {
        SquaredSides {
            a2: q(1, 1),
            b2: q(1, 1),
            c2: q(1, 1),
        }
    }

    fn to_f64(p: &ProjPoint) -> (f64, f64) {
        let (x, y) = p.to_affine().unwrap();
        (x.to_f64().unwrap(), y.to_f64().unwrap())
    }

    /// Unsigned angle at `v` between rays toward `p` and `q`.
    fn angle(v: (f64, f64), p: (f64, f64), q: (f64, f64)) -> f64 {
        let (ux, uy) = (p.0 - v.0, p.1 - v.1);
        let (wx, wy) = (q.0 - v.0, q.1 - v.1);
        (ux * wy - uy * wx).abs().atan2(ux * wx + uy * wy)
    }

    fn random_scalene(rng: &mut ChaCha8Rng) -> AffineTriangle {
        loop {
            let mut c = || (rng.random_range(-30..=30), rng.random_range(-30..=30));
            let Ok(t) = AffineTriangle::from_ints([c(), c(), c()]) else {
                continue;
            };
            if squared_sides(&t).is_scalene() {
                return t;
            }
        }
    }

    #[test]
    fn squared_side_examples() {
        assert_eq!(
            squared_sides(&right345()).as_array(),
            [q(25, 1), q(16, 1), q(9, 1)]
        );
        assert_eq!(
            squared_sides(&unit()).as_array(),
            [q(2, 1), q(1, 1), q(1, 1)]
        );
        let small = AffineTriangle::new((q(0, 1), q(0, 1)), (q(1, 2), q(0, 1)), (q(0, 1), q(1, 3)))
            .unwrap();
        assert_eq!(
            squared_sides(&small).as_array(),
            [q(13, 36), q(1, 9), q(1, 4)]
        );
    }

    #[test]
    fn barycentric_examples() {
        let t = unit();
        let w = |a: i64, b: i64, c: i64| Barycentrics::new([q(a, 1), q(b, 1), q(c, 1)]).unwrap();
        assert_eq!(
            from_barycentric(&t, &w(1, 1, 1)),
            ProjPoint::new(1, 1, 3).unwrap()
        );
        assert_eq!(
            from_barycentric(&t, &w(1, 0, 0)),
            ProjPoint::new(0, 0, 1).unwrap()
        );
        let inf = from_barycentric(&t, &w(1, -1, 0));
        assert!(inf.is_at_infinity());
        assert_eq!(inf, ProjPoint::new(1, 0, 0).unwrap());
        assert_eq!(
            to_barycentric(&t, &ProjPoint::new(1, 1, 3).unwrap()),
            w(1, 1, 1)
        );
    }

    /// Pins which bicentric point is "first": ∠ΩAB = ∠ΩBC = ∠ΩCA and
    /// ∠Ω'AC = ∠Ω'CB = ∠Ω'BA, over 20 seeded triangles.
    #[test]
    fn brocard_angle_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..20 {
            let t = random_scalene(&mut rng);
            let (o1, o2) = brocard_points(&t);
            let v = t
                .coords()
                .clone()
                .map(|(x, y)| (x.to_f64().unwrap(), y.to_f64().unwrap()));
            let (a, b, c) = (v[0], v[1], v[2]);
            let w = to_f64(&o1);
            let (x, y, z) = (angle(a, w, b), angle(b, w, c), angle(c, w, a));
            assert!((x - y).abs() < 1e-9 && (y - z).abs() < 1e-9, "{x} {y} {z}");
            let w = to_f64(&o2);
            let (x, y, z) = (angle(a, w, c), angle(c, w, b), angle(b, w, a));
            assert!((x - y).abs() < 1e-9 && (y - z).abs() < 1e-9, "{x} {y} {z}");
        }
    }

    #[test]
    fn brocard_points_are_interior_isogonal_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in std::iter::once(right345()).chain((0..10).map(|_| random_scalene(&mut rng))) {
            let (o1, o2) = brocard_points(&t);
            assert_ne!(o1, o2);
            assert_eq!(isogonal_conjugate(&t, &o1).unwrap(), o2);
            assert_eq!(isogonal_conjugate(&t, &o2).unwrap(), o1);
            for o in [&o1, &o2] {
                let w = to_barycentric(&t, o).weights();
                let pos = w.iter().all(|x| x > &Rational::zero());
                let neg = w.iter().all(|x| x < &Rational::zero());
                assert!(pos || neg, "not interior: {w:?}");
            }
        }
    }

    #[test]
    fn symmetric_metric_collapses_to_centroid() {
        let t = unit();
        let centroid = ProjPoint::new(1, 1, 3).unwrap();
        let (o1, o2) = brocard_points_with(&t, &equilateral_metric()).unwrap();
        assert_eq!(o1, centroid);
        assert_eq!(o2, centroid);
        assert!(matches!(
            first_brocard_triangle_with(&t, &equilateral_metric()),
            Err(Error::DegenerateConstruction(_))
        ));
    }

    #[test]
    fn symmedian_and_isotomic_examples() {
        let t = unit();
        let centroid = ProjPoint::new(1, 1, 3).unwrap();
        let w = Barycentrics::new(equilateral_metric().as_array()).unwrap();
        assert_eq!(from_barycentric(&t, &w), centroid);
        assert_eq!(isotomic_conjugate(&t, &centroid).unwrap(), centroid);
        let on_side = ProjPoint::new(1, 0, 2).unwrap();
        assert_eq!(isotomic_conjugate(&t, &on_side), Err(Error::OnSideLine));
    }

    /// Symmedian of the 3-4-5 triangle, cross-checked by reflecting medians
    /// in the angle bisectors numerically.
    #[test]
    fn symmedian_of_right_triangle() {
        let t = right345();
        let k = symmedian_point(&t);
        assert_eq!(k.to_affine().unwrap(), (q(24, 25), q(18, 25)));

        let v = [(0.0f64, 0.0f64), (3.0, 0.0), (0.0, 4.0)];
        let unitv = |x: f64, y: f64| {
            let n = x.hypot(y);
            (x / n, y / n)
        };
        // Line through vertex i along the median reflected in the bisector.
        let symmedian = |i: usize| {
            let (a, b, c) = (v[i], v[(i + 1) % 3], v[(i + 2) % 3]);
            let ub = unitv(b.0 - a.0, b.1 - a.1);
            let uc = unitv(c.0 - a.0, c.1 - a.1);
            let bis = unitv(ub.0 + uc.0, ub.1 + uc.1);
            let m = unitv((b.0 + c.0) / 2.0 - a.0, (b.1 + c.1) / 2.0 - a.1);
            let d = 2.0 * (m.0 * bis.0 + m.1 * bis.1);
            (a, (d * bis.0 - m.0, d * bis.1 - m.1))
        };
        let ((p, d), (r, e)) = (symmedian(0), symmedian(1));
        let s = ((r.0 - p.0) * e.1 - (r.1 - p.1) * e.0) / (d.0 * e.1 - d.1 * e.0);
        let x = (p.0 + s * d.0, p.1 + s * d.1);
        assert!((x.0 - 0.96).abs() < 1e-12 && (x.1 - 0.72).abs() < 1e-12);
        let (g, h) = symmedian(2);
        let cross = (x.0 - g.0) * h.1 - (x.1 - g.1) * h.0;
        assert!(cross.abs() < 1e-12);

        // Exact: the three cevians through K concur there.
        let cevians: Vec<_> = t
            .triangle()
            .vertices()
            .iter()
            .map(|a| join(a, &k).unwrap())
            .collect();
        assert!(concurrent(&cevians[0], &cevians[1], &cevians[2]));
    }

    #[test]
    fn first_brocard_triangle_of_right_triangle() {
        let t = right345();
        let b = first_brocard_triangle(&t).unwrap();
        assert!(b.is_affine());
        assert!(is_trihomological(t.triangle(), &b));
        let rep = neuberg_check(&t).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.third_mode, Some(Mode::P));
        // Known vertex A₁ = (a² : c² : b²) = (25 : 9 : 16).
        let w = Barycentrics::new([q(25, 1), q(9, 1), q(16, 1)]).unwrap();
        assert_eq!(b.a(), &from_barycentric(&t, &w));
    }

    #[test]
    fn neuberg_on_random_triangles() {
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for _ in 0..25 {
            let t = random_scalene(&mut rng);
            let rep = neuberg_check(&t).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert!(!collinear(
                rep.brocard_triangle.a(),
                rep.brocard_triangle.b(),
                rep.brocard_triangle.c()
            ));
        }
    }

    #[test]
    fn neuberg_symmetric_metric_is_a_precondition_failure() {
        let t = unit();
        assert!(matches!(
            first_brocard_triangle_with(&t, &equilateral_metric()),
            Err(Error::DegenerateConstruction(_))
        ));
    }
}
