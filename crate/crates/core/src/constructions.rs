//! Generative constructions of perspective and tri-homological triangles.
//!
//! Given a triangle `ABC` and two points `P`, `Q`, the pair
//!
//! ```text
//! t1 = (BP ∩ CQ, CP ∩ AQ, AP ∩ BQ)
//! t2 = (BQ ∩ CP, CQ ∩ AP, BP ∩ AQ)
//! ```
//!
//! makes `ABC`, `t1`, `t2` pairwise tri-homological, two of the three
//! centers of every pair being `P` and `Q`. Swapping `P` and `Q` swaps `t1`
//! and `t2`.

use crate::correspondence::Mode;
use crate::error::{Error, Result};
use crate::kernel::{collinear, incident, join, meet, ProjLine, ProjPoint, Triangle};
use crate::perspectivity::{homology_report, mode_homology, perspector, HomologyReport};

const VERTEX: [&str; 3] = ["A", "B", "C"];
const SIDE: [&str; 3] = ["BC", "CA", "AB"];

fn degenerate(msg: impl Into<String>) -> Error {
    Error::DegenerateConstruction(msg.into())
}

fn check_point(abc: &Triangle, p: &ProjPoint, name: &str) -> Result<()> {
    for (i, v) in VERTEX.iter().enumerate() {
        if abc.vertex(i) == p {
            return Err(degenerate(format!("{name} coincides with vertex {v}")));
        }
    }
    for (i, s) in SIDE.iter().enumerate() {
        if incident(p, &abc.side(i)) {
            return Err(degenerate(format!("{name} lies on side line {s}")));
        }
    }
    Ok(())
}

fn meet_named(l: &ProjLine, m: &ProjLine, what: &str) -> Result<ProjPoint> {
    meet(l, m).map_err(|_| degenerate(format!("{what}: the two lines coincide")))
}

fn triangle_named(v: [ProjPoint; 3], abc: &Triangle, name: &str) -> Result<Triangle> {
    for (k, x) in v.iter().enumerate() {
        if abc.has_vertex(x) {
            return Err(degenerate(format!(
                "vertex {} of {name} coincides with a vertex of ABC",
                VERTEX[k]
            )));
        }
    }
    Triangle::from_array(v).map_err(|_| degenerate(format!("{name} has collinear vertices")))
}

/// The two triangles built from `ABC`, `P` and `Q`; see the module docs.
///
/// All preconditions are checked before any meet is taken.
pub fn theorem8_triangles(
    abc: &Triangle,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<(Triangle, Triangle)> {
    if p == q {
        return Err(degenerate("P and Q coincide"));
    }
    check_point(abc, p, "P")?;
    check_point(abc, q, "Q")?;
    for (i, v) in VERTEX.iter().enumerate() {
        if collinear(abc.vertex(i), p, q) {
            return Err(degenerate(format!("{v}, P, Q are collinear")));
        }
    }
    let lines = |x: &ProjPoint| -> [ProjLine; 3] {
        std::array::from_fn(|i| join(abc.vertex(i), x).expect("point is not a vertex"))
    };
    let [ap, bp, cp] = lines(p);
    let [aq, bq, cq] = lines(q);
    let t1 = [
        meet_named(&bp, &cq, "A1 = BP ∩ CQ")?,
        meet_named(&cp, &aq, "B1 = CP ∩ AQ")?,
        meet_named(&ap, &bq, "C1 = AP ∩ BQ")?,
    ];
    let t2 = [
        meet_named(&bq, &cp, "A2 = BQ ∩ CP")?,
        meet_named(&cq, &ap, "B2 = CQ ∩ AP")?,
        meet_named(&bp, &aq, "C2 = BP ∩ AQ")?,
    ];
    Ok((
        triangle_named(t1, abc, "t1")?,
        triangle_named(t2, abc, "t2")?,
    ))
}

/// Concurrence point of `AA₁, BB₁, CC₁`. A partner that is not perspective
/// under the identity correspondence is reported as a theorem violation.
pub fn third_perspector(abc: &Triangle, t: &Triangle) -> Result<ProjPoint> {
    match perspector(abc, t, Mode::P.correspondence())? {
        Some(o) => Ok(o),
        None => Err(Error::TheoremViolation(format!(
            "AA1, BB1, CC1 are not concurrent for ABC = {abc}, t = {t}"
        ))),
    }
}

/// A perspective pair, its cross-meet triangle, and the shared structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseReport {
    pub t3: Triangle,
    /// Common axis of all three pairs.
    pub axis: ProjLine,
    /// Centers of `(t1,t2)`, `(t1,t3)`, `(t2,t3)`.
    pub centers: [ProjPoint; 3],
    /// Line through the centers; `None` if all three coincide.
    pub centers_line: Option<ProjLine>,
}

fn pair_homology(a: &Triangle, b: &Triangle, name: &str) -> Result<(ProjPoint, ProjLine)> {
    match mode_homology(a, b, Mode::P) {
        Ok(Some(h)) => Ok(h),
        Ok(None) => Err(Error::TheoremViolation(format!(
            "{name} is not perspective"
        ))),
        Err(e @ Error::TheoremViolation(_)) => Err(e),
        Err(e) => Err(degenerate(format!("{name}: {e}"))),
    }
}

/// Cross-meet triangle `(B₁C₂∩B₂C₁, A₁C₂∩A₂C₁, A₁B₂∩A₂B₁)` of a perspective
/// pair, with the perspectivities it forms verified exactly.
pub fn veronese_report(t1: &Triangle, t2: &Triangle) -> Result<VeroneseReport> {
    let (o12, axis) = match mode_homology(t1, t2, Mode::P) {
        Ok(Some(h)) => h,
        Ok(None) => {
            return Err(Error::PreconditionUnmet(
                "the pair is not perspective".into(),
            ))
        }
        Err(e @ Error::TheoremViolation(_)) => return Err(e),
        Err(e) => return Err(degenerate(format!("the pair is degenerate: {e}"))),
    };
    let cross_meet = |i: usize, j: usize, what: &str| -> Result<ProjPoint> {
        let l = join(t1.vertex(i), t2.vertex(j))
            .map_err(|_| degenerate(format!("{what}: shared vertex")))?;
        let m = join(t2.vertex(i), t1.vertex(j))
            .map_err(|_| degenerate(format!("{what}: shared vertex")))?;
        meet_named(&l, &m, what)
    };
    let v = [
        cross_meet(1, 2, "A3 = B1C2 ∩ B2C1")?,
        cross_meet(0, 2, "B3 = A1C2 ∩ A2C1")?,
        cross_meet(0, 1, "C3 = A1B2 ∩ A2B1")?,
    ];
    let t3 = Triangle::from_array(v).map_err(|_| degenerate("t3 has collinear vertices"))?;
    let (o13, a13) = pair_homology(t1, &t3, "(t1,t3)")?;
    let (o23, a23) = pair_homology(t2, &t3, "(t2,t3)")?;
    if a13 != axis || a23 != axis {
        return Err(Error::TheoremViolation(format!(
            "cross-meet triangle axes {a13}, {a23} differ from the pair's axis {axis}"
        )));
    }
    if !collinear(&o12, &o13, &o23) {
        return Err(Error::TheoremViolation(format!(
            "centers {o12}, {o13}, {o23} are not collinear"
        )));
    }
    let centers_line = join(&o12, &o13)
        .or_else(|_| join(&o12, &o23))
        .or_else(|_| join(&o13, &o23))
        .ok();
    Ok(VeroneseReport {
        t3,
        axis,
        centers: [o12, o13, o23],
        centers_line,
    })
}

pub fn veronese(t1: &Triangle, t2: &Triangle) -> Result<Triangle> {
    veronese_report(t1, t2).map(|r| r.t3)
}

/// Which cyclic modes of one pair have `P` and `Q` as centers, and the
/// remaining center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCenters {
    pub p_modes: Vec<Mode>,
    pub q_modes: Vec<Mode>,
    pub third_mode: Mode,
    pub third: ProjPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripletReport {
    pub abc: Triangle,
    pub p: ProjPoint,
    pub q: ProjPoint,
    pub t1: Triangle,
    pub t2: Triangle,
    /// Identity-mode center of `(ABC, t1)`.
    pub r: ProjPoint,
    /// Identity-mode center of `(ABC, t2)`.
    pub r1: ProjPoint,
    /// Identity-mode center of `(t1, t2)`.
    pub r2: ProjPoint,
    pub centers_line: ProjLine,
    /// Bookkeeping for `(ABC,t1)`, `(ABC,t2)`, `(t1,t2)` in that order.
    pub pair_centers: [PairCenters; 3],
}

fn classify(
    report: &HomologyReport,
    p: &ProjPoint,
    q: &ProjPoint,
    name: &str,
) -> Result<PairCenters> {
    if !report.is_trihomological() {
        let err = report.cyclic().find_map(|e| e.error.clone());
        return Err(match err {
            Some(e) => degenerate(format!("{name}: {e}")),
            None => Error::TheoremViolation(format!(
                "{name} is perspective only in modes {:?}",
                report.perspective_modes()
            )),
        });
    }
    let modes_of = |x: &ProjPoint| -> Vec<Mode> {
        Mode::ALL
            .into_iter()
            .filter(|&m| report.center(m) == Some(x))
            .collect()
    };
    let (p_modes, q_modes) = (modes_of(p), modes_of(q));
    if p_modes.is_empty() || q_modes.is_empty() {
        return Err(Error::TheoremViolation(format!(
            "{name}: P and Q are not both centers (P in {p_modes:?}, Q in {q_modes:?})"
        )));
    }
    let third_mode = Mode::ALL
        .into_iter()
        .find(|m| !p_modes.contains(m) && !q_modes.contains(m))
        .ok_or_else(|| degenerate(format!("{name}: P or Q is the center of two modes")))?;
    let third = report.center(third_mode).expect("tri-homological").clone();
    Ok(PairCenters {
        p_modes,
        q_modes,
        third_mode,
        third,
    })
}

/// Builds `t1`, `t2` from `(ABC, P, Q)`, verifies that all three pairs are
/// tri-homological with `P` and `Q` among the centers, and that the three
/// remaining centers are collinear.
pub fn trihomological_triplet(
    abc: &Triangle,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<TripletReport> {
    let (t1, t2) = theorem8_triangles(abc, p, q)?;
    let pair_centers = [
        classify(&homology_report(abc, &t1), p, q, "(ABC,t1)")?,
        classify(&homology_report(abc, &t2), p, q, "(ABC,t2)")?,
        classify(&homology_report(&t1, &t2), p, q, "(t1,t2)")?,
    ];
    for (pc, name) in pair_centers.iter().zip(["(ABC,t1)", "(ABC,t2)", "(t1,t2)"]) {
        if pc.third_mode != Mode::P {
            return Err(Error::TheoremViolation(format!(
                "{name}: the identity mode has center P or Q"
            )));
        }
    }
    let r = pair_centers[0].third.clone();
    let r1 = pair_centers[1].third.clone();
    let r2 = pair_centers[2].third.clone();
    if !collinear(&r, &r1, &r2) {
        return Err(Error::TheoremViolation(format!(
            "R = {r}, R1 = {r1}, R2 = {r2} are not collinear"
        )));
    }
    let centers_line = join(&r, &r1)
        .or_else(|_| join(&r, &r2))
        .or_else(|_| join(&r1, &r2))
        .map_err(|_| degenerate("R, R1, R2 coincide"))?;
    Ok(TripletReport {
        abc: abc.clone(),
        p: p.clone(),
        q: q.clone(),
        t1,
        t2,
        r,
        r1,
        r2,
        centers_line,
        pair_centers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{incident, Rational};
    use crate::perspectivity::is_trihomological;

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new(x, y, z).unwrap()
    }

    fn reference() -> Triangle {
        Triangle::new(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)).unwrap()
    }

    /// Meet of two lines by Cramer's rule on the affine equations, as an
    /// independent check of the cross-product route.
    fn solve(l: &ProjLine, m: &ProjLine) -> ProjPoint {
        let [a, b, c] = l.to_rationals();
        let [d, e, f] = m.to_rationals();
        let det = &a * &e - &b * &d;
        if det == Rational::from_integer(0.into()) {
            return ProjPoint::from_rationals(&[
                b.clone(),
                -a.clone(),
                Rational::from_integer(0.into()),
            ])
            .unwrap();
        }
        let x = (&b * &f - &c * &e) / &det;
        let y = (&c * &d - &a * &f) / &det;
        ProjPoint::affine(x, y)
    }

    #[test]
    fn theorem8_on_reference_triangle() {
        let abc = reference();
        let (p, q) = (pt(1, 1, 1), pt(1, 2, 3));
        let (t1, t2) = theorem8_triangles(&abc, &p, &q).unwrap();
        let l = |v: &ProjPoint, x: &ProjPoint| join(v, x).unwrap();
        let (a, b, c) = (abc.a(), abc.b(), abc.c());
        assert_eq!(t1.a(), &solve(&l(b, &p), &l(c, &q)));
        assert_eq!(t1.b(), &solve(&l(c, &p), &l(a, &q)));
        assert_eq!(t1.c(), &solve(&l(a, &p), &l(b, &q)));
        assert_eq!(t2.a(), &solve(&l(b, &q), &l(c, &p)));
        assert_eq!(t2.b(), &solve(&l(c, &q), &l(a, &p)));
        assert_eq!(t2.c(), &solve(&l(b, &p), &l(a, &q)));
        // BP is x = z and CQ is y = 2x, so A1 = (1:2:1).
        assert_eq!(t1.a(), &pt(1, 2, 1));
    }

    #[test]
    fn theorem8_degeneracies() {
        let abc = reference();
        let p = pt(1, 1, 1);
        assert!(matches!(
            theorem8_triangles(&abc, &p, &p),
            Err(Error::DegenerateConstruction(_))
        ));
        // (0:1:1) is on BC (x = 0).
        assert!(matches!(
            theorem8_triangles(&abc, &pt(0, 1, 1), &pt(1, 2, 3)),
            Err(Error::DegenerateConstruction(m)) if m.contains("BC")
        ));
        // A, P, Q collinear: Q = (2:1:1) lies on AP.
        assert!(matches!(
            theorem8_triangles(&abc, &p, &pt(2, 1, 1)),
            Err(Error::DegenerateConstruction(_))
        ));
    }

    #[test]
    fn swapping_points_swaps_triangles() {
        let abc = reference();
        let (p, q) = (pt(1, 1, 1), pt(1, 2, 3));
        let (t1, t2) = theorem8_triangles(&abc, &p, &q).unwrap();
        let (s1, s2) = theorem8_triangles(&abc, &q, &p).unwrap();
        assert_eq!(t2, s1);
        assert_eq!(t1, s2);
    }

    #[test]
    fn third_perspectors() {
        let abc = reference();
        let (t1, t2) = theorem8_triangles(&abc, &pt(1, 1, 1), &pt(1, 2, 3)).unwrap();
        let r = third_perspector(&abc, &t1).unwrap();
        let r1 = third_perspector(&abc, &t2).unwrap();
        assert_ne!(r, r1);
        for (t, o) in [(&t1, &r), (&t2, &r1)] {
            for i in 0..3 {
                assert!(incident(o, &join(abc.vertex(i), t.vertex(i)).unwrap()));
            }
        }
        let affine = Triangle::new(pt(0, 0, 1), pt(2, 0, 1), pt(0, 2, 1)).unwrap();
        let medial = Triangle::new(pt(1, 1, 1), pt(0, 1, 1), pt(1, 0, 1)).unwrap();
        assert_eq!(third_perspector(&affine, &medial).unwrap(), pt(2, 2, 3));
    }

    #[test]
    fn triplet_on_reference_triangle() {
        let abc = reference();
        let rep = trihomological_triplet(&abc, &pt(1, 1, 1), &pt(1, 2, 3)).unwrap();
        assert!(collinear(&rep.r, &rep.r1, &rep.r2));
        for x in [&rep.r, &rep.r1, &rep.r2] {
            assert!(incident(x, &rep.centers_line));
        }
        assert!(is_trihomological(&abc, &rep.t1));
        assert!(is_trihomological(&abc, &rep.t2));
        assert!(is_trihomological(&rep.t1, &rep.t2));
        // Mode bookkeeping: P is the R-mode center of (ABC,t1) and (t1,t2),
        // the Q-mode center of (ABC,t2); Q the other way round.
        assert_eq!(rep.pair_centers[0].p_modes, vec![Mode::R]);
        assert_eq!(rep.pair_centers[0].q_modes, vec![Mode::Q]);
        assert_eq!(rep.pair_centers[1].p_modes, vec![Mode::Q]);
        assert_eq!(rep.pair_centers[1].q_modes, vec![Mode::R]);
        assert_eq!(rep.pair_centers[2].p_modes, vec![Mode::R]);
        assert_eq!(rep.pair_centers[2].q_modes, vec![Mode::Q]);
    }

    #[test]
    fn iterating_with_p_and_r_gives_another_triplet() {
        let abc = reference();
        let first = trihomological_triplet(&abc, &pt(1, 1, 1), &pt(1, 2, 3)).unwrap();
        let second = trihomological_triplet(&abc, &first.p, &first.r).unwrap();
        assert!(collinear(&second.r, &second.r1, &second.r2));
        assert!(is_trihomological(&second.t1, &second.t2));
    }

    #[test]
    fn veronese_of_theorem8_pair() {
        let abc = reference();
        let (t1, _) = theorem8_triangles(&abc, &pt(1, 1, 1), &pt(1, 2, 3)).unwrap();
        let rep = veronese_report(&abc, &t1).unwrap();
        let [o1, o2, o3] = &rep.centers;
        assert!(collinear(o1, o2, o3));
        assert!(rep.centers_line.is_some());
    }

    #[test]
    fn veronese_of_homothetic_pair_keeps_line_at_infinity() {
        let t1 = Triangle::new(pt(0, 0, 1), pt(6, 1, 1), pt(2, 5, 1)).unwrap();
        // Homothety x ↦ 3x from the origin.
        let t2 = Triangle::new(pt(0, 0, 1), pt(18, 3, 1), pt(6, 15, 1)).unwrap();
        assert!(matches!(
            veronese(&t1, &t2),
            Err(Error::DegenerateConstruction(_))
        ));
        let t2 = Triangle::new(pt(3, 3, 1), pt(21, 6, 1), pt(9, 18, 1)).unwrap();
        let rep = veronese_report(&t1, &t2).unwrap();
        assert_eq!(rep.axis, ProjLine::at_infinity());
    }

    #[test]
    fn veronese_rejects_shared_vertex_and_non_perspective_pairs() {
        let t1 = Triangle::new(pt(0, 0, 1), pt(6, 1, 1), pt(2, 5, 1)).unwrap();
        let t2 = Triangle::new(pt(0, 0, 1), pt(-3, 7, 1), pt(4, -2, 1)).unwrap();
        assert!(matches!(
            veronese(&t1, &t2),
            Err(Error::DegenerateConstruction(_))
        ));
        let t3 = Triangle::new(pt(5, 4, 1), pt(-3, 2, 1), pt(1, -4, 1)).unwrap();
        assert!(matches!(
            veronese(&t1, &t3),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn triplet_rejects_coincident_points() {
        let abc = reference();
        let p = pt(1, 1, 1);
        assert!(matches!(
            trihomological_triplet(&abc, &p, &p),
            Err(Error::DegenerateConstruction(_))
        ));
    }
}
