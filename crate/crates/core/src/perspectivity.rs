//! Perspectivity (homology) between triangles: centers, axes, per-mode
//! reports, and machine checks of the three-triangle theorems.
//!
//! Every report re-checks two classical facts on the fly: a perspective
//! center exists exactly when a perspective axis exists, and no pair is
//! perspective in exactly two of the three cyclic modes. A failure of either
//! is recorded in the report and counted process-wide (see
//! [`violation_count`]).

use std::sync::atomic::{AtomicUsize, Ordering};

pub use crate::correspondence::{Correspondence, Mode};
use crate::error::{Error, Result};
use crate::kernel::{collinear, concurrent, join, meet, ProjLine, ProjPoint, Triangle};

static VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

/// Number of internal theorem violations observed by this process.
pub fn violation_count() -> usize {
    VIOLATIONS.load(Ordering::Relaxed)
}

fn record_violation(msg: String, sink: &mut Vec<String>) {
    VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    sink.push(msg);
}

/// Common point of three concurrent lines that are not all equal.
fn common_point(lines: &[ProjLine; 3]) -> Option<ProjPoint> {
    let [l, m, n] = lines;
    meet(l, m)
        .or_else(|_| meet(l, n))
        .or_else(|_| meet(m, n))
        .ok()
}

/// Line through three collinear points that are not all equal.
fn common_line(points: &[ProjPoint; 3]) -> Option<ProjLine> {
    let [p, q, r] = points;
    join(p, q)
        .or_else(|_| join(p, r))
        .or_else(|_| join(q, r))
        .ok()
}

/// Center of perspectivity: the common point of the lines joining
/// corresponding vertices, if they concur. The center may be at infinity.
pub fn perspector(t1: &Triangle, t2: &Triangle, c: Correspondence) -> Result<Option<ProjPoint>> {
    let mut joins = Vec::with_capacity(3);
    for i in 0..3 {
        let (u, v) = (t1.vertex(i), t2.vertex(c.image(i)));
        if u == v {
            return Err(Error::CoincidentVertexPair);
        }
        joins.push(join(u, v)?);
    }
    let joins: [ProjLine; 3] = joins.try_into().expect("three joins");
    if !concurrent(&joins[0], &joins[1], &joins[2]) {
        return Ok(None);
    }
    Ok(common_point(&joins))
}

/// Axis of perspectivity: the line carrying the meets of corresponding
/// sides, if they are collinear.
pub fn perspective_axis(
    t1: &Triangle,
    t2: &Triangle,
    c: Correspondence,
) -> Result<Option<ProjLine>> {
    let mut meets = Vec::with_capacity(3);
    for i in 0..3 {
        let (s, t) = (t1.side(i), t2.side(c.image(i)));
        if s == t {
            return Err(Error::CoincidentSidePair);
        }
        meets.push(meet(&s, &t)?);
    }
    let meets: [ProjPoint; 3] = meets.try_into().expect("three meets");
    if !collinear(&meets[0], &meets[1], &meets[2]) {
        return Ok(None);
    }
    Ok(common_line(&meets))
}

/// Verdict for one correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeEntry {
    pub correspondence: Correspondence,
    pub center: Option<ProjPoint>,
    pub axis: Option<ProjLine>,
    /// Set when the mode is degenerate (coincident vertices or sides).
    pub error: Option<Error>,
}

impl ModeEntry {
    pub fn is_perspective(&self) -> bool {
        self.error.is_none() && self.center.is_some() && self.axis.is_some()
    }

    pub fn mode(&self) -> Option<Mode> {
        self.correspondence.mode()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// Cyclic modes first (`P`, `Q`, `R`), then transpositions when requested.
    pub entries: Vec<ModeEntry>,
    /// Internal-consistency failures; empty unless a theorem is falsified.
    pub violations: Vec<String>,
}

impl HomologyReport {
    pub fn entry(&self, c: Correspondence) -> Option<&ModeEntry> {
        self.entries.iter().find(|e| e.correspondence == c)
    }

    pub fn mode(&self, m: Mode) -> &ModeEntry {
        self.entry(m.correspondence())
            .expect("cyclic modes are always evaluated")
    }

    pub fn cyclic(&self) -> impl Iterator<Item = &ModeEntry> {
        self.entries.iter().filter(|e| e.correspondence.is_cyclic())
    }

    pub fn perspective_modes(&self) -> Vec<Mode> {
        self.cyclic()
            .filter(|e| e.is_perspective())
            .filter_map(ModeEntry::mode)
            .collect()
    }

    pub fn is_trihomological(&self) -> bool {
        self.perspective_modes().len() == 3
    }

    /// Center of a cyclic mode, when that mode is perspective.
    pub fn center(&self, m: Mode) -> Option<&ProjPoint> {
        let e = self.mode(m);
        e.is_perspective().then_some(e.center.as_ref()).flatten()
    }
}

fn evaluate(
    t1: &Triangle,
    t2: &Triangle,
    c: Correspondence,
    violations: &mut Vec<String>,
) -> ModeEntry {
    let center = perspector(t1, t2, c);
    let axis = perspective_axis(t1, t2, c);
    let error = center.as_ref().err().or(axis.as_ref().err()).cloned();
    let center = center.ok().flatten();
    let axis = axis.ok().flatten();
    if error.is_none() && center.is_some() != axis.is_some() {
        record_violation(
            format!(
                "Desargues: correspondence {} has center {:?} but axis {:?} for {t1} / {t2}",
                c.label(),
                center,
                axis
            ),
            violations,
        );
    }
    ModeEntry {
        correspondence: c,
        center,
        axis,
        error,
    }
}

/// Per-mode perspectivity of `t2` with respect to `t1` over the three
/// cyclic correspondences.
pub fn homology_report(t1: &Triangle, t2: &Triangle) -> HomologyReport {
    homology_report_with(t1, t2, false)
}

/// As [`homology_report`], optionally adding the three transpositions.
pub fn homology_report_with(
    t1: &Triangle,
    t2: &Triangle,
    all_permutations: bool,
) -> HomologyReport {
    let count = if all_permutations { 6 } else { 3 };
    let mut violations = Vec::new();
    let entries: Vec<ModeEntry> = Correspondence::ALL[..count]
        .iter()
        .map(|&c| evaluate(t1, t2, c, &mut violations))
        .collect();
    let cyclic: Vec<&ModeEntry> = entries[..3].iter().collect();
    let clean = cyclic.iter().all(|e| e.error.is_none());
    let perspective = cyclic.iter().filter(|e| e.is_perspective()).count();
    if clean && perspective == 2 {
        record_violation(
            format!("bi-homological but not tri-homological: {t1} / {t2}"),
            &mut violations,
        );
    }
    HomologyReport {
        entries,
        violations,
    }
}

/// True iff the pair is perspective under all three cyclic correspondences.
pub fn is_trihomological(t1: &Triangle, t2: &Triangle) -> bool {
    homology_report(t1, t2).is_trihomological()
}

/// Center and axis of a pair under one cyclic mode, `None` when not
/// perspective.
pub fn mode_homology(
    t1: &Triangle,
    t2: &Triangle,
    m: Mode,
) -> Result<Option<(ProjPoint, ProjLine)>> {
    let c = m.correspondence();
    let center = perspector(t1, t2, c)?;
    let axis = perspective_axis(t1, t2, c)?;
    match (center, axis) {
        (Some(o), Some(a)) => Ok(Some((o, a))),
        (None, None) => Ok(None),
        (o, a) => {
            let msg = format!("Desargues: center {o:?}, axis {a:?} for {t1} / {t2}");
            VIOLATIONS.fetch_add(1, Ordering::Relaxed);
            Err(Error::TheoremViolation(msg))
        }
    }
}

const PAIR_NAMES: [&str; 3] = ["(t1,t2)", "(t1,t3)", "(t2,t3)"];

/// Identity-mode homologies of the pairs `(t1,t2)`, `(t1,t3)`, `(t2,t3)`.
fn pairwise(t: [&Triangle; 3]) -> Result<[(ProjPoint, ProjLine); 3]> {
    let pairs = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
    let mut out = Vec::with_capacity(3);
    for (k, (a, b)) in pairs.into_iter().enumerate() {
        match mode_homology(a, b, Mode::P) {
            Ok(Some(h)) => out.push(h),
            Ok(None) => {
                return Err(Error::PreconditionUnmet(format!(
                    "{} is not perspective",
                    PAIR_NAMES[k]
                )))
            }
            Err(e @ Error::TheoremViolation(_)) => return Err(e),
            Err(e) => {
                return Err(Error::PreconditionUnmet(format!(
                    "{} is degenerate: {e}",
                    PAIR_NAMES[k]
                )))
            }
        }
    }
    Ok(out.try_into().expect("three pairs"))
}

fn violation(msg: String) -> Error {
    VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    Error::TheoremViolation(msg)
}

/// Three triangles pairwise perspective from one common center have
/// concurrent axes; returns their common point.
pub fn theorem1_check(t1: &Triangle, t2: &Triangle, t3: &Triangle) -> Result<ProjPoint> {
    let [(o12, a12), (o13, a13), (o23, a23)] = pairwise([t1, t2, t3])?;
    if o12 != o13 || o12 != o23 {
        return Err(Error::PreconditionUnmet(format!(
            "centers differ: {o12}, {o13}, {o23}"
        )));
    }
    let axes = [a12, a13, a23];
    if !concurrent(&axes[0], &axes[1], &axes[2]) {
        return Err(violation(format!(
            "axes {}, {}, {} of triangles with common center {o12} are not concurrent",
            axes[0], axes[1], axes[2]
        )));
    }
    common_point(&axes).ok_or_else(|| {
        Error::PreconditionUnmet("the three axes coincide; their common point is not unique".into())
    })
}

/// Three triangles pairwise perspective with one common axis have collinear
/// centers; returns the line through them.
pub fn theorem2_check(t1: &Triangle, t2: &Triangle, t3: &Triangle) -> Result<ProjLine> {
    let [(o12, a12), (o13, a13), (o23, a23)] = pairwise([t1, t2, t3])?;
    if a12 != a13 || a12 != a23 {
        return Err(Error::PreconditionUnmet(format!(
            "axes differ: {a12}, {a13}, {a23}"
        )));
    }
    let centers = [o12, o13, o23];
    if !collinear(&centers[0], &centers[1], &centers[2]) {
        return Err(violation(format!(
            "centers {}, {}, {} of triangles with common axis {a12} are not collinear",
            centers[0], centers[1], centers[2]
        )));
    }
    common_line(&centers).ok_or_else(|| {
        Error::PreconditionUnmet("the three centers coincide; their line is not unique".into())
    })
}

/// Three triangles pairwise perspective with collinear, distinct centers
/// share one axis; returns it.
pub fn theorem3_check(t1: &Triangle, t2: &Triangle, t3: &Triangle) -> Result<ProjLine> {
    let [(o12, a12), (o13, a13), (o23, a23)] = pairwise([t1, t2, t3])?;
    if o12 == o13 || o12 == o23 || o13 == o23 {
        return Err(Error::PreconditionUnmet(format!(
            "centers are not distinct: {o12}, {o13}, {o23}"
        )));
    }
    if !collinear(&o12, &o13, &o23) {
        return Err(Error::PreconditionUnmet(format!(
            "centers {o12}, {o13}, {o23} are not collinear"
        )));
    }
    if a12 != a13 || a12 != a23 {
        return Err(violation(format!(
            "triangles with collinear centers have distinct axes {a12}, {a13}, {a23}"
        )));
    }
    Ok(a12)
}
