//! Seeded samplers for points, triangles, and the configuration families
//! whose theorem preconditions hold by construction.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brocard::{squared_sides, AffineTriangle};
use crate::correspondence::Mode;
use crate::error::{Error, Result};
use crate::kernel::{collinear, incident, join, meet, ProjLine, ProjPoint, Triangle};
use crate::perspectivity::{mode_homology, perspective_axis, perspector};

pub const DEFAULT_BOUND: i64 = 50;
pub const DEFAULT_RETRIES: usize = 64;

/// Independent stream for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn check_bound(bound: i64) -> Result<()> {
    if bound < 2 {
        return Err(Error::InvalidArgument(format!(
            "coordinate bound must be at least 2, got {bound}"
        )));
    }
    Ok(())
}

/// Retry `f` up to [`DEFAULT_RETRIES`] times until it yields a value.
pub fn with_retries<T>(mut f: impl FnMut() -> Option<T>) -> Result<T> {
    (0..DEFAULT_RETRIES)
        .find_map(|_| f())
        .ok_or(Error::ExhaustedRetries(DEFAULT_RETRIES))
}

fn coord(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

fn nonzero(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = coord(rng, bound);
        if v != 0 {
            return v;
        }
    }
}

/// Point with homogeneous integer coordinates in `[-bound, bound]`; may lie
/// at infinity.
pub fn gen_point(rng: &mut impl Rng, bound: i64) -> Result<ProjPoint> {
    check_bound(bound)?;
    with_retries(|| ProjPoint::new(coord(rng, bound), coord(rng, bound), coord(rng, bound)).ok())
}

/// As [`gen_point`] with a nonzero last coordinate.
pub fn gen_finite_point(rng: &mut impl Rng, bound: i64) -> Result<ProjPoint> {
    check_bound(bound)?;
    Ok(
        ProjPoint::new(coord(rng, bound), coord(rng, bound), nonzero(rng, bound))
            .expect("z is nonzero"),
    )
}

/// Triangle with finite vertices.
pub fn gen_triangle(rng: &mut impl Rng, bound: i64) -> Result<Triangle> {
    check_bound(bound)?;
    with_retries(|| {
        let v: [ProjPoint; 3] =
            std::array::from_fn(|_| gen_finite_point(rng, bound).expect("bound checked"));
        Triangle::from_array(v).ok()
    })
}

/// Scalene triangle with integer vertex coordinates in `[-bound, bound]`.
pub fn gen_scalene_triangle(rng: &mut impl Rng, bound: i64) -> Result<AffineTriangle> {
    check_bound(bound)?;
    with_retries(|| {
        let v: [(i64, i64); 3] = std::array::from_fn(|_| (coord(rng, bound), coord(rng, bound)));
        AffineTriangle::from_ints(v)
            .ok()
            .filter(|t| squared_sides(t).is_scalene())
    })
}

fn combine(s: i64, u: &ProjPoint, t: i64, v: &ProjPoint) -> Option<ProjPoint> {
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    let [a, b] = [u.coords(), v.coords()];
    ProjPoint::from_ints(std::array::from_fn(|i| &s * &a[i] + &t * &b[i])).ok()
}

/// Uniform index in `0..n`.
pub fn pick_index(rng: &mut impl Rng, n: usize) -> usize {
    rng.random_range(0..n)
}

/// A random finite point on the line through `o` and `d`, distinct from `o`.
fn point_on(rng: &mut impl Rng, bound: i64, o: &ProjPoint, d: &ProjPoint) -> Option<ProjPoint> {
    let x = combine(coord(rng, bound), o, nonzero(rng, bound), d)?;
    (!x.is_at_infinity() && &x != o).then_some(x)
}

/// Pair perspective from a random center under the identity correspondence.
/// Both triangles have finite vertices.
pub fn gen_perspective_pair(rng: &mut impl Rng, bound: i64) -> Result<(Triangle, Triangle)> {
    check_bound(bound)?;
    with_retries(|| {
        let t1 = gen_triangle(rng, bound).ok()?;
        let o = gen_point(rng, bound).ok()?;
        if t1.has_vertex(&o) {
            return None;
        }
        let v: Option<Vec<ProjPoint>> = t1
            .vertices()
            .iter()
            .map(|a| point_on(rng, bound, a, &o).filter(|x| x != &o))
            .collect();
        let t2 = Triangle::from_array(v?.try_into().ok()?).ok()?;
        (perspector(&t1, &t2, Mode::P.correspondence()).ok()? == Some(o)).then_some((t1, t2))
    })
}

/// Three triangles with vertices on three fixed lines through `o`, so every
/// pair is perspective from `o` under the identity correspondence.
pub fn gen_common_center_family(
    rng: &mut impl Rng,
    bound: i64,
    o: &ProjPoint,
) -> Result<[Triangle; 3]> {
    check_bound(bound)?;
    with_retries(|| {
        let dirs: [ProjPoint; 3] =
            std::array::from_fn(|_| gen_point(rng, bound).expect("bound checked"));
        if dirs.iter().any(|d| d == o) {
            return None;
        }
        let rays: Vec<ProjLine> = dirs.iter().map(|d| join(o, d).expect("distinct")).collect();
        if rays[0] == rays[1] || rays[1] == rays[2] || rays[0] == rays[2] {
            return None;
        }
        let mut tris = Vec::with_capacity(3);
        for _ in 0..3 {
            let v: Option<Vec<ProjPoint>> =
                dirs.iter().map(|d| point_on(rng, bound, o, d)).collect();
            tris.push(Triangle::from_array(v?.try_into().ok()?).ok()?);
        }
        let tris: [Triangle; 3] = tris.try_into().ok()?;
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            if mode_homology(&tris[a], &tris[b], Mode::P)
                .ok()?
                .map(|h| h.0)
                .as_ref()
                != Some(o)
            {
                return None;
            }
        }
        Some(tris)
    })
}

/// Three triangles whose sides `BC`, `CA`, `AB` pass through three fixed
/// points `M`, `N`, `P` of `d`, so every pair has axis `d`.
pub fn gen_common_axis_family(
    rng: &mut impl Rng,
    bound: i64,
    d: &ProjLine,
) -> Result<[Triangle; 3]> {
    check_bound(bound)?;
    with_retries(|| {
        let u = meet(d, &random_line(rng, bound)?).ok()?;
        let v = meet(d, &random_line(rng, bound)?).ok()?;
        if u == v {
            return None;
        }
        let anchors: Vec<ProjPoint> = (0..3)
            .map(|_| combine(nonzero(rng, bound), &u, nonzero(rng, bound), &v))
            .collect::<Option<_>>()?;
        if anchors[0] == anchors[1] || anchors[1] == anchors[2] || anchors[0] == anchors[2] {
            return None;
        }
        let mut tris = Vec::with_capacity(3);
        for _ in 0..3 {
            let sides: Vec<ProjLine> = anchors
                .iter()
                .map(|m| {
                    let x = gen_finite_point(rng, bound).ok()?;
                    if incident(&x, d) {
                        return None;
                    }
                    join(m, &x).ok()
                })
                .collect::<Option<_>>()?;
            let [a, b, c] = [&sides[0], &sides[1], &sides[2]];
            let v = [meet(b, c).ok()?, meet(c, a).ok()?, meet(a, b).ok()?];
            tris.push(Triangle::from_array(v).ok()?);
        }
        let tris: [Triangle; 3] = tris.try_into().ok()?;
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let pair = mode_homology(&tris[a], &tris[b], Mode::P).ok()??;
            if &pair.1 != d {
                return None;
            }
        }
        Some(tris)
    })
}

fn random_line(rng: &mut impl Rng, bound: i64) -> Option<ProjLine> {
    ProjLine::new(coord(rng, bound), coord(rng, bound), coord(rng, bound)).ok()
}

/// Three pairwise perspective triangles with distinct collinear centers:
/// `t2` is perspective with `t1` from `o12`, `o23` is taken on the line
/// `o12 o13`, and `t3` is built vertex by vertex as `(o13 Aᵢ) ∩ (o23 A'ᵢ)`.
pub fn gen_pairwise_perspective_family(rng: &mut impl Rng, bound: i64) -> Result<[Triangle; 3]> {
    check_bound(bound)?;
    with_retries(|| {
        let (t1, t2) = gen_perspective_pair(rng, bound).ok()?;
        let o12 = perspector(&t1, &t2, Mode::P.correspondence()).ok()??;
        let o13 = gen_finite_point(rng, bound).ok()?;
        if o13 == o12 {
            return None;
        }
        let o23 = point_on(rng, bound, &o12, &o13).filter(|x| x != &o13)?;
        let v: Vec<ProjPoint> = (0..3)
            .map(|i| {
                let l = join(&o13, t1.vertex(i)).ok()?;
                let m = join(&o23, t2.vertex(i)).ok()?;
                meet(&l, &m).ok()
            })
            .collect::<Option<_>>()?;
        let t3 = Triangle::from_array(v.try_into().ok()?).ok()?;
        for (a, b) in [(&t1, &t2), (&t1, &t3), (&t2, &t3)] {
            mode_homology(a, b, Mode::P).ok()??;
            perspective_axis(a, b, Mode::P.correspondence()).ok()??;
        }
        Some([t1, t2, t3])
    })
}

/// True when `p` lies on no side line of `t` and is not a vertex.
pub fn is_general_point(t: &Triangle, p: &ProjPoint) -> bool {
    !t.has_vertex(p) && (0..3).all(|i| !incident(p, &t.side(i)))
}

/// Two points usable by the two-point construction on `t`.
pub fn gen_point_pair(
    rng: &mut impl Rng,
    bound: i64,
    t: &Triangle,
) -> Result<(ProjPoint, ProjPoint)> {
    check_bound(bound)?;
    with_retries(|| {
        let p = gen_finite_point(rng, bound).ok()?;
        let q = gen_finite_point(rng, bound).ok()?;
        let ok = p != q
            && is_general_point(t, &p)
            && is_general_point(t, &q)
            && t.vertices().iter().all(|v| !collinear(v, &p, &q));
        ok.then_some((p, q))
    })
}
