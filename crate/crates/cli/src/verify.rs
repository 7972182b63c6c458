//! Re-checks serialized counterexamples using only kernel incidence
//! predicates, independently of the analysis code that produced them.

use serde_json::Value;
use trihom::kernel::{collinear, concurrent, join, meet, ProjLine, ProjPoint};

fn parse_point(v: &Value) -> Result<ProjPoint, String> {
    let a = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or("point must be a 3-array")?;
    let mut c = Vec::with_capacity(3);
    for x in a {
        let s = x.as_str().ok_or("coordinate must be a string")?;
        c.push(
            s.parse::<num_bigint::BigInt>()
                .map_err(|e| format!("{s}: {e}"))?,
        );
    }
    let [x, y, z]: [num_bigint::BigInt; 3] = c.try_into().expect("three");
    ProjPoint::from_ints([x, y, z]).map_err(|e| e.to_string())
}

fn parse_triangle(v: &Value) -> Result<[ProjPoint; 3], String> {
    let a = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or("triangle must be a 3-array")?;
    Ok([
        parse_point(&a[0])?,
        parse_point(&a[1])?,
        parse_point(&a[2])?,
    ])
}

fn parse_points(v: &Value) -> Result<Vec<ProjPoint>, String> {
    v.as_array()
        .ok_or("expected an array")?
        .iter()
        .map(parse_point)
        .collect()
}

/// Lines `X_i Y_{i+k}` for the cyclic shift `k`; `None` if a pair coincides.
fn cevians(x: &[ProjPoint; 3], y: &[ProjPoint; 3], k: usize) -> Option<[ProjLine; 3]> {
    let l = |i: usize| join(&x[i], &y[(i + k) % 3]).ok();
    Some([l(0)?, l(1)?, l(2)?])
}

/// Centers of the three cyclic shifts; `None` entries mark a shift that is
/// not a perspectivity. Errors on coincident corresponding vertices.
fn shift_centers(x: &[ProjPoint; 3], y: &[ProjPoint; 3]) -> Result<[Option<ProjPoint>; 3], String> {
    let mut out: [Option<ProjPoint>; 3] = [None, None, None];
    for (k, slot) in out.iter_mut().enumerate() {
        let [a, b, c] = cevians(x, y, k).ok_or("corresponding vertices coincide")?;
        if concurrent(&a, &b, &c) {
            // Two of the three lines are distinct for a genuine triangle pair.
            let p = meet(&a, &b)
                .or_else(|_| meet(&a, &c))
                .or_else(|_| meet(&b, &c));
            *slot = Some(p.map_err(|_| "all three joining lines coincide")?);
        }
    }
    Ok(out)
}

fn trihomological(x: &[ProjPoint; 3], y: &[ProjPoint; 3]) -> Result<bool, String> {
    Ok(shift_centers(x, y)?.iter().all(Option::is_some))
}

/// Confirms a serialized counterexample. `Ok(true)` means the claimed
/// failure reproduces exactly.
pub fn verify_counterexample(problem: &str, c: &Value) -> Result<bool, String> {
    let ts = c["triangles"]
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or("three triangles expected")?;
    let t = [
        parse_triangle(&ts[0])?,
        parse_triangle(&ts[1])?,
        parse_triangle(&ts[2])?,
    ];
    match problem {
        "op1" => Ok(trihomological(&t[0], &t[1])?
            && trihomological(&t[1], &t[2])?
            && !trihomological(&t[0], &t[2])?),
        "op2" => {
            let common = parse_points(&c["common_centers"])?;
            let remaining = parse_points(&c["remaining_centers"])?;
            if common.len() != 2 || remaining.len() != 3 {
                return Ok(false);
            }
            let pairs = [(&t[0], &t[1]), (&t[1], &t[2]), (&t[0], &t[2])];
            for ((x, y), rem) in pairs.iter().zip(&remaining) {
                let centers = shift_centers(x, y)?;
                if centers.iter().any(Option::is_none) {
                    return Ok(false);
                }
                let has = |p: &ProjPoint| centers.iter().flatten().any(|q| q == p);
                if !common.iter().all(has) || !has(rem) || common.contains(rem) {
                    return Ok(false);
                }
            }
            Ok(!collinear(&remaining[0], &remaining[1], &remaining[2]))
        }
        other => Err(format!("unknown problem `{other}`")),
    }
}

/// Re-verifies every counterexample of a serialized search report.
/// Returns the number confirmed; any unconfirmed entry is an error.
pub fn verify_search_report(report: &Value) -> Result<usize, String> {
    let problem = report["problem"].as_str().ok_or("missing problem id")?;
    let cs = report["counterexamples"]
        .as_array()
        .ok_or("missing counterexamples")?;
    for (i, c) in cs.iter().enumerate() {
        if !verify_counterexample(problem, c)? {
            return Err(format!(
                "counterexample {i} (trial {}) does not re-verify",
                c["trial"]
            ));
        }
    }
    Ok(cs.len())
}
