//! JSON encodings of kernel values and analysis results. Keys are sorted
//! (serde_json's default map) and every number is an exact string.

use serde_json::{json, Map, Value};
use trihom::constructions::{PairCenters, TripletReport, VeroneseReport};
use trihom::explorer::{Counterexample, SearchReport};
use trihom::kernel::{ProjLine, ProjPoint, Rational, Triangle};
use trihom::perspectivity::HomologyReport;

pub const REPORT_SCHEMA: &str = "trihom-report/1";

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn ints(c: &[num_bigint::BigInt; 3]) -> Value {
    Value::Array(c.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn point(p: &ProjPoint) -> Value {
    ints(p.coords())
}

pub fn line(l: &ProjLine) -> Value {
    ints(l.coords())
}

pub fn opt_point(p: Option<&ProjPoint>) -> Value {
    p.map_or(Value::Null, point)
}

pub fn triangle(t: &Triangle) -> Value {
    Value::Array(t.vertices().iter().map(point).collect())
}

pub fn points<'a>(ps: impl IntoIterator<Item = &'a ProjPoint>) -> Value {
    Value::Array(ps.into_iter().map(point).collect())
}

pub fn homology(r: &HomologyReport) -> Value {
    let modes: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "correspondence": e.correspondence.label(),
                "mode": e.mode().map(|m| m.name()),
                "perspective": e.is_perspective(),
                "center": opt_point(e.center.as_ref()),
                "axis": e.axis.as_ref().map_or(Value::Null, line),
                "error": e.error.as_ref().map(|x| x.to_string()),
            })
        })
        .collect();
    json!({
        "trihomological": r.is_trihomological(),
        "perspective_modes": r.perspective_modes().iter().map(|m| m.name()).collect::<Vec<_>>(),
        "modes": modes,
        "violations": r.violations,
    })
}

fn pair_centers(name: &str, c: &PairCenters) -> Value {
    json!({
        "pair": name,
        "p_modes": c.p_modes.iter().map(|m| m.name()).collect::<Vec<_>>(),
        "q_modes": c.q_modes.iter().map(|m| m.name()).collect::<Vec<_>>(),
        "third_mode": c.third_mode.name(),
        "third_center": point(&c.third),
    })
}

pub fn triplet(t: &TripletReport) -> Value {
    let names = ["(ABC,t1)", "(ABC,t2)", "(t1,t2)"];
    json!({
        "abc": triangle(&t.abc),
        "p": point(&t.p),
        "q": point(&t.q),
        "t1": triangle(&t.t1),
        "t2": triangle(&t.t2),
        "r": point(&t.r),
        "r1": point(&t.r1),
        "r2": point(&t.r2),
        "centers_collinear": true,
        "centers_line": line(&t.centers_line),
        "pairs": names.iter().zip(&t.pair_centers).map(|(n, c)| pair_centers(n, c)).collect::<Vec<_>>(),
    })
}

pub fn veronese(v: &VeroneseReport) -> Value {
    json!({
        "t3": triangle(&v.t3),
        "axis": line(&v.axis),
        "centers": points(&v.centers),
        "centers_line": v.centers_line.as_ref().map_or(Value::Null, line),
    })
}

pub fn counterexample(c: &Counterexample) -> Value {
    json!({
        "trial": c.trial,
        "family": c.family,
        "interpretation": c.interpretation.id(),
        "triangles": c.triangles.iter().map(triangle).collect::<Vec<_>>(),
        "common_centers": points(&c.common_centers),
        "remaining_centers": points(&c.remaining_centers),
    })
}

pub fn search(r: &SearchReport) -> Value {
    let tallies: Vec<Value> = r
        .tallies
        .iter()
        .map(|t| {
            json!({
                "family": t.family,
                "interpretation": t.interpretation.id(),
                "valid": t.valid,
                "supporting": t.supporting,
                "counterexamples": t.counterexamples,
            })
        })
        .collect();
    json!({
        "problem": r.problem.id(),
        "family": r.family,
        "methodology": r.methodology,
        "seed": r.seed.to_string(),
        "bound": r.bound,
        "trials_attempted": r.trials_attempted,
        "trials_valid": r.trials_valid,
        "trials_degenerate": r.trials_degenerate,
        "resamples": r.resamples,
        "supporting": r.supporting,
        "tallies": tallies,
        "counterexamples": r.counterexamples.iter().map(counterexample).collect::<Vec<_>>(),
        "elapsed_ms": r.elapsed.as_millis().to_string(),
    })
}

/// Wraps a result in the versioned envelope.
pub fn envelope(command: &str, exit_code: i32, status: &str, body: Map<String, Value>) -> Value {
    let mut m = body;
    m.insert("schema".into(), json!(REPORT_SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("status".into(), json!(status));
    m.insert("exit_code".into(), json!(exit_code));
    Value::Object(m)
}

pub fn emit_report(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
