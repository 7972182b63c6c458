//! Randomized searches over the two open questions on tri-homological
//! triangles. Every trial draws from its own seeded stream, so reports are
//! independent of thread scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::generators::{
    gen_finite_point, gen_point_pair, gen_triangle, pick_index, trial_rng, DEFAULT_RETRIES,
};
use crate::constructions::{theorem8_triangles, trihomological_triplet};
use crate::correspondence::Mode;
use crate::error::{Error, Result};
use crate::kernel::{collinear, ProjPoint, Triangle};
use crate::perspectivity::{homology_report, HomologyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    /// `(T1,T2)` and `(T2,T3)` tri-homological: is `(T1,T3)`?
    TransitiveTrihomology,
    /// Pairwise tri-homological with two common centers: are the three
    /// remaining centers collinear?
    RemainingCentersCollinear,
}

impl Problem {
    pub fn id(self) -> &'static str {
        match self {
            Problem::TransitiveTrihomology => "op1",
            Problem::RemainingCentersCollinear => "op2",
        }
    }
}

/// How a trial's hypothesis and conclusion are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Interpretation {
    /// Problem 1: `(T1,T3)` tri-homological.
    Trihomology,
    /// Problem 2: the center sets of all three pairs share two points.
    CommonPoints,
    /// Problem 2: with pairs oriented `T1→T2→T3→T1`, two cyclic modes have
    /// the same center for all three pairs.
    CommonModes,
}

impl Interpretation {
    pub fn id(self) -> &'static str {
        match self {
            Interpretation::Trihomology => "trihomology",
            Interpretation::CommonPoints => "common-centers-as-points",
            Interpretation::CommonModes => "common-centers-as-modes",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        [Self::Trihomology, Self::CommonPoints, Self::CommonModes]
            .into_iter()
            .find(|i| i.id() == s)
    }
}

/// Generator family used for problem 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem2Family {
    /// `(ABC, t1, t2)` from the two-point construction.
    Theorem8,
    /// `(ABC, t1, t3)` with `t3` built from `P` and the third center `R` of
    /// `(ABC, t1)`.
    Remark5,
    /// A `theorem8` triplet with each triangle cyclically relabeled and the
    /// triplet order shuffled.
    Relabeled,
    /// `T2` built from `T1` with random points, `T3` built from `T2` with one
    /// center of `(T1,T2)` and a fresh random point; kept only when every
    /// pair turns out tri-homological.
    Chained,
}

impl Problem2Family {
    pub const ALL: [Problem2Family; 4] = [
        Self::Theorem8,
        Self::Remark5,
        Self::Relabeled,
        Self::Chained,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::Theorem8 => "theorem8",
            Self::Remark5 => "remark5",
            Self::Relabeled => "relabeled",
            Self::Chained => "chained",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.id() == s)
    }

    pub fn methodology(self) -> &'static str {
        match self {
            Self::Theorem8 => {
                "T1 = random ABC, (T2, T3) = two-point construction on ABC with random P, Q; \
                 all three pairs share centers P and Q by construction (proven collinear case)"
            }
            Self::Remark5 => {
                "T1 = random ABC, T2 = first triangle of the construction with random P, Q, \
                 R = third center of (T1, T2); T3 = the triangle of the construction with P, R \
                 that differs from T2 as a vertex set"
            }
            Self::Relabeled => {
                "the two-point construction triplet (ABC, t1, t2) with a random cyclic relabeling \
                 of each triangle's vertices and a random order of the three triangles"
            }
            Self::Chained => {
                "T1 = random ABC, T2 = construction on T1 with random P, Q; T3 = construction on T2 \
                 with a randomly chosen center of (T1, T2) and a fresh random point; the trial \
                 counts only when (T1, T3) is tri-homological as well"
            }
        }
    }
}

impl fmt::Display for Problem2Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A configuration falsifying the conjecture under one interpretation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    /// Generator family that produced the configuration.
    pub family: String,
    pub interpretation: Interpretation,
    pub triangles: [Triangle; 3],
    /// Problem 2: the two shared centers.
    pub common_centers: Vec<ProjPoint>,
    /// Problem 2: the remaining center of `(T1,T2)`, `(T2,T3)`, `(T1,T3)`.
    pub remaining_centers: Vec<ProjPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally {
    pub family: String,
    pub interpretation: Interpretation,
    /// Trials in which the interpretation's hypothesis held.
    pub valid: usize,
    pub supporting: usize,
    pub counterexamples: usize,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub problem: Problem,
    pub family: String,
    pub methodology: String,
    pub seed: u64,
    pub bound: i64,
    pub trials_attempted: usize,
    /// Trials whose configuration was built and satisfied the hypothesis
    /// under at least one interpretation.
    pub trials_valid: usize,
    /// Trials that exhausted the resampling budget.
    pub trials_degenerate: usize,
    /// Total rejected samples across all trials.
    pub resamples: usize,
    /// Supporting instances, summed over interpretations.
    pub supporting: usize,
    /// One row per (family, interpretation).
    pub tallies: Vec<Tally>,
    /// Sorted by trial index, then interpretation.
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl PartialEq for SearchReport {
    /// Equality ignores timing.
    fn eq(&self, other: &Self) -> bool {
        self.problem == other.problem
            && self.family == other.family
            && self.methodology == other.methodology
            && self.seed == other.seed
            && self.bound == other.bound
            && self.trials_attempted == other.trials_attempted
            && self.trials_valid == other.trials_valid
            && self.trials_degenerate == other.trials_degenerate
            && self.resamples == other.resamples
            && self.supporting == other.supporting
            && self.tallies == other.tallies
            && self.counterexamples == other.counterexamples
    }
}

/// What one interpretation concluded on one trial.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Verdict {
    NotApplicable,
    Supports,
    Refutes {
        common: Vec<ProjPoint>,
        remaining: Vec<ProjPoint>,
    },
}

type Outcome = ([Triangle; 3], Vec<(Interpretation, Verdict)>);

struct TrialResult {
    family: &'static str,
    resamples: usize,
    /// `None` when the retry budget ran out.
    outcome: Option<Outcome>,
}

fn check_args(trials: usize, bound: i64) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if bound < 2 {
        return Err(Error::InvalidArgument(format!(
            "coordinate bound must be at least 2, got {bound}"
        )));
    }
    Ok(())
}

type Sample = Option<([Triangle; 3], Vec<(Interpretation, Verdict)>)>;

fn run_trials(
    trials: usize,
    seed: u64,
    family: impl Fn(usize) -> &'static str + Sync,
    sample: impl Fn(usize, &mut ChaCha8Rng) -> Sample + Sync,
) -> Vec<TrialResult> {
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i as u64);
            let family = family(i);
            for attempt in 0..DEFAULT_RETRIES {
                if let Some(outcome) = sample(i, &mut rng) {
                    return TrialResult {
                        family,
                        resamples: attempt,
                        outcome: Some(outcome),
                    };
                }
            }
            TrialResult {
                family,
                resamples: DEFAULT_RETRIES,
                outcome: None,
            }
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn aggregate(
    problem: Problem,
    family: &str,
    methodology: &str,
    families: &[&str],
    interpretations: &[Interpretation],
    seed: u64,
    bound: i64,
    results: Vec<TrialResult>,
    started: Instant,
) -> SearchReport {
    let mut tallies: Vec<Tally> = families
        .iter()
        .flat_map(|f| {
            interpretations.iter().map(|&interpretation| Tally {
                family: f.to_string(),
                interpretation,
                valid: 0,
                supporting: 0,
                counterexamples: 0,
            })
        })
        .collect();
    let mut report = SearchReport {
        problem,
        family: family.to_string(),
        methodology: methodology.to_string(),
        seed,
        bound,
        trials_attempted: results.len(),
        trials_valid: 0,
        trials_degenerate: 0,
        resamples: 0,
        supporting: 0,
        tallies: Vec::new(),
        counterexamples: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for (trial, r) in results.into_iter().enumerate() {
        report.resamples += r.resamples;
        let Some((triangles, verdicts)) = r.outcome else {
            report.trials_degenerate += 1;
            continue;
        };
        let mut valid = false;
        for (interp, verdict) in verdicts {
            let tally = tallies
                .iter_mut()
                .find(|t| t.family == r.family && t.interpretation == interp)
                .expect("declared");
            match verdict {
                Verdict::NotApplicable => {}
                Verdict::Supports => {
                    valid = true;
                    tally.valid += 1;
                    tally.supporting += 1;
                    report.supporting += 1;
                }
                Verdict::Refutes { common, remaining } => {
                    valid = true;
                    tally.valid += 1;
                    tally.counterexamples += 1;
                    report.counterexamples.push(Counterexample {
                        trial,
                        family: r.family.to_string(),
                        interpretation: interp,
                        triangles: triangles.clone(),
                        common_centers: common,
                        remaining_centers: remaining,
                    });
                }
            }
        }
        if valid {
            report.trials_valid += 1;
        }
    }
    report.tallies = tallies;
    report.elapsed = started.elapsed();
    report
}

fn clean_trihomological(r: &HomologyReport) -> bool {
    r.is_trihomological() && r.violations.is_empty()
}

fn no_degenerate_modes(r: &HomologyReport) -> bool {
    r.cyclic().all(|e| e.error.is_none())
}

/// One trial of problem 1: two independent tri-homological partners of a
/// random triangle, then tri-homology of the partners with each other.
fn problem1_sample(rng: &mut ChaCha8Rng, bound: i64) -> Sample {
    let t2 = gen_triangle(rng, bound).ok()?;
    let (p, q) = gen_point_pair(rng, bound, &t2).ok()?;
    let (u, v) = gen_point_pair(rng, bound, &t2).ok()?;
    let t1 = trihomological_triplet(&t2, &p, &q).ok()?.t1;
    let t3 = trihomological_triplet(&t2, &u, &v).ok()?.t1;
    if t1 == t3 {
        return None;
    }
    let r13 = homology_report(&t1, &t3);
    if !no_degenerate_modes(&r13) {
        return None;
    }
    let verdict = if r13.is_trihomological() {
        Verdict::Supports
    } else {
        Verdict::Refutes {
            common: Vec::new(),
            remaining: Vec::new(),
        }
    };
    Some(([t1, t2, t3], vec![(Interpretation::Trihomology, verdict)]))
}

const PROBLEM1_FAMILY: &str = "two-point-partners";

/// Exploratory search on problem 1.
pub fn open_problem_1_search(trials: usize, seed: u64, bound: i64) -> Result<SearchReport> {
    check_args(trials, bound)?;
    let started = Instant::now();
    let results = run_trials(
        trials,
        seed,
        |_| PROBLEM1_FAMILY,
        |_, rng| problem1_sample(rng, bound),
    );
    Ok(aggregate(
        Problem::TransitiveTrihomology,
        PROBLEM1_FAMILY,
        "T2 = random triangle; T1 and T3 = first triangles of the two-point construction on T2 \
         with independent random point pairs (each verified tri-homological with T2); test T1 vs T3",
        &[PROBLEM1_FAMILY],
        &[Interpretation::Trihomology],
        seed,
        bound,
        results,
        started,
    ))
}

/// Centers of the three cyclic modes, read from `a` to `b`.
fn mode_centers(r: &HomologyReport, reversed: bool) -> [ProjPoint; 3] {
    Mode::ALL.map(|m| {
        let m = if reversed { m.inverse() } else { m };
        r.center(m).expect("tri-homological").clone()
    })
}

fn interpret_points(centers: &[[ProjPoint; 3]; 3]) -> Verdict {
    let sets: Vec<BTreeSet<&ProjPoint>> = centers.iter().map(|c| c.iter().collect()).collect();
    let common: BTreeSet<&ProjPoint> = sets[0]
        .iter()
        .filter(|p| sets[1].contains(*p) && sets[2].contains(*p))
        .copied()
        .collect();
    if common.len() != 2 {
        return Verdict::NotApplicable;
    }
    let mut remaining = Vec::with_capacity(3);
    for c in centers {
        let rest: BTreeSet<&ProjPoint> = c.iter().filter(|p| !common.contains(p)).collect();
        if rest.len() != 1 || c.iter().filter(|p| !common.contains(p)).count() != 1 {
            return Verdict::NotApplicable;
        }
        remaining.push((*rest.iter().next().expect("one")).clone());
    }
    let common = common.into_iter().cloned().collect();
    if collinear(&remaining[0], &remaining[1], &remaining[2]) {
        Verdict::Supports
    } else {
        Verdict::Refutes { common, remaining }
    }
}

/// `oriented` holds mode centers of `(T1,T2)`, `(T2,T3)`, `(T3,T1)`.
fn interpret_modes(oriented: &[[ProjPoint; 3]; 3]) -> (Verdict, Option<[usize; 3]>) {
    let shared: Vec<usize> = (0..3)
        .filter(|&k| oriented[0][k] == oriented[1][k] && oriented[1][k] == oriented[2][k])
        .collect();
    if shared.len() != 2 {
        return (Verdict::NotApplicable, None);
    }
    let k = (0..3).find(|k| !shared.contains(k)).expect("one mode left");
    let remaining: Vec<ProjPoint> = oriented.iter().map(|c| c[k].clone()).collect();
    // Report remaining centers in (T1,T2), (T2,T3), (T1,T3) order.
    let verdict = if collinear(&remaining[0], &remaining[1], &remaining[2]) {
        Verdict::Supports
    } else {
        Verdict::Refutes {
            common: shared.iter().map(|&s| oriented[0][s].clone()).collect(),
            remaining,
        }
    };
    (verdict, Some([shared[0], shared[1], k]))
}

/// Evaluates both readings of problem 2 on a triplet; `None` when a cyclic
/// mode of some pair is degenerate. Pairs that are not all tri-homological
/// leave both readings inapplicable.
fn problem2_verdicts(t: &[Triangle; 3]) -> Option<Vec<(Interpretation, Verdict)>> {
    let r12 = homology_report(&t[0], &t[1]);
    let r23 = homology_report(&t[1], &t[2]);
    let r13 = homology_report(&t[0], &t[2]);
    let reports = [&r12, &r23, &r13];
    if !reports.iter().all(|r| no_degenerate_modes(r)) {
        return None;
    }
    if !reports.iter().all(|r| clean_trihomological(r)) {
        return Some(vec![
            (Interpretation::CommonPoints, Verdict::NotApplicable),
            (Interpretation::CommonModes, Verdict::NotApplicable),
        ]);
    }
    let points = interpret_points(&[
        mode_centers(&r12, false),
        mode_centers(&r23, false),
        mode_centers(&r13, false),
    ]);
    let (modes, _) = interpret_modes(&[
        mode_centers(&r12, false),
        mode_centers(&r23, false),
        mode_centers(&r13, true),
    ]);
    Some(vec![
        (Interpretation::CommonPoints, points),
        (Interpretation::CommonModes, modes),
    ])
}

fn same_vertex_set(a: &Triangle, b: &Triangle) -> bool {
    a.vertices().iter().all(|v| b.has_vertex(v))
}

fn problem2_triplet(
    rng: &mut ChaCha8Rng,
    bound: i64,
    family: Problem2Family,
) -> Option<[Triangle; 3]> {
    let abc = gen_triangle(rng, bound).ok()?;
    let (p, q) = gen_point_pair(rng, bound, &abc).ok()?;
    match family {
        Problem2Family::Theorem8 => {
            let (t1, t2) = theorem8_triangles(&abc, &p, &q).ok()?;
            Some([abc, t1, t2])
        }
        Problem2Family::Remark5 => {
            let first = trihomological_triplet(&abc, &p, &q).ok()?;
            let (s1, s2) = theorem8_triangles(&abc, &p, &first.r).ok()?;
            let t3 = if same_vertex_set(&s1, &first.t1) {
                s2
            } else {
                s1
            };
            Some([abc, first.t1, t3])
        }
        Problem2Family::Relabeled => {
            let (t1, t2) = theorem8_triangles(&abc, &p, &q).ok()?;
            let mut t = [abc, t1, t2].map(|t| {
                let k = pick_index(rng, 3);
                let v = t.vertices();
                Triangle::from_array([0, 1, 2].map(|i| v[(i + k) % 3].clone())).expect("relabeling")
            });
            // Fisher-Yates on three elements.
            for i in (1..3).rev() {
                t.swap(i, pick_index(rng, i + 1));
            }
            Some(t)
        }
        Problem2Family::Chained => {
            let first = trihomological_triplet(&abc, &p, &q).ok()?;
            let t2 = first.t1;
            let pick = [&first.p, &first.q, &first.r][pick_index(rng, 3)].clone();
            let fresh = gen_finite_point(rng, bound).ok()?;
            let (t3, _) = theorem8_triangles(&t2, &pick, &fresh).ok()?;
            Some([abc, t2, t3])
        }
    }
}

fn problem2_sample(rng: &mut ChaCha8Rng, bound: i64, family: Problem2Family) -> Sample {
    let t = problem2_triplet(rng, bound, family)?;
    let verdicts = problem2_verdicts(&t)?;
    Some((t, verdicts))
}

const PROBLEM2_INTERPRETATIONS: [Interpretation; 2] =
    [Interpretation::CommonPoints, Interpretation::CommonModes];

/// Exploratory search on problem 2, cycling through every generator family
/// by trial index.
pub fn open_problem_2_search(trials: usize, seed: u64, bound: i64) -> Result<SearchReport> {
    check_args(trials, bound)?;
    let started = Instant::now();
    let fam = |i: usize| Problem2Family::ALL[i % Problem2Family::ALL.len()];
    let results = run_trials(
        trials,
        seed,
        |i| fam(i).id(),
        |i, rng| problem2_sample(rng, bound, fam(i)),
    );
    let methodology = Problem2Family::ALL
        .iter()
        .map(|f| format!("{}: {}", f.id(), f.methodology()))
        .collect::<Vec<_>>()
        .join("; ");
    let ids = Problem2Family::ALL.map(|f| f.id());
    Ok(aggregate(
        Problem::RemainingCentersCollinear,
        "mixed",
        &format!(
            "trial i uses family i mod 4 in the order theorem8, remark5, relabeled, chained. {methodology}"
        ),
        &ids,
        &PROBLEM2_INTERPRETATIONS,
        seed,
        bound,
        results,
        started,
    ))
}

/// Exploratory search on problem 2 with a single generator family.
pub fn open_problem_2_search_family(
    trials: usize,
    seed: u64,
    bound: i64,
    family: Problem2Family,
) -> Result<SearchReport> {
    check_args(trials, bound)?;
    let started = Instant::now();
    let results = run_trials(
        trials,
        seed,
        |_| family.id(),
        |_, rng| problem2_sample(rng, bound, family),
    );
    Ok(aggregate(
        Problem::RemainingCentersCollinear,
        family.id(),
        family.methodology(),
        &[family.id()],
        &PROBLEM2_INTERPRETATIONS,
        seed,
        bound,
        results,
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_rejected() {
        assert!(matches!(
            open_problem_1_search(0, 1, 50),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            open_problem_2_search(0, 1, 50),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn problem1_single_trial_is_deterministic() {
        let a = open_problem_1_search(1, 7, 50).unwrap();
        let b = open_problem_1_search(1, 7, 50).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.trials_attempted, 1);
        assert!(a.trials_valid <= a.trials_attempted);
        assert_eq!(a.trials_valid + a.trials_degenerate, 1);
    }

    #[test]
    fn problem1_counterexamples_are_not_trihomological() {
        let rep = open_problem_1_search(30, 11, 50).unwrap();
        for c in &rep.counterexamples {
            let [t1, t2, t3] = &c.triangles;
            assert!(homology_report(t1, t2).is_trihomological());
            assert!(homology_report(t2, t3).is_trihomological());
            assert!(!homology_report(t1, t3).is_trihomological());
        }
    }

    #[test]
    fn theorem8_family_supports_under_both_readings() {
        let rep = open_problem_2_search_family(40, 3, 50, Problem2Family::Theorem8).unwrap();
        assert!(rep.counterexamples.is_empty());
        assert!(rep.trials_valid > 30);
        for t in &rep.tallies {
            assert_eq!(t.valid, t.supporting);
        }
    }

    #[test]
    fn families_are_deterministic() {
        for f in Problem2Family::ALL {
            let a = open_problem_2_search_family(15, 9, 20, f).unwrap();
            let b = open_problem_2_search_family(15, 9, 20, f).unwrap();
            assert_eq!(a, b, "{f}");
        }
    }

    #[test]
    fn mode_interpretation_on_theorem8_triplet() {
        let abc = Triangle::new(
            ProjPoint::new(1, 0, 0).unwrap(),
            ProjPoint::new(0, 1, 0).unwrap(),
            ProjPoint::new(0, 0, 1).unwrap(),
        )
        .unwrap();
        let (p, q) = (
            ProjPoint::new(1, 1, 1).unwrap(),
            ProjPoint::new(1, 2, 3).unwrap(),
        );
        let (t1, t2) = theorem8_triangles(&abc, &p, &q).unwrap();
        let t = [abc, t1, t2];
        let r12 = homology_report(&t[0], &t[1]);
        let r23 = homology_report(&t[1], &t[2]);
        let r13 = homology_report(&t[0], &t[2]);
        let (v, modes) = interpret_modes(&[
            mode_centers(&r12, false),
            mode_centers(&r23, false),
            mode_centers(&r13, true),
        ]);
        assert_eq!(v, Verdict::Supports);
        // Shared modes Q and R; the identity mode carries the remaining centers.
        assert_eq!(modes, Some([1, 2, 0]));
    }
}
