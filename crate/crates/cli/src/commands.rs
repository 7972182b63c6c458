//! Command-line surface: argument parsing, dispatch and exit codes.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use trihom::brocard::{brocard_points, first_brocard_triangle, neuberg_check, AffineTriangle};
use trihom::constructions::{
    theorem8_triangles, trihomological_triplet, veronese_report, TripletReport,
};
use trihom::correspondence::Mode;
use trihom::explorer::{
    open_problem_1_search, open_problem_2_search, open_problem_2_search_family, Problem2Family,
};
use trihom::kernel::{concurrent, join, ProjPoint, Triangle};
use trihom::perspectivity::{homology_report_with, theorem1_check, theorem2_check, theorem3_check};
use trihom::ratios::{bihomology_criterion, grand_product, mode_product, nine_intersections};
use trihom::Error;

use crate::report::{self, emit_report, envelope};
use crate::scene::{
    parse_scene, scene_to_json, Element, ElementKind, FigureSpec, Scene, SceneError,
};
use crate::svg::{render_svg, RenderError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "trihom",
    version,
    about = "Exact checks and constructions for homological triangles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Scene file (JSON); standard input when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Also write the report (or, for `render`, the SVG) to this file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    pub trials: usize,
    #[arg(
        long,
        global = true,
        default_value_t = 50,
        allow_negative_numbers = true
    )]
    pub bound: i64,
    /// Report all six vertex correspondences in `check pair`.
    #[arg(long, global = true)]
    pub all_permutations: bool,
    /// Generator family for `explore op2` (all families when omitted).
    #[arg(long, global = true)]
    pub family: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify properties of the triangles T1, T2 (and T3) in a scene.
    Check {
        #[arg(value_enum)]
        what: CheckWhat,
    },
    /// Build configurations from the triangle ABC and points P, Q.
    Construct {
        #[arg(value_enum)]
        what: ConstructWhat,
    },
    /// Brocard constructions on the affine triangle ABC.
    Brocard {
        #[arg(value_enum)]
        what: BrocardWhat,
    },
    /// Seeded searches on the two open problems.
    Explore {
        #[arg(value_enum)]
        what: ExploreWhat,
    },
    /// Draw a scene (or a report embedding one) as SVG.
    Render,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckWhat {
    Pair,
    Theorem1,
    Theorem2,
    Theorem3,
    Eq1,
    Eq2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructWhat {
    Theorem8,
    Veronese,
    Triplet,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrocardWhat {
    FirstTriangle,
    Neuberg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExploreWhat {
    Op1,
    Op2,
}

impl Command {
    pub fn name(&self) -> String {
        let leaf = |v: &dyn ValueEnumName| v.leaf();
        match self {
            Command::Check { what } => format!("check {}", leaf(what)),
            Command::Construct { what } => format!("construct {}", leaf(what)),
            Command::Brocard { what } => format!("brocard {}", leaf(what)),
            Command::Explore { what } => format!("explore {}", leaf(what)),
            Command::Render => "render".into(),
        }
    }
}

trait ValueEnumName {
    fn leaf(&self) -> String;
}

impl<T: ValueEnum> ValueEnumName for T {
    fn leaf(&self) -> String {
        self.to_possible_value()
            .expect("named")
            .get_name()
            .to_string()
    }
}

/// Why a command did not succeed.
#[derive(Debug)]
enum Failure {
    Input(String),
    Core(Error),
    Render(RenderError),
}

impl From<SceneError> for Failure {
    fn from(e: SceneError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) | Failure::Render(_) => EXIT_INPUT,
            Failure::Core(Error::TheoremViolation(_)) => EXIT_FAIL,
            Failure::Core(Error::InvalidArgument(_)) => EXIT_INPUT,
            Failure::Core(_) => EXIT_DEGENERATE,
        }
    }

    fn body(&self) -> Map<String, Value> {
        let (kind, message) = match self {
            Failure::Input(m) => ("input", m.clone()),
            Failure::Render(e) => ("input", e.to_string()),
            Failure::Core(e) => (core_kind(e), e.to_string()),
        };
        let mut m = Map::new();
        m.insert("error".into(), json!({ "kind": kind, "message": message }));
        m
    }
}

fn core_kind(e: &Error) -> &'static str {
    match e {
        Error::TheoremViolation(_) => "theorem-violation",
        Error::PreconditionUnmet(_) => "precondition-unmet",
        Error::InvalidArgument(_) => "invalid-argument",
        _ => "degenerate",
    }
}

fn status(code: i32) -> &'static str {
    match code {
        EXIT_OK => "ok",
        EXIT_FAIL => "fail",
        EXIT_DEGENERATE => "degenerate",
        _ => "input-error",
    }
}

/// A successful computation: its exit code and report body.
type Done = (i32, Map<String, Value>);

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("report bodies are objects"),
    }
}

fn triangle(scene: &Scene, name: &str) -> Result<Triangle, Failure> {
    Ok(Triangle::from_array(scene.triangle_vertices(name)?)?)
}

fn pass(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn check(what: CheckWhat, scene: &Scene, all: bool) -> Result<Done, Failure> {
    let t1 = triangle(scene, "T1")?;
    let t2 = triangle(scene, "T2")?;
    match what {
        CheckWhat::Pair => {
            let r = homology_report_with(&t1, &t2, all);
            let degenerate = r.cyclic().any(|e| e.error.is_some());
            let code = if !r.violations.is_empty() {
                EXIT_FAIL
            } else if degenerate {
                EXIT_DEGENERATE
            } else {
                pass(r.is_trihomological())
            };
            Ok((code, obj(report::homology(&r))))
        }
        CheckWhat::Eq1 => {
            let n = nine_intersections(&t1, &t2)?;
            let mut groups = Map::new();
            for m in Mode::ALL {
                let p = mode_product(&n, &t1, m)?;
                groups.insert(
                    m.name().into(),
                    json!({ "points": report::points(n.mode(m)), "product": report::rational(&p.value) }),
                );
            }
            let g = grand_product(&n, &t1)?;
            let ok = g == trihom::kernel::Rational::from_integer(1.into());
            Ok((
                pass(ok),
                obj(json!({ "modes": groups, "grand_product": report::rational(&g) })),
            ))
        }
        CheckWhat::Eq2 => {
            let criterion = bihomology_criterion(&t1, &t2)?;
            let n = nine_intersections(&t1, &t2)?;
            let q = mode_product(&n, &t1, Mode::Q)?.value;
            let r = mode_product(&n, &t1, Mode::R)?.value;
            let l = |i: usize| join(t1.vertex(i), t2.vertex(i));
            let concurrent_joins = concurrent(&l(0)?, &l(1)?, &l(2)?);
            Ok((
                pass(criterion == concurrent_joins),
                obj(json!({
                    "q_product": report::rational(&q),
                    "r_product": report::rational(&r),
                    "criterion": criterion,
                    "joins_concurrent": concurrent_joins,
                })),
            ))
        }
        CheckWhat::Theorem1 | CheckWhat::Theorem2 | CheckWhat::Theorem3 => {
            let t3 = triangle(scene, "T3")?;
            let body = match what {
                CheckWhat::Theorem1 => {
                    json!({ "axes_concurrence_point": report::point(&theorem1_check(&t1, &t2, &t3)?) })
                }
                CheckWhat::Theorem2 => {
                    json!({ "centers_line": report::line(&theorem2_check(&t1, &t2, &t3)?) })
                }
                _ => json!({ "common_axis": report::line(&theorem3_check(&t1, &t2, &t3)?) }),
            };
            Ok((EXIT_OK, obj(body)))
        }
    }
}

/// The triplet as a drawable scene: the three triangles, the cevians through
/// `R`, and the dashed line of the three remaining centers.
pub fn triplet_scene(t: &TripletReport, viewport: Option<FigureSpec>) -> Scene {
    let mut s = Scene::default();
    s.insert_triangle("ABC", ["A", "B", "C"], &t.abc);
    s.insert_triangle("T1", ["A1", "B1", "C1"], &t.t1);
    s.insert_triangle("T2", ["A2", "B2", "C2"], &t.t2);
    for (n, p) in [
        ("P", &t.p),
        ("Q", &t.q),
        ("R", &t.r),
        ("R1", &t.r1),
        ("R2", &t.r2),
    ] {
        s.insert_point(n, p);
    }
    s.insert_line("centers", &t.centers_line);
    let el = |kind, refs: &[&str], class: Option<&str>| Element {
        kind,
        refs: refs.iter().map(|r| r.to_string()).collect(),
        class: class.map(str::to_string),
        label: None,
    };
    let mut elements = vec![
        el(ElementKind::Join, &["A", "A1"], Some("aux")),
        el(ElementKind::Join, &["B", "B1"], Some("aux")),
        el(ElementKind::Join, &["C", "C1"], Some("aux")),
        el(ElementKind::Line, &["centers"], Some("centers")),
        el(ElementKind::Triangle, &["ABC"], Some("base")),
        el(ElementKind::Triangle, &["T1"], Some("t1")),
        el(ElementKind::Triangle, &["T2"], Some("t2")),
    ];
    for n in [
        "A", "B", "C", "A1", "B1", "C1", "A2", "B2", "C2", "P", "Q", "R", "R1", "R2",
    ] {
        elements.push(el(ElementKind::Point, &[n], None));
    }
    let base = viewport.unwrap_or_default();
    s.figure = Some(FigureSpec {
        title: base.title.or(Some(
            "Two-point construction: three tri-homological triangles".into(),
        )),
        viewport: base.viewport,
        elements: Some(elements),
    });
    s
}

fn construct(what: ConstructWhat, scene: &Scene) -> Result<Done, Failure> {
    match what {
        ConstructWhat::Veronese => {
            let v = veronese_report(&triangle(scene, "T1")?, &triangle(scene, "T2")?)?;
            Ok((EXIT_OK, obj(report::veronese(&v))))
        }
        ConstructWhat::Theorem8 | ConstructWhat::Triplet => {
            let abc = triangle(scene, "ABC")?;
            let (p, q) = (scene.point("P")?, scene.point("Q")?);
            if what == ConstructWhat::Theorem8 {
                let (t1, t2) = theorem8_triangles(&abc, &p, &q)?;
                return Ok((
                    EXIT_OK,
                    obj(json!({ "t1": report::triangle(&t1), "t2": report::triangle(&t2) })),
                ));
            }
            let t = trihomological_triplet(&abc, &p, &q)?;
            let mut body = obj(report::triplet(&t));
            body.insert(
                "scene".into(),
                scene_to_json(&triplet_scene(&t, scene.figure.clone())),
            );
            Ok((EXIT_OK, body))
        }
    }
}

fn brocard(what: BrocardWhat, scene: &Scene) -> Result<Done, Failure> {
    let t = AffineTriangle::from_triangle(&triangle(scene, "ABC")?)?;
    match what {
        BrocardWhat::FirstTriangle => {
            let (o, o2) = brocard_points(&t);
            let b = first_brocard_triangle(&t)?;
            Ok((
                EXIT_OK,
                obj(json!({
                    "omega": report::point(&o),
                    "omega_prime": report::point(&o2),
                    "first_brocard_triangle": report::triangle(&b),
                })),
            ))
        }
        BrocardWhat::Neuberg => {
            let r = neuberg_check(&t)?;
            Ok((
                pass(r.passed()),
                obj(json!({
                    "omega": report::point(&r.omega),
                    "omega_prime": report::point(&r.omega_prime),
                    "first_brocard_triangle": report::triangle(&r.brocard_triangle),
                    "trihomological": r.trihomological,
                    "third_mode": r.third_mode.map(|m| m.name()),
                    "third_center": report::opt_point(r.third_center.as_ref()),
                    "isotomic_conjugate_of_symmedian": report::point(&r.expected_third),
                    "third_matches": r.third_matches,
                    "homology": report::homology(&r.homology),
                })),
            ))
        }
    }
}

fn explore(what: ExploreWhat, cli: &Cli) -> Result<Done, Failure> {
    let r = match what {
        ExploreWhat::Op1 => open_problem_1_search(cli.trials, cli.seed, cli.bound)?,
        ExploreWhat::Op2 => match &cli.family {
            None => open_problem_2_search(cli.trials, cli.seed, cli.bound)?,
            Some(f) => {
                let family = Problem2Family::from_id(f).ok_or_else(|| {
                    Failure::Input(format!(
                        "unknown family `{f}` (expected one of: {})",
                        Problem2Family::ALL.map(|f| f.id()).join(", ")
                    ))
                })?;
                open_problem_2_search_family(cli.trials, cli.seed, cli.bound, family)?
            }
        },
    };
    Ok((pass(r.counterexamples.is_empty()), obj(report::search(&r))))
}

/// Reads the scene, accepting a report that embeds one under `scene`.
fn load_scene(text: &str) -> Result<Scene, Failure> {
    if let Ok(Value::Object(m)) = serde_json::from_str::<Value>(text) {
        let is_report = m
            .get("schema")
            .and_then(Value::as_str)
            .is_some_and(|s| s == report::REPORT_SCHEMA);
        if is_report {
            let inner = m
                .get("scene")
                .ok_or_else(|| Failure::Input("report does not embed a scene".into()))?;
            return Ok(parse_scene(&inner.to_string())?);
        }
    }
    Ok(parse_scene(text)?)
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match &cli.input {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn write_file(path: &PathBuf, content: &str) -> Result<(), Failure> {
    std::fs::write(path, content)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

/// Runs one parsed command; returns the exit code.
pub fn execute(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> i32 {
    let name = cli.command.name();
    let result: Result<Done, Failure> = (|| match &cli.command {
        Command::Explore { what } => explore(*what, cli),
        Command::Render => {
            let scene = load_scene(&read_input(cli, stdin)?)?;
            let figure = scene.figure.clone().unwrap_or_default();
            let svg = render_svg(&figure, &scene).map_err(Failure::Render)?;
            match &cli.output {
                None => {
                    let _ = stdout.write_all(svg.as_bytes());
                    Ok((EXIT_OK, Map::new()))
                }
                Some(p) => {
                    write_file(p, &svg)?;
                    Ok((
                        EXIT_OK,
                        obj(json!({ "output": p.display().to_string(), "bytes": svg.len() })),
                    ))
                }
            }
        }
        cmd => {
            let scene = load_scene(&read_input(cli, stdin)?)?;
            match cmd {
                Command::Check { what } => check(*what, &scene, cli.all_permutations),
                Command::Construct { what } => construct(*what, &scene),
                Command::Brocard { what } => brocard(*what, &scene),
                _ => unreachable!(),
            }
        }
    })();
    let (code, body) = match result {
        Ok((code, body)) => (code, body),
        Err(f) => (f.code(), f.body()),
    };
    if matches!(cli.command, Command::Render) && cli.output.is_none() && code == EXIT_OK {
        return code;
    }
    let text = emit_report(&envelope(&name, code, status(code), body));
    let _ = stdout.write_all(text.as_bytes());
    if let (Some(p), false) = (&cli.output, matches!(cli.command, Command::Render)) {
        if let Err(f) = write_file(p, &text) {
            let _ = writeln!(std::io::stderr(), "{}", f.body()["error"]["message"]);
            return EXIT_INPUT;
        }
    }
    code
}

/// Parses arguments and runs; usage errors exit with the input-error code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdin, stdout),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_INPUT
                }
            }
        }
    }
}

/// Convenience for callers holding a point pair outside a scene.
pub fn point_pair_scene(abc: &Triangle, p: &ProjPoint, q: &ProjPoint) -> Scene {
    let mut s = Scene::default();
    s.insert_triangle("ABC", ["A", "B", "C"], abc);
    s.insert_point("P", p);
    s.insert_point("Q", q);
    s
}
