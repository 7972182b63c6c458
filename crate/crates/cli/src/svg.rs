//! Deterministic SVG figures. All geometry stays exact until the final
//! decimalization to six places (round half to even).

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;
use trihom::kernel::{ProjLine, ProjPoint, Rational};

use crate::scene::{Element, ElementKind, FigureSpec, Scene, SceneError};

const WIDTH: i64 = 800;
const LEGEND_ROW: i64 = 18;
const LABEL_DX: i64 = 6;
const LABEL_DY: i64 = -6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("viewport is empty")]
    EmptyViewport,
    #[error(transparent)]
    Scene(#[from] SceneError),
}

/// Exact value rounded half-to-even to six decimals.
pub fn decimal6(r: &Rational) -> String {
    let scale = BigInt::from(1_000_000);
    let n = r.numer() * &scale;
    let d = r.denom().clone();
    let (q, rem) = n.div_mod_floor(&d);
    let twice = &rem * 2;
    let q = if twice > d || (twice == d && q.is_odd()) {
        q + 1
    } else {
        q
    };
    let neg = q.is_negative();
    let (int, frac) = q.abs().div_rem(&scale);
    format!("{}{}.{:06}", if neg { "-" } else { "" }, int, frac)
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
}

type Pt = (Rational, Rational);

fn affine(p: &ProjPoint) -> Option<Pt> {
    p.to_affine()
}

fn direction(p: &ProjPoint) -> Pt {
    let [x, y, _] = p.to_rationals();
    (x, y)
}

/// Clips `o + t·d` for `t` in `[lo, hi]` (`None` = unbounded) to the box.
fn clip(
    o: &Pt,
    d: &Pt,
    lo: Option<Rational>,
    hi: Option<Rational>,
    v: &[Rational; 4],
) -> Option<(Pt, Pt)> {
    let (mut lo, mut hi) = (lo, hi);
    let checks = [
        (-d.0.clone(), &o.0 - &v[0]),
        (d.0.clone(), &v[2] - &o.0),
        (-d.1.clone(), &o.1 - &v[1]),
        (d.1.clone(), &v[3] - &o.1),
    ];
    for (p, q) in checks {
        if p.is_zero() {
            if q.is_negative() {
                return None;
            }
            continue;
        }
        let t = q / &p;
        if p.is_negative() {
            lo = Some(lo.map_or(t.clone(), |l| l.max(t)));
        } else {
            hi = Some(hi.map_or(t.clone(), |h| h.min(t)));
        }
    }
    let (lo, hi) = (lo?, hi?);
    if lo >= hi {
        return None;
    }
    let at = |t: &Rational| (&o.0 + &d.0 * t, &o.1 + &d.1 * t);
    Some((at(&lo), at(&hi)))
}

fn line_parts(l: &ProjLine) -> Option<(Pt, Pt)> {
    let [a, b, c] = l.to_rationals();
    if a.is_zero() && b.is_zero() {
        return None;
    }
    let o = if !a.is_zero() {
        (-&c / &a, rat(0))
    } else {
        (rat(0), -&c / &b)
    };
    // Orient left to right (upward when vertical).
    let d = if b.is_negative() || (b.is_zero() && a.is_positive()) {
        (-b, a)
    } else {
        (b, -a)
    };
    Some((o, d))
}

struct Canvas {
    v: [Rational; 4],
    scale: Rational,
    height: Rational,
    body: String,
    legend: Vec<String>,
}

impl Canvas {
    fn px(&self, x: &Rational) -> Rational {
        (x - &self.v[0]) * &self.scale
    }

    fn py(&self, y: &Rational) -> Rational {
        (&self.v[3] - y) * &self.scale
    }

    fn x(&self, x: &Rational) -> String {
        decimal6(&self.px(x))
    }

    fn y(&self, y: &Rational) -> String {
        decimal6(&self.py(y))
    }

    fn inside(&self, p: &Pt) -> bool {
        self.v[0] <= p.0 && p.0 <= self.v[2] && self.v[1] <= p.1 && p.1 <= self.v[3]
    }

    fn segment(&mut self, class: &str, a: &Pt, b: &Pt) {
        let _ = writeln!(
            self.body,
            "  <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            self.x(&a.0),
            self.y(&a.1),
            self.x(&b.0),
            self.y(&b.1)
        );
    }

    fn clipped(&mut self, class: &str, o: &Pt, d: &Pt, lo: Option<Rational>, hi: Option<Rational>) {
        if let Some((a, b)) = clip(o, d, lo, hi, &self.v) {
            self.segment(class, &a, &b);
        }
    }

    /// Segment between two projective points; an endpoint at infinity
    /// turns it into a ray.
    fn between(&mut self, class: &str, what: &str, p: &ProjPoint, q: &ProjPoint) {
        match (affine(p), affine(q)) {
            (Some(a), Some(b)) => {
                let d = (&b.0 - &a.0, &b.1 - &a.1);
                self.clipped(class, &a, &d, Some(rat(0)), Some(rat(1)));
            }
            (Some(a), None) => self.clipped(class, &a, &direction(q), Some(rat(0)), None),
            (None, Some(b)) => self.clipped(class, &b, &direction(p), Some(rat(0)), None),
            (None, None) => self
                .legend
                .push(format!("{what} lies on the line at infinity")),
        }
    }

    fn full_line(&mut self, class: &str, what: &str, l: &ProjLine) {
        match line_parts(l) {
            Some((o, d)) => self.clipped(class, &o, &d, None, None),
            None => self.legend.push(format!("{what} is the line at infinity")),
        }
    }

    fn point(&mut self, name: &str, label: &str, p: &ProjPoint) {
        let Some(a) = affine(p) else {
            self.legend
                .push(format!("{label} at infinity, direction {p}"));
            return;
        };
        if !self.inside(&a) {
            return;
        }
        let (x, y) = (&a.0, &a.1);
        let _ = writeln!(
            self.body,
            "  <circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3\"><title>{}</title></circle>",
            self.x(x),
            self.y(y),
            escape(name)
        );
        if !label.is_empty() {
            let _ = writeln!(
                self.body,
                "  <text class=\"label\" x=\"{}\" y=\"{}\">{}</text>",
                decimal6(&(self.px(x) + rat(LABEL_DX))),
                decimal6(&(self.py(y) + rat(LABEL_DY))),
                escape(label)
            );
        }
    }
}

fn auto_elements(scene: &Scene) -> Vec<Element> {
    let classes = ["base", "t1", "t2", "t3"];
    let mut out = Vec::new();
    for name in scene.lines.keys() {
        out.push(Element {
            kind: ElementKind::Line,
            refs: vec![name.clone()],
            class: None,
            label: None,
        });
    }
    for (i, name) in scene.triangles.keys().enumerate() {
        out.push(Element {
            kind: ElementKind::Triangle,
            refs: vec![name.clone()],
            class: Some(classes[i % classes.len()].to_string()),
            label: None,
        });
    }
    for name in scene.points.keys() {
        out.push(Element {
            kind: ElementKind::Point,
            refs: vec![name.clone()],
            class: None,
            label: None,
        });
    }
    out
}

/// Bounding box of the finite points drawn, padded by a tenth of its larger
/// side (or by 1 when the box is a single point).
fn auto_viewport(scene: &Scene, elements: &[Element]) -> Result<[Rational; 4], SceneError> {
    let mut pts: Vec<Pt> = Vec::new();
    for e in elements {
        let names: Vec<String> = match e.kind {
            ElementKind::Line => Vec::new(),
            ElementKind::Triangle => scene.triangle(&e.refs[0])?.to_vec(),
            _ => e.refs.clone(),
        };
        for n in names {
            if let Some(a) = affine(&scene.point(&n)?) {
                pts.push(a);
            }
        }
    }
    if pts.is_empty() {
        return Ok([rat(-1), rat(-1), rat(1), rat(1)]);
    }
    let min = |f: fn(&Pt) -> &Rational| pts.iter().map(f).min().unwrap().clone();
    let max = |f: fn(&Pt) -> &Rational| pts.iter().map(f).max().unwrap().clone();
    let (x0, y0, x1, y1) = (min(|p| &p.0), min(|p| &p.1), max(|p| &p.0), max(|p| &p.1));
    let side = (&x1 - &x0).max(&y1 - &y0);
    let pad = if side.is_zero() {
        rat(1)
    } else {
        side / rat(10)
    };
    Ok([&x0 - &pad, &y0 - &pad, &x1 + &pad, &y1 + &pad])
}

pub fn render_svg(figure: &FigureSpec, scene: &Scene) -> Result<String, RenderError> {
    let elements = figure
        .elements
        .clone()
        .unwrap_or_else(|| auto_elements(scene));
    let v = match &figure.viewport {
        Some(v) => v.clone(),
        None => auto_viewport(scene, &elements)?,
    };
    if v[0] >= v[2] || v[1] >= v[3] {
        return Err(RenderError::EmptyViewport);
    }
    let scale = rat(WIDTH) / (&v[2] - &v[0]);
    let height = (&v[3] - &v[1]) * &scale;
    let mut c = Canvas {
        v,
        scale,
        height,
        body: String::new(),
        legend: Vec::new(),
    };
    let mut triangle_index = 0;
    for kind in [
        ElementKind::Line,
        ElementKind::Join,
        ElementKind::Triangle,
        ElementKind::Segment,
        ElementKind::Point,
    ] {
        for e in elements.iter().filter(|e| e.kind == kind) {
            let r = &e.refs;
            match kind {
                ElementKind::Line => {
                    let class = e.class.as_deref().unwrap_or("aux");
                    c.full_line(class, &r[0], &scene.line(&r[0])?);
                }
                ElementKind::Join => {
                    let class = e.class.as_deref().unwrap_or("aux");
                    let (p, q) = (scene.point(&r[0])?, scene.point(&r[1])?);
                    match trihom::kernel::join(&p, &q) {
                        Ok(l) => c.full_line(class, &format!("{}{}", r[0], r[1]), &l),
                        Err(_) => c
                            .legend
                            .push(format!("{}{} undefined: points coincide", r[0], r[1])),
                    }
                }
                ElementKind::Triangle => {
                    let default = ["base", "t1", "t2", "t3"][triangle_index % 4];
                    triangle_index += 1;
                    let class = e.class.as_deref().unwrap_or(default);
                    let names = scene.triangle(&r[0])?;
                    let vs = scene.triangle_vertices(&r[0])?;
                    for i in 0..3 {
                        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                        c.between(
                            class,
                            &format!("side {}{}", names[j], names[k]),
                            &vs[j],
                            &vs[k],
                        );
                    }
                }
                ElementKind::Segment => {
                    let class = e.class.as_deref().unwrap_or("aux");
                    let (p, q) = (scene.point(&r[0])?, scene.point(&r[1])?);
                    c.between(class, &format!("segment {}{}", r[0], r[1]), &p, &q);
                }
                ElementKind::Point => {
                    let label = e.label.clone().unwrap_or_else(|| r[0].clone());
                    c.point(&r[0], &label, &scene.point(&r[0])?);
                }
            }
        }
    }
    Ok(finish(c, figure.title.as_deref()))
}

fn finish(c: Canvas, title: Option<&str>) -> String {
    let extra = rat(LEGEND_ROW * (c.legend.len() as i64 + 1));
    let total = &c.height + &extra;
    let (w, h) = (decimal6(&rat(WIDTH)), decimal6(&total));
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    if let Some(t) = title {
        let _ = writeln!(s, "  <title>{}</title>", escape(t));
    }
    s.push_str(concat!(
        "  <style>\n",
        "    line { stroke-width: 1.5; fill: none; }\n",
        "    .frame { fill: none; stroke: #999999; stroke-width: 1; }\n",
        "    .base { stroke: #000000; stroke-width: 2; }\n",
        "    .t1 { stroke: #1f5fbf; }\n",
        "    .t2 { stroke: #c0392b; }\n",
        "    .t3 { stroke: #2e8b57; }\n",
        "    .aux { stroke: #7f7f7f; stroke-width: 0.75; }\n",
        "    .centers { stroke: #8e44ad; stroke-dasharray: 6 4; }\n",
        "    .point { fill: #000000; stroke: none; }\n",
        "    .label, .legend { font-family: serif; font-size: 14px; fill: #000000; }\n",
        "  </style>\n"
    ));
    let _ = writeln!(
        s,
        "  <rect class=\"frame\" x=\"0.000000\" y=\"0.000000\" width=\"{w}\" height=\"{}\"/>",
        decimal6(&c.height)
    );
    s.push_str(&c.body);
    for (i, text) in c.legend.iter().enumerate() {
        let y = &c.height + rat(LEGEND_ROW * (i as i64 + 1));
        let _ = writeln!(
            s,
            "  <text class=\"legend\" x=\"4.000000\" y=\"{}\">{}</text>",
            decimal6(&y),
            escape(text)
        );
    }
    s.push_str("</svg>\n");
    s
}
