//! Standalone SVG figures of evaluated scenes.
//!
//! Geometry is resolved exactly: lines are clipped to the viewport in
//! rational arithmetic and only the final pixel coordinates are rounded, to
//! two decimals, so the output is byte-stable. Points at infinity appear as
//! arrows on the frame pointing in their direction.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::harmonic::HarmonicWitness;
use crate::projective::{join, ProjLine, ProjPoint};
use crate::rational::Rational;
use crate::scene::{Directive, Scene};

const POINT_RADIUS: f64 = 3.5;
const ARROW_LEN: f64 = 18.0;

/// An affine rectangle with positive width and height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Viewport {
    xmin: Rational,
    ymin: Rational,
    xmax: Rational,
    ymax: Rational,
}

impl Viewport {
    pub fn new(xmin: Rational, ymin: Rational, xmax: Rational, ymax: Rational) -> Result<Self> {
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::InvalidConfig("viewport must have positive width and height"));
        }
        Ok(Viewport { xmin, ymin, xmax, ymax })
    }

    pub fn xmin(&self) -> &Rational {
        &self.xmin
    }

    pub fn ymin(&self) -> &Rational {
        &self.ymin
    }

    pub fn xmax(&self) -> &Rational {
        &self.xmax
    }

    pub fn ymax(&self) -> &Rational {
        &self.ymax
    }

    fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.xmin <= *x && *x <= self.xmax && self.ymin <= *y && *y <= self.ymax
    }

    /// Endpoints of the part of `l` inside the rectangle, if it is a segment.
    fn clip(&self, l: &ProjLine) -> Option<[(Rational, Rational); 2]> {
        let [a, b, c] = l.coeffs().rationals();
        let mut hits: Vec<(Rational, Rational)> = Vec::new();
        if !b.is_zero() {
            for x in [&self.xmin, &self.xmax] {
                let y = -(&a * x + &c) / b.clone();
                if self.ymin <= y && y <= self.ymax {
                    hits.push((x.clone(), y));
                }
            }
        }
        if !a.is_zero() {
            for y in [&self.ymin, &self.ymax] {
                let x = -(&b * y + &c) / a.clone();
                if self.xmin <= x && x <= self.xmax {
                    hits.push((x, y.clone()));
                }
            }
        }
        hits.sort();
        hits.dedup();
        match (hits.first(), hits.last()) {
            (Some(p), Some(q)) if p != q => Some([p.clone(), q.clone()]),
            _ => None,
        }
    }

    /// Where the ray from the centre in direction `(dx, dy)` leaves the rectangle.
    fn exit_point(&self, dx: &Rational, dy: &Rational) -> (Rational, Rational) {
        let two = Rational::integer(2);
        let cx = (&self.xmin + &self.xmax) / two.clone();
        let cy = (&self.ymin + &self.ymax) / two;
        let mut t: Option<Rational> = None;
        for (d, lo, hi, c) in [(dx, &self.xmin, &self.xmax, &cx), (dy, &self.ymin, &self.ymax, &cy)] {
            if d.is_zero() {
                continue;
            }
            let edge = if d.is_negative() { lo } else { hi };
            let s = (edge - c) / d.clone();
            if t.as_ref().is_none_or(|t| s < *t) {
                t = Some(s);
            }
        }
        let t = t.expect("direction is nonzero");
        (cx + &t * dx, cy + &t * dy)
    }
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport::new((-1).into(), (-2).into(), 3.into(), 2.into()).expect("non-degenerate")
    }
}

/// `xmin,ymin,xmax,ymax` with rational entries.
impl FromStr for Viewport {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s.split(',').map(|p| p.trim().parse::<Rational>()).collect::<Result<Vec<_>>>()?;
        let [xmin, ymin, xmax, ymax]: [Rational; 4] =
            parts.try_into().map_err(|_| Error::InvalidConfig("viewport needs four values xmin,ymin,xmax,ymax"))?;
        Viewport::new(xmin, ymin, xmax, ymax)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    viewport: Viewport,
    width_px: u32,
    height_px: u32,
    pub point_labels: bool,
    pub line_labels: bool,
}

impl RenderOptions {
    pub fn new(viewport: Viewport, width_px: u32, height_px: u32) -> Result<Self> {
        if width_px == 0 || height_px == 0 {
            return Err(Error::InvalidConfig("image size must be positive"));
        }
        Ok(RenderOptions { viewport, width_px, height_px, point_labels: true, line_labels: true })
    }

    pub fn with_labels(mut self, points: bool, lines: bool) -> Self {
        self.point_labels = points;
        self.line_labels = lines;
        self
    }

    pub fn viewport(&self) -> &Viewport {
        &self.viewport
    }

    pub fn width_px(&self) -> u32 {
        self.width_px
    }

    pub fn height_px(&self) -> u32 {
        self.height_px
    }

    fn to_px(&self, x: &Rational, y: &Rational) -> (f64, f64) {
        let v = &self.viewport;
        let w = Rational::from(self.width_px as i64);
        let h = Rational::from(self.height_px as i64);
        let px = (x - &v.xmin) * w / (&v.xmax - &v.xmin);
        let py = (&v.ymax - y) * h / (&v.ymax - &v.ymin);
        (px.to_f64(), py.to_f64())
    }
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions::new(Viewport::default(), 600, 600).expect("positive size")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub svg: String,
    /// One message per element left out of the figure.
    pub warnings: Vec<String>,
}

struct Named<T> {
    value: T,
    names: Vec<String>,
}

/// Elements to draw, merged by value in first-seen order.
#[derive(Default)]
struct Figure {
    points: Vec<Named<ProjPoint>>,
    lines: Vec<Named<ProjLine>>,
}

impl Figure {
    fn add_point(&mut self, name: &str, p: &ProjPoint, derived: bool) {
        add(&mut self.points, name, p, derived);
    }

    fn add_line(&mut self, name: &str, l: &ProjLine, derived: bool) {
        add(&mut self.lines, name, l, derived);
    }

    fn is_named(&self, name: &str) -> bool {
        let mut lists = self.points.iter().map(|e| &e.names).chain(self.lines.iter().map(|e| &e.names));
        lists.any(|names| names.iter().any(|n| n == name))
    }

    fn fresh(&self, scene: &Scene, owner: &str, name: &str) -> String {
        if scene.is_defined(name) || self.is_named(name) {
            format!("{owner}.{name}")
        } else {
            name.to_string()
        }
    }

    fn add_witness(&mut self, scene: &Scene, owner: &str, w: &HarmonicWitness) {
        let vertices = [("P", &w.p), ("Q", &w.q), ("R", &w.aux.apex), ("S", &w.s)];
        for (letter, p) in vertices {
            let name = self.fresh(scene, owner, letter);
            self.add_point(&name, p, true);
        }
        self.add_sides(scene, owner, vertices);
    }

    fn add_sides(&mut self, scene: &Scene, owner: &str, vertices: [(&str, &ProjPoint); 4]) {
        for i in 0..4 {
            for j in i + 1..4 {
                let (ni, pi) = vertices[i];
                let (nj, pj) = vertices[j];
                if let Ok(side) = join(pi, pj) {
                    let name = self.fresh(scene, owner, &format!("{ni}{nj}"));
                    self.add_line(&name, &side, true);
                }
            }
        }
    }
}

/// Derived names only label elements the scene does not already show.
fn add<T: PartialEq + Clone>(items: &mut Vec<Named<T>>, name: &str, value: &T, derived: bool) {
    match items.iter_mut().find(|e| e.value == *value) {
        Some(_) if derived => {}
        Some(e) => e.names.push(name.to_string()),
        None => items.push(Named { value: value.clone(), names: vec![name.to_string()] }),
    }
}

fn collect(scene: &Scene) -> Figure {
    let mut fig = Figure::default();
    for (name, p) in scene.points() {
        fig.add_point(name, p, false);
    }
    for (name, l) in scene.lines() {
        fig.add_line(name, l, false);
    }
    for d in scene.directives() {
        match d {
            Directive::Conjugate { name, .. } => {
                let w = scene.witnesses().find(|(n, _)| n == name).map(|(_, w)| w).expect("evaluated conjugate");
                fig.add_witness(scene, name, w);
            }
            Directive::Quadrangle { outputs, vertices } => {
                let pts: Vec<&ProjPoint> =
                    vertices.iter().map(|n| scene.point(n).expect("evaluated quadrangle")).collect();
                let named = [0, 1, 2, 3].map(|i| (vertices[i].as_str(), pts[i]));
                fig.add_sides(scene, &outputs[3], named);
            }
            _ => {}
        }
    }
    fig
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn render_svg(scene: &Scene, opts: &RenderOptions) -> Rendered {
    let fig = collect(scene);
    let vp = &opts.viewport;
    let (w, h) = (opts.width_px, opts.height_px);
    let mut warnings = Vec::new();
    let mut body = String::new();

    for item in &fig.lines {
        let label = escape(&item.names.join(","));
        if item.value == ProjLine::at_infinity() {
            warnings.push(format!("line {label} is the line at infinity; omitted"));
            continue;
        }
        let Some([(x1, y1), (x2, y2)]) = vp.clip(&item.value) else {
            warnings.push(format!("line {label} misses the viewport; omitted"));
            continue;
        };
        let (p1, p2) = (opts.to_px(&x1, &y1), opts.to_px(&x2, &y2));
        writeln!(
            body,
            r##"<line class="line" data-name="{label}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#3465a4" stroke-width="1.2"/>"##,
            num(p1.0),
            num(p1.1),
            num(p2.0),
            num(p2.1)
        )
        .unwrap();
        if opts.line_labels {
            let (lx, ly) = (p1.0 + 0.85 * (p2.0 - p1.0), p1.1 + 0.85 * (p2.1 - p1.1));
            writeln!(
                body,
                r##"<text class="label line-label" x="{}" y="{}" font-size="12" fill="#3465a4">{label}</text>"##,
                num(lx + 4.0),
                num(ly - 4.0)
            )
            .unwrap();
        }
    }

    for item in &fig.points {
        let label = escape(&item.names.join(","));
        let p = &item.value;
        let anchor = match p.to_affine() {
            Some((x, y)) => {
                if !vp.contains(&x, &y) {
                    warnings.push(format!("point {label} = {p} lies outside the viewport; omitted"));
                    continue;
                }
                let (cx, cy) = opts.to_px(&x, &y);
                writeln!(
                    body,
                    r#"<circle class="point" data-name="{label}" cx="{}" cy="{}" r="{POINT_RADIUS}" fill="black"/>"#,
                    num(cx),
                    num(cy)
                )
                .unwrap();
                (cx + 5.0, cy - 5.0)
            }
            None => {
                let [dx, dy, _] = p.coords().rationals();
                let (ex, ey) = vp.exit_point(&dx, &dy);
                let tip = opts.to_px(&ex, &ey);
                body.push_str(&arrow(&label, tip, opts.to_px(&Rational::zero(), &Rational::zero()), opts.to_px(&dx, &dy)));
                (tip.0 - 22.0 * (tip.0 - w as f64 / 2.0).signum(), tip.1 - 10.0 * (tip.1 - h as f64 / 2.0).signum())
            }
        };
        if opts.point_labels {
            writeln!(
                body,
                r#"<text class="label point-label" x="{}" y="{}" font-size="13">{label}</text>"#,
                num(anchor.0),
                num(anchor.1)
            )
            .unwrap();
        }
    }

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(
        svg,
        r#"<rect class="frame" x="0" y="0" width="{w}" height="{h}" fill="white" stroke="black" stroke-width="1"/>"#
    )
    .unwrap();
    svg.push_str(&body);
    svg.push_str("</svg>\n");
    Rendered { svg, warnings }
}

/// Arrow ending at `tip`, pointing along the pixel image of the direction
/// (`origin` and `toward` are the pixel images of the origin and of the direction vector).
fn arrow(label: &str, tip: (f64, f64), origin: (f64, f64), toward: (f64, f64)) -> String {
    let (dx, dy) = (toward.0 - origin.0, toward.1 - origin.1);
    let len = dx.hypot(dy);
    let (ux, uy) = (dx / len, dy / len);
    let tail = (tip.0 - ARROW_LEN * ux, tip.1 - ARROW_LEN * uy);
    let base = (tip.0 - 7.0 * ux, tip.1 - 7.0 * uy);
    let (left, right) = ((base.0 - 4.0 * uy, base.1 + 4.0 * ux), (base.0 + 4.0 * uy, base.1 - 4.0 * ux));
    format!(
        concat!(
            r#"<g class="point ideal" data-name="{}">"#,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.5"/>"#,
            r#"<polygon points="{},{} {},{} {},{}" fill="black"/></g>"#,
            "\n"
        ),
        label,
        num(tail.0),
        num(tail.1),
        num(base.0),
        num(base.1),
        num(tip.0),
        num(tip.1),
        num(left.0),
        num(left.1),
        num(right.0),
        num(right.1)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::parse_scene;

    const WORKED: &str = "point A = [0:0:1]\npoint B = [1:0:1]\npoint C = [2:0:1]\n\
        line l = [1:0:-2]\npoint R = [0:1:1]\nconjugate D = h(A,B;C) with l R\n";

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn worked_example_glyphs() {
        let scene = parse_scene(WORKED).unwrap();
        let out = render_svg(&scene, &RenderOptions::default());
        // Q = [0:1:0] is drawn as an arrow; everything else is a dot.
        assert_eq!(count(&out.svg, r#"class="point""#), 7);
        assert_eq!(count(&out.svg, r#"class="point ideal""#), 1);
        for name in ["A", "B", "C", "D", "P", "Q", "R", "S"] {
            assert!(out.svg.contains(&format!(r#"data-name="{name}""#)), "{name}");
        }
        // PQ is l itself.
        assert_eq!(count(&out.svg, r#"class="line""#), 6);
        assert!(out.svg.contains(r#"data-name="l""#));
        assert!(out.warnings.is_empty(), "{:?}", out.warnings);
    }

    #[test]
    fn empty_scene_is_just_the_frame() {
        let out = render_svg(&parse_scene("").unwrap(), &RenderOptions::default());
        assert!(out.svg.starts_with("<?xml"));
        assert!(out.svg.trim_end().ends_with("</svg>"));
        assert_eq!(count(&out.svg, "<rect"), 1);
        assert_eq!(out.svg.lines().count(), 4);
    }

    #[test]
    fn clipping_is_exact() {
        let vp = Viewport::default();
        // y = x through the corner region: enters at (-1,-1), leaves at (2,2).
        let l = ProjLine::from_ints(1, -1, 0).unwrap();
        let [p, q] = vp.clip(&l).unwrap();
        assert_eq!(p, (Rational::integer(-1), Rational::integer(-1)));
        assert_eq!(q, (Rational::integer(2), Rational::integer(2)));
        // Vertical x = 3 runs along the right edge.
        let [p, q] = vp.clip(&ProjLine::from_ints(1, 0, -3).unwrap()).unwrap();
        assert_eq!((p.0, q.0), (Rational::integer(3), Rational::integer(3)));
        assert!(vp.clip(&ProjLine::from_ints(1, 0, -5).unwrap()).is_none());
        assert!(vp.clip(&ProjLine::from_ints(1, 1, 3).unwrap()).is_none(), "touches only the corner");
    }

    #[test]
    fn out_of_view_elements_warn() {
        let scene = parse_scene("point F = [9:9:1]\nline m = [0:1:-7]\nline inf = [0:0:1]\n").unwrap();
        let out = render_svg(&scene, &RenderOptions::default());
        assert_eq!(out.warnings.len(), 3);
        assert_eq!(count(&out.svg, "class=\"point"), 0);
        assert_eq!(count(&out.svg, "class=\"line\""), 0);
    }

    #[test]
    fn midpoint_conjugate_is_an_arrow() {
        let text = "point A = [0:0:1]\npoint B = [1:0:1]\npoint M = [1:0:2]\nconjugate D = h(A,B;M)\n";
        let out = render_svg(&parse_scene(text).unwrap(), &RenderOptions::default());
        assert!(out.svg.contains(r#"<g class="point ideal" data-name="D">"#));
    }

    #[test]
    fn labels_can_be_switched_off() {
        let scene = parse_scene(WORKED).unwrap();
        let opts = RenderOptions::default().with_labels(false, false);
        assert!(!render_svg(&scene, &opts).svg.contains("<text"));
    }

    #[test]
    fn viewport_parsing() {
        let v: Viewport = "-1/2, 0, 3, 5/2".parse().unwrap();
        assert_eq!(v.xmin(), &Rational::new(-1, 2));
        assert!("0,0,0,1".parse::<Viewport>().is_err());
        assert!("0,0,1".parse::<Viewport>().is_err());
        assert!(RenderOptions::new(Viewport::default(), 0, 10).is_err());
    }

    #[test]
    fn deterministic() {
        let scene = parse_scene(WORKED).unwrap();
        let opts = RenderOptions::default();
        assert_eq!(render_svg(&scene, &opts), render_svg(&scene, &opts));
    }
}
