//! Line-oriented scene files.
//!
//! ```text
//! # the worked configuration
//! point A = [0:0:1]
//! point B = [1:0:1]
//! point C = [2:0:1]
//! line l = [1:0:-2]
//! point R = [0:1:1]
//! conjugate D = h(A,B;C) with l R
//! line ab = join A B
//! point X = meet ab l
//! quadrangle A2 B2 C2 D2 = P Q R S
//! ```
//!
//! `#` starts a comment and `;` separates statements sharing a line. A
//! `conjugate` without `with` uses [`auto_select_aux`](crate::harmonic::auto_select_aux).
//! Every name is defined once and referenced only after its definition.

mod parse;

use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::error::Error;
use crate::harmonic::{auto_select_aux, harmonic_conjugate, harmonic_from_quadrangle, AuxSelection, HarmonicWitness};
use crate::projective::{join, meet, ProjLine, ProjPoint};

pub use parse::parse_scene;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Directive {
    Point { name: String, value: ProjPoint },
    Line { name: String, value: ProjLine },
    Join { name: String, p: String, q: String },
    Meet { name: String, l: String, m: String },
    Conjugate { name: String, a: String, b: String, c: String, aux: Option<(String, String)> },
    /// Outputs `A B C D` read off the quadrangle `P Q R S`.
    Quadrangle { outputs: [String; 4], vertices: [String; 4] },
}

impl Directive {
    /// Names this directive introduces.
    pub fn defines(&self) -> Vec<&str> {
        match self {
            Directive::Point { name, .. }
            | Directive::Line { name, .. }
            | Directive::Join { name, .. }
            | Directive::Meet { name, .. }
            | Directive::Conjugate { name, .. } => vec![name.as_str()],
            Directive::Quadrangle { outputs, .. } => outputs.iter().map(String::as_str).collect(),
        }
    }
}

impl fmt::Display for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Directive::Point { name, value } => write!(f, "point {name} = {value}"),
            Directive::Line { name, value } => write!(f, "line {name} = {value}"),
            Directive::Join { name, p, q } => write!(f, "line {name} = join {p} {q}"),
            Directive::Meet { name, l, m } => write!(f, "point {name} = meet {l} {m}"),
            Directive::Conjugate { name, a, b, c, aux } => {
                write!(f, "conjugate {name} = h({a},{b};{c})")?;
                if let Some((l, r)) = aux {
                    write!(f, " with {l} {r}")?;
                }
                Ok(())
            }
            Directive::Quadrangle { outputs, vertices } => {
                write!(f, "quadrangle {} = {}", outputs.join(" "), vertices.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SceneErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid rational in {0:?}")]
    InvalidRational(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("`{0}` is referenced before its definition")]
    ForwardReference(String),
    #[error("`{0}` is already defined")]
    DuplicateName(String),
    #[error("`{name}` is not a {expected}")]
    WrongKind { name: String, expected: &'static str },
    #[error("{0}")]
    Geometry(Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct SceneError {
    pub line: usize,
    pub kind: SceneErrorKind,
}

/// A constructed quadrangle together with the range read off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrangleFigure {
    pub vertices: [ProjPoint; 4],
    pub outputs: [String; 4],
}

/// An evaluated scene: its directives plus every defined element.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scene {
    directives: Vec<Directive>,
    points: IndexMap<String, ProjPoint>,
    lines: IndexMap<String, ProjLine>,
    witnesses: IndexMap<String, HarmonicWitness>,
    quadrangles: Vec<QuadrangleFigure>,
}

impl Scene {
    /// Evaluates directives in order; error line numbers are 1-based indices.
    pub fn from_directives(directives: Vec<Directive>) -> Result<Scene, SceneError> {
        let numbered: Vec<(usize, Directive)> = directives.into_iter().enumerate().map(|(i, d)| (i + 1, d)).collect();
        Scene::evaluate(numbered)
    }

    pub(crate) fn evaluate(numbered: Vec<(usize, Directive)>) -> Result<Scene, SceneError> {
        let mut first_definition: IndexMap<&str, usize> = IndexMap::new();
        for (line, d) in &numbered {
            for name in d.defines() {
                first_definition.entry(name).or_insert(*line);
            }
        }
        let mut scene = Scene::default();
        for (line, d) in &numbered {
            scene
                .apply(d, *line, &first_definition)
                .map_err(|kind| SceneError { line: *line, kind })?;
        }
        scene.directives = numbered.into_iter().map(|(_, d)| d).collect();
        Ok(scene)
    }

    fn missing(&self, name: &str, line: usize, defs: &IndexMap<&str, usize>) -> SceneErrorKind {
        match defs.get(name) {
            Some(&at) if at >= line => SceneErrorKind::ForwardReference(name.to_string()),
            _ => SceneErrorKind::UnknownName(name.to_string()),
        }
    }

    fn get_point(&self, name: &str, line: usize, defs: &IndexMap<&str, usize>) -> Result<ProjPoint, SceneErrorKind> {
        if let Some(p) = self.points.get(name) {
            return Ok(p.clone());
        }
        if self.lines.contains_key(name) {
            return Err(SceneErrorKind::WrongKind { name: name.to_string(), expected: "point" });
        }
        Err(self.missing(name, line, defs))
    }

    fn get_line(&self, name: &str, line: usize, defs: &IndexMap<&str, usize>) -> Result<ProjLine, SceneErrorKind> {
        if let Some(l) = self.lines.get(name) {
            return Ok(l.clone());
        }
        if self.points.contains_key(name) {
            return Err(SceneErrorKind::WrongKind { name: name.to_string(), expected: "line" });
        }
        Err(self.missing(name, line, defs))
    }

    fn define_point(&mut self, name: &str, p: ProjPoint) -> Result<(), SceneErrorKind> {
        self.check_fresh(name)?;
        self.points.insert(name.to_string(), p);
        Ok(())
    }

    fn define_line(&mut self, name: &str, l: ProjLine) -> Result<(), SceneErrorKind> {
        self.check_fresh(name)?;
        self.lines.insert(name.to_string(), l);
        Ok(())
    }

    fn check_fresh(&self, name: &str) -> Result<(), SceneErrorKind> {
        if self.points.contains_key(name) || self.lines.contains_key(name) {
            return Err(SceneErrorKind::DuplicateName(name.to_string()));
        }
        Ok(())
    }

    fn apply(&mut self, d: &Directive, line: usize, defs: &IndexMap<&str, usize>) -> Result<(), SceneErrorKind> {
        let geo = SceneErrorKind::Geometry;
        match d {
            Directive::Point { name, value } => self.define_point(name, value.clone()),
            Directive::Line { name, value } => self.define_line(name, value.clone()),
            Directive::Join { name, p, q } => {
                let (p, q) = (self.get_point(p, line, defs)?, self.get_point(q, line, defs)?);
                self.define_line(name, join(&p, &q).map_err(geo)?)
            }
            Directive::Meet { name, l, m } => {
                let (l, m) = (self.get_line(l, line, defs)?, self.get_line(m, line, defs)?);
                self.define_point(name, meet(&l, &m).map_err(geo)?)
            }
            Directive::Conjugate { name, a, b, c, aux } => {
                let a = self.get_point(a, line, defs)?;
                let b = self.get_point(b, line, defs)?;
                let c = self.get_point(c, line, defs)?;
                let aux = match aux {
                    Some((l, r)) => AuxSelection::new(self.get_line(l, line, defs)?, self.get_point(r, line, defs)?),
                    None => auto_select_aux(&a, &b, &c, &[]).map_err(geo)?,
                };
                let w = harmonic_conjugate(&a, &b, &c, &aux).map_err(geo)?;
                self.define_point(name, w.d.clone())?;
                self.witnesses.insert(name.clone(), w);
                Ok(())
            }
            Directive::Quadrangle { outputs, vertices } => {
                let v = vertices
                    .iter()
                    .map(|n| self.get_point(n, line, defs))
                    .collect::<Result<Vec<_>, _>>()?;
                let range = harmonic_from_quadrangle(&v[0], &v[1], &v[2], &v[3]).map_err(geo)?;
                for (name, p) in outputs.iter().zip([range.a, range.b, range.c, range.d]) {
                    self.define_point(name, p)?;
                }
                self.quadrangles.push(QuadrangleFigure {
                    vertices: [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
                    outputs: outputs.clone(),
                });
                Ok(())
            }
        }
    }

    pub fn directives(&self) -> &[Directive] {
        &self.directives
    }

    pub fn point(&self, name: &str) -> Option<&ProjPoint> {
        self.points.get(name)
    }

    pub fn line(&self, name: &str) -> Option<&ProjLine> {
        self.lines.get(name)
    }

    /// Named points in definition order.
    pub fn points(&self) -> impl Iterator<Item = (&str, &ProjPoint)> {
        self.points.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn lines(&self) -> impl Iterator<Item = (&str, &ProjLine)> {
        self.lines.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// The witness behind each `conjugate` directive, keyed by its name.
    pub fn witnesses(&self) -> impl Iterator<Item = (&str, &HarmonicWitness)> {
        self.witnesses.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn quadrangles(&self) -> &[QuadrangleFigure] {
        &self.quadrangles
    }

    pub fn is_defined(&self, name: &str) -> bool {
        self.points.contains_key(name) || self.lines.contains_key(name)
    }

    /// All directives on one line, separated by `; `.
    pub fn to_single_line(&self) -> String {
        join_directives(&self.directives)
    }
}

pub fn join_directives(directives: &[Directive]) -> String {
    directives.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl fmt::Display for Scene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.directives {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}
