//! Distinct triangles, perspectivity from a center or an axis, and
//! verifiers for Desargues's theorem in both directions.
//!
//! Concurrency of three lines (and collinearity of three points) is
//! decided by an exact 3x3 determinant before the center (axis) is
//! computed as the meet (join) of the first two.

use crate::apartness::{line_apart, outside, point_apart};
use crate::error::{Error, Result};
use crate::projective::{collinear, concurrent, join, meet, ProjLine, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    vertices: [ProjPoint; 3],
    /// `sides[i]` is opposite `vertices[i]`: `s23`, `s13`, `s12`.
    sides: [ProjLine; 3],
}

impl Triangle {
    pub fn new(v1: ProjPoint, v2: ProjPoint, v3: ProjPoint) -> Result<Self> {
        if collinear(&v1, &v2, &v3) {
            return Err(Error::DegenerateTriangle("vertices are collinear"));
        }
        let sides = [join(&v2, &v3)?, join(&v1, &v3)?, join(&v1, &v2)?];
        Ok(Triangle { vertices: [v1, v2, v3], sides })
    }

    pub fn vertices(&self) -> &[ProjPoint; 3] {
        &self.vertices
    }

    pub fn sides(&self) -> &[ProjLine; 3] {
        &self.sides
    }
}

/// Corresponding vertices pairwise apart and corresponding sides pairwise apart.
pub fn triangles_distinct(t1: &Triangle, t2: &Triangle) -> bool {
    (0..3).all(|i| point_apart(&t1.vertices[i], &t2.vertices[i]) && line_apart(&t1.sides[i], &t2.sides[i]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePair {
    t1: Triangle,
    t2: Triangle,
}

impl TrianglePair {
    pub fn new(t1: Triangle, t2: Triangle) -> Result<Self> {
        if !triangles_distinct(&t1, &t2) {
            return Err(Error::TrianglesNotDistinct);
        }
        Ok(TrianglePair { t1, t2 })
    }

    pub fn first(&self) -> &Triangle {
        &self.t1
    }

    pub fn second(&self) -> &Triangle {
        &self.t2
    }

    /// Lines `v_i v_i′` joining corresponding vertices.
    pub fn vertex_joins(&self) -> [ProjLine; 3] {
        [0, 1, 2].map(|i| join(&self.t1.vertices[i], &self.t2.vertices[i]).expect("distinct pair"))
    }

    /// Points `s_i·s_i′` where corresponding sides meet.
    pub fn side_meets(&self) -> [ProjPoint; 3] {
        [0, 1, 2].map(|i| meet(&self.t1.sides[i], &self.t2.sides[i]).expect("distinct pair"))
    }

    fn all_sides(&self) -> impl Iterator<Item = (String, &ProjLine)> {
        let names = ["s23", "s13", "s12"];
        (0..3)
            .map(move |i| (names[i].to_string(), &self.t1.sides[i]))
            .chain((0..3).map(move |i| (format!("{}′", names[i]), &self.t2.sides[i])))
    }

    fn all_vertices(&self) -> impl Iterator<Item = (String, &ProjPoint)> {
        (0..3)
            .map(move |i| (format!("v{}", i + 1), &self.t1.vertices[i]))
            .chain((0..3).map(move |i| (format!("v{}′", i + 1), &self.t2.vertices[i])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideCondition {
    pub description: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PerspectivityReport {
    pub from_center: Option<ProjPoint>,
    pub from_axis: Option<ProjLine>,
    pub side_conditions: Vec<SideCondition>,
}

impl PerspectivityReport {
    pub fn all_pass(&self) -> bool {
        self.side_conditions.iter().all(|c| c.pass)
    }
}

fn cond(description: impl Into<String>, pass: bool) -> SideCondition {
    SideCondition { description: description.into(), pass }
}

pub fn perspective_from_center(pair: &TrianglePair) -> PerspectivityReport {
    let joins = pair.vertex_joins();
    let mut conditions = vec![
        cond("v1v1′ ≠ v2v2′", line_apart(&joins[0], &joins[1])),
        cond("v1v1′ ≠ v3v3′", line_apart(&joins[0], &joins[2])),
        cond("v2v2′ ≠ v3v3′", line_apart(&joins[1], &joins[2])),
    ];
    let is_concurrent = concurrent(&joins[0], &joins[1], &joins[2]);
    conditions.push(cond("vertex joins concurrent", is_concurrent));
    let center = if is_concurrent { meet(&joins[0], &joins[1]).ok() } else { None };
    if let Some(o) = &center {
        for (name, side) in pair.all_sides() {
            conditions.push(cond(format!("O ∉ {name}"), outside(o, side)));
        }
    }
    let ok = conditions.iter().all(|c| c.pass);
    PerspectivityReport { from_center: center.filter(|_| ok), from_axis: None, side_conditions: conditions }
}

pub fn perspective_from_axis(pair: &TrianglePair) -> PerspectivityReport {
    let meets = pair.side_meets();
    let mut conditions = vec![
        cond("s23·s23′ ≠ s13·s13′", point_apart(&meets[0], &meets[1])),
        cond("s23·s23′ ≠ s12·s12′", point_apart(&meets[0], &meets[2])),
        cond("s13·s13′ ≠ s12·s12′", point_apart(&meets[1], &meets[2])),
    ];
    let is_collinear = collinear(&meets[0], &meets[1], &meets[2]);
    conditions.push(cond("side meets collinear", is_collinear));
    let axis = if is_collinear { join(&meets[0], &meets[1]).ok() } else { None };
    if let Some(l) = &axis {
        for (name, v) in pair.all_vertices() {
            conditions.push(cond(format!("{name} ∉ axis"), outside(v, l)));
        }
    }
    let ok = conditions.iter().all(|c| c.pass);
    PerspectivityReport { from_center: None, from_axis: axis.filter(|_| ok), side_conditions: conditions }
}

/// Perspective from a center implies perspective from an axis.
///
/// Errors when the pair is not perspective from a center.
pub fn check_desargues(pair: &TrianglePair) -> Result<bool> {
    if perspective_from_center(pair).from_center.is_none() {
        return Err(Error::NotPerspective("a center"));
    }
    Ok(perspective_from_axis(pair).from_axis.is_some())
}

/// Perspective from an axis implies perspective from a center.
pub fn check_converse(pair: &TrianglePair) -> Result<bool> {
    if perspective_from_axis(pair).from_axis.is_none() {
        return Err(Error::NotPerspective("an axis"));
    }
    Ok(perspective_from_center(pair).from_center.is_some())
}
