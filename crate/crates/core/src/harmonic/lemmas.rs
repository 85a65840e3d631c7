//! Clause-by-clause audit of a witness against the supporting lemmas.
//!
//! Evaluation never fails: a join of coincident points (possible only in a
//! corrupted witness) makes every clause mentioning that line fail.

use std::fmt;

use crate::apartness::{line_apart, outside, point_apart};
use crate::projective::{collinear, join, ProjLine, ProjPoint};

use super::HarmonicWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `P≠A, Q≠B, P≠Q`
    L42a,
    /// `P∉AR, Q∉BR, A∉BR, B∉AR`
    L42b,
    /// `AR≠BR, AP≠AR, AP≠BR, BQ≠BR, BQ≠AR`
    L42c,
    /// Under `C≠A`: `Q∉AB, Q≠S, S≠A, D≠A`
    L45a,
    /// Under `C≠B`: `P∉AB, P≠S, S≠B, D≠B`
    L45b,
    /// Under both: `P,Q,R,S` pairwise apart, off `AB`, no three collinear.
    L46,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaId::L42a => "4.2(a)",
            LemmaId::L42b => "4.2(b)",
            LemmaId::L42c => "4.2(c)",
            LemmaId::L45a => "4.5(a)",
            LemmaId::L45b => "4.5(b)",
            LemmaId::L46 => "4.6",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub description: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub checks: Vec<Clause>,
    /// False only when the lemma's hypothesis does not hold for the witness.
    pub applicable: bool,
}

impl LemmaReport {
    /// Inapplicable lemmas hold vacuously.
    pub fn holds(&self) -> bool {
        !self.applicable || self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Clause> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Named<'a> {
    name: &'static str,
    point: &'a ProjPoint,
}

fn line(p: &Named, q: &Named) -> (String, Option<ProjLine>) {
    (format!("{}{}", p.name, q.name), join(p.point, q.point).ok())
}

fn ne(x: &Named, y: &Named) -> Clause {
    Clause { description: format!("{}≠{}", x.name, y.name), pass: point_apart(x.point, y.point) }
}

fn off(x: &Named, l: &(String, Option<ProjLine>)) -> Clause {
    Clause {
        description: format!("{}∉{}", x.name, l.0),
        pass: l.1.as_ref().is_some_and(|l| outside(x.point, l)),
    }
}

fn lines_ne(l: &(String, Option<ProjLine>), m: &(String, Option<ProjLine>)) -> Clause {
    let pass = match (&l.1, &m.1) {
        (Some(l), Some(m)) => line_apart(l, m),
        _ => false,
    };
    Clause { description: format!("{}≠{}", l.0, m.0), pass }
}

fn noncollinear(x: &Named, y: &Named, z: &Named) -> Clause {
    Clause {
        description: format!("{}{}{} noncollinear", x.name, y.name, z.name),
        pass: !collinear(x.point, y.point, z.point),
    }
}

pub fn lemma_checks(w: &HarmonicWitness) -> Vec<LemmaReport> {
    let a = Named { name: "A", point: &w.a };
    let b = Named { name: "B", point: &w.b };
    let p = Named { name: "P", point: &w.p };
    let q = Named { name: "Q", point: &w.q };
    let r = Named { name: "R", point: &w.aux.apex };
    let s = Named { name: "S", point: &w.s };
    let d = Named { name: "D", point: &w.d };

    let ab = line(&a, &b);
    let ar = line(&a, &r);
    let br = line(&b, &r);
    let ap = line(&a, &p);
    let bq = line(&b, &q);

    let c_apart_a = point_apart(&w.c, &w.a);
    let c_apart_b = point_apart(&w.c, &w.b);

    let mut l46 = Vec::new();
    let quad = [&p, &q, &r, &s];
    for i in 0..4 {
        for j in i + 1..4 {
            l46.push(ne(quad[i], quad[j]));
        }
    }
    for x in quad {
        l46.push(off(x, &ab));
    }
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        l46.push(noncollinear(quad[i], quad[j], quad[k]));
    }

    vec![
        LemmaReport {
            lemma: LemmaId::L42a,
            checks: vec![ne(&p, &a), ne(&q, &b), ne(&p, &q)],
            applicable: true,
        },
        LemmaReport {
            lemma: LemmaId::L42b,
            checks: vec![off(&p, &ar), off(&q, &br), off(&a, &br), off(&b, &ar)],
            applicable: true,
        },
        LemmaReport {
            lemma: LemmaId::L42c,
            checks: vec![
                lines_ne(&ar, &br),
                lines_ne(&ap, &ar),
                lines_ne(&ap, &br),
                lines_ne(&bq, &br),
                lines_ne(&bq, &ar),
            ],
            applicable: true,
        },
        LemmaReport {
            lemma: LemmaId::L45a,
            checks: vec![off(&q, &ab), ne(&q, &s), ne(&s, &a), ne(&d, &a)],
            applicable: c_apart_a,
        },
        LemmaReport {
            lemma: LemmaId::L45b,
            checks: vec![off(&p, &ab), ne(&p, &s), ne(&s, &b), ne(&d, &b)],
            applicable: c_apart_b,
        },
        LemmaReport { lemma: LemmaId::L46, checks: l46, applicable: c_apart_a && c_apart_b },
    ]
}
