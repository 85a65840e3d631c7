//! The harmonic conjugate construction and everything needed to audit it.
//!
//! Given apart base points `A`, `B` and a point `C` on `AB`, a selection
//! `(l, R)` with `C ∈ l ≠ AB` and `R` outside both `AB` and `l` yields
//!
//! ```text
//! P = BR·l,  Q = AR·l,  S = AP·BQ,  D = AB·RS
//! ```
//!
//! and `D = h(A,B;C)`. The result does not depend on the selection; the
//! [`invariance`] module holds the machinery used to check that, and
//! [`cross_ratio`] provides an independent analytic oracle.
//!
//! The plane has infinitely many lines through every point, so the
//! "at least eight lines" hypothesis of the invariance argument always holds.

mod cross_ratio;
mod invariance;
mod lemmas;
mod quadrangle;

use std::fmt;

use crate::apartness::{outside, point_apart};
use crate::error::{Error, Result};
use crate::projective::{incident, join, meet, ProjLine, ProjPoint};

pub use cross_ratio::{cross_ratio, is_harmonic, CrossRatio};
pub use invariance::{special_case_conditions, third_selection, SpecialCaseViolation};
pub use lemmas::{lemma_checks, Clause, LemmaId, LemmaReport};
pub use quadrangle::{harmonic_from_quadrangle, HarmonicRange};

/// Auxiliary elements `(l, R)` for one run of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AuxSelection {
    /// The line `l` through `C`.
    pub line: ProjLine,
    /// The point `R` off both `AB` and `l`.
    pub apex: ProjPoint,
}

impl AuxSelection {
    pub fn new(line: ProjLine, apex: ProjPoint) -> Self {
        AuxSelection { line, apex }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxViolation {
    COffLine,
    LineIsBase,
    ApexOnBase,
    ApexOnLine,
}

impl fmt::Display for AuxViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuxViolation::COffLine => "C not on l",
            AuxViolation::LineIsBase => "l equals AB",
            AuxViolation::ApexOnBase => "R on AB",
            AuxViolation::ApexOnLine => "R on l",
        })
    }
}

/// The full record of one construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicWitness {
    pub a: ProjPoint,
    pub b: ProjPoint,
    pub c: ProjPoint,
    pub aux: AuxSelection,
    pub p: ProjPoint,
    pub q: ProjPoint,
    pub s: ProjPoint,
    pub d: ProjPoint,
}

impl HarmonicWitness {
    /// The quadrangle `P, Q, R, S` of the construction.
    pub fn quadrangle(&self) -> [&ProjPoint; 4] {
        [&self.p, &self.q, &self.aux.apex, &self.s]
    }

    /// Whether rerunning the construction on the recorded inputs reproduces
    /// every recorded point.
    pub fn is_consistent(&self) -> bool {
        harmonic_conjugate(&self.a, &self.b, &self.c, &self.aux).is_ok_and(|w| w == *self)
    }
}

/// Checks `A ≠ B` and `C ∈ AB`, returning `AB`.
pub fn base_line(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<ProjLine> {
    let ab = join(a, b).map_err(|_| Error::BasePointsEqual)?;
    if !incident(c, &ab) {
        return Err(Error::BaseNotCollinear);
    }
    Ok(ab)
}

pub fn validate_aux(
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    aux: &AuxSelection,
) -> Result<Vec<AuxViolation>> {
    let ab = base_line(a, b, c)?;
    Ok(violations_against(&ab, c, aux))
}

fn violations_against(ab: &ProjLine, c: &ProjPoint, aux: &AuxSelection) -> Vec<AuxViolation> {
    let mut out = Vec::new();
    if !incident(c, &aux.line) {
        out.push(AuxViolation::COffLine);
    }
    if aux.line == *ab {
        out.push(AuxViolation::LineIsBase);
    }
    if !outside(&aux.apex, ab) {
        out.push(AuxViolation::ApexOnBase);
    }
    if !outside(&aux.apex, &aux.line) {
        out.push(AuxViolation::ApexOnLine);
    }
    out
}

/// Unwraps a join/meet whose nondegeneracy the construction guarantees.
pub(crate) fn guaranteed<T>(r: Result<T>, what: &str) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("construction invariant violated ({what}): {e}"),
    }
}

pub fn harmonic_conjugate(
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    aux: &AuxSelection,
) -> Result<HarmonicWitness> {
    let ab = base_line(a, b, c)?;
    let violations = violations_against(&ab, c, aux);
    if !violations.is_empty() {
        return Err(Error::InvalidSelection(violations.iter().map(ToString::to_string).collect()));
    }
    let r = &aux.apex;
    let br = guaranteed(join(b, r), "B ∉ AR");
    let ar = guaranteed(join(a, r), "A ∉ BR");
    let p = guaranteed(meet(&br, &aux.line), "BR ≠ l");
    let q = guaranteed(meet(&ar, &aux.line), "AR ≠ l");
    let ap = guaranteed(join(a, &p), "P ≠ A");
    let bq = guaranteed(join(b, &q), "Q ≠ B");
    let s = guaranteed(meet(&ap, &bq), "AP ≠ BQ");
    let rs = guaranteed(join(r, &s), "R ∉ AB so R ≠ S");
    let d = guaranteed(meet(&ab, &rs), "RS ≠ AB");
    Ok(HarmonicWitness { a: a.clone(), b: b.clone(), c: c.clone(), aux: aux.clone(), p, q, s, d })
}

/// Affine integer points `(x, y)` ordered ring by ring around the origin,
/// lexicographically within each ring.
pub fn spiral() -> impl Iterator<Item = ProjPoint> {
    (0i64..).flat_map(|k| {
        (-k..=k).flat_map(move |x| {
            (-k..=k)
                .filter(move |y| x.abs().max(y.abs()) == k)
                .map(move |y| ProjPoint::from_ints(x, y, 1).expect("affine"))
        })
    })
}

/// First line `join(through, s)` over the spiral that is apart from every
/// line in `avoid`. Only finitely many lines are excluded, so this ends.
pub(crate) fn line_through_avoiding(through: &ProjPoint, avoid: &[&ProjLine]) -> ProjLine {
    spiral()
        .filter(|s| point_apart(s, through))
        .map(|s| join(through, &s).expect("apart"))
        .find(|l| avoid.iter().all(|m| *m != l))
        .expect("spiral is infinite")
}

/// Deterministic selection: `R` is the first spiral point off `AB`, `l` the
/// first line through `C` (over the spiral) passing validation and apart
/// from every line in `avoid`.
pub fn auto_select_aux(
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    avoid: &[ProjLine],
) -> Result<AuxSelection> {
    let ab = base_line(a, b, c)?;
    let apex = spiral().find(|r| outside(r, &ab)).expect("spiral is infinite");
    let mut excluded: Vec<&ProjLine> = avoid.iter().collect();
    excluded.push(&ab);
    let line = spiral()
        .filter(|s| point_apart(s, c))
        .map(|s| join(c, &s).expect("apart"))
        .find(|l| outside(&apex, l) && excluded.iter().all(|m| *m != l))
        .expect("spiral is infinite");
    let aux = AuxSelection { line, apex };
    debug_assert!(violations_against(&ab, c, &aux).is_empty());
    Ok(aux)
}
