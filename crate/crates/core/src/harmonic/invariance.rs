//! Conditions relating two selections, and the third selection that links
//! any two selections through the special case.

use std::fmt;

use crate::apartness::point_apart;
use crate::error::{Error, Result};
use crate::projective::{join, meet, ProjLine, ProjPoint};

use super::{base_line, guaranteed, harmonic_conjugate, line_through_avoiding, AuxSelection, HarmonicWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialCaseViolation {
    /// `AR′ = AR`
    SameLineAtA,
    /// `BR′ = BR`
    SameLineAtB,
    /// `l′ = l`
    SameLine,
    /// `l′ = CP₁`
    LineThroughP1,
    /// `l′ = CQ₁`
    LineThroughQ1,
}

impl fmt::Display for SpecialCaseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialCaseViolation::SameLineAtA => "AR′ equals AR",
            SpecialCaseViolation::SameLineAtB => "BR′ equals BR",
            SpecialCaseViolation::SameLine => "l′ equals l",
            SpecialCaseViolation::LineThroughP1 => "l′ equals CP₁",
            SpecialCaseViolation::LineThroughQ1 => "l′ equals CQ₁",
        })
    }
}

fn checked_witness(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, aux: &AuxSelection) -> Result<HarmonicWitness> {
    base_line(a, b, c)?;
    if !(point_apart(c, a) && point_apart(c, b)) {
        return Err(Error::CAtBasePoint);
    }
    harmonic_conjugate(a, b, c, aux)
}

/// `P₁ = AP·BR′` and `Q₁ = BQ·AR′` for the witness `w` and another apex.
/// Both meets exist since `A ∉ BR′` and `B ∉ AR′`.
fn cross_points(w: &HarmonicWitness, other_apex: &ProjPoint) -> (ProjPoint, ProjPoint) {
    let ap = guaranteed(join(&w.a, &w.p), "P ≠ A");
    let bq = guaranteed(join(&w.b, &w.q), "Q ≠ B");
    let br2 = guaranteed(join(&w.b, other_apex), "R′ ∉ AB");
    let ar2 = guaranteed(join(&w.a, other_apex), "R′ ∉ AB");
    (guaranteed(meet(&ap, &br2), "AP ≠ BR′"), guaranteed(meet(&bq, &ar2), "BQ ≠ AR′"))
}

fn join_from_c(c: &ProjPoint, x: &ProjPoint, what: &str) -> ProjLine {
    guaranteed(join(c, x), what)
}

/// Violated hypotheses of the special case for selections `(l,R)` and
/// `(l′,R′)`; empty means the two constructions are covered by it.
pub fn special_case_conditions(
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    aux1: &AuxSelection,
    aux2: &AuxSelection,
) -> Result<Vec<SpecialCaseViolation>> {
    let w1 = checked_witness(a, b, c, aux1)?;
    checked_witness(a, b, c, aux2)?;
    let (r1, r2) = (&aux1.apex, &aux2.apex);
    let ar = guaranteed(join(a, r1), "R ∉ AB");
    let br = guaranteed(join(b, r1), "R ∉ AB");
    let ar2 = guaranteed(join(a, r2), "R′ ∉ AB");
    let br2 = guaranteed(join(b, r2), "R′ ∉ AB");
    let (p1, q1) = cross_points(&w1, r2);
    let cp1 = join_from_c(c, &p1, "P₁ ∉ AB");
    let cq1 = join_from_c(c, &q1, "Q₁ ∉ AB");

    let l2 = &aux2.line;
    let mut out = Vec::new();
    if ar2 == ar {
        out.push(SpecialCaseViolation::SameLineAtA);
    }
    if br2 == br {
        out.push(SpecialCaseViolation::SameLineAtB);
    }
    if *l2 == aux1.line {
        out.push(SpecialCaseViolation::SameLine);
    }
    if *l2 == cp1 {
        out.push(SpecialCaseViolation::LineThroughP1);
    }
    if *l2 == cq1 {
        out.push(SpecialCaseViolation::LineThroughQ1);
    }
    Ok(out)
}

/// Builds `(l″, R″)` with `m` through `A` apart from `AB, AR, AR′`, `n`
/// through `B` apart from `AB, BR, BR′`, `R″ = m·n`, and `l″` through `C`
/// apart from `CR″, l, CP₁, CQ₁, l′, CP₂, CQ₂` and from `AB` itself, which
/// every selection must avoid.
///
/// The result satisfies [`special_case_conditions`] against both inputs.
pub fn third_selection(
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    aux1: &AuxSelection,
    aux2: &AuxSelection,
) -> Result<AuxSelection> {
    let w1 = checked_witness(a, b, c, aux1)?;
    let w2 = checked_witness(a, b, c, aux2)?;
    let ab = join(a, b)?;
    let ar1 = guaranteed(join(a, &aux1.apex), "R ∉ AB");
    let ar2 = guaranteed(join(a, &aux2.apex), "R′ ∉ AB");
    let br1 = guaranteed(join(b, &aux1.apex), "R ∉ AB");
    let br2 = guaranteed(join(b, &aux2.apex), "R′ ∉ AB");

    let m = line_through_avoiding(a, &[&ab, &ar1, &ar2]);
    let n = line_through_avoiding(b, &[&ab, &br1, &br2]);
    let apex = guaranteed(meet(&m, &n), "A ∉ n");

    let (p1, q1) = cross_points(&w1, &apex);
    let (p2, q2) = cross_points(&w2, &apex);
    let cr = join_from_c(c, &apex, "R″ ∉ AB");
    let cp1 = join_from_c(c, &p1, "P₁ ≠ C");
    let cq1 = join_from_c(c, &q1, "Q₁ ≠ C");
    let cp2 = join_from_c(c, &p2, "P₂ ≠ C");
    let cq2 = join_from_c(c, &q2, "Q₂ ≠ C");

    let line = line_through_avoiding(c, &[&ab, &cr, &aux1.line, &cp1, &cq1, &aux2.line, &cp2, &cq2]);
    Ok(AuxSelection { line, apex })
}
