//! Apartness, "outside", and the constructive choice procedures.
//!
//! Over rational coordinates every constructive disjunction is decidable.
//! Each affirmative answer carries an [`ApartnessWitness`] whose nonzero
//! certificate can be recomputed from its two operands.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::projective::{meet, HomTriple, ProjLine, ProjPoint};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApartnessKind {
    PointApart,
    LineApart,
    PointOutsideLine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApartnessWitness {
    pub kind: ApartnessKind,
    pub left: HomTriple,
    pub right: HomTriple,
    /// Nonzero: a cross-product component for apartness, the incidence
    /// dot product for "outside".
    pub certificate: Rational,
}

impl ApartnessWitness {
    fn compute(kind: ApartnessKind, left: &HomTriple, right: &HomTriple) -> BigInt {
        match kind {
            ApartnessKind::PointApart | ApartnessKind::LineApart => left
                .cross(right)
                .into_iter()
                .find(|c| !c.is_zero())
                .unwrap_or_default(),
            ApartnessKind::PointOutsideLine => left.dot(right),
        }
    }

    fn certify(kind: ApartnessKind, left: &HomTriple, right: &HomTriple) -> Option<Self> {
        let value = Self::compute(kind, left, right);
        (!value.is_zero()).then(|| ApartnessWitness {
            kind,
            left: left.clone(),
            right: right.clone(),
            certificate: Rational::from(value),
        })
    }

    /// Recomputes the certificate from the operands and checks it.
    pub fn verify(&self) -> bool {
        !self.certificate.is_zero()
            && Rational::from(Self::compute(self.kind, &self.left, &self.right)) == self.certificate
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotransChoice {
    pub branch: Branch,
    pub witness: ApartnessWitness,
}

pub fn point_apart(p: &ProjPoint, q: &ProjPoint) -> bool {
    witness_points_apart(p, q).is_some()
}

pub fn line_apart(l: &ProjLine, m: &ProjLine) -> bool {
    witness_lines_apart(l, m).is_some()
}

/// `P ∉ l` in the strict sense: the incidence product is nonzero.
pub fn outside(p: &ProjPoint, l: &ProjLine) -> bool {
    witness_outside(p, l).is_some()
}

pub fn witness_points_apart(p: &ProjPoint, q: &ProjPoint) -> Option<ApartnessWitness> {
    ApartnessWitness::certify(ApartnessKind::PointApart, p.coords(), q.coords())
}

pub fn witness_lines_apart(l: &ProjLine, m: &ProjLine) -> Option<ApartnessWitness> {
    ApartnessWitness::certify(ApartnessKind::LineApart, l.coeffs(), m.coeffs())
}

pub fn witness_outside(p: &ProjPoint, l: &ProjLine) -> Option<ApartnessWitness> {
    ApartnessWitness::certify(ApartnessKind::PointOutsideLine, p.coords(), l.coeffs())
}

/// Given `P ≠ Q`, decides `X ≠ P` (Left) or `X ≠ Q` (Right). Left wins ties.
pub fn cotransitive_pick(x: &ProjPoint, p: &ProjPoint, q: &ProjPoint) -> Result<CotransChoice> {
    if !point_apart(p, q) {
        return Err(Error::CotransitivityNotApart);
    }
    if let Some(witness) = witness_points_apart(x, p) {
        return Ok(CotransChoice { branch: Branch::Left, witness });
    }
    let witness = witness_points_apart(x, q).expect("X = P and P ≠ Q imply X ≠ Q");
    Ok(CotransChoice { branch: Branch::Right, witness })
}

/// Axiom C7: for distinct lines `l`, `m` and `P ≠ l·m`, decides `P ∉ l`
/// (Left) or `P ∉ m` (Right). Left wins ties.
pub fn c7_pick(l: &ProjLine, m: &ProjLine, p: &ProjPoint) -> Result<CotransChoice> {
    let common = meet(l, m).map_err(|_| Error::C7Hypothesis("lines l and m must be apart"))?;
    if !point_apart(p, &common) {
        return Err(Error::C7Hypothesis("P must be apart from l·m"));
    }
    if let Some(witness) = witness_outside(p, l) {
        return Ok(CotransChoice { branch: Branch::Left, witness });
    }
    let witness = witness_outside(p, m).expect("P on l and P ≠ l·m imply P ∉ m");
    Ok(CotransChoice { branch: Branch::Right, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn point_apart_examples() {
        assert!(!point_apart(&pt(0, 0, 1), &pt(0, 0, 1)));
        assert!(point_apart(&pt(0, 0, 1), &pt(1, 0, 1)));
        assert!(!point_apart(&pt(2, 0, 2), &pt(1, 0, 1)));
    }

    #[test]
    fn outside_examples() {
        assert!(outside(&pt(1, 1, 1), &ln(0, 1, 0)));
        assert!(!outside(&pt(1, 0, 1), &ln(0, 1, 0)));
        assert!(outside(&pt(0, 1, 1), &ln(1, 0, -2)));
    }

    #[test]
    fn cotransitive_examples() {
        let (p, q) = (pt(0, 0, 1), pt(1, 0, 1));
        let c = cotransitive_pick(&pt(0, 0, 1), &p, &q).unwrap();
        assert_eq!(c.branch, Branch::Right);
        assert_eq!(c.witness.right, *q.coords());
        assert!(c.witness.verify());
        assert_eq!(cotransitive_pick(&pt(1, 0, 1), &p, &q).unwrap().branch, Branch::Left);
        assert_eq!(cotransitive_pick(&pt(5, 7, 1), &p, &q).unwrap().branch, Branch::Left);
        assert_eq!(
            cotransitive_pick(&pt(5, 7, 1), &p, &p).unwrap_err().to_string(),
            "cotransitivity requires apart alternatives"
        );
    }

    #[test]
    fn c7_examples() {
        let (l, m) = (ln(0, 1, 0), ln(1, 0, 0));
        let c = c7_pick(&l, &m, &pt(1, 0, 1)).unwrap();
        assert_eq!(c.branch, Branch::Right);
        assert_eq!(c.witness.kind, ApartnessKind::PointOutsideLine);
        assert_eq!(c.witness.certificate, Rational::one());
        assert_eq!(c7_pick(&l, &m, &pt(0, 1, 1)).unwrap().branch, Branch::Left);
        assert_eq!(c7_pick(&l, &m, &pt(1, 1, 1)).unwrap().branch, Branch::Left);
    }

    #[test]
    fn c7_names_violated_hypothesis() {
        let err = c7_pick(&ln(0, 1, 0), &ln(0, 2, 0), &pt(1, 1, 1)).unwrap_err();
        assert!(err.to_string().contains("lines l and m must be apart"));
        let err = c7_pick(&ln(0, 1, 0), &ln(1, 0, 0), &pt(0, 0, 3)).unwrap_err();
        assert!(err.to_string().contains("P must be apart from l·m"));
    }

    #[test]
    fn tampered_witness_fails_verification() {
        let mut w = witness_outside(&pt(1, 1, 1), &ln(0, 1, 0)).unwrap();
        assert!(w.verify());
        w.certificate = Rational::integer(7);
        assert!(!w.verify());
    }
}
