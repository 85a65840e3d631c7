use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::projective::{incident, join, ProjPoint};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossRatio {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for CrossRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossRatio::Finite(r) => write!(f, "{r}"),
            CrossRatio::Infinity => f.write_str("inf"),
        }
    }
}

/// `(A,B;C,D) = [CA][DB] / ([CB][DA])`, where `[XY]` is the 2x2 bracket of
/// the points projected onto a coordinate chart of the line `AB`.
///
/// For affine parameters this is `(c−a)(d−b) / ((c−b)(d−a))`. The chart
/// drops a coordinate whose line coefficient is nonzero, so the projection
/// is injective on the line.
pub fn cross_ratio(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> Result<CrossRatio> {
    let ab = join(a, b).map_err(|_| Error::BasePointsEqual)?;
    if !(incident(c, &ab) && incident(d, &ab)) {
        return Err(Error::NotCollinear);
    }
    let drop = ab.coeffs().ints().iter().position(|x| !x.is_zero()).expect("nonzero line");
    let chart = |p: &ProjPoint| -> [BigInt; 2] {
        let mut kept = p.coords().ints().iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, x)| x.clone());
        [kept.next().unwrap(), kept.next().unwrap()]
    };
    let (a, b, c, d) = (chart(a), chart(b), chart(c), chart(d));
    let bracket = |x: &[BigInt; 2], y: &[BigInt; 2]| &x[0] * &y[1] - &x[1] * &y[0];

    let num = bracket(&c, &a) * bracket(&d, &b);
    let den = bracket(&c, &b) * bracket(&d, &a);
    match (num.is_zero(), den.is_zero()) {
        (_, false) => Ok(CrossRatio::Finite(Rational::new(num, den))),
        (false, true) => Ok(CrossRatio::Infinity),
        (true, true) => Err(Error::CrossRatioUndefined("C and D coincide with the same base point")),
    }
}

/// Whether `(A,B;C,D) = −1` exactly.
pub fn is_harmonic(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> bool {
    matches!(cross_ratio(a, b, c, d), Ok(CrossRatio::Finite(r)) if r == Rational::integer(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn on_x_axis(x: Rational) -> ProjPoint {
        ProjPoint::affine(x, Rational::zero())
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Plain affine formula on parameters; used as the oracle.
    fn affine_cross_ratio(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Rational {
        (c - a) * (d - b) / ((c - b) * (d - a))
    }

    #[test]
    fn worked_values() {
        let pts = |xs: [Rational; 4]| xs.map(on_x_axis);
        let [a, b, c, d] = pts([r(0, 1), r(1, 1), r(2, 1), r(2, 3)]);
        assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), CrossRatio::Finite(r(-1, 1)));
        let [a, b, c, d] = pts([r(0, 1), r(1, 1), r(2, 1), r(3, 1)]);
        assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), CrossRatio::Finite(r(4, 3)));
        let [a, b, c, _] = pts([r(0, 1), r(1, 1), r(1, 2), r(0, 1)]);
        let ideal = ProjPoint::from_ints(1, 0, 0).unwrap();
        assert_eq!(cross_ratio(&a, &b, &c, &ideal).unwrap(), CrossRatio::Finite(r(-1, 1)));
    }

    #[test]
    fn d_at_a_is_infinite() {
        let [a, b, c] = [r(0, 1), r(1, 1), r(5, 1)].map(on_x_axis);
        assert_eq!(cross_ratio(&a, &b, &c, &a).unwrap(), CrossRatio::Infinity);
        assert!(cross_ratio(&a, &b, &a, &a).is_err());
    }

    #[test]
    fn rejects_non_collinear() {
        let [a, b, c] = [r(0, 1), r(1, 1), r(5, 1)].map(on_x_axis);
        let off = ProjPoint::from_ints(1, 1, 1).unwrap();
        assert_eq!(cross_ratio(&a, &b, &c, &off).unwrap_err(), Error::NotCollinear);
    }

    #[test]
    fn agrees_with_affine_formula_on_a_slanted_line() {
        // Points on y = 3x + 1, parameterized by x.
        let xs = [r(-2, 1), r(1, 3), r(5, 7), r(4, 1)];
        let pts = xs.clone().map(|x| ProjPoint::affine(x.clone(), &(&x * &r(3, 1)) + &r(1, 1)));
        let expected = affine_cross_ratio(&xs[0], &xs[1], &xs[2], &xs[3]);
        assert_eq!(
            cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap(),
            CrossRatio::Finite(expected)
        );
    }
}
