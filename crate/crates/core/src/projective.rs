//! Homogeneous coordinates over the rationals: canonical forms, join, meet
//! and incidence.
//!
//! Points and lines share one representation. A [`HomTriple`] is always
//! stored in canonical form (coprime integers, first nonzero entry
//! positive), so two triples name the same element exactly when they are
//! equal as values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomTriple([BigInt; 3]);

impl HomTriple {
    /// Scales `coords` to the canonical representative of its class.
    pub fn canonicalize(coords: [Rational; 3]) -> Result<Self> {
        let lcm = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = coords.map(|c| c.numer() * (&lcm / c.denom()));
        Self::from_bigints(ints)
    }

    pub fn from_bigints(mut ints: [BigInt; 3]) -> Result<Self> {
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if gcd.is_zero() {
            return Err(Error::DegenerateCoordinates);
        }
        let lead_negative = ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        for c in ints.iter_mut() {
            *c /= &gcd;
            if lead_negative {
                *c = -&*c;
            }
        }
        Ok(HomTriple(ints))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_bigints([a.into(), b.into(), c.into()])
    }

    /// The coprime integer coordinates.
    pub fn ints(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn rationals(&self) -> [Rational; 3] {
        self.0.clone().map(Rational::from)
    }

    pub fn dot(&self, other: &HomTriple) -> BigInt {
        dot(&self.0, &other.0)
    }

    pub fn cross(&self, other: &HomTriple) -> [BigInt; 3] {
        cross(&self.0, &other.0)
    }
}

pub(crate) fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Determinant of the 3x3 matrix with rows `a`, `b`, `c`.
pub fn det3(a: &HomTriple, b: &HomTriple, c: &HomTriple) -> BigInt {
    dot(&a.0, &cross(&b.0, &c.0))
}

/// Free-function form of [`HomTriple::canonicalize`].
pub fn canonicalize(coords: [Rational; 3]) -> Result<HomTriple> {
    HomTriple::canonicalize(coords)
}

impl fmt::Display for HomTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for HomTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HomTriple {
    type Err = Error;

    /// Parses `[a:b:c]` with rational components.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidTriple(s.to_string()))?;
        let parts: Vec<&str> = inner.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::InvalidTriple(s.to_string()));
        };
        HomTriple::canonicalize([a.trim().parse()?, b.trim().parse()?, c.trim().parse()?])
    }
}

macro_rules! triple_newtype {
    ($name:ident, $accessor:ident) => {
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(HomTriple);

        impl $name {
            pub fn new(triple: HomTriple) -> Self {
                $name(triple)
            }

            pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
                HomTriple::from_ints(a, b, c).map($name)
            }

            pub fn canonicalize(coords: [Rational; 3]) -> Result<Self> {
                HomTriple::canonicalize(coords).map($name)
            }

            pub fn $accessor(&self) -> &HomTriple {
                &self.0
            }

            pub fn into_triple(self) -> HomTriple {
                self.0
            }
        }

        impl From<HomTriple> for $name {
            fn from(t: HomTriple) -> Self {
                $name(t)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.0, f)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.0, f)
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                s.parse().map($name)
            }
        }
    };
}

triple_newtype!(ProjPoint, coords);
triple_newtype!(ProjLine, coeffs);

impl ProjPoint {
    /// The affine point `(x, y)`, i.e. `[x:y:1]`.
    pub fn affine(x: Rational, y: Rational) -> Self {
        ProjPoint::canonicalize([x, y, Rational::one()]).expect("last coordinate is nonzero")
    }

    /// Whether the point lies on the line at infinity.
    pub fn is_ideal(&self) -> bool {
        self.0 .0[2].is_zero()
    }

    /// Affine coordinates, or `None` for a point at infinity.
    pub fn to_affine(&self) -> Option<(Rational, Rational)> {
        let [x, y, w] = self.0.rationals();
        let x = x.checked_div(&w)?;
        let y = y.checked_div(&w)?;
        Some((x, y))
    }
}

impl ProjLine {
    pub fn at_infinity() -> Self {
        ProjLine::from_ints(0, 0, 1).expect("nonzero")
    }
}

/// The line through two apart points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    HomTriple::from_bigints(p.0.cross(&q.0))
        .map(ProjLine)
        .map_err(|_| Error::JoinOfEqualPoints)
}

/// The common point of two apart lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    HomTriple::from_bigints(l.0.cross(&m.0))
        .map(ProjPoint)
        .map_err(|_| Error::MeetOfEqualLines)
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    p.0.dot(&l.0).is_zero()
}

/// Whether three points lie on one line.
pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(&p.0, &q.0, &r.0).is_zero()
}

/// Whether three lines pass through one point.
pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> bool {
    det3(&l.0, &m.0, &n.0).is_zero()
}
