use crate::apartness::point_apart;
use crate::error::{Error, Result};
use crate::projective::{collinear, join, meet, ProjPoint};

use super::guaranteed;

/// Four collinear points `A, B, C, D` read off a quadrangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicRange {
    pub a: ProjPoint,
    pub b: ProjPoint,
    pub c: ProjPoint,
    pub d: ProjPoint,
}

/// From a quadrangle `PQRS`: `A = PS·QR`, `B = PR·QS`, and `C`, `D` where
/// `PQ` and `RS` cross `AB`. Then `D = h(A,B;C)`.
pub fn harmonic_from_quadrangle(
    p: &ProjPoint,
    q: &ProjPoint,
    r: &ProjPoint,
    s: &ProjPoint,
) -> Result<HarmonicRange> {
    let v = [p, q, r, s];
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        // Coincident vertices are collinear with anything, so this covers them too.
        if collinear(v[i], v[j], v[k]) {
            return Err(Error::DegenerateQuadrangle("three vertices are collinear"));
        }
    }
    let side = |x: &ProjPoint, y: &ProjPoint| guaranteed(join(x, y), "quadrangle vertices are apart");
    let (pq, pr, ps) = (side(p, q), side(p, r), side(p, s));
    let (qr, qs, rs) = (side(q, r), side(q, s), side(r, s));
    let a = guaranteed(meet(&ps, &qr), "opposite sides are apart");
    let b = guaranteed(meet(&pr, &qs), "opposite sides are apart");
    if !point_apart(&a, &b) {
        return Err(Error::DegenerateQuadrangle("diagonal points coincide"));
    }
    let ab = join(&a, &b)?;
    let c = guaranteed(meet(&pq, &ab), "A ∉ PQ");
    let d = guaranteed(meet(&rs, &ab), "A ∉ RS");
    Ok(HarmonicRange { a, b, c, d })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{pt, worked};
    use super::super::{cross_ratio, harmonic_conjugate, CrossRatio};
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn inverts_the_worked_construction() {
        let range =
            harmonic_from_quadrangle(&pt(2, -1, 1), &pt(0, 1, 0), &pt(0, 1, 1), &pt(2, -1, 2)).unwrap();
        assert_eq!(range, HarmonicRange { a: pt(0, 0, 1), b: pt(1, 0, 1), c: pt(2, 0, 1), d: pt(2, 0, 3) });
        let (a, b, c, aux) = worked();
        let w = harmonic_conjugate(&a, &b, &c, &aux).unwrap();
        let [p, q, r, s] = w.quadrangle();
        assert_eq!(harmonic_from_quadrangle(p, q, r, s).unwrap().d, w.d);
    }

    #[test]
    fn relabelings() {
        let quad = [pt(0, 0, 1), pt(3, 0, 1), pt(1, 2, 1), pt(-1, 5, 2)];
        let base = harmonic_from_quadrangle(&quad[0], &quad[1], &quad[2], &quad[3]).unwrap();
        // P↔Q together with R↔S preserves every role.
        let swapped = harmonic_from_quadrangle(&quad[1], &quad[0], &quad[3], &quad[2]).unwrap();
        assert_eq!(swapped, base);

        // Every labeling yields a harmonic range whose base points are two of
        // the three diagonal points of the quadrangle.
        let diag = |p: &ProjPoint, q: &ProjPoint, r: &ProjPoint, s: &ProjPoint| {
            meet(&join(p, q).unwrap(), &join(r, s).unwrap()).unwrap()
        };
        let [p, q, r, s] = &quad;
        let diagonals = [diag(p, s, q, r), diag(p, r, q, s), diag(p, q, r, s)];
        for perm in permutations() {
            let [i, j, k, l] = perm;
            let range = harmonic_from_quadrangle(&quad[i], &quad[j], &quad[k], &quad[l]).unwrap();
            assert!(diagonals.contains(&range.a) && diagonals.contains(&range.b));
            assert_eq!(
                cross_ratio(&range.a, &range.b, &range.c, &range.d).unwrap(),
                CrossRatio::Finite(Rational::integer(-1)),
                "{perm:?}"
            );
        }
    }

    fn permutations() -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let v = [i, j, k, l];
                        if (0..4).all(|x| v.contains(&x)) {
                            out.push(v);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn degenerate_inputs() {
        let err = harmonic_from_quadrangle(&pt(0, 0, 1), &pt(1, 0, 1), &pt(2, 0, 1), &pt(0, 1, 1));
        assert!(matches!(err, Err(Error::DegenerateQuadrangle(_))));
        let err = harmonic_from_quadrangle(&pt(0, 0, 1), &pt(0, 0, 1), &pt(2, 3, 1), &pt(0, 1, 1));
        assert!(err.is_err());
    }
}
