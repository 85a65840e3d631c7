//! Random valid configurations.
//!
//! Affine coordinates are rationals `n/d` with `|n| ≤ bound` and
//! `1 ≤ d ≤ bound`. Edge cases (points at infinity, `C = A`, `C = B`,
//! `C` at infinity) are each injected with probability 1/16.

use num_bigint::BigInt;
use rand::Rng;

use crate::apartness::{outside, point_apart};
use crate::desargues::{perspective_from_axis, perspective_from_center, Triangle, TrianglePair};
use crate::error::{Error, Result};
use crate::harmonic::{validate_aux, AuxSelection};
use crate::projective::{join, meet, HomTriple, ProjLine, ProjPoint};
use crate::rational::Rational;

use super::TrialConfig;

/// Retry cap for every rejection sampler.
pub const MAX_ATTEMPTS: usize = 10_000;

fn one_in_16<R: Rng + ?Sized>(rng: &mut R) -> bool {
    rng.random_range(0..16) == 0
}

pub fn gen_rational<R: Rng + ?Sized>(bound: i64, rng: &mut R) -> Rational {
    Rational::new(rng.random_range(-bound..=bound), rng.random_range(1..=bound))
}

fn nonzero_int<R: Rng + ?Sized>(bound: i64, rng: &mut R) -> i64 {
    loop {
        let n = rng.random_range(-bound..=bound);
        if n != 0 {
            return n;
        }
    }
}

/// An affine point, or with probability 1/16 a point at infinity.
pub fn gen_point<R: Rng + ?Sized>(bound: i64, rng: &mut R) -> ProjPoint {
    if one_in_16(rng) {
        loop {
            let (x, y) = (rng.random_range(-bound..=bound), rng.random_range(-bound..=bound));
            if let Ok(p) = ProjPoint::from_ints(x, y, 0) {
                return p;
            }
        }
    }
    ProjPoint::affine(gen_rational(bound, rng), gen_rational(bound, rng))
}

pub fn gen_line<R: Rng + ?Sized>(bound: i64, rng: &mut R) -> ProjLine {
    loop {
        let (p, q) = (gen_point(bound, rng), gen_point(bound, rng));
        if let Ok(l) = join(&p, &q) {
            return l;
        }
    }
}

/// `λ·x + μ·y` on the canonical integer representatives.
pub(crate) fn combine(x: &HomTriple, lambda: i64, y: &HomTriple, mu: i64) -> Result<HomTriple> {
    let (l, m) = (BigInt::from(lambda), BigInt::from(mu));
    let [x0, x1, x2] = x.ints();
    let [y0, y1, y2] = y.ints();
    HomTriple::from_bigints([&l * x0 + &m * y0, &l * x1 + &m * y1, &l * x2 + &m * y2])
}

/// Base data `(A, B, C)` with `A ≠ B` and `C ∈ AB`.
pub fn gen_base<R: Rng + ?Sized>(config: &TrialConfig, rng: &mut R) -> (ProjPoint, ProjPoint, ProjPoint) {
    let bound = config.coord_bound();
    let a = gen_point(bound, rng);
    let b = loop {
        let b = gen_point(bound, rng);
        if point_apart(&a, &b) {
            break b;
        }
    };
    let c = match rng.random_range(0..16) {
        0 => a.clone(),
        1 => b.clone(),
        2 => {
            let ab = join(&a, &b).expect("apart");
            meet(&ab, &ProjLine::at_infinity()).unwrap_or_else(|_| generic_on(&a, &b, bound, rng))
        }
        _ => generic_on(&a, &b, bound, rng),
    };
    (a, b, c)
}

fn generic_on<R: Rng + ?Sized>(a: &ProjPoint, b: &ProjPoint, bound: i64, rng: &mut R) -> ProjPoint {
    loop {
        let (l, m) = (rng.random_range(-bound..=bound), rng.random_range(-bound..=bound));
        if let Ok(t) = combine(a.coords(), l, b.coords(), m) {
            return t.into();
        }
    }
}

/// Base data with `C` apart from both base points.
pub fn gen_base_apart<R: Rng + ?Sized>(config: &TrialConfig, rng: &mut R) -> (ProjPoint, ProjPoint, ProjPoint) {
    loop {
        let (a, b, c) = gen_base(config, rng);
        if point_apart(&c, &a) && point_apart(&c, &b) {
            return (a, b, c);
        }
    }
}

/// Rejection-samples `l = CX` for random `X` and a random `R`.
pub fn gen_valid_aux<R: Rng + ?Sized>(
    config: &TrialConfig,
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    rng: &mut R,
) -> Result<AuxSelection> {
    let bound = config.coord_bound();
    for _ in 0..MAX_ATTEMPTS {
        let Ok(line) = join(c, &gen_point(bound, rng)) else { continue };
        let aux = AuxSelection::new(line, gen_point(bound, rng));
        if validate_aux(a, b, c, &aux)?.is_empty() {
            return Ok(aux);
        }
    }
    Err(Error::GeneratorExhausted(MAX_ATTEMPTS, "valid auxiliary selection"))
}

fn gen_triangle<R: Rng + ?Sized>(bound: i64, rng: &mut R) -> Option<Triangle> {
    Triangle::new(gen_point(bound, rng), gen_point(bound, rng), gen_point(bound, rng)).ok()
}

/// A pair perspective from a random center: `v_i′ = λ_i·v_i + μ_i·O`.
pub fn gen_center_pair<R: Rng + ?Sized>(config: &TrialConfig, rng: &mut R) -> Result<(ProjPoint, TrianglePair)> {
    let bound = config.coord_bound();
    for _ in 0..MAX_ATTEMPTS {
        let center = gen_point(bound, rng);
        let Some(t1) = gen_triangle(bound, rng) else { continue };
        let images: Result<Vec<ProjPoint>> = t1
            .vertices()
            .iter()
            .map(|v| combine(v.coords(), rng.random_range(1..=bound), center.coords(), nonzero_int(bound, rng)).map(ProjPoint::from))
            .collect();
        let Ok(images) = images else { continue };
        let [u1, u2, u3]: [ProjPoint; 3] = images.try_into().expect("three");
        let Ok(t2) = Triangle::new(u1, u2, u3) else { continue };
        let Ok(pair) = TrianglePair::new(t1, t2) else { continue };
        if perspective_from_center(&pair).from_center.is_some() {
            return Ok((center, pair));
        }
    }
    Err(Error::GeneratorExhausted(MAX_ATTEMPTS, "center-perspective pair"))
}

/// A pair perspective from a random axis: `s_i′ = λ_i·s_i + μ_i·L`.
pub fn gen_axis_pair<R: Rng + ?Sized>(config: &TrialConfig, rng: &mut R) -> Result<(ProjLine, TrianglePair)> {
    let bound = config.coord_bound();
    for _ in 0..MAX_ATTEMPTS {
        let axis = gen_line(bound, rng);
        let Some(t1) = gen_triangle(bound, rng) else { continue };
        if !t1.vertices().iter().all(|v| outside(v, &axis)) {
            continue;
        }
        let sides: Result<Vec<ProjLine>> = t1
            .sides()
            .iter()
            .map(|s| combine(s.coeffs(), rng.random_range(1..=bound), axis.coeffs(), nonzero_int(bound, rng)).map(ProjLine::from))
            .collect();
        let Ok(sides) = sides else { continue };
        // sides = [s23′, s13′, s12′]; vertex i is where the two sides through it meet.
        let vertices = [meet(&sides[2], &sides[1]), meet(&sides[2], &sides[0]), meet(&sides[1], &sides[0])];
        let [Ok(u1), Ok(u2), Ok(u3)] = vertices else { continue };
        let Ok(t2) = Triangle::new(u1, u2, u3) else { continue };
        let Ok(pair) = TrianglePair::new(t1, t2) else { continue };
        if perspective_from_axis(&pair).from_axis.is_some() {
            return Ok((axis, pair));
        }
    }
    Err(Error::GeneratorExhausted(MAX_ATTEMPTS, "axis-perspective pair"))
}
