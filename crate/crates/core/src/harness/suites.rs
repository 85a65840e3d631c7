//! One function per suite; each runs a single trial and returns the
//! failing configuration as scene text.

use rand::Rng;

use crate::apartness::{c7_pick, cotransitive_pick, outside, point_apart, Branch};
use crate::desargues::{check_converse, check_desargues, perspective_from_axis, perspective_from_center};
use crate::error::Error;
use crate::harmonic::{
    harmonic_conjugate, harmonic_from_quadrangle, is_harmonic, lemma_checks, special_case_conditions,
    third_selection, AuxSelection, HarmonicRange, HarmonicWitness,
};
use crate::projective::{incident, meet, HomTriple, ProjLine, ProjPoint};
use crate::rational::Rational;
use crate::scene::{join_directives, Directive};

use super::generate::{gen_base, gen_base_apart, gen_line, gen_point, gen_rational, gen_valid_aux};
use super::{Suite, TrialConfig, TrialRng};

pub(super) type Trial = fn(&TrialConfig, &mut TrialRng) -> Result<(), String>;

pub(super) fn trial_fn(suite: Suite) -> Trial {
    match suite {
        Suite::Invariance => invariance,
        Suite::SpecialCase => special_case,
        Suite::Desargues => desargues,
        Suite::Axioms => axioms,
        Suite::Fixity => fixity,
        Suite::Oracle => oracle,
        Suite::Lemmas => lemmas,
        Suite::Quadrangle => quadrangle,
    }
}

/// Moves a triple to a different point by bumping one coordinate.
pub(crate) fn corrupt(t: &HomTriple) -> HomTriple {
    let mut ints = t.ints().clone();
    let idx = if ints[0] == 0.into() && ints[1] == 0.into() { 0 } else { 2 };
    ints[idx] += 1;
    HomTriple::from_bigints(ints).expect("bumped canonical triple is nonzero")
}

fn corrupt_point(p: &ProjPoint, fault: bool) -> ProjPoint {
    if fault {
        corrupt(p.coords()).into()
    } else {
        p.clone()
    }
}

#[derive(Default)]
struct SceneText(Vec<Directive>);

impl SceneText {
    fn point(mut self, name: &str, p: &ProjPoint) -> Self {
        self.0.push(Directive::Point { name: name.into(), value: p.clone() });
        self
    }

    fn line(mut self, name: &str, l: &ProjLine) -> Self {
        self.0.push(Directive::Line { name: name.into(), value: l.clone() });
        self
    }

    fn base(self, a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Self {
        self.point("A", a).point("B", b).point("C", c)
    }

    fn conjugate(mut self, tag: &str, aux: &AuxSelection) -> Self {
        let (l, r) = (format!("l{tag}"), format!("R{tag}"));
        self = self.line(&l, &aux.line).point(&r, &aux.apex);
        self.0.push(Directive::Conjugate {
            name: format!("D{tag}"),
            a: "A".into(),
            b: "B".into(),
            c: "C".into(),
            aux: Some((l, r)),
        });
        self
    }

    fn text(&self) -> String {
        join_directives(&self.0)
    }

    fn with_error(&self, e: &Error) -> String {
        format!("{} # {e}", self.text())
    }
}

macro_rules! attempt {
    ($scene:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Err($scene.with_error(&e)),
        }
    };
}

fn verdict(ok: bool, scene: &SceneText) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(scene.text())
    }
}

fn oracle_holds(w: &HarmonicWitness, d: &ProjPoint) -> bool {
    if point_apart(&w.c, &w.a) && point_apart(&w.c, &w.b) {
        is_harmonic(&w.a, &w.b, &w.c, d)
    } else {
        *d == w.c
    }
}

fn invariance(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let (a, b, c) = gen_base(cfg, rng);
    let scene = SceneText::default().base(&a, &b, &c);
    let aux1 = attempt!(scene, gen_valid_aux(cfg, &a, &b, &c, rng));
    let aux2 = attempt!(scene, gen_valid_aux(cfg, &a, &b, &c, rng));
    let scene = scene.conjugate("1", &aux1).conjugate("2", &aux2);
    let w1 = attempt!(scene, harmonic_conjugate(&a, &b, &c, &aux1));
    let w2 = attempt!(scene, harmonic_conjugate(&a, &b, &c, &aux2));
    let d1 = corrupt_point(&w1.d, cfg.inject_fault());
    verdict(d1 == w2.d && oracle_holds(&w1, &d1), &scene)
}

fn special_case(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let (a, b, c) = gen_base_apart(cfg, rng);
    let scene = SceneText::default().base(&a, &b, &c);
    let aux1 = attempt!(scene, gen_valid_aux(cfg, &a, &b, &c, rng));
    let aux2 = attempt!(scene, gen_valid_aux(cfg, &a, &b, &c, rng));
    let scene = scene.conjugate("1", &aux1).conjugate("2", &aux2);
    let w1 = attempt!(scene, harmonic_conjugate(&a, &b, &c, &aux1));
    let w2 = attempt!(scene, harmonic_conjugate(&a, &b, &c, &aux2));
    let covered = attempt!(scene, special_case_conditions(&a, &b, &c, &aux1, &aux2)).is_empty();
    if covered && w1.d != w2.d {
        return Err(scene.text());
    }
    let third = attempt!(scene, third_selection(&a, &b, &c, &aux1, &aux2));
    let scene = scene.conjugate("3", &third);
    let linked = attempt!(scene, special_case_conditions(&a, &b, &c, &aux1, &third)).is_empty()
        && attempt!(scene, special_case_conditions(&a, &b, &c, &aux2, &third)).is_empty();
    let w3 = attempt!(scene, harmonic_conjugate(&a, &b, &c, &third));
    let d3 = corrupt_point(&w3.d, cfg.inject_fault());
    verdict(linked && d3 == w1.d && d3 == w2.d, &scene)
}

fn triangle_scene(pair: &crate::desargues::TrianglePair) -> SceneText {
    let names = ["v1", "v2", "v3", "w1", "w2", "w3"];
    pair.first()
        .vertices()
        .iter()
        .chain(pair.second().vertices())
        .zip(names)
        .fold(SceneText::default(), |s, (p, n)| s.point(n, p))
}

fn desargues(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let fault = cfg.inject_fault();
    let empty = SceneText::default();

    let (center, pair) = attempt!(empty, super::generate::gen_center_pair(cfg, rng));
    let scene = triangle_scene(&pair).point("O", &center);
    let holds = attempt!(scene, check_desargues(&pair));
    let from_center = perspective_from_center(&pair);
    let from_axis = perspective_from_axis(&pair);
    let axis = from_axis.from_axis.as_ref().map(|l| ProjLine::from(if fault { corrupt(l.coeffs()) } else { l.coeffs().clone() }));
    let forward = holds
        && from_center.from_center.as_ref() == Some(&center)
        && from_center.all_pass()
        && from_axis.all_pass()
        && axis.is_some_and(|l| pair.side_meets().iter().all(|m| incident(m, &l)));
    verdict(forward, &scene)?;

    let (axis, pair) = attempt!(empty, super::generate::gen_axis_pair(cfg, rng));
    let scene = triangle_scene(&pair).line("axis", &axis);
    let holds = attempt!(scene, check_converse(&pair));
    let from_axis = perspective_from_axis(&pair);
    let from_center = perspective_from_center(&pair);
    let center = from_center.from_center.as_ref().map(|o| corrupt_point(o, fault));
    let converse = holds
        && from_axis.from_axis.as_ref() == Some(&axis)
        && from_axis.all_pass()
        && from_center.all_pass()
        && center.is_some_and(|o| pair.vertex_joins().iter().all(|j| incident(&o, j)));
    verdict(converse, &scene)
}

fn point_on<R: Rng + ?Sized>(l: &ProjLine, bound: i64, rng: &mut R) -> ProjPoint {
    loop {
        if let Ok(p) = meet(l, &gen_line(bound, rng)) {
            return p;
        }
    }
}

fn axioms(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let bound = cfg.coord_bound();

    // Axiom C7.
    let (l, m) = loop {
        let (l, m) = (gen_line(bound, rng), gen_line(bound, rng));
        if l != m {
            break (l, m);
        }
    };
    let common = meet(&l, &m).expect("apart lines");
    let p = loop {
        let p = match rng.random_range(0..16) {
            0 => point_on(&l, bound, rng),
            1 => point_on(&m, bound, rng),
            _ => gen_point(bound, rng),
        };
        if point_apart(&p, &common) {
            break p;
        }
    };
    let scene = SceneText::default().line("l", &l).line("m", &m).point("P", &p);
    let pick = attempt!(scene, c7_pick(&l, &m, &p));
    let chosen = if pick.branch == Branch::Left { &l } else { &m };
    let c7_ok = pick.witness.verify()
        && pick.witness.left == *p.coords()
        && pick.witness.right == *chosen.coeffs()
        && outside(&p, chosen);
    verdict(c7_ok, &scene)?;

    // Cotransitivity.
    let (p, q) = loop {
        let (p, q) = (gen_point(bound, rng), gen_point(bound, rng));
        if point_apart(&p, &q) {
            break (p, q);
        }
    };
    let x = match rng.random_range(0..16) {
        0 => p.clone(),
        1 => q.clone(),
        _ => gen_point(bound, rng),
    };
    let scene = SceneText::default().point("X", &x).point("P", &p).point("Q", &q);
    let pick = attempt!(scene, cotransitive_pick(&x, &p, &q));
    let chosen = if pick.branch == Branch::Left { &p } else { &q };
    let cotrans_ok = pick.witness.verify()
        && pick.witness.left == *x.coords()
        && pick.witness.right == *chosen.coords()
        && point_apart(&x, chosen)
        && (pick.branch == Branch::Right) == (x == p);
    verdict(cotrans_ok, &scene)?;

    // Tightness, on a random pair and on a rescaled copy.
    let p = gen_point(bound, rng);
    let q = if rng.random_range(0..16) == 0 { p.clone() } else { gen_point(bound, rng) };
    let k = loop {
        let k = gen_rational(bound, rng);
        if !k.is_zero() {
            break k;
        }
    };
    let mut raw = p.coords().rationals().map(|x| &x * &k);
    if cfg.inject_fault() {
        let idx = if p.coords().ints()[0] == 0.into() && p.coords().ints()[1] == 0.into() { 0 } else { 2 };
        raw[idx] = &raw[idx] + &Rational::one();
    }
    let scaled = ProjPoint::canonicalize(raw).expect("nonzero multiple");
    let scene = SceneText::default().point("P", &p).point("Q", &q).point("kP", &scaled);
    let tight = point_apart(&p, &q) == (p != q)
        && point_apart(&p, &q) == point_apart(&q, &p)
        && !point_apart(&p, &scaled)
        && scaled == p;
    verdict(tight, &scene)
}

fn fixity(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let (a, b, _) = gen_base(cfg, rng);
    let scene = SceneText::default().point("A", &a).point("B", &b);
    let aux_a = attempt!(scene, gen_valid_aux(cfg, &a, &b, &a, rng));
    let aux_b = attempt!(scene, gen_valid_aux(cfg, &a, &b, &b, rng));
    let da = attempt!(scene, harmonic_conjugate(&a, &b, &a, &aux_a)).d;
    let db = attempt!(scene, harmonic_conjugate(&a, &b, &b, &aux_b)).d;
    let da = corrupt_point(&da, cfg.inject_fault());
    verdict(da == a && db == b, &scene)
}

fn oracle(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let (a, b, c) = gen_base_apart(cfg, rng);
    let scene = SceneText::default().base(&a, &b, &c);
    let aux = attempt!(scene, gen_valid_aux(cfg, &a, &b, &c, rng));
    let scene = scene.conjugate("", &aux);
    let w = attempt!(scene, harmonic_conjugate(&a, &b, &c, &aux));
    let d = corrupt_point(&w.d, cfg.inject_fault());
    if !is_harmonic(&a, &b, &c, &d) {
        return Err(scene.text());
    }
    let back_aux = attempt!(scene, gen_valid_aux(cfg, &a, &b, &d, rng));
    let back = attempt!(scene, harmonic_conjugate(&a, &b, &d, &back_aux));
    verdict(back.d == c, &scene)
}

fn lemmas(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let (a, b, c) = gen_base(cfg, rng);
    let scene = SceneText::default().base(&a, &b, &c);
    let aux = attempt!(scene, gen_valid_aux(cfg, &a, &b, &c, rng));
    let scene = scene.conjugate("", &aux);
    let mut w = attempt!(scene, harmonic_conjugate(&a, &b, &c, &aux));
    w.p = corrupt_point(&w.p, cfg.inject_fault());
    verdict(w.is_consistent() && lemma_checks(&w).iter().all(|r| r.holds()), &scene)
}

fn quadrangle(cfg: &TrialConfig, rng: &mut TrialRng) -> Result<(), String> {
    let (a, b, c) = gen_base_apart(cfg, rng);
    let scene = SceneText::default().base(&a, &b, &c);
    let aux = attempt!(scene, gen_valid_aux(cfg, &a, &b, &c, rng));
    let scene = scene.conjugate("", &aux);
    let w = attempt!(scene, harmonic_conjugate(&a, &b, &c, &aux));
    let [p, q, r, s] = w.quadrangle();
    let range = attempt!(scene, harmonic_from_quadrangle(p, q, r, s));
    let expected = HarmonicRange { a, b, c, d: corrupt_point(&w.d, cfg.inject_fault()) };
    verdict(range == expected, &scene)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corruption_always_moves_the_point() {
        for (a, b, c) in [(0, 0, 1), (1, 0, 0), (0, 1, 0), (2, -1, 1), (1, 1, 0)] {
            let t = HomTriple::from_ints(a, b, c).unwrap();
            assert_ne!(corrupt(&t), t, "{t}");
        }
    }
}
