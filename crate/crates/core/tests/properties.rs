use harmonic_plane::desargues::{check_converse, check_desargues, perspective_from_axis, perspective_from_center};
use harmonic_plane::harmonic::{
    auto_select_aux, cross_ratio, harmonic_conjugate, harmonic_from_quadrangle, lemma_checks, validate_aux, AuxSelection,
    CrossRatio,
};
use harmonic_plane::harness::generate::{gen_axis_pair, gen_center_pair};
use harmonic_plane::harness::{trial_rng, Suite, TrialConfig};
use harmonic_plane::{join, ProjPoint, Rational};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = i64> {
    -9i64..=9
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (coord(), coord(), coord())
        .prop_filter("nonzero", |&(a, b, c)| (a, b, c) != (0, 0, 0))
        .prop_map(|(a, b, c)| ProjPoint::from_ints(a, b, c).unwrap())
}

/// Apart `A`, `B` and `C = λA + μB`.
fn base() -> impl Strategy<Value = (ProjPoint, ProjPoint, ProjPoint)> {
    (point(), point(), coord(), coord())
        .prop_filter("A ≠ B, C defined", |(a, b, l, m)| a != b && (*l, *m) != (0, 0))
        .prop_map(|(a, b, l, m)| {
            let (x, y) = (a.coords().rationals(), b.coords().rationals());
            let (l, m) = (Rational::integer(l), Rational::integer(m));
            let c = [0, 1, 2].map(|i| &x[i] * &l + &y[i] * &m);
            (a, b, ProjPoint::canonicalize(c).unwrap())
        })
}

/// A selection built from two free points: `l = CX`, `R = Y`.
fn selection(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, x: &ProjPoint, y: &ProjPoint) -> Option<AuxSelection> {
    let aux = AuxSelection::new(join(c, x).ok()?, y.clone());
    validate_aux(a, b, c, &aux).ok()?.is_empty().then_some(aux)
}

fn config() -> TrialConfig {
    TrialConfig::new(0, 1, 10).unwrap()
}

proptest! {
    #[test]
    fn conjugate_is_independent_of_selection((a, b, c) in base(), x1 in point(), y1 in point(), x2 in point(), y2 in point()) {
        let s1 = selection(&a, &b, &c, &x1, &y1);
        let s2 = selection(&a, &b, &c, &x2, &y2);
        prop_assume!(s1.is_some() && s2.is_some());
        let d1 = harmonic_conjugate(&a, &b, &c, &s1.unwrap()).unwrap().d;
        let d2 = harmonic_conjugate(&a, &b, &c, &s2.unwrap()).unwrap().d;
        prop_assert_eq!(d1, d2);
    }

    #[test]
    fn cross_ratio_is_minus_one((a, b, c) in base()) {
        prop_assume!(c != a && c != b);
        let d = harmonic_conjugate(&a, &b, &c, &auto_select_aux(&a, &b, &c, &[]).unwrap()).unwrap().d;
        prop_assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), CrossRatio::Finite(Rational::integer(-1)));
    }

    #[test]
    fn conjugation_is_an_involution((a, b, c) in base()) {
        let h = |p: &ProjPoint| harmonic_conjugate(&a, &b, p, &auto_select_aux(&a, &b, p, &[]).unwrap()).unwrap().d;
        prop_assert_eq!(h(&h(&c)), c);
    }

    #[test]
    fn base_points_are_fixed((a, b, _) in base(), x in point(), y in point()) {
        for p in [&a, &b] {
            if let Some(aux) = selection(&a, &b, p, &x, &y) {
                prop_assert_eq!(&harmonic_conjugate(&a, &b, p, &aux).unwrap().d, p);
            }
        }
    }

    #[test]
    fn witness_quadrangle_recovers_range((a, b, c) in base(), x in point(), y in point()) {
        prop_assume!(c != a && c != b);
        let aux = selection(&a, &b, &c, &x, &y);
        prop_assume!(aux.is_some());
        let w = harmonic_conjugate(&a, &b, &c, &aux.unwrap()).unwrap();
        let r = harmonic_from_quadrangle(&w.p, &w.q, &w.aux.apex, &w.s).unwrap();
        prop_assert_eq!((r.a, r.b, r.c, r.d), (a, b, c, w.d));
    }

    #[test]
    fn lemma_clauses_hold((a, b, c) in base(), x in point(), y in point()) {
        let aux = selection(&a, &b, &c, &x, &y);
        prop_assume!(aux.is_some());
        let w = harmonic_conjugate(&a, &b, &c, &aux.unwrap()).unwrap();
        for report in lemma_checks(&w) {
            prop_assert!(report.holds(), "{} fails: {:?}", report.lemma, report.failing().collect::<Vec<_>>());
        }
    }

    #[test]
    fn desargues_both_directions(index in 0usize..100_000) {
        let mut rng = trial_rng(11, Suite::Desargues, index);
        if let Ok((center, pair)) = gen_center_pair(&config(), &mut rng) {
            prop_assert!(check_desargues(&pair).unwrap());
            prop_assert_eq!(perspective_from_center(&pair).from_center, Some(center));
            prop_assert!(perspective_from_axis(&pair).all_pass());
        }
        if let Ok((axis, pair)) = gen_axis_pair(&config(), &mut rng) {
            prop_assert!(check_converse(&pair).unwrap());
            prop_assert_eq!(perspective_from_axis(&pair).from_axis, Some(axis));
            prop_assert!(perspective_from_center(&pair).all_pass());
        }
    }
}
