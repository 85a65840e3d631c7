use harmonic_plane::render::{render_svg, RenderOptions};
use harmonic_plane::scene::{parse_scene, Directive, Scene};
use harmonic_plane::{ProjLine, ProjPoint};
use proptest::prelude::*;

fn scene_file(name: &str) -> String {
    std::fs::read_to_string(format!("{}/scenes/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn worked_scene_file() {
    let scene = parse_scene(&scene_file("worked_example.scene")).unwrap();
    assert_eq!(scene.point("D").unwrap().to_string(), "[2:0:3]");
    let (_, w) = scene.witnesses().next().unwrap();
    assert_eq!(w.s.to_string(), "[2:-1:2]");
}

#[test]
fn midpoint_scene_renders_an_arrow() {
    let scene = parse_scene(&scene_file("midpoint.scene")).unwrap();
    assert_eq!(scene.point("D").unwrap().to_string(), "[1:0:0]");
    let svg = render_svg(&scene, &RenderOptions::default()).svg;
    assert!(svg.contains(r#"class="point ideal" data-name="D""#));
}

#[test]
fn quadrangle_directive_round_trip() {
    let text = "point P = [0:0:1]\npoint Q = [2:0:1]\npoint R = [2:2:1]\npoint S = [0:2:1]\n\
                quadrangle A B C D = P Q R S\n";
    let scene = parse_scene(text).unwrap();
    assert_eq!(scene.point("B").unwrap().to_string(), "[1:1:1]");
    assert_eq!(parse_scene(&scene.to_string()).unwrap(), scene);
    let svg = render_svg(&scene, &RenderOptions::default()).svg;
    assert_eq!(svg.matches("class=\"line\"").count(), 6);
}

fn small() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn triple() -> impl Strategy<Value = (i64, i64, i64)> {
    (small(), small(), small()).prop_filter("nonzero", |&(a, b, c)| (a, b, c) != (0, 0, 0))
}

proptest! {
    #[test]
    fn printed_scenes_reparse(points in prop::collection::vec(triple(), 2..6), lines in prop::collection::vec(triple(), 0..3)) {
        let pts: Vec<ProjPoint> = points.iter().map(|&(a, b, c)| ProjPoint::from_ints(a, b, c).unwrap()).collect();
        let mut directives: Vec<Directive> = pts
            .iter()
            .enumerate()
            .map(|(i, p)| Directive::Point { name: format!("p{i}"), value: p.clone() })
            .collect();
        for (i, &(a, b, c)) in lines.iter().enumerate() {
            directives.push(Directive::Line { name: format!("m{i}"), value: ProjLine::from_ints(a, b, c).unwrap() });
        }
        if pts[0] != pts[1] {
            directives.push(Directive::Join { name: "j".into(), p: "p0".into(), q: "p1".into() });
        }
        let scene = Scene::from_directives(directives).unwrap();
        prop_assert_eq!(&parse_scene(&scene.to_string()).unwrap(), &scene);
        prop_assert_eq!(&parse_scene(&scene.to_single_line()).unwrap(), &scene);
    }

    #[test]
    fn rendering_is_deterministic(points in prop::collection::vec(triple(), 0..6)) {
        let directives = points
            .iter()
            .enumerate()
            .map(|(i, (a, b, c))| Directive::Point { name: format!("p{i}"), value: ProjPoint::from_ints(*a, *b, *c).unwrap() })
            .collect();
        let scene = Scene::from_directives(directives).unwrap();
        let opts = RenderOptions::default();
        let first = render_svg(&scene, &opts);
        prop_assert_eq!(&first, &render_svg(&scene, &opts));
        let drawn = first.svg.matches("class=\"point").count();
        prop_assert!(drawn + first.warnings.len() <= points.len());
    }
}
