//! Desargues's theorem and its converse on explicit triangle pairs.

use harmonic_plane::desargues::{check_converse, check_desargues, perspective_from_axis, perspective_from_center, Triangle, TrianglePair};
use harmonic_plane::ProjPoint;

fn tri(a: &str, b: &str, c: &str) -> Triangle {
    Triangle::new(a.parse().unwrap(), b.parse().unwrap(), c.parse().unwrap()).unwrap()
}

fn show(title: &str, pair: &TrianglePair) -> harmonic_plane::Result<()> {
    let center = perspective_from_center(pair);
    let axis = perspective_from_axis(pair);
    println!("{title}");
    println!("  center: {}", center.from_center.as_ref().map_or("none".into(), ProjPoint::to_string));
    println!("  axis:   {}", axis.from_axis.as_ref().map_or("none".into(), ToString::to_string));
    for c in center.side_conditions.iter().chain(&axis.side_conditions) {
        println!("  [{}] {}", if c.pass { "ok" } else { "--" }, c.description);
    }
    match check_desargues(pair) {
        Ok(v) => println!("  center ⇒ axis: {v}"),
        Err(e) => println!("  center ⇒ axis: {e}"),
    }
    match check_converse(pair) {
        Ok(v) => println!("  axis ⇒ center: {v}"),
        Err(e) => println!("  axis ⇒ center: {e}"),
    }
    Ok(())
}

fn main() -> harmonic_plane::Result<()> {
    let t = tri("[1:0:1]", "[0:1:1]", "[1:1:1]");
    // Scaling about the origin by 2.
    let scaled = tri("[2:0:1]", "[0:2:1]", "[2:2:1]");
    show("homothety", &TrianglePair::new(t.clone(), scaled)?)?;
    // A translation: the centre is at infinity and so is the axis.
    let shifted = tri("[4:2:1]", "[3:3:1]", "[4:3:1]");
    show("translation", &TrianglePair::new(t.clone(), shifted)?)?;
    let unrelated = tri("[5:1:1]", "[0:7:1]", "[3:4:1]");
    show("unrelated", &TrianglePair::new(t, unrelated)?)?;
    Ok(())
}
