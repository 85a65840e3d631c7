//! Reading a harmonic range off a complete quadrangle, and back.

use harmonic_plane::harmonic::{harmonic_conjugate, harmonic_from_quadrangle, is_harmonic, AuxSelection};
use harmonic_plane::ProjPoint;

fn pt(s: &str) -> ProjPoint {
    s.parse().unwrap()
}

fn main() -> harmonic_plane::Result<()> {
    // A square and its centre give A, B as diagonal points.
    let [p, q, r, s] = [pt("[0:0:1]"), pt("[2:0:1]"), pt("[2:2:1]"), pt("[0:2:1]")];
    let range = harmonic_from_quadrangle(&p, &q, &r, &s)?;
    println!("A={} B={} C={} D={}", range.a, range.b, range.c, range.d);
    println!("harmonic: {}", is_harmonic(&range.a, &range.b, &range.c, &range.d));

    // Round trip from a construction witness.
    let w = harmonic_conjugate(
        &pt("[0:0:1]"),
        &pt("[1:0:1]"),
        &pt("[2:0:1]"),
        &AuxSelection::new("[1:1:-2]".parse()?, pt("[1:2:1]")),
    )?;
    let back = harmonic_from_quadrangle(&w.p, &w.q, &w.aux.apex, &w.s)?;
    println!("witness quadrangle recovers D = {} (construction gave {})", back.d, w.d);
    assert_eq!((back.a, back.b, back.c, back.d), (w.a, w.b, w.c, w.d));

    match harmonic_from_quadrangle(&p, &q, &pt("[4:0:1]"), &s) {
        Err(e) => println!("three collinear vertices: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
