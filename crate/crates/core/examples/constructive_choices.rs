//! Apartness as data: each decision the constructive axioms allow comes
//! with a certificate, a nonzero integer that anyone can recheck.

use harmonic_plane::apartness::{c7_pick, cotransitive_pick, witness_outside, witness_points_apart, Branch};
use harmonic_plane::{join, ProjLine, ProjPoint};

fn pt(s: &str) -> ProjPoint {
    s.parse().unwrap()
}

fn main() -> harmonic_plane::Result<()> {
    let p = pt("[1:0:1]");
    let q = pt("[2:0:1]");
    let w = witness_points_apart(&p, &q).expect("distinct points");
    println!("P ≠ Q certified by {} (a component of P×Q)", w.certificate);

    // Cotransitivity: X = P forces the right branch.
    for x in [pt("[5:3:1]"), p.clone()] {
        let choice = cotransitive_pick(&x, &p, &q)?;
        let side = if choice.branch == Branch::Left { "P" } else { "Q" };
        println!("X = {x}: X ≠ {side} via certificate {}", choice.witness.certificate);
        assert!(choice.witness.verify());
    }

    // Axiom C7 on the axes.
    let x_axis: ProjLine = "[0:1:0]".parse()?;
    let y_axis: ProjLine = "[1:0:0]".parse()?;
    for point in [pt("[3:4:1]"), pt("[3:0:1]")] {
        let choice = c7_pick(&x_axis, &y_axis, &point)?;
        let axis = if choice.branch == Branch::Left { "x-axis" } else { "y-axis" };
        println!("{point} avoids the {axis}, certificate {}", choice.witness.certificate);
    }
    match c7_pick(&x_axis, &y_axis, &pt("[0:0:1]")) {
        Err(e) => println!("origin: {e}"),
        Ok(_) => unreachable!(),
    }

    let l = join(&p, &pt("[0:1:1]"))?;
    let out = witness_outside(&pt("[0:0:1]"), &l).expect("origin is off x + y = 1");
    println!("origin ∉ {l}: incidence product {}", out.certificate);
    Ok(())
}
