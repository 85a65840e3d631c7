//! The construction step by step on A = (0,0), B = (1,0), C = (2,0).
//!
//! ```text
//! cargo run --example worked_example
//! ```

use harmonic_plane::harmonic::{cross_ratio, harmonic_conjugate, AuxSelection};
use harmonic_plane::{ProjLine, ProjPoint};

fn main() -> harmonic_plane::Result<()> {
    let a: ProjPoint = "[0:0:1]".parse()?;
    let b: ProjPoint = "[1:0:1]".parse()?;
    let c: ProjPoint = "[2:0:1]".parse()?;
    let l: ProjLine = "[1:0:-2]".parse()?;
    let r: ProjPoint = "[0:1:1]".parse()?;

    let w = harmonic_conjugate(&a, &b, &c, &AuxSelection::new(l, r))?;
    println!("P = BR·l = {}", w.p);
    println!("Q = AR·l = {}   (AR is vertical, so Q is at infinity)", w.q);
    println!("S = AP·BQ = {}", w.s);
    println!("D = AB·RS = {}", w.d);

    let (x, y) = w.d.to_affine().expect("D is finite here");
    println!("D in the affine chart: ({x}, {y})");
    println!("cross ratio (A,B;C,D) = {}", cross_ratio(&a, &b, &c, &w.d)?);
    Ok(())
}
