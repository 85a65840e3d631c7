//! Two selections that fall outside the special case, linked through a third.

use harmonic_plane::harmonic::{harmonic_conjugate, special_case_conditions, third_selection, AuxSelection};
use harmonic_plane::ProjPoint;

fn main() -> harmonic_plane::Result<()> {
    let a: ProjPoint = "[0:0:1]".parse()?;
    let b: ProjPoint = "[1:0:1]".parse()?;
    let c: ProjPoint = "[2:0:1]".parse()?;
    let first = AuxSelection::new("[1:0:-2]".parse()?, "[0:1:1]".parse()?);
    let second = AuxSelection::new("[1:1:-2]".parse()?, "[2:2:1]".parse()?);

    let direct = special_case_conditions(&a, &b, &c, &first, &second)?;
    println!("first vs second violates: {}", list(&direct));

    let third = third_selection(&a, &b, &c, &first, &second)?;
    println!("third selection: l″ = {}, R″ = {}", third.line, third.apex);
    println!("first vs third: {}", list(&special_case_conditions(&a, &b, &c, &first, &third)?));
    println!("second vs third: {}", list(&special_case_conditions(&a, &b, &c, &second, &third)?));

    for (name, aux) in [("first", &first), ("second", &second), ("third", &third)] {
        println!("D via {name:6} = {}", harmonic_conjugate(&a, &b, &c, aux)?.d);
    }
    Ok(())
}

fn list<T: ToString>(v: &[T]) -> String {
    if v.is_empty() {
        "nothing".into()
    } else {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}
