//! Clause-by-clause audit of one witness, including a degenerate one where
//! C coincides with a base point and some lemmas do not apply.

use harmonic_plane::harmonic::{auto_select_aux, harmonic_conjugate, lemma_checks};
use harmonic_plane::ProjPoint;

fn audit(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> harmonic_plane::Result<()> {
    let aux = auto_select_aux(a, b, c, &[])?;
    let w = harmonic_conjugate(a, b, c, &aux)?;
    println!("A={a} B={b} C={c}  →  D={}", w.d);
    for report in lemma_checks(&w) {
        let status = match (report.applicable, report.holds()) {
            (false, _) => "not applicable",
            (true, true) => "holds",
            (true, false) => "FAILS",
        };
        println!("  Lemma {}: {status} ({} clauses)", report.lemma, report.checks.len());
        for clause in report.failing().filter(|_| report.applicable) {
            println!("    failed: {}", clause.description);
        }
    }
    Ok(())
}

fn main() -> harmonic_plane::Result<()> {
    let a: ProjPoint = "[0:0:1]".parse()?;
    let b: ProjPoint = "[1:0:1]".parse()?;
    audit(&a, &b, &"[2:0:1]".parse()?)?;
    audit(&a, &b, &"[3:0:7]".parse()?)?;
    audit(&a, &b, &a)?;
    Ok(())
}
