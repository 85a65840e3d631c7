//! Seeded campaigns over every suite, then again with a deliberate fault.
//!
//! ```text
//! cargo run --release --example invariance_campaign -- 42 500
//! ```

use harmonic_plane::harness::{run_suite, Suite, TrialConfig, GENERATOR};

fn main() -> harmonic_plane::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(42, |s| s.parse().expect("seed"));
    let trials = args.next().map_or(300, |s| s.parse().expect("trials"));
    let config = TrialConfig::new(seed, trials, 10)?;
    println!("generator: {GENERATOR}");
    for suite in Suite::ALL {
        println!("{}", run_suite(suite, &config));
    }
    println!("-- with fault injection --");
    let faulty = config.with_fault(true);
    for suite in Suite::ALL {
        let report = run_suite(suite, &faulty);
        println!("{suite}: {} of {} trials caught the fault", report.failures, report.trials_run);
    }
    if let Some(scene) = run_suite(Suite::Invariance, &faulty).first_failure {
        println!("first invariance counterexample, as a scene:\n  {scene}");
    }
    Ok(())
}
