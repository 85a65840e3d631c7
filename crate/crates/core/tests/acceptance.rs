//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, Output};
use std::time::Instant;

use harmonic_plane::harmonic::{cross_ratio, harmonic_conjugate, CrossRatio};
use harmonic_plane::harness::{gen_base_apart, gen_valid_aux, run_suite, trial_rng, Suite, TrialConfig, TrialReport};
use harmonic_plane::Rational;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn harmonic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonic")).args(args).output().expect("spawn harmonic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn clean(suite: Suite, trials: usize, seed: u64) -> Outcome {
    let config = TrialConfig::new(seed, trials, 10).map_err(|e| e.to_string())?;
    let report: TrialReport = run_suite(suite, &config);
    if report.passed() && report.trials_run == trials {
        Ok(report.to_string())
    } else {
        Err(report.to_string())
    }
}

fn invariance() -> Outcome {
    let start = Instant::now();
    let o = harmonic(&["verify", "--suite", "invariance", "--trials", "1000", "--seed", "42", "--bound", "10"]);
    let line = stdout(&o).trim_end().to_string();
    let secs = start.elapsed().as_secs_f64();
    match (o.status.code(), line.as_str()) {
        (Some(0), "suite=invariance seed=42 trials=1000 failures=0") => Ok(format!("{line} in {secs:.2}s")),
        _ => Err(line),
    }
}

fn worked_example() -> Outcome {
    let base = ["conjugate", "--a", "[0:0:1]", "--b", "[1:0:1]", "--c", "[2:0:1]"];
    let explicit = harmonic(&[&base[..], &["--l", "[1:0:−2]", "--r", "[0:1:1]"]].concat());
    let auto = harmonic(&base);
    let first = |o: &Output| stdout(o).lines().next().unwrap_or_default().to_string();
    let (e, a) = (first(&explicit), first(&auto));
    if e == "D = [2:0:3]" && a == "D = [2:0:3]" && explicit.status.success() && auto.status.success() {
        Ok("explicit and auto selection both give D = [2:0:3]".into())
    } else {
        Err(format!("explicit {e:?}, auto {a:?}"))
    }
}

fn oracle() -> Outcome {
    let report = clean(Suite::Oracle, 1000, 42)?;
    // Independent of the suite: the cross ratio itself, exactly −1.
    let config = TrialConfig::new(42, 1000, 10).unwrap();
    let minus_one = CrossRatio::Finite(Rational::integer(-1));
    for i in 0..1000 {
        let mut rng = trial_rng(4242, Suite::Oracle, i);
        let (a, b, c) = gen_base_apart(&config, &mut rng);
        let aux = gen_valid_aux(&config, &a, &b, &c, &mut rng).map_err(|e| e.to_string())?;
        let d = harmonic_conjugate(&a, &b, &c, &aux).map_err(|e| e.to_string())?.d;
        let cr = cross_ratio(&a, &b, &c, &d).map_err(|e| e.to_string())?;
        if cr != minus_one {
            return Err(format!("(A,B;C,D) = {cr} for A={a} B={b} C={c} D={d}"));
        }
    }
    Ok(format!("{report}; 1000 direct cross ratios equal -1"))
}

fn fault_injection() -> Outcome {
    let config = TrialConfig::new(42, 100, 10).unwrap().with_fault(true);
    let mut caught = Vec::new();
    for suite in Suite::ALL {
        let r = run_suite(suite, &config);
        if r.failures == 0 {
            return Err(format!("{suite} did not notice the fault"));
        }
        caught.push(format!("{suite} {}/{}", r.failures, r.trials_run));
    }
    let cli = harmonic(&["verify", "--suite", "invariance", "--trials", "20", "--inject-fault"]);
    if cli.status.code() != Some(2) {
        return Err("verify --inject-fault did not exit 2".into());
    }
    Ok(caught.join(", "))
}

fn determinism() -> Outcome {
    let args = ["verify", "--suite", "all", "--trials", "60", "--seed", "7"];
    let (r1, r2) = (harmonic(&args), harmonic(&args));
    if r1.stdout != r2.stdout || r1.stdout.is_empty() {
        return Err("verify output differs between runs".into());
    }
    let faulty = ["verify", "--suite", "all", "--trials", "60", "--seed", "7", "--inject-fault"];
    if harmonic(&faulty).stdout != harmonic(&faulty).stdout {
        return Err("failure reports differ between runs".into());
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let scene = concat!(env!("CARGO_MANIFEST_DIR"), "/scenes/worked_example.scene");
    let mut svgs = Vec::new();
    for name in ["a.svg", "b.svg"] {
        let out = dir.path().join(name);
        let o = harmonic(&["render", "--scene", scene, "--out", out.to_str().unwrap()]);
        if !o.status.success() {
            return Err(String::from_utf8_lossy(&o.stderr).into_owned());
        }
        svgs.push(std::fs::read(out).map_err(|e| e.to_string())?);
    }
    if svgs[0] != svgs[1] {
        return Err("SVG output differs between runs".into());
    }
    Ok(format!("reports and a {}-byte SVG are byte-identical across runs", svgs[0].len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("invariance: 1000 trials, seed 42, bound 10", invariance),
        ("worked example: D = [2:0:3]", worked_example),
        ("fixity: h(A,B;A) = A and h(A,B;B) = B", || clean(Suite::Fixity, 100, 42)),
        ("oracle: cross ratio -1 and involution", oracle),
        ("lemma clauses on 1000 witnesses", || clean(Suite::Lemmas, 1000, 42)),
        ("desargues: 500 pairs each direction", || clean(Suite::Desargues, 500, 42)),
        ("axioms: 10^4 C7, cotransitivity, tightness", || clean(Suite::Axioms, 10_000, 42)),
        ("third selection on 500 pairs", || clean(Suite::SpecialCase, 500, 42)),
        ("quadrangle round trip on 200 witnesses", || clean(Suite::Quadrangle, 200, 42)),
        ("fault injection caught by every suite", fault_injection),
        ("determinism of reports and SVG", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
