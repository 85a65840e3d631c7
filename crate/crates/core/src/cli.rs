//! The `harmonic` command line.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 geometric precondition
//! violation (or, for `verify`, a failing campaign).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::harmonic::{auto_select_aux, harmonic_conjugate, AuxSelection};
use crate::harness::{run_suite, Suite, TrialConfig};
use crate::projective::{ProjLine, ProjPoint};
use crate::render::{render_svg, RenderOptions, Viewport};
use crate::scene::{parse_scene, SceneErrorKind};

#[derive(Debug, Parser)]
#[command(name = "harmonic", version, about = "Harmonic conjugates in the constructive real projective plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct h(A,B;C) and print its witness.
    Conjugate(ConjugateArgs),
    /// Run seeded verification campaigns.
    Verify(VerifyArgs),
    /// Draw a scene file as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct ConjugateArgs {
    #[arg(long = "a", value_name = "[a:b:c]")]
    a: ProjPoint,
    #[arg(long = "b", value_name = "[a:b:c]")]
    b: ProjPoint,
    #[arg(long = "c", value_name = "[a:b:c]")]
    c: ProjPoint,
    /// Auxiliary line through C; needs --r.
    #[arg(long = "l", value_name = "[a:b:c]", requires = "r")]
    l: Option<ProjLine>,
    /// Auxiliary apex off AB and l; needs --l.
    #[arg(long = "r", value_name = "[a:b:c]", requires = "l")]
    r: Option<ProjPoint>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// A suite name or `all`.
    #[arg(long, default_value = "all", value_parser = parse_suites)]
    suite: SuiteSelection,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, env = "HARMONIC_SEED", default_value_t = 42)]
    seed: u64,
    /// Bound on generated integer coordinates.
    #[arg(long, default_value_t = 10)]
    bound: i64,
    /// Corrupt the value under test; every suite should then fail.
    #[arg(long)]
    inject_fault: bool,
}

#[derive(Debug, Clone)]
struct SuiteSelection(Vec<Suite>);

fn parse_suites(s: &str) -> Result<SuiteSelection, String> {
    if s == "all" {
        return Ok(SuiteSelection(Suite::ALL.to_vec()));
    }
    s.parse().map(|suite| SuiteSelection(vec![suite]))
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long)]
    scene: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// xmin,ymin,xmax,ymax
    #[arg(long, default_value = "-1,-2,3,2", allow_hyphen_values = true)]
    viewport: Viewport,
    #[arg(long, default_value_t = 600)]
    width: u32,
    #[arg(long, default_value_t = 600)]
    height: u32,
    #[arg(long)]
    no_point_labels: bool,
    #[arg(long)]
    no_line_labels: bool,
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidRational(_) | Error::InvalidTriple(_) | Error::InvalidConfig(_) => 1,
        _ => 2,
    }
}

/// Runs the command line `args` (program name first) without touching the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: 1, stdout: String::new(), stderr: text },
            };
        }
    };
    match cli.command {
        Command::Conjugate(args) => conjugate(args),
        Command::Verify(args) => verify(args),
        Command::Render(args) => render(args),
    }
}

fn conjugate(args: ConjugateArgs) -> Outcome {
    let explicit = args.l.is_some();
    let aux = match (args.l, args.r) {
        (Some(l), Some(r)) => AuxSelection::new(l, r),
        _ => match auto_select_aux(&args.a, &args.b, &args.c, &[]) {
            Ok(aux) => aux,
            Err(e) => return Outcome::fail(exit_code(&e), e),
        },
    };
    let w = match harmonic_conjugate(&args.a, &args.b, &args.c, &aux) {
        Ok(w) => w,
        Err(e) => return Outcome::fail(exit_code(&e), e),
    };
    let selection = if explicit { "explicit" } else { "auto" };
    if args.json {
        let doc = json!({
            "a": w.a.to_string(),
            "b": w.b.to_string(),
            "c": w.c.to_string(),
            "selection": { "kind": selection, "l": w.aux.line.to_string(), "r": w.aux.apex.to_string() },
            "p": w.p.to_string(),
            "q": w.q.to_string(),
            "s": w.s.to_string(),
            "d": w.d.to_string(),
        });
        return Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&doc).expect("string-only JSON")));
    }
    let mut out = String::new();
    writeln!(out, "D = {}", w.d).unwrap();
    writeln!(out, "P = {}", w.p).unwrap();
    writeln!(out, "Q = {}", w.q).unwrap();
    writeln!(out, "S = {}", w.s).unwrap();
    writeln!(out, "l = {} ({selection})", w.aux.line).unwrap();
    writeln!(out, "R = {} ({selection})", w.aux.apex).unwrap();
    Outcome::ok(out)
}

fn verify(args: VerifyArgs) -> Outcome {
    let config = match TrialConfig::new(args.seed, args.trials, args.bound) {
        Ok(c) => c.with_fault(args.inject_fault),
        Err(e) => return Outcome::fail(1, e),
    };
    let mut out = String::new();
    let mut failed = false;
    for suite in args.suite.0 {
        let report = run_suite(suite, &config);
        failed |= !report.passed();
        writeln!(out, "{report}").unwrap();
    }
    Outcome { code: if failed { 2 } else { 0 }, stdout: out, stderr: String::new() }
}

fn render(args: RenderArgs) -> Outcome {
    let text = match std::fs::read_to_string(&args.scene) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(1, format_args!("{}: {e}", args.scene.display())),
    };
    let scene = match parse_scene(&text) {
        Ok(s) => s,
        Err(e) => {
            let code = if matches!(e.kind, SceneErrorKind::Geometry(_)) { 2 } else { 1 };
            return Outcome::fail(code, format_args!("{}: {e}", args.scene.display()));
        }
    };
    let opts = match RenderOptions::new(args.viewport, args.width, args.height) {
        Ok(o) => o.with_labels(!args.no_point_labels, !args.no_line_labels),
        Err(e) => return Outcome::fail(1, e),
    };
    let rendered = render_svg(&scene, &opts);
    if let Err(e) = std::fs::write(&args.out, &rendered.svg) {
        return Outcome::fail(1, format_args!("{}: {e}", args.out.display()));
    }
    let stderr = rendered.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    Outcome { code: 0, stdout: String::new(), stderr }
}
