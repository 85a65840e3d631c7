//! Seeded verification campaigns.
//!
//! Each trial draws its own generator from `(seed, suite, trial index)`, so
//! trials run in parallel without changing results. A report is a pure
//! function of its [`TrialConfig`] and suite.
//!
//! With fault injection enabled, every suite corrupts one coordinate of the
//! value under test before checking it; a healthy suite must then fail.

pub mod generate;
mod suites;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub use generate::{gen_base, gen_base_apart, gen_valid_aux};

pub type TrialRng = ChaCha8Rng;

/// The generator behind every campaign.
pub const GENERATOR: &str = "ChaCha8 (rand_chacha), seed_from_u64(seed), stream = suite tag << 48 | trial index";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialConfig {
    seed: u64,
    trials: usize,
    coord_bound: i64,
    inject_fault: bool,
}

impl TrialConfig {
    pub fn new(seed: u64, trials: usize, coord_bound: i64) -> Result<Self> {
        if trials < 1 {
            return Err(Error::InvalidConfig("trials must be at least 1"));
        }
        if coord_bound < 2 {
            return Err(Error::InvalidConfig("coordinate bound must be at least 2"));
        }
        Ok(TrialConfig { seed, trials, coord_bound, inject_fault: false })
    }

    pub fn with_fault(mut self, inject: bool) -> Self {
        self.inject_fault = inject;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trials(&self) -> usize {
        self.trials
    }

    pub fn coord_bound(&self) -> i64 {
        self.coord_bound
    }

    pub fn inject_fault(&self) -> bool {
        self.inject_fault
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Two independent selections give the same conjugate; cross-ratio oracle.
    Invariance,
    /// Special-case hypotheses and the third selection.
    SpecialCase,
    /// Desargues's theorem and its converse.
    Desargues,
    /// C7, cotransitivity, tightness.
    Axioms,
    /// `h(A,B;A) = A`, `h(A,B;B) = B`.
    Fixity,
    /// Cross ratio −1 and the involution `h(A,B;h(A,B;C)) = C`.
    Oracle,
    /// Clause-level lemma audit of random witnesses.
    Lemmas,
    /// Quadrangle round trip.
    Quadrangle,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Invariance,
        Suite::SpecialCase,
        Suite::Desargues,
        Suite::Axioms,
        Suite::Fixity,
        Suite::Oracle,
        Suite::Lemmas,
        Suite::Quadrangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Invariance => "invariance",
            Suite::SpecialCase => "special-case",
            Suite::Desargues => "desargues",
            Suite::Axioms => "axioms",
            Suite::Fixity => "fixity",
            Suite::Oracle => "oracle",
            Suite::Lemmas => "lemmas",
            Suite::Quadrangle => "quadrangle",
        }
    }

    fn tag(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials_run: usize,
    pub passes: usize,
    pub failures: usize,
    /// Scene text of the lowest-indexed failing trial.
    pub first_failure: Option<String>,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite={} seed={} trials={} failures={}", self.suite, self.seed, self.trials_run, self.failures)?;
        if let Some(scene) = &self.first_failure {
            write!(f, " first_failure={scene}")?;
        }
        Ok(())
    }
}

pub fn trial_rng(seed: u64, suite: Suite, index: usize) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite.tag() << 48 | index as u64);
    rng
}

pub fn run_suite(suite: Suite, config: &TrialConfig) -> TrialReport {
    let trial = suites::trial_fn(suite);
    let outcomes: Vec<Option<String>> = (0..config.trials())
        .into_par_iter()
        .map(|i| trial(config, &mut trial_rng(config.seed(), suite, i)).err())
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_some()).count();
    TrialReport {
        suite,
        seed: config.seed(),
        trials_run: outcomes.len(),
        passes: outcomes.len() - failures,
        failures,
        first_failure: outcomes.into_iter().flatten().next(),
    }
}

pub fn run_invariance_trials(config: &TrialConfig) -> TrialReport {
    run_suite(Suite::Invariance, config)
}

pub fn run_special_case_trials(config: &TrialConfig) -> TrialReport {
    run_suite(Suite::SpecialCase, config)
}

pub fn run_desargues_trials(config: &TrialConfig) -> TrialReport {
    run_suite(Suite::Desargues, config)
}

pub fn run_axiom_suite(config: &TrialConfig) -> TrialReport {
    run_suite(Suite::Axioms, config)
}
