//! Exact computations in the constructive real projective plane, modelled
//! over the rationals.
//!
//! Points and lines are canonical integer triples, so equality is
//! structural and every apartness decision carries a nonzero integer as
//! its certificate. On top of that sit the harmonic conjugate construction
//! and its lemma audit ([`harmonic`]), Desargues configurations
//! ([`desargues`]), seeded verification campaigns ([`harness`]), a small
//! scene language ([`scene`]) with SVG output ([`render`]), and the
//! `harmonic` command line ([`cli`]).
//!
//! ```
//! use harmonic_plane::harmonic::{auto_select_aux, harmonic_conjugate};
//! use harmonic_plane::ProjPoint;
//!
//! let a: ProjPoint = "[0:0:1]".parse().unwrap();
//! let b: ProjPoint = "[1:0:1]".parse().unwrap();
//! let c: ProjPoint = "[2:0:1]".parse().unwrap();
//! let aux = auto_select_aux(&a, &b, &c, &[]).unwrap();
//! assert_eq!(harmonic_conjugate(&a, &b, &c, &aux).unwrap().d.to_string(), "[2:0:3]");
//! ```

pub mod apartness;
pub mod cli;
pub mod desargues;
pub mod error;
pub mod harmonic;
pub mod harness;
pub mod projective;
pub mod rational;
pub mod render;
pub mod scene;

pub use error::{Error, Result};
pub use projective::{incident, join, meet, HomTriple, ProjLine, ProjPoint};
pub use rational::Rational;
