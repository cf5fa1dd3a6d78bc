//! Belief formation about an unknown probability distribution.
//!
//! An agent entertains a finite set of candidate distributions (worlds) over
//! a finite outcome alphabet, ranked by a plausibility map. Observing
//! samples reweights each world by the likelihood it gives the sample;
//! learning a linear constraint discards the worlds that violate it. The
//! agent believes whatever holds in all maximally plausible worlds.
//!
//! - [`simplex`]: alphabets, exact rational worlds, grids, events, likelihoods, sampling
//! - [`plausibility`]: plausibility maps and conditioning
//! - [`doxastic`]: frames, models, knowledge, (conditional) belief, updates
//! - [`logic`]: formula language, parser, printer, model checker, axiom suite
//! - [`convergence`]: Monte Carlo settling experiments with a Bayesian baseline
//! - [`model_file`]: JSON model files

pub mod convergence;
pub mod doxastic;
pub mod error;
pub mod logic;
pub mod model_file;
pub mod plausibility;
pub mod proposition;
pub mod simplex;

pub use doxastic::{Frame, Model};
pub use error::{Error, Result};
pub use plausibility::{PlausibilityFn, PlausibilityState};
pub use proposition::Proposition;
pub use simplex::{MassFunction, ObservationEvent, OutcomeAlphabet, Rational};
