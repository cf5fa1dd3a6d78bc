//! Random models and formulas for property tests and the axiom suite.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::ast::{Formula, LinIneq};
use crate::doxastic::{Frame, Model};
use crate::error::Result;
use crate::plausibility::{PlausibilityFn, PlausibilityState};
use crate::simplex::{simplex_grid, ObservationEvent, OutcomeAlphabet, Rational};

/// Shape of the random models drawn by [`random_model`].
#[derive(Debug, Clone)]
pub struct ModelSamplerConfig {
    pub alphabets: Vec<OutcomeAlphabet>,
    /// Grids are drawn with resolution in `1..=max_resolution`.
    pub max_resolution: u32,
    /// Probability that a grid point is kept as a world.
    pub keep_probability: f64,
    /// Upper bound on each count of the initial conditioning event.
    pub max_initial_count: u64,
}

impl Default for ModelSamplerConfig {
    fn default() -> Self {
        Self {
            alphabets: vec![
                OutcomeAlphabet::new(&["H", "T"]).expect("valid"),
                OutcomeAlphabet::new(&["R", "B", "G"]).expect("valid"),
            ],
            max_resolution: 6,
            keep_probability: 0.6,
            max_initial_count: 3,
        }
    }
}

fn random_plausibility<R: Rng>(rng: &mut R, n: usize) -> PlausibilityFn {
    match rng.gen_range(0..5) {
        0 => PlausibilityFn::Entropy,
        1 => PlausibilityFn::CentreOfMass,
        2 => PlausibilityFn::constant(n),
        // small integers: many exact ties and some zeros
        3 => PlausibilityFn::Tabulated(
            (0..n).map(|i| (i, rng.gen_range(0..4) as f64)).collect::<BTreeMap<_, _>>(),
        ),
        _ => PlausibilityFn::Tabulated((0..n).map(|i| (i, rng.gen::<f64>())).collect()),
    }
}

/// A random finite model: a random subset of a random grid, a random
/// plausibility map, and possibly some evidence already conditioned on.
pub fn random_model<R: Rng>(rng: &mut R, cfg: &ModelSamplerConfig) -> Result<Model> {
    let alphabet = cfg
        .alphabets
        .choose(rng)
        .expect("at least one alphabet")
        .clone();
    let resolution = rng.gen_range(1..=cfg.max_resolution.max(1));
    let grid = simplex_grid(&alphabet, resolution)?;
    let mut worlds: Vec<_> = grid
        .iter()
        .filter(|_| rng.gen_bool(cfg.keep_probability))
        .cloned()
        .collect();
    if worlds.is_empty() {
        worlds.push(grid.choose(rng).expect("grid is non-empty").clone());
    }
    let f = random_plausibility(rng, worlds.len());
    let mut state = PlausibilityState::new(worlds, f)?;
    if cfg.max_initial_count > 0 && rng.gen_bool(0.5) {
        let counts = (0..alphabet.len())
            .map(|_| rng.gen_range(0..=cfg.max_initial_count))
            .collect();
        state = state.condition(&ObservationEvent::from_counts(counts))?;
    }
    Model::new(alphabet, Frame::from_state(state))
}

fn random_rational<R: Rng>(rng: &mut R, max_abs_numer: i64, denoms: &[i64]) -> Rational {
    let d = *denoms.choose(rng).expect("non-empty");
    Rational::new(rng.gen_range(-max_abs_numer..=max_abs_numer), d)
}

/// A random linear inequality over the alphabet, tuned so that its
/// extension on small grids is usually neither empty nor full.
pub fn random_lin<R: Rng>(rng: &mut R, alphabet: &OutcomeAlphabet) -> LinIneq {
    let k = rng.gen_range(1..=2.min(alphabet.len()));
    let mut outcomes: Vec<&String> = alphabet.names().iter().collect();
    outcomes.shuffle(rng);
    let terms = outcomes[..k]
        .iter()
        .map(|o| {
            let mut a = random_rational(rng, 2, &[1, 2]);
            if a == Rational::from_integer(0) {
                a = Rational::from_integer(1);
            }
            (a, (*o).clone())
        })
        .collect();
    LinIneq {
        terms,
        bound: random_rational(rng, 4, &[4, 5, 3]),
    }
}

/// `T` or a random linear inequality.
pub fn random_atom<R: Rng>(rng: &mut R, alphabet: &OutcomeAlphabet) -> Formula {
    if rng.gen_bool(0.1) {
        Formula::Top
    } else {
        Formula::Lin(random_lin(rng, alphabet))
    }
}

/// A non-empty list of one or two random outcome names.
pub fn random_observations<R: Rng>(rng: &mut R, alphabet: &OutcomeAlphabet) -> Vec<String> {
    let len = rng.gen_range(1..=2);
    (0..len)
        .map(|_| alphabet.names().choose(rng).expect("non-empty").clone())
        .collect()
}

/// A random formula of nesting depth at most `depth`.
pub fn random_formula<R: Rng>(rng: &mut R, alphabet: &OutcomeAlphabet, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return random_atom(rng, alphabet);
    }
    let sub = |rng: &mut R| random_formula(rng, alphabet, depth - 1);
    match rng.gen_range(0..8) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        3 => Formula::know(sub(rng)),
        4 => {
            let obs = random_observations(rng, alphabet);
            Formula::BelObs(Box::new(sub(rng)), obs)
        }
        5 => {
            let body = sub(rng);
            let cond = if rng.gen_bool(0.3) { Formula::Top } else { sub(rng) };
            Formula::believe_given(body, cond)
        }
        6 => {
            let obs = random_observations(rng, alphabet);
            Formula::DynObs(obs, Box::new(sub(rng)))
        }
        _ => Formula::after_learning(sub(rng), sub(rng)),
    }
}
