//! Plausibility maps over worlds and plausibilistic conditioning.
//!
//! A [`PlausibilityState`] stores `ln pla` of its base plausibility map
//! together with the accumulated observation event. Conditioned values are
//! always recomputed from `(base, accumulated counts)`, which makes repeated
//! conditioning independent of order down to the last bit: integer count
//! addition is associative and the log-likelihood is a fixed function of the
//! counts.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::proposition::Proposition;
use crate::simplex::{log_likelihood_from_logs, rational_to_f64, MassFunction, ObservationEvent};

/// Relative tolerance under which two log-plausibilities count as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// How plausibility is assigned to worlds before any evidence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlausibilityFn {
    /// Shannon entropy (natural log).
    Entropy,
    /// Product of the weights, the order-equivalent exponential of the
    /// sum-of-logs "centre of mass" score.
    CentreOfMass,
    /// Explicit non-negative value per world index.
    Tabulated(BTreeMap<usize, f64>),
}

impl PlausibilityFn {
    /// Constant plausibility 1 on `n` worlds.
    pub fn constant(n: usize) -> Self {
        PlausibilityFn::Tabulated((0..n).map(|i| (i, 1.0)).collect())
    }

    /// Plausibility of world `index` (whose distribution is `mu`).
    pub fn value(&self, index: usize, mu: &MassFunction) -> Result<f64> {
        let v = match self {
            PlausibilityFn::Entropy => entropy_plausibility(mu),
            PlausibilityFn::CentreOfMass => centre_of_mass_plausibility(mu),
            PlausibilityFn::Tabulated(table) => {
                *table.get(&index).ok_or(Error::IncompleteTable(index))?
            }
        };
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidPlausibility { index, value: v });
        }
        Ok(v)
    }

    fn log_value(&self, index: usize, mu: &MassFunction) -> Result<f64> {
        match self {
            // Sum of logs directly; the product underflows on long alphabets.
            PlausibilityFn::CentreOfMass => Ok(mu
                .ln_weights()
                .iter()
                .fold(0.0, |acc, &l| acc + l)),
            _ => Ok(self.value(index, mu)?.ln()),
        }
    }

    fn restricted(&self, kept: &[usize]) -> Self {
        match self {
            PlausibilityFn::Tabulated(table) => PlausibilityFn::Tabulated(
                kept.iter()
                    .enumerate()
                    .filter_map(|(new, old)| table.get(old).map(|&v| (new, v)))
                    .collect(),
            ),
            other => other.clone(),
        }
    }
}

/// Shannon entropy `-sum mu(o) ln mu(o)`, with `0 ln 0 = 0`.
pub fn entropy_plausibility(mu: &MassFunction) -> f64 {
    -mu.to_f64()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum::<f64>()
}

/// Product of the weights; zero anywhere on the simplex boundary.
pub fn centre_of_mass_plausibility(mu: &MassFunction) -> f64 {
    mu.weights().iter().map(rational_to_f64).product()
}

/// True when two log-plausibilities are equal up to [`TIE_TOLERANCE`].
pub fn log_values_tie(a: f64, b: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    (a - b).abs() <= TIE_TOLERANCE * 1f64.max(a.abs()).max(b.abs())
}

/// Plausibility of every world of a frame after some sampling evidence.
#[derive(Debug, Clone)]
pub struct PlausibilityState {
    worlds: Arc<[MassFunction]>,
    ln_weights: Arc<[Vec<f64>]>,
    base: Arc<[f64]>,
    base_fn: Arc<PlausibilityFn>,
    event: ObservationEvent,
    log_values: Vec<f64>,
}

impl PlausibilityState {
    /// Builds the unconditioned state of the frame `(worlds, f)`.
    pub fn new(worlds: Vec<MassFunction>, f: PlausibilityFn) -> Result<Self> {
        let first = worlds.first().ok_or(Error::EmptyWorldSet)?;
        let arity = first.arity();
        if let Some(w) = worlds.iter().find(|w| w.arity() != arity) {
            return Err(Error::AlphabetMismatch {
                expected: arity,
                found: w.arity(),
            });
        }
        let base = worlds
            .iter()
            .enumerate()
            .map(|(i, w)| f.log_value(i, w))
            .collect::<Result<Vec<f64>>>()?;
        let ln_weights: Vec<Vec<f64>> = worlds.iter().map(|w| w.ln_weights()).collect();
        Ok(Self {
            log_values: base.clone(),
            worlds: worlds.into(),
            ln_weights: ln_weights.into(),
            base: base.into(),
            base_fn: Arc::new(f),
            event: ObservationEvent::empty(arity),
        })
    }

    pub fn worlds(&self) -> &[MassFunction] {
        &self.worlds
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.event.arity()
    }

    /// `ln pla_e` per world; `-inf` encodes plausibility zero.
    pub fn log_values(&self) -> &[f64] {
        &self.log_values
    }

    /// `ln pla` before any conditioning.
    pub fn base_log_values(&self) -> &[f64] {
        &self.base
    }

    pub fn plausibilities(&self) -> Vec<f64> {
        self.log_values.iter().map(|l| l.exp()).collect()
    }

    pub fn base_fn(&self) -> &PlausibilityFn {
        &self.base_fn
    }

    /// Concatenation of every event conditioned on so far.
    pub fn event(&self) -> &ObservationEvent {
        &self.event
    }

    pub fn index_of(&self, world: &MassFunction) -> Option<usize> {
        self.worlds.iter().position(|w| w == world)
    }

    /// Plausibilistic conditioning: multiplies each world's plausibility by
    /// the likelihood it assigns to `e`. Returns a fresh state.
    pub fn condition(&self, e: &ObservationEvent) -> Result<Self> {
        if e.arity() != self.arity() {
            return Err(Error::AlphabetMismatch {
                expected: self.arity(),
                found: e.arity(),
            });
        }
        let event = self.event.concat(e)?;
        let log_values = self
            .base
            .iter()
            .zip(self.ln_weights.iter())
            .map(|(&b, lw)| b + log_likelihood_from_logs(lw, event.counts()))
            .collect();
        Ok(Self {
            worlds: Arc::clone(&self.worlds),
            ln_weights: Arc::clone(&self.ln_weights),
            base: Arc::clone(&self.base),
            base_fn: Arc::clone(&self.base_fn),
            event,
            log_values,
        })
    }

    /// Keeps only the worlds of `p`, carrying their values over unchanged.
    pub fn restrict(&self, p: &Proposition) -> Result<Self> {
        p.check_universe(self.len())?;
        let kept = p.indices();
        if kept.is_empty() {
            return Err(Error::EmptyUpdate);
        }
        let pick_f64 = |v: &[f64]| kept.iter().map(|&i| v[i]).collect::<Vec<f64>>();
        Ok(Self {
            worlds: kept.iter().map(|&i| self.worlds[i].clone()).collect::<Vec<_>>().into(),
            ln_weights: kept
                .iter()
                .map(|&i| self.ln_weights[i].clone())
                .collect::<Vec<_>>()
                .into(),
            base: pick_f64(&self.base).into(),
            base_fn: Arc::new(self.base_fn.restricted(&kept)),
            event: self.event.clone(),
            log_values: pick_f64(&self.log_values),
        })
    }

    /// The maximally plausible worlds. Never empty: when every value is
    /// `-inf`, every world is returned.
    pub fn argmax_worlds(&self) -> Proposition {
        self.argmax_within(&Proposition::full(self.len()))
    }

    /// The maximally plausible worlds among those of `q` (empty iff `q` is).
    pub fn argmax_within(&self, q: &Proposition) -> Proposition {
        let max = self
            .log_values
            .iter()
            .zip(q.mask())
            .filter(|(_, &m)| m)
            .map(|(&v, _)| v)
            .fold(f64::NEG_INFINITY, f64::max);
        Proposition::from_predicate(self.len(), |i| {
            q.contains(i) && log_values_tie(self.log_values[i], max)
        })
    }
}
