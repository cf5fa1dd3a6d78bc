//! Monte Carlo check that sampling-based conditioning makes belief settle
//! inside any epsilon-ball around the true distribution, with a Bayesian
//! learner as baseline.
//!
//! "Eventually stays" can only be witnessed up to a finite horizon: a trial
//! is settled when the ball is believed at the horizon, and its settle time
//! is the least `K` such that the ball is believed for every `m` in
//! `K..=horizon`.
//!
//! Trial `i` of an experiment samples its stream with seed
//! `trial_seed(base_seed, i)`; the plausibilistic learner and the Bayesian
//! baseline of the same trial see the same stream.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::plausibility::PlausibilityState;
use crate::proposition::Proposition;
use crate::simplex::{epsilon_ball, euclidean_distance, MassFunction, ObservationEvent, StreamSampler};

/// Posterior mass the Bayesian baseline must put on the ball to count as
/// believing it.
pub const BAYES_THRESHOLD: f64 = 0.95;

#[derive(Debug, Clone)]
pub struct TrialConfig {
    /// Initial plausibility state over the candidate worlds.
    pub initial: PlausibilityState,
    pub truth: MassFunction,
    pub epsilon: f64,
    pub horizon: usize,
    pub seed: u64,
    /// Record the believed worlds after every observation.
    pub record_trace: bool,
}

impl TrialConfig {
    pub fn new(initial: PlausibilityState, truth: MassFunction, epsilon: f64, horizon: usize, seed: u64) -> Self {
        Self {
            initial,
            truth,
            epsilon,
            horizon,
            seed,
            record_trace: false,
        }
    }

    /// Half the distance from the truth to its nearest other world, which
    /// isolates the truth in its ball. `None` for a single-world frame.
    pub fn isolating_epsilon(worlds: &[MassFunction], truth: &MassFunction) -> Result<Option<f64>> {
        let mut best: Option<f64> = None;
        for w in worlds.iter().filter(|w| *w != truth) {
            let d = euclidean_distance(truth, w)?;
            best = Some(best.map_or(d, |b: f64| b.min(d)));
        }
        Ok(best.map(|d| d / 2.0))
    }

    fn check_common(&self) -> Result<()> {
        if !(self.epsilon > 0.0) {
            return Err(Error::InvalidEpsilon(self.epsilon));
        }
        if self.truth.arity() != self.initial.arity() {
            return Err(Error::AlphabetMismatch {
                expected: self.initial.arity(),
                found: self.truth.arity(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialResult {
    pub settled: bool,
    pub settle_time: Option<usize>,
    /// Believed world indices at the horizon (empty when the horizon is 0).
    /// For the Bayesian baseline these are the maximum-a-posteriori worlds.
    pub final_belief: Vec<usize>,
    /// Believed world indices after each observation, when recorded.
    pub belief_trace: Option<Vec<Vec<usize>>>,
}

/// Tracks the last step at which the ball was not believed.
struct SettleTracker {
    last_miss: usize,
    steps: usize,
}

impl SettleTracker {
    fn new() -> Self {
        Self {
            last_miss: 0,
            steps: 0,
        }
    }

    fn record(&mut self, holds: bool) {
        self.steps += 1;
        if !holds {
            self.last_miss = self.steps;
        }
    }

    fn settle_time(&self) -> Option<usize> {
        (self.steps > 0 && self.last_miss < self.steps).then_some(self.last_miss + 1)
    }
}

/// One run of the plausibilistic learner on a freshly sampled stream.
pub fn run_trial(cfg: &TrialConfig) -> Result<TrialResult> {
    cfg.check_common()?;
    let truth_index = cfg.initial.index_of(&cfg.truth).ok_or(Error::TruthNotInWorlds)?;
    if cfg.initial.base_log_values()[truth_index] == f64::NEG_INFINITY {
        return Err(Error::ZeroPlausibilityTruth);
    }
    let ball = epsilon_ball(&cfg.truth, cfg.epsilon, cfg.initial.worlds())?;
    let arity = cfg.truth.arity();
    let mut sampler = StreamSampler::new(&cfg.truth, cfg.seed);
    let mut state = cfg.initial.clone();
    let mut tracker = SettleTracker::new();
    let mut trace = cfg.record_trace.then(Vec::new);
    let mut belief = Proposition::empty(0);
    let mut seen = ObservationEvent::empty(arity);
    for _ in 0..cfg.horizon {
        let single = ObservationEvent::single(arity, sampler.next_outcome());
        state = state.condition(&single)?;
        seen = seen.concat(&single)?;
        belief = state.argmax_worlds();
        tracker.record(belief.is_subset(&ball));
        if let Some(t) = trace.as_mut() {
            t.push(belief.indices());
        }
    }
    debug_assert_eq!(
        state.log_values(),
        cfg.initial.condition(&seen)?.log_values(),
        "incremental conditioning must equal batch conditioning"
    );
    let settle_time = tracker.settle_time();
    Ok(TrialResult {
        settled: settle_time.is_some(),
        settle_time,
        final_belief: belief.indices(),
        belief_trace: trace,
    })
}

/// Posterior mass of `ball` under a uniform prior, from per-world
/// log-likelihoods. `None` if every world has likelihood zero.
fn posterior_mass(log_lik: &[f64], ball: &Proposition) -> Option<f64> {
    let max = log_lik.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return None;
    }
    let mut inside = 0.0;
    let mut total = 0.0;
    for (i, &l) in log_lik.iter().enumerate() {
        let w = (l - max).exp();
        total += w;
        if ball.contains(i) {
            inside += w;
        }
    }
    Some(inside / total)
}

/// Maximum-a-posteriori worlds under the uniform prior.
fn map_worlds(log_lik: &[f64]) -> Vec<usize> {
    let best = log_lik.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if best == f64::NEG_INFINITY {
        return Vec::new();
    }
    (0..log_lik.len()).filter(|&i| log_lik[i] == best).collect()
}

/// The Bayesian baseline on the same stream as [`run_trial`] with the same
/// config: uniform prior over the worlds, and the ball counts as believed
/// once its posterior mass exceeds [`BAYES_THRESHOLD`]. The truth need not
/// be one of the worlds.
pub fn bayesian_baseline_trial(cfg: &TrialConfig) -> Result<TrialResult> {
    cfg.check_common()?;
    let worlds = cfg.initial.worlds();
    let ball = epsilon_ball(&cfg.truth, cfg.epsilon, worlds)?;
    let ln_weights: Vec<Vec<f64>> = worlds.iter().map(|w| w.ln_weights()).collect();
    let mut log_lik = vec![0.0; worlds.len()];
    let arity = cfg.truth.arity();
    let mut sampler = StreamSampler::new(&cfg.truth, cfg.seed);
    let mut tracker = SettleTracker::new();
    let mut trace = cfg.record_trace.then(Vec::new);
    let mut counts = ObservationEvent::empty(arity);
    for _ in 0..cfg.horizon {
        counts = counts.concat(&ObservationEvent::single(arity, sampler.next_outcome()))?;
        for (l, lw) in log_lik.iter_mut().zip(&ln_weights) {
            *l = crate::simplex::log_likelihood_from_logs(lw, counts.counts());
        }
        let mass = posterior_mass(&log_lik, &ball);
        tracker.record(mass.is_some_and(|m| m > BAYES_THRESHOLD));
        if let Some(t) = trace.as_mut() {
            t.push(map_worlds(&log_lik));
        }
    }
    let settle_time = tracker.settle_time();
    Ok(TrialResult {
        settled: settle_time.is_some(),
        settle_time,
        final_belief: if cfg.horizon == 0 { Vec::new() } else { map_worlds(&log_lik) },
        belief_trace: trace,
    })
}

/// Seed of trial `index` in an experiment seeded with `base_seed`
/// (a SplitMix64 step over the pair).
pub fn trial_seed(base_seed: u64, index: usize) -> u64 {
    let mut z = base_seed ^ (index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SettleQuantiles {
    pub median: usize,
    pub p90: usize,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LearnerSummary {
    pub settled: usize,
    pub settle_fraction: f64,
    /// Over settled trials only; `None` when no trial settled.
    pub settle_time_quantiles: Option<SettleQuantiles>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub settled: bool,
    pub settle_time: Option<usize>,
    /// Settled with belief exactly `{truth}` at the horizon.
    pub exact: bool,
    pub baseline_settled: Option<bool>,
    pub baseline_settle_time: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub trials: usize,
    pub horizon: usize,
    pub epsilon: f64,
    pub base_seed: u64,
    pub settled: usize,
    pub settle_fraction: f64,
    pub settle_time_quantiles: Option<SettleQuantiles>,
    /// Fraction of trials that ended believing exactly the truth.
    pub exact_fraction: f64,
    pub baseline: Option<LearnerSummary>,
    #[serde(skip)]
    pub per_trial: Vec<TrialRecord>,
}

/// Nearest-rank quantile of sorted data.
fn nearest_rank(sorted: &[usize], q: f64) -> usize {
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

fn summarize<I: Iterator<Item = Option<usize>>>(times: I, trials: usize) -> LearnerSummary {
    let mut settled: Vec<usize> = times.flatten().collect();
    settled.sort_unstable();
    let quantiles = (!settled.is_empty()).then(|| SettleQuantiles {
        median: nearest_rank(&settled, 0.5),
        p90: nearest_rank(&settled, 0.9),
        max: *settled.last().expect("non-empty"),
    });
    LearnerSummary {
        settled: settled.len(),
        settle_fraction: settled.len() as f64 / trials as f64,
        settle_time_quantiles: quantiles,
    }
}

/// Runs `trials` independent trials in parallel. The summary depends only
/// on the inputs, not on thread scheduling.
pub fn run_experiment(cfg: &TrialConfig, trials: usize, base_seed: u64, baseline: bool) -> Result<ExperimentSummary> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let truth_index = cfg.initial.index_of(&cfg.truth);
    let records: Vec<TrialRecord> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let trial_cfg = TrialConfig {
                seed: trial_seed(base_seed, i),
                record_trace: false,
                ..cfg.clone()
            };
            let r = run_trial(&trial_cfg)?;
            let b = if baseline {
                Some(bayesian_baseline_trial(&trial_cfg)?)
            } else {
                None
            };
            Ok(TrialRecord {
                trial: i,
                settled: r.settled,
                settle_time: r.settle_time,
                exact: r.settled && truth_index.is_some_and(|t| r.final_belief == [t]),
                baseline_settled: b.as_ref().map(|b| b.settled),
                baseline_settle_time: b.and_then(|b| b.settle_time),
            })
        })
        .collect::<Result<_>>()?;
    let main = summarize(records.iter().map(|r| r.settle_time), trials);
    let baseline_summary =
        baseline.then(|| summarize(records.iter().map(|r| r.baseline_settle_time), trials));
    Ok(ExperimentSummary {
        trials,
        horizon: cfg.horizon,
        epsilon: cfg.epsilon,
        base_seed,
        settled: main.settled,
        settle_fraction: main.settle_fraction,
        settle_time_quantiles: main.settle_time_quantiles,
        exact_fraction: records.iter().filter(|r| r.exact).count() as f64 / trials as f64,
        baseline: baseline_summary,
        per_trial: records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plausibility::PlausibilityFn;
    use crate::simplex::{simplex_grid, OutcomeAlphabet, Rational};

    fn coin(h: (i64, i64)) -> MassFunction {
        let p = Rational::new(h.0, h.1);
        MassFunction::from_weights(vec![p, Rational::from_integer(1) - p]).unwrap()
    }

    fn three_coins(f: PlausibilityFn) -> PlausibilityState {
        PlausibilityState::new(vec![coin((3, 10)), coin((1, 2)), coin((7, 10))], f).unwrap()
    }

    #[test]
    fn singleton_frame_settles_immediately() {
        let s = PlausibilityState::new(vec![coin((7, 10))], PlausibilityFn::Entropy).unwrap();
        let cfg = TrialConfig::new(s, coin((7, 10)), 0.1, 50, 3);
        let r = run_trial(&cfg).unwrap();
        assert_eq!(r.settle_time, Some(1));
        let b = bayesian_baseline_trial(&cfg).unwrap();
        assert_eq!(b.settle_time, Some(1));
    }

    #[test]
    fn three_coin_worlds_settle_on_truth() {
        let s = three_coins(PlausibilityFn::Entropy);
        let eps = TrialConfig::isolating_epsilon(s.worlds(), &coin((7, 10))).unwrap().unwrap();
        assert!((eps - 2f64.sqrt() * 0.1).abs() < 1e-12);
        let cfg = TrialConfig::new(s, coin((7, 10)), eps, 500, 17);
        let r = run_trial(&cfg).unwrap();
        assert!(r.settled);
        assert_eq!(r.final_belief, vec![2]);
        let b = bayesian_baseline_trial(&cfg).unwrap();
        assert!(b.settled);
    }

    #[test]
    fn zero_plausibility_truth_rejected() {
        let a = OutcomeAlphabet::new(&["H", "T"]).unwrap();
        let s = PlausibilityState::new(simplex_grid(&a, 4).unwrap(), PlausibilityFn::CentreOfMass).unwrap();
        let cfg = TrialConfig::new(s, coin((1, 1)), 0.1, 10, 0);
        assert_eq!(run_trial(&cfg).unwrap_err(), Error::ZeroPlausibilityTruth);
    }

    #[test]
    fn truth_outside_worlds() {
        let s = three_coins(PlausibilityFn::constant(3));
        let cfg = TrialConfig::new(s, coin((9, 10)), 0.05, 300, 1);
        assert_eq!(run_trial(&cfg).unwrap_err(), Error::TruthNotInWorlds);
        let b = bayesian_baseline_trial(&cfg).unwrap();
        assert!(!b.settled);
        assert_eq!(b.settle_time, None);
    }

    #[test]
    fn zero_horizon_never_settles() {
        let cfg = TrialConfig::new(three_coins(PlausibilityFn::Entropy), coin((7, 10)), 0.1, 0, 1);
        let s = run_experiment(&cfg, 5, 1, true).unwrap();
        assert_eq!(s.settle_fraction, 0.0);
        assert_eq!(s.settle_time_quantiles, None);
        assert_eq!(s.baseline.unwrap().settle_fraction, 0.0);
    }

    #[test]
    fn experiments_are_reproducible() {
        let cfg = TrialConfig::new(three_coins(PlausibilityFn::Entropy), coin((7, 10)), 0.1, 200, 0);
        let a = run_experiment(&cfg, 20, 42, true).unwrap();
        let b = run_experiment(&cfg, 20, 42, true).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.per_trial, b.per_trial);
        assert_eq!(run_experiment(&cfg, 0, 42, false).unwrap_err(), Error::NoTrials);
    }

    #[test]
    fn tracker_semantics() {
        let mut t = SettleTracker::new();
        assert_eq!(t.settle_time(), None);
        for h in [false, true, false, true, true] {
            t.record(h);
        }
        assert_eq!(t.settle_time(), Some(4));
        t.record(false);
        assert_eq!(t.settle_time(), None);
    }

    #[test]
    fn quantiles() {
        assert_eq!(nearest_rank(&[1, 2, 3, 4], 0.5), 2);
        assert_eq!(nearest_rank(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10], 0.9), 9);
        assert_eq!(nearest_rank(&[7], 0.9), 7);
    }

    #[test]
    fn trace_records_every_step() {
        let mut cfg = TrialConfig::new(three_coins(PlausibilityFn::Entropy), coin((7, 10)), 0.1, 25, 5);
        cfg.record_trace = true;
        let r = run_trial(&cfg).unwrap();
        assert_eq!(r.belief_trace.unwrap().len(), 25);
    }
}
