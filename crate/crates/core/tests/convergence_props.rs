use proptest::prelude::*;
use statlearn::convergence::{run_experiment, run_trial, TrialConfig};
use statlearn::simplex::{sample_stream, simplex_grid};
use statlearn::{MassFunction, ObservationEvent, OutcomeAlphabet, PlausibilityFn, PlausibilityState, Rational};

fn coin() -> OutcomeAlphabet {
    OutcomeAlphabet::new(&["H", "T"]).unwrap()
}

fn heads(p: Rational) -> MassFunction {
    MassFunction::from_weights(vec![p, Rational::from_integer(1) - p]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_heads_never_lowers_the_believed_bias(big_n in 2u32..=20, steps in 1usize..60) {
        let grid = simplex_grid(&coin(), big_n).unwrap();
        let mut state = PlausibilityState::new(grid.clone(), PlausibilityFn::constant(grid.len())).unwrap();
        let mut last = Rational::from_integer(0);
        for _ in 0..steps {
            state = state.condition(&ObservationEvent::single(2, 0)).unwrap();
            let top = state
                .argmax_worlds()
                .indices()
                .iter()
                .map(|&i| grid[i].weight(0))
                .max()
                .unwrap();
            prop_assert!(top >= last);
            last = top;
        }
    }

    #[test]
    fn stepwise_and_batch_conditioning_agree_on_streams(seed in any::<u64>(), len in 0usize..400) {
        let a = OutcomeAlphabet::new(&["R", "B", "G"]).unwrap();
        let grid = simplex_grid(&a, 6).unwrap();
        let truth = grid[grid.len() / 2].clone();
        let stream = sample_stream(&truth, len, seed);
        let start = PlausibilityState::new(grid, PlausibilityFn::Entropy).unwrap();
        let mut state = start.clone();
        for &o in &stream.outcomes {
            state = state.condition(&ObservationEvent::single(3, o)).unwrap();
        }
        let batch = start.condition(&stream.prefix_event(3, len)).unwrap();
        prop_assert_eq!(state.log_values(), batch.log_values());
    }

    #[test]
    fn isolated_truth_is_believed_exactly_once_settled(seed in any::<u64>(), k in 1i64..10) {
        let grid = simplex_grid(&coin(), 10).unwrap();
        let truth = heads(Rational::new(k, 10));
        let eps = TrialConfig::isolating_epsilon(&grid, &truth).unwrap().unwrap();
        let state = PlausibilityState::new(grid.clone(), PlausibilityFn::Entropy).unwrap();
        let cfg = TrialConfig::new(state, truth.clone(), eps, 400, seed);
        let r = run_trial(&cfg).unwrap();
        if r.settled {
            let t = grid.iter().position(|w| *w == truth).unwrap();
            prop_assert_eq!(r.final_belief, vec![t]);
        }
    }
}

#[test]
fn longer_horizons_do_not_lose_settled_trials_in_practice() {
    let worlds = vec![heads(Rational::new(3, 10)), heads(Rational::new(1, 2)), heads(Rational::new(7, 10))];
    let state = PlausibilityState::new(worlds, PlausibilityFn::constant(3)).unwrap();
    let mut prev = 0.0;
    for horizon in [50, 100, 200, 400, 800] {
        let cfg = TrialConfig::new(state.clone(), heads(Rational::new(1, 2)), 0.1, horizon, 0);
        let s = run_experiment(&cfg, 200, 5, false).unwrap();
        assert!(s.settle_fraction >= prev, "horizon {}: {} < {}", horizon, s.settle_fraction, prev);
        prev = s.settle_fraction;
    }
    assert!(prev >= 0.99);
}
