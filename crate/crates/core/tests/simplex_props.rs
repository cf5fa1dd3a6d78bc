use num_traits::{One, Zero};
use proptest::prelude::*;
use statlearn::simplex::{log_likelihood, sample_stream, simplex_grid};
use statlearn::{MassFunction, ObservationEvent, OutcomeAlphabet, Rational};

fn alphabet(n: usize) -> OutcomeAlphabet {
    let names: Vec<String> = (0..n).map(|i| format!("o{}", i)).collect();
    OutcomeAlphabet::new(&names).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn mass(raw: &[u32]) -> MassFunction {
    let total: i64 = raw.iter().map(|&x| x as i64).sum();
    MassFunction::from_weights(raw.iter().map(|&x| Rational::new(x as i64, total)).collect()).unwrap()
}

fn raw_weights() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..40, 2..=5).prop_filter("some mass", |v| v.iter().any(|&x| x > 0))
}

proptest! {
    #[test]
    fn constructed_mass_functions_sum_to_one(raw in raw_weights()) {
        let mu = mass(&raw);
        let sum = mu.weights().iter().fold(Rational::zero(), |a, b| a + b);
        prop_assert_eq!(sum, Rational::one());
        prop_assert!(mu.weights().iter().all(|w| *w >= Rational::zero() && *w <= Rational::one()));
    }

    #[test]
    fn off_simplex_vectors_are_rejected(raw in raw_weights(), bump in 1i64..5) {
        let mut w = mass(&raw).weights().to_vec();
        w[0] += Rational::new(bump, 7);
        prop_assert!(MassFunction::from_weights(w).is_err());
    }

    #[test]
    fn likelihood_factorizes(
        raw in raw_weights(),
        a in prop::collection::vec(0u64..30, 5),
        b in prop::collection::vec(0u64..30, 5),
    ) {
        let mu = mass(&raw);
        let n = mu.arity();
        let e1 = ObservationEvent::from_counts(a[..n].to_vec());
        let e2 = ObservationEvent::from_counts(b[..n].to_vec());
        let joint = log_likelihood(&mu, &e1.concat(&e2).unwrap()).unwrap().exp();
        let split = log_likelihood(&mu, &e1).unwrap().exp() * log_likelihood(&mu, &e2).unwrap().exp();
        if split == 0.0 {
            prop_assert_eq!(joint, 0.0);
        } else {
            prop_assert!(((joint - split) / split).abs() <= 1e-12, "{} vs {}", joint, split);
        }
    }

    #[test]
    fn streams_are_reproducible(raw in raw_weights(), seed in any::<u64>()) {
        let mu = mass(&raw);
        let a = sample_stream(&mu, 200, seed);
        let b = sample_stream(&mu, 200, seed);
        prop_assert_eq!(&a.outcomes, &b.outcomes);
        // never an impossible outcome
        prop_assert!(a.outcomes.iter().all(|&o| mu.weight(o) > Rational::zero()));
    }
}

#[test]
fn grids_are_complete() {
    for n in 2..=4usize {
        let a = alphabet(n);
        for big_n in 1..=12u32 {
            let grid = simplex_grid(&a, big_n).unwrap();
            let expected = binomial(big_n as u64 + n as u64 - 1, n as u64 - 1);
            assert_eq!(grid.len() as u64, expected, "n={} N={}", n, big_n);
            for mu in &grid {
                let sum = mu.weights().iter().fold(Rational::zero(), |a, b| a + b);
                assert_eq!(sum, Rational::one());
                assert!(mu.weights().iter().all(|w| (*w * Rational::from_integer(big_n as i64)).is_integer()));
            }
            let mut dedup = grid.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), grid.len());
        }
    }
}

#[test]
fn fair_coin_frequencies_concentrate() {
    let fair = MassFunction::from_weights(vec![Rational::new(1, 2), Rational::new(1, 2)]).unwrap();
    let seeds = 200u64;
    let close = (0..seeds)
        .filter(|&s| {
            let stream = sample_stream(&fair, 100_000, s);
            let heads = stream.outcomes.iter().filter(|&&o| o == 0).count();
            (heads as f64 / 1e5 - 0.5).abs() <= 0.01
        })
        .count();
    assert!(close as f64 >= 0.99 * seeds as f64, "{} of {}", close, seeds);
}

#[test]
fn three_outcome_frequencies_approach_truth() {
    let truth = MassFunction::from_weights(vec![Rational::new(1, 2), Rational::new(3, 10), Rational::new(1, 5)]).unwrap();
    for seed in 0..20 {
        let e = sample_stream(&truth, 50_000, seed).prefix_event(3, 50_000);
        for (i, &c) in e.counts().iter().enumerate() {
            let target = truth.to_f64()[i];
            assert!((c as f64 / 5e4 - target).abs() < 0.015, "seed {} outcome {}", seed, i);
        }
    }
}
