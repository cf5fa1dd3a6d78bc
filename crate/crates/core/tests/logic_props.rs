use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statlearn::logic::random::{random_formula, random_model, random_observations, ModelSamplerConfig};
use statlearn::logic::{extension, parse, print, valid_in_model, Formula};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_then_parse_is_identity(seed in any::<u64>(), depth in 0usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_model(&mut rng, &ModelSamplerConfig::default()).unwrap();
        let f = random_formula(&mut rng, m.alphabet(), depth);
        let text = print(&f);
        let back = parse(&text, m.alphabet()).map_err(|e| TestCaseError::fail(format!("{}: {}", text, e)))?;
        prop_assert_eq!(&back, &f, "{}", text);
        prop_assert_eq!(print(&back), text);
    }

    #[test]
    fn belief_and_knowledge_ignore_the_world(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_model(&mut rng, &ModelSamplerConfig::default()).unwrap();
        let phi = random_formula(&mut rng, m.alphabet(), 2);
        let cond = random_formula(&mut rng, m.alphabet(), 1);
        let obs = random_observations(&mut rng, m.alphabet());
        for f in [
            Formula::believe(phi.clone()),
            Formula::believe_given(phi.clone(), cond),
            Formula::believe_given_obs(phi.clone(), obs),
            Formula::know(phi),
        ] {
            let ext = extension(&m, &f).unwrap();
            prop_assert!(ext.is_full() || ext.is_empty(), "{}", f);
        }
    }

    #[test]
    fn observation_reduction_agrees(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_model(&mut rng, &ModelSamplerConfig::default()).unwrap();
        let phi = random_formula(&mut rng, m.alphabet(), 2);
        let o = random_observations(&mut rng, m.alphabet());
        let o2 = random_observations(&mut rng, m.alphabet());
        let dynamic = Formula::after_obs(o.clone(), Formula::believe_given_obs(phi.clone(), o2.clone()));
        let both: Vec<String> = o.iter().chain(&o2).cloned().collect();
        let reduced = Formula::believe_given_obs(Formula::after_obs(o, phi), both);
        prop_assert_eq!(extension(&m, &dynamic).unwrap(), extension(&m, &reduced).unwrap());
    }

    #[test]
    fn never_believe_both_a_formula_and_its_negation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_model(&mut rng, &ModelSamplerConfig::default()).unwrap();
        let phi = random_formula(&mut rng, m.alphabet(), 3);
        let yes = valid_in_model(&m, &Formula::believe(phi.clone())).unwrap();
        let no = valid_in_model(&m, &Formula::believe(Formula::not(phi))).unwrap();
        prop_assert!(!(yes && no));
    }
}
