//! Randomised validity checking of the logic's axiom schemas.
//!
//! Each trial draws one random model and, for every schema, one random
//! instance; the instance must hold at every world of the model. Trials are
//! independent, seeded by `(seed, trial index)`, and run in parallel; the
//! report is assembled in trial order so it does not depend on scheduling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::ast::Formula;
use super::random::{random_atom, random_formula, random_model, ModelSamplerConfig};
use super::semantics::Checker;
use crate::doxastic::Model;
use crate::error::{Error, Result};
use crate::simplex::{OutcomeAlphabet, Rational};
use crate::logic::ast::LinIneq;

/// Groups of schemas, by the property they express.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemaFamily {
    /// Probability atoms, S5 knowledge and KD45 belief.
    Static,
    /// Conditional belief given propositions (AGM-style revision).
    Revision,
    /// Reduction laws for the dynamic modalities.
    Dynamic,
}

/// A schema instance: `formula` must be valid whenever `premise` (if any)
/// is valid in the same model.
struct Instance {
    formula: Formula,
    premise: Option<Formula>,
}

impl Instance {
    fn plain(formula: Formula) -> Self {
        Self {
            formula,
            premise: None,
        }
    }
}

type Generator = fn(&mut ChaCha8Rng, &OutcomeAlphabet, usize) -> Instance;

/// An axiom schema with a random instantiator.
pub struct Schema {
    pub name: &'static str,
    pub family: SchemaFamily,
    generate: Generator,
}

fn one(a: i64) -> Rational {
    Rational::from_integer(a)
}

fn pick_outcome(rng: &mut ChaCha8Rng, a: &OutcomeAlphabet) -> String {
    a.names().choose(rng).expect("non-empty").clone()
}

fn formula(rng: &mut ChaCha8Rng, a: &OutcomeAlphabet, depth: usize) -> Formula {
    random_formula(rng, a, depth)
}

fn sum_of_weights(a: &OutcomeAlphabet) -> Formula {
    let terms: Vec<(Rational, String)> = a.names().iter().map(|o| (one(1), o.clone())).collect();
    let ge = LinIneq {
        terms: terms.clone(),
        bound: one(1),
    };
    let le = LinIneq {
        terms: terms.into_iter().map(|(c, o)| (-c, o)).collect(),
        bound: one(-1),
    };
    Formula::and(Formula::Lin(ge), Formula::Lin(le))
}

/// A formula equivalent to `phi` in every model, chosen at random.
fn equivalent_rewrite(rng: &mut ChaCha8Rng, a: &OutcomeAlphabet, phi: Formula, depth: usize) -> Formula {
    match rng.gen_range(0..4) {
        0 => Formula::not(Formula::not(phi)),
        1 => Formula::and(phi, Formula::Top),
        2 => {
            let psi = formula(rng, a, depth);
            Formula::or(phi.clone(), Formula::and(phi, psi))
        }
        _ => {
            let psi = formula(rng, a, depth);
            Formula::or(
                Formula::and(phi.clone(), psi.clone()),
                Formula::and(phi, Formula::not(psi)),
            )
        }
    }
}

/// Every schema checked by [`axiom_suite`].
pub fn schemas() -> Vec<Schema> {
    use Formula as F;
    use SchemaFamily::*;
    vec![
        Schema {
            name: "w(o) >= 0",
            family: Static,
            generate: |rng, a, _| {
                Instance::plain(F::Lin(LinIneq::new(vec![(one(1), pick_outcome(rng, a))], one(0))))
            },
        },
        Schema {
            name: "sum_o w(o) = 1",
            family: Static,
            generate: |_, a, _| Instance::plain(sum_of_weights(a)),
        },
        Schema {
            name: "K(phi -> theta) -> (K phi -> K theta)",
            family: Static,
            generate: |rng, a, d| {
                let (p, t) = (formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::implies(
                    F::know(F::implies(p.clone(), t.clone())),
                    F::implies(F::know(p), F::know(t)),
                ))
            },
        },
        Schema {
            name: "K phi -> phi",
            family: Static,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                Instance::plain(F::implies(F::know(p.clone()), p))
            },
        },
        Schema {
            name: "K phi -> K K phi",
            family: Static,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                Instance::plain(F::implies(F::know(p.clone()), F::know(F::know(p))))
            },
        },
        Schema {
            name: "~K phi -> K ~K phi",
            family: Static,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                let nk = F::not(F::know(p));
                Instance::plain(F::implies(nk.clone(), F::know(nk)))
            },
        },
        Schema {
            name: "B(phi -> theta) -> (B phi -> B theta)",
            family: Static,
            generate: |rng, a, d| {
                let (p, t) = (formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::implies(
                    F::believe(F::implies(p.clone(), t.clone())),
                    F::implies(F::believe(p), F::believe(t)),
                ))
            },
        },
        Schema {
            name: "K phi -> B phi",
            family: Static,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                Instance::plain(F::implies(F::know(p.clone()), F::believe(p)))
            },
        },
        Schema {
            name: "B phi -> B B phi",
            family: Static,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                Instance::plain(F::implies(F::believe(p.clone()), F::believe(F::believe(p))))
            },
        },
        Schema {
            name: "~B phi -> B ~B phi",
            family: Static,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                let nb = F::not(F::believe(p));
                Instance::plain(F::implies(nb.clone(), F::believe(nb)))
            },
        },
        Schema {
            name: "~(B phi & B ~phi)",
            family: Static,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                Instance::plain(F::not(F::and(F::believe(p.clone()), F::believe(F::not(p)))))
            },
        },
        Schema {
            name: "B(phi | phi)",
            family: Revision,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                Instance::plain(F::believe_given(p.clone(), p))
            },
        },
        Schema {
            name: "B(theta | phi) -> (B(xi | phi & theta) <-> B(xi | phi))",
            family: Revision,
            generate: |rng, a, d| {
                let (p, t, x) = (formula(rng, a, d), formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::implies(
                    F::believe_given(t.clone(), p.clone()),
                    F::iff(
                        F::believe_given(x.clone(), F::and(p.clone(), t)),
                        F::believe_given(x, p),
                    ),
                ))
            },
        },
        Schema {
            name: "~B(~theta | phi) -> (B(xi | phi & theta) <-> B(theta -> xi | phi))",
            family: Revision,
            generate: |rng, a, d| {
                let (p, t, x) = (formula(rng, a, d), formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::implies(
                    F::not(F::believe_given(F::not(t.clone()), p.clone())),
                    F::iff(
                        F::believe_given(x.clone(), F::and(p.clone(), t.clone())),
                        F::believe_given(F::implies(t, x), p),
                    ),
                ))
            },
        },
        Schema {
            name: "phi <-> theta valid => B(xi | phi) <-> B(xi | theta)",
            family: Revision,
            generate: |rng, a, d| {
                let p = formula(rng, a, d);
                let t = equivalent_rewrite(rng, a, p.clone(), d);
                let x = formula(rng, a, d);
                Instance {
                    premise: Some(F::iff(p.clone(), t.clone())),
                    formula: F::iff(F::believe_given(x.clone(), p), F::believe_given(x, t)),
                }
            },
        },
        Schema {
            name: "[phi]q <-> (phi -> q)",
            family: Dynamic,
            generate: |rng, a, d| {
                let (p, q) = (formula(rng, a, d), random_atom(rng, a));
                Instance::plain(F::iff(F::after_learning(p.clone(), q.clone()), F::implies(p, q)))
            },
        },
        Schema {
            name: "[o]q <-> q",
            family: Dynamic,
            generate: |rng, a, _| {
                let o = vec![pick_outcome(rng, a)];
                let q = random_atom(rng, a);
                Instance::plain(F::iff(F::after_obs(o, q.clone()), q))
            },
        },
        Schema {
            name: "[phi]~theta <-> (phi -> ~[phi]theta)",
            family: Dynamic,
            generate: |rng, a, d| {
                let (p, t) = (formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::iff(
                    F::after_learning(p.clone(), F::not(t.clone())),
                    F::implies(p.clone(), F::not(F::after_learning(p, t))),
                ))
            },
        },
        Schema {
            name: "[o]~theta <-> ~[o]theta",
            family: Dynamic,
            generate: |rng, a, d| {
                let o = vec![pick_outcome(rng, a)];
                let t = formula(rng, a, d);
                Instance::plain(F::iff(
                    F::after_obs(o.clone(), F::not(t.clone())),
                    F::not(F::after_obs(o, t)),
                ))
            },
        },
        Schema {
            name: "[phi](theta & xi) <-> ([phi]theta & [phi]xi)",
            family: Dynamic,
            generate: |rng, a, d| {
                let (p, t, x) = (formula(rng, a, d), formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::iff(
                    F::after_learning(p.clone(), F::and(t.clone(), x.clone())),
                    F::and(F::after_learning(p.clone(), t), F::after_learning(p, x)),
                ))
            },
        },
        Schema {
            name: "[o](theta & xi) <-> ([o]theta & [o]xi)",
            family: Dynamic,
            generate: |rng, a, d| {
                let o = vec![pick_outcome(rng, a)];
                let (t, x) = (formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::iff(
                    F::after_obs(o.clone(), F::and(t.clone(), x.clone())),
                    F::and(F::after_obs(o.clone(), t), F::after_obs(o, x)),
                ))
            },
        },
        Schema {
            name: "[phi]K theta <-> (phi -> K[phi]theta)",
            family: Dynamic,
            generate: |rng, a, d| {
                let (p, t) = (formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::iff(
                    F::after_learning(p.clone(), F::know(t.clone())),
                    F::implies(p.clone(), F::know(F::after_learning(p, t))),
                ))
            },
        },
        Schema {
            name: "[o]K phi <-> K[o]phi",
            family: Dynamic,
            generate: |rng, a, d| {
                let o = vec![pick_outcome(rng, a)];
                let p = formula(rng, a, d);
                Instance::plain(F::iff(
                    F::after_obs(o.clone(), F::know(p.clone())),
                    F::know(F::after_obs(o, p)),
                ))
            },
        },
        Schema {
            name: "[phi]B(theta | xi) <-> (phi -> B([phi]theta | phi & [phi]xi))",
            family: Dynamic,
            generate: |rng, a, d| {
                let (p, t, x) = (formula(rng, a, d), formula(rng, a, d), formula(rng, a, d));
                Instance::plain(F::iff(
                    F::after_learning(p.clone(), F::believe_given(t.clone(), x.clone())),
                    F::implies(
                        p.clone(),
                        F::believe_given(
                            F::after_learning(p.clone(), t),
                            F::and(p.clone(), F::after_learning(p, x)),
                        ),
                    ),
                ))
            },
        },
        Schema {
            name: "[o]B(phi | o') <-> B([o]phi | o, o')",
            family: Dynamic,
            generate: |rng, a, d| {
                let o = pick_outcome(rng, a);
                let o2 = pick_outcome(rng, a);
                let p = formula(rng, a, d);
                Instance::plain(F::iff(
                    F::after_obs(vec![o.clone()], F::believe_given_obs(p.clone(), vec![o2.clone()])),
                    F::believe_given_obs(F::after_obs(vec![o.clone()], p), vec![o, o2]),
                ))
            },
        },
    ]
}

/// Settings for [`axiom_suite`].
#[derive(Debug, Clone)]
pub struct AxiomSuiteConfig {
    pub models: ModelSamplerConfig,
    pub formula_depth: usize,
    pub trials: usize,
    pub seed: u64,
    pub checker: Checker,
}

impl Default for AxiomSuiteConfig {
    fn default() -> Self {
        Self {
            models: ModelSamplerConfig::default(),
            formula_depth: 3,
            trials: 500,
            seed: 0,
            checker: Checker::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub model: String,
    pub instance: String,
    pub world: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchemaReport {
    pub name: String,
    pub family: SchemaFamily,
    /// Instances checked (including those whose premise failed).
    pub instances: usize,
    /// Instances skipped because their premise was not valid.
    pub vacuous: usize,
    pub counterexample_count: usize,
    /// The first few counterexamples found, in trial order.
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidityReport {
    pub trials: usize,
    pub seed: u64,
    pub formula_depth: usize,
    pub schemas: Vec<SchemaReport>,
}

impl ValidityReport {
    pub fn total_counterexamples(&self) -> usize {
        self.schemas.iter().map(|s| s.counterexample_count).sum()
    }

    pub fn schema(&self, name: &str) -> Option<&SchemaReport> {
        self.schemas.iter().find(|s| s.name == name)
    }
}

const KEPT_COUNTEREXAMPLES: usize = 5;

/// Short description of a model for counterexample reports.
pub fn describe_model(model: &Model) -> String {
    let worlds: Vec<String> = model.worlds().iter().map(|w| w.to_string()).collect();
    let logs: Vec<String> = model
        .frame()
        .state()
        .log_values()
        .iter()
        .map(|v| format!("{:.6}", v))
        .collect();
    format!(
        "alphabet {} worlds [{}] log_plausibility [{}]",
        model.alphabet(),
        worlds.join(" "),
        logs.join(" ")
    )
}

enum Outcome {
    Holds,
    Vacuous,
    Fails(Counterexample),
}

fn run_trial(cfg: &AxiomSuiteConfig, schemas: &[Schema], trial: usize) -> Result<Vec<Outcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64);
    let model = random_model(&mut rng, &cfg.models)?;
    let alphabet = model.alphabet().clone();
    let mut out = Vec::with_capacity(schemas.len());
    for schema in schemas {
        let inst = (schema.generate)(&mut rng, &alphabet, cfg.formula_depth);
        if let Some(premise) = &inst.premise {
            if !cfg.checker.valid_in_model(&model, premise)? {
                out.push(Outcome::Vacuous);
                continue;
            }
        }
        let ext = cfg.checker.extension(&model, &inst.formula)?;
        match ext.complement().indices().first() {
            None => out.push(Outcome::Holds),
            Some(&w) => out.push(Outcome::Fails(Counterexample {
                trial,
                model: describe_model(&model),
                instance: inst.formula.to_string(),
                world: model.worlds()[w].to_string(),
            })),
        }
    }
    Ok(out)
}

/// Checks every schema on `cfg.trials` random models.
pub fn axiom_suite(cfg: &AxiomSuiteConfig) -> Result<ValidityReport> {
    if cfg.trials == 0 {
        return Err(Error::NoTrials);
    }
    let schemas = schemas();
    let results: Vec<Vec<Outcome>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, &schemas, t))
        .collect::<Result<_>>()?;

    let mut reports: Vec<SchemaReport> = schemas
        .iter()
        .map(|s| SchemaReport {
            name: s.name.to_string(),
            family: s.family,
            instances: 0,
            vacuous: 0,
            counterexample_count: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    for trial in results {
        for (report, outcome) in reports.iter_mut().zip(trial) {
            report.instances += 1;
            match outcome {
                Outcome::Holds => {}
                Outcome::Vacuous => report.vacuous += 1,
                Outcome::Fails(c) => {
                    report.counterexample_count += 1;
                    if report.counterexamples.len() < KEPT_COUNTEREXAMPLES {
                        report.counterexamples.push(c);
                    }
                }
            }
        }
    }
    Ok(ValidityReport {
        trials: cfg.trials,
        seed: cfg.seed,
        formula_depth: cfg.formula_depth,
        schemas: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_is_clean_and_deterministic() {
        let cfg = AxiomSuiteConfig {
            trials: 40,
            seed: 9,
            ..Default::default()
        };
        let a = axiom_suite(&cfg).unwrap();
        assert_eq!(a.total_counterexamples(), 0, "{:#?}", a);
        assert_eq!(a, axiom_suite(&cfg).unwrap());
        assert!(a.schemas.iter().all(|s| s.instances == 40));
    }

    #[test]
    fn zero_trials_rejected() {
        let cfg = AxiomSuiteConfig {
            trials: 0,
            ..Default::default()
        };
        assert_eq!(axiom_suite(&cfg).unwrap_err(), Error::NoTrials);
    }

    #[test]
    fn mutation_is_detected() {
        let cfg = AxiomSuiteConfig {
            trials: 60,
            seed: 1,
            checker: Checker::mutated(),
            ..Default::default()
        };
        let r = axiom_suite(&cfg).unwrap();
        assert!(r.schema("[phi]q <-> (phi -> q)").unwrap().counterexample_count > 0);
    }
}
