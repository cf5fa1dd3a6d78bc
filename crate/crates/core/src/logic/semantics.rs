//! Model checking. Formulas are evaluated bottom-up to their extension (the
//! set of worlds where they hold), so each subformula is visited once per
//! model it is evaluated in.

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use super::ast::{Formula, LinIneq};
use crate::doxastic::Model;
use crate::error::{Error, Result};
use crate::proposition::Proposition;
use crate::simplex::{observe, MassFunction};

/// Which clause to use for `[theta] phi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AnnouncementSemantics {
    /// `mu |= [theta] phi` iff `mu |= theta` implies `M^theta, mu |= phi`.
    #[default]
    Relativized,
    /// Deliberately broken variant used to check that the axiom suite can
    /// detect faults: worlds outside `||theta||` evaluate `phi` in the
    /// original model instead of satisfying `[theta] phi` vacuously.
    Unrelativized,
}

/// A formula checker, configurable for mutation testing.
#[derive(Debug, Clone, Copy, Default)]
pub struct Checker {
    pub announcement: AnnouncementSemantics,
}

/// Verdict of a formula at one world.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub verdict: bool,
    pub world: String,
    /// Verdicts of the immediate subformulas at the same world, when they
    /// are evaluated in the same model.
    pub trace: Vec<(String, bool)>,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mutated() -> Self {
        Self {
            announcement: AnnouncementSemantics::Unrelativized,
        }
    }

    /// `||f||`: the worlds of `model` where `f` holds.
    pub fn extension(&self, model: &Model, f: &Formula) -> Result<Proposition> {
        let n = model.len();
        let everywhere = |b: bool| Ok(if b { Proposition::full(n) } else { Proposition::empty(n) });
        match f {
            Formula::Top => Ok(Proposition::full(n)),
            Formula::Lin(ineq) => lin_extension(model, ineq),
            Formula::Not(a) => Ok(self.extension(model, a)?.complement()),
            Formula::And(a, b) => Ok(self
                .extension(model, a)?
                .intersection(&self.extension(model, b)?)),
            Formula::Or(a, b) => Ok(self.extension(model, a)?.union(&self.extension(model, b)?)),
            Formula::K(a) => {
                let p = self.extension(model, a)?;
                everywhere(model.frame().knowledge_holds(&p)?)
            }
            Formula::BelCond(a, c) => {
                let p = self.extension(model, a)?;
                let q = self.extension(model, c)?;
                everywhere(model.frame().conditional_belief_prop(&p, &q)?)
            }
            Formula::BelObs(a, obs) => {
                let p = self.extension(model, a)?;
                let e = observe(model.alphabet(), obs)?;
                everywhere(model.frame().conditional_belief_event(&p, &e)?)
            }
            Formula::DynObs(obs, a) => {
                let e = observe(model.alphabet(), obs)?;
                self.extension(&model.update_sampling(&e)?, a)
            }
            Formula::DynAnn(theta, a) => {
                let s = self.extension(model, theta)?;
                if s.is_empty() {
                    return match self.announcement {
                        AnnouncementSemantics::Relativized => Ok(Proposition::full(n)),
                        AnnouncementSemantics::Unrelativized => self.extension(model, a),
                    };
                }
                let inner = self.extension(&model.update_proposition(&s)?, a)?;
                let outside = match self.announcement {
                    AnnouncementSemantics::Relativized => None,
                    AnnouncementSemantics::Unrelativized => Some(self.extension(model, a)?),
                };
                let mut mask = Vec::with_capacity(n);
                let mut k = 0;
                for i in 0..n {
                    if s.contains(i) {
                        mask.push(inner.contains(k));
                        k += 1;
                    } else {
                        mask.push(outside.as_ref().is_none_or(|o| o.contains(i)));
                    }
                }
                Ok(Proposition::from_mask(mask))
            }
        }
    }

    pub fn satisfies(&self, model: &Model, world: &MassFunction, f: &Formula) -> Result<bool> {
        let i = model.world_index(world)?;
        Ok(self.extension(model, f)?.contains(i))
    }

    pub fn valid_in_model(&self, model: &Model, f: &Formula) -> Result<bool> {
        Ok(self.extension(model, f)?.is_full())
    }

    pub fn check(&self, model: &Model, world: &MassFunction, f: &Formula) -> Result<CheckResult> {
        let i = model.world_index(world)?;
        let verdict = self.extension(model, f)?.contains(i);
        let children: Vec<&Formula> = match f {
            Formula::Not(a) => vec![a],
            Formula::And(a, b) | Formula::Or(a, b) => vec![a, b],
            Formula::K(a) | Formula::BelObs(a, _) => vec![a],
            Formula::BelCond(a, c) => vec![a, c],
            Formula::DynAnn(theta, _) => vec![theta],
            _ => vec![],
        };
        let mut trace = Vec::with_capacity(children.len());
        for c in children {
            trace.push((c.to_string(), self.extension(model, c)?.contains(i)));
        }
        Ok(CheckResult {
            verdict,
            world: world.to_string(),
            trace,
        })
    }
}

fn lin_extension(model: &Model, ineq: &LinIneq) -> Result<Proposition> {
    let alphabet = model.alphabet();
    let resolved = ineq
        .terms
        .iter()
        .map(|(a, o)| {
            alphabet
                .index_of(o)
                .map(|i| (widen(*a), i))
                .ok_or_else(|| Error::UnknownOutcome(o.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let bound = widen(ineq.bound);
    Ok(Proposition::from_predicate(model.len(), |w| {
        let world = &model.worlds()[w];
        let lhs = resolved
            .iter()
            .fold(Ratio::<i128>::zero(), |acc, (a, i)| acc + a * widen(world.weight(*i)));
        lhs >= bound
    }))
}

fn widen(r: Ratio<i64>) -> Ratio<i128> {
    Ratio::new_raw(i128::from(*r.numer()), i128::from(*r.denom()))
}

/// `||f||` under the standard semantics.
pub fn extension(model: &Model, f: &Formula) -> Result<Proposition> {
    Checker::new().extension(model, f)
}

/// `model, world |= f` under the standard semantics.
pub fn satisfies(model: &Model, world: &MassFunction, f: &Formula) -> Result<bool> {
    Checker::new().satisfies(model, world, f)
}

/// True when `f` holds at every world of `model`.
pub fn valid_in_model(model: &Model, f: &Formula) -> Result<bool> {
    Checker::new().valid_in_model(model, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse;
    use crate::plausibility::PlausibilityFn;
    use crate::simplex::{simplex_grid, OutcomeAlphabet};

    fn coin_model(n: u32) -> Model {
        let a = OutcomeAlphabet::new(&["H", "T"]).unwrap();
        let grid = simplex_grid(&a, n).unwrap();
        Model::from_worlds(a, grid, PlausibilityFn::Entropy).unwrap()
    }

    fn f(m: &Model, s: &str) -> Formula {
        parse(s, m.alphabet()).unwrap()
    }

    #[test]
    fn exact_linear_atoms() {
        let m = coin_model(5);
        let mu = MassFunction::from_pairs(m.alphabet(), &[(3, 5), (2, 5)]).unwrap();
        assert!(satisfies(&m, &mu, &f(&m, "w(H) >= 1/2")).unwrap());
        assert!(satisfies(&m, &mu, &f(&m, "w(H) >= 3/5")).unwrap());
        assert!(!satisfies(&m, &mu, &f(&m, "w(H) > 3/5")).unwrap());
        assert!(valid_in_model(&m, &f(&m, "w(H) >= 0")).unwrap());
        assert!(valid_in_model(&m, &f(&m, "w(H) + w(T) = 1")).unwrap());
        let outsider = MassFunction::from_pairs(m.alphabet(), &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(
            satisfies(&m, &outsider, &Formula::Top).unwrap_err(),
            Error::WorldNotInModel
        );
    }

    #[test]
    fn three_heads_shift_belief() {
        let m = coin_model(20);
        let phi = f(&m, "[H][H][H] B(w(H) >= 0.55)");
        assert!(valid_in_model(&m, &phi).unwrap());
        assert!(!valid_in_model(&m, &f(&m, "B(w(H) >= 0.55)")).unwrap());
    }

    #[test]
    fn extensions() {
        let m = coin_model(10);
        assert!(extension(&m, &Formula::Top).unwrap().is_full());
        assert_eq!(extension(&m, &f(&m, "w(H) >= 1/2")).unwrap().len(), 6);
        assert!(extension(&m, &f(&m, "w(H) >= 1/2 & ~w(H) >= 1/2")).unwrap().is_empty());
        assert!(!valid_in_model(&m, &f(&m, "w(H) >= 1/2")).unwrap());
    }

    #[test]
    fn modal_validities() {
        let m = coin_model(10);
        for s in [
            "K w(H) >= 1/2 -> w(H) >= 1/2",
            "B(w(H) >= 1/2 | w(H) >= 1/2)",
            "B(w(H) >= 1/2 | H, H, H)",
            "B(w(H) = 1/2)",
            "[w(H) <= 2/5] B(w(H) = 2/5)",
            "[w(H) >= 2] w(H) >= 5",
        ] {
            assert!(valid_in_model(&m, &f(&m, s)).unwrap(), "{}", s);
        }
    }

    #[test]
    fn announcement_relativization() {
        let m = coin_model(4);
        let g = f(&m, "[w(H) >= 1/2] ~T");
        let ext = extension(&m, &g).unwrap();
        // holds exactly where the announcement fails
        assert_eq!(ext.indices(), vec![0, 1]);
        let broken = Checker::mutated().extension(&m, &g).unwrap();
        assert!(broken.is_empty());
    }

    #[test]
    fn check_reports_trace() {
        let m = coin_model(2);
        let mu = m.worlds()[1].clone();
        let r = Checker::new()
            .check(&m, &mu, &f(&m, "w(H) >= 1/2 & K T"))
            .unwrap();
        assert!(r.verdict);
        assert_eq!(r.trace.len(), 2);
        assert_eq!(r.world, "(1/2,1/2)");
    }
}
