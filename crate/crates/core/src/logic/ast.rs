use std::fmt;

use crate::simplex::Rational;

/// `sum_i a_i * w(o_i) >= c` over outcome names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinIneq {
    pub terms: Vec<(Rational, String)>,
    pub bound: Rational,
}

impl LinIneq {
    pub fn new<S: Into<String>>(terms: Vec<(Rational, S)>, bound: Rational) -> Self {
        Self {
            terms: terms.into_iter().map(|(a, o)| (a, o.into())).collect(),
            bound,
        }
    }
}

/// Formulas of the dynamic doxastic language over outcome probabilities.
///
/// Implication, equivalence, simple belief and the non-`>=` comparisons are
/// sugar over these constructors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Lin(LinIneq),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// Knowledge.
    K(Box<Formula>),
    /// Belief in the body given a finite list of observations.
    BelObs(Box<Formula>, Vec<String>),
    /// Belief in the body given the second formula.
    BelCond(Box<Formula>, Box<Formula>),
    /// `[o1, ..., ok] body`: after observing the outcomes.
    DynObs(Vec<String>, Box<Formula>),
    /// `[theta] body`: after learning `theta`.
    DynAnn(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn lin(ineq: LinIneq) -> Self {
        Formula::Lin(ineq)
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::or(Formula::not(a), b)
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    pub fn know(f: Formula) -> Self {
        Formula::K(Box::new(f))
    }

    /// Simple belief, `B(f | T)`.
    pub fn believe(f: Formula) -> Self {
        Formula::BelCond(Box::new(f), Box::new(Formula::Top))
    }

    pub fn believe_given(f: Formula, cond: Formula) -> Self {
        Formula::BelCond(Box::new(f), Box::new(cond))
    }

    pub fn believe_given_obs<S: Into<String>>(f: Formula, obs: Vec<S>) -> Self {
        Formula::BelObs(Box::new(f), obs.into_iter().map(Into::into).collect())
    }

    pub fn after_obs<S: Into<String>>(obs: Vec<S>, f: Formula) -> Self {
        Formula::DynObs(obs.into_iter().map(Into::into).collect(), Box::new(f))
    }

    pub fn after_learning(theta: Formula, f: Formula) -> Self {
        Formula::DynAnn(Box::new(theta), Box::new(f))
    }

    /// True for `T` and linear inequalities.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Top | Formula::Lin(_))
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Lin(_) => 0,
            Formula::Not(a) | Formula::K(a) | Formula::BelObs(a, _) | Formula::DynObs(_, a) => {
                1 + a.depth()
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::BelCond(a, b)
            | Formula::DynAnn(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

// Binding strength used by the printer: Or < And < prefix operators/atoms.
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_UNARY: u8 = 3;

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if *r.denom() == 1 {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, coeff: &Rational, outcome: &str) -> fmt::Result {
    if *coeff != Rational::from_integer(1) {
        write_rational(f, coeff)?;
        write!(f, "*")?;
    }
    write!(f, "w({})", outcome)
}

impl fmt::Display for LinIneq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = Rational::from_integer(1);
        let zero = Rational::from_integer(0);
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (a, o)) in self.terms.iter().enumerate() {
            if i == 0 {
                if *a == -one {
                    write!(f, "-w({})", o)?;
                } else {
                    write_term(f, a, o)?;
                }
            } else if *a < zero {
                write!(f, " - ")?;
                write_term(f, &-a, o)?;
            } else {
                write!(f, " + ")?;
                write_term(f, a, o)?;
            }
        }
        write!(f, " >= ")?;
        write_rational(f, &self.bound)
    }
}

impl Formula {
    fn write_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        match self {
            Formula::Top => write!(f, "T"),
            Formula::Lin(l) => write!(f, "{}", l),
            Formula::Not(a) => {
                write!(f, "~")?;
                a.write_prec(f, PREC_UNARY)
            }
            Formula::K(a) => {
                write!(f, "K ")?;
                a.write_prec(f, PREC_UNARY)
            }
            Formula::And(a, b) => parenthesize(f, min > PREC_AND, |f| {
                a.write_prec(f, PREC_AND)?;
                write!(f, " & ")?;
                b.write_prec(f, PREC_UNARY)
            }),
            Formula::Or(a, b) => parenthesize(f, min > PREC_OR, |f| {
                a.write_prec(f, PREC_OR)?;
                write!(f, " | ")?;
                b.write_prec(f, PREC_AND)
            }),
            Formula::BelCond(a, c) => {
                // a top-level `|` inside `B(` separates body from condition
                write!(f, "B(")?;
                a.write_prec(f, PREC_AND)?;
                if **c != Formula::Top {
                    write!(f, " | ")?;
                    c.write_prec(f, 0)?;
                }
                write!(f, ")")
            }
            Formula::BelObs(a, obs) => {
                write!(f, "B(")?;
                a.write_prec(f, PREC_AND)?;
                write!(f, " | {})", obs.join(", "))
            }
            Formula::DynObs(obs, a) => {
                write!(f, "[{}] ", obs.join(", "))?;
                a.write_prec(f, PREC_UNARY)
            }
            Formula::DynAnn(theta, a) => {
                // a bare `T` in brackets would read as an observation
                if **theta == Formula::Top {
                    write!(f, "[(T)] ")?;
                } else {
                    write!(f, "[")?;
                    theta.write_prec(f, 0)?;
                    write!(f, "] ")?;
                }
                a.write_prec(f, PREC_UNARY)
            }
        }
    }
}

fn parenthesize(
    f: &mut fmt::Formatter<'_>,
    wrap: bool,
    body: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    if wrap {
        write!(f, "(")?;
    }
    body(f)?;
    if wrap {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}
