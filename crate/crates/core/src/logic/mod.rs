//! The dynamic doxastic language over outcome probabilities: syntax,
//! printing, model checking and randomised axiom checking.

pub mod ast;
pub mod axioms;
pub mod parser;
pub mod random;
pub mod semantics;

pub use ast::{Formula, LinIneq};
pub use axioms::{axiom_suite, AxiomSuiteConfig, ValidityReport};
pub use parser::{parse, ParseError, GRAMMAR};
pub use semantics::{extension, satisfies, valid_in_model, AnnouncementSemantics, CheckResult, Checker};

/// Canonical text of `f`; `parse(&print(f))` gives back `f`.
pub fn print(f: &Formula) -> String {
    f.to_string()
}
