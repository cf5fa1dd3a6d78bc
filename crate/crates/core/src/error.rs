use thiserror::Error;

use crate::logic::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate outcome name `{0}`")]
    DuplicateOutcome(String),
    #[error("an outcome alphabet needs at least 2 outcomes, got {0}")]
    TooFewOutcomes(usize),
    #[error("outcome names must be non-empty")]
    EmptyOutcomeName,
    #[error("unknown outcome `{0}`")]
    UnknownOutcome(String),

    #[error("expected {expected} weights, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("weight {index} is negative ({value})")]
    NegativeWeight { index: usize, value: String },
    #[error("weight {index} exceeds 1 ({value})")]
    WeightAboveOne { index: usize, value: String },
    #[error("weights sum to {0}, not exactly 1")]
    SumNotOne(String),
    #[error("weight denominator must be non-zero")]
    ZeroDenominator,
    #[error("alphabet mismatch: expected {expected} outcomes, got {found}")]
    AlphabetMismatch { expected: usize, found: usize },
    #[error("grid resolution must be at least 1")]
    InvalidResolution,
    #[error("epsilon must be a positive finite number, got {0}")]
    InvalidEpsilon(f64),

    #[error("world set is empty")]
    EmptyWorldSet,
    #[error("plausibility table has no entry for world {0}")]
    IncompleteTable(usize),
    #[error("plausibility of world {index} must be finite and non-negative, got {value}")]
    InvalidPlausibility { index: usize, value: f64 },
    #[error("proposition ranges over {found} worlds but the frame has {expected}")]
    PropositionMismatch { expected: usize, found: usize },
    #[error("world index {index} out of range for {len} worlds")]
    WorldIndexOutOfRange { index: usize, len: usize },
    #[error("cannot update a model with the empty proposition")]
    EmptyUpdate,
    #[error("world is not part of the model")]
    WorldNotInModel,

    #[error("the true distribution is not one of the worlds")]
    TruthNotInWorlds,
    #[error("the true distribution has zero initial plausibility")]
    ZeroPlausibilityTruth,
    #[error("trial count must be at least 1")]
    NoTrials,

    #[error("`{0}` is not a rational number")]
    InvalidNumber(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid model file: {0}")]
    ModelFile(String),
}
