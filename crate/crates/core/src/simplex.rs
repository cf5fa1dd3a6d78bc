//! Outcome alphabets, probability mass functions on the simplex, finite
//! observation events and i.i.d. likelihoods.
//!
//! Worlds carry exact rational coordinates so that linear constraints over
//! them are decided exactly. Likelihoods are computed in floating point in
//! the log domain (natural log), with `f64::NEG_INFINITY` standing for an
//! impossible observation.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::proposition::Proposition;

/// Exact rational used for world coordinates and formula coefficients.
pub type Rational = Ratio<i64>;

/// An ordered, duplicate-free set of outcome names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct OutcomeAlphabet {
    names: Vec<String>,
}

impl OutcomeAlphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.len() < 2 {
            return Err(Error::TooFewOutcomes(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyOutcomeName);
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateOutcome(name.clone()));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub(crate) fn check_arity(&self, found: usize) -> Result<()> {
        if found == self.len() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                expected: self.len(),
                found,
            })
        }
    }
}

impl TryFrom<Vec<String>> for OutcomeAlphabet {
    type Error = Error;

    fn try_from(names: Vec<String>) -> Result<Self> {
        Self::new(&names)
    }
}

impl From<OutcomeAlphabet> for Vec<String> {
    fn from(alphabet: OutcomeAlphabet) -> Self {
        alphabet.names
    }
}

impl fmt::Display for OutcomeAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}

/// A point of the probability simplex: one candidate distribution (a world).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MassFunction {
    weights: Vec<Rational>,
}

impl MassFunction {
    /// Validates `weights` against `alphabet`. The sum must be exactly one.
    pub fn new(alphabet: &OutcomeAlphabet, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != alphabet.len() {
            return Err(Error::WrongArity {
                expected: alphabet.len(),
                found: weights.len(),
            });
        }
        Self::from_weights(weights)
    }

    /// Validates a weight vector without reference to an alphabet.
    pub fn from_weights(weights: Vec<Rational>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::TooFewOutcomes(weights.len()));
        }
        let mut sum = Rational::zero();
        for (index, w) in weights.iter().enumerate() {
            if *w < Rational::zero() {
                return Err(Error::NegativeWeight {
                    index,
                    value: w.to_string(),
                });
            }
            if *w > Rational::one() {
                return Err(Error::WeightAboveOne {
                    index,
                    value: w.to_string(),
                });
            }
            sum += *w;
        }
        if sum != Rational::one() {
            return Err(Error::SumNotOne(sum.to_string()));
        }
        Ok(Self { weights })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_pairs(alphabet: &OutcomeAlphabet, pairs: &[(i64, i64)]) -> Result<Self> {
        let weights = pairs
            .iter()
            .map(|&(n, d)| {
                if d == 0 {
                    Err(Error::ZeroDenominator)
                } else {
                    Ok(Rational::new(n, d))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, weights)
    }

    /// Parses comma-separated weights such as `7/10,3/10` or `0.7,0.3`.
    pub fn parse(alphabet: &OutcomeAlphabet, text: &str) -> Result<Self> {
        let weights = text
            .split(',')
            .map(|w| parse_rational(w.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, weights)
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, index: usize) -> Rational {
        self.weights[index]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.weights.iter().map(rational_to_f64).collect()
    }

    /// Natural logs of the weights; `-inf` for zero weights.
    pub fn ln_weights(&self) -> Vec<f64> {
        self.weights.iter().map(|w| rational_to_f64(w).ln()).collect()
    }

    /// True when every outcome has positive probability.
    pub fn is_interior(&self) -> bool {
        self.weights.iter().all(|w| *w > Rational::zero())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewOutcomes(n));
        }
        Self::from_weights(vec![Rational::new(1, n as i64); n])
    }
}

impl fmt::Display for MassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", w)?;
        }
        write!(f, ")")
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Every mass function whose coordinates are multiples of `1/resolution`,
/// in ascending lexicographic order of the coordinate vector.
/// Parses `a`, `a/b` or a decimal like `0.15`, exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidNumber(text.to_string());
    if let Some((n, d)) = text.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(Error::ZeroDenominator);
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        return Err(bad());
    }
    let numer: i64 = format!("{}{}", int, frac).parse().map_err(|_| bad())?;
    let denom = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
    let r = Rational::new(numer, denom);
    Ok(if neg { -r } else { r })
}

pub fn simplex_grid(alphabet: &OutcomeAlphabet, resolution: u32) -> Result<Vec<MassFunction>> {
    if resolution == 0 {
        return Err(Error::InvalidResolution);
    }
    let n = alphabet.len();
    let denom = i64::from(resolution);
    let mut out = Vec::new();
    let mut numerators = vec![0i64; n];
    fill_grid(&mut numerators, 0, denom, denom, &mut out);
    Ok(out)
}

fn fill_grid(
    numerators: &mut Vec<i64>,
    pos: usize,
    remaining: i64,
    denom: i64,
    out: &mut Vec<MassFunction>,
) {
    let n = numerators.len();
    if pos == n - 1 {
        numerators[pos] = remaining;
        out.push(MassFunction {
            weights: numerators.iter().map(|&k| Rational::new(k, denom)).collect(),
        });
        return;
    }
    for k in 0..=remaining {
        numerators[pos] = k;
        fill_grid(numerators, pos + 1, remaining - k, denom, out);
    }
}

fn squared_distance(mu: &MassFunction, nu: &MassFunction) -> Result<Rational> {
    if mu.arity() != nu.arity() {
        return Err(Error::AlphabetMismatch {
            expected: mu.arity(),
            found: nu.arity(),
        });
    }
    Ok(mu
        .weights
        .iter()
        .zip(&nu.weights)
        .map(|(a, b)| (a - b) * (a - b))
        .fold(Rational::zero(), |acc, x| acc + x))
}

/// Euclidean distance between two simplex points.
pub fn euclidean_distance(mu: &MassFunction, nu: &MassFunction) -> Result<f64> {
    Ok(rational_to_f64(&squared_distance(mu, nu)?).sqrt())
}

/// The open ball `{w in worlds | d(center, w) < eps}`.
pub fn epsilon_ball(center: &MassFunction, eps: f64, worlds: &[MassFunction]) -> Result<Proposition> {
    if !(eps > 0.0) {
        return Err(Error::InvalidEpsilon(eps));
    }
    let mut members = Vec::with_capacity(worlds.len());
    for w in worlds {
        members.push(euclidean_distance(center, w)? < eps);
    }
    Ok(Proposition::from_mask(members))
}

/// A finite conjunction of cylinder events, kept as outcome counts.
///
/// Observations are exchangeable under i.i.d. sampling, so only the counts
/// matter. The all-zero event is the tautological event.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObservationEvent {
    counts: Vec<u64>,
}

impl ObservationEvent {
    pub fn empty(arity: usize) -> Self {
        Self {
            counts: vec![0; arity],
        }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    /// A single observation of outcome `index`.
    pub fn single(arity: usize, index: usize) -> Self {
        let mut counts = vec![0; arity];
        counts[index] = 1;
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn arity(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Conjunction of two events: componentwise count sum.
    pub fn concat(&self, other: &ObservationEvent) -> Result<ObservationEvent> {
        if self.arity() != other.arity() {
            return Err(Error::AlphabetMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(Self {
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Renders the event as a whitespace-separated outcome sequence.
    pub fn to_text(&self, alphabet: &OutcomeAlphabet) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.counts.iter().enumerate() {
            for _ in 0..c {
                parts.push(alphabet.name(i));
            }
        }
        parts.join(" ")
    }
}

/// Turns a sequence of outcome names into an event.
pub fn observe<S: AsRef<str>>(alphabet: &OutcomeAlphabet, sequence: &[S]) -> Result<ObservationEvent> {
    let mut event = ObservationEvent::empty(alphabet.len());
    for name in sequence {
        let name = name.as_ref();
        let i = alphabet
            .index_of(name)
            .ok_or_else(|| Error::UnknownOutcome(name.to_string()))?;
        event.counts[i] += 1;
    }
    Ok(event)
}

/// Parses the event text syntax: whitespace-separated outcome names.
pub fn parse_event(alphabet: &OutcomeAlphabet, text: &str) -> Result<ObservationEvent> {
    let names: Vec<&str> = text.split_whitespace().collect();
    observe(alphabet, &names)
}

/// `sum_i counts_i * ln(p_i)` with `0 * ln 0 = 0`, given precomputed logs.
///
/// Every likelihood in the crate goes through this function so that equal
/// inputs give bit-identical outputs.
pub(crate) fn log_likelihood_from_logs(ln_weights: &[f64], counts: &[u64]) -> f64 {
    let mut total = 0.0;
    for (&lw, &c) in ln_weights.iter().zip(counts) {
        if c == 0 {
            continue;
        }
        if lw == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        total += c as f64 * lw;
    }
    total
}

/// Natural log of the i.i.d. probability that `mu` assigns to `event`.
pub fn log_likelihood(mu: &MassFunction, event: &ObservationEvent) -> Result<f64> {
    if mu.arity() != event.arity() {
        return Err(Error::AlphabetMismatch {
            expected: mu.arity(),
            found: event.arity(),
        });
    }
    Ok(log_likelihood_from_logs(&mu.ln_weights(), &event.counts))
}

/// A finite prefix of an observation stream, with the seed that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservationStream {
    pub outcomes: Vec<usize>,
    pub seed: u64,
}

impl ObservationStream {
    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    /// Count vector of the first `m` observations.
    pub fn prefix_event(&self, arity: usize, m: usize) -> ObservationEvent {
        let mut event = ObservationEvent::empty(arity);
        for &o in &self.outcomes[..m.min(self.outcomes.len())] {
            event.counts[o] += 1;
        }
        event
    }
}

/// Exact i.i.d. sampler for a rational mass function.
///
/// Each draw picks a uniform integer below the common denominator of the
/// weights from a ChaCha8 generator seeded with `seed_from_u64(seed)`, then
/// maps it through the cumulative numerators. Outcomes of probability zero
/// are therefore never produced, and streams are reproducible bit-for-bit
/// from `(seed, truth)`.
#[derive(Debug, Clone)]
pub struct StreamSampler {
    rng: ChaCha8Rng,
    denominator: u64,
    cumulative: Vec<u64>,
}

impl StreamSampler {
    pub fn new(truth: &MassFunction, seed: u64) -> Self {
        let denominator = truth
            .weights
            .iter()
            .fold(1i64, |acc, w| acc.lcm(w.denom()));
        let mut acc = 0u64;
        let cumulative = truth
            .weights
            .iter()
            .map(|w| {
                acc += (w.numer() * (denominator / w.denom())) as u64;
                acc
            })
            .collect();
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            denominator: denominator as u64,
            cumulative,
        }
    }

    pub fn next_outcome(&mut self) -> usize {
        let draw = self.rng.gen_range(0..self.denominator);
        self.cumulative
            .iter()
            .position(|&c| draw < c)
            .expect("cumulative weights end at the denominator")
    }
}

/// Draws `length` i.i.d. outcomes from `truth`.
pub fn sample_stream(truth: &MassFunction, length: usize, seed: u64) -> ObservationStream {
    let mut sampler = StreamSampler::new(truth, seed);
    ObservationStream {
        outcomes: (0..length).map(|_| sampler.next_outcome()).collect(),
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coin() -> OutcomeAlphabet {
        OutcomeAlphabet::new(&["H", "T"]).unwrap()
    }

    fn urn() -> OutcomeAlphabet {
        OutcomeAlphabet::new(&["R", "B", "G"]).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("7/10").unwrap(), Rational::new(7, 10));
        assert_eq!(parse_rational("0.15").unwrap(), Rational::new(3, 20));
        assert_eq!(parse_rational("-2").unwrap(), Rational::from_integer(-2));
        assert_eq!(parse_rational("1/0").unwrap_err(), Error::ZeroDenominator);
        for bad in ["", ".", "x", "1/", "0.1.2", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{}", bad);
        }
        let a = OutcomeAlphabet::new(&["H", "T"]).unwrap();
        let m = MassFunction::parse(&a, "0.7, 3/10").unwrap();
        assert_eq!(m.weight(0), Rational::new(7, 10));
        assert!(MassFunction::parse(&a, "1/2").is_err());
    }

    #[test]
    fn alphabets() {
        assert_eq!(coin().len(), 2);
        assert_eq!(urn().len(), 3);
        assert_eq!(
            OutcomeAlphabet::new(&["H", "H"]),
            Err(Error::DuplicateOutcome("H".into()))
        );
        assert_eq!(OutcomeAlphabet::new(&["H"]), Err(Error::TooFewOutcomes(1)));
        assert_eq!(OutcomeAlphabet::new(&["H", ""]), Err(Error::EmptyOutcomeName));
        assert_eq!(urn().index_of("G"), Some(2));
    }

    #[test]
    fn mass_function_validation() {
        let fair = MassFunction::new(&coin(), vec![r(1, 2), r(1, 2)]).unwrap();
        assert_eq!(fair.weight(0), r(1, 2));
        assert!(MassFunction::new(&coin(), vec![r(1, 1), r(0, 1)]).is_ok());
        assert!(matches!(
            MassFunction::new(&coin(), vec![r(3, 4), r(3, 4)]),
            Err(Error::SumNotOne(_))
        ));
        assert!(matches!(
            MassFunction::new(&coin(), vec![r(1, 1)]),
            Err(Error::WrongArity { expected: 2, found: 1 })
        ));
        assert!(matches!(
            MassFunction::new(&coin(), vec![r(-1, 2), r(3, 2)]),
            Err(Error::NegativeWeight { index: 0, .. })
        ));
        assert_eq!(
            MassFunction::from_pairs(&coin(), &[(1, 0), (1, 2)]),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn grid_examples() {
        let g = simplex_grid(&coin(), 2).unwrap();
        assert_eq!(
            g.iter().map(|m| m.weights().to_vec()).collect::<Vec<_>>(),
            vec![
                vec![r(0, 1), r(1, 1)],
                vec![r(1, 2), r(1, 2)],
                vec![r(1, 1), r(0, 1)]
            ]
        );
        assert_eq!(simplex_grid(&urn(), 2).unwrap().len(), 6);
        let g10 = simplex_grid(&coin(), 10).unwrap();
        assert_eq!(g10.len(), 11);
        assert!(g10.iter().any(|m| m.weights() == [r(7, 10), r(3, 10)]));
        assert_eq!(simplex_grid(&coin(), 0), Err(Error::InvalidResolution));
    }

    #[test]
    fn distances() {
        let a = MassFunction::from_pairs(&coin(), &[(1, 1), (0, 1)]).unwrap();
        let b = MassFunction::from_pairs(&coin(), &[(0, 1), (1, 1)]).unwrap();
        let c = MassFunction::from_pairs(&coin(), &[(1, 2), (1, 2)]).unwrap();
        let d = MassFunction::from_pairs(&coin(), &[(3, 4), (1, 4)]).unwrap();
        assert_eq!(euclidean_distance(&a, &a).unwrap(), 0.0);
        assert!((euclidean_distance(&a, &b).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((euclidean_distance(&c, &d).unwrap() - 2f64.sqrt() / 4.0).abs() < 1e-15);
        let u = MassFunction::uniform(3).unwrap();
        assert!(matches!(
            euclidean_distance(&a, &u),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn balls() {
        let grid = simplex_grid(&coin(), 10).unwrap();
        let centre = MassFunction::from_pairs(&coin(), &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(epsilon_ball(&centre, 10.0, &grid).unwrap().len(), 11);
        let single = epsilon_ball(&centre, 0.1, &grid).unwrap();
        assert_eq!(single.indices(), vec![5]);
        // brute force: keep w(H) with sqrt(2)*|w(H) - 1/2| < 0.2
        let oracle: Vec<usize> = (0..=10)
            .filter(|k| 2f64.sqrt() * (*k as f64 / 10.0 - 0.5).abs() < 0.2)
            .collect();
        assert_eq!(oracle, vec![4, 5, 6]);
        assert_eq!(epsilon_ball(&centre, 0.2, &grid).unwrap().indices(), oracle);
        assert!(epsilon_ball(&centre, 0.0, &grid).is_err());
    }

    #[test]
    fn observations() {
        assert_eq!(observe(&coin(), &["H", "H", "H"]).unwrap().counts(), &[3, 0]);
        let empty = observe::<&str>(&coin(), &[]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(observe(&urn(), &["R", "G", "R"]).unwrap().counts(), &[2, 0, 1]);
        assert_eq!(
            observe(&coin(), &["X"]),
            Err(Error::UnknownOutcome("X".into()))
        );
        assert_eq!(parse_event(&coin(), " H  T H").unwrap().counts(), &[2, 1]);
        let e = parse_event(&urn(), "R G R").unwrap();
        assert_eq!(parse_event(&urn(), &e.to_text(&urn())).unwrap(), e);
    }

    #[test]
    fn concat_laws() {
        let a = ObservationEvent::from_counts(vec![3, 0]);
        let b = ObservationEvent::from_counts(vec![0, 2]);
        assert_eq!(a.concat(&b).unwrap().counts(), &[3, 2]);
        assert_eq!(a.concat(&ObservationEvent::empty(2)).unwrap(), a);
        let x = ObservationEvent::from_counts(vec![1, 1]);
        let y = ObservationEvent::from_counts(vec![2, 0]);
        let z = ObservationEvent::from_counts(vec![0, 1]);
        let left = x.concat(&y).unwrap().concat(&z).unwrap();
        let right = x.concat(&y.concat(&z).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.counts(), &[3, 2]);
        assert!(a.concat(&ObservationEvent::empty(3)).is_err());
    }

    #[test]
    fn likelihoods() {
        let fair = MassFunction::from_pairs(&coin(), &[(1, 2), (1, 2)]).unwrap();
        let hhh = ObservationEvent::from_counts(vec![3, 0]);
        let ll = log_likelihood(&fair, &hhh).unwrap();
        assert!((ll - (0.125f64).ln()).abs() < 1e-12);
        assert!((ll + 2.0794).abs() < 1e-4);
        assert_eq!(log_likelihood(&fair, &ObservationEvent::empty(2)).unwrap(), 0.0);
        let heads = MassFunction::from_pairs(&coin(), &[(1, 1), (0, 1)]).unwrap();
        assert_eq!(
            log_likelihood(&heads, &ObservationEvent::from_counts(vec![0, 1])).unwrap(),
            f64::NEG_INFINITY
        );
        assert_eq!(log_likelihood(&heads, &hhh).unwrap(), 0.0);
    }

    #[test]
    fn degenerate_and_deterministic_streams() {
        let heads = MassFunction::from_pairs(&coin(), &[(1, 1), (0, 1)]).unwrap();
        assert!(sample_stream(&heads, 500, 3).outcomes.iter().all(|&o| o == 0));
        let urn_truth = MassFunction::from_pairs(&urn(), &[(1, 2), (3, 10), (1, 5)]).unwrap();
        assert_eq!(sample_stream(&urn_truth, 1000, 11), sample_stream(&urn_truth, 1000, 11));
        assert_ne!(sample_stream(&urn_truth, 1000, 11), sample_stream(&urn_truth, 1000, 12));
        let long = sample_stream(&urn_truth, 100, 5);
        let short = sample_stream(&urn_truth, 40, 5);
        assert_eq!(&long.outcomes[..40], &short.outcomes[..]);
        assert_eq!(long.prefix_event(3, 100).total(), 100);
    }
}
