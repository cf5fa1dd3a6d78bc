//! JSON model files.
//!
//! ```json
//! {
//!   "alphabet": ["H", "T"],
//!   "grid_resolution": 10,
//!   "worlds": [[[1, 2], [1, 2]], [[7, 10], [3, 10]]],
//!   "plausibility": "entropy" | "centre_of_mass" | "uniform" | {"table": {"0": 1.0, "1": 0.5}},
//!   "conditioned_on": [3, 0]
//! }
//! ```
//!
//! Exactly one of `grid_resolution` and `worlds` must be given. Each world
//! is a list of `[numerator, denominator]` pairs in alphabet order.
//! `conditioned_on` is optional and defaults to the empty event.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::doxastic::{Frame, Model};
use crate::error::{Error, Result};
use crate::plausibility::{PlausibilityFn, PlausibilityState};
use crate::simplex::{simplex_grid, MassFunction, ObservationEvent, OutcomeAlphabet};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PlausibilitySpec {
    Named(String),
    Table { table: BTreeMap<String, f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub alphabet: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_resolution: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worlds: Option<Vec<Vec<[i64; 2]>>>,
    pub plausibility: PlausibilitySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conditioned_on: Option<Vec<u64>>,
}

impl PlausibilitySpec {
    /// `world_count` sizes the table for `"uniform"`.
    pub fn to_fn(&self, world_count: usize) -> Result<PlausibilityFn> {
        match self {
            PlausibilitySpec::Named(name) => match name.as_str() {
                "entropy" => Ok(PlausibilityFn::Entropy),
                "centre_of_mass" => Ok(PlausibilityFn::CentreOfMass),
                "uniform" => Ok(PlausibilityFn::constant(world_count)),
                other => Err(Error::ModelFile(format!(
                    "unknown plausibility `{}` (expected entropy, centre_of_mass, uniform or a table)",
                    other
                ))),
            },
            PlausibilitySpec::Table { table } => {
                let mut out = BTreeMap::new();
                for (k, v) in table {
                    let i: usize = k
                        .parse()
                        .map_err(|_| Error::ModelFile(format!("table key `{}` is not a world index", k)))?;
                    out.insert(i, *v);
                }
                Ok(PlausibilityFn::Tabulated(out))
            }
        }
    }

    pub fn from_fn(f: &PlausibilityFn) -> Self {
        match f {
            PlausibilityFn::Entropy => PlausibilitySpec::Named("entropy".into()),
            PlausibilityFn::CentreOfMass => PlausibilitySpec::Named("centre_of_mass".into()),
            PlausibilityFn::Tabulated(t) => PlausibilitySpec::Table {
                table: t.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            },
        }
    }
}

/// Encodes worlds as `[numerator, denominator]` pairs.
pub fn encode_worlds(worlds: &[MassFunction]) -> Vec<Vec<[i64; 2]>> {
    worlds
        .iter()
        .map(|w| w.weights().iter().map(|r| [*r.numer(), *r.denom()]).collect())
        .collect()
}

impl ModelFile {
    /// A model file listing every point of a grid explicitly.
    pub fn grid(alphabet: &OutcomeAlphabet, resolution: u32, plausibility: &PlausibilityFn) -> Result<Self> {
        let worlds = simplex_grid(alphabet, resolution)?;
        Ok(Self {
            alphabet: alphabet.names().to_vec(),
            grid_resolution: None,
            worlds: Some(encode_worlds(&worlds)),
            plausibility: PlausibilitySpec::from_fn(plausibility),
            conditioned_on: None,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ModelFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files always serialize")
    }

    pub fn worlds(&self, alphabet: &OutcomeAlphabet) -> Result<Vec<MassFunction>> {
        match (&self.grid_resolution, &self.worlds) {
            (Some(n), None) => simplex_grid(alphabet, *n),
            (None, Some(ws)) => ws
                .iter()
                .map(|w| {
                    let pairs: Vec<(i64, i64)> = w.iter().map(|[n, d]| (*n, *d)).collect();
                    MassFunction::from_pairs(alphabet, &pairs)
                })
                .collect(),
            _ => Err(Error::ModelFile(
                "exactly one of `grid_resolution` and `worlds` must be given".into(),
            )),
        }
    }

    pub fn to_model(&self) -> Result<Model> {
        let alphabet = OutcomeAlphabet::new(&self.alphabet)?;
        let worlds = self.worlds(&alphabet)?;
        let mut state = PlausibilityState::new(worlds.clone(), self.plausibility.to_fn(worlds.len())?)?;
        if let Some(counts) = &self.conditioned_on {
            alphabet.check_arity(counts.len())?;
            state = state.condition(&ObservationEvent::from_counts(counts.clone()))?;
        }
        Model::new(alphabet, Frame::from_state(state))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_file_round_trip() {
        let a = OutcomeAlphabet::new(&["H", "T"]).unwrap();
        let file = ModelFile::grid(&a, 10, &PlausibilityFn::Entropy).unwrap();
        let text = file.to_json();
        assert!(text.contains("\"entropy\""));
        let back = ModelFile::from_json(&text).unwrap();
        assert_eq!(back, file);
        let m = back.to_model().unwrap();
        assert_eq!(m.len(), 11);
    }

    #[test]
    fn resolution_table_and_conditioning() {
        let text = r#"{"alphabet":["H","T"],"grid_resolution":2,
            "plausibility":{"table":{"0":1,"1":2,"2":0.5}},"conditioned_on":[3,0]}"#;
        let m = ModelFile::from_json(text).unwrap().to_model().unwrap();
        assert_eq!(m.len(), 3);
        let flat = r#"{"alphabet":["H","T"],"grid_resolution":4,"plausibility":"uniform"}"#;
        let u = ModelFile::from_json(flat).unwrap().to_model().unwrap();
        assert_eq!(u.frame().state().argmax_worlds().indices().len(), 5);
        assert_eq!(m.frame().state().event().counts(), &[3, 0]);
        assert_eq!(m.frame().state().log_values()[0], f64::NEG_INFINITY);
    }

    #[test]
    fn malformed_files() {
        let both = r#"{"alphabet":["H","T"],"grid_resolution":2,"worlds":[[[1,2],[1,2]]],"plausibility":"entropy"}"#;
        assert!(ModelFile::from_json(both).unwrap().to_model().is_err());
        let bad_name = r#"{"alphabet":["H","T"],"grid_resolution":2,"plausibility":"magic"}"#;
        assert!(ModelFile::from_json(bad_name).unwrap().to_model().is_err());
        let bad_sum = r#"{"alphabet":["H","T"],"worlds":[[[1,2],[1,3]]],"plausibility":"entropy"}"#;
        assert!(matches!(
            ModelFile::from_json(bad_sum).unwrap().to_model(),
            Err(Error::SumNotOne(_))
        ));
        match ModelFile::from_json("{\n  \"alphabet\": [\"H\",\n}") {
            Err(Error::ModelFile(msg)) => assert!(msg.contains("line"), "{}", msg),
            other => panic!("unexpected {:?}", other),
        }
        let short = r#"{"alphabet":["H","T"],"grid_resolution":2,"plausibility":"entropy","conditioned_on":[1]}"#;
        assert!(ModelFile::from_json(short).unwrap().to_model().is_err());
    }
}
