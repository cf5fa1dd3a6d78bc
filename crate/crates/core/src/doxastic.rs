//! Probabilistic plausibility frames and models: knowledge, belief,
//! conditional belief, and the two kinds of update.
//!
//! Worlds are finite, so "all plausible enough worlds" reduces to "all
//! maximally plausible worlds" and every belief check is an argmax check.

use crate::error::{Error, Result};
use crate::plausibility::{PlausibilityFn, PlausibilityState};
use crate::proposition::Proposition;
use crate::simplex::{MassFunction, ObservationEvent, OutcomeAlphabet};

/// A set of candidate distributions with a plausibility state over them.
#[derive(Debug, Clone)]
pub struct Frame {
    state: PlausibilityState,
}

impl Frame {
    pub fn new(worlds: Vec<MassFunction>, f: PlausibilityFn) -> Result<Self> {
        Ok(Self {
            state: PlausibilityState::new(worlds, f)?,
        })
    }

    pub fn from_state(state: PlausibilityState) -> Self {
        Self { state }
    }

    pub fn state(&self) -> &PlausibilityState {
        &self.state
    }

    pub fn worlds(&self) -> &[MassFunction] {
        self.state.worlds()
    }

    pub fn len(&self) -> usize {
        self.state.len()
    }

    pub fn is_empty(&self) -> bool {
        self.state.is_empty()
    }

    /// `K(P)`: every world of the frame is in `p`.
    pub fn knowledge_holds(&self, p: &Proposition) -> Result<bool> {
        p.check_universe(self.len())?;
        Ok(p.is_full())
    }

    /// `B(P)`: every maximally plausible world is in `p`.
    pub fn belief_holds(&self, p: &Proposition) -> Result<bool> {
        p.check_universe(self.len())?;
        Ok(self.state.argmax_worlds().is_subset(p))
    }

    /// `B(P | e)`: every maximally plausible world given `e` is in `p`.
    pub fn conditional_belief_event(&self, p: &Proposition, e: &ObservationEvent) -> Result<bool> {
        p.check_universe(self.len())?;
        let conditioned = self.state.condition(e)?;
        Ok(conditioned.argmax_worlds().is_subset(p))
    }

    /// `B(P | Q)`: every maximally plausible `q`-world is in `p`. Vacuously
    /// true when `q` is empty.
    pub fn conditional_belief_prop(&self, p: &Proposition, q: &Proposition) -> Result<bool> {
        p.check_universe(self.len())?;
        q.check_universe(self.len())?;
        Ok(self.state.argmax_within(q).is_subset(p))
    }
}

/// A frame together with the outcome alphabet its worlds range over.
#[derive(Debug, Clone)]
pub struct Model {
    alphabet: OutcomeAlphabet,
    frame: Frame,
}

impl Model {
    pub fn new(alphabet: OutcomeAlphabet, frame: Frame) -> Result<Self> {
        alphabet.check_arity(frame.state().arity())?;
        Ok(Self { alphabet, frame })
    }

    pub fn from_worlds(
        alphabet: OutcomeAlphabet,
        worlds: Vec<MassFunction>,
        f: PlausibilityFn,
    ) -> Result<Self> {
        Self::new(alphabet, Frame::new(worlds, f)?)
    }

    pub fn alphabet(&self) -> &OutcomeAlphabet {
        &self.alphabet
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn worlds(&self) -> &[MassFunction] {
        self.frame.worlds()
    }

    pub fn len(&self) -> usize {
        self.frame.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frame.is_empty()
    }

    pub fn world_index(&self, world: &MassFunction) -> Result<usize> {
        self.frame.state().index_of(world).ok_or(Error::WorldNotInModel)
    }

    /// Sampling update: same worlds, plausibility conditioned on `e`.
    pub fn update_sampling(&self, e: &ObservationEvent) -> Result<Model> {
        self.alphabet.check_arity(e.arity())?;
        Ok(Model {
            alphabet: self.alphabet.clone(),
            frame: Frame::from_state(self.frame.state().condition(e)?),
        })
    }

    /// Propositional update: worlds restricted to `p`, plausibility values
    /// unchanged.
    pub fn update_proposition(&self, p: &Proposition) -> Result<Model> {
        Ok(Model {
            alphabet: self.alphabet.clone(),
            frame: Frame::from_state(self.frame.state().restrict(p)?),
        })
    }
}
