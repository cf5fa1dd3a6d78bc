use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A set of worlds of a fixed frame, stored as a membership mask over the
/// frame's world indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Proposition {
    members: Vec<bool>,
}

impl Proposition {
    pub fn full(universe: usize) -> Self {
        Self {
            members: vec![true; universe],
        }
    }

    pub fn empty(universe: usize) -> Self {
        Self {
            members: vec![false; universe],
        }
    }

    pub fn from_mask(members: Vec<bool>) -> Self {
        Self { members }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Result<Self> {
        let mut members = vec![false; universe];
        for index in indices {
            if index >= universe {
                return Err(Error::WorldIndexOutOfRange {
                    index,
                    len: universe,
                });
            }
            members[index] = true;
        }
        Ok(Self { members })
    }

    pub fn from_predicate<F: FnMut(usize) -> bool>(universe: usize, f: F) -> Self {
        Self {
            members: (0..universe).map(f).collect(),
        }
    }

    /// Number of worlds in the underlying frame.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.get(index).copied().unwrap_or(false)
    }

    /// Number of member worlds.
    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect()
    }

    pub fn is_subset(&self, other: &Proposition) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    pub fn intersection(&self, other: &Proposition) -> Proposition {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Proposition) -> Proposition {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn complement(&self) -> Proposition {
        Self {
            members: self.members.iter().map(|&m| !m).collect(),
        }
    }

    fn zip_with(&self, other: &Proposition, f: impl Fn(bool, bool) -> bool) -> Proposition {
        debug_assert_eq!(self.universe(), other.universe());
        Self {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub(crate) fn check_universe(&self, expected: usize) -> Result<()> {
        if self.universe() == expected {
            Ok(())
        } else {
            Err(Error::PropositionMismatch {
                expected,
                found: self.universe(),
            })
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = Proposition::from_indices(5, [0, 1, 2]).unwrap();
        let b = Proposition::from_indices(5, [2, 3]).unwrap();
        assert_eq!(a.intersection(&b).indices(), vec![2]);
        assert_eq!(a.union(&b).indices(), vec![0, 1, 2, 3]);
        assert_eq!(a.complement().indices(), vec![3, 4]);
        assert!(Proposition::empty(5).is_subset(&b));
        assert!(!a.is_subset(&b));
        assert!(Proposition::full(3).is_full());
        assert_eq!(a.to_string(), "{0,1,2}");
        assert!(Proposition::from_indices(2, [2]).is_err());
    }
}
