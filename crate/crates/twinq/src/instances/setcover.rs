use crate::error::{Error, Result};

/// A set-cover instance: a universe `{0..n-1}` and an ordered family of
/// subsets whose union equals the universe. The position of a subset in
/// the family is its decision variable index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: usize,
    family: Vec<Vec<usize>>,
    covers: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, family: Vec<Vec<usize>>) -> Result<Self> {
        if universe_size == 0 {
            return Err(Error::parse("universe must be non-empty"));
        }
        let mut normalized = Vec::with_capacity(family.len());
        for (i, mut subset) in family.into_iter().enumerate() {
            if subset.is_empty() {
                return Err(Error::parse(format!("subset {i} is empty")));
            }
            subset.sort_unstable();
            if subset.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::parse(format!("subset {i} has a duplicate element")));
            }
            if let Some(&e) = subset.iter().find(|&&e| e >= universe_size) {
                return Err(Error::parse(format!(
                    "subset {i} contains element {e} outside [0,{universe_size})"
                )));
            }
            normalized.push(subset);
        }

        let mut covers = vec![Vec::new(); universe_size];
        for (i, subset) in normalized.iter().enumerate() {
            for &e in subset {
                covers[e].push(i);
            }
        }
        if let Some(e) = covers.iter().position(|c| c.is_empty()) {
            return Err(Error::parse(format!(
                "family union misses element {e}; it does not cover the universe"
            )));
        }

        Ok(SetCoverInstance { universe_size, family: normalized, covers })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn n_subsets(&self) -> usize {
        self.family.len()
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    pub fn subset(&self, i: usize) -> Result<&[usize]> {
        self.family
            .get(i)
            .map(|s| s.as_slice())
            .ok_or_else(|| Error::parameter(format!("subset index {i} out of range")))
    }

    /// Indices of the family members containing `element`, ascending.
    pub fn covering_subsets(&self, element: usize) -> Result<&[usize]> {
        self.covers
            .get(element)
            .map(|c| c.as_slice())
            .ok_or_else(|| Error::parameter(format!("element {element} out of range")))
    }

    /// Number of family members containing `element`.
    pub fn multiplicity(&self, element: usize) -> Result<usize> {
        Ok(self.covering_subsets(element)?.len())
    }
}
