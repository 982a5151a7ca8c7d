use std::fmt;

use crate::error::{Error, Result};

/// A 0/1 assignment to the decision variables of an instance, one bit per
/// variable (vertex, edge, or family member depending on the problem).
///
/// The basis-state correspondence is fixed throughout the crate: variable
/// `i` is bit `i` (least significant) of the basis index, and a set bit
/// means the variable is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selection {
    bits: Vec<bool>,
}

impl Selection {
    pub fn new(bits: Vec<bool>) -> Self {
        Selection { bits }
    }

    pub fn empty(len: usize) -> Self {
        Selection { bits: vec![false; len] }
    }

    pub fn full(len: usize) -> Self {
        Selection { bits: vec![true; len] }
    }

    /// Selection with exactly the given variables set.
    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut bits = vec![false; len];
        for &i in ones {
            assert!(i < len, "selection index {i} out of range {len}");
            bits[i] = true;
        }
        Selection { bits }
    }

    /// Decodes a basis-state index: bit `i` of `index` becomes variable `i`.
    pub fn from_basis_index(index: usize, len: usize) -> Self {
        assert!(len <= usize::BITS as usize);
        let bits = (0..len).map(|i| (index >> i) & 1 == 1).collect();
        Selection { bits }
    }

    /// Encodes the selection back into its basis-state index.
    pub fn basis_index(&self) -> usize {
        assert!(self.bits.len() <= usize::BITS as usize);
        self.bits
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &b)| if b { acc | (1 << i) } else { acc })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Indices of the chosen variables, ascending.
    pub fn ones(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Character `i` of the string is variable `i` ('1' = chosen).
    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Inverse of [`Selection::bit_string`].
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse(format!("invalid bit character {c:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Selection { bits })
    }

    pub(crate) fn check_len(&self, expected: usize, what: &str) -> Result<()> {
        if self.len() != expected {
            return Err(Error::parameter(format!(
                "selection length {} does not match {what} variable count {expected}",
                self.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())
    }
}
