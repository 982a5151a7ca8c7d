//! Multilinear pseudo-Boolean polynomial algebra and the binary-to-Ising
//! transform.
//!
//! A [`BinaryPolynomial`] is a sum of terms `coeff * prod x_i` over 0/1
//! variables, stored in canonical form: each term key is a sorted list of
//! distinct variable indices, zero coefficients are dropped, and like terms
//! are merged. The optimization sense travels with the polynomial so that
//! profit encodings can be reported in their natural (maximize) orientation
//! while the simulator consumes everything as a minimization.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::instances::Selection;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sense::Minimize => f.write_str("minimize"),
            Sense::Maximize => f.write_str("maximize"),
        }
    }
}

/// Multilinear polynomial over binary variables with an optimization sense.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<usize>, f64>,
    sense: Sense,
}

impl BinaryPolynomial {
    pub fn zero(num_vars: usize, sense: Sense) -> Self {
        BinaryPolynomial { num_vars, terms: BTreeMap::new(), sense }
    }

    pub fn constant(num_vars: usize, value: f64, sense: Sense) -> Self {
        let mut p = Self::zero(num_vars, sense);
        p.add_term(&[], value).expect("constant term is always valid");
        p
    }

    pub fn from_terms<'a, I>(num_vars: usize, sense: Sense, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [usize], f64)>,
    {
        let mut p = Self::zero(num_vars, sense);
        for (vars, coeff) in terms {
            p.add_term(vars, coeff)?;
        }
        Ok(p)
    }

    /// Adds `coeff * prod_{i in vars} x_i`, merging with any existing term
    /// and dropping the term if the merged coefficient is zero.
    pub fn add_term(&mut self, vars: &[usize], coeff: f64) -> Result<()> {
        let key = self.canonical_key(vars)?;
        let entry = self.terms.entry(key).or_insert(0.0);
        *entry += coeff;
        if *entry == 0.0 {
            let key = self.canonical_key(vars)?;
            self.terms.remove(&key);
        }
        Ok(())
    }

    fn canonical_key(&self, vars: &[usize]) -> Result<Vec<usize>> {
        let mut key = vars.to_vec();
        key.sort_unstable();
        if key.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::parameter(format!(
                "term {key:?} repeats a variable; polynomials are multilinear"
            )));
        }
        if let Some(&v) = key.last() {
            if v >= self.num_vars {
                return Err(Error::parameter(format!(
                    "variable {v} out of range [0,{})",
                    self.num_vars
                )));
            }
        }
        Ok(key)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic key) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, vars: &[usize]) -> f64 {
        let mut key = vars.to_vec();
        key.sort_unstable();
        self.terms.get(&key).copied().unwrap_or(0.0)
    }

    /// Value of the polynomial at a 0/1 assignment.
    pub fn evaluate(&self, s: &Selection) -> Result<f64> {
        s.check_len(self.num_vars, "polynomial")?;
        Ok(self
            .terms
            .iter()
            .filter(|(vars, _)| vars.iter().all(|&v| s.get(v)))
            .map(|(_, &c)| c)
            .sum())
    }

    /// Termwise sum; requires matching variable counts and senses.
    pub fn add(&self, other: &BinaryPolynomial) -> Result<BinaryPolynomial> {
        if self.num_vars != other.num_vars {
            return Err(Error::parameter(format!(
                "cannot add polynomials over {} and {} variables",
                self.num_vars, other.num_vars
            )));
        }
        if self.sense != other.sense {
            return Err(Error::parameter("cannot add polynomials of opposite sense"));
        }
        let mut out = self.clone();
        for (vars, coeff) in other.terms() {
            out.add_term(vars, coeff)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: f64) -> BinaryPolynomial {
        let mut out = Self::zero(self.num_vars, self.sense);
        if factor != 0.0 {
            out.terms = self.terms.iter().map(|(k, &c)| (k.clone(), c * factor)).collect();
        }
        out
    }

    /// Flips the sense and negates every coefficient, so that
    /// `minimize(-p)` describes the same optimization problem as
    /// `maximize(p)` with identical optima.
    pub fn negate_sense(&self) -> BinaryPolynomial {
        let mut out = self.scale(-1.0);
        out.sense = match self.sense {
            Sense::Minimize => Sense::Maximize,
            Sense::Maximize => Sense::Minimize,
        };
        out
    }

    /// Multilinear product: term keys are merged as sets (x_i^2 = x_i).
    pub fn mul(&self, other: &BinaryPolynomial) -> Result<BinaryPolynomial> {
        if self.num_vars != other.num_vars {
            return Err(Error::parameter(format!(
                "cannot multiply polynomials over {} and {} variables",
                self.num_vars, other.num_vars
            )));
        }
        let mut out = Self::zero(self.num_vars, self.sense);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let mut key: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                key.sort_unstable();
                key.dedup();
                let entry = out.terms.entry(key).or_insert(0.0);
                *entry += ca * cb;
            }
        }
        out.terms.retain(|_, c| *c != 0.0);
        Ok(out)
    }

    /// Degree profile: maximum term degree, total term count, and the
    /// number of terms per degree (index = degree).
    pub fn locality_stats(&self) -> LocalityStats {
        let max_degree = self.terms.keys().map(|k| k.len()).max().unwrap_or(0);
        let mut per_degree = vec![0usize; max_degree + 1];
        for key in self.terms.keys() {
            per_degree[key.len()] += 1;
        }
        LocalityStats { max_degree, term_count: self.terms.len(), per_degree }
    }

    /// Text dump, one term per line: `coeff [i j k ...]`, constant as
    /// `coeff []`, in canonical term order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (vars, coeff) in self.terms() {
            let idx: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("{} [{}]\n", coeff, idx.join(" ")));
        }
        out
    }
}

/// Full multilinear expansion of `prod_{v in var_set} (1 - x_v)`:
/// `2^|var_set|` terms with coefficients `(-1)^|subset|`.
pub fn expand_product_of_complements(
    num_vars: usize,
    var_set: &[usize],
    sense: Sense,
) -> Result<BinaryPolynomial> {
    if var_set.is_empty() {
        return Err(Error::parameter("product of complements needs at least one variable"));
    }
    let mut vars = var_set.to_vec();
    vars.sort_unstable();
    if vars.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::parameter("product of complements repeats a variable"));
    }
    let mut p = BinaryPolynomial::zero(num_vars, sense);
    let k = vars.len();
    for mask in 0usize..(1 << k) {
        let subset: Vec<usize> =
            (0..k).filter(|&i| (mask >> i) & 1 == 1).map(|i| vars[i]).collect();
        let sign = if subset.len() % 2 == 0 { 1.0 } else { -1.0 };
        p.add_term(&subset, sign)?;
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityStats {
    pub max_degree: usize,
    pub term_count: usize,
    pub per_degree: Vec<usize>,
}

/// Real-weighted Z-monomial expansion: a sum of `coeff * prod Z_i` terms
/// over qubits, the hardware-facing form of a cost polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingPolynomial {
    num_qubits: usize,
    terms: BTreeMap<Vec<usize>, f64>,
}

impl IsingPolynomial {
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, qubits: &[usize]) -> f64 {
        let mut key = qubits.to_vec();
        key.sort_unstable();
        self.terms.get(&key).copied().unwrap_or(0.0)
    }

    /// Value at a spin assignment (entries must be +1 or -1).
    pub fn evaluate_spins(&self, spins: &[f64]) -> Result<f64> {
        if spins.len() != self.num_qubits {
            return Err(Error::parameter(format!(
                "spin assignment length {} does not match qubit count {}",
                spins.len(),
                self.num_qubits
            )));
        }
        Ok(self
            .terms
            .iter()
            .map(|(qs, &c)| c * qs.iter().map(|&q| spins[q]).product::<f64>())
            .sum())
    }
}

/// Substitutes `x_i -> (1 - Z_i) / 2` and merges like Z-monomials.
///
/// A chosen variable (`x = 1`) corresponds to spin `-1` throughout:
/// substituting `z = 1 - 2x` into the result reproduces the binary
/// polynomial exactly.
pub fn binary_to_ising(p: &BinaryPolynomial) -> IsingPolynomial {
    let mut terms: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    for (vars, coeff) in p.terms() {
        let k = vars.len();
        let scale = coeff / (1u64 << k) as f64;
        // prod (1 - Z_i) expands over all subsets with sign (-1)^|subset|
        for mask in 0usize..(1 << k) {
            let subset: Vec<usize> =
                (0..k).filter(|&i| (mask >> i) & 1 == 1).map(|i| vars[i]).collect();
            let sign = if subset.len() % 2 == 0 { 1.0 } else { -1.0 };
            *terms.entry(subset).or_insert(0.0) += sign * scale;
        }
    }
    terms.retain(|_, c| *c != 0.0);
    IsingPolynomial { num_qubits: p.num_vars(), terms }
}
