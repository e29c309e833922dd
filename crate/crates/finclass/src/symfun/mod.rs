//! Partitions, border strips, and Murnaghan-Nakayama evaluation of
//! symmetric-group characters.

mod mn;
mod strips;

pub use mn::{
    char_table, fast_growth_holds, is_minimal, mn_value, nonvanishing_set, prime_order_congruence,
    CharTable, Variant,
};
pub use strips::{border_strips, BorderStrip};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymfunError {
    #[error("partition size {0} does not match cycle type size {1}")]
    SizeMismatch(u32, u32),
    #[error("parts must be positive and weakly decreasing")]
    MalformedPartition,
    #[error("cycle type is not of prime order: {0}")]
    NotPrimeOrder(String),
    #[error("table bound exceeded: n = {0} > {1}")]
    TableBound(u32, u32),
    #[error("parameter a = {0} out of range (need 0 < 3a < N = {1})")]
    BadCycleSplit(u32, u32),
}

/// Integer partition: weakly decreasing positive parts.
///
/// Serialized as a descending array of parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping zeros; fails if not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self, SymfunError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(SymfunError::MalformedPartition);
        }
        let parts = parts.into_iter().take_while(|&p| p > 0).collect();
        Ok(Partition { parts })
    }

    /// Builds from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Hook partition `(n - b, 1, ..., 1)` with `b` ones.
    pub fn hook(n: u32, b: u32) -> Self {
        assert!(b < n);
        let mut parts = vec![n - b];
        parts.extend(std::iter::repeat(1).take(b as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate diagram.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = vec![0u32; cols];
        for (j, p) in parts.iter_mut().enumerate() {
            *p = self.parts.iter().filter(|&&x| x as usize > j).count() as u32;
        }
        Partition { parts }
    }

    /// Beta-set with `len` slots: distinct values `part_i + len - 1 - i`.
    pub(crate) fn beta_set(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.parts.len());
        (0..len)
            .map(|i| self.part(i) + (len - 1 - i) as u32)
            .collect()
    }

    pub(crate) fn from_beta_set(mut beta: Vec<u32>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let len = beta.len();
        let mut parts: Vec<u32> = beta
            .into_iter()
            .enumerate()
            .map(|(i, b)| b - (len - 1 - i) as u32)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Product of hook lengths of the diagram.
    pub fn hook_product(&self) -> u64 {
        let t = self.transpose();
        let mut prod = 1u64;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as u64 - 1 - j as u64;
                let leg = t.parts[j] as u64 - 1 - i as u64;
                prod *= arm + leg + 1;
            }
        }
        prod
    }

    /// Character degree by the hook length formula.
    pub fn hook_length_degree(&self) -> u64 {
        factorial(self.size() as u64) / self.hook_product()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.part(row) as usize > col
    }
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

fn join(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Orbit lengths of a permutation; stored ascending.
///
/// Serialized as an ascending array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType {
    lengths: Vec<u32>,
}

impl CycleType {
    pub fn new(mut lengths: Vec<u32>) -> Self {
        lengths.retain(|&l| l > 0);
        lengths.sort_unstable();
        CycleType { lengths }
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    pub fn degree(&self) -> u32 {
        self.lengths.iter().sum()
    }

    pub fn cycle_count(&self) -> usize {
        self.lengths.len()
    }

    /// `(-1)^{N - m}`: the sign character at this class.
    pub fn sign(&self) -> i64 {
        if (self.degree() as usize - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Centralizer order in `S_N`: `prod k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.lengths.len() {
            let k = self.lengths[i];
            let mut mult = 0u64;
            while i < self.lengths.len() && self.lengths[i] == k {
                mult += 1;
                i += 1;
            }
            z *= (k as u64).pow(mult as u32) * factorial(mult);
        }
        z
    }

    pub fn class_size(&self) -> u64 {
        factorial(self.degree() as u64) / self.centralizer_order()
    }

    /// True when every orbit length is 1 or `l` and `l` occurs.
    pub fn has_prime_order(&self, l: u32) -> bool {
        self.lengths.iter().all(|&k| k == 1 || k == l) && self.lengths.contains(&l)
    }
}

impl std::fmt::Debug for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", join(&self.lengths))
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = max.min(remaining);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Conjugacy classes of `S_n` as cycle types.
pub fn classes_of(n: u32) -> Vec<CycleType> {
    partitions_of(n)
        .into_iter()
        .map(|p| CycleType::new(p.parts))
        .collect()
}
