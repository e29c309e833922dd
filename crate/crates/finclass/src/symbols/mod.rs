//! Symbol calculus for the unipotent characters of classical groups:
//! half-symbols, rank, defect, level, hooks and cohooks, enumeration, and the
//! degree estimates that tie level to character degree.

mod degree;
mod enumerate;
mod hooks;
mod series;
mod tn;

pub use degree::{
    ineq_m20_holds, ineq_m_cubed_holds, level_from_degree, log_degree_c_form, log_degree_estimate,
    merged_weight_identity_holds, nint, slack_window,
};
pub use enumerate::{enumerate_symbols, DefectClass};
pub use hooks::{
    cohooks, hooks, remove_cohook, remove_hook, restore_cohook, restore_hook, Half, HookRef,
};
pub use series::{
    descriptor_psi_log, dominant_kappa, level_general, sample_descriptor, series_log_degree,
    DualFamily, KappaComponent, SeriesDescriptor,
};
pub use tn::{four_sets, tn_classification, TnElement, TnFamily};

use crate::symfun::Partition;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("entries must be strictly decreasing non-negative integers")]
    Malformed,
    #[error("operation needs a non-reduced half-symbol")]
    AlreadyReduced,
    #[error("operation needs a nonempty half-symbol")]
    Empty,
    #[error("symbol is not reduced")]
    NotReduced,
    #[error("symbol is degenerate (A = B)")]
    Degenerate,
    #[error("invalid hook reference")]
    BadHook,
    #[error("rank mismatch: symbol has rank {0}, expected {1}")]
    RankMismatch(i64, i64),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("defect {0} has wrong parity for this operation")]
    WrongParity(i64),
    #[error("rank hypothesis violated: rank {0} <= 4*{1}^2 + 2*{1}")]
    HypothesisViolated(i64, i64),
    #[error("inconsistent series descriptor: {0}")]
    BadDescriptor(String),
}

/// Strictly decreasing finite set of non-negative integers.
///
/// Reduced means the smallest entry is positive (or the set is empty);
/// equivalently, the set is not of the form `Sigma(B)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfSymbol {
    entries: Vec<u32>,
}

impl HalfSymbol {
    /// Builds from strictly decreasing entries.
    pub fn new(entries: Vec<u32>) -> Result<Self, SymbolError> {
        if !entries.windows(2).all(|w| w[0] > w[1]) {
            return Err(SymbolError::Malformed);
        }
        Ok(HalfSymbol { entries })
    }

    /// Builds from entries in any order; duplicates are an error.
    pub fn from_set(mut entries: Vec<u32>) -> Result<Self, SymbolError> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(entries)
    }

    pub fn empty() -> Self {
        HalfSymbol { entries: vec![] }
    }

    /// `{k-1, k-2, ..., 1, 0}`.
    pub fn staircase(k: u32) -> Self {
        HalfSymbol {
            entries: (0..k).rev().collect(),
        }
    }

    /// Entries in decreasing order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.entries.binary_search_by(|x| v.cmp(x)).is_ok()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.entries.first().copied()
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&x| x as u64).sum()
    }

    /// Reduced iff `0` is not an entry.
    pub fn is_reduced(&self) -> bool {
        self.entries.last().map_or(true, |&x| x > 0)
    }

    /// `Sigma(A) = {a+1 : a in A}` with `0` adjoined.
    pub fn sigma(&self) -> HalfSymbol {
        let mut entries: Vec<u32> = self.entries.iter().map(|&a| a + 1).collect();
        entries.push(0);
        HalfSymbol { entries }
    }

    /// Left inverse of `sigma`; requires a non-reduced set.
    pub fn sigma_inverse(&self) -> Result<HalfSymbol, SymbolError> {
        if self.is_empty() {
            return Err(SymbolError::Empty);
        }
        if self.is_reduced() {
            return Err(SymbolError::AlreadyReduced);
        }
        let entries = self.entries[..self.entries.len() - 1]
            .iter()
            .map(|&a| a - 1)
            .collect();
        Ok(HalfSymbol { entries })
    }

    /// Drops the largest entry.
    pub fn bar(&self) -> Result<HalfSymbol, SymbolError> {
        if self.is_empty() {
            return Err(SymbolError::Empty);
        }
        Ok(HalfSymbol {
            entries: self.entries[1..].to_vec(),
        })
    }

    /// The partition `pi(A)`: part `i` is `a_i - (n - i)` (1-indexed).
    pub fn pi(&self) -> Partition {
        let n = self.entries.len();
        let parts: Vec<u32> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &a)| a - (n - 1 - i) as u32)
            .collect();
        Partition::new(parts).expect("strictly decreasing entries give weakly decreasing parts")
    }

    /// The unique reduced half-symbol with `pi(delta(lambda)) = lambda`.
    pub fn delta(lambda: &Partition) -> HalfSymbol {
        let n = lambda.len();
        let entries = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (n - 1 - i) as u32)
            .collect();
        HalfSymbol { entries }
    }

    pub fn insert(&self, v: u32) -> Result<HalfSymbol, SymbolError> {
        if self.contains(v) {
            return Err(SymbolError::Malformed);
        }
        let mut entries = self.entries.clone();
        entries.push(v);
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(HalfSymbol { entries })
    }

    pub fn remove(&self, v: u32) -> Result<HalfSymbol, SymbolError> {
        if !self.contains(v) {
            return Err(SymbolError::BadHook);
        }
        let entries = self.entries.iter().copied().filter(|&x| x != v).collect();
        Ok(HalfSymbol { entries })
    }
}

impl std::fmt::Debug for HalfSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.entries
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Ordered pair of half-symbols.
///
/// Serializes as `{"A": [...], "B": [...]}` with entries descending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    #[serde(rename = "A")]
    pub a: HalfSymbol,
    #[serde(rename = "B")]
    pub b: HalfSymbol,
}

impl Symbol {
    pub fn new(a: HalfSymbol, b: HalfSymbol) -> Self {
        Symbol { a, b }
    }

    /// Convenience constructor from entry lists in any order.
    pub fn from_entries(a: &[u32], b: &[u32]) -> Result<Self, SymbolError> {
        Ok(Symbol {
            a: HalfSymbol::from_set(a.to_vec())?,
            b: HalfSymbol::from_set(b.to_vec())?,
        })
    }

    pub fn transpose(&self) -> Symbol {
        Symbol {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    /// Reduced iff at least one half is reduced.
    pub fn is_reduced(&self) -> bool {
        self.a.is_reduced() || self.b.is_reduced()
    }

    /// `|A| - |B|`; may be negative.
    pub fn defect(&self) -> i64 {
        self.a.len() as i64 - self.b.len() as i64
    }

    /// `m = |A| + |B| - 1`; `-1` for the empty symbol.
    pub fn m_param(&self) -> i64 {
        self.a.len() as i64 + self.b.len() as i64 - 1
    }

    /// `1` when `m` is odd, equivalently when the defect is even.
    pub fn epsilon_m(&self) -> i64 {
        self.m_param().rem_euclid(2)
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.a.max_entry().into_iter().chain(self.b.max_entry()).max()
    }

    pub fn entry_sum(&self) -> i64 {
        (self.a.sum() + self.b.sum()) as i64
    }

    /// Rank by the entry-sum form, asserted equal to the partition form.
    pub fn rank(&self) -> i64 {
        let m = self.m_param();
        let by_sum = self.entry_sum() - (m * m).div_euclid(4);
        debug_assert_eq!(by_sum, self.rank_by_partitions());
        by_sum
    }

    /// Rank as `|pi(A)| + |pi(B)| + floor(def^2 / 4)`, equivalently
    /// `|pi(A)| + |pi(B)| + (def^2 - (1 - eps_m)) / 4`.
    pub fn rank_by_partitions(&self) -> i64 {
        let d = self.defect();
        self.a.pi().size() as i64 + self.b.pi().size() as i64 + (d * d).div_euclid(4)
    }

    /// `lev = rank - max + floor(m/2)`; needs a reduced, nonempty symbol.
    pub fn level(&self) -> Result<i64, SymbolError> {
        if !self.is_reduced() {
            return Err(SymbolError::NotReduced);
        }
        let max = self.max_entry().ok_or(SymbolError::Empty)?;
        Ok(self.rank() - max as i64 + self.m_param().div_euclid(2))
    }

    /// The merged weakly increasing sequence `c_0 <= ... <= c_m`.
    pub fn c_sequence(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self
            .a
            .entries()
            .iter()
            .chain(self.b.entries())
            .copied()
            .collect();
        c.sort_unstable();
        c
    }

    /// Twice the values `d_i = c_i - i/2`, kept integral.
    pub fn d_sequence_doubled(&self) -> Vec<i64> {
        self.c_sequence()
            .iter()
            .enumerate()
            .map(|(i, &c)| 2 * c as i64 - i as i64)
            .collect()
    }

    /// Simultaneous shift of both halves; preserves rank and level.
    pub fn sigma_both(&self) -> Symbol {
        Symbol {
            a: self.a.sigma(),
            b: self.b.sigma(),
        }
    }

    /// Canonical form: strip simultaneous shifts until reduced.
    pub fn reduce(&self) -> Symbol {
        let mut s = self.clone();
        while !s.is_reduced() {
            s = Symbol {
                a: s.a.sigma_inverse().expect("non-reduced symbol has 0 in A"),
                b: s.b.sigma_inverse().expect("non-reduced symbol has 0 in B"),
            };
        }
        s
    }
}

impl std::fmt::Debug for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}|{:?})", self.a, self.b)
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::partitions_of;

    fn sym(a: &[u32], b: &[u32]) -> Symbol {
        Symbol::from_entries(a, b).unwrap()
    }

    #[test]
    fn sigma_and_inverse() {
        let a = HalfSymbol::from_set(vec![1]).unwrap();
        assert_eq!(a.sigma(), HalfSymbol::from_set(vec![2, 0]).unwrap());
        assert_eq!(a.sigma().sigma_inverse().unwrap(), a);
        let empty = HalfSymbol::empty();
        assert_eq!(empty.sigma(), HalfSymbol::from_set(vec![0]).unwrap());
        assert!(empty.sigma_inverse().is_err());
        let reduced = HalfSymbol::from_set(vec![3, 1]).unwrap();
        assert!(reduced.sigma_inverse().is_err());
    }

    #[test]
    fn sigma_inverse_round_trip_random() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let mut entries: Vec<u32> = (0..rng.gen_range(0..8))
                .map(|_| rng.gen_range(0..30))
                .collect();
            entries.sort_unstable();
            entries.dedup();
            let a = HalfSymbol::from_set(entries).unwrap();
            assert_eq!(a.sigma().sigma_inverse().unwrap(), a);
        }
    }

    #[test]
    fn bar_drops_maximum() {
        let a = HalfSymbol::from_set(vec![3, 1]).unwrap();
        assert_eq!(a.bar().unwrap(), HalfSymbol::from_set(vec![1]).unwrap());
        assert!(HalfSymbol::empty().bar().is_err());
    }

    #[test]
    fn pi_delta_round_trip() {
        let a = HalfSymbol::from_set(vec![3, 1]).unwrap();
        assert_eq!(a.pi(), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(HalfSymbol::delta(&Partition::new(vec![2, 1]).unwrap()), a);
        assert_eq!(HalfSymbol::empty().pi(), Partition::empty());
        for n in 0..=10 {
            for lambda in partitions_of(n) {
                let d = HalfSymbol::delta(&lambda);
                assert!(d.is_reduced());
                assert_eq!(d.pi(), lambda);
                // pi is invariant under sigma
                assert_eq!(d.sigma().pi(), lambda);
                assert_eq!(d.sigma().sigma().pi(), lambda);
                // bar removes the largest part
                if !lambda.is_empty() {
                    let mut rest = lambda.parts().to_vec();
                    rest.remove(0);
                    assert_eq!(d.bar().unwrap().pi(), Partition::new(rest).unwrap());
                }
            }
        }
    }

    #[test]
    fn rank_defect_m_max_examples() {
        let s = sym(&[3], &[0]);
        assert_eq!(s.rank(), 3);
        assert_eq!(s.defect(), 0);
        assert_eq!(s.m_param(), 1);
        assert_eq!(s.max_entry(), Some(3));

        let s = sym(&[2, 1], &[0]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.defect(), 1);
        assert_eq!(s.m_param(), 2);
        assert_eq!(s.max_entry(), Some(2));

        let empty = sym(&[], &[]);
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn level_examples() {
        assert_eq!(sym(&[3], &[0]).level().unwrap(), 0);
        assert_eq!(sym(&[2, 1], &[0]).level().unwrap(), 1);
    }

    #[test]
    fn c_and_d_sequences() {
        let s = sym(&[2, 1], &[0]);
        assert_eq!(s.c_sequence(), vec![0, 1, 2]);
        assert_eq!(s.d_sequence_doubled(), vec![0, 1, 2]); // d = 0, 1/2, 1

        let s = sym(&[3], &[0]);
        assert_eq!(s.c_sequence(), vec![0, 3]);
        assert_eq!(s.d_sequence_doubled(), vec![0, 5]); // d = 0, 5/2
        // identity: n = sum(d) + m/4 + eps/4, doubled: 4n = 2*sum(2d) + m + eps
        let m = s.m_param();
        let sum2d: i64 = s.d_sequence_doubled().iter().sum();
        assert_eq!(4 * s.rank(), 2 * sum2d + m + s.epsilon_m());

        let s = sym(&[], &[0]);
        assert_eq!(s.c_sequence(), vec![0]);
        assert_eq!(s.d_sequence_doubled(), vec![0]);
    }

    #[test]
    fn epsilon_matches_defect_parity() {
        // m even <=> defect odd
        for (a, b) in [
            (vec![3u32], vec![0u32]),
            (vec![2, 1], vec![0]),
            (vec![5, 2], vec![3, 1]),
            (vec![], vec![0]),
        ] {
            let s = Symbol::from_entries(&a, &b).unwrap();
            assert_eq!(s.m_param() % 2 == 0, s.defect().rem_euclid(2) == 1);
        }
    }

    #[test]
    fn reduce_reaches_reduced_form() {
        let s = sym(&[3], &[0]);
        let shifted = s.sigma_both().sigma_both();
        assert!(!shifted.is_reduced());
        assert_eq!(shifted.reduce(), s);
        assert_eq!(shifted.rank(), s.rank());
        assert!(shifted.level().is_err()); // not reduced
    }

    #[test]
    fn rank_level_shift_and_transpose_invariance() {
        let cases = [
            sym(&[3], &[0]),
            sym(&[2, 1], &[0]),
            sym(&[5, 2], &[3, 1]),
            sym(&[4, 2, 1], &[3]),
        ];
        for s in cases {
            let shifted = s.sigma_both();
            assert_eq!(shifted.rank(), s.rank());
            assert_eq!(shifted.defect(), s.defect());
            let t = s.transpose();
            assert_eq!(t.rank(), s.rank());
            assert_eq!(t.level().unwrap(), s.level().unwrap());
            assert_eq!(t.defect(), -s.defect());
        }
    }

    #[test]
    fn serde_shape() {
        let s = sym(&[2, 1], &[0]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"A":[2,1],"B":[0]}"#);
        let back: Symbol = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
