//! Enumeration of reduced symbols by rank and defect class.
//!
//! The full enumerator walks defects `d` with `floor(d^2/4) <= n` and, for
//! each, pairs of partitions `(lambda, mu)` with `|lambda| + |mu|` equal to
//! the remaining weight: every reduced symbol of that defect arises from
//! exactly one such pair by shifting one half. The level-capped enumerator
//! instead builds a small-rank core and inserts the forced maximal entry,
//! which reaches ranks in the thirties that the full walk cannot.

use super::{HalfSymbol, Symbol, SymbolError};
use crate::symfun::partitions_of;

/// Constraint on the defect of enumerated symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectClass {
    Any,
    Even,
    Odd,
    /// Defect congruent to the value mod 4.
    Mod4(u8),
    Exact(i64),
}

impl DefectClass {
    pub fn admits(&self, d: i64) -> bool {
        match *self {
            DefectClass::Any => true,
            DefectClass::Even => d % 2 == 0,
            DefectClass::Odd => d.rem_euclid(2) == 1,
            DefectClass::Mod4(r) => d.rem_euclid(4) == r as i64,
            DefectClass::Exact(v) => d == v,
        }
    }

    pub fn parse(s: &str) -> Option<DefectClass> {
        Some(match s {
            "any" => DefectClass::Any,
            "even" => DefectClass::Even,
            "odd" => DefectClass::Odd,
            "0" => DefectClass::Mod4(0),
            "1" => DefectClass::Mod4(1),
            "2" => DefectClass::Mod4(2),
            "3" => DefectClass::Mod4(3),
            _ => return None,
        })
    }
}

/// Contribution of the defect to the rank: `floor(d^2 / 4)`.
fn defect_weight(d: i64) -> i64 {
    (d * d).div_euclid(4)
}

const FULL_RANK_BOUND: u32 = 20;
const CAPPED_RANK_BOUND: u32 = 48;

/// Every reduced symbol of the given rank and defect class, each exactly once.
///
/// With `level_cap` set, symbols are constructed directly as a bounded core
/// plus a forced maximal entry instead of filtering the full rank space.
pub fn enumerate_symbols(
    rank: u32,
    class: DefectClass,
    level_cap: Option<u32>,
) -> Result<Vec<Symbol>, SymbolError> {
    match level_cap {
        None => {
            if rank > FULL_RANK_BOUND {
                return Err(SymbolError::BoundExceeded(format!(
                    "full enumeration capped at rank {FULL_RANK_BOUND}, asked {rank}"
                )));
            }
            Ok(enumerate_full(rank, class))
        }
        Some(cap) => {
            if rank > CAPPED_RANK_BOUND {
                return Err(SymbolError::BoundExceeded(format!(
                    "capped enumeration limited to rank {CAPPED_RANK_BOUND}, asked {rank}"
                )));
            }
            enumerate_level_capped(rank, class, cap)
        }
    }
}

fn admissible_defects(rank: u32, class: DefectClass) -> Vec<i64> {
    let n = rank as i64;
    let mut out = Vec::new();
    let mut d = 0i64;
    while defect_weight(d) <= n {
        if class.admits(d) {
            out.push(d);
        }
        if d > 0 && class.admits(-d) {
            out.push(-d);
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn enumerate_full(rank: u32, class: DefectClass) -> Vec<Symbol> {
    let n = rank as i64;
    let mut out = Vec::new();
    for d in admissible_defects(rank, class) {
        let weight = n - defect_weight(d);
        for la in 0..=weight {
            for lambda in partitions_of(la as u32) {
                for mu in partitions_of((weight - la) as u32) {
                    let a0 = HalfSymbol::delta(&lambda);
                    let b0 = HalfSymbol::delta(&mu);
                    let shift = d - (a0.len() as i64 - b0.len() as i64);
                    let (mut a, mut b) = (a0, b0);
                    if shift >= 0 {
                        for _ in 0..shift {
                            a = a.sigma();
                        }
                    } else {
                        for _ in 0..(-shift) {
                            b = b.sigma();
                        }
                    }
                    let s = Symbol::new(a, b);
                    debug_assert!(s.is_reduced());
                    debug_assert_eq!(s.rank(), n);
                    debug_assert_eq!(s.defect(), d);
                    out.push(s);
                }
            }
        }
    }
    out
}

fn enumerate_level_capped(
    rank: u32,
    class: DefectClass,
    cap: u32,
) -> Result<Vec<Symbol>, SymbolError> {
    if cap > 6 {
        return Err(SymbolError::BoundExceeded(format!(
            "level cap limited to 6, asked {cap}"
        )));
    }
    let n = rank as i64;
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for level in 0..=cap {
        // cores: all reduced symbols of rank = level, any defect
        for core in enumerate_full(level, DefectClass::Any) {
            let m_s = core.a.len() as i64 + core.b.len() as i64;
            let c_m = n - level as i64 + m_s.div_euclid(2);
            if c_m < 0 {
                continue;
            }
            let c_m = c_m as u32;
            if core.max_entry().map_or(false, |mx| c_m < mx) {
                continue; // inserted entry must be the maximum
            }
            for into_a in [true, false] {
                let target = if into_a { &core.a } else { &core.b };
                if target.contains(c_m) {
                    continue;
                }
                let s = if into_a {
                    Symbol::new(target.insert(c_m).unwrap(), core.b.clone())
                } else {
                    Symbol::new(core.a.clone(), target.insert(c_m).unwrap())
                };
                if !class.admits(s.defect()) || s.rank() != n {
                    continue;
                }
                debug_assert!(s.is_reduced());
                debug_assert_eq!(s.level().unwrap(), level as i64);
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::partitions_of;

    #[test]
    fn rank_one_even_defect() {
        let got = enumerate_symbols(1, DefectClass::Even, None).unwrap();
        let expect: Vec<Symbol> = [
            Symbol::from_entries(&[0, 1], &[]).unwrap(),
            Symbol::from_entries(&[0], &[1]).unwrap(),
            Symbol::from_entries(&[1], &[0]).unwrap(),
            Symbol::from_entries(&[], &[0, 1]).unwrap(),
        ]
        .to_vec();
        assert_eq!(got.len(), 4);
        for e in &expect {
            assert!(got.contains(e), "missing {e:?}");
        }
    }

    #[test]
    fn rank_zero_defect_one_mod_4() {
        let got = enumerate_symbols(0, DefectClass::Mod4(1), None).unwrap();
        assert_eq!(got, vec![Symbol::from_entries(&[0], &[]).unwrap()]);
    }

    #[test]
    fn agrees_with_raw_search_small_ranks() {
        // independent oracle: brute-force over all half-symbol pairs with
        // entries bounded by the rank
        for n in 0..=6u32 {
            let mut raw = Vec::new();
            let subsets: Vec<Vec<u32>> = (0..1u32 << (n + 1))
                .map(|mask| (0..=n).rev().filter(|&i| mask >> i & 1 == 1).collect())
                .collect();
            for sa in &subsets {
                for sb in &subsets {
                    let s = Symbol::from_entries(sa, sb).unwrap();
                    if s.is_reduced() && s.rank() == n as i64 {
                        raw.push(s);
                    }
                }
            }
            let mut got = enumerate_symbols(n, DefectClass::Any, None).unwrap();
            raw.sort_unstable();
            got.sort_unstable();
            assert_eq!(got, raw, "mismatch at rank {n}");
        }
    }

    #[test]
    fn defect_one_count_matches_bipartition_count() {
        // independent count: sum over defects d = 1 mod 4 of the number of
        // partition pairs of the residual weight
        let p = |k: u32| partitions_of(k).len() as u64;
        for n in 0..=8u32 {
            let mut expected = 0u64;
            for d in admissible_defects(n, DefectClass::Mod4(1)) {
                let w = n as i64 - defect_weight(d);
                for la in 0..=w {
                    expected += p(la as u32) * p((w - la) as u32);
                }
            }
            let got = enumerate_symbols(n, DefectClass::Mod4(1), None).unwrap();
            assert_eq!(got.len() as u64, expected, "count mismatch at rank {n}");
            // all enumerated symbols really have defect 1 mod 4 and rank n
            for s in &got {
                assert_eq!(s.defect().rem_euclid(4), 1);
                assert_eq!(s.rank(), n as i64);
                assert!(s.is_reduced());
            }
        }
    }

    #[test]
    fn no_duplicates_up_to_rank_8() {
        for n in 0..=8u32 {
            let got = enumerate_symbols(n, DefectClass::Any, None).unwrap();
            let set: std::collections::HashSet<_> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len());
        }
    }

    #[test]
    fn level_capped_matches_filtered_full() {
        for n in [6u32, 9, 12] {
            for cap in [0u32, 1, 2] {
                let capped = enumerate_symbols(n, DefectClass::Any, Some(cap)).unwrap();
                let mut filtered: Vec<Symbol> = enumerate_symbols(n, DefectClass::Any, None)
                    .unwrap()
                    .into_iter()
                    .filter(|s| s.level().unwrap() <= cap as i64)
                    .collect();
                filtered.sort_unstable();
                assert_eq!(capped, filtered, "mismatch at rank {n}, cap {cap}");
            }
        }
    }

    #[test]
    fn level_capped_reaches_rank_30() {
        let symbols = enumerate_symbols(30, DefectClass::Any, Some(3)).unwrap();
        assert!(!symbols.is_empty());
        for s in &symbols {
            assert_eq!(s.rank(), 30);
            assert!(s.level().unwrap() <= 3);
            assert!(s.is_reduced());
        }
        // the trivial-type symbol is present
        assert!(symbols.contains(&Symbol::from_entries(&[30], &[0]).unwrap()));
    }

    #[test]
    fn bound_errors() {
        assert!(enumerate_symbols(21, DefectClass::Any, None).is_err());
        assert!(enumerate_symbols(50, DefectClass::Any, Some(2)).is_err());
    }
}
