//! Symbols with nonzero value at the distinguished regular semisimple
//! elements, located by scanning for the forced hook or cohook.

use super::{cohooks, enumerate_symbols, hooks, DefectClass, HalfSymbol, Symbol, SymbolError};

/// Which classical series the scan runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TnFamily {
    /// Symplectic / odd orthogonal: defect 1 mod 4.
    BC,
    /// Even orthogonal of plus type: defect 0 mod 4.
    DPlus,
    /// Even orthogonal of minus type: defect 2 mod 4.
    DMinus,
}

impl TnFamily {
    pub fn defect_class(self) -> DefectClass {
        match self {
            TnFamily::BC => DefectClass::Mod4(1),
            TnFamily::DPlus => DefectClass::Mod4(0),
            TnFamily::DMinus => DefectClass::Mod4(2),
        }
    }

    fn min_rank(self) -> u32 {
        match self {
            TnFamily::BC => 4,
            TnFamily::DPlus | TnFamily::DMinus => 5,
        }
    }
}

/// Which removal the element's torus class forces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TnElement {
    /// Full cycle, hook side: removal size `n`.
    NHook,
    /// Full cycle, cohook side.
    NCohook,
    /// Near-cycle, hook side: removal size `n - 1`.
    Nminus1Hook,
    /// Near-cycle, cohook side.
    Nminus1Cohook,
}

impl TnElement {
    pub fn removal_size(self, n: u32) -> u32 {
        match self {
            TnElement::NHook | TnElement::NCohook => n,
            TnElement::Nminus1Hook | TnElement::Nminus1Cohook => n - 1,
        }
    }

    pub fn is_hook(self) -> bool {
        matches!(self, TnElement::NHook | TnElement::Nminus1Hook)
    }

    pub fn parse(s: &str) -> Option<TnElement> {
        Some(match s {
            "n-hook" => TnElement::NHook,
            "n-cohook" => TnElement::NCohook,
            "n1-hook" => TnElement::Nminus1Hook,
            "n1-cohook" => TnElement::Nminus1Cohook,
            _ => return None,
        })
    }
}

/// All reduced symbols of the given rank and series whose value at the
/// element survives: those carrying the required removal. Each carries its
/// level; the scan asserts the removal is unique, which pins the value to
/// plus or minus one.
pub fn tn_classification(
    n: u32,
    family: TnFamily,
    element: TnElement,
) -> Result<Vec<(Symbol, i64)>, SymbolError> {
    if n < family.min_rank() {
        return Err(SymbolError::BoundExceeded(format!(
            "family {family:?} needs rank >= {}, got {n}",
            family.min_rank()
        )));
    }
    let k = element.removal_size(n);
    let mut out = Vec::new();
    for s in enumerate_symbols(n, family.defect_class(), None)? {
        let found = if element.is_hook() {
            hooks(&s, k)
        } else {
            cohooks(&s, k)
        };
        if found.is_empty() {
            continue;
        }
        if found.len() > 1 {
            return Err(SymbolError::BadDescriptor(format!(
                "symbol {s:?} has {} removals of size {k}; expected at most one",
                found.len()
            )));
        }
        let level = s.level()?;
        out.push((s, level));
    }
    out.sort_unstable();
    Ok(out)
}

/// The four explicit families of full-cycle survivors in the symplectic and
/// odd-orthogonal series, with their levels `l, l+1, l, l+1`.
pub fn four_sets(n: u32) -> [Vec<(Symbol, i64)>; 4] {
    let range = |lo: u32, hi: u32| (lo..hi).collect::<Vec<u32>>();
    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    let mut f3 = Vec::new();
    let mut f4 = Vec::new();
    for l in 0..n {
        // ( 1, ..., l, n | 0, ..., l-1 )
        let mut a = range(1, l + 1);
        a.push(n);
        f1.push((
            Symbol::new(
                HalfSymbol::from_set(a).unwrap(),
                HalfSymbol::staircase(l),
            ),
            l as i64,
        ));
        // ( 0, ..., l+1 | 1, ..., l, n )
        let mut b = range(1, l + 1);
        b.push(n);
        f2.push((
            Symbol::new(
                HalfSymbol::staircase(l + 2),
                HalfSymbol::from_set(b).unwrap(),
            ),
            l as i64 + 1,
        ));
        if l > 0 {
            // ( 1, ..., l-1 | 0, ..., l, n )
            let mut b = range(0, l + 1);
            b.push(n);
            f3.push((
                Symbol::new(
                    HalfSymbol::from_set(range(1, l)).unwrap(),
                    HalfSymbol::from_set(b).unwrap(),
                ),
                l as i64,
            ));
        }
        // ( 0, ..., l, n | 1, ..., l+1 )
        let mut a = range(0, l + 1);
        a.push(n);
        f4.push((
            Symbol::new(
                HalfSymbol::from_set(a).unwrap(),
                HalfSymbol::from_set(range(1, l + 2)).unwrap(),
            ),
            l as i64 + 1,
        ));
    }
    [f1, f2, f3, f4]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn four_sets_have_stated_rank_defect_level() {
        for n in [4u32, 6, 9] {
            for (idx, family) in four_sets(n).iter().enumerate() {
                for (s, lev) in family {
                    assert_eq!(s.rank(), n as i64, "set {idx}, {s:?}");
                    assert_eq!(s.defect().rem_euclid(4), 1, "set {idx}, {s:?}");
                    assert!(s.is_reduced());
                    assert_eq!(s.level().unwrap(), *lev, "set {idx}, {s:?}");
                }
            }
        }
    }

    #[test]
    fn bc_hook_scan_equals_first_two_families() {
        for n in [4u32, 6, 8] {
            let got: BTreeSet<Symbol> = tn_classification(n, TnFamily::BC, TnElement::NHook)
                .unwrap()
                .into_iter()
                .map(|(s, _)| s)
                .collect();
            let [f1, f2, _, _] = four_sets(n);
            let expect: BTreeSet<Symbol> =
                f1.into_iter().chain(f2).map(|(s, _)| s).collect();
            assert_eq!(got, expect, "n = {n}");
        }
    }

    #[test]
    fn bc_cohook_scan_equals_last_two_families_plus_trivial() {
        // the trivial-character symbol ({n}|{}) carries both removals, so the
        // cohook side picks it up alongside the third and fourth families
        for n in [4u32, 6, 8] {
            let got: BTreeSet<Symbol> = tn_classification(n, TnFamily::BC, TnElement::NCohook)
                .unwrap()
                .into_iter()
                .map(|(s, _)| s)
                .collect();
            let [f1, _, f3, f4] = four_sets(n);
            let mut expect: BTreeSet<Symbol> =
                f3.into_iter().chain(f4).map(|(s, _)| s).collect();
            expect.insert(f1[0].0.clone());
            assert_eq!(got, expect, "n = {n}");
        }
    }

    #[test]
    fn bc_union_is_exactly_the_four_sets() {
        for n in [4u32, 6, 10] {
            let mut got: BTreeSet<Symbol> = BTreeSet::new();
            for element in [TnElement::NHook, TnElement::NCohook] {
                got.extend(
                    tn_classification(n, TnFamily::BC, element)
                        .unwrap()
                        .into_iter()
                        .map(|(s, _)| s),
                );
            }
            let expect: BTreeSet<Symbol> = four_sets(n)
                .into_iter()
                .flatten()
                .map(|(s, _)| s)
                .collect();
            assert_eq!(got, expect, "n = {n}");
        }
    }

    #[test]
    fn bc_at_most_two_per_level_per_element() {
        for n in [4u32, 6, 9] {
            for element in [TnElement::NHook, TnElement::NCohook] {
                let mut counts = std::collections::HashMap::new();
                for (_, lev) in tn_classification(n, TnFamily::BC, element).unwrap() {
                    *counts.entry(lev).or_insert(0u32) += 1;
                }
                assert!(counts.values().all(|&c| c <= 2), "n = {n}, {element:?}");
            }
        }
    }

    #[test]
    fn d_full_cycle_exactly_two_per_level() {
        // the full-cycle element pairs with the hook removal on the plus
        // type and the cohook removal on the minus type; the crossed
        // combinations admit no removal at all (the leftover rank-0 symbol
        // would need an impossible defect)
        for (family, element, crossed) in [
            (TnFamily::DPlus, TnElement::NHook, TnElement::NCohook),
            (TnFamily::DMinus, TnElement::NCohook, TnElement::NHook),
        ] {
            for n in [5u32, 6, 8] {
                let hits = tn_classification(n, family, element).unwrap();
                let mut counts = std::collections::HashMap::new();
                for (s, lev) in &hits {
                    assert!(!s.is_degenerate());
                    assert!((0..n as i64).contains(lev), "level out of range: {s:?}");
                    *counts.entry(*lev).or_insert(0u32) += 1;
                }
                for j in 0..n as i64 {
                    assert_eq!(
                        counts.get(&j).copied().unwrap_or(0),
                        2,
                        "family {family:?}, n = {n}, {element:?}, level {j}"
                    );
                }
                assert!(tn_classification(n, family, crossed).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn d_near_cycle_counts() {
        for family in [TnFamily::DPlus, TnFamily::DMinus] {
            for n in [5u32, 6, 7] {
                for element in [TnElement::Nminus1Hook, TnElement::Nminus1Cohook] {
                    let hits = tn_classification(n, family, element).unwrap();
                    let mut counts = std::collections::HashMap::new();
                    for (_, lev) in &hits {
                        *counts.entry(*lev).or_insert(0u32) += 1;
                    }
                    for (lev, count) in counts {
                        assert!((0..n as i64).contains(&lev));
                        if lev <= 1 {
                            assert_eq!(count, 2, "family {family:?}, n {n}, level {lev}");
                        } else {
                            assert!(count <= 4, "family {family:?}, n {n}, level {lev}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coexisting_removals_only_at_the_bc_boundary() {
        // in the even-defect (type D) series a reduced symbol never carries
        // both a full hook and a full cohook; in the BC series exactly the
        // trivial symbol and the top of the fourth family do
        for n in [5u32, 6, 8] {
            for class in [DefectClass::Mod4(0), DefectClass::Mod4(2)] {
                for s in enumerate_symbols(n, class, None).unwrap() {
                    assert!(
                        hooks(&s, n).is_empty() || cohooks(&s, n).is_empty(),
                        "unexpected coexistence at {s:?}"
                    );
                }
            }
            let both: Vec<Symbol> = enumerate_symbols(n, DefectClass::Mod4(1), None)
                .unwrap()
                .into_iter()
                .filter(|s| !hooks(s, n).is_empty() && !cohooks(s, n).is_empty())
                .collect();
            let trivial = Symbol::from_entries(&[n], &[]).unwrap();
            let [_, _, _, f4] = four_sets(n);
            let top = f4.last().unwrap().0.clone();
            assert_eq!(both.len(), 2, "n = {n}: {both:?}");
            assert!(both.contains(&trivial) && both.contains(&top));
        }
    }

    #[test]
    fn rank_threshold_enforced() {
        assert!(tn_classification(3, TnFamily::BC, TnElement::NHook).is_err());
        assert!(tn_classification(4, TnFamily::DPlus, TnElement::NHook).is_err());
    }
}
