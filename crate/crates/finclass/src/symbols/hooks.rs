//! Hooks and cohooks of a symbol, with removal and the inverse restoration.
//!
//! A `k`-hook is an entry `r >= k` of one half with `r - k` missing from the
//! same half; a `k`-cohook has `r - k` missing from the opposite half. Both
//! removals lower the rank by exactly `k` and, for even-dimensional
//! orthogonal interpretations, flip the type.

use super::{Symbol, SymbolError};

/// Which half of the symbol carries the entry `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Half {
    A,
    B,
}

/// Reference to a (co)hook: the half holding `r`, the entry, and the size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookRef {
    pub half: Half,
    pub r: u32,
    pub k: u32,
}

/// All `k`-hooks of the symbol.
pub fn hooks(s: &Symbol, k: u32) -> Vec<HookRef> {
    assert!(k >= 1);
    let mut out = Vec::new();
    for &r in s.a.entries() {
        if r >= k && !s.a.contains(r - k) {
            out.push(HookRef { half: Half::A, r, k });
        }
    }
    for &r in s.b.entries() {
        if r >= k && !s.b.contains(r - k) {
            out.push(HookRef { half: Half::B, r, k });
        }
    }
    out
}

/// All `k`-cohooks of the symbol.
pub fn cohooks(s: &Symbol, k: u32) -> Vec<HookRef> {
    assert!(k >= 1);
    let mut out = Vec::new();
    for &r in s.a.entries() {
        if r >= k && !s.b.contains(r - k) {
            out.push(HookRef { half: Half::A, r, k });
        }
    }
    for &r in s.b.entries() {
        if r >= k && !s.a.contains(r - k) {
            out.push(HookRef { half: Half::B, r, k });
        }
    }
    out
}

fn check_hook(s: &Symbol, h: HookRef) -> Result<(), SymbolError> {
    let (own, _) = match h.half {
        Half::A => (&s.a, &s.b),
        Half::B => (&s.b, &s.a),
    };
    if h.r < h.k || !own.contains(h.r) || own.contains(h.r - h.k) {
        return Err(SymbolError::BadHook);
    }
    Ok(())
}

fn check_cohook(s: &Symbol, h: HookRef) -> Result<(), SymbolError> {
    let (own, other) = match h.half {
        Half::A => (&s.a, &s.b),
        Half::B => (&s.b, &s.a),
    };
    if h.r < h.k || !own.contains(h.r) || other.contains(h.r - h.k) {
        return Err(SymbolError::BadHook);
    }
    Ok(())
}

/// Removes a hook: `(A,B) -> (B, {r-k} u A \ {r})` for a hook in `A`, and
/// `(A,B) -> ({r-k} u B \ {r}, A)` for a hook in `B`.
pub fn remove_hook(s: &Symbol, h: HookRef) -> Result<Symbol, SymbolError> {
    check_hook(s, h)?;
    let out = match h.half {
        Half::A => Symbol::new(s.b.clone(), s.a.remove(h.r)?.insert(h.r - h.k)?),
        Half::B => Symbol::new(s.b.remove(h.r)?.insert(h.r - h.k)?, s.a.clone()),
    };
    debug_assert_eq!(out.rank(), s.rank() - h.k as i64);
    Ok(out)
}

/// Removes a cohook: `(A,B) -> (B u {r-k}, A \ {r})` for a cohook in `A`, and
/// `(A,B) -> (B \ {r}, A u {r-k})` for a cohook in `B`.
pub fn remove_cohook(s: &Symbol, h: HookRef) -> Result<Symbol, SymbolError> {
    check_cohook(s, h)?;
    let out = match h.half {
        Half::A => Symbol::new(s.b.insert(h.r - h.k)?, s.a.remove(h.r)?),
        Half::B => Symbol::new(s.b.remove(h.r)?, s.a.insert(h.r - h.k)?),
    };
    debug_assert_eq!(out.rank(), s.rank() - h.k as i64);
    Ok(out)
}

/// Inverse of `remove_hook`: rebuilds the original symbol from the removal
/// output and the hook that was removed.
pub fn restore_hook(after: &Symbol, h: HookRef) -> Result<Symbol, SymbolError> {
    let restored = match h.half {
        Half::A => Symbol::new(after.b.remove(h.r - h.k)?.insert(h.r)?, after.a.clone()),
        Half::B => Symbol::new(after.b.clone(), after.a.remove(h.r - h.k)?.insert(h.r)?),
    };
    check_hook(&restored, h)?;
    Ok(restored)
}

/// Inverse of `remove_cohook`.
pub fn restore_cohook(after: &Symbol, h: HookRef) -> Result<Symbol, SymbolError> {
    let restored = match h.half {
        Half::A => Symbol::new(after.b.insert(h.r)?, after.a.remove(h.r - h.k)?),
        Half::B => Symbol::new(after.b.remove(h.r - h.k)?, after.a.insert(h.r)?),
    };
    check_cohook(&restored, h)?;
    Ok(restored)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(a: &[u32], b: &[u32]) -> Symbol {
        Symbol::from_entries(a, b).unwrap()
    }

    #[test]
    fn hooks_of_two_one_zero() {
        let s = sym(&[2, 1], &[0]);
        let h2 = hooks(&s, 2);
        assert_eq!(h2.len(), 1);
        assert_eq!(h2[0], HookRef { half: Half::A, r: 2, k: 2 });
        let removed = remove_hook(&s, h2[0]).unwrap();
        assert_eq!(removed, sym(&[0], &[1, 0]));
        assert_eq!(removed.rank(), 0);
    }

    #[test]
    fn no_two_cohooks_of_two_one_zero() {
        let s = sym(&[2, 1], &[0]);
        assert!(cohooks(&s, 2).is_empty());
    }

    #[test]
    fn one_cohook_of_two_one_zero() {
        let s = sym(&[2, 1], &[0]);
        let c1 = cohooks(&s, 1);
        assert_eq!(c1.len(), 1);
        assert_eq!(c1[0], HookRef { half: Half::A, r: 2, k: 1 });
        let removed = remove_cohook(&s, c1[0]).unwrap();
        assert_eq!(removed, sym(&[1, 0], &[1]));
        assert_eq!(removed.rank(), 1);
    }

    #[test]
    fn bad_hook_rejected() {
        let s = sym(&[2, 1], &[0]);
        assert!(remove_hook(&s, HookRef { half: Half::A, r: 1, k: 2 }).is_err());
        assert!(remove_hook(&s, HookRef { half: Half::B, r: 0, k: 1 }).is_err());
    }

    #[test]
    fn removal_restores_round_trip() {
        let cases = [
            sym(&[2, 1], &[0]),
            sym(&[5, 2], &[3, 1]),
            sym(&[6, 1], &[4, 2, 0]),
            sym(&[3], &[0]),
        ];
        for s in cases {
            for k in 1..=6u32 {
                for h in hooks(&s, k) {
                    let after = remove_hook(&s, h).unwrap();
                    assert_eq!(after.rank(), s.rank() - k as i64);
                    assert_eq!(restore_hook(&after, h).unwrap(), s);
                }
                for h in cohooks(&s, k) {
                    let after = remove_cohook(&s, h).unwrap();
                    assert_eq!(after.rank(), s.rank() - k as i64);
                    assert_eq!(restore_cohook(&after, h).unwrap(), s);
                }
            }
        }
    }
}
