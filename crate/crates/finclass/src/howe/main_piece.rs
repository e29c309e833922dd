//! The low-rank partner construction: for a symbol of large rank relative to
//! its level, the symbol obtained by splitting off the maximal entry is the
//! unique linked partner of complementary defect, and its rank equals the
//! level of the source.

use super::{linked, LinkWitness};
use crate::symbols::{enumerate_symbols, DefectClass, Symbol, SymbolError};

/// Whether the construction consumed the symbol as given or transposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    AsIs,
    Transposed,
}

fn check_hypothesis(s: &Symbol) -> Result<i64, SymbolError> {
    let lev = s.level()?;
    let rank = s.rank();
    if rank <= 4 * lev * lev + 2 * lev {
        return Err(SymbolError::HypothesisViolated(rank, lev));
    }
    Ok(lev)
}

/// Finds the half holding the maximum; the rank hypothesis rules out ties.
fn max_half(s: &Symbol) -> Result<bool, SymbolError> {
    let max = s.max_entry().ok_or(SymbolError::Empty)?;
    let in_a = s.a.max_entry() == Some(max);
    let in_b = s.b.max_entry() == Some(max);
    if in_a && in_b {
        // cannot happen under the rank hypothesis
        return Err(SymbolError::Degenerate);
    }
    Ok(in_a)
}

/// Splits the maximal entry off an even-defect symbol.
///
/// Transposing first when the maximum sits in the wrong half, the result is
/// `(B, bar A)` for defect `0 mod 4` and `(bar B, A)` for defect `2 mod 4`.
/// The output has defect `1 mod 4`, rank equal to `lev(S)`, is linked to the
/// (possibly transposed) source, and is its unique linked partner among
/// symbols of the same rank, defect class, and at least the same level.
pub fn main_piece(s: &Symbol) -> Result<(Orientation, Symbol), SymbolError> {
    if s.defect().rem_euclid(2) != 0 {
        return Err(SymbolError::WrongParity(s.defect()));
    }
    let lev = check_hypothesis(s)?;
    let want_in_a = s.defect().rem_euclid(4) == 0;
    let (orientation, w) = if max_half(s)? == want_in_a {
        (Orientation::AsIs, s.clone())
    } else {
        (Orientation::Transposed, s.transpose())
    };
    let s_prime = if want_in_a {
        Symbol::new(w.b.clone(), w.a.bar()?)
    } else {
        Symbol::new(w.b.bar()?, w.a.clone())
    };
    debug_assert_eq!(s_prime.defect().rem_euclid(4), 1);
    debug_assert_eq!(s_prime.rank(), lev);
    debug_assert!(linked(&w, &s_prime)
        .expect("parities match")
        .is_some());
    Ok((orientation, s_prime))
}

/// The analogous split for a symbol of defect `1 mod 4`; no transposition is
/// needed, the half holding the maximum decides the shape.
pub fn main_piece_odd(s: &Symbol) -> Result<Symbol, SymbolError> {
    if s.defect().rem_euclid(4) != 1 {
        return Err(SymbolError::WrongParity(s.defect()));
    }
    let lev = check_hypothesis(s)?;
    let s_prime = if max_half(s)? {
        Symbol::new(s.b.clone(), s.a.bar()?)
    } else {
        Symbol::new(s.b.bar()?, s.a.clone())
    };
    debug_assert_eq!(s_prime.defect().rem_euclid(2), 0);
    debug_assert_eq!(s_prime.rank(), lev);
    debug_assert!(linked(&s_prime, s).expect("parities match").is_some());
    Ok(s_prime)
}

/// All reduced symbols of the given rank and defect class linked to
/// `s_prime`. The parity of the class decides which argument slot the
/// candidates occupy.
pub fn linked_partners(
    s_prime: &Symbol,
    rank: u32,
    class: DefectClass,
) -> Result<Vec<(Symbol, LinkWitness)>, SymbolError> {
    let prime_even = s_prime.defect().rem_euclid(2) == 0;
    let mut out = Vec::new();
    for t in enumerate_symbols(rank, class, None)? {
        let witness = if prime_even {
            linked(s_prime, &t)?
        } else {
            linked(&t, s_prime)?
        };
        if let Some(w) = witness {
            out.push((t, w));
        }
    }
    Ok(out)
}
