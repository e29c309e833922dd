//! The interleaving order on partitions, the linking relation between
//! even- and odd-defect symbols, and the symbol-level transfer maps of the
//! orthogonal-symplectic duality.

mod main_piece;
mod map;

pub use main_piece::{linked_partners, main_piece, main_piece_odd, Orientation};
pub use map::{
    howe_map, reconstruct_dominant, so_bijection_check, DualPairSide, HoweAssignment,
    MatchingRule, SoBijectionReport, TargetKind, TwistFlags,
};

use crate::symbols::{Symbol, SymbolError};
use crate::symfun::Partition;
use serde::{Deserialize, Serialize};

/// The interleaving partial order:
/// `lambda <= mu` iff `mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...`.
pub fn preceq(lambda: &Partition, mu: &Partition) -> bool {
    let len = lambda.len().max(mu.len());
    for i in 0..len {
        if mu.part(i) < lambda.part(i) {
            return false;
        }
        if lambda.part(i) < mu.part(i + 1) {
            return false;
        }
    }
    true
}

/// Which of the two linking conditions a pair satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkKind {
    Split,
    NonSplit,
}

/// A verified linking between an even-defect and an odd-defect symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkWitness {
    pub kind: LinkKind,
}

/// Tests the linking relation.
///
/// `even` must have even defect and `odd` odd defect. Split means
/// `pi(B) <= pi(C), pi(D) <= pi(A), |A| - |B| = 1 + |D| - |C|`; non-split
/// means `pi(A) <= pi(D), pi(C) <= pi(B), |A| - |B| = -1 + |D| - |C|`.
pub fn linked(even: &Symbol, odd: &Symbol) -> Result<Option<LinkWitness>, SymbolError> {
    let (split, nonsplit) = linked_ways(even, odd)?;
    Ok(if split {
        Some(LinkWitness {
            kind: LinkKind::Split,
        })
    } else if nonsplit {
        Some(LinkWitness {
            kind: LinkKind::NonSplit,
        })
    } else {
        None
    })
}

/// Both linking conditions separately (they are mutually exclusive in the
/// transfer regime, which the test suites assert).
pub fn linked_ways(even: &Symbol, odd: &Symbol) -> Result<(bool, bool), SymbolError> {
    if even.defect().rem_euclid(2) != 0 {
        return Err(SymbolError::WrongParity(even.defect()));
    }
    if odd.defect().rem_euclid(2) != 1 {
        return Err(SymbolError::WrongParity(odd.defect()));
    }
    let (a, b) = (&even.a, &even.b);
    let (c, d) = (&odd.a, &odd.b);
    let (pa, pb) = (a.pi(), b.pi());
    let (pc, pd) = (c.pi(), d.pi());
    let defect_split = even.defect() == 1 + d.len() as i64 - c.len() as i64;
    let defect_nonsplit = even.defect() == -1 + d.len() as i64 - c.len() as i64;
    let split = defect_split && preceq(&pb, &pc) && preceq(&pd, &pa);
    let nonsplit = defect_nonsplit && preceq(&pa, &pd) && preceq(&pc, &pb);
    Ok((split, nonsplit))
}
