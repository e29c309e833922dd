//! Symbol-level transfer across the orthogonal-symplectic dual pairs: pick
//! the dominant eigenvalue, normalize by the two order-two linear twists,
//! split off the low-rank piece, and assemble the partner label.

use super::main_piece::{main_piece, main_piece_odd, Orientation};
use super::linked;
use crate::symbols::{
    dominant_kappa, enumerate_symbols, level_general, DefectClass, DualFamily, SeriesDescriptor,
    Symbol, SymbolError,
};
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

type Rat = Ratio<i64>;

/// Which dual pair the source group sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DualPairSide {
    /// Even orthogonal source paired with a symplectic partner.
    OrthogonalEven,
    /// Odd special orthogonal source paired with a symplectic partner.
    OrthogonalOdd,
    /// Symplectic source paired with an orthogonal partner.
    Symplectic,
}

impl DualPairSide {
    pub fn expected_family(self) -> DualFamily {
        match self {
            DualPairSide::OrthogonalEven => DualFamily::D,
            DualPairSide::OrthogonalOdd => DualFamily::B,
            DualPairSide::Symplectic => DualFamily::C,
        }
    }

    pub fn parse(s: &str) -> Option<DualPairSide> {
        Some(match s.to_ascii_lowercase().as_str() {
            "o-even" | "oeven" => DualPairSide::OrthogonalEven,
            "so-odd" | "soodd" => DualPairSide::OrthogonalOdd,
            "sp" | "symplectic" => DualPairSide::Symplectic,
            _ => return None,
        })
    }
}

/// Kind of the partner group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TargetKind {
    Symplectic,
    OrthogonalEvenFull,
    OrthogonalOddSpecial,
}

/// Which matching rule governed the assignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatchingRule {
    HoweEven,
    HoweOdd,
}

/// The two order-two linear twists applied while normalizing the source:
/// `swap` interchanges the roles of the two eigenvalue components, and
/// `transpose` transposes both symbols.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistFlags {
    pub swap: bool,
    pub transpose: bool,
}

/// The assembled partner label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoweAssignment {
    pub side: DualPairSide,
    pub twist: TwistFlags,
    pub rule: MatchingRule,
    pub target_kind: TargetKind,
    /// Dimension of the partner's natural module (`2 n'`; odd integer values
    /// are stored doubled like everything else, so this is always exact).
    pub target_dim: u32,
    /// Symbol of the partner's `+1` component.
    pub target_plus: Symbol,
    /// Symbol of the partner's `-1` component.
    pub target_minus: Symbol,
    /// The linear-part data carried through unchanged (matched by equality).
    pub dim_v0: u32,
    pub gl_ranks: Vec<u32>,
    /// Whether the matching rule negates the linear-part eigenvalues.
    pub negate_s0: bool,
    /// Rank of the source group, kept for the reconstruction scan.
    pub source_rank: u32,
    /// Level of the source character (doubled to stay integral).
    pub level_doubled: i64,
}

fn require_integral(lev: Rat) -> Result<i64, SymbolError> {
    if !lev.is_integer() {
        return Err(SymbolError::BadDescriptor(format!(
            "level {lev} is not integral on this side"
        )));
    }
    Ok(lev.to_integer())
}

fn hypothesis(n: i64, lev2: i64) -> Result<(), SymbolError> {
    // n > 4 n'^2 + 3 n' with n' = lev2 / 2, kept in integers:
    // 4 n > 4 lev2^2 + 6 lev2
    if 4 * n <= 4 * lev2 * lev2 + 6 * lev2 {
        return Err(SymbolError::HypothesisViolated(n, lev2 / 2));
    }
    Ok(())
}

/// The symbol-level transfer map.
///
/// Normalizes the label by the two linear twists so the dominant eigenvalue
/// is the first one and the maximal entry sits in the half matching the
/// type, splits off the low-rank piece, and assembles the partner data per
/// the matching rule of the pair.
pub fn howe_map(
    desc: &SeriesDescriptor,
    side: DualPairSide,
) -> Result<HoweAssignment, SymbolError> {
    if desc.family != side.expected_family() {
        return Err(SymbolError::BadDescriptor(format!(
            "descriptor family {:?} does not fit side {side:?}",
            desc.family
        )));
    }
    desc.validate()?;
    for comp in [&desc.plus, &desc.minus] {
        if comp.dim > 0 && comp.symbol.is_degenerate() {
            return Err(SymbolError::Degenerate);
        }
    }
    let lev = level_general(desc)?;
    if lev <= Rat::zero() {
        return Err(SymbolError::BadDescriptor(
            "transfer needs level at least one half".into(),
        ));
    }
    let lev2 = (lev * Rat::from_integer(2)).to_integer();
    let n = desc.group_rank() as i64;
    hypothesis(n, lev2)?;
    let kappa = dominant_kappa(desc)?;

    match side {
        DualPairSide::OrthogonalEven => {
            let n_prime = require_integral(lev)?;
            // spinor twist: bring the dominant eigenvalue to the plus slot
            let swap = kappa == -1;
            let (dom, other) = if swap {
                (&desc.minus, &desc.plus)
            } else {
                (&desc.plus, &desc.minus)
            };
            let s = &dom.symbol;
            // sign twist: transpose both symbols when the maximum sits in
            // the half off-type
            let (orientation, s_prime) = main_piece(s)?;
            let transpose = orientation == Orientation::Transposed;
            let other_sym = if transpose {
                other.symbol.transpose()
            } else {
                other.symbol.clone()
            };
            debug_assert_eq!(s_prime.rank() + (other.dim as i64 + desc.dim_v0 as i64) / 2, n_prime);
            Ok(HoweAssignment {
                side,
                twist: TwistFlags { swap, transpose },
                rule: MatchingRule::HoweEven,
                target_kind: TargetKind::Symplectic,
                target_dim: 2 * n_prime as u32,
                target_plus: s_prime,
                target_minus: other_sym,
                dim_v0: desc.dim_v0,
                gl_ranks: desc.gl_ranks.clone(),
                negate_s0: false,
                source_rank: n as u32,
                level_doubled: lev2,
            })
        }
        DualPairSide::OrthogonalOdd => {
            let n_prime = require_integral(lev)?;
            let swap = kappa == -1;
            let (dom, other) = if swap {
                (&desc.minus, &desc.plus)
            } else {
                (&desc.plus, &desc.minus)
            };
            let s = &dom.symbol;
            if s.defect().rem_euclid(4) != 1 {
                return Err(SymbolError::BadDescriptor(
                    "dominant component must carry defect 1 mod 4 on this side".into(),
                ));
            }
            let s_prime = main_piece_odd(s)?;
            Ok(HoweAssignment {
                side,
                twist: TwistFlags {
                    swap,
                    transpose: false,
                },
                rule: MatchingRule::HoweOdd,
                target_kind: TargetKind::Symplectic,
                target_dim: 2 * n_prime as u32,
                // the partner's plus component takes over the other symbol
                target_plus: other.symbol.clone(),
                target_minus: s_prime,
                dim_v0: desc.dim_v0,
                gl_ranks: desc.gl_ranks.clone(),
                negate_s0: true,
                source_rank: n as u32,
                level_doubled: lev2,
            })
        }
        DualPairSide::Symplectic => {
            if kappa == 1 {
                // integral level: the partner is a full even orthogonal group
                let n_prime = require_integral(lev)?;
                let s = &desc.plus.symbol;
                let s_prime = main_piece_odd(s)?;
                Ok(HoweAssignment {
                    side,
                    twist: TwistFlags::default(),
                    rule: MatchingRule::HoweEven,
                    target_kind: TargetKind::OrthogonalEvenFull,
                    target_dim: 2 * n_prime as u32,
                    target_plus: s_prime,
                    target_minus: desc.minus.symbol.clone(),
                    dim_v0: desc.dim_v0,
                    gl_ranks: desc.gl_ranks.clone(),
                    negate_s0: false,
                    source_rank: n as u32,
                    level_doubled: lev2,
                })
            } else {
                // half-integral level: odd special orthogonal partner
                if lev.is_integer() {
                    return Err(SymbolError::BadDescriptor(
                        "dominant minus eigenvalue forces a half-integral level".into(),
                    ));
                }
                let s = &desc.minus.symbol;
                // the transpose here is the component-label normalization of
                // the even orthogonal factor, not a character twist
                let (orientation, s_prime) = main_piece(s)?;
                Ok(HoweAssignment {
                    side,
                    twist: TwistFlags {
                        swap: false,
                        transpose: orientation == Orientation::Transposed,
                    },
                    rule: MatchingRule::HoweOdd,
                    target_kind: TargetKind::OrthogonalOddSpecial,
                    target_dim: lev2 as u32,
                    target_plus: s_prime,
                    target_minus: desc.plus.symbol.clone(),
                    dim_v0: desc.dim_v0,
                    gl_ranks: desc.gl_ranks.clone(),
                    negate_s0: true,
                    source_rank: n as u32,
                    level_doubled: lev2,
                })
            }
        }
    }
}

/// Recovers the dominant source symbol from an assignment: the unique symbol
/// of the source rank, in the recorded defect class, linked to the split-off
/// piece with at least the recorded level.
pub fn reconstruct_dominant(
    assignment: &HoweAssignment,
    source_defect_class: DefectClass,
    dominant_rank: u32,
    min_level: i64,
) -> Result<Symbol, SymbolError> {
    let s_prime = match assignment.rule {
        MatchingRule::HoweEven if assignment.side == DualPairSide::Symplectic => {
            &assignment.target_plus
        }
        MatchingRule::HoweEven => &assignment.target_plus,
        MatchingRule::HoweOdd if assignment.side == DualPairSide::Symplectic => {
            &assignment.target_plus
        }
        MatchingRule::HoweOdd => &assignment.target_minus,
    };
    let prime_even = s_prime.defect().rem_euclid(2) == 0;
    // the unique qualifying partner has level exactly min_level, so a
    // level-capped enumeration is exhaustive for this search
    let candidates = enumerate_symbols(
        dominant_rank,
        source_defect_class,
        Some(min_level.max(0) as u32),
    )?;
    let mut hits = Vec::new();
    for t in candidates {
        let ok = if prime_even {
            linked(s_prime, &t)?
        } else {
            linked(&t, s_prime)?
        };
        if ok.is_some() && t.level()? >= min_level {
            hits.push(t);
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        k => Err(SymbolError::BadDescriptor(format!(
            "expected a unique partner, found {k}"
        ))),
    }
}

/// Report of the surjectivity-and-fibers scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SoBijectionReport {
    pub side: DualPairSide,
    pub n: u32,
    pub n_prime: u32,
    /// Targets enumerated: `(j, target symbol, sign)` triples.
    pub targets: usize,
    /// The twist orbit size: 4 on the even orthogonal side, 2 on the odd.
    pub fiber: u32,
}

/// Verifies surjectivity of the transfer at symbol level.
///
/// For every `0 <= j <= n'`, every reduced target symbol of rank `n' - j` in
/// the partner's defect class, and each sign, the inverse construction
/// produces a source symbol of rank `n`, level `n' - j`, and the right
/// defect class, which maps back to the target; the twist orbit of the
/// source has the stated size.
pub fn so_bijection_check(
    n: u32,
    n_prime: u32,
    side: DualPairSide,
) -> Result<SoBijectionReport, SymbolError> {
    if side == DualPairSide::Symplectic {
        return Err(SymbolError::BadDescriptor(
            "surjectivity scan applies to the orthogonal sides".into(),
        ));
    }
    let n_i = n as i64;
    hypothesis(n_i, 2 * n_prime as i64)?;
    let even_side = side == DualPairSide::OrthogonalEven;
    let mut targets = 0usize;
    for j in 0..=n_prime {
        let target_rank = n_prime - j;
        let classes: &[DefectClass] = if even_side {
            &[DefectClass::Mod4(1)]
        } else {
            &[DefectClass::Mod4(0), DefectClass::Mod4(2)]
        };
        for &class in classes {
            for s_prime in enumerate_symbols(target_rank, class, None)? {
                // on the even side the sign freely picks the half receiving
                // the large entry; on the odd side the target's defect class
                // forces it
                let signs: &[bool] = if even_side {
                    &[true, false]
                } else if matches!(class, DefectClass::Mod4(0)) {
                    &[true]
                } else {
                    &[false]
                };
                for &positive_sign in signs {
                    // the sign picks which half receives the large entry
                    let m_s = (s_prime.a.len() + s_prime.b.len()) as i64;
                    let c_m = n_i - target_rank as i64 + m_s.div_euclid(2);
                    if c_m < 0 {
                        continue;
                    }
                    let c_m = c_m as u32;
                    let source = if positive_sign {
                        Symbol::new(s_prime.b.insert(c_m)?, s_prime.a.clone())
                    } else {
                        Symbol::new(s_prime.b.clone(), s_prime.a.insert(c_m)?)
                    };
                    // rank, level, and defect identities from the construction
                    if source.rank() != n_i {
                        return Err(SymbolError::RankMismatch(source.rank(), n_i));
                    }
                    let lev = source.level()?;
                    if lev != (n_prime - j) as i64 {
                        return Err(SymbolError::BadDescriptor(format!(
                            "constructed level {lev} != {}",
                            n_prime - j
                        )));
                    }
                    let def = source.defect().rem_euclid(4);
                    let def_ok = if even_side {
                        (positive_sign && def == 0) || (!positive_sign && def == 2)
                    } else {
                        def == 1
                    };
                    if !def_ok {
                        return Err(SymbolError::BadDescriptor(format!(
                            "constructed defect class {def} is wrong"
                        )));
                    }
                    // the split recovers the target exactly
                    let recovered = if even_side {
                        main_piece(&source)?.1
                    } else {
                        main_piece_odd(&source)?
                    };
                    if recovered != s_prime {
                        return Err(SymbolError::BadDescriptor(format!(
                            "split of {source:?} gave {recovered:?}, expected {s_prime:?}"
                        )));
                    }
                    // twist orbit: distinct source configurations mapping back
                    let fiber_members: Vec<(Symbol, bool)> = if even_side {
                        vec![
                            (source.clone(), false),
                            (source.clone(), true),
                            (source.transpose(), false),
                            (source.transpose(), true),
                        ]
                    } else {
                        vec![(source.clone(), false), (source.clone(), true)]
                    };
                    let mut seen = std::collections::HashSet::new();
                    for (sym, swapped) in &fiber_members {
                        if !seen.insert((sym.clone(), *swapped)) {
                            return Err(SymbolError::BadDescriptor(
                                "twist orbit collapsed".into(),
                            ));
                        }
                        let split = if even_side {
                            main_piece(sym)?.1
                        } else {
                            main_piece_odd(sym)?
                        };
                        if split != s_prime {
                            return Err(SymbolError::BadDescriptor(
                                "twisted member does not map back".into(),
                            ));
                        }
                    }
                    targets += 1;
                }
            }
        }
    }
    Ok(SoBijectionReport {
        side,
        n,
        n_prime,
        targets,
        fiber: if even_side { 4 } else { 2 },
    })
}
