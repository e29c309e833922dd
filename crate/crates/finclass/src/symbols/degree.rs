//! The dominant q-power of a unipotent character degree, its merged-sequence
//! form, and the nearest-integer recovery of the level.

use super::{Symbol, SymbolError};
use num_rational::Ratio;

type Rat = Ratio<i64>;

/// Dominant exponent of `q` in the character degree:
///
/// `n^2 + (1 - eps_m) n - sum_A a(a+1) - sum_B b(b+1) - sum_i C(m-1-2i, 2)
///  + sum_{a1 > a2 in A} a1 + sum_{b1 > b2 in B} b1 + sum_{A x B} max(a,b)`
///
/// with the binomial sum taken literally. The true degree differs by a factor
/// of `2^{O(m)}`, which never moves the nearest integer in the tested regime;
/// see `slack_window`.
pub fn log_degree_estimate(s: &Symbol, n: i64) -> Result<Rat, SymbolError> {
    if !s.is_reduced() {
        return Err(SymbolError::NotReduced);
    }
    if s.rank() != n {
        return Err(SymbolError::RankMismatch(s.rank(), n));
    }
    let eps = s.epsilon_m();
    let m = s.m_param();
    let mut total = n * n + (1 - eps) * n;
    for &a in s.a.entries() {
        total -= a as i64 * (a as i64 + 1);
    }
    for &b in s.b.entries() {
        total -= b as i64 * (b as i64 + 1);
    }
    total -= binom_tail_sum(m);
    total += dominance_weight(s);
    Ok(Rat::from_integer(total))
}

/// `sum_{i >= 0} C(m - 1 - 2i, 2)`, equal to `(2m^3 - 3m^2 - 2m + 3 eps_m)/24`.
fn binom_tail_sum(m: i64) -> i64 {
    let mut total = 0;
    let mut x = m - 1;
    while x >= 2 {
        total += x * (x - 1) / 2;
        x -= 2;
    }
    total
}

/// `sum_{a1 > a2 in A} a1 + sum_{b1 > b2 in B} b1 + sum_{a in A, b in B} max(a, b)`,
/// which equals `c_1 + 2 c_2 + ... + m c_m` for the merged sequence.
fn dominance_weight(s: &Symbol) -> i64 {
    let mut total = 0i64;
    let halves = [s.a.entries(), s.b.entries()];
    for h in halves {
        for (i, &x) in h.iter().enumerate() {
            // entries descend, so x dominates the len - 1 - i entries after it
            total += x as i64 * (h.len() - 1 - i) as i64;
        }
    }
    for &a in s.a.entries() {
        for &b in s.b.entries() {
            total += a.max(b) as i64;
        }
    }
    total
}

/// The same exponent through the merged sequence:
/// `n^2 + (1 - eps_m) n - sum_i (c_i^2 + c_i - i c_i) - (2m^3 - 3m^2 - 2m)/24`.
///
/// Exceeds `log_degree_estimate` by exactly `eps_m / 8`, the residue of the
/// binomial-sum identity.
pub fn log_degree_c_form(s: &Symbol, n: i64) -> Result<Rat, SymbolError> {
    if !s.is_reduced() {
        return Err(SymbolError::NotReduced);
    }
    if s.rank() != n {
        return Err(SymbolError::RankMismatch(s.rank(), n));
    }
    let eps = s.epsilon_m();
    let m = s.m_param();
    let mut total = Rat::from_integer(n * n + (1 - eps) * n);
    for (i, &c) in s.c_sequence().iter().enumerate() {
        let (c, i) = (c as i64, i as i64);
        total -= Rat::from_integer(c * c + c - i * c);
    }
    total -= Rat::new(2 * m * m * m - 3 * m * m - 2 * m, 24);
    Ok(total)
}

/// True when `dominance_weight = sum_i i * c_i` for this symbol.
pub fn merged_weight_identity_holds(s: &Symbol) -> bool {
    let rhs: i64 = s
        .c_sequence()
        .iter()
        .enumerate()
        .map(|(i, &c)| i as i64 * c as i64)
        .sum();
    dominance_weight(s) == rhs
}

/// Nearest integer, ties rounded away from zero.
///
/// The level theorems never produce exact half ties in their regime; the
/// acceptance suite asserts their absence.
pub fn nint(r: Rat) -> i64 {
    let (p, q) = (*r.numer(), *r.denom()); // q > 0 after normalization
    if p >= 0 {
        (2 * p + q).div_euclid(2 * q)
    } else {
        -(2 * (-p) + q).div_euclid(2 * q)
    }
}

/// Acceptance window on the exponent, standing in for the bounded
/// `2^{O(m)}` degree factor: `2m` translates a `2^{2m}` factor at the worst
/// base `q = 2`. (A `3m` window already misreports a flip at rank 30 for the
/// widest level-3 symbols, where the exact recovery shows none occurs.)
pub fn slack_window(s: &Symbol) -> i64 {
    2 * s.m_param().max(0)
}

/// `nint(log_degree_estimate / 2n)`, the degree-based level recovery.
pub fn level_from_degree(s: &Symbol, n: i64) -> Result<i64, SymbolError> {
    let exponent = log_degree_estimate(s, n)?;
    Ok(nint(exponent / Rat::from_integer(2 * n)))
}

/// Shared left side of the two proof inequalities:
/// `n^2 - sum_i (c_i^2 + c_i - i c_i) - (2m^3 - 3m^2 - 2m)/24`.
fn ineq_lhs(s: &Symbol) -> Rat {
    let n = s.rank();
    let m = s.m_param();
    let mut total = Rat::from_integer(n * n);
    for (i, &c) in s.c_sequence().iter().enumerate() {
        let (c, i) = (c as i64, i as i64);
        total -= Rat::from_integer(c * c + c - i * c);
    }
    total -= Rat::new(2 * m * m * m - 3 * m * m - 2 * m, 24);
    total
}

/// `lhs >= -sum c_i + 2 d_m (d_0 + ... + d_{m-1}) + (4m^2 - m)/8`.
///
/// This is the supported line of the derivation; the shorthand with `-n` in
/// place of `-sum c_i` overstates it by `(m^2 - eps_m)/4` and already fails
/// at rank one.
pub fn ineq_m_cubed_holds(s: &Symbol) -> bool {
    let n = s.rank();
    let (m, eps) = (s.m_param(), s.epsilon_m());
    if m < 0 {
        return true;
    }
    let d2 = s.d_sequence_doubled();
    let d_m = *d2.last().expect("nonempty");
    let prefix: i64 = d2[..d2.len() - 1].iter().sum();
    // -sum c_i = -n - (m^2 - eps)/4; 2 d_m sum d_i = (2d_m)(2 sum)/2
    let rhs = Rat::from_integer(-n) - Rat::new(m * m - eps, 4)
        + Rat::new(d_m * prefix, 2)
        + Rat::new(4 * m * m - m, 8);
    ineq_lhs(s) >= rhs
}

/// `lhs >= -sum c_i + Sigma + (7m^2 + 2m)/16` with
/// `Sigma = (sum d_i)^2 - sum d_i^2`, the supported form of the second
/// proof inequality (same `-n` shorthand caveat as above).
pub fn ineq_m20_holds(s: &Symbol) -> bool {
    let n = s.rank();
    let (m, eps) = (s.m_param(), s.epsilon_m());
    if m < 0 {
        return true;
    }
    let d2 = s.d_sequence_doubled();
    let sum: i64 = d2.iter().sum();
    let sum_sq: i64 = d2.iter().map(|&x| x * x).sum();
    let sigma = Rat::new(sum * sum - sum_sq, 4);
    let rhs = Rat::from_integer(-n) - Rat::new(m * m - eps, 4)
        + sigma
        + Rat::new(7 * m * m + 2 * m, 16);
    ineq_lhs(s) >= rhs
}
