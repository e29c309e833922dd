//! Exact orders of the finite classical groups by the standard product
//! formulas, in arbitrary precision.

use super::AlgebraError;
use num_bigint::BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Gl,
    Sl,
    Gu,
    Su,
    /// Symplectic; the dimension parameter is the (even) matrix dimension.
    Sp,
    SoPlus,
    SoMinus,
    /// Odd-dimensional special orthogonal.
    SoOdd,
    OmegaPlus,
    OmegaMinus,
    OmegaOdd,
}

impl GroupFamily {
    pub fn parse(s: &str) -> Option<GroupFamily> {
        Some(match s.to_ascii_lowercase().as_str() {
            "gl" => GroupFamily::Gl,
            "sl" => GroupFamily::Sl,
            "gu" => GroupFamily::Gu,
            "su" => GroupFamily::Su,
            "sp" => GroupFamily::Sp,
            "so+" | "soplus" => GroupFamily::SoPlus,
            "so-" | "sominus" => GroupFamily::SoMinus,
            "so" | "soodd" => GroupFamily::SoOdd,
            "omega+" | "omegaplus" => GroupFamily::OmegaPlus,
            "omega-" | "omegaminus" => GroupFamily::OmegaMinus,
            "omega" | "omegaodd" => GroupFamily::OmegaOdd,
            _ => return None,
        })
    }
}

fn qpow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// Order of the group, `n` being the matrix dimension.
pub fn group_order(family: GroupFamily, n: u32, q: u64) -> Result<BigUint, AlgebraError> {
    if n == 0 || q < 2 {
        return Err(AlgebraError::InvalidFamily(format!(
            "need n >= 1 and q >= 2, got n={n}, q={q}"
        )));
    }
    let n = n as u64;
    let order = match family {
        GroupFamily::Gl => {
            // q^{n(n-1)/2} prod_{i=1..n} (q^i - 1)
            let mut o = qpow(q, n * (n - 1) / 2);
            for i in 1..=n {
                o *= qpow(q, i) - 1u32;
            }
            o
        }
        GroupFamily::Sl => group_order(GroupFamily::Gl, n as u32, q)? / (q - 1),
        GroupFamily::Gu => {
            // q^{n(n-1)/2} prod_{i=1..n} (q^i - (-1)^i)
            let mut o = qpow(q, n * (n - 1) / 2);
            for i in 1..=n {
                if i % 2 == 0 {
                    o *= qpow(q, i) - 1u32;
                } else {
                    o *= qpow(q, i) + 1u32;
                }
            }
            o
        }
        GroupFamily::Su => group_order(GroupFamily::Gu, n as u32, q)? / (q + 1),
        GroupFamily::Sp => {
            if n % 2 != 0 {
                return Err(AlgebraError::InvalidFamily(format!(
                    "Sp needs even dimension, got {n}"
                )));
            }
            let m = n / 2;
            let mut o = qpow(q, m * m);
            for i in 1..=m {
                o *= qpow(q, 2 * i) - 1u32;
            }
            o
        }
        GroupFamily::SoOdd => {
            if n % 2 == 0 {
                return Err(AlgebraError::InvalidFamily(format!(
                    "odd orthogonal needs odd dimension, got {n}"
                )));
            }
            let m = (n - 1) / 2;
            let mut o = qpow(q, m * m);
            for i in 1..=m {
                o *= qpow(q, 2 * i) - 1u32;
            }
            o
        }
        GroupFamily::SoPlus | GroupFamily::SoMinus => {
            if n % 2 != 0 || n < 2 {
                return Err(AlgebraError::InvalidFamily(format!(
                    "even orthogonal needs even dimension >= 2, got {n}"
                )));
            }
            let m = n / 2;
            let mut o = qpow(q, m * (m - 1));
            o *= if family == GroupFamily::SoPlus {
                qpow(q, m) - 1u32
            } else {
                qpow(q, m) + 1u32
            };
            for i in 1..m {
                o *= qpow(q, 2 * i) - 1u32;
            }
            o
        }
        GroupFamily::OmegaPlus => {
            group_order(GroupFamily::SoPlus, n as u32, q)? / gcd2(q)
        }
        GroupFamily::OmegaMinus => {
            group_order(GroupFamily::SoMinus, n as u32, q)? / gcd2(q)
        }
        GroupFamily::OmegaOdd => group_order(GroupFamily::SoOdd, n as u32, q)? / gcd2(q),
    };
    Ok(order)
}

fn gcd2(q: u64) -> u64 {
    if q % 2 == 0 {
        1
    } else {
        2
    }
}

/// Splits the order as `q^a * u` with `u` coprime to `q`; returns `(a, u)`.
///
/// This is the prime-to-p part used by the degree estimates.
pub fn group_order_p_prime(
    family: GroupFamily,
    n: u32,
    q: u64,
) -> Result<(u64, BigUint), AlgebraError> {
    let mut order = group_order(family, n, q)?;
    let q = BigUint::from(q);
    let mut a = 0u64;
    loop {
        let (quot, rem) = num_integer::Integer::div_rem(&order, &q);
        if !num_traits::Zero::is_zero(&rem) {
            break;
        }
        order = quot;
        a += 1;
    }
    Ok((a, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_of_2() {
        assert_eq!(group_order(GroupFamily::Gl, 2, 2).unwrap(), 6u32.into());
    }

    #[test]
    fn gu2_of_2() {
        assert_eq!(group_order(GroupFamily::Gu, 2, 2).unwrap(), 18u32.into());
    }

    #[test]
    fn small_known_orders() {
        assert_eq!(group_order(GroupFamily::Sl, 2, 3).unwrap(), 24u32.into());
        assert_eq!(group_order(GroupFamily::Sl, 2, 7).unwrap(), 336u32.into());
        assert_eq!(group_order(GroupFamily::Su, 4, 2).unwrap(), 25920u32.into());
        assert_eq!(group_order(GroupFamily::Sp, 4, 3).unwrap(), 51840u32.into());
        assert_eq!(group_order(GroupFamily::Gu, 1, 2).unwrap(), 3u32.into());
        // |SO_3(3)| = 24, |SO^+_4(2)| = 36, |SO^-_4(2)| = 60
        assert_eq!(group_order(GroupFamily::SoOdd, 3, 3).unwrap(), 24u32.into());
        assert_eq!(group_order(GroupFamily::SoPlus, 4, 2).unwrap(), 36u32.into());
        assert_eq!(group_order(GroupFamily::SoMinus, 4, 2).unwrap(), 60u32.into());
    }

    #[test]
    fn invalid_pairings_rejected() {
        assert!(group_order(GroupFamily::Sp, 3, 2).is_err());
        assert!(group_order(GroupFamily::SoOdd, 4, 2).is_err());
        assert!(group_order(GroupFamily::SoPlus, 3, 3).is_err());
    }

    #[test]
    fn gu_order_strictly_between_qn2_and_qn2_plus_06() {
        // q^{N^2} < |GU_N(q)| < q^{N^2 + 0.6}; the right side is checked as
        // |GU|^5 < q^{5 N^2 + 3} to stay in integers
        for q in [2u64, 3, 4, 5, 7, 9] {
            for n in 1u32..=20 {
                let order = group_order(GroupFamily::Gu, n, q).unwrap();
                let n2 = (n as u64) * (n as u64);
                assert!(qpow(q, n2) < order, "lower bound fails at N={n}, q={q}");
                assert!(
                    order.pow(5) < qpow(q, 5 * n2 + 3),
                    "upper bound fails at N={n}, q={q}"
                );
            }
        }
    }

    #[test]
    fn p_prime_part() {
        // |GL_2(2)| = 6 = 2 * 3
        let (a, u) = group_order_p_prime(GroupFamily::Gl, 2, 2).unwrap();
        assert_eq!(a, 1);
        assert_eq!(u, 3u32.into());
        // |Sp_4(3)| = 3^4 * 640
        let (a, u) = group_order_p_prime(GroupFamily::Sp, 4, 3).unwrap();
        assert_eq!(a, 4);
        assert_eq!(u, 640u32.into());
    }
}
