//! Murnaghan-Nakayama evaluation and the classification of two- and
//! three-cycle elements whose character values stay in {-1, 0, 1}.

use super::{border_strips, classes_of, partitions_of, CycleType, Partition, SymfunError};
use std::collections::HashMap;

/// Exact value of the irreducible character at a cycle type.
///
/// Standard recursion: strip the largest remaining orbit length, recurse on
/// the remainder, memoizing on `(shape, remaining lengths)`. The ordering
/// affects the number of recursion nodes but never the value.
pub fn mn_value(lambda: &Partition, rho: &CycleType) -> Result<i64, SymfunError> {
    if lambda.size() != rho.degree() {
        return Err(SymfunError::SizeMismatch(lambda.size(), rho.degree()));
    }
    let mut memo = HashMap::new();
    // descending order: largest strips are scarcest
    let mut lengths: Vec<u32> = rho.lengths().to_vec();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Ok(eval(lambda, &lengths, &mut memo))
}

fn eval(
    lambda: &Partition,
    remaining: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    let Some((&k, rest)) = remaining.split_first() else {
        return 1;
    };
    let key = (lambda.parts().to_vec(), remaining.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for strip in border_strips(lambda, k) {
        let sign = if strip.height % 2 == 0 { 1 } else { -1 };
        total += sign * eval(&strip.remainder, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Number of border-strip tableaux of the given ordered type, capped at `cap`.
fn count_tableaux_capped(lambda: &Partition, ordered: &[u32], cap: u64) -> u64 {
    let Some((&last, rest)) = ordered.split_last() else {
        return 1;
    };
    let mut total = 0u64;
    for strip in border_strips(lambda, last) {
        total += count_tableaux_capped(&strip.remainder, rest, cap);
        if total >= cap {
            return cap;
        }
    }
    total
}

/// True when the number of border-strip tableaux of the given ordered type is
/// at most one.
pub fn is_minimal(lambda: &Partition, ordered: &[u32]) -> Result<bool, SymfunError> {
    let total: u32 = ordered.iter().sum();
    if lambda.size() != total {
        return Err(SymfunError::SizeMismatch(lambda.size(), total));
    }
    Ok(count_tableaux_capped(lambda, ordered, 2) <= 1)
}

/// The superincreasing condition on ascending orbit lengths:
/// `alpha_{i+1} >= 2(alpha_1 + ... + alpha_i) - 1` for all `1 <= i < m`.
pub fn fast_growth_holds(alpha: &CycleType) -> bool {
    let lengths = alpha.lengths();
    let mut prefix = 0u64;
    for (i, &a) in lengths.iter().enumerate() {
        if i > 0 && (a as u64) + 1 < 2 * prefix {
            return false;
        }
        prefix += a as u64;
    }
    true
}

/// Complete character table of `S_n`.
pub struct CharTable {
    pub n: u32,
    /// Row labels, in descending lexicographic order.
    pub partitions: Vec<Partition>,
    /// Column labels, one cycle type per class.
    pub classes: Vec<CycleType>,
    /// `values[i][j]` is the character of `partitions[i]` at `classes[j]`.
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn value(&self, lambda: &Partition, rho: &CycleType) -> Option<i64> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.classes.iter().position(|c| c == rho)?;
        Some(self.values[i][j])
    }

    /// CSV rendering with classes as columns.
    pub fn csv(&self) -> String {
        let mut out = String::from("partition");
        for c in &self.classes {
            out.push(',');
            out.push_str(&c.lengths().iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
        }
        out.push('\n');
        for (i, p) in self.partitions.iter().enumerate() {
            out.push_str(&p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
            for v in &self.values[i] {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

pub fn char_table(n: u32, bound: u32) -> Result<CharTable, SymfunError> {
    if n > bound {
        return Err(SymfunError::TableBound(n, bound));
    }
    let partitions = partitions_of(n);
    let classes = classes_of(n);
    let values = partitions
        .iter()
        .map(|p| {
            classes
                .iter()
                .map(|c| mn_value(p, c).expect("sizes match by construction"))
                .collect()
        })
        .collect();
    Ok(CharTable {
        n,
        partitions,
        classes,
        values,
    })
}

/// Which of the two distinguished elements to classify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Two cycles, of lengths `a` and `N - a`.
    X,
    /// Three cycles, of lengths `1`, `a - 1`, and `N - a`.
    Y,
}

impl Variant {
    pub fn cycle_type(self, n: u32, a: u32) -> CycleType {
        match self {
            Variant::X => CycleType::new(vec![a, n - a]),
            Variant::Y => CycleType::new(vec![1, a - 1, n - a]),
        }
    }

    /// The predicted count of partitions with nonzero value.
    pub fn predicted_count(self, n: u32, a: u32) -> u64 {
        match self {
            Variant::X => a as u64 * (n - a) as u64,
            Variant::Y if a == 2 => 2 * (n as u64 - 2),
            Variant::Y => (a as u64 - 1) * (n - a) as u64,
        }
    }
}

/// All partitions of `N` with nonzero character value at the chosen element,
/// with the computed values.
pub fn nonvanishing_set(
    n: u32,
    a: u32,
    variant: Variant,
) -> Result<Vec<(Partition, i64)>, SymfunError> {
    if a == 0 || 3 * a >= n {
        return Err(SymfunError::BadCycleSplit(a, n));
    }
    let rho = variant.cycle_type(n, a);
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        let v = mn_value(&lambda, &rho)?;
        if v != 0 {
            out.push((lambda, v));
        }
    }
    Ok(out)
}

/// Checks `chi(g) = chi(1) (mod l)` for an element of prime order `l`.
pub fn prime_order_congruence(
    lambda: &Partition,
    g: &CycleType,
    l: u32,
) -> Result<bool, SymfunError> {
    if !is_prime_u32(l) || !g.has_prime_order(l) {
        return Err(SymfunError::NotPrimeOrder(format!("{g} with l = {l}")));
    }
    let value = mn_value(lambda, g)?;
    let degree = lambda.hook_length_degree() as i64;
    Ok((value - degree).rem_euclid(l as i64) == 0)
}

fn is_prime_u32(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
