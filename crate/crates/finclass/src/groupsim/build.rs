//! Group construction: membership predicates per family, brute-force
//! enumeration for the smallest groups, generator closure for the rest, and
//! the conjugacy class partition.

use super::GroupError;
use crate::algebra::{group_order, make_field, AlgebraError, FiniteField, FqElem, FqMatrix, GroupFamily};
use num_traits::ToPrimitive;
use std::collections::HashMap;

/// A classical family over `F_q`, or a permutation group presented as 0/1
/// matrices over `F_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Classical(GroupFamily),
    Symmetric,
    Alternating,
}

impl GroupKind {
    pub fn parse(s: &str) -> Option<GroupKind> {
        Some(match s.to_ascii_lowercase().as_str() {
            "s" | "sym" | "symmetric" => GroupKind::Symmetric,
            "a" | "alt" | "alternating" => GroupKind::Alternating,
            other => GroupKind::Classical(GroupFamily::parse(other)?),
        })
    }
}

/// Which group to build: family, matrix dimension, field size, and whether
/// to pass to the central quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: u32,
    pub q: u64,
    pub quotient_center: bool,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, n: u32, q: u64) -> Self {
        GroupSpec {
            kind,
            n,
            q,
            quotient_center: false,
        }
    }

    pub fn projective(kind: GroupKind, n: u32, q: u64) -> Self {
        GroupSpec {
            kind,
            n,
            q,
            quotient_center: true,
        }
    }

    /// Order of the group before any central quotient.
    pub fn expected_order(&self) -> Result<u64, GroupError> {
        let big = match self.kind {
            GroupKind::Symmetric => {
                return Ok((1..=self.n as u64).product());
            }
            GroupKind::Alternating => {
                return Ok(((1..=self.n as u64).product::<u64>() / 2).max(1));
            }
            GroupKind::Classical(f) => group_order(f, self.n, self.q)?,
        };
        big.to_u64()
            .ok_or(GroupError::CapExceeded(u64::MAX, u64::MAX))
    }
}

/// The form data a membership test needs.
enum FormContext {
    None,
    Determinant,
    /// Hermitian unitary over `F_{q^2}`: `conj(g)^T g = I`, with `q` stored.
    Unitary { q: u64, special: bool },
    /// Alternating: `g^T J g = J`.
    Symplectic { j: FqMatrix },
    /// Symmetric bilinear (odd q): `g^T B g = B` and `det g = 1`.
    BilinearSpecial { b: FqMatrix },
    /// Quadratic form (even q): `fold(g^T U g) = U`, optionally with the
    /// Dickson invariant pinned to zero.
    Quadratic { u: FqMatrix, dickson_zero: bool },
}

pub(crate) struct Membership {
    field_size_pow_dim: u64,
    ctx: FormContext,
}

impl Membership {
    fn test(&self, m: &FqMatrix, f: &FiniteField) -> bool {
        let _ = self.field_size_pow_dim;
        match &self.ctx {
            FormContext::None => m.inverse(f).is_some(),
            FormContext::Determinant => m.det(f) == 1,
            FormContext::Unitary { q, special } => {
                let ct = m.conj_transpose(*q, f);
                ct.mul(m, f) == FqMatrix::identity(m.n) && (!special || m.det(f) == 1)
            }
            FormContext::Symplectic { j } => {
                m.transpose().mul(j, f).mul(m, f) == *j
            }
            FormContext::BilinearSpecial { b } => {
                m.det(f) == 1 && m.transpose().mul(b, f).mul(m, f) == *b
            }
            FormContext::Quadratic { u, dickson_zero } => {
                let folded = fold_upper(&m.transpose().mul(u, f).mul(m, f), f);
                if folded != *u {
                    return false;
                }
                if *dickson_zero {
                    let shifted = m.add(&FqMatrix::identity(m.n), f);
                    if shifted.rank(f) % 2 != 0 {
                        return false;
                    }
                }
                true
            }
        }
    }
}

/// Upper-triangular fold: `M_ij + M_ji` above the diagonal, `M_ii` on it.
/// Two quadratic-form matrices define the same form iff their folds agree.
fn fold_upper(m: &FqMatrix, f: &FiniteField) -> FqMatrix {
    let n = m.n;
    let mut out = FqMatrix::zero(n);
    for i in 0..n {
        out[(i, i)] = m[(i, i)];
        for j in i + 1..n {
            out[(i, j)] = f.add(m[(i, j)], m[(j, i)]);
        }
    }
    out
}

/// Standard Gram matrices; fixed so conjugacy classes are reproducible.
fn form_context(
    family: GroupFamily,
    n: u32,
    q: u64,
    f: &FiniteField,
) -> Result<FormContext, GroupError> {
    let n = n as usize;
    Ok(match family {
        GroupFamily::Gl => FormContext::None,
        GroupFamily::Sl => FormContext::Determinant,
        GroupFamily::Gu => FormContext::Unitary { q, special: false },
        GroupFamily::Su => FormContext::Unitary { q, special: true },
        GroupFamily::Sp => {
            if n % 2 != 0 {
                return Err(GroupError::Unsupported(
                    "symplectic groups need even dimension".into(),
                ));
            }
            let m = n / 2;
            let mut j = FqMatrix::zero(n);
            for i in 0..m {
                j[(i, m + i)] = 1;
                j[(m + i, i)] = f.neg(1);
            }
            FormContext::Symplectic { j }
        }
        GroupFamily::SoOdd | GroupFamily::SoPlus | GroupFamily::SoMinus => {
            if family == GroupFamily::SoOdd && n % 2 == 0 {
                return Err(GroupError::Unsupported("odd orthogonal needs odd dimension".into()));
            }
            if family != GroupFamily::SoOdd && n % 2 != 0 {
                return Err(GroupError::Unsupported("even orthogonal needs even dimension".into()));
            }
            if q % 2 == 1 {
                // hyperbolic planes [[0,1],[1,0]] plus a tail: (1) in odd
                // dimension, diag(1, -delta) for the minus type
                let planes = match family {
                    GroupFamily::SoOdd => (n - 1) / 2,
                    GroupFamily::SoPlus => n / 2,
                    GroupFamily::SoMinus => n / 2 - 1,
                    _ => unreachable!(),
                };
                let mut b = FqMatrix::zero(n);
                for i in 0..planes {
                    b[(2 * i, 2 * i + 1)] = 1;
                    b[(2 * i + 1, 2 * i)] = 1;
                }
                match family {
                    GroupFamily::SoOdd => b[(n - 1, n - 1)] = 1,
                    GroupFamily::SoMinus => {
                        let delta = smallest_nonsquare(f);
                        b[(n - 2, n - 2)] = 1;
                        b[(n - 1, n - 1)] = f.neg(delta);
                    }
                    _ => {}
                }
                FormContext::BilinearSpecial { b }
            } else {
                if family == GroupFamily::SoOdd {
                    return Err(GroupError::Unsupported(
                        "odd orthogonal groups in characteristic 2 coincide with symplectic ones; build Sp instead".into(),
                    ));
                }
                // quadratic form: hyperbolic pairs x_{2i} x_{2i+1}, with the
                // last pair replaced by x^2 + xy + delta y^2 for the minus type
                let mut u = FqMatrix::zero(n);
                for i in 0..n / 2 {
                    u[(2 * i, 2 * i + 1)] = 1;
                }
                if family == GroupFamily::SoMinus {
                    let delta = trace_one_element(f);
                    u[(n - 2, n - 2)] = 1;
                    u[(n - 1, n - 1)] = delta;
                }
                FormContext::Quadratic {
                    u,
                    dickson_zero: true,
                }
            }
        }
        GroupFamily::OmegaPlus | GroupFamily::OmegaMinus | GroupFamily::OmegaOdd => {
            return Err(GroupError::Unsupported(
                "build the special orthogonal group and take its derived subgroup".into(),
            ));
        }
    })
}

fn smallest_nonsquare(f: &FiniteField) -> FqElem {
    let squares: std::collections::HashSet<FqElem> =
        f.elements().map(|x| f.mul(x, x)).collect();
    f.elements()
        .find(|x| !squares.contains(x))
        .expect("odd-order fields have non-squares")
}

fn trace_one_element(f: &FiniteField) -> FqElem {
    // absolute trace to F_2
    f.elements()
        .find(|&x| {
            let mut acc = 0;
            let mut v = x;
            for _ in 0..f.degree() {
                acc = f.add(acc, v);
                v = f.mul(v, v);
            }
            acc == 1
        })
        .expect("the absolute trace is onto")
}

/// A fully enumerated group with its conjugacy class partition.
pub struct GroupTable {
    pub spec: GroupSpec,
    pub field: FiniteField,
    pub dim: usize,
    elements: Vec<FqMatrix>,
    index: HashMap<u128, u32>,
    inverse: Vec<u32>,
    class_of: Vec<u32>,
    class_members: Vec<Vec<u32>>,
    bits_per_entry: u32,
    /// Indices of the central elements (of the group as built).
    center: Vec<u32>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: u32) -> &FqMatrix {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[FqMatrix] {
        &self.elements
    }

    pub fn identity_index(&self) -> u32 {
        self.index_of(&FqMatrix::identity(self.dim)).expect("identity is in the group")
    }

    pub fn pack(&self, m: &FqMatrix) -> u128 {
        let mut key: u128 = 0;
        for &e in m.entries() {
            key = (key << self.bits_per_entry) | e as u128;
        }
        key
    }

    pub fn index_of(&self, m: &FqMatrix) -> Option<u32> {
        self.index.get(&self.pack(m)).copied()
    }

    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        let prod = self.elements[a as usize].mul(&self.elements[b as usize], &self.field);
        self.index[&self.pack(&prod)]
    }

    pub fn inv_idx(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn class_count(&self) -> usize {
        self.class_members.len()
    }

    pub fn class_of(&self, i: u32) -> u32 {
        self.class_of[i as usize]
    }

    pub fn class_members(&self, class: u32) -> &[u32] {
        &self.class_members[class as usize]
    }

    /// Smallest element index in each class, in class order.
    pub fn class_reps(&self) -> Vec<u32> {
        self.class_members.iter().map(|c| c[0]).collect()
    }

    pub fn center(&self) -> &[u32] {
        &self.center
    }

    pub fn centralizer_order(&self, g: u32) -> usize {
        let gm = &self.elements[g as usize];
        self.elements
            .iter()
            .filter(|h| h.mul(gm, &self.field) == gm.mul(h, &self.field))
            .count()
    }
}

fn bits_for(field_size: u64) -> u32 {
    64 - (field_size - 1).leading_zeros() as u32
}

fn permutation_matrix(perm: &[usize]) -> FqMatrix {
    let n = perm.len();
    let mut m = FqMatrix::zero(n);
    for (i, &p) in perm.iter().enumerate() {
        m[(p, i)] = 1;
    }
    m
}

/// Generator matrices for the families that are too large to brute-force:
/// every member of a small-dimensional block subgroup, embedded at each
/// window of coordinates on which the form restricts well.
fn block_generators(
    family: GroupFamily,
    n: u32,
    q: u64,
    f: &FiniteField,
) -> Result<Vec<FqMatrix>, GroupError> {
    let n = n as usize;
    let mut gens: Vec<FqMatrix> = Vec::new();
    let mut embed_all = |dim: usize, windows: &[Vec<usize>]| -> Result<(), GroupError> {
        let membership = Membership {
            field_size_pow_dim: 0,
            ctx: form_context(family, dim as u32, q, f)?,
        };
        let block = brute_force_elements(dim, f, &membership)?;
        for w in windows {
            for b in &block {
                let mut m = FqMatrix::identity(n);
                for (bi, &wi) in w.iter().enumerate() {
                    for (bj, &wj) in w.iter().enumerate() {
                        m[(wi, wj)] = b[(bi, bj)];
                    }
                }
                gens.push(m);
            }
        }
        Ok(())
    };
    match family {
        GroupFamily::Gl | GroupFamily::Sl | GroupFamily::Gu | GroupFamily::Su => {
            // the identity-form families restrict to every coordinate pair
            let pairs: Vec<Vec<usize>> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| vec![i, j]))
                .collect();
            embed_all(2, &pairs)?;
            if matches!(family, GroupFamily::Gu | GroupFamily::Su) && n >= 3 {
                // unitary block pairs only reach the monomial subgroup;
                // three-dimensional windows complete the generation
                let triples: Vec<Vec<usize>> =
                    (0..n - 2).map(|i| vec![i, i + 1, i + 2]).collect();
                embed_all(3, &triples)?;
            }
        }
        GroupFamily::Sp => {
            let half = n / 2;
            // Sp_2 blocks on each hyperbolic pair (i, i + half)
            let membership = Membership {
                field_size_pow_dim: 0,
                ctx: form_context(GroupFamily::Sl, 2, q, f)?,
            };
            let sl2 = brute_force_elements(2, f, &membership)?;
            for i in 0..half {
                for b in &sl2 {
                    let mut m = FqMatrix::identity(n);
                    let w = [i, half + i];
                    for bi in 0..2 {
                        for bj in 0..2 {
                            m[(w[bi], w[bj])] = b[(bi, bj)];
                        }
                    }
                    gens.push(m);
                }
            }
            // GL_2 acting as A on (e_i, e_j) and (A^T)^{-1} on (f_i, f_j)
            let membership = Membership {
                field_size_pow_dim: 0,
                ctx: FormContext::None,
            };
            let gl2 = brute_force_elements(2, f, &membership)?;
            for i in 0..half {
                for j in (i + 1)..half {
                    for b in &gl2 {
                        let binv_t = b
                            .inverse(f)
                            .expect("block is invertible")
                            .transpose();
                        let mut m = FqMatrix::identity(n);
                        let e = [i, j];
                        let fw = [half + i, half + j];
                        for bi in 0..2 {
                            for bj in 0..2 {
                                m[(e[bi], e[bj])] = b[(bi, bj)];
                                m[(fw[bi], fw[bj])] = binv_t[(bi, bj)];
                            }
                        }
                        gens.push(m);
                    }
                }
            }
        }
        _ => {
            return Err(GroupError::Unsupported(format!(
                "no generator scheme for {family:?} at dimension {n}; only brute force applies"
            )))
        }
    }
    Ok(gens)
}

fn brute_force_elements(
    dim: usize,
    f: &FiniteField,
    membership: &Membership,
) -> Result<Vec<FqMatrix>, GroupError> {
    let size = f.size();
    let cells = dim * dim;
    let total = (size as u128).checked_pow(cells as u32);
    match total {
        Some(t) if t <= 4_000_000 => {}
        _ => {
            return Err(GroupError::Unsupported(format!(
                "brute force over {size}^{cells} matrices is out of reach"
            )))
        }
    }
    let total = total.unwrap() as u64;
    let mut out = Vec::new();
    let mut entries = vec![0 as FqElem; cells];
    for code in 0..total {
        let mut v = code;
        for e in entries.iter_mut() {
            *e = (v % size) as FqElem;
            v /= size;
        }
        let m = FqMatrix::new(dim, entries.clone());
        if membership.test(&m, f) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Builds the complete element table, verifying the order formula, then the
/// inverse table and the conjugacy class partition.
pub fn build_group(spec: &GroupSpec, cap: u64) -> Result<GroupTable, GroupError> {
    let expected = spec.expected_order()?;
    if expected > cap {
        return Err(GroupError::CapExceeded(expected, cap));
    }
    let (field, dim) = match spec.kind {
        GroupKind::Symmetric | GroupKind::Alternating => (make_field(2, 1)?, spec.n as usize),
        GroupKind::Classical(family) => {
            let q = spec.q;
            let (p, k) = split_prime_power(q)?;
            let field = match family {
                GroupFamily::Gu | GroupFamily::Su => make_field(p, 2 * k)?,
                _ => make_field(p, k)?,
            };
            (field, spec.n as usize)
        }
    };
    let bits = bits_for(field.size());
    if (dim * dim) as u32 * bits > 128 {
        return Err(GroupError::Unsupported(format!(
            "{dim}x{dim} matrices over {} elements do not pack into the index key",
            field.size()
        )));
    }

    let elements: Vec<FqMatrix> = match spec.kind {
        GroupKind::Symmetric => {
            let mut gens = Vec::new();
            for i in 0..dim.saturating_sub(1) {
                let mut p: Vec<usize> = (0..dim).collect();
                p.swap(i, i + 1);
                gens.push(permutation_matrix(&p));
            }
            closure(&gens, &field, dim, expected, bits)?
        }
        GroupKind::Alternating => {
            let mut gens = Vec::new();
            for k in 2..dim {
                let mut p: Vec<usize> = (0..dim).collect();
                // the 3-cycle (0 1 k)
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                gens.push(permutation_matrix(&p));
            }
            closure(&gens, &field, dim, expected, bits)?
        }
        GroupKind::Classical(family) => {
            let membership = Membership {
                field_size_pow_dim: 0,
                ctx: form_context(family, spec.n, spec.q, &field)?,
            };
            let cells = (dim * dim) as u32;
            let brute_total = (field.size() as u128).checked_pow(cells);
            if matches!(brute_total, Some(t) if t <= 4_000_000) {
                let all = brute_force_elements(dim, &field, &membership)?;
                if all.len() as u64 != expected {
                    return Err(GroupError::ClosureMismatch(all.len() as u64, expected));
                }
                all
            } else {
                let gens = block_generators(family, spec.n, spec.q, &field)?;
                let gens: Vec<FqMatrix> =
                    gens.into_iter().filter(|g| membership.test(g, &field)).collect();
                if gens.is_empty() {
                    return Err(GroupError::Unsupported(
                        "no valid generators produced".into(),
                    ));
                }
                closure(&gens, &field, dim, expected, bits)?
            }
        }
    };

    let table = finish_table(spec.clone(), field, dim, elements, bits)?;
    if spec.quotient_center {
        quotient_by_center(table)
    } else {
        Ok(table)
    }
}

fn split_prime_power(q: u64) -> Result<(u64, u32), AlgebraError> {
    for p in 2..=q {
        if q % p == 0 {
            let mut k = 0;
            let mut v = q;
            while v % p == 0 {
                v /= p;
                k += 1;
            }
            if v != 1 {
                return Err(AlgebraError::NotPrime(q));
            }
            return Ok((p, k));
        }
    }
    Err(AlgebraError::NotPrime(q))
}

fn closure(
    gens: &[FqMatrix],
    field: &FiniteField,
    dim: usize,
    expected: u64,
    bits: u32,
) -> Result<Vec<FqMatrix>, GroupError> {
    let pack = |m: &FqMatrix| {
        let mut key: u128 = 0;
        for &e in m.entries() {
            key = (key << bits) | e as u128;
        }
        key
    };
    let identity = FqMatrix::identity(dim);
    let mut elements = vec![identity.clone()];
    let mut seen: HashMap<u128, u32> = HashMap::new();
    seen.insert(pack(&identity), 0);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        let base = elements[i].clone();
        for g in gens {
            let next = base.mul(g, field);
            let key = pack(&next);
            if !seen.contains_key(&key) {
                let idx = elements.len();
                if idx as u64 > expected {
                    return Err(GroupError::ClosureMismatch(idx as u64 + 1, expected));
                }
                seen.insert(key, idx as u32);
                elements.push(next);
                frontier.push(idx);
            }
        }
    }
    if elements.len() as u64 != expected {
        return Err(GroupError::ClosureMismatch(elements.len() as u64, expected));
    }
    Ok(elements)
}

fn finish_table(
    spec: GroupSpec,
    field: FiniteField,
    dim: usize,
    mut elements: Vec<FqMatrix>,
    bits: u32,
) -> Result<GroupTable, GroupError> {
    // canonical element order: by packed key
    let pack = |m: &FqMatrix| {
        let mut key: u128 = 0;
        for &e in m.entries() {
            key = (key << bits) | e as u128;
        }
        key
    };
    elements.sort_unstable_by_key(&pack);
    let index: HashMap<u128, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, m)| (pack(m), i as u32))
        .collect();
    let inverse: Vec<u32> = elements
        .iter()
        .map(|m| {
            let inv = m.inverse(&field).expect("group elements are invertible");
            index[&pack(&inv)]
        })
        .collect();

    // conjugacy classes: orbit of conjugation, walked over all elements
    // (generator-only walks would need the generating set retained; the
    // groups are small enough to conjugate by everything)
    let n_el = elements.len();
    let mut class_of = vec![u32::MAX; n_el];
    let mut class_members: Vec<Vec<u32>> = Vec::new();
    for start in 0..n_el {
        if class_of[start] != u32::MAX {
            continue;
        }
        let class_idx = class_members.len() as u32;
        let mut members = vec![start as u32];
        class_of[start] = class_idx;
        let mut stack = vec![start as u32];
        while let Some(x) = stack.pop() {
            let xm = &elements[x as usize];
            for (h_idx, h) in elements.iter().enumerate() {
                let conj = h.mul(xm, &field).mul(
                    &elements[inverse[h_idx] as usize],
                    &field,
                );
                let ci = index[&pack(&conj)];
                if class_of[ci as usize] == u32::MAX {
                    class_of[ci as usize] = class_idx;
                    members.push(ci);
                    stack.push(ci);
                }
            }
        }
        members.sort_unstable();
        class_members.push(members);
    }

    // sanity: class sizes divide the order and sum to it
    let total: usize = class_members.iter().map(|c| c.len()).sum();
    debug_assert_eq!(total, n_el);
    for c in &class_members {
        debug_assert_eq!(n_el % c.len(), 0);
    }

    // center: classes of size one
    let center: Vec<u32> = class_members
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();

    Ok(GroupTable {
        spec,
        field,
        dim,
        elements,
        index,
        inverse,
        class_of,
        class_members,
        bits_per_entry: bits,
        center,
    })
}

/// Replaces each element by the minimum of its central coset.
fn quotient_by_center(table: GroupTable) -> Result<GroupTable, GroupError> {
    let GroupTable {
        spec,
        field,
        dim,
        elements,
        index: _,
        inverse: _,
        class_of: _,
        class_members: _,
        bits_per_entry,
        center,
    } = table;
    let pack = |m: &FqMatrix| {
        let mut key: u128 = 0;
        for &e in m.entries() {
            key = (key << bits_per_entry) | e as u128;
        }
        key
    };
    let central: Vec<FqMatrix> = center
        .iter()
        .map(|&i| elements[i as usize].clone())
        .collect();
    let mut reps: Vec<FqMatrix> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for g in &elements {
        let rep = central
            .iter()
            .map(|z| z.mul(g, &field))
            .min_by_key(&pack)
            .expect("center is nonempty");
        if seen.insert(pack(&rep)) {
            reps.push(rep);
        }
    }
    if reps.len() * central.len() != elements.len() {
        return Err(GroupError::ClosureMismatch(
            reps.len() as u64,
            (elements.len() / central.len()) as u64,
        ));
    }
    // coset representatives multiply as rep(g) * rep(h) -> rep(gh), which is
    // exactly what the canonicalized index gives; rebuild the table data
    finish_quotient(spec, field, dim, reps, central, bits_per_entry)
}

fn finish_quotient(
    spec: GroupSpec,
    field: FiniteField,
    dim: usize,
    mut reps: Vec<FqMatrix>,
    central: Vec<FqMatrix>,
    bits: u32,
) -> Result<GroupTable, GroupError> {
    let pack = |m: &FqMatrix| {
        let mut key: u128 = 0;
        for &e in m.entries() {
            key = (key << bits) | e as u128;
        }
        key
    };
    let canon = |m: &FqMatrix| {
        central
            .iter()
            .map(|z| z.mul(m, &field))
            .min_by_key(&pack)
            .expect("center nonempty")
    };
    reps.sort_unstable_by_key(&pack);
    let index: HashMap<u128, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, m)| (pack(m), i as u32))
        .collect();
    let inverse: Vec<u32> = reps
        .iter()
        .map(|m| {
            let inv = canon(&m.inverse(&field).expect("invertible"));
            index[&pack(&inv)]
        })
        .collect();
    let n_el = reps.len();
    let mut class_of = vec![u32::MAX; n_el];
    let mut class_members: Vec<Vec<u32>> = Vec::new();
    for start in 0..n_el {
        if class_of[start] != u32::MAX {
            continue;
        }
        let class_idx = class_members.len() as u32;
        let mut members = vec![start as u32];
        class_of[start] = class_idx;
        let mut stack = vec![start as u32];
        while let Some(x) = stack.pop() {
            let xm = reps[x as usize].clone();
            for h_idx in 0..n_el {
                let h = &reps[h_idx];
                let hinv = &reps[inverse[h_idx] as usize];
                let conj = canon(&h.mul(&xm, &field).mul(hinv, &field));
                let ci = index[&pack(&conj)];
                if class_of[ci as usize] == u32::MAX {
                    class_of[ci as usize] = class_idx;
                    members.push(ci);
                    stack.push(ci);
                }
            }
        }
        members.sort_unstable();
        class_members.push(members);
    }
    let center: Vec<u32> = class_members
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();
    Ok(GroupTable {
        spec,
        field,
        dim,
        elements: reps,
        index,
        inverse,
        class_of,
        class_members,
        bits_per_entry: bits,
        center,
    })
}

impl GroupTable {
    /// Canonical index of a product for quotient tables: the plain index
    /// already works because representatives are closed under the packed
    /// minimum, but products of representatives need re-canonicalization.
    pub fn mul_idx_canonical(&self, a: u32, b: u32) -> u32 {
        if !self.spec.quotient_center {
            return self.mul_idx(a, b);
        }
        let prod = self.elements[a as usize].mul(&self.elements[b as usize], &self.field);
        self.canonical_index(&prod)
    }

    pub fn canonical_index(&self, m: &FqMatrix) -> u32 {
        if let Some(i) = self.index_of(m) {
            return i;
        }
        // quotient table: minimize over the central multiples of the source
        // group; centrals of the source are scalar matrices in these groups,
        // recoverable as the stabilizing scalars
        let mut best: Option<u32> = None;
        for lambda in self.field.elements() {
            if lambda == 0 {
                continue;
            }
            let scaled = m.scale(lambda, &self.field);
            if let Some(i) = self.index_of(&scaled) {
                best = Some(best.map_or(i, |b: u32| b.min(i)));
            }
        }
        best.expect("element belongs to the group modulo its center")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = 200_000;

    #[test]
    fn sl2_3_has_24_elements() {
        let t = build_group(&GroupSpec::new(GroupKind::Classical(GroupFamily::Sl), 2, 3), CAP)
            .unwrap();
        assert_eq!(t.order(), 24);
        assert_eq!(t.class_count(), 7);
    }

    #[test]
    fn s5_as_permutation_matrices() {
        let t = build_group(&GroupSpec::new(GroupKind::Symmetric, 5, 2), CAP).unwrap();
        assert_eq!(t.order(), 120);
        assert_eq!(t.class_count(), 7);
    }

    #[test]
    fn a5_and_class_equation() {
        let t = build_group(&GroupSpec::new(GroupKind::Alternating, 5, 2), CAP).unwrap();
        assert_eq!(t.order(), 60);
        assert_eq!(t.class_count(), 5);
        let sum: usize = (0..t.class_count())
            .map(|c| t.class_members(c as u32).len())
            .sum();
        assert_eq!(sum, 60);
        for c in 0..t.class_count() {
            let size = t.class_members(c as u32).len();
            assert_eq!(60 % size, 0);
            // class size times centralizer order is the group order
            let rep = t.class_members(c as u32)[0];
            assert_eq!(size * t.centralizer_order(rep), 60);
        }
    }

    #[test]
    fn gu2_2_and_gu1_2() {
        let t = build_group(&GroupSpec::new(GroupKind::Classical(GroupFamily::Gu), 2, 2), CAP)
            .unwrap();
        assert_eq!(t.order(), 18);
        let t1 = build_group(&GroupSpec::new(GroupKind::Classical(GroupFamily::Gu), 1, 2), CAP)
            .unwrap();
        assert_eq!(t1.order(), 3);
    }

    #[test]
    fn gl2_3_order_48() {
        let t = build_group(&GroupSpec::new(GroupKind::Classical(GroupFamily::Gl), 2, 3), CAP)
            .unwrap();
        assert_eq!(t.order(), 48);
    }

    #[test]
    fn psl2_7_is_the_simple_168() {
        let t = build_group(
            &GroupSpec::projective(GroupKind::Classical(GroupFamily::Sl), 2, 7),
            CAP,
        )
        .unwrap();
        assert_eq!(t.order(), 168);
        assert_eq!(t.class_count(), 6);
        assert_eq!(t.center().len(), 1);
    }

    #[test]
    fn sp4_2_by_closure() {
        let t = build_group(&GroupSpec::new(GroupKind::Classical(GroupFamily::Sp), 4, 2), CAP)
            .unwrap();
        assert_eq!(t.order(), 720);
    }

    #[test]
    fn so3_3_brute_force() {
        let t = build_group(&GroupSpec::new(GroupKind::Classical(GroupFamily::SoOdd), 3, 3), CAP)
            .unwrap();
        assert_eq!(t.order(), 24);
    }

    #[test]
    fn so_even_char2_types() {
        let plus = build_group(
            &GroupSpec::new(GroupKind::Classical(GroupFamily::SoPlus), 4, 2),
            CAP,
        )
        .unwrap();
        assert_eq!(plus.order(), 36);
        let minus = build_group(
            &GroupSpec::new(GroupKind::Classical(GroupFamily::SoMinus), 4, 2),
            CAP,
        )
        .unwrap();
        assert_eq!(minus.order(), 60);
    }

    #[test]
    fn su4_2_closure_count() {
        let t = build_group(&GroupSpec::new(GroupKind::Classical(GroupFamily::Su), 4, 2), CAP)
            .unwrap();
        assert_eq!(t.order(), 25920);
        assert_eq!(t.center().len(), 1); // trivial centre: already simple
    }

    #[test]
    fn cap_honoured() {
        assert!(matches!(
            build_group(&GroupSpec::new(GroupKind::Symmetric, 8, 2), 1000),
            Err(GroupError::CapExceeded(40320, 1000))
        ));
    }
}
