//! Exact arithmetic substrate: prime fields and their extensions, polynomials,
//! matrices over finite fields, and order formulas for the classical groups.
//!
//! Fields are small by design (a few million elements at most), so elements are
//! stored as dense integer codes and multiplication runs through discrete-log
//! tables whenever the field fits in memory.

mod matrix;
mod orders;
mod poly;

pub use matrix::FqMatrix;
pub use orders::{group_order, group_order_p_prime, GroupFamily};
pub use poly::Poly;

use thiserror::Error;

/// Element of a finite field, encoded as an integer in `[0, p^k)`.
///
/// The base-`p` digits of the code are the coefficients of the residue
/// polynomial in the canonical generator (the class of `x`), lowest degree
/// first. Code `0` is the zero element, code `1` the identity.
pub type FqElem = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} out of range (1..=24)")]
    DegreeOutOfRange(u32),
    #[error("field with {0} elements exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("no embedding: {0} does not divide {1}")]
    NoEmbedding(u32, u32),
    #[error("irreducible factor of degree {0} exceeds the extension bound {1}")]
    FactorDegreeExceeded(u32, u32),
    #[error("invalid group family/dimension pairing: {0}")]
    InvalidFamily(String),
}

enum MulStrategy {
    /// Discrete-log tables over a primitive element.
    Table { log: Vec<u32>, exp: Vec<u32> },
    /// Direct polynomial multiplication modulo the defining polynomial.
    Poly,
}

/// The field `F_{p^k}` with a fixed defining polynomial.
///
/// The modulus is the monic irreducible of degree `k` over `F_p` whose
/// non-leading coefficient vector has the smallest base-`p` integer encoding,
/// so element codes are identical across runs.
pub struct FiniteField {
    p: u64,
    k: u32,
    size: u64,
    modulus: Vec<u64>,
    mul: MulStrategy,
}

const TABLE_LIMIT: u64 = 1 << 21;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Constructs `F_{p^k}` with the deterministic modulus.
pub fn make_field(p: u64, k: u32) -> Result<FiniteField, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    if k == 0 || k > 24 {
        return Err(AlgebraError::DegreeOutOfRange(k));
    }
    let size = match (p as u128).checked_pow(k) {
        Some(s) if s <= (1u128 << 24) => s as u64,
        _ => return Err(AlgebraError::FieldTooLarge(u64::MAX)),
    };
    let modulus = smallest_irreducible(p, k);
    let mut field = FiniteField {
        p,
        k,
        size,
        modulus,
        mul: MulStrategy::Poly,
    };
    if size <= TABLE_LIMIT {
        field.build_tables();
    }
    Ok(field)
}

/// Smallest monic irreducible of degree `k` over `F_p`, ordered by the
/// base-`p` encoding of the non-leading coefficients.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    let mut code = 0u64;
    loop {
        let mut coeffs = Vec::with_capacity(k as usize + 1);
        let mut v = code;
        for _ in 0..k {
            coeffs.push(v % p);
            v /= p;
        }
        coeffs.push(1);
        if coeffs[0] != 0 && poly::is_irreducible_prime_field(p, &coeffs) {
            return coeffs;
        }
        code += 1;
    }
}

impl FiniteField {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements `p^k`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Defining polynomial, ascending coefficients over `F_p`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        0
    }

    pub fn one(&self) -> FqElem {
        1
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        0..self.size as FqElem
    }

    fn digits(&self, a: FqElem) -> Vec<u64> {
        let mut v = a as u64;
        let mut out = vec![0u64; self.k as usize];
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn from_digits(&self, digits: &[u64]) -> FqElem {
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            code = code * self.p + (d % self.p);
        }
        code as FqElem
    }

    /// Element of the prime subfield from an integer residue.
    pub fn from_int(&self, v: i64) -> FqElem {
        (v.rem_euclid(self.p as i64)) as FqElem
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return ((a as u64 + b as u64) % self.p) as FqElem;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.p == 2 {
            return a;
        }
        if self.k == 1 {
            return ((self.p - a as u64) % self.p) as FqElem;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.from_digits(&neg)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        match &self.mul {
            MulStrategy::Table { log, exp } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let n = self.size - 1;
                    exp[((log[a as usize] as u64 + log[b as usize] as u64) % n) as usize]
                }
            }
            MulStrategy::Poly => self.mul_poly(a, b),
        }
    }

    fn mul_poly(&self, a: FqElem, b: FqElem) -> FqElem {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce modulo the defining polynomial
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(k) {
                let idx = i - k + j;
                prod[idx] = (prod[idx] + c * (self.p - m)) % self.p;
            }
        }
        self.from_digits(&prod[..k])
    }

    pub fn inv(&self, a: FqElem) -> FqElem {
        assert!(a != 0, "division by zero");
        match &self.mul {
            MulStrategy::Table { log, exp } => {
                let n = self.size - 1;
                exp[((n - log[a as usize] as u64) % n) as usize]
            }
            MulStrategy::Poly => self.pow(a, self.size - 2),
        }
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> FqElem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FqElem, mut e: u64) -> FqElem {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        e %= self.size - 1;
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius `x -> x^p`.
    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, self.p)
    }

    /// Multiplicative order of a unit.
    pub fn mult_order(&self, a: FqElem) -> u64 {
        assert!(a != 0, "zero has no multiplicative order");
        let n = self.size - 1;
        let mut ord = n;
        for f in factorize(n) {
            while ord % f == 0 && self.pow(a, ord / f) == 1 {
                ord /= f;
            }
        }
        ord
    }

    /// Smallest-code primitive element.
    pub fn primitive_element(&self) -> FqElem {
        let n = self.size - 1;
        (1..self.size)
            .map(|c| c as FqElem)
            .find(|&c| self.mult_order(c) == n)
            .expect("multiplicative group is cyclic")
    }

    /// Smallest-code element of exact multiplicative order `d` (`d | p^k - 1`).
    pub fn element_of_order(&self, d: u64) -> Option<FqElem> {
        if d == 0 || (self.size - 1) % d != 0 {
            return None;
        }
        let g = self.primitive_element();
        Some(self.pow(g, (self.size - 1) / d))
    }

    fn build_tables(&mut self) {
        // mult_order runs through the Poly strategy during construction
        let gamma = self.primitive_element();
        let n = (self.size - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![0u32; self.size as usize];
        let mut acc: FqElem = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_poly(acc, gamma);
        }
        debug_assert_eq!(acc, 1);
        self.mul = MulStrategy::Table { log, exp };
    }
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Ring embedding `F_{p^a} -> F_{p^b}` for `a | b`, with a precomputed element map.
pub struct Embedding {
    map: Vec<FqElem>,
}

impl Embedding {
    pub fn apply(&self, e: FqElem) -> FqElem {
        self.map[e as usize]
    }

    /// Preimage lookup; `None` when the element is outside the subfield image.
    pub fn preimage(&self, e: FqElem) -> Option<FqElem> {
        self.map.iter().position(|&x| x == e).map(|i| i as FqElem)
    }
}

/// Builds the deterministic embedding of `src` into `dst`.
///
/// The image of the canonical generator is the smallest-code root of the
/// source modulus in the target field.
pub fn embedding(src: &FiniteField, dst: &FiniteField) -> Result<Embedding, AlgebraError> {
    if src.p != dst.p || dst.k % src.k != 0 {
        return Err(AlgebraError::NoEmbedding(src.k, dst.k));
    }
    let root = dst
        .elements()
        .find(|&x| {
            let mut acc = 0;
            for &c in src.modulus.iter().rev() {
                acc = dst.add(dst.mul(acc, x), dst.from_int(c as i64));
            }
            acc == 0
        })
        .expect("modulus splits in any extension of divisible degree");
    let mut map = vec![0; src.size as usize];
    for e in src.elements() {
        let digits = src.digits(e);
        let mut acc = 0;
        for &d in digits.iter().rev() {
            acc = dst.add(dst.mul(acc, root), dst.from_int(d as i64));
        }
        map[e as usize] = acc;
    }
    Ok(Embedding { map })
}

pub use poly::factor_squarefree_split;
