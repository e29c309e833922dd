//! Dense univariate polynomials over a finite field.

use super::{embedding, make_field, AlgebraError, FiniteField, FqElem};

/// Coefficients ascending by degree; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    pub fn constant(c: FqElem) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FqElem {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly, f: &FiniteField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, other: &Poly, f: &FiniteField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: FqElem, f: &FiniteField) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &FiniteField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on zero divisor.
    pub fn divrem(&self, divisor: &Poly, f: &FiniteField) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = f.inv(divisor.leading());
        let mut quot = vec![0; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - d] = c;
            for (j, &m) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = f.sub(rem[i - d + j], f.mul(c, m));
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly, f: &FiniteField) -> Poly {
        self.divrem(divisor, f).1
    }

    pub fn monic(&self, f: &FiniteField) -> Poly {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        self.scale(f.inv(self.leading()), f)
    }

    pub fn gcd(&self, other: &Poly, f: &FiniteField) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &FiniteField) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let scalar = f.from_int((i + 1) as i64);
                f.mul(scalar, c)
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn eval(&self, x: FqElem, f: &FiniteField) -> FqElem {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// `self^e mod m`.
    pub fn modpow(&self, mut e: u64, m: &Poly, f: &FiniteField) -> Poly {
        let mut base = self.rem(m, f);
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            base = base.mul(&base, f).rem(m, f);
            e >>= 1;
        }
        acc
    }

    /// Maps coefficients through a field embedding.
    pub fn map_coeffs(&self, map: impl Fn(FqElem) -> FqElem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| map(c)).collect())
    }
}

/// Rabin irreducibility test over the prime field, used to pick field moduli.
pub(super) fn is_irreducible_prime_field(p: u64, coeffs: &[u64]) -> bool {
    let f = make_field(p, 1).expect("prime field");
    let poly = Poly::new(coeffs.iter().map(|&c| c as FqElem).collect());
    is_irreducible(&poly, &f)
}

/// Rabin's test: `f` of degree `k` is irreducible over `F_q` iff
/// `x^{q^k} = x (mod f)` and `gcd(x^{q^{k/r}} - x, f) = 1` for prime `r | k`.
pub fn is_irreducible(poly: &Poly, f: &FiniteField) -> bool {
    let k = match poly.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k as u32,
    };
    let q = f.size();
    let x = Poly::x();
    let frob_pow = |steps: u32| {
        // x^{q^steps} mod poly, one Frobenius step at a time
        let mut acc = x.clone();
        for _ in 0..steps {
            acc = acc.modpow(q, poly, f);
        }
        acc
    };
    for r in super::factorize(k as u64) {
        let xe = frob_pow(k / r as u32);
        let g = xe.sub(&x, f).gcd(poly, f);
        if g.degree() != Some(0) {
            return false;
        }
    }
    frob_pow(k).sub(&x, f).is_zero()
}

/// Full factorization into monic irreducibles with multiplicities.
///
/// Strategy: squarefree decomposition (with `p`-th power descent), then
/// distinct-degree splitting, then exhaustive root search in `F_{q^d}` for
/// each degree-`d` part. Factor degrees above `max_ext` are an error.
pub fn factor_squarefree_split(
    poly: &Poly,
    f: &FiniteField,
    max_ext: u32,
) -> Result<Vec<(Poly, u32)>, AlgebraError> {
    assert!(
        poly.degree().map_or(false, |d| d >= 1),
        "factorization needs degree >= 1"
    );
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    let mut stack = vec![(poly.monic(f), 1u32)];
    while let Some((g, mult)) = stack.pop() {
        if g.degree() == Some(0) {
            continue;
        }
        let deriv = g.derivative(f);
        if deriv.is_zero() {
            // g = h(x^p); descend to the p-th root
            let root = pth_root_poly(&g, f);
            stack.push((root, mult * f.p() as u32));
            continue;
        }
        let sqfree_part = g.divrem(&g.gcd(&deriv, f), f).0;
        // factors with multiplicity divisible by p do not appear in the
        // squarefree part; strip the found ones and recurse on the rest
        let mut remaining = g.clone();
        for (irr, _) in split_squarefree(&sqfree_part, f, max_ext)? {
            let mut count = 0u32;
            loop {
                let (q, r) = remaining.divrem(&irr, f);
                if !r.is_zero() {
                    break;
                }
                count += 1;
                remaining = q;
            }
            merge_factor(&mut factors, irr, count * mult);
        }
        if remaining.degree().map_or(false, |d| d >= 1) {
            stack.push((remaining, mult));
        }
    }
    factors.sort_by(|a, b| (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs())));
    Ok(factors)
}

fn merge_factor(factors: &mut Vec<(Poly, u32)>, irr: Poly, mult: u32) {
    if mult == 0 {
        return;
    }
    for (g, m) in factors.iter_mut() {
        if *g == irr {
            *m += mult;
            return;
        }
    }
    factors.push((irr, mult));
}

/// `g(x) = h(x^p)` implies `g = (pth_root_poly(g))^p` over `F_{p^k}`.
fn pth_root_poly(g: &Poly, f: &FiniteField) -> Poly {
    let p = f.p() as usize;
    let root_exp = f.size() / f.p(); // c -> c^{p^{k-1}} inverts Frobenius
    let coeffs = g
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&c| f.pow(c, root_exp))
        .collect();
    Poly::new(coeffs)
}

/// Splits a squarefree polynomial into irreducibles by distinct-degree
/// separation plus root search in the matching extension.
fn split_squarefree(
    g: &Poly,
    f: &FiniteField,
    max_ext: u32,
) -> Result<Vec<(Poly, u32)>, AlgebraError> {
    let mut out = Vec::new();
    let mut rest = g.monic(f);
    let q = f.size();
    let x = Poly::x();
    let mut xq = x.clone(); // x^{q^d} mod rest, updated per degree
    let mut d = 0u32;
    while rest.degree().map_or(false, |deg| deg >= 1) {
        d += 1;
        if rest.degree().unwrap() < 2 * d as usize {
            // remainder is irreducible
            let deg = rest.degree().unwrap() as u32;
            if deg > max_ext {
                return Err(AlgebraError::FactorDegreeExceeded(deg, max_ext));
            }
            out.push((rest.clone(), 1));
            break;
        }
        if d > max_ext {
            return Err(AlgebraError::FactorDegreeExceeded(d, max_ext));
        }
        xq = xq.modpow(q, &rest, f);
        let part = xq.sub(&x, f).gcd(&rest, f);
        if part.degree() == Some(0) {
            continue;
        }
        for irr in split_equal_degree(&part, d, f)? {
            out.push((irr, 1));
        }
        rest = rest.divrem(&part, f).0;
        xq = xq.rem(&rest, f);
    }
    Ok(out)
}

/// All irreducible factors of `part` have degree `d`; find them by root
/// search in `F_{q^d}`.
fn split_equal_degree(part: &Poly, d: u32, f: &FiniteField) -> Result<Vec<Poly>, AlgebraError> {
    if d == 1 {
        let mut out = Vec::new();
        for r in f.elements() {
            if part.eval(r, f) == 0 {
                out.push(Poly::new(vec![f.neg(r), 1]));
            }
        }
        return Ok(out);
    }
    let ext = make_field(f.p(), f.degree() * d)
        .map_err(|_| AlgebraError::FactorDegreeExceeded(d, d))?;
    let emb = embedding(f, &ext)?;
    let lifted = part.map_coeffs(|c| emb.apply(c));
    let mut out: Vec<Poly> = Vec::new();
    let mut seen_roots: Vec<FqElem> = Vec::new();
    for r in ext.elements() {
        if lifted.eval(r, &ext) != 0 || seen_roots.contains(&r) {
            continue;
        }
        // minimal polynomial of r over F_q: product over the Frobenius orbit
        let mut orbit = vec![r];
        let mut s = ext.pow(r, f.size());
        while s != r {
            orbit.push(s);
            s = ext.pow(s, f.size());
        }
        seen_roots.extend(&orbit);
        let mut min_poly = Poly::one();
        for &root in &orbit {
            min_poly = min_poly.mul(&Poly::new(vec![ext.neg(root), 1]), &ext);
        }
        let descended = min_poly.map_coeffs(|c| {
            emb.preimage(c)
                .expect("minimal polynomial coefficients lie in the base field")
        });
        out.push(descended);
    }
    Ok(out)
}
