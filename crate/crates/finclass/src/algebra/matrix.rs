//! Square matrices over a finite field, with the exact linear algebra the
//! verification engine needs: rank, kernels, inverses, characteristic
//! polynomials, and Kronecker products.

use super::{FiniteField, FqElem, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqMatrix {
    pub n: usize,
    entries: Vec<FqElem>,
}

impl FqMatrix {
    pub fn new(n: usize, entries: Vec<FqElem>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix must be square");
        FqMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        FqMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn diagonal(diag: &[FqElem]) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Companion matrix of a monic polynomial.
    pub fn companion(poly: &Poly, f: &FiniteField) -> Self {
        let n = poly.degree().expect("companion of nonzero polynomial");
        assert_eq!(poly.leading(), 1, "companion matrix needs a monic polynomial");
        let mut m = Self::zero(n);
        for i in 1..n {
            m[(i, i - 1)] = 1;
        }
        for i in 0..n {
            m[(i, n - 1)] = f.neg(poly.coeff(i));
        }
        m
    }

    pub fn entries(&self) -> &[FqElem] {
        &self.entries
    }

    pub fn mul(&self, other: &FqMatrix, f: &FiniteField) -> FqMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = FqMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other[(k, j)];
                    if b != 0 {
                        out[(i, j)] = f.add(out[(i, j)], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FqMatrix, f: &FiniteField) -> FqMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        FqMatrix::new(self.n, entries)
    }

    pub fn sub(&self, other: &FqMatrix, f: &FiniteField) -> FqMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        FqMatrix::new(self.n, entries)
    }

    pub fn scale(&self, c: FqElem, f: &FiniteField) -> FqMatrix {
        FqMatrix::new(self.n, self.entries.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn transpose(&self) -> FqMatrix {
        let n = self.n;
        let mut out = FqMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Entry-wise `x -> x^e` followed by transposition; with `e = q` this is
    /// the conjugate transpose for the unitary groups over `F_{q^2}`.
    pub fn conj_transpose(&self, e: u64, f: &FiniteField) -> FqMatrix {
        let n = self.n;
        let mut out = FqMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = f.pow(self[(i, j)], e);
            }
        }
        out
    }

    pub fn map_entries(&self, map: impl Fn(FqElem) -> FqElem) -> FqMatrix {
        FqMatrix::new(self.n, self.entries.iter().map(|&a| map(a)).collect())
    }

    pub fn pow(&self, mut e: u64, f: &FiniteField) -> FqMatrix {
        let mut base = self.clone();
        let mut acc = FqMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            e >>= 1;
        }
        acc
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        let mut m = self.clone();
        let n = m.n;
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| m[(r, col)] != 0);
            let Some(piv) = pivot else { continue };
            m.swap_rows(piv, rank);
            let inv = f.inv(m[(rank, col)]);
            for r in 0..n {
                if r != rank && m[(r, col)] != 0 {
                    let factor = f.mul(m[(r, col)], inv);
                    for j in col..n {
                        let sub = f.mul(factor, m[(rank, j)]);
                        m[(r, j)] = f.sub(m[(r, j)], sub);
                    }
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    pub fn kernel_dim(&self, f: &FiniteField) -> usize {
        self.n - self.rank(f)
    }

    pub fn det(&self, f: &FiniteField) -> FqElem {
        let mut m = self.clone();
        let n = m.n;
        let mut det: FqElem = 1;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[(r, col)] != 0);
            let Some(piv) = pivot else { return 0 };
            if piv != col {
                m.swap_rows(piv, col);
                det = f.neg(det);
            }
            det = f.mul(det, m[(col, col)]);
            let inv = f.inv(m[(col, col)]);
            for r in col + 1..n {
                if m[(r, col)] != 0 {
                    let factor = f.mul(m[(r, col)], inv);
                    for j in col..n {
                        let sub = f.mul(factor, m[(col, j)]);
                        m[(r, j)] = f.sub(m[(r, j)], sub);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &FiniteField) -> Option<FqMatrix> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = FqMatrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| m[(r, col)] != 0)?;
            m.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let scale = f.inv(m[(col, col)]);
            for j in 0..n {
                m[(col, j)] = f.mul(m[(col, j)], scale);
                inv[(col, j)] = f.mul(inv[(col, j)], scale);
            }
            for r in 0..n {
                if r != col && m[(r, col)] != 0 {
                    let factor = m[(r, col)];
                    for j in 0..n {
                        let a = f.mul(factor, m[(col, j)]);
                        m[(r, j)] = f.sub(m[(r, j)], a);
                        let b = f.mul(factor, inv[(col, j)]);
                        inv[(r, j)] = f.sub(inv[(r, j)], b);
                    }
                }
            }
        }
        Some(inv)
    }

    /// `dim ker(M - lambda I)` computed over the field of `lambda`.
    ///
    /// The matrix entries must already live in that field (embed first when
    /// the eigenvalue comes from an extension).
    pub fn eigenspace_dim(&self, lambda: FqElem, f: &FiniteField) -> usize {
        let shifted = self.sub(&FqMatrix::identity(self.n).scale(lambda, f), f);
        shifted.kernel_dim(f)
    }

    /// Monic characteristic polynomial `det(t I - M)` via Hessenberg reduction.
    pub fn char_poly(&self, f: &FiniteField) -> Poly {
        let n = self.n;
        if n == 0 {
            return Poly::one();
        }
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for col in 0..n.saturating_sub(2) {
            let piv = ((col + 1)..n).find(|&r| h[(r, col)] != 0);
            let Some(piv) = piv else { continue };
            if piv != col + 1 {
                h.swap_rows(piv, col + 1);
                h.swap_cols(piv, col + 1);
            }
            let inv = f.inv(h[(col + 1, col)]);
            for r in (col + 2)..n {
                if h[(r, col)] == 0 {
                    continue;
                }
                let factor = f.mul(h[(r, col)], inv);
                // row r -= factor * row col+1; col col+1 += factor * col r
                for j in 0..n {
                    let sub = f.mul(factor, h[(col + 1, j)]);
                    h[(r, j)] = f.sub(h[(r, j)], sub);
                }
                for i in 0..n {
                    let add = f.mul(factor, h[(i, r)]);
                    h[(i, col + 1)] = f.add(h[(i, col + 1)], add);
                }
            }
        }
        // char polys p_k of the leading k x k blocks of the Hessenberg form
        let mut polys: Vec<Poly> = Vec::with_capacity(n + 1);
        polys.push(Poly::one());
        for k in 1..=n {
            let x_minus = Poly::new(vec![f.neg(h[(k - 1, k - 1)]), 1]);
            let mut p = polys[k - 1].mul(&x_minus, f);
            let mut subdiag: FqElem = 1;
            for j in (0..k - 1).rev() {
                subdiag = f.mul(subdiag, h[(j + 1, j)]);
                if subdiag == 0 {
                    break;
                }
                let coeff = f.mul(h[(j, k - 1)], subdiag);
                p = p.sub(&polys[j].scale(coeff, f), f);
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &FqMatrix, f: &FiniteField) -> FqMatrix {
        let (n, m) = (self.n, other.n);
        let mut out = FqMatrix::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self[(i, j)];
                if a == 0 {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other[(k, l)];
                        if b != 0 {
                            out[(i * m + k, j * m + l)] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[FqMatrix]) -> FqMatrix {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut out = FqMatrix::zero(n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    out[(offset + i, offset + j)] = b[(i, j)];
                }
            }
            offset += b.n;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.n {
            self.entries.swap(i * self.n + a, i * self.n + b);
        }
    }
}

impl std::ops::Index<(usize, usize)> for FqMatrix {
    type Output = FqElem;
    fn index(&self, (i, j): (usize, usize)) -> &FqElem {
        &self.entries[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FqMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FqElem {
        &mut self.entries[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::super::make_field;
    use super::*;

    #[test]
    fn char_poly_identity_over_f3() {
        let f3 = make_field(3, 1).unwrap();
        let id = FqMatrix::identity(2);
        // (t - 1)^2 = t^2 - 2t + 1 = t^2 + t + 1 over F_3
        assert_eq!(id.char_poly(&f3), Poly::new(vec![1, 1, 1]));
    }

    #[test]
    fn char_poly_companion_over_f2() {
        let f2 = make_field(2, 1).unwrap();
        let p = Poly::new(vec![1, 1, 1]);
        let c = FqMatrix::companion(&p, &f2);
        assert_eq!(c.char_poly(&f2), p);
    }

    #[test]
    fn char_poly_diag_over_f3() {
        let f3 = make_field(3, 1).unwrap();
        let d = FqMatrix::diagonal(&[1, 2]);
        // (t-1)(t-2) = t^2 - 3t + 2 = t^2 + 2 over F_3... expanding mod 3: t^2 + 0t + 2
        assert_eq!(d.char_poly(&f3), Poly::new(vec![2, 0, 1]));
    }

    #[test]
    fn char_poly_matches_det_on_random_4x4() {
        // det and trace recoverable from the coefficients
        let f5 = make_field(5, 1).unwrap();
        let mut seed = 7u64;
        for _ in 0..50 {
            let entries: Vec<u32> = (0..16)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                    ((seed >> 33) % 5) as u32
                })
                .collect();
            let m = FqMatrix::new(4, entries);
            let cp = m.char_poly(&f5);
            assert_eq!(cp.degree(), Some(4));
            assert_eq!(cp.leading(), 1);
            // det = (-1)^n * constant coefficient
            assert_eq!(m.det(&f5), cp.coeff(0));
            // trace = -coeff(n-1)
            let trace = (0..4).fold(0, |acc, i| f5.add(acc, m[(i, i)]));
            assert_eq!(trace, f5.neg(cp.coeff(3)));
            // Cayley-Hamilton as an independent correctness oracle
            let mut acc = FqMatrix::zero(4);
            let mut power = FqMatrix::identity(4);
            for i in 0..=4 {
                acc = acc.add(&power.scale(cp.coeff(i), &f5), &f5);
                power = power.mul(&m, &f5);
            }
            assert_eq!(acc, FqMatrix::zero(4));
        }
    }

    #[test]
    fn eigenspace_dims() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(FqMatrix::identity(4).eigenspace_dim(1, &f3), 4);
        assert_eq!(FqMatrix::diagonal(&[1, 2]).eigenspace_dim(1, &f3), 1);
        let jordan = FqMatrix::new(2, vec![1, 1, 0, 1]);
        assert_eq!(jordan.eigenspace_dim(1, &f3), 1);
    }

    #[test]
    fn eigenspace_plus_rank_is_dimension() {
        let f4 = make_field(2, 2).unwrap();
        let mut seed = 3u64;
        for _ in 0..30 {
            let entries: Vec<u32> = (0..9)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                    ((seed >> 33) % 4) as u32
                })
                .collect();
            let m = FqMatrix::new(3, entries);
            for lambda in f4.elements() {
                let shifted = m.sub(&FqMatrix::identity(3).scale(lambda, &f4), &f4);
                assert_eq!(m.eigenspace_dim(lambda, &f4) + shifted.rank(&f4), 3);
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f7 = make_field(7, 1).unwrap();
        let m = FqMatrix::new(3, vec![1, 2, 3, 0, 1, 4, 5, 6, 0]);
        let inv = m.inverse(&f7).unwrap();
        assert_eq!(m.mul(&inv, &f7), FqMatrix::identity(3));
        assert_eq!(inv.mul(&m, &f7), FqMatrix::identity(3));
        let singular = FqMatrix::new(2, vec![1, 2, 2, 4]);
        assert!(singular.inverse(&f7).is_none());
    }

    #[test]
    fn kron_identity_sizes() {
        let f2 = make_field(2, 1).unwrap();
        let a = FqMatrix::identity(2);
        let b = FqMatrix::identity(3);
        assert_eq!(a.kron(&b, &f2), FqMatrix::identity(6));
    }
}
