use std::fmt;

use super::{add_mod, check_prime_modulus, inv_mod, mul_mod, reduce_i64, sub_mod, FpScalar};
use crate::error::{Error, Result};

/// Dense `dim × dim` matrix over F_p, row-major.
///
/// The derived ordering compares entries lexicographically once modulus and
/// dimension agree, which is the order used for canonical representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    modulus: u32,
    dim: usize,
    entries: Vec<u32>,
}

impl FpMatrix {
    /// Builds a matrix from signed integers, reducing each entry mod `modulus`.
    pub fn new(modulus: u64, dim: usize, entries: &[i64]) -> Result<Self> {
        let p = check_prime_modulus(modulus)?;
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(dim * dim, entries.len()));
        }
        Ok(Self {
            modulus: p,
            dim,
            entries: entries.iter().map(|&e| reduce_i64(e, p)).collect(),
        })
    }

    /// Builds a matrix from residues already in `0..modulus`.
    pub fn from_residues(modulus: u64, dim: usize, entries: Vec<u32>) -> Result<Self> {
        let p = check_prime_modulus(modulus)?;
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(dim * dim, entries.len()));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= p) {
            return Err(Error::NotMember(format!("F_{p} (entry {bad})")));
        }
        Ok(Self {
            modulus: p,
            dim,
            entries,
        })
    }

    pub(crate) fn from_parts(modulus: u32, dim: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Self {
            modulus,
            dim,
            entries,
        }
    }

    pub fn identity(modulus: u64, dim: usize) -> Result<Self> {
        let p = check_prime_modulus(modulus)?;
        Ok(Self::identity_unchecked(p, dim))
    }

    pub(crate) fn identity_unchecked(p: u32, dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % p;
        }
        Self::from_parts(p, dim, entries)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> FpScalar {
        FpScalar::from_residue(self.entries[row * self.dim + col], self.modulus)
    }

    #[inline]
    pub(crate) fn at(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.dim + col]
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        let p = self.modulus as u64;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u64 * other.entries[k * n + j] as u64;
                }
                out[i * n + j] = (acc % p) as u32;
            }
        }
        Self::from_parts(self.modulus, n, out)
    }

    /// Multiplies every entry by the residue `lambda`.
    pub fn scale(&self, lambda: u32) -> Self {
        let p = self.modulus;
        Self::from_parts(
            p,
            self.dim,
            self.entries.iter().map(|&e| mul_mod(e, lambda, p)).collect(),
        )
    }

    pub fn trace(&self) -> u32 {
        (0..self.dim).fold(0, |acc, i| add_mod(acc, self.at(i, i), self.modulus))
    }

    /// Determinant by Gaussian elimination over F_p.
    pub fn determinant(&self) -> u32 {
        let n = self.dim;
        let p = self.modulus;
        if n == 2 {
            return sub_mod(
                mul_mod(self.entries[0], self.entries[3], p),
                mul_mod(self.entries[1], self.entries[2], p),
                p,
            );
        }
        let mut m = self.entries.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                }
                det = sub_mod(0, det, p);
            }
            let pv = m[col * n + col];
            det = mul_mod(det, pv, p);
            let pinv = inv_mod(pv, p).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = mul_mod(m[r * n + col], pinv, p);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let sub = mul_mod(factor, m[col * n + c], p);
                    m[r * n + c] = sub_mod(m[r * n + c], sub, p);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let p = self.modulus;
        if n == 2 {
            let det = self.determinant();
            let dinv = inv_mod(det, p).ok_or(Error::Singular)?;
            let [a, b, c, d] = [self.entries[0], self.entries[1], self.entries[2], self.entries[3]];
            return Ok(Self::from_parts(
                p,
                2,
                vec![
                    mul_mod(d, dinv, p),
                    mul_mod(sub_mod(0, b, p), dinv, p),
                    mul_mod(sub_mod(0, c, p), dinv, p),
                    mul_mod(a, dinv, p),
                ],
            ));
        }
        let mut m = self.entries.clone();
        let mut inv = Self::identity_unchecked(p, n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0).ok_or(Error::Singular)?;
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                    inv.swap(pivot * n + c, col * n + c);
                }
            }
            let pinv = inv_mod(m[col * n + col], p).expect("nonzero pivot");
            for c in 0..n {
                m[col * n + c] = mul_mod(m[col * n + c], pinv, p);
                inv[col * n + c] = mul_mod(inv[col * n + c], pinv, p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m[r * n + col];
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    m[r * n + c] = sub_mod(m[r * n + c], mul_mod(factor, m[col * n + c], p), p);
                    inv[r * n + c] =
                        sub_mod(inv[r * n + c], mul_mod(factor, inv[col * n + c], p), p);
                }
            }
        }
        Ok(Self::from_parts(p, n, inv))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::identity_unchecked(self.modulus, self.dim);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            exp >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar_of(1)
    }

    /// Returns the scalar `λ` when the matrix equals `λ·I`.
    pub fn scalar_value(&self) -> Option<u32> {
        let lambda = self.entries[0];
        self.is_scalar_of(lambda).then_some(lambda)
    }

    fn is_scalar_of(&self, lambda: u32) -> bool {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &e)| if i / n == i % n { e == lambda } else { e == 0 })
    }

    /// Least `k ≥ 1` with `selfᵏ = I`.
    pub fn order(&self, order_cap: u64) -> Result<u64> {
        if self.determinant() == 0 {
            return Err(Error::Singular);
        }
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            if k >= order_cap {
                return Err(Error::OrderCapExceeded(order_cap));
            }
            acc = acc.mul_unchecked(self);
            k += 1;
        }
        Ok(k)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.dim {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")?;
        if f.alternate() {
            write!(f, " mod {}", self.modulus)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, e: &[i64]) -> FpMatrix {
        let dim = (e.len() as f64).sqrt() as usize;
        FpMatrix::new(p, dim, e).unwrap()
    }

    #[test]
    fn products() {
        let a = m(5, &[0, 4, 1, 0]);
        let b = m(5, &[1, 1, 0, 1]);
        assert_eq!(a.mul(&b).unwrap(), m(5, &[0, 4, 1, 1]));
        let id = FpMatrix::identity(5, 2).unwrap();
        assert_eq!(id.mul(&a).unwrap(), a);
        assert_eq!(a.mul(&id).unwrap(), a);
    }

    #[test]
    fn mismatches_are_errors() {
        let a = m(5, &[1, 1, 0, 1]);
        let b = m(7, &[1, 1, 0, 1]);
        assert_eq!(a.mul(&b), Err(Error::ModulusMismatch(5, 7)));
        let c = FpMatrix::identity(5, 3).unwrap();
        assert_eq!(a.mul(&c), Err(Error::DimensionMismatch(2, 3)));
        assert!(FpMatrix::new(6, 2, &[1, 0, 0, 1]).is_err());
        assert!(FpMatrix::new(5, 2, &[1, 0, 0]).is_err());
    }

    #[test]
    fn inverses() {
        let t = m(5, &[1, 1, 0, 1]);
        assert_eq!(t.inverse().unwrap(), m(5, &[1, 4, 0, 1]));
        let id = FpMatrix::identity(13, 3).unwrap();
        assert_eq!(id.inverse().unwrap(), id);
        let g = m(7, &[2, 1, 0, 0, 1, 3, 5, 0, 4]);
        assert_eq!(g.mul(&g.inverse().unwrap()).unwrap(), FpMatrix::identity(7, 3).unwrap());
        assert_eq!(m(5, &[1, 2, 2, 4]).inverse(), Err(Error::Singular));
        assert_eq!(m(5, &[1, 2, 3, 2, 4, 6, 0, 0, 1]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn determinants() {
        assert_eq!(m(7, &[2, 1, 0, 0, 1, 3, 5, 0, 4]).determinant(), (8 + 15) % 7);
        assert_eq!(m(5, &[0, 4, 1, 0]).determinant(), 1);
        assert_eq!(m(3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]).determinant(), 2);
    }

    #[test]
    fn orders() {
        for p in [3u64, 5, 7, 11] {
            assert_eq!(m(p, &[1, 1, 0, 1]).order(1000).unwrap(), p);
        }
        assert_eq!(m(5, &[4, 0, 0, 4]).order(10).unwrap(), 2);
        // [[0,4],[1,0]] squares to -I over F_5, so its order is 4.
        assert_eq!(m(5, &[0, 4, 1, 0]).order(10).unwrap(), 4);
        assert_eq!(m(5, &[1, 1, 0, 1]).order(3), Err(Error::OrderCapExceeded(3)));
    }
}
