//! Prime fields and square matrices over them.
//!
//! Residues are stored as `u32` with the modulus bounded by [`MAX_MODULUS`],
//! so a product of two residues fits in a machine word before reduction.

mod fp2;
mod matrix;
mod projective;

pub(crate) use fp2::Fp2Ctx;
pub use matrix::FpMatrix;
pub use projective::{projective_canonicalize, roots_of_unity, ProjectiveMatrix};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported modulus.
pub const MAX_MODULUS: u32 = 1 << 15;

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates a modulus for field arithmetic.
pub fn check_prime_modulus(p: u64) -> Result<u32> {
    if !(2..=MAX_MODULUS as u64).contains(&p) {
        return Err(Error::ModulusOutOfRange(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p as u32)
}

/// Iterator over primes in increasing order, starting after `after`.
pub fn primes_after(after: u64) -> impl Iterator<Item = u64> {
    (after + 1..).filter(|&n| is_prime(n))
}

pub(crate) fn reduce_i64(value: i64, p: u32) -> u32 {
    value.rem_euclid(p as i64) as u32
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow_mod(base: u32, mut exp: u64, p: u32) -> u32 {
    let mut result = 1 % p;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, p);
        }
        b = mul_mod(b, b, p);
        exp >>= 1;
    }
    result
}

/// Inverse by the extended Euclidean algorithm; `None` for zero.
pub(crate) fn inv_mod(a: u32, p: u32) -> Option<u32> {
    let (mut old_r, mut r) = (a as i64 % p as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    if old_r == 0 {
        return None;
    }
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(p as i64) as u32)
}

pub(crate) fn is_square(a: u32, p: u32) -> bool {
    a == 0 || p == 2 || pow_mod(a, (p as u64 - 1) / 2, p) == 1
}

/// Square root in F_p by Tonelli-Shanks, `None` for non-residues.
pub(crate) fn sqrt_mod(a: u32, p: u32) -> Option<u32> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if !is_square(a, p) {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p as u64 + 1) / 4, p));
    }
    let mut q = p as u64 - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = non_residue(p);
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Smallest quadratic non-residue modulo an odd prime.
pub(crate) fn non_residue(p: u32) -> u32 {
    (2..p).find(|&z| !is_square(z, p)).expect("odd prime has a non-residue")
}

/// An element of F_p carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpScalar {
    value: u32,
    modulus: u32,
}

impl FpScalar {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        let modulus = check_prime_modulus(modulus)?;
        Ok(Self {
            value: reduce_i64(value, modulus),
            modulus,
        })
    }

    pub(crate) fn from_residue(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Self { value, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        inv_mod(self.value, self.modulus).map(|v| Self::from_residue(v, self.modulus))
    }

    pub fn pow(self, exp: u64) -> Self {
        Self::from_residue(pow_mod(self.value, exp, self.modulus), self.modulus)
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        Self::from_residue(add_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        Self::from_residue(sub_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        Self::from_residue(mul_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> Self {
        Self::from_residue(sub_mod(0, self.value, self.modulus), self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(matches!(check_prime_modulus(15), Err(Error::NotPrime(15))));
        assert!(matches!(check_prime_modulus(1), Err(Error::ModulusOutOfRange(1))));
        assert!(check_prime_modulus(32771).is_err());
    }

    #[test]
    fn inverses_and_roots() {
        for p in [3u32, 5, 7, 13, 17, 101] {
            for a in 1..p {
                let inv = inv_mod(a, p).unwrap();
                assert_eq!(mul_mod(a, inv, p), 1);
                let sq = mul_mod(a, a, p);
                let r = sqrt_mod(sq, p).unwrap();
                assert_eq!(mul_mod(r, r, p), sq);
            }
            assert_eq!(inv_mod(0, p), None);
            assert!(sqrt_mod(non_residue(p), p).is_none());
        }
    }

    #[test]
    fn scalar_ops() {
        let a = FpScalar::new(-1, 5).unwrap();
        assert_eq!(a.value(), 4);
        let b = FpScalar::new(3, 5).unwrap();
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 2);
        assert_eq!((b - a).value(), 4);
        assert_eq!((-b).value(), 2);
        assert_eq!(b.inv().unwrap().value(), 2);
        assert_eq!(b.pow(4).value(), 1);
    }
}
