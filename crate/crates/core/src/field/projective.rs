use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use super::{pow_mod, FpMatrix};
use crate::error::{Error, Result};

type RootCache = HashMap<(usize, u32), Rc<[u32]>>;

thread_local! {
    static ROOTS: RefCell<RootCache> = RefCell::new(HashMap::new());
}

/// The `n`-th roots of unity in F_p, ascending. These are the scalars in the
/// center of SL(n, p).
pub fn roots_of_unity(n: usize, p: u32) -> Rc<[u32]> {
    ROOTS.with(|cache| {
        cache
            .borrow_mut()
            .entry((n, p))
            .or_insert_with(|| {
                if n == 2 && p > 2 {
                    return Rc::from(vec![1, p - 1]);
                }
                (1..p)
                    .filter(|&x| pow_mod(x, n as u64, p) == 1)
                    .collect::<Vec<_>>()
                    .into()
            })
            .clone()
    })
}

/// A coset `M·Z` in PSL(n, p), stored as its canonical representative: the
/// scalar multiple of `M` by an `n`-th root of unity whose row-major entries
/// are lexicographically least.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveMatrix {
    rep: FpMatrix,
}

/// Canonical representative of the center coset of a determinant-one matrix.
pub fn projective_canonicalize(a: &FpMatrix) -> Result<ProjectiveMatrix> {
    let det = a.determinant();
    if det != 1 {
        return Err(Error::DeterminantNotOne(det.to_string()));
    }
    Ok(ProjectiveMatrix::canonical(a))
}

impl ProjectiveMatrix {
    pub(crate) fn canonical(a: &FpMatrix) -> Self {
        let roots = roots_of_unity(a.dim(), a.modulus());
        let mut best: Option<Vec<u32>> = None;
        for &lambda in roots.iter() {
            let scaled = a.scale(lambda);
            if best.as_deref().is_none_or(|b| scaled.entries() < b) {
                best = Some(scaled.entries().to_vec());
            }
        }
        Self {
            rep: FpMatrix::from_parts(a.modulus(), a.dim(), best.expect("1 is a root")),
        }
    }

    pub fn identity(modulus: u64, dim: usize) -> Result<Self> {
        Ok(Self::canonical(&FpMatrix::identity(modulus, dim)?))
    }

    pub fn rep(&self) -> &FpMatrix {
        &self.rep
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::canonical(&self.rep.mul(&other.rep)?))
    }

    pub fn inverse(&self) -> Self {
        Self::canonical(&self.rep.inverse().expect("det-one matrix is invertible"))
    }

    /// Whether the coset is the center itself.
    pub fn is_identity(&self) -> bool {
        self.rep.scalar_value().is_some()
    }

    /// Least `k ≥ 1` with `selfᵏ` central.
    pub fn order(&self, order_cap: u64) -> Result<u64> {
        let mut acc = self.rep.clone();
        let mut k = 1;
        while acc.scalar_value().is_none() {
            if k >= order_cap {
                return Err(Error::OrderCapExceeded(order_cap));
            }
            acc = acc.mul_unchecked(&self.rep);
            k += 1;
        }
        Ok(k)
    }
}

impl fmt::Debug for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.rep)
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.rep, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_cosets_collapse() {
        let m = FpMatrix::new(5, 2, &[2, 1, 1, 1]).unwrap();
        let neg = m.scale(4);
        assert_eq!(
            projective_canonicalize(&m).unwrap(),
            projective_canonicalize(&neg).unwrap()
        );
        let id = FpMatrix::identity(5, 2).unwrap();
        assert_eq!(projective_canonicalize(&id).unwrap().rep(), &id);
        assert!(projective_canonicalize(&id.scale(4)).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_sl() {
        let m = FpMatrix::new(5, 2, &[2, 0, 0, 1]).unwrap();
        assert!(matches!(projective_canonicalize(&m), Err(Error::DeterminantNotOne(_))));
    }

    #[test]
    fn roots() {
        assert_eq!(&*roots_of_unity(3, 7), &[1, 2, 4]);
        assert_eq!(&*roots_of_unity(3, 5), &[1]);
        assert_eq!(&*roots_of_unity(2, 11), &[1, 10]);
    }

    #[test]
    fn projective_orders() {
        let neg = ProjectiveMatrix::canonical(&FpMatrix::new(5, 2, &[4, 0, 0, 4]).unwrap());
        assert_eq!(neg.order(10).unwrap(), 1);
        let s = ProjectiveMatrix::canonical(&FpMatrix::new(5, 2, &[0, 4, 1, 0]).unwrap());
        assert_eq!(s.order(10).unwrap(), 2);
    }
}
