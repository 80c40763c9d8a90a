//! Rational matrix tuples in SL_n(Q), their reductions modulo primes, and
//! density and irredundancy evidence gathered from those reductions.
//!
//! Entries live in Z[1/N] for N the product of the denominators. Every
//! rational prime has residue field F_p, so the candidate primes are simply
//! the primes not dividing N and above a configurable floor; primes at or
//! below the floor are treated as possibly exceptional.

mod certificate;
mod evidence;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{check_prime_modulus, inv_mod, is_prime, primes_after, FpMatrix};
use crate::groups::{Element, GeneratingTuple, GroupSpec};
use crate::nielsen::{NielsenMove, Sign};

pub use certificate::{
    certify_density, replay_certificate, tuple_fingerprint, DensityCertificate, DensityOutcome, EvidenceKind,
    NotCertified, PrimeDiagnosis, CERTIFICATE_VERSION,
};
pub use evidence::{
    assess_irredundancy, assess_nielsen_irredundancy, EvidenceSummary, IrredundancyEvidence, PrimeEvidence,
};

/// Square matrix of exact rationals with determinant one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(dim: usize, entries: Vec<BigRational>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(dim * dim, entries.len()));
        }
        let m = Self { dim, entries };
        let det = m.determinant();
        if !det.is_one() {
            return Err(Error::DeterminantNotOne(det.to_string()));
        }
        Ok(m)
    }

    /// From integer numerator/denominator pairs, row-major.
    pub fn from_pairs(dim: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        let entries = pairs
            .iter()
            .map(|&(a, b)| {
                if b == 0 {
                    Err(Error::Parse("zero denominator".into()))
                } else {
                    Ok(BigRational::new(a.into(), b.into()))
                }
            })
            .collect::<Result<_>>()?;
        Self::new(dim, entries)
    }

    pub fn from_integers(dim: usize, entries: &[i64]) -> Result<Self> {
        Self::new(dim, entries.iter().map(|&a| BigRational::from_integer(a.into())).collect())
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigRational::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigRational::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// Exact determinant by Gaussian elimination.
    pub fn determinant(&self) -> BigRational {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return BigRational::zero();
            };
            if piv != col {
                for c in 0..n {
                    a.swap(piv * n + c, col * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = &a[r * n + col] / &p;
                for c in col..n {
                    let v = &f * &a[col * n + c];
                    a[r * n + c] -= v;
                }
            }
        }
        det
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let n = self.dim;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigRational::zero();
                for k in 0..n {
                    acc += &self.entries[i * n + k] * &other.entries[k * n + j];
                }
                entries[i * n + j] = acc;
            }
        }
        Ok(Self { dim: n, entries })
    }

    /// Inverse by Gauss-Jordan elimination; exists since det = 1.
    pub fn inverse(&self) -> Self {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r * n + col].is_zero()).expect("det 1");
            for c in 0..n {
                a.swap(piv * n + c, col * n + c);
                inv.swap(piv * n + c, col * n + c);
            }
            let p = a[col * n + col].clone();
            for c in 0..n {
                a[col * n + c] /= &p;
                inv[col * n + c] /= &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for c in 0..n {
                    let (x, y) = (&f * &a[col * n + c], &f * &inv[col * n + c]);
                    a[r * n + c] -= x;
                    inv[r * n + c] -= y;
                }
            }
        }
        Self { dim: n, entries: inv }
    }

    /// Whether `p` divides some denominator.
    pub fn clashes_with(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.entries.iter().any(|e| (e.denom() % &p).is_zero())
    }

    /// Entrywise image `a/b ↦ a·b⁻¹ mod p`.
    pub fn reduce(&self, p: u64) -> Result<FpMatrix> {
        let q = check_prime_modulus(p)?;
        let big = BigInt::from(q);
        let residue = |x: &BigInt| -> u32 {
            let r = x % &big;
            let r = if r.is_negative() { r + &big } else { r };
            r.to_u32().expect("residue below p")
        };
        let mut out = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let d = residue(e.denom());
            let dinv = inv_mod(d, q).ok_or(Error::DenominatorClash(p))?;
            out.push(((residue(e.numer()) as u64 * dinv as u64) % q as u64) as u32);
        }
        FpMatrix::from_residues(p, self.dim, out)
    }

    /// Entries as `a/b` strings, row-major.
    pub fn entry_strings(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| format!("{}/{}", e.numer(), e.denom()))
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
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
                write!(f, "{}", self.entries[r * self.dim + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn parse_rational(tok: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed rational {tok:?}"));
    let (num, den) = match tok.split_once('/') {
        Some((a, b)) => (a, b),
        None => (tok, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// A nonempty list of rational SL_n matrices of one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalTuple {
    dim: usize,
    items: Vec<RationalMatrix>,
}

impl RationalTuple {
    pub fn new(items: Vec<RationalMatrix>) -> Result<Self> {
        let Some(first) = items.first() else {
            return Err(Error::Unsupported("empty rational tuple".into()));
        };
        let dim = first.dim();
        if let Some(bad) = items.iter().find(|m| m.dim() != dim) {
            return Err(Error::DimensionMismatch(dim, bad.dim()));
        }
        Ok(Self { dim, items })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn items(&self) -> &[RationalMatrix] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn clashes_with(&self, p: u64) -> bool {
        self.items.iter().any(|m| m.clashes_with(p))
    }

    /// Applies a Nielsen move exactly over Q.
    pub fn apply_move(&self, m: NielsenMove) -> Result<Self> {
        m.validate(self.len())?;
        let mut items = self.items.clone();
        let pow = |x: &RationalMatrix, s: Sign| if s == Sign::Plus { x.clone() } else { x.inverse() };
        match m {
            NielsenMove::LeftMult(i, j, s) => items[i] = pow(&items[j], s).mul(&items[i])?,
            NielsenMove::RightMult(i, j, s) => items[i] = items[i].mul(&pow(&items[j], s))?,
            NielsenMove::Invert(i) => items[i] = items[i].inverse(),
            NielsenMove::Swap(i, j) => items.swap(i, j),
        }
        Ok(Self { dim: self.dim, items })
    }

    /// Text form: a header `sl <n>` and one matrix per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("sl {}\n", self.dim);
        for m in &self.items {
            s.push_str(&m.entry_strings().join(" "));
            s.push('\n');
        }
        s
    }
}

impl FromStr for RationalTuple {
    type Err = Error;

    /// Header `sl <n>`, then one matrix per line as n² rationals `a/b`,
    /// row-major. Blank lines and `#` comments are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let dim = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["sl", n] => n
                .parse::<usize>()
                .ok()
                .filter(|&n| (1..=8).contains(&n))
                .ok_or_else(|| Error::Parse(format!("bad dimension in header {header:?}")))?,
            _ => return Err(Error::Parse(format!("expected header `sl <n>`, got {header:?}"))),
        };
        let mut items = Vec::new();
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != dim * dim {
                return Err(Error::Parse(format!(
                    "expected {} entries, got {} in {line:?}",
                    dim * dim,
                    toks.len()
                )));
            }
            let entries = toks.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?;
            items.push(RationalMatrix::new(dim, entries)?);
        }
        RationalTuple::new(items)
    }
}

/// Reduction of every entry modulo `p`, as a tuple over SL(n, p).
pub fn reduce_mod_p(t: &RationalTuple, p: u64) -> Result<GeneratingTuple> {
    let group = GroupSpec::sl(t.dim(), p)?;
    let items = t
        .items()
        .iter()
        .map(|m| Ok(Element::Matrix(m.reduce(p)?)))
        .collect::<Result<_>>()?;
    GeneratingTuple::new(group, items)
}

/// Smallest floor accepted for the possibly exceptional primes.
pub const MIN_EXCEPTIONAL_FLOOR: u64 = 3;

/// How candidate primes are chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanConfig {
    /// Primes at or below this are skipped. Raised to
    /// [`MIN_EXCEPTIONAL_FLOOR`] when lower.
    pub exceptional_floor: u64,
    pub max_primes: usize,
    /// Use exactly these primes (still filtered) instead of counting up.
    pub explicit_primes: Option<Vec<u64>>,
}

impl Default for PlanConfig {
    fn default() -> Self {
        Self {
            exceptional_floor: MIN_EXCEPTIONAL_FLOOR,
            max_primes: 10,
            explicit_primes: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePlan {
    pub candidates: Vec<u64>,
    /// Primes skipped because they divide a denominator.
    pub excluded_denominator_primes: BTreeSet<u64>,
    pub exceptional_floor: u64,
    pub max_primes_to_try: usize,
    /// The requested floor, when it had to be raised.
    pub floor_clamped_from: Option<u64>,
}

/// Candidate primes for `t`: increasing, above the floor, not dividing any
/// denominator, at most `max_primes` of them.
pub fn plan_primes(t: &RationalTuple, config: &PlanConfig) -> PrimePlan {
    let floor = config.exceptional_floor.max(MIN_EXCEPTIONAL_FLOOR);
    let clamped = (floor != config.exceptional_floor).then_some(config.exceptional_floor);
    let mut excluded = BTreeSet::new();
    let mut candidates = Vec::new();
    let mut consider = |p: u64, candidates: &mut Vec<u64>| {
        if p <= floor || !is_prime(p) || check_prime_modulus(p).is_err() {
            return;
        }
        if t.clashes_with(p) {
            excluded.insert(p);
        } else {
            candidates.push(p);
        }
    };
    match &config.explicit_primes {
        Some(list) => {
            let mut list = list.clone();
            list.sort_unstable();
            list.dedup();
            for p in list {
                if candidates.len() >= config.max_primes {
                    break;
                }
                consider(p, &mut candidates);
            }
        }
        None => {
            for p in primes_after(floor) {
                if candidates.len() >= config.max_primes || check_prime_modulus(p).is_err() {
                    break;
                }
                consider(p, &mut candidates);
            }
        }
    }
    PrimePlan {
        candidates,
        excluded_denominator_primes: excluded,
        exceptional_floor: floor,
        max_primes_to_try: config.max_primes,
        floor_clamped_from: clamped,
    }
}

/// The standard generators S = [[0,−1],[1,0]] and T = [[1,1],[0,1]] of SL₂(Z).
pub fn standard_sl2z_pair() -> RationalTuple {
    RationalTuple::new(vec![
        RationalMatrix::from_integers(2, &[0, -1, 1, 0]).expect("det 1"),
        RationalMatrix::from_integers(2, &[1, 1, 0, 1]).expect("det 1"),
    ])
    .expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> RationalTuple {
        RationalTuple::new(vec![RationalMatrix::from_pairs(2, &[(1, 1), (1, 2), (0, 1), (1, 1)]).unwrap()]).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let r = reduce_mod_p(&half(), 3).unwrap();
        assert_eq!(r.items()[0], Element::Matrix(FpMatrix::new(3, 2, &[1, 2, 0, 1]).unwrap()));
        assert_eq!(reduce_mod_p(&half(), 2).unwrap_err(), Error::DenominatorClash(2));
        let st = reduce_mod_p(&standard_sl2z_pair(), 5).unwrap();
        assert_eq!(st.items()[0], Element::Matrix(FpMatrix::new(5, 2, &[0, 4, 1, 0]).unwrap()));
    }

    #[test]
    fn determinant_is_exact() {
        let d = RationalMatrix::from_pairs(2, &[(2, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(d.determinant().is_one());
        assert!(matches!(
            RationalMatrix::from_integers(2, &[1, 1, 1, 2]).map(|_| ()),
            Ok(())
        ));
        assert!(matches!(
            RationalMatrix::from_integers(2, &[2, 0, 0, 1]),
            Err(Error::DeterminantNotOne(_))
        ));
        let m = RationalMatrix::from_pairs(3, &[(1, 1), (2, 3), (0, 1), (0, 1), (1, 1), (5, 7), (0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(m.mul(&m.inverse()).unwrap(), RationalMatrix::identity(3));
    }

    #[test]
    fn plans() {
        let plan = plan_primes(&half(), &PlanConfig::default());
        assert_eq!(&plan.candidates[..3], &[5, 7, 11]);
        assert_eq!(plan.candidates.len(), 10);
        let plan = plan_primes(&standard_sl2z_pair(), &PlanConfig { exceptional_floor: 0, ..Default::default() });
        assert_eq!(plan.exceptional_floor, 3);
        assert_eq!(plan.floor_clamped_from, Some(0));
        assert_eq!(&plan.candidates[..3], &[5, 7, 11]);
        let fifth = RationalTuple::new(vec![RationalMatrix::from_pairs(2, &[(1, 1), (1, 35), (0, 1), (1, 1)]).unwrap()]).unwrap();
        let plan = plan_primes(&fifth, &PlanConfig::default());
        assert_eq!(plan.candidates[0], 11);
        assert_eq!(plan.excluded_denominator_primes, BTreeSet::from([5, 7]));
    }

    #[test]
    fn moves_commute_with_reduction() {
        let t = RationalTuple::new(vec![
            RationalMatrix::from_pairs(2, &[(1, 1), (1, 3), (0, 1), (1, 1)]).unwrap(),
            RationalMatrix::from_pairs(2, &[(2, 1), (0, 1), (7, 4), (1, 2)]).unwrap(),
        ])
        .unwrap();
        for m in NielsenMove::all(2) {
            let up = reduce_mod_p(&t.apply_move(m).unwrap(), 11).unwrap();
            let down = crate::nielsen::apply_move(&reduce_mod_p(&t, 11).unwrap(), m).unwrap();
            assert_eq!(up, down, "{m}");
        }
    }

    #[test]
    fn text_round_trip() {
        let text = "sl 2\n# S and T\n0 -1 1 0\n1 1 0 1\n";
        let t: RationalTuple = text.parse().unwrap();
        assert_eq!(t, standard_sl2z_pair());
        assert_eq!(t.to_text().parse::<RationalTuple>().unwrap(), t);
        assert!(matches!("sl 2\n1 1 1 1\n".parse::<RationalTuple>(), Err(Error::DeterminantNotOne(_))));
        assert!(matches!("sl 2\n1 x 0 1\n".parse::<RationalTuple>(), Err(Error::Parse(_))));
        assert!(matches!("gl 2\n1 0 0 1\n".parse::<RationalTuple>(), Err(Error::Parse(_))));
    }
}
