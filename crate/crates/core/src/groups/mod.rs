//! Finite groups, their elements, and generation testing.
//!
//! [`closure`] is the single source of truth for every generation claim.
//! The structural SL₂ test in [`sl2`] and the product test in [`product`]
//! are fast paths checked against it.

mod descriptor;
pub mod product;
pub mod sl2;
pub mod table;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{check_prime_modulus, FpMatrix, ProjectiveMatrix};

pub use product::{enumerate_isomorphisms, pgl2_representatives, product_generates, Isomorphism, ProductReason, ProductVerdict};
pub use sl2::{is_generating_psl2_fast, psl2_verdict, sl2_structural_verdict, Sl2Verdict};
pub use table::{CayleyTable, Ix, SubgroupBits, TabulatedGroup, TABLE_LIMIT};

/// Closures larger than this are refused by the element-level oracle.
pub const CLOSURE_LIMIT: u128 = 20_000_000;

/// A supported group.
#[derive(Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// SL(n, p).
    Sl { n: usize, p: u32 },
    /// PSL(n, p) = SL(n, p) / center.
    Psl { n: usize, p: u32 },
    /// (Z/m)ᵏ, written additively.
    CyclicPower { modulus: u32, rank: usize },
    /// The integers under addition; generation means gcd 1.
    Integers,
    /// Direct product of the factors.
    Product(Vec<GroupSpec>),
    /// A group given by an explicit multiplication table.
    Cayley(Arc<CayleyTable>),
}

/// An element of some [`GroupSpec`]. The variant mirrors the group kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Matrix(FpMatrix),
    Projective(ProjectiveMatrix),
    Vector(Vec<u32>),
    Integer(BigInt),
    Tuple(Vec<Element>),
    Table(u32),
}

impl GroupSpec {
    pub fn sl(n: usize, p: u64) -> Result<Self> {
        Ok(Self::Sl {
            n: check_dim(n)?,
            p: check_prime_modulus(p)?,
        })
    }

    pub fn psl(n: usize, p: u64) -> Result<Self> {
        Ok(Self::Psl {
            n: check_dim(n)?,
            p: check_prime_modulus(p)?,
        })
    }

    pub fn cyclic_power(modulus: u32, rank: usize) -> Result<Self> {
        if modulus < 2 || modulus > u16::MAX as u32 {
            return Err(Error::Unsupported(format!("cyclic modulus {modulus}")));
        }
        Ok(Self::CyclicPower { modulus, rank })
    }

    pub fn product(factors: Vec<GroupSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Unsupported("empty product".into()));
        }
        if factors.iter().any(|f| matches!(f, GroupSpec::Integers)) {
            return Err(Error::Unsupported("products with Z".into()));
        }
        Ok(Self::Product(factors))
    }

    pub fn cayley(table: CayleyTable) -> Self {
        Self::Cayley(Arc::new(table))
    }

    /// Exact order, `None` for the integers.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupSpec::Sl { n, p } => Some(sl_order(*n, *p)),
            GroupSpec::Psl { n, p } => Some(sl_order(*n, *p) / scalar_center(*n, *p) as u128),
            GroupSpec::CyclicPower { modulus, rank } => Some((*modulus as u128).pow(*rank as u32)),
            GroupSpec::Integers => None,
            GroupSpec::Product(fs) => fs.iter().map(|f| f.order()).product(),
            GroupSpec::Cayley(t) => Some(t.order() as u128),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Size of the scalar center of the matrix representation. One for
    /// every kind other than `Sl`.
    pub fn center_size(&self) -> usize {
        match self {
            GroupSpec::Sl { n, p } => scalar_center(*n, *p) as usize,
            _ => 1,
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupSpec::Sl { n, p } => Element::Matrix(FpMatrix::identity_unchecked(*p, *n)),
            GroupSpec::Psl { n, p } => {
                Element::Projective(ProjectiveMatrix::canonical(&FpMatrix::identity_unchecked(*p, *n)))
            }
            GroupSpec::CyclicPower { rank, .. } => Element::Vector(vec![0; *rank]),
            GroupSpec::Integers => Element::Integer(BigInt::zero()),
            GroupSpec::Product(fs) => Element::Tuple(fs.iter().map(|f| f.identity()).collect()),
            GroupSpec::Cayley(t) => Element::Table(t.identity() as u32),
        }
    }

    /// Membership check: determinant one, residues in range, matching shape.
    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (GroupSpec::Sl { n, p }, Element::Matrix(m)) => {
                m.dim() == *n && m.modulus() == *p && m.determinant() == 1
            }
            (GroupSpec::Psl { n, p }, Element::Projective(m)) => {
                let r = m.rep();
                r.dim() == *n
                    && r.modulus() == *p
                    && r.determinant() == 1
                    && ProjectiveMatrix::canonical(r) == *m
            }
            (GroupSpec::CyclicPower { modulus, rank }, Element::Vector(v)) => {
                v.len() == *rank && v.iter().all(|&c| c < *modulus)
            }
            (GroupSpec::Integers, Element::Integer(_)) => true,
            (GroupSpec::Product(fs), Element::Tuple(xs)) => {
                fs.len() == xs.len() && fs.iter().zip(xs).all(|(f, x)| f.contains(x))
            }
            (GroupSpec::Cayley(t), Element::Table(i)) => (*i as usize) < t.order(),
            _ => false,
        }
    }

    pub fn check_member(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotMember(self.to_string()))
        }
    }

    /// Group operation. For the additive kinds this is addition.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        match (self, a, b) {
            (GroupSpec::Sl { .. }, Element::Matrix(x), Element::Matrix(y)) => {
                Ok(Element::Matrix(x.mul(y)?))
            }
            (GroupSpec::Psl { .. }, Element::Projective(x), Element::Projective(y)) => {
                Ok(Element::Projective(x.mul(y)?))
            }
            (GroupSpec::CyclicPower { modulus, .. }, Element::Vector(x), Element::Vector(y)) => {
                if x.len() != y.len() {
                    return Err(Error::DimensionMismatch(x.len(), y.len()));
                }
                Ok(Element::Vector(
                    x.iter().zip(y).map(|(a, b)| (a + b) % modulus).collect(),
                ))
            }
            (GroupSpec::Integers, Element::Integer(x), Element::Integer(y)) => {
                Ok(Element::Integer(x + y))
            }
            (GroupSpec::Product(fs), Element::Tuple(xs), Element::Tuple(ys)) => {
                if xs.len() != fs.len() || ys.len() != fs.len() {
                    return Err(Error::NotMember(self.to_string()));
                }
                Ok(Element::Tuple(
                    fs.iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(f, (x, y))| f.multiply(x, y))
                        .collect::<Result<_>>()?,
                ))
            }
            (GroupSpec::Cayley(t), Element::Table(x), Element::Table(y)) => {
                Ok(Element::Table(t.mul(*x as Ix, *y as Ix) as u32))
            }
            _ => Err(Error::NotMember(self.to_string())),
        }
    }

    pub fn inverse(&self, a: &Element) -> Result<Element> {
        match (self, a) {
            (GroupSpec::Sl { .. }, Element::Matrix(x)) => Ok(Element::Matrix(x.inverse()?)),
            (GroupSpec::Psl { .. }, Element::Projective(x)) => Ok(Element::Projective(x.inverse())),
            (GroupSpec::CyclicPower { modulus, .. }, Element::Vector(x)) => Ok(Element::Vector(
                x.iter().map(|&c| (modulus - c) % modulus).collect(),
            )),
            (GroupSpec::Integers, Element::Integer(x)) => Ok(Element::Integer(-x)),
            (GroupSpec::Product(fs), Element::Tuple(xs)) if xs.len() == fs.len() => {
                Ok(Element::Tuple(
                    fs.iter().zip(xs).map(|(f, x)| f.inverse(x)).collect::<Result<_>>()?,
                ))
            }
            (GroupSpec::Cayley(t), Element::Table(x)) => Ok(Element::Table(t.inv(*x as Ix) as u32)),
            _ => Err(Error::NotMember(self.to_string())),
        }
    }

    pub fn is_identity(&self, a: &Element) -> bool {
        match a {
            Element::Projective(m) => m.is_identity(),
            _ => *a == self.identity(),
        }
    }

    /// Order of an element; `order_cap` bounds the search.
    pub fn element_order(&self, a: &Element, order_cap: u64) -> Result<u64> {
        self.check_member(a)?;
        match a {
            Element::Matrix(m) => m.order(order_cap),
            Element::Projective(m) => m.order(order_cap),
            Element::Integer(x) => {
                if x.is_zero() {
                    Ok(1)
                } else {
                    Err(Error::OrderCapExceeded(order_cap))
                }
            }
            _ => {
                let mut acc = a.clone();
                let mut k = 1;
                while !self.is_identity(&acc) {
                    if k >= order_cap {
                        return Err(Error::OrderCapExceeded(order_cap));
                    }
                    acc = self.multiply(&acc, a)?;
                    k += 1;
                }
                Ok(k)
            }
        }
    }

    /// `g·x·g⁻¹`.
    pub fn conjugate(&self, x: &Element, g: &Element) -> Result<Element> {
        let gx = self.multiply(g, x)?;
        self.multiply(&gx, &self.inverse(g)?)
    }

    /// A fixed generating set: elementary transvections for SL/PSL, the
    /// standard basis for (Z/m)ᵏ, factor generators embedded for products.
    pub fn standard_generators(&self) -> Vec<Element> {
        match self {
            GroupSpec::Sl { n, p } | GroupSpec::Psl { n, p } => {
                let mut gens = Vec::new();
                for i in 0..*n {
                    for j in 0..*n {
                        if i != j {
                            let mut m = FpMatrix::identity_unchecked(*p, *n).entries().to_vec();
                            m[i * n + j] = 1;
                            let m = FpMatrix::from_parts(*p, *n, m);
                            gens.push(match self {
                                GroupSpec::Sl { .. } => Element::Matrix(m),
                                _ => Element::Projective(ProjectiveMatrix::canonical(&m)),
                            });
                        }
                    }
                }
                gens
            }
            GroupSpec::CyclicPower { rank, .. } => (0..*rank)
                .map(|i| {
                    let mut v = vec![0; *rank];
                    v[i] = 1;
                    Element::Vector(v)
                })
                .collect(),
            GroupSpec::Integers => vec![Element::Integer(BigInt::one())],
            GroupSpec::Product(fs) => {
                let ids: Vec<Element> = fs.iter().map(|f| f.identity()).collect();
                let mut gens = Vec::new();
                for (i, f) in fs.iter().enumerate() {
                    for g in f.standard_generators() {
                        let mut comps = ids.clone();
                        comps[i] = g;
                        gens.push(Element::Tuple(comps));
                    }
                }
                gens
            }
            GroupSpec::Cayley(t) => t.generators().into_iter().map(|g| Element::Table(g as u32)).collect(),
        }
    }

    /// Every element of a finite group, sorted.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let order = self.order().ok_or_else(|| Error::Unsupported("infinite group".into()))?;
        let t = GeneratingTuple::new(self.clone(), self.standard_generators())?;
        let c = closure(&t, order as usize)?;
        debug_assert_eq!(c.order as u128, order);
        Ok(c.elements)
    }

    /// Matrix lift of a (P)SL element.
    pub(crate) fn matrix_of<'a>(&self, x: &'a Element) -> Option<&'a FpMatrix> {
        match x {
            Element::Matrix(m) => Some(m),
            Element::Projective(m) => Some(m.rep()),
            _ => None,
        }
    }
}

fn check_dim(n: usize) -> Result<usize> {
    if n == 0 || n > 8 {
        return Err(Error::Unsupported(format!("matrix dimension {n}")));
    }
    Ok(n)
}

/// Number of n-th roots of unity in F_p.
pub(crate) fn scalar_center(n: usize, p: u32) -> u32 {
    num_integer::gcd(n as u32, p - 1)
}

/// |SL(n, p)| = p^{n(n−1)/2} ∏_{i=2}^{n} (pⁱ − 1).
pub fn sl_order(n: usize, p: u32) -> u128 {
    let p = p as u128;
    let mut order = p.pow((n * (n - 1) / 2) as u32);
    for i in 2..=n as u32 {
        order *= p.pow(i) - 1;
    }
    order
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sl { n, p } => write!(f, "sl{n}:{p}"),
            GroupSpec::Psl { n, p } => write!(f, "psl{n}:{p}"),
            GroupSpec::CyclicPower { modulus, rank } => write!(f, "cyclic:{modulus}^{rank}"),
            GroupSpec::Integers => write!(f, "z"),
            GroupSpec::Product(fs) => {
                write!(f, "prod(")?;
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ")")
            }
            GroupSpec::Cayley(t) => write!(f, "cayley:{}", t.order()),
        }
    }
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Matrix(m) => write!(f, "{m}"),
            Element::Projective(m) => write!(f, "±{m}"),
            Element::Vector(v) => {
                write!(f, "(")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            Element::Integer(x) => write!(f, "{x}"),
            Element::Tuple(xs) => {
                write!(f, "<")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ">")
            }
            Element::Table(i) => write!(f, "#{i}"),
        }
    }
}

/// An ordered tuple `X ∈ Gⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingTuple {
    group: GroupSpec,
    items: Vec<Element>,
}

impl GeneratingTuple {
    /// Validates that every item belongs to `group`.
    pub fn new(group: GroupSpec, items: Vec<Element>) -> Result<Self> {
        for x in &items {
            group.check_member(x)?;
        }
        Ok(Self { group, items })
    }

    pub(crate) fn new_unchecked(group: GroupSpec, items: Vec<Element>) -> Self {
        Self { group, items }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn items(&self) -> &[Element] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The tuple with entry `index` removed.
    pub fn without(&self, index: usize) -> Self {
        let mut items = self.items.clone();
        items.remove(index);
        Self::new_unchecked(self.group.clone(), items)
    }

    pub fn into_items(self) -> Vec<Element> {
        self.items
    }
}

impl fmt::Display for GeneratingTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// The subgroup generated by a tuple, as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClosure {
    pub elements: Vec<Element>,
    pub order: usize,
    pub generator_count: usize,
}

/// Breadth-first closure of the tuple under right multiplication by its
/// entries. Fails with `CapExceeded` once more than `cap` elements are found.
pub fn closure(t: &GeneratingTuple, cap: usize) -> Result<SubgroupClosure> {
    let g = t.group();
    let Some(order) = g.order() else {
        return Err(Error::Unsupported("closure in an infinite group".into()));
    };
    if order > CLOSURE_LIMIT && (cap as u128) > CLOSURE_LIMIT {
        return Err(Error::TooLarge {
            order,
            limit: CLOSURE_LIMIT,
        });
    }
    let cap = cap.max(1);
    let gens: Vec<&Element> = t.items().iter().filter(|x| !g.is_identity(x)).collect();
    let identity = g.identity();
    let mut seen: HashSet<Element> = HashSet::new();
    seen.insert(identity.clone());
    let mut list = vec![identity];
    let mut head = 0;
    while head < list.len() {
        let current = list[head].clone();
        head += 1;
        for s in &gens {
            let next = g.multiply(&current, s)?;
            if !seen.contains(&next) {
                if list.len() >= cap {
                    return Err(Error::CapExceeded { visited: list.len() + 1 });
                }
                seen.insert(next.clone());
                list.push(next);
            }
        }
    }
    list.sort();
    Ok(SubgroupClosure {
        order: list.len(),
        elements: list,
        generator_count: t.len(),
    })
}

/// How [`is_generating_with`] decides generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenerationStrategy {
    /// Use the structural test for (P)SL₂(F_p), p ≥ 5.
    pub fast_sl2: bool,
}

impl Default for GenerationStrategy {
    fn default() -> Self {
        Self { fast_sl2: true }
    }
}

/// Whether the tuple generates its group.
pub fn is_generating(t: &GeneratingTuple) -> Result<bool> {
    is_generating_with(t, GenerationStrategy::default())
}

pub fn is_generating_with(t: &GeneratingTuple, strategy: GenerationStrategy) -> Result<bool> {
    match t.group() {
        GroupSpec::Integers => Ok(integer_gcd(t.items()).is_one()),
        GroupSpec::Sl { n: 2, p } | GroupSpec::Psl { n: 2, p } if strategy.fast_sl2 && *p >= 5 => {
            is_generating_psl2_fast(t)
        }
        g => {
            let order = g.order().expect("finite") as usize;
            match closure(t, order) {
                Ok(c) => Ok(c.order == order),
                Err(Error::CapExceeded { .. }) => Ok(true),
                Err(e) => Err(e),
            }
        }
    }
}

/// gcd of the absolute values of integer entries; zero for the empty tuple.
pub fn integer_gcd(items: &[Element]) -> BigInt {
    items.iter().fold(BigInt::zero(), |acc, x| match x {
        Element::Integer(v) => acc.gcd(&v.abs()),
        _ => acc,
    })
}

/// Entrywise image in PSL(n, p) of a tuple over SL(n, p).
pub fn project_to_psl(t: &GeneratingTuple) -> Result<GeneratingTuple> {
    let GroupSpec::Sl { n, p } = t.group() else {
        return Err(Error::Unsupported(format!("projection from {}", t.group())));
    };
    let items = t
        .items()
        .iter()
        .map(|x| match x {
            Element::Matrix(m) => Element::Projective(ProjectiveMatrix::canonical(m)),
            _ => unreachable!("validated SL tuple"),
        })
        .collect();
    Ok(GeneratingTuple::new_unchecked(GroupSpec::Psl { n: *n, p: *p }, items))
}

/// Convenience constructor for an SL(n, p) element from signed integers.
pub fn sl_element(n: usize, p: u64, entries: &[i64]) -> Result<Element> {
    let m = FpMatrix::new(p, n, entries)?;
    if m.determinant() != 1 {
        return Err(Error::DeterminantNotOne(m.determinant().to_string()));
    }
    Ok(Element::Matrix(m))
}

/// Convenience constructor for a PSL(n, p) element from signed integers.
pub fn psl_element(n: usize, p: u64, entries: &[i64]) -> Result<Element> {
    match sl_element(n, p, entries)? {
        Element::Matrix(m) => Ok(Element::Projective(ProjectiveMatrix::canonical(&m))),
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(n_p: u64, projective: bool) -> GeneratingTuple {
        let make = if projective { psl_element } else { sl_element };
        let g = if projective {
            GroupSpec::psl(2, n_p).unwrap()
        } else {
            GroupSpec::sl(2, n_p).unwrap()
        };
        GeneratingTuple::new(
            g,
            vec![make(2, n_p, &[0, -1, 1, 0]).unwrap(), make(2, n_p, &[1, 1, 0, 1]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(GroupSpec::sl(2, 5).unwrap().order(), Some(120));
        assert_eq!(GroupSpec::psl(2, 5).unwrap().order(), Some(60));
        assert_eq!(GroupSpec::psl(2, 7).unwrap().order(), Some(168));
        assert_eq!(GroupSpec::sl(3, 3).unwrap().order(), Some(5616));
        assert_eq!(GroupSpec::psl(3, 7).unwrap().order(), Some(sl_order(3, 7) / 3));
        assert_eq!(GroupSpec::cyclic_power(5, 3).unwrap().order(), Some(125));
        let prod = GroupSpec::product(vec![
            GroupSpec::psl(2, 5).unwrap(),
            GroupSpec::psl(2, 7).unwrap(),
        ])
        .unwrap();
        assert_eq!(prod.order(), Some(10080));
        assert_eq!(GroupSpec::Integers.order(), None);
    }

    #[test]
    fn closure_examples() {
        let empty = GeneratingTuple::new(GroupSpec::psl(2, 5).unwrap(), vec![]).unwrap();
        assert_eq!(closure(&empty, 100).unwrap().order, 1);
        assert_eq!(closure(&st(5, false), 1000).unwrap().order, 120);
        let t7 = GeneratingTuple::new(
            GroupSpec::sl(2, 7).unwrap(),
            vec![sl_element(2, 7, &[1, 1, 0, 1]).unwrap()],
        )
        .unwrap();
        assert_eq!(closure(&t7, 1000).unwrap().order, 7);
        assert_eq!(closure(&st(5, false), 50), Err(Error::CapExceeded { visited: 51 }));
    }

    #[test]
    fn standard_pair_generates() {
        for p in [3u64, 5, 7, 13] {
            let c = closure(&st(p, false), 1 << 20).unwrap();
            assert_eq!(c.order as u128, sl_order(2, p as u32));
        }
    }

    #[test]
    fn generation_examples() {
        let z = GeneratingTuple::new(
            GroupSpec::Integers,
            [6, 10, 15].iter().map(|&v| Element::Integer(BigInt::from(v))).collect(),
        )
        .unwrap();
        assert!(is_generating(&z).unwrap());
        assert!(is_generating(&st(5, false)).unwrap());
        let c = GroupSpec::cyclic_power(5, 3).unwrap();
        let t = GeneratingTuple::new(
            c,
            vec![Element::Vector(vec![1, 0, 0]), Element::Vector(vec![0, 1, 0])],
        )
        .unwrap();
        assert!(!is_generating(&t).unwrap());
    }

    #[test]
    fn projection() {
        let proj = project_to_psl(&st(5, false)).unwrap();
        assert_eq!(closure(&proj, 1000).unwrap().order, 60);
        let minus = GeneratingTuple::new(
            GroupSpec::sl(2, 5).unwrap(),
            vec![sl_element(2, 5, &[-1, 0, 0, -1]).unwrap()],
        )
        .unwrap();
        let pm = project_to_psl(&minus).unwrap();
        assert!(pm.group().is_identity(&pm.items()[0]));
    }

    #[test]
    fn membership_is_validated() {
        let g = GroupSpec::sl(2, 5).unwrap();
        let bad = Element::Matrix(FpMatrix::new(5, 2, &[2, 0, 0, 1]).unwrap());
        assert!(GeneratingTuple::new(g.clone(), vec![bad]).is_err());
        assert!(GeneratingTuple::new(g, vec![Element::Vector(vec![1])]).is_err());
    }

    #[test]
    fn element_orders() {
        let g = GroupSpec::sl(2, 5).unwrap();
        let h = GroupSpec::psl(2, 5).unwrap();
        let minus = sl_element(2, 5, &[-1, 0, 0, -1]).unwrap();
        assert_eq!(g.element_order(&minus, 200).unwrap(), 2);
        let pm = psl_element(2, 5, &[-1, 0, 0, -1]).unwrap();
        assert_eq!(h.element_order(&pm, 200).unwrap(), 1);
        let c = GroupSpec::cyclic_power(6, 2).unwrap();
        assert_eq!(c.element_order(&Element::Vector(vec![2, 3]), 100).unwrap(), 6);
    }
}
