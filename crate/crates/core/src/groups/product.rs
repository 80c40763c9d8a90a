//! Generation in a direct product of two finite simple groups.
//!
//! A subgroup of G₁ × G₂ (both non-abelian simple) that surjects onto each
//! factor is either everything or the graph {(g, f(g))} of an isomorphism
//! f: G₁ → G₂. So a tuple generates iff both projections generate and no
//! isomorphism carries the first coordinates onto the second ones.
//! Isomorphisms PSL₂(F_p) → PSL₂(F_p) are conjugations by PGL₂(F_p);
//! other pairs of equal order fall back to a brute-force search on tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::table::{Ix, TabulatedGroup};
use super::{is_generating, Element, GeneratingTuple, GroupSpec};
use crate::error::{Error, Result};
use crate::field::{FpMatrix, ProjectiveMatrix};

/// Largest order for the brute-force isomorphism search.
pub const BRUTE_FORCE_LIMIT: usize = 1000;

/// An isomorphism between two supported groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isomorphism {
    /// `x ↦ g·x·g⁻¹` on PSL₂(F_p), for `g` a normalized PGL₂ representative.
    Conjugation { g: FpMatrix, g_inv: FpMatrix },
    /// An explicit element map.
    Map(Arc<BTreeMap<Element, Element>>),
}

impl Isomorphism {
    pub fn apply(&self, x: &Element) -> Result<Element> {
        match (self, x) {
            (Isomorphism::Conjugation { g, g_inv }, Element::Projective(m)) => {
                let y = g.mul(m.rep())?.mul(g_inv)?;
                Ok(Element::Projective(ProjectiveMatrix::canonical(&y)))
            }
            (Isomorphism::Map(map), x) => map
                .get(x)
                .cloned()
                .ok_or_else(|| Error::NotMember("isomorphism domain".into())),
            _ => Err(Error::NotMember("isomorphism domain".into())),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Isomorphism::Conjugation { g, .. } => g.scalar_value().is_some(),
            Isomorphism::Map(map) => map.iter().all(|(a, b)| a == b),
        }
    }
}

impl fmt::Display for Isomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "identity");
        }
        match self {
            Isomorphism::Conjugation { g, .. } => write!(f, "conjugation by {g}"),
            Isomorphism::Map(map) => write!(f, "element map on {} elements", map.len()),
        }
    }
}

/// All isomorphisms `g1 → g2`; empty when the groups are not isomorphic.
pub fn enumerate_isomorphisms(g1: &GroupSpec, g2: &GroupSpec) -> Result<Vec<Isomorphism>> {
    if g1.order() != g2.order() {
        return Ok(Vec::new());
    }
    match (g1, g2) {
        (GroupSpec::Psl { n: 2, p }, GroupSpec::Psl { n: 2, p: q }) => {
            if p != q {
                return Ok(Vec::new());
            }
            Ok(pgl2_representatives(*p)
                .into_iter()
                .map(|g| {
                    let g_inv = g.inverse().expect("invertible");
                    Isomorphism::Conjugation { g, g_inv }
                })
                .collect())
        }
        (GroupSpec::Psl { n: 2, .. } | GroupSpec::Cayley(_), GroupSpec::Psl { n: 2, .. } | GroupSpec::Cayley(_)) => {
            brute_force_isomorphisms(g1, g2)
        }
        _ => Err(Error::Unsupported(format!("isomorphisms {g1} → {g2}"))),
    }
}

/// GL₂(F_p) modulo scalars, each matrix scaled so its first nonzero
/// row-major entry is 1. The identity comes first.
pub fn pgl2_representatives(p: u32) -> Vec<FpMatrix> {
    let mut out = Vec::with_capacity((p * (p * p - 1)) as usize);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let first = [a, b, c, d].into_iter().find(|&v| v != 0);
                    if first != Some(1) {
                        continue;
                    }
                    let m = FpMatrix::from_parts(p, 2, vec![a, b, c, d]);
                    if m.determinant() != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    let id = out.iter().position(|m| m.is_identity()).expect("identity");
    let idm = out.remove(id);
    out.insert(0, idm);
    out
}

/// Every isomorphism between two tabulated groups, found by fixing a small
/// generating set of the domain and extending each order-compatible choice
/// of images along a spanning tree of its Cayley graph.
fn brute_force_isomorphisms(g1: &GroupSpec, g2: &GroupSpec) -> Result<Vec<Isomorphism>> {
    let n = g1.order().unwrap_or(0) as usize;
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            order: n as u128,
            limit: BRUTE_FORCE_LIMIT as u128,
        });
    }
    let a = TabulatedGroup::from_spec(g1)?;
    let b = TabulatedGroup::from_spec(g2)?;
    let gens = small_generating_set(&a);

    let mut parent = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut order_visit = vec![0 as Ix];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order_visit.len() {
        let x = order_visit[head];
        head += 1;
        for (gi, &s) in gens.iter().enumerate() {
            let y = a.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = x as usize;
                via[y as usize] = gi;
                order_visit.push(y);
            }
        }
    }

    let candidates: Vec<Vec<Ix>> = gens
        .iter()
        .map(|&s| (0..n as Ix).filter(|&t| b.element_order(t) == a.element_order(s)).collect())
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        if candidates.iter().all(|c| !c.is_empty()) {
            let images: Vec<Ix> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
            if let Some(map) = extend(&a, &b, &gens, &images, &order_visit, &parent, &via) {
                let pairs = (0..n)
                    .map(|x| (a.element(x as Ix).clone(), b.element(map[x]).clone()))
                    .collect();
                out.push(Isomorphism::Map(Arc::new(pairs)));
            }
        } else {
            break;
        }
        for i in 0..choice.len() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    Ok(out)
}

fn extend(
    a: &TabulatedGroup,
    b: &TabulatedGroup,
    gens: &[Ix],
    images: &[Ix],
    visit: &[Ix],
    parent: &[usize],
    via: &[usize],
) -> Option<Vec<Ix>> {
    let n = a.order();
    let mut map = vec![Ix::MAX; n];
    map[0] = 0;
    for &y in &visit[1..] {
        map[y as usize] = b.mul(map[parent[y as usize]], images[via[y as usize]]);
    }
    let mut hit = vec![false; n];
    for &v in &map {
        if std::mem::replace(&mut hit[v as usize], true) {
            return None;
        }
    }
    // A bijection respecting right multiplication by generators is a homomorphism.
    for x in 0..n as Ix {
        for (gi, &s) in gens.iter().enumerate() {
            if map[a.mul(x, s) as usize] != b.mul(map[x as usize], images[gi]) {
                return None;
            }
        }
    }
    Some(map)
}

fn small_generating_set(g: &TabulatedGroup) -> Vec<Ix> {
    let n = g.order() as Ix;
    for x in (1..n).rev().take(8) {
        for y in 1..n {
            if g.generates(&[x, y]) {
                return vec![x, y];
            }
        }
    }
    g.table().generators()
}

/// Why a product tuple does or does not generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductReason {
    /// Both projections generate and the factors are not isomorphic.
    NonIsomorphicFactors,
    /// Both projections generate and no isomorphism aligns them.
    NoAligningIsomorphism { isomorphisms_checked: usize },
    /// The projection to this factor (1-based) is a proper subgroup.
    ProjectionProper { factor: usize },
    /// The tuple lies in the graph of this isomorphism.
    GraphOfIsomorphism { isomorphism: Isomorphism },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductVerdict {
    pub generates: bool,
    pub reason: ProductReason,
}

impl fmt::Display for ProductReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductReason::NonIsomorphicFactors => write!(f, "projections generate, factors not isomorphic"),
            ProductReason::NoAligningIsomorphism { isomorphisms_checked } => {
                write!(f, "projections generate, none of {isomorphisms_checked} isomorphisms aligns them")
            }
            ProductReason::ProjectionProper { factor } => write!(f, "projection {factor} proper"),
            ProductReason::GraphOfIsomorphism { isomorphism } if isomorphism.is_identity() => {
                write!(f, "graph of identity")
            }
            ProductReason::GraphOfIsomorphism { isomorphism } => {
                write!(f, "graph of isomorphism ({isomorphism})")
            }
        }
    }
}

fn is_simple_kind(g: &GroupSpec) -> bool {
    matches!(g, GroupSpec::Psl { n: 2, p } if *p >= 5) || matches!(g, GroupSpec::Cayley(_))
}

/// Goursat-type generation test for a tuple over a product of two finite
/// simple groups. Cayley-table factors are assumed simple.
pub fn product_generates(t: &GeneratingTuple) -> Result<ProductVerdict> {
    let GroupSpec::Product(fs) = t.group() else {
        return Err(Error::Unsupported(format!("product test on {}", t.group())));
    };
    if fs.len() != 2 || !fs.iter().all(is_simple_kind) {
        return Err(Error::Unsupported(format!("product test on {}", t.group())));
    }
    let mut projections = Vec::with_capacity(2);
    for (k, f) in fs.iter().enumerate() {
        let items = t
            .items()
            .iter()
            .map(|x| match x {
                Element::Tuple(c) => c[k].clone(),
                _ => unreachable!("validated product tuple"),
            })
            .collect();
        let proj = GeneratingTuple::new_unchecked(f.clone(), items);
        if !is_generating(&proj)? {
            return Ok(ProductVerdict {
                generates: false,
                reason: ProductReason::ProjectionProper { factor: k + 1 },
            });
        }
        projections.push(proj);
    }
    let isos = enumerate_isomorphisms(&fs[0], &fs[1])?;
    if isos.is_empty() {
        return Ok(ProductVerdict {
            generates: true,
            reason: ProductReason::NonIsomorphicFactors,
        });
    }
    let checked = isos.len();
    for iso in isos {
        let aligned = projections[0]
            .items()
            .iter()
            .zip(projections[1].items())
            .try_fold(true, |ok, (x, y)| Ok::<_, Error>(ok && iso.apply(x)? == *y))?;
        if aligned {
            return Ok(ProductVerdict {
                generates: false,
                reason: ProductReason::GraphOfIsomorphism { isomorphism: iso },
            });
        }
    }
    Ok(ProductVerdict {
        generates: true,
        reason: ProductReason::NoAligningIsomorphism {
            isomorphisms_checked: checked,
        },
    })
}
