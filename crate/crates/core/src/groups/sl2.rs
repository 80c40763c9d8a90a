//! Structural generation test for SL₂(F_p) and PSL₂(F_p), p ≥ 5.
//!
//! By Dickson's classification a proper subgroup of PSL₂(F_p), p prime, is
//! reducible over F_{p²} (Borel or split/non-split torus), lies in the
//! normalizer of a torus (it permutes the two eigenlines of that torus), or
//! is isomorphic to a subgroup of A₄, S₄ or A₅. The three checks below
//! detect these in turn, the last by a closure capped at 120 times the
//! center size. The preimage in SL₂ of a proper subgroup is proper, so the
//! same test works on matrix lifts of PSL₂ elements.
//!
//! The torus-normalizer check needs one element `h` of the subgroup with
//! `h²` non-central: such an element lies in the torus itself and its two
//! fixed points on P¹(F_{p²}) are the permuted pair. If no generator or
//! pairwise product qualifies, every pair of generators commutes modulo the
//! center and the group is tiny, so the capped closure decides.

use std::collections::HashSet;
use std::fmt;

use super::{GeneratingTuple, GroupSpec};
use crate::error::{Error, Result};
use crate::field::{Fp2Ctx, FpMatrix, ProjectiveMatrix};

/// Outcome of the structural test, naming the obstruction when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sl2Verdict {
    Generates,
    /// Every entry is central.
    Trivial,
    /// All entries fix a common line over F_{p²}.
    CommonEigenvector,
    /// All entries permute a pair of lines over F_{p²}.
    PreservedLinePair,
    /// The capped closure terminated below the group order.
    BoundedSubgroup { order: usize },
}

impl Sl2Verdict {
    pub fn generates(&self) -> bool {
        matches!(self, Sl2Verdict::Generates)
    }
}

impl fmt::Display for Sl2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sl2Verdict::Generates => write!(f, "generates"),
            Sl2Verdict::Trivial => write!(f, "central entries only"),
            Sl2Verdict::CommonEigenvector => write!(f, "common eigenvector"),
            Sl2Verdict::PreservedLinePair => write!(f, "preserved line pair"),
            Sl2Verdict::BoundedSubgroup { order } => write!(f, "bounded subgroup of order {order}"),
        }
    }
}

/// Runs the structural test on det-1 lifts. With `projective` set, the
/// reported bounded order is that of the image in PSL₂.
pub fn sl2_structural_verdict(gens: &[FpMatrix], projective: bool) -> Result<Sl2Verdict> {
    let Some(first) = gens.first() else {
        return Ok(Sl2Verdict::Trivial);
    };
    let p = first.modulus();
    if p < 5 {
        return Err(Error::Unsupported(format!("structural SL₂ test needs p ≥ 5, got {p}")));
    }
    for g in gens {
        if g.dim() != 2 {
            return Err(Error::DimensionMismatch(2, g.dim()));
        }
        if g.modulus() != p {
            return Err(Error::ModulusMismatch(p, g.modulus()));
        }
        if g.determinant() != 1 {
            return Err(Error::DeterminantNotOne(g.determinant().to_string()));
        }
    }
    let moving: Vec<&FpMatrix> = gens.iter().filter(|g| g.scalar_value().is_none()).collect();
    let Some(g0) = moving.first() else {
        return Ok(Sl2Verdict::Trivial);
    };
    let ctx = Fp2Ctx::new(p);

    for z in ctx.fixed_points(g0) {
        if moving.iter().all(|g| ctx.act(g, z) == z) {
            return Ok(Sl2Verdict::CommonEigenvector);
        }
    }

    if let Some(h) = torus_candidate(&moving) {
        if let [z1, z2] = ctx.fixed_points(&h)[..] {
            let preserves = |g: &&FpMatrix| {
                let (w1, w2) = (ctx.act(g, z1), ctx.act(g, z2));
                (w1 == z1 && w2 == z2) || (w1 == z2 && w2 == z1)
            };
            if moving.iter().all(preserves) {
                return Ok(Sl2Verdict::PreservedLinePair);
            }
        }
    }

    let sl_order = p as usize * (p as usize * p as usize - 1);
    let cap = 240;
    match bounded_closure(gens, cap) {
        None => Ok(Sl2Verdict::Generates),
        Some(elems) if elems.len() == sl_order => Ok(Sl2Verdict::Generates),
        Some(elems) => {
            let order = if projective {
                elems
                    .iter()
                    .map(ProjectiveMatrix::canonical)
                    .collect::<HashSet<_>>()
                    .len()
            } else {
                elems.len()
            };
            Ok(Sl2Verdict::BoundedSubgroup { order })
        }
    }
}

fn is_central(m: &FpMatrix) -> bool {
    m.scalar_value().is_some()
}

/// An element with non-central square among the entries and their pairwise
/// products. For det-1 matrices, `h²` is central iff `h` is or `tr h = 0`.
fn torus_candidate(moving: &[&FpMatrix]) -> Option<FpMatrix> {
    let good = |h: &FpMatrix| !is_central(h) && h.trace() != 0;
    if let Some(h) = moving.iter().find(|h| good(h)) {
        return Some((*h).clone());
    }
    for (i, a) in moving.iter().enumerate() {
        for b in &moving[i + 1..] {
            let h = a.mul_unchecked(b);
            if good(&h) {
                return Some(h);
            }
        }
    }
    None
}

/// Subgroup generated by `gens`, or `None` once it exceeds `cap` elements.
fn bounded_closure(gens: &[FpMatrix], cap: usize) -> Option<Vec<FpMatrix>> {
    let id = FpMatrix::identity_unchecked(gens[0].modulus(), 2);
    let mut seen: HashSet<FpMatrix> = HashSet::from([id.clone()]);
    let mut list = vec![id];
    let mut head = 0;
    while head < list.len() {
        let x = list[head].clone();
        head += 1;
        for s in gens {
            let y = x.mul_unchecked(s);
            if seen.insert(y.clone()) {
                if list.len() >= cap {
                    return None;
                }
                list.push(y);
            }
        }
    }
    Some(list)
}

/// Fast generation test for tuples over SL₂(F_p) or PSL₂(F_p), p ≥ 5.
pub fn is_generating_psl2_fast(t: &GeneratingTuple) -> Result<bool> {
    Ok(psl2_verdict(t)?.generates())
}

/// [`sl2_structural_verdict`] applied to a validated tuple.
pub fn psl2_verdict(t: &GeneratingTuple) -> Result<Sl2Verdict> {
    let projective = match t.group() {
        GroupSpec::Sl { n: 2, p } | GroupSpec::Psl { n: 2, p } if *p >= 5 => {
            matches!(t.group(), GroupSpec::Psl { .. })
        }
        g => return Err(Error::Unsupported(format!("structural SL₂ test on {g}"))),
    };
    let mats: Vec<FpMatrix> = t
        .items()
        .iter()
        .map(|x| t.group().matrix_of(x).cloned().ok_or_else(|| Error::NotMember(t.group().to_string())))
        .collect::<Result<_>>()?;
    sl2_structural_verdict(&mats, projective)
}
