//! Redundancy of generating tuples and the redundancy rank m(G).
//!
//! A generating tuple is redundant iff dropping a single entry still
//! generates: any proper generating subset sits inside some (n−1)-subset,
//! and supersets of generating sets generate.

mod random;
mod search;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::primes_after;
use crate::groups::{closure, is_generating, Element, GeneratingTuple, GroupSpec};

pub use random::random_irredundant_search;
pub use search::{
    irredundant_witness, max_irredundant_size, LevelStats, RankKind, RankSearchResult, SearchLimits,
    SearchStats, StopReason, WitnessConstraints, WitnessOutcome,
};
pub(crate) use search::{level_search, LevelMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RedundancyVerdict {
    IrredundantGenerating,
    RedundantGenerating,
    NotGenerating,
}

impl fmt::Display for RedundancyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RedundancyVerdict::IrredundantGenerating => "IrredundantGenerating",
            RedundancyVerdict::RedundantGenerating => "RedundantGenerating",
            RedundancyVerdict::NotGenerating => "NotGenerating",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedundancyReport {
    pub tuple: GeneratingTuple,
    pub generates: bool,
    /// `droppable[i]`: the tuple without entry `i` still generates.
    pub droppable: Vec<bool>,
    pub verdict: RedundancyVerdict,
}

impl RedundancyReport {
    /// First droppable index, if any.
    pub fn first_droppable(&self) -> Option<usize> {
        self.droppable.iter().position(|&d| d)
    }
}

/// Classifies a tuple as irredundant generating, redundant generating, or
/// not generating.
pub fn is_redundant(t: &GeneratingTuple) -> Result<RedundancyReport> {
    let generates = is_generating(t)?;
    let droppable = if generates {
        (0..t.len())
            .map(|i| is_generating(&t.without(i)))
            .collect::<Result<Vec<_>>>()?
    } else {
        vec![false; t.len()]
    };
    let verdict = match (generates, droppable.iter().any(|&d| d)) {
        (false, _) => RedundancyVerdict::NotGenerating,
        (true, true) => RedundancyVerdict::RedundantGenerating,
        (true, false) => RedundancyVerdict::IrredundantGenerating,
    };
    Ok(RedundancyReport {
        tuple: t.clone(),
        generates,
        droppable,
        verdict,
    })
}

/// Irredundant generating `n`-tuple of Z: with q₁,…,qₙ the first `n`
/// primes, `xᵢ = ∏_{j≠i} qⱼ`. Every (n−1)-subtuple shares the missing prime.
pub fn z_witness(n: usize) -> Result<GeneratingTuple> {
    if n == 0 {
        return Err(Error::Unsupported("z_witness needs n ≥ 1".into()));
    }
    let primes: Vec<BigInt> = primes_after(1).take(n).map(BigInt::from).collect();
    let items = (0..n)
        .map(|i| {
            let x = primes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(BigInt::one(), |acc, (_, q)| acc * q);
            Element::Integer(x)
        })
        .collect();
    GeneratingTuple::new(GroupSpec::Integers, items)
}

/// Closure data for a pair of involutions in PSL₂(F_p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionPair {
    pub closure_order: usize,
    pub product_order: u64,
    pub group_order: u128,
}

impl InvolutionPair {
    /// Dihedral of order 2·ord(ab), at most 2(p+1), and below |G|.
    pub fn is_proper_dihedral(&self, p: u32) -> bool {
        self.closure_order as u64 == 2 * self.product_order
            && self.closure_order as u64 <= 2 * (p as u64 + 1)
            && (self.closure_order as u128) < self.group_order
    }
}

/// Closure of two involutions of PSL₂(F_p), p ≥ 5.
pub fn involution_pair(a: &Element, b: &Element) -> Result<InvolutionPair> {
    let (Element::Projective(ma), Element::Projective(_)) = (a, b) else {
        return Err(Error::NotInvolution);
    };
    let p = ma.rep().modulus();
    if ma.rep().dim() != 2 || p < 5 {
        return Err(Error::Unsupported("involution pairs live in PSL₂(F_p), p ≥ 5".into()));
    }
    let g = GroupSpec::psl(2, p as u64)?;
    for x in [a, b] {
        g.check_member(x)?;
        if g.is_identity(x) || !g.is_identity(&g.multiply(x, x)?) {
            return Err(Error::NotInvolution);
        }
    }
    let order = g.order().expect("finite");
    let t = GeneratingTuple::new(g.clone(), vec![a.clone(), b.clone()])?;
    let c = closure(&t, order as usize)?;
    let ab = g.multiply(a, b)?;
    Ok(InvolutionPair {
        closure_order: c.order,
        product_order: g.element_order(&ab, order as u64)?,
        group_order: order,
    })
}

/// Two involutions of PSL₂(F_p), p ≥ 5, generate a proper dihedral subgroup.
pub fn involution_pair_is_proper(a: &Element, b: &Element) -> Result<bool> {
    let p = match a {
        Element::Projective(m) => m.rep().modulus(),
        _ => return Err(Error::NotInvolution),
    };
    Ok(involution_pair(a, b)?.is_proper_dihedral(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{psl_element, sl_element};

    fn ints(v: &[i64]) -> GeneratingTuple {
        GeneratingTuple::new(
            GroupSpec::Integers,
            v.iter().map(|&x| Element::Integer(BigInt::from(x))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn report_examples() {
        let g = GroupSpec::sl(2, 5).unwrap();
        let s = sl_element(2, 5, &[0, -1, 1, 0]).unwrap();
        let t = sl_element(2, 5, &[1, 1, 0, 1]).unwrap();
        let st = GeneratingTuple::new(g.clone(), vec![s.clone(), t.clone()]).unwrap();
        assert_eq!(is_redundant(&st).unwrap().verdict, RedundancyVerdict::IrredundantGenerating);
        let sti = GeneratingTuple::new(g.clone(), vec![s, t, g.identity()]).unwrap();
        let r = is_redundant(&sti).unwrap();
        assert_eq!(r.verdict, RedundancyVerdict::RedundantGenerating);
        assert_eq!(r.droppable, vec![false, false, true]);
        assert_eq!(is_redundant(&ints(&[6, 10, 15])).unwrap().verdict, RedundancyVerdict::IrredundantGenerating);
        assert_eq!(is_redundant(&ints(&[4, 6])).unwrap().verdict, RedundancyVerdict::NotGenerating);
    }

    #[test]
    fn z_witnesses() {
        assert_eq!(z_witness(1).unwrap(), ints(&[1]));
        assert_eq!(z_witness(3).unwrap(), ints(&[15, 10, 6]));
        for n in 2..=8 {
            let r = is_redundant(&z_witness(n).unwrap()).unwrap();
            assert_eq!(r.verdict, RedundancyVerdict::IrredundantGenerating);
        }
        assert!(z_witness(0).is_err());
    }

    #[test]
    fn involutions() {
        let a = psl_element(2, 5, &[0, -1, 1, 0]).unwrap();
        assert_eq!(involution_pair(&a, &a).unwrap().closure_order, 2);
        assert!(involution_pair_is_proper(&a, &a).unwrap());
        let t = psl_element(2, 5, &[1, 1, 0, 1]).unwrap();
        assert_eq!(involution_pair(&a, &t), Err(Error::NotInvolution));
    }
}
