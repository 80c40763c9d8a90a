//! Irredundancy of reductions at several primes. A tuple that is redundant
//! at all large primes is redundant over Q, so consistent redundancy is
//! evidence for redundancy and consistent irredundancy is evidence against.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{reduce_mod_p, PrimePlan, RationalTuple};
use crate::error::{Error, Result};
use crate::groups::{is_generating, TABLE_LIMIT};
use crate::nielsen::{is_nielsen_redundant, NielsenVerdict};
use crate::redundancy::{is_redundant, RedundancyVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvidenceSummary {
    /// Irredundant at every prime where the reduction generates.
    AllIrredundant,
    /// Redundant at every prime where the reduction generates.
    EventuallyRedundant,
    Mixed,
    /// No tested prime gave a generating reduction, or none had a verdict.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEvidence {
    pub prime: u64,
    pub generates: bool,
    /// `Some(true)` irredundant, `Some(false)` redundant, `None` unknown.
    pub irredundant: Option<bool>,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrredundancyEvidence {
    /// `irredundancy` or `nielsen`.
    pub kind: String,
    pub per_prime: Vec<PrimeEvidence>,
    pub summary: EvidenceSummary,
}

fn summarize(per_prime: &[PrimeEvidence]) -> EvidenceSummary {
    let known: Vec<bool> = per_prime.iter().filter(|e| e.generates).filter_map(|e| e.irredundant).collect();
    if known.is_empty() {
        EvidenceSummary::Inconclusive
    } else if known.iter().all(|&b| b) {
        EvidenceSummary::AllIrredundant
    } else if known.iter().all(|&b| !b) {
        EvidenceSummary::EventuallyRedundant
    } else {
        EvidenceSummary::Mixed
    }
}

fn first_primes(plan: &PrimePlan, k: usize) -> Result<&[u64]> {
    if plan.candidates.len() < k {
        return Err(Error::NotEnoughPrimes {
            wanted: k,
            found: plan.candidates.len(),
        });
    }
    Ok(&plan.candidates[..k])
}

/// Redundancy verdicts for the reductions at the first `k` planned primes.
pub fn assess_irredundancy(t: &RationalTuple, plan: &PrimePlan, k: usize) -> Result<IrredundancyEvidence> {
    let per_prime = first_primes(plan, k)?
        .par_iter()
        .map(|&p| {
            let r = is_redundant(&reduce_mod_p(t, p)?)?;
            Ok(PrimeEvidence {
                prime: p,
                generates: r.generates,
                irredundant: match r.verdict {
                    RedundancyVerdict::IrredundantGenerating => Some(true),
                    RedundancyVerdict::RedundantGenerating => Some(false),
                    RedundancyVerdict::NotGenerating => None,
                },
                verdict: r.verdict.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IrredundancyEvidence {
        kind: "irredundancy".into(),
        summary: summarize(&per_prime),
        per_prime,
    })
}

/// Nielsen verdicts for the reductions at the first `k` planned primes.
/// Every reduction must generate. Primes whose SL(n, F_p) is too large to
/// tabulate, or whose orbit search exceeds `max_visited`, report `Unknown`.
pub fn assess_nielsen_irredundancy(
    t: &RationalTuple,
    plan: &PrimePlan,
    k: usize,
    max_visited: usize,
) -> Result<IrredundancyEvidence> {
    let primes = first_primes(plan, k)?;
    let reduced = primes
        .iter()
        .map(|&p| reduce_mod_p(t, p))
        .collect::<Result<Vec<_>>>()?;
    for r in &reduced {
        if !is_generating(r)? {
            return Err(Error::NotGenerating);
        }
    }
    let per_prime = primes
        .par_iter()
        .zip(reduced.par_iter())
        .map(|(&p, r)| {
            let order = r.group().order().expect("finite");
            let verdict = if order > TABLE_LIMIT as u128 {
                NielsenVerdict::Unknown
            } else {
                is_nielsen_redundant(r, max_visited)?.verdict
            };
            Ok(PrimeEvidence {
                prime: p,
                generates: true,
                irredundant: match verdict {
                    NielsenVerdict::NielsenIrredundant => Some(true),
                    NielsenVerdict::NielsenRedundant { .. } => Some(false),
                    NielsenVerdict::Unknown => None,
                },
                verdict: verdict.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IrredundancyEvidence {
        kind: "nielsen".into(),
        summary: summarize(&per_prime),
        per_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::{plan_primes, standard_sl2z_pair, PlanConfig, RationalMatrix};

    #[test]
    fn standard_pair_is_irredundant_everywhere() {
        let t = standard_sl2z_pair();
        let plan = plan_primes(&t, &PlanConfig::default());
        let e = assess_irredundancy(&t, &plan, 4).unwrap();
        assert_eq!(e.summary, EvidenceSummary::AllIrredundant);
        assert_eq!(e.per_prime.iter().map(|x| x.prime).collect::<Vec<_>>(), vec![5, 7, 11, 13]);
        let n = assess_nielsen_irredundancy(&t, &plan, 3, 100_000).unwrap();
        assert_eq!(n.summary, EvidenceSummary::AllIrredundant);
        assert!(matches!(
            assess_irredundancy(&t, &plan, 11),
            Err(Error::NotEnoughPrimes { wanted: 11, found: 10 })
        ));
    }

    #[test]
    fn appending_the_identity_is_redundant() {
        let mut items = standard_sl2z_pair().items().to_vec();
        items.push(RationalMatrix::identity(2));
        let t = RationalTuple::new(items).unwrap();
        let plan = plan_primes(&t, &PlanConfig::default());
        assert_eq!(assess_irredundancy(&t, &plan, 3).unwrap().summary, EvidenceSummary::EventuallyRedundant);
        let n = assess_nielsen_irredundancy(&t, &plan, 3, 1000).unwrap();
        assert_eq!(n.summary, EvidenceSummary::EventuallyRedundant);
        let borel = RationalTuple::new(vec![RationalMatrix::from_integers(2, &[1, 1, 0, 1]).unwrap()]).unwrap();
        assert_eq!(
            assess_nielsen_irredundancy(&borel, &plan_primes(&borel, &PlanConfig::default()), 2, 10),
            Err(Error::NotGenerating)
        );
    }

    #[test]
    fn summaries() {
        let e = |irr: Option<bool>| PrimeEvidence { prime: 5, generates: true, irredundant: irr, verdict: String::new() };
        assert_eq!(summarize(&[e(Some(true)), e(Some(false))]), EvidenceSummary::Mixed);
        assert_eq!(summarize(&[e(None)]), EvidenceSummary::Inconclusive);
        assert_eq!(summarize(&[e(None), e(Some(false))]), EvidenceSummary::EventuallyRedundant);
    }
}
