//! Density certificates: a prime at which the reduction generates.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{parse_rational, reduce_mod_p, PrimePlan, RationalMatrix, RationalTuple};
use crate::error::{Error, Result};
use crate::groups::{closure, psl2_verdict, GeneratingTuple, CLOSURE_LIMIT};

pub const CERTIFICATE_VERSION: u32 = 1;

const CAVEAT: &str = "The reduction generates SL(n, F_p) at the witness prime. This implies \
Zariski density in SL_n only when the witness prime lies outside the finite set of exceptional \
primes for SL_n over Z[1/N]. That set is not computed here; the exceptional floor is a heuristic.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvidenceKind {
    /// Structural test for SL₂(F_p).
    StructuralSl2,
    /// Closure of the reduced tuple; generation is concluded once it passes
    /// half the group order.
    Closure,
}

/// What happened at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDiagnosis {
    pub prime: u64,
    pub generates: bool,
    /// The named obstruction, or "generates".
    pub diagnosis: String,
    /// Order of the generated subgroup when it is known.
    pub closure_order: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityCertificate {
    pub version: u32,
    /// Ambient group, e.g. `SL(2)`.
    pub ambient: String,
    /// Matrices as row-major `a/b` strings.
    pub tuple_entries: Vec<Vec<String>>,
    /// SHA-256 of the tuple's text form, hex.
    pub fingerprint: String,
    pub witness_prime: u64,
    pub exceptional_floor: u64,
    pub evidence_kind: EvidenceKind,
    /// |SL(n, F_p)| at the witness prime.
    pub closure_order: u128,
    pub caveat: String,
    /// Every prime tried, in order, ending with the witness.
    pub per_prime: Vec<PrimeDiagnosis>,
}

impl DensityCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The tuple the certificate speaks about.
    pub fn tuple(&self) -> Result<RationalTuple> {
        let dim = ambient_dim(&self.ambient)?;
        let items = self
            .tuple_entries
            .iter()
            .map(|row| {
                let entries = row.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
                RationalMatrix::new(dim, entries)
            })
            .collect::<Result<_>>()?;
        RationalTuple::new(items)
    }
}

/// No prime in the plan gave a generating reduction. This is evidence
/// against density, not a proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotCertified {
    pub ambient: String,
    pub fingerprint: String,
    pub per_prime: Vec<PrimeDiagnosis>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DensityOutcome {
    Certified(DensityCertificate),
    NotCertified(NotCertified),
}

impl DensityOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, DensityOutcome::Certified(_))
    }

    pub fn per_prime(&self) -> &[PrimeDiagnosis] {
        match self {
            DensityOutcome::Certified(c) => &c.per_prime,
            DensityOutcome::NotCertified(n) => &n.per_prime,
        }
    }
}

fn ambient_dim(ambient: &str) -> Result<usize> {
    ambient
        .strip_prefix("SL(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad ambient {ambient:?}")))
}

/// Hex SHA-256 of the tuple's text form.
pub fn tuple_fingerprint(t: &RationalTuple) -> String {
    hex::encode(Sha256::digest(t.to_text().as_bytes()))
}

fn evidence_kind(dim: usize, p: u64) -> EvidenceKind {
    if dim == 2 && p >= 5 {
        EvidenceKind::StructuralSl2
    } else {
        EvidenceKind::Closure
    }
}

fn diagnose(reduced: &GeneratingTuple, kind: EvidenceKind, prime: u64) -> Result<PrimeDiagnosis> {
    let order = reduced.group().order().expect("finite");
    match kind {
        EvidenceKind::StructuralSl2 => {
            let v = psl2_verdict(reduced)?;
            Ok(PrimeDiagnosis {
                prime,
                generates: v.generates(),
                diagnosis: v.to_string(),
                closure_order: match v {
                    crate::groups::Sl2Verdict::Generates => Some(order),
                    crate::groups::Sl2Verdict::BoundedSubgroup { order } => Some(order as u128),
                    _ => None,
                },
            })
        }
        EvidenceKind::Closure => {
            if order > CLOSURE_LIMIT {
                return Err(Error::TooLarge { order, limit: CLOSURE_LIMIT });
            }
            // A proper subgroup has index at least 2.
            let half = ((order / 2) as usize).max(1);
            match closure(reduced, half) {
                Ok(c) if c.order as u128 == order => Ok(PrimeDiagnosis {
                    prime,
                    generates: true,
                    diagnosis: "generates".into(),
                    closure_order: Some(order),
                }),
                Ok(c) => Ok(PrimeDiagnosis {
                    prime,
                    generates: false,
                    diagnosis: format!("closure of order {}", c.order),
                    closure_order: Some(c.order as u128),
                }),
                Err(Error::CapExceeded { .. }) => Ok(PrimeDiagnosis {
                    prime,
                    generates: true,
                    diagnosis: "generates".into(),
                    closure_order: Some(order),
                }),
                Err(e) => Err(e),
            }
        }
    }
}

/// Tries the plan's primes in order and certifies at the first one whose
/// reduction generates SL(n, F_p).
pub fn certify_density(t: &RationalTuple, plan: &PrimePlan) -> Result<DensityOutcome> {
    if plan.candidates.is_empty() {
        return Err(Error::DegeneratePlan);
    }
    let ambient = format!("SL({})", t.dim());
    let fingerprint = tuple_fingerprint(t);
    let mut per_prime = Vec::new();
    for &p in &plan.candidates {
        let reduced = reduce_mod_p(t, p)?;
        let kind = evidence_kind(t.dim(), p);
        let d = diagnose(&reduced, kind, p)?;
        let generates = d.generates;
        per_prime.push(d);
        if generates {
            return Ok(DensityOutcome::Certified(DensityCertificate {
                version: CERTIFICATE_VERSION,
                ambient,
                tuple_entries: t.items().iter().map(|m| m.entry_strings()).collect(),
                fingerprint,
                witness_prime: p,
                exceptional_floor: plan.exceptional_floor,
                evidence_kind: kind,
                closure_order: reduced.group().order().expect("finite"),
                caveat: CAVEAT.into(),
                per_prime,
            }));
        }
    }
    Ok(DensityOutcome::NotCertified(NotCertified {
        ambient,
        fingerprint,
        per_prime,
    }))
}

/// Re-derives a certificate's conclusion from its own contents.
pub fn replay_certificate(cert: &DensityCertificate) -> Result<()> {
    let fail = |m: String| Err(Error::Replay(m));
    if cert.version != CERTIFICATE_VERSION {
        return fail(format!("unknown version {}", cert.version));
    }
    let t = cert.tuple().map_err(|e| Error::Replay(e.to_string()))?;
    if tuple_fingerprint(&t) != cert.fingerprint {
        return fail("fingerprint does not match the tuple".into());
    }
    if cert.witness_prime <= cert.exceptional_floor {
        return fail(format!(
            "witness prime {} is not above the floor {}",
            cert.witness_prime, cert.exceptional_floor
        ));
    }
    let p = cert.witness_prime;
    let kind = evidence_kind(t.dim(), p);
    if kind != cert.evidence_kind {
        return fail("evidence kind does not fit the ambient group and prime".into());
    }
    let reduced = reduce_mod_p(&t, p).map_err(|e| Error::Replay(e.to_string()))?;
    let d = diagnose(&reduced, kind, p)?;
    if !d.generates {
        return fail(format!("reduction at {p} does not generate: {}", d.diagnosis));
    }
    if d.closure_order != Some(cert.closure_order) {
        return fail("closure order differs".into());
    }
    match cert.per_prime.last() {
        Some(last) if *last == d => Ok(()),
        _ => fail("per-prime transcript does not end with the witness".into()),
    }
}
