//! Certifying that a rational tuple is dense in SL_n by finding a prime
//! where its reduction generates, then replaying the certificate.
//!
//! cargo run --example density_certificate

use irredundant::arithmetic::{certify_density, plan_primes, replay_certificate, DensityOutcome, PlanConfig, RationalTuple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        ("S and T", "sl 2\n0 -1 1 0\n1 1 0 1\n"),
        ("upper triangular", "sl 2\n1 1 0 1\n2 1/3 0 1/2\n"),
        ("denominators 5 and 7", "sl 2\n1 1/5 0 1\n1 0 1/7 1\n"),
        ("transvection and 3-cycle", "sl 3\n1 1 0 0 1 0 0 0 1\n0 0 1 1 0 0 0 1 0\n"),
    ];
    for (name, text) in inputs {
        let t: RationalTuple = text.parse()?;
        let plan = plan_primes(&t, &PlanConfig { max_primes: 5, ..Default::default() });
        println!("{name}: candidates {:?}, skipped {:?}", plan.candidates, plan.excluded_denominator_primes);
        match certify_density(&t, &plan)? {
            DensityOutcome::Certified(c) => {
                replay_certificate(&c)?;
                println!("  certified at p = {} via {:?}, replay ok, fingerprint {}", c.witness_prime, c.evidence_kind, &c.fingerprint[..16]);
            }
            DensityOutcome::NotCertified(n) => {
                for d in &n.per_prime {
                    println!("  p = {}: {}", d.prime, d.diagnosis);
                }
            }
        }
    }
    Ok(())
}
