//! Irredundancy and Nielsen irredundancy of a rational tuple, read off from
//! its reductions at several primes.
//!
//! cargo run --example irredundancy_evidence

use irredundant::arithmetic::{assess_irredundancy, assess_nielsen_irredundancy, plan_primes, PlanConfig, RationalTuple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        ("S and T", "sl 2\n0 -1 1 0\n1 1 0 1\n"),
        ("S, T and T²", "sl 2\n0 -1 1 0\n1 1 0 1\n1 2 0 1\n"),
    ];
    for (name, text) in inputs {
        let t: RationalTuple = text.parse()?;
        let plan = plan_primes(&t, &PlanConfig::default());
        let e = assess_irredundancy(&t, &plan, 4)?;
        let n = assess_nielsen_irredundancy(&t, &plan, 3, 1_000_000)?;
        println!("{name}: {:?} / Nielsen {:?}", e.summary, n.summary);
        for (a, b) in e.per_prime.iter().zip(&n.per_prime) {
            println!("  p = {}: {}, {}", a.prime, a.verdict, b.verdict);
        }
    }
    Ok(())
}
