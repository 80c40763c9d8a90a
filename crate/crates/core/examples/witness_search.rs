//! Irredundant generating tuples of a prescribed size, optionally made of
//! involutions.
//!
//! cargo run --example witness_search -- psl2:7 3

use irredundant::groups::GroupSpec;
use irredundant::redundancy::{irredundant_witness, is_redundant, SearchLimits, WitnessConstraints, WitnessOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let g: GroupSpec = args.first().map_or("psl2:7", String::as_str).parse()?;
    let k: usize = args.get(1).map_or(Ok(3), |s| s.parse())?;
    for involutions_only in [false, true] {
        let c = WitnessConstraints { involutions_only };
        match irredundant_witness(&g, k, c, &SearchLimits::default())? {
            WitnessOutcome::Found(t) => {
                println!("{g}, size {k}, involutions only {involutions_only}: {t}");
                println!("  verdict {}", is_redundant(&t)?.verdict);
            }
            WitnessOutcome::NoneExists => println!("{g}, size {k}, involutions only {involutions_only}: none exists"),
            WitnessOutcome::Indeterminate(why) => println!("{g}: stopped ({why})"),
        }
    }
    Ok(())
}
