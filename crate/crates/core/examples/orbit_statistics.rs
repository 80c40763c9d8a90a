//! Nielsen orbits on generating tuples of a small group.
//!
//! cargo run --example orbit_statistics -- psl2:5 3

use irredundant::groups::GroupSpec;
use irredundant::nielsen::orbit_statistics;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let g: GroupSpec = args.first().map_or("psl2:5", String::as_str).parse()?;
    let ns: Vec<usize> = match args.get(1) {
        Some(n) => vec![n.parse()?],
        None => vec![2, 3],
    };
    for n in ns {
        let s = orbit_statistics(&g, n)?;
        let (red, total) = s.redundant_fraction();
        println!(
            "{g}, n = {n}: {} generating tuples in {} classes, {total} orbits of sizes {:?}, {red} containing a redundant tuple",
            s.generating_tuples, s.classes, s.orbit_sizes
        );
    }
    Ok(())
}
