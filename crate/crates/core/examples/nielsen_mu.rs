//! μ(G) by Nielsen orbit search, next to m(G) for comparison.
//!
//! cargo run --example nielsen_mu -- psl2:5 psl2:7

use irredundant::groups::GroupSpec;
use irredundant::nielsen::mu_rank;
use irredundant::redundancy::{max_irredundant_size, SearchLimits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["cyclic:2^2", "psl2:5"].map(String::from).to_vec();
    }
    let limits = SearchLimits::default();
    for name in names {
        let g: GroupSpec = name.parse()?;
        let mu = mu_rank(&g, &limits)?;
        let m = max_irredundant_size(&g, &limits)?;
        println!(
            "{g}: mu = {} (exhaustive {}), m = {}, orbit classes visited {}, {:.2?}",
            mu.computed, mu.exhaustive, m.computed, mu.stats.nodes, mu.stats.wall_time
        );
        if let Some(w) = &mu.witness {
            println!("  Nielsen-irredundant witness {w}");
        }
    }
    Ok(())
}
