//! Exhaustive m(G) for a few small groups, with witnesses and level counts.
//!
//! cargo run --example redundancy_rank -- psl2:7 sl2:5

use irredundant::groups::GroupSpec;
use irredundant::redundancy::{max_irredundant_size, SearchLimits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["cyclic:5^3", "cyclic:2^2", "psl2:5", "sl2:5"].map(String::from).to_vec();
    }
    for name in names {
        let g: GroupSpec = name.parse()?;
        let r = max_irredundant_size(&g, &SearchLimits::default())?;
        println!(
            "{g}: m = {}{} in {:.2?}",
            r.computed,
            if r.exhaustive { "" } else { " (lower bound)" },
            r.stats.wall_time
        );
        if let Some(w) = &r.witness {
            println!("  witness {w}");
        }
        for l in &r.stats.levels {
            println!(
                "  size {}: {} candidates, {} classes, {} generating, {} carried",
                l.size, l.candidates, l.classes, l.generating, l.carried
            );
        }
    }
    Ok(())
}
