//! Generation in a product of two simple groups: both projections must
//! generate and the tuple must not lie in the graph of an isomorphism.
//!
//! cargo run --example goursat_products

use irredundant::groups::{enumerate_isomorphisms, is_generating_with, product_generates, GeneratingTuple, GenerationStrategy, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a5 = GroupSpec::psl(2, 5)?;
    println!("isomorphisms A5 -> A5: {}", enumerate_isomorphisms(&a5, &a5)?.len());

    let g = GroupSpec::product(vec![a5.clone(), a5.clone()])?;
    let cases = [
        ("diagonal", ["0 -1 1 0 | 0 -1 1 0", "1 1 0 1 | 1 1 0 1"]),
        ("twisted", ["0 -1 1 0 | 0 -1 1 0", "1 1 0 1 | 1 2 0 1"]),
        ("proper projection", ["0 -1 1 0 | 0 -1 1 0", "1 1 0 1 | 1 0 0 1"]),
    ];
    for (name, lines) in cases {
        let items = lines.iter().map(|l| g.parse_element(l)).collect::<Result<Vec<_>, _>>()?;
        let t = GeneratingTuple::new(g.clone(), items)?;
        let v = product_generates(&t)?;
        let oracle = is_generating_with(&t, GenerationStrategy { fast_sl2: false })?;
        println!("{name}: generates = {} ({}); closure agrees: {}", v.generates, v.reason, v.generates == oracle);
    }
    Ok(())
}
