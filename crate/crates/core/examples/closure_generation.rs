//! Subgroup closures and the structural generation test for SL₂(F_p).
//!
//! cargo run --example closure_generation

use irredundant::groups::{closure, is_generating_with, psl2_verdict, sl_element, sl_order, GeneratingTuple, GenerationStrategy, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [3u64, 5, 7, 13] {
        let g = GroupSpec::sl(2, p)?;
        let st = GeneratingTuple::new(
            g.clone(),
            vec![sl_element(2, p, &[0, -1, 1, 0])?, sl_element(2, p, &[1, 1, 0, 1])?],
        )?;
        let c = closure(&st, 1 << 20)?;
        println!("SL₂({p}): closure of S,T has order {} (p(p²-1) = {})", c.order, sl_order(2, p as u32));
    }

    let p = 11;
    let g = GroupSpec::sl(2, p)?;
    let cases = [
        ("upper triangular", vec![[1, 1, 0, 1], [2, 3, 0, 6]]),
        ("diagonal and antidiagonal", vec![[2, 0, 0, 6], [0, 1, -1, 0]]),
        ("S and T", vec![[0, -1, 1, 0], [1, 1, 0, 1]]),
    ];
    for (name, mats) in cases {
        let items = mats.iter().map(|m| sl_element(2, p, m)).collect::<Result<Vec<_>, _>>()?;
        let t = GeneratingTuple::new(g.clone(), items)?;
        let fast = psl2_verdict(&t)?;
        let slow = is_generating_with(&t, GenerationStrategy { fast_sl2: false })?;
        println!("SL₂({p}), {name}: structural test says {fast}; closure says generates = {slow}");
    }
    Ok(())
}
