//! Two involutions in PSL₂(F_p) generate a dihedral group of order at most
//! 2(p+1), so no generating set can consist of just two of them.
//!
//! cargo run --example involution_pairs -- 7

use irredundant::groups::{GroupSpec, TabulatedGroup};
use irredundant::redundancy::involution_pair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let g = GroupSpec::psl(2, p)?;
    let tg = TabulatedGroup::from_spec(&g)?;
    let invs: Vec<_> = (0..tg.order() as u16).filter(|&x| tg.element_order(x) == 2).collect();
    let mut largest = 0;
    let mut proper = 0;
    for &a in &invs {
        for &b in &invs {
            let r = involution_pair(tg.element(a), tg.element(b))?;
            largest = largest.max(r.closure_order);
            proper += r.is_proper_dihedral(p as u32) as usize;
        }
    }
    let n = invs.len() * invs.len();
    println!("PSL₂({p}): {} involutions, {proper}/{n} pairs dihedral and proper", invs.len());
    println!("largest closure {largest}, bound 2(p+1) = {}", 2 * (p + 1));
    Ok(())
}
