//! Irredundant generating tuples of Z of every length: products of all but
//! one of the first n primes.
//!
//! cargo run --example integers_witness -- 6

use irredundant::redundancy::{is_redundant, z_witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let top: usize = std::env::args().nth(1).map_or(Ok(8), |s| s.parse())?;
    for n in 1..=top {
        let t = z_witness(n)?;
        let r = is_redundant(&t)?;
        println!("n = {n}: {t} -> {}", r.verdict);
    }
    Ok(())
}
