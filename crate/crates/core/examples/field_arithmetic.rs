//! Matrices over F_p and their images in PSL.
//!
//! cargo run --example field_arithmetic

use irredundant::field::{projective_canonicalize, FpMatrix, FpScalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = FpScalar::new(-3, 7)?;
    println!("-3 mod 7 = {}, inverse {}", x.value(), x.inv().map_or(0, |y| y.value()));

    let s = FpMatrix::new(7, 2, &[0, -1, 1, 0])?;
    let t = FpMatrix::new(7, 2, &[1, 1, 0, 1])?;
    let st = s.mul(&t)?;
    println!("S = {s}, T = {t}, ST = {st}");
    println!("det ST = {}, trace ST = {}, order {}", st.determinant(), st.trace(), st.order(1000)?);
    println!("(ST)^-1 = {}", st.inverse()?);

    // S and -S are the same element of PSL₂.
    let minus_s = s.scale(6);
    let (a, b) = (projective_canonicalize(&s)?, projective_canonicalize(&minus_s)?);
    println!("S and -S agree in PSL₂(7): {}; S has order {} there", a == b, a.order(100)?);

    let r3 = FpMatrix::new(5, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0])?;
    println!("3-cycle in SL₃(5) has order {}", r3.order(100)?);
    Ok(())
}
