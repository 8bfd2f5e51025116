//! Exact arithmetic in cyclotomic fields.

use num_rational::BigRational;
use qpdeg::cyclo::{euler_phi, CycNum};

fn main() -> qpdeg::Result<()> {
    let w = CycNum::root_of_unity(3, 1);
    let w2 = &w * &w;
    // 1 + ω + ω² = 0
    let s = &(&CycNum::one() + &w) + &w2;
    println!("1 + w + w^2 = {s}");

    // ζ_9 generates a field of degree φ(9) = 6
    let z = CycNum::root_of_unity(9, 1);
    println!("phi(9) = {}, zeta_9 = {z}", euler_phi(9));
    let cube = &(&z * &z) * &z;
    println!("zeta_9^3 = {cube} (equal to w: {})", cube == w);

    // σ_2 maps ω to ω², and the norm ω·ω̄ is rational
    println!("sigma_2(w) = {}", w.galois_apply(2)?);
    let norm = &w * &w.conj();
    println!(
        "w * conj(w) = {}",
        norm.rational_value()
            .unwrap_or_else(|| BigRational::from_integer(0.into()))
    );
    Ok(())
}
