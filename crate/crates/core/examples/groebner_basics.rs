//! Reduced Gröbner bases, normal forms and the standard monomial basis of a quotient.

use mil::groebner::GroebnerBasis;
use mil::parse::parse_poly;
use mil::{Field, RingCtx};

fn main() -> mil::Result<()> {
    let f3 = Field::prime(3)?;
    let r = RingCtx::new(&f3, &["x", "y", "z"])?;
    let gens: Vec<_> = ["x + y + z", "x*y + y*z + z*x", "x*y*z"]
        .iter()
        .map(|s| parse_poly(&r, s))
        .collect::<mil::Result<_>>()?;

    let gb = GroebnerBasis::new(&r, &gens)?;
    println!("reduced basis of the elementary symmetric ideal:");
    for g in gb.generators() {
        println!("  {g}");
    }
    println!("zero-dimensional: {}", gb.is_zero_dimensional());
    println!("quotient Hilbert function 0..4: {:?}", gb.quotient_hilbert(0..=4));

    let f = parse_poly(&r, "x^3 + 2*x^2*y")?;
    println!("NF({f}) = {}", gb.normal_form(&f));
    println!("x^3 in ideal: {}", gb.contains(&parse_poly(&r, "x^3")?));
    Ok(())
}
