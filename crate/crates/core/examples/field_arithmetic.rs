//! Arithmetic in F_9 = F_3[a]/(a^2 + 1): units, inverses and roots of unity.

use mil::parse::parse_scalar;
use mil::Field;

fn main() -> mil::Result<()> {
    let f9 = Field::new(3, 2, None)?;
    println!("F_{} with modulus coefficients {:?}", f9.order(), f9.modulus());

    let a = parse_scalar(&f9, "a")?;
    let a_inv = f9.inv(a)?;
    println!("a^2 = {}", f9.format(f9.mul(a, a)));
    println!("a^-1 = {}, order of a = {}", f9.format(a_inv), f9.unit_order(a)?);

    let g = f9.generator().expect("nontrivial field");
    println!("multiplicative generator {} of order {}", f9.format(g), f9.unit_order(g)?);

    let zeta = f9.find_root_of_unity(8)?;
    let powers: Vec<String> = (0..8).map(|e| f9.format(f9.pow(zeta, e))).collect();
    println!("powers of a primitive 8th root: {}", powers.join(", "));
    Ok(())
}
