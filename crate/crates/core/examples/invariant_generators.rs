//! Invariants of the 3-cycle over F_3: graded dimensions, generators, transfer and a relation.

use mil::bundled;
use mil::invariants::verify_relation;

fn main() -> mil::Result<()> {
    let p = bundled::problem("a3")?;
    let action = &p.action;

    for slice in action.invariant_spaces(0..=4)? {
        println!("degree {}: dim {}", slice.degree, slice.dimension());
    }
    for (g, d) in action.algebra_generators_up_to(3)? {
        println!("generator of degree {d}: {g}");
    }

    // The group order is 3 = char, so the transfer is not surjective onto R^G.
    let x = p.poly("x")?;
    println!("Tr(x) = {}", action.transfer(&x)?);
    println!("Tr(x^2*y) = {}", action.transfer(&p.poly("x^2*y")?)?);
    println!("Reynolds operator available: {}", action.reynolds(&x).is_ok());

    for rel in &p.relations {
        println!("{rel} vanishes: {}", verify_relation(rel, &p.invariant_generators)?);
    }
    Ok(())
}
