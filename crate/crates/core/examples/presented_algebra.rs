//! A weighted polynomial presentation: Hilbert function, h-vector, direct strand ranks and a.

use mil::cohomology::PresentedAlgebra;
use mil::parse::parse_poly;
use mil::{Field, MonomialOrder, RingCtx};

fn main() -> mil::Result<()> {
    let f2 = Field::prime(2)?;
    // K[e1, e2] with deg e1 = 1 and deg e2 = 2, the invariants of the swap in two variables.
    let ring = RingCtx::weighted(&f2, vec!["e1".into(), "e2".into()], vec![1, 2], MonomialOrder::GrevLex)?;
    let hsop = vec![parse_poly(&ring, "e1")?, parse_poly(&ring, "e2")?];
    let pa = PresentedAlgebra::new(&ring, Vec::new(), hsop, true)?;

    println!("Hilbert function 0..6: {:?}", pa.hilbert(0..=6));
    println!("h-vector over the hsop: {:?}", pa.h_vector()?);
    for k in (-8..=-2).rev() {
        println!("k={k}: rank {}", pa.direct_strand_rank(k)?);
    }
    println!("a-invariant: {}", pa.presented_a_invariant(None)?);
    Ok(())
}
