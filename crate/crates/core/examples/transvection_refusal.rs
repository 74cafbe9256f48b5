//! With a transvection the cokernel count is withheld, and the a-invariant comes
//! from an asserted Cohen-Macaulay presentation instead.

use mil::{bundled, report, Error};

fn main() -> mil::Result<()> {
    let p = bundled::problem("s2@2")?;
    let lc = p.local_cohomology()?;
    let r = lc.strand_report(-3)?;
    println!("k=-3: dimV {} rank_fixed {} rank_H {:?} marker {:?}", r.dim_v, r.rank_fixed, r.rank_h, r.marker);
    assert_eq!(lc.a_invariant(None).unwrap_err(), Error::TransvectionsPresent);

    let a = report::a_invariant(&p, None)?;
    print!("{}", a.render());

    // Without a presentation there is nothing to fall back on.
    let braun = bundled::problem("braun")?;
    match report::a_invariant(&braun, None) {
        Err(e) => println!("braun: {e}"),
        Ok(r) => print!("{}", r.render()),
    }
    Ok(())
}
