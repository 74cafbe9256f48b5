//! Strands of the top local cohomology for the Klein four-group over F_2.

use mil::{bundled, report};

fn main() -> mil::Result<()> {
    let p = bundled::problem("klein6")?;
    let lc = p.local_cohomology()?;
    for k in [-6, -7, -8] {
        let s = lc.build_strand(k)?;
        println!("k={k}: power {} internal degree {} basis {}", s.power, s.internal_degree, s.dimension());
    }
    let r = report::lc(&p, -9, -6)?;
    print!("{}", r.render());
    Ok(())
}
