//! The socle class of H^n(R) in degree -n and the scalar by which each group element acts on it.

use mil::bundled;
use mil::cohomology::SplittingRule;

fn main() -> mil::Result<()> {
    let p = bundled::problem("diag_scalar")?;
    let lc = p.local_cohomology()?;
    let eta = lc.socle_class(SplittingRule::SmallestIndex)?;
    let ys: Vec<String> = lc.hsop().parameters().iter().map(|y| format!("({y})^{}", eta.power)).collect();
    println!("socle class: [{} / {}] in degree {}", eta.numerator, ys.join(" "), eta.degree);

    let field = p.field.clone();
    for g in lc.action().group().elements() {
        let lambda = lc.socle_action_scalar(g)?;
        println!("det {:>4}  lambda {:>4}", field.format(g.determinant()?), field.format(lambda));
    }
    Ok(())
}
