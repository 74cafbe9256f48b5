//! Close generator matrices into a group and sort its elements by type.

use mil::bundled;

fn main() -> mil::Result<()> {
    for id in ["klein6", "braun", "s2@2"] {
        let p = bundled::problem(id)?;
        let group = p.action.group();
        let c = group.classify();
        println!("{id}: order {}, modular {}, in SL {}", c.order, c.modular, c.in_sl);
        for (i, e) in group.classify_all().iter().enumerate() {
            let kind = if e.is_transvection {
                "transvection"
            } else if e.is_pseudoreflection {
                "pseudoreflection"
            } else {
                ""
            };
            println!("  #{i:<3} order {:<3} det {:<4} rank(g-1) {} {kind}", e.element_order, e.determinant, e.rank_g_minus_identity);
        }
    }
    Ok(())
}
