//! a-invariants across the bundled groups, set against the SL and pseudoreflection tests.

use mil::bundled::{self, BATTERY};
use mil::report;

fn main() -> mil::Result<()> {
    println!("{:<16} {:>3} {:>6} {:>7} {:>4}  method", "group", "n", "in SL", "pseudo", "a");
    for &(id, _) in BATTERY {
        let p = bundled::problem(id)?;
        let c = p.action.group().classify();
        let r = report::a_invariant(&p, None)?;
        let a = r.a_invariant.expect("a-invariant present");
        println!(
            "{id:<16} {:>3} {:>6} {:>7} {:>4}  {}",
            p.n(),
            c.in_sl,
            c.has_pseudoreflection,
            a.value.map_or("-".into(), |v| v.to_string()),
            a.method
        );
    }
    Ok(())
}
