//! Rerun every bundled reproduction and print its summary line.

use mil::bundled::{self, REPRODUCIBLE};

fn main() -> mil::Result<()> {
    let mut failed = 0;
    for id in REPRODUCIBLE {
        let r = bundled::reproduce(id)?;
        let last = r.render().lines().last().unwrap_or_default().to_string();
        println!("{id:<10} {last}");
        failed += usize::from(!r.all_passed());
    }
    if failed > 0 {
        std::process::exit(4);
    }
    Ok(())
}
