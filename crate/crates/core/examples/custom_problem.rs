//! Load a problem from JSON text and run the property suite on it.

use mil::{report, verify, Problem};

const SPEC: &str = r#"{
    "name": "c4 on F5^2",
    "field": {"char": 5},
    "variables": ["x", "y"],
    "generators": [[["0", "4"], ["1", "0"]]],
    "hsop": ["x^2 + y^2", "x^2*y^2"],
    "windows": {"lc": [-5, -2]}
}"#;

fn main() -> mil::Result<()> {
    let p = Problem::from_json(SPEC)?;
    print!("{}", report::classify(&p).render());
    print!("{}", report::lc(&p, -5, -2)?.render());
    let v = verify::verify(&p)?;
    print!("{}", v.render());
    assert!(v.all_passed());
    Ok(())
}
