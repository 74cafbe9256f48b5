//! One line per acceptance criterion. Each criterion recomputes its values
//! through the library and compares them to literal expectations.

use std::time::{Duration, Instant};

use mil::bundled::{self, BATTERY};
use mil::cohomology::{CechClass, SplittingRule};
use mil::groebner::{ideal_member, SubalgebraMembership};
use mil::invariants::verify_relation;
use mil::{report, verify, Error, Poly, Problem, Result};

struct Outcome {
    ok: bool,
    detail: String,
}

fn expect(failures: &mut Vec<String>, what: &str, ok: bool) {
    if !ok {
        failures.push(what.to_string());
    }
}

fn finish(failures: Vec<String>, summary: &str) -> Result<Outcome> {
    Ok(if failures.is_empty() {
        Outcome { ok: true, detail: summary.to_string() }
    } else {
        Outcome { ok: false, detail: format!("failed: {}", failures.join("; ")) }
    })
}

fn polys(p: &Problem, items: &[&str]) -> Result<Vec<Poly>> {
    items.iter().map(|s| p.poly(s)).collect()
}

fn klein_strands() -> Result<Outcome> {
    let lc = bundled::problem("klein6")?.local_cohomology()?;
    let mut f = Vec::new();
    for (k, dim_v, rank_h, rank_fixed) in [(-6, 1, 1, 1), (-7, 6, 2, 4)] {
        let r = lc.strand_report(k)?;
        let got = (r.dim_v, r.rank_h, r.rank_fixed);
        expect(&mut f, &format!("k={k} got {got:?}"), got == (dim_v, Some(rank_h), rank_fixed));
    }
    finish(f, "k=-6 (1,1,1), k=-7 (6,2,4)")
}

fn klein_presentation() -> Result<Outcome> {
    let p = bundled::problem("klein6")?;
    let pa = p.presentation.as_ref().ok_or(Error::CMNotAsserted)?;
    let mut f = Vec::new();
    expect(&mut f, "direct rank k=-6", pa.direct_strand_rank(-6)? == 1);
    expect(&mut f, "direct rank k=-7", pa.direct_strand_rank(-7)? == 2);
    expect(&mut f, "Hilbert opening", pa.hilbert(0..=2) == vec![1, 2, 9]);
    let lc = p.local_cohomology()?;
    for k in [-6, -7] {
        expect(&mut f, "direct rank equals coker rank", Some(pa.direct_strand_rank(k)?) == lc.strand_report(k)?.rank_h);
    }
    expect(&mut f, "a-invariant", lc.a_invariant(None)? == -6);
    expect(&mut f, "presented a-invariant", pa.presented_a_invariant(None)? == -6);
    finish(f, "direct ranks 1, 2; Hilbert 1, 2, 9; a = -6")
}

fn alternating() -> Result<Outcome> {
    let p = bundled::problem("a3")?;
    let mut f = Vec::new();
    let gens = p.action.algebra_generators_up_to(3)?;
    let degrees: Vec<u32> = gens.iter().map(|g| g.1).collect();
    expect(&mut f, "generator degrees", degrees == [1, 2, 3, 3]);
    let expected = polys(&p, &["x+y+z", "x*y+y*z+z*x", "x*y*z", "x^2*y+y^2*z+z^2*x"])?;
    let found: Vec<Poly> = gens.into_iter().map(|g| g.0).collect();
    let within = SubalgebraMembership::new(&p.ring, &expected)?;
    let spans = SubalgebraMembership::new(&p.ring, &found)?;
    let mut same = true;
    for g in &found {
        same &= within.test(g)?.0;
    }
    for e in &expected {
        same &= spans.test(e)?.0;
    }
    expect(&mut f, "span of generators", same);
    let relation = p.generator_ring.as_ref().map(|r| mil::parse::parse_poly(r, "D^2 - e1*e2*D + e2^3 + e1^3*e3")).transpose()?;
    let vanishes = match relation {
        Some(rel) => verify_relation(&rel, &expected)?,
        None => false,
    };
    expect(&mut f, "relation", vanishes);
    expect(&mut f, "D in (e1, e2, e3)", ideal_member(&expected[3], &expected[..3])?);

    let lc = p.local_cohomology()?;
    let g = &lc.action().group().generators()[0];
    let d = "(x^2*y+y^2*z+z^2*x)";
    let classes = [(format!("x*{d}"), [2, 1, 1], -3), (d.to_string(), [2, 1, 1], -4), (d.to_string(), [1, 2, 1], -5), ("1".into(), [1, 1, 1], -6)];
    for (num, exps, degree) in classes {
        let c = CechClass::with_denominator(lc.hsop(), p.poly(&num)?, &exps)?;
        let strand = lc.hsop().build_strand_with_min_power(c.degree, c.power)?;
        let coords = strand.class_coordinates(lc.hsop(), &c)?;
        let moved = strand.class_coordinates(lc.hsop(), &lc.act_on_class(g, &c)?)?;
        expect(&mut f, &format!("class at {degree}"), c.degree == degree && !lc.class_is_zero(&c)? && coords == moved);
    }
    let table = lc.hilbert_of_h(-8..=-3)?;
    expect(&mut f, "rank_H = rank_fixed on [-8, -3]", table.rows.len() == 6 && table.rows.iter().all(|s| s.rank_h == Some(s.rank_fixed)));
    expect(&mut f, "a-invariant", lc.a_invariant(None)? == -3);
    finish(f, "degrees (1,2,3,3), relation, D in (e), 4 fixed classes, window equal, a = -3")
}

fn swap() -> Result<Outcome> {
    let mut f = Vec::new();
    let p = bundled::problem("s2")?;
    let lc = p.local_cohomology()?;
    let r = lc.strand_report(-2)?;
    expect(&mut f, "F3 k=-2", (r.dim_v, r.rank_h, r.rank_fixed) == (1, Some(0), 0));
    let g = &lc.action().group().generators()[0];
    let strand = lc.build_strand(-2)?;
    let m = lc.act_on_strand(g, &strand)?.one_minus();
    let two = p.field.from_int(2);
    expect(&mut f, "(1-g) is 2 on k=-2", m.rows() == 1 && m.get(0, 0) == two);

    let p2 = bundled::problem("s2@2")?;
    let c = p2.action.group().classify();
    expect(&mut f, "F2 transvection", c.has_transvection);
    let lc2 = p2.local_cohomology()?;
    let r2 = lc2.strand_report(-2)?;
    expect(&mut f, "F2 refusal marker", r2.rank_h.is_none() && r2.marker.as_deref() == Some("transvections present"));
    expect(&mut f, "F2 a-invariant refused", lc2.a_invariant(None) == Err(Error::TransvectionsPresent));
    finish(f, "F3 (1,0,0) with 1-g = 2; F2 transvection refused")
}

fn battery() -> Result<Outcome> {
    let mut f = Vec::new();
    let mut combos = std::collections::BTreeSet::new();
    for &(id, expected) in BATTERY {
        let p = bundled::problem(id)?;
        let c = p.action.group().classify();
        combos.insert((c.in_sl, c.has_pseudoreflection));
        let a = report::a_invariant(&p, None)?.a_invariant.and_then(|a| a.value);
        expect(&mut f, &format!("{id} a = {expected}"), a == Some(expected));
        let minus_n = a == Some(-(p.n() as i64));
        expect(&mut f, &format!("{id} a = -n iff SL and no pseudoreflection"), minus_n == (c.in_sl && !c.has_pseudoreflection));
    }
    expect(&mut f, "four combinations", combos.len() == 4);
    expect(&mut f, "at least six groups", BATTERY.len() >= 6);
    finish(f, &format!("{} groups, {} combinations", BATTERY.len(), combos.len()))
}

fn socle() -> Result<Outcome> {
    let mut f = Vec::new();
    let mut elements = 0;
    for id in bundled::problem_ids() {
        let p = bundled::problem(id)?;
        let Ok(lc) = p.local_cohomology() else {
            f.push(format!("{id} has no hsop"));
            continue;
        };
        let field = &p.field;
        for g in lc.action().group().elements() {
            elements += 1;
            let ok = field.mul(lc.socle_action_scalar(g)?, g.determinant()?) == field.one();
            expect(&mut f, id, ok);
        }
        let eta = lc.socle_class(SplittingRule::SmallestIndex)?;
        expect(&mut f, &format!("{id} socle degree"), eta.degree == -lc.n());
    }
    finish(f, &format!("det * lambda = 1 on {elements} elements"))
}

const NONMODULAR: &str = r#"{
    "name": "c4", "field": {"char": 5}, "variables": ["x", "y"],
    "generators": [[["0", "4"], ["1", "0"]]], "hsop": ["x^2 + y^2", "x^2*y^2"],
    "windows": {"lc": [-6, -2]}
}"#;

fn properties() -> Result<Outcome> {
    let mut f = Vec::new();
    let mut problems: Vec<Problem> = bundled::problem_ids().map(bundled::problem).collect::<Result<_>>()?;
    problems.push(Problem::from_json(NONMODULAR)?);
    let mut seen = std::collections::BTreeSet::new();
    let mut total = 0;
    for p in &problems {
        let r = verify::verify(p)?;
        for c in r.checks.iter().chain(&r.cross_checks) {
            total += 1;
            seen.insert(c.name.clone());
            expect(&mut f, &format!("{}: {}", p.name(), c.name), c.passed);
        }
    }
    for needed in [
        "strand dims equal C(-k-1, n-1)",
        "strand dims match the linear quotient count",
        "nonmodular: rank_H = rank_fixed",
        "transfer is R^G-linear",
        "transfer on R^G is |G| id",
        "normal form is idempotent",
        "membership agrees with the linear oracle",
        "socle class is independent of the splitting",
        "dimV - dimW equals the dual fixed dimension",
    ] {
        expect(&mut f, &format!("suite ran `{needed}`"), seen.contains(needed));
    }
    finish(f, &format!("{total} checks over {} problems", problems.len()))
}

fn main() {
    type Criterion = (&'static str, fn() -> Result<Outcome>, Duration);
    let criteria: [Criterion; 7] = [
        ("Klein six-variable strands", klein_strands, Duration::from_secs(300)),
        ("Klein presentation cross-check", klein_presentation, Duration::from_secs(300)),
        ("A3 over F3", alternating, Duration::from_secs(120)),
        ("S2 over F3 and F2", swap, Duration::from_secs(300)),
        ("a-invariant battery", battery, Duration::from_secs(300)),
        ("socle scalar is det^-1", socle, Duration::from_secs(300)),
        ("property suites", properties, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome { ok: false, detail: format!("error: {e}") });
        let elapsed = start.elapsed();
        let in_time = elapsed < *limit;
        let ok = outcome.ok && in_time;
        failed += usize::from(!ok);
        let tag = if ok { "PASS" } else { "FAIL" };
        let timing = if in_time { String::new() } else { format!(", over the {}s limit", limit.as_secs()) };
        println!("[{tag}] {} {name}: {} ({:.2}s{timing})", i + 1, outcome.detail, elapsed.as_secs_f64());
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
