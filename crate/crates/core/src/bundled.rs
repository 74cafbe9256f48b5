//! Worked examples shipped with the crate, and their expected values.

use crate::cohomology::{CechClass, LocalCohomology, TRANSVECTION_MARKER};
use crate::error::{Error, Result};
use crate::groebner::{ideal_member, SubalgebraMembership};
use crate::invariants::verify_relation;
use crate::poly::Poly;
use crate::problem::Problem;
use crate::report::{self, Check, Report};

const FILES: &[(&str, &str)] = &[
    ("s2", include_str!("../data/s2.json")),
    ("s2@2", include_str!("../data/s2_char2.json")),
    ("a3", include_str!("../data/a3.json")),
    ("klein3", include_str!("../data/klein3.json")),
    ("klein6", include_str!("../data/klein6.json")),
    ("braun", include_str!("../data/braun.json")),
    ("diag_sl", include_str!("../data/diag_sl.json")),
    ("diag_reflection", include_str!("../data/diag_reflection.json")),
    ("diag_scalar", include_str!("../data/diag_scalar.json")),
    ("minus_identity", include_str!("../data/minus_identity.json")),
];

/// Battery of groups with their a-invariants.
pub const BATTERY: &[(&str, i64)] = &[
    ("a3", -3),
    ("diag_sl", -2),
    ("klein6", -6),
    ("diag_reflection", -5),
    ("s2", -3),
    ("diag_scalar", -4),
    ("minus_identity", -4),
    ("s2@2", -3),
    ("klein3", -5),
];

pub const REPRODUCIBLE: &[&str] = &["s2", "s2@2", "a3", "klein3", "klein6", "braun", "a_battery"];

pub fn problem_ids() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(id, _)| *id)
}

pub fn source(id: &str) -> Result<&'static str> {
    FILES.iter().find(|(k, _)| *k == id).map(|(_, v)| *v).ok_or_else(|| Error::UnknownExample(id.to_string()))
}

pub fn problem(id: &str) -> Result<Problem> {
    Problem::from_json(source(id)?)
}

pub fn reproduce(id: &str) -> Result<Report> {
    match id {
        "s2" => s2(),
        "s2@2" => s2_char2(),
        "a3" => a3(),
        "klein3" => klein3(),
        "klein6" => klein6(),
        "braun" => braun(),
        "a_battery" => battery(),
        _ => Err(Error::UnknownExample(id.to_string())),
    }
}

fn polys(p: &Problem, items: &[&str]) -> Result<Vec<Poly>> {
    items.iter().map(|s| p.poly(s)).collect()
}

/// `det(g) * λ(g) = 1` over the whole group.
fn socle_check(lc: &LocalCohomology) -> Result<Check> {
    let field = lc.action().ring().field();
    let mut ok = true;
    for g in lc.action().group().elements() {
        let lambda = lc.socle_action_scalar(g)?;
        ok &= field.mul(lambda, g.determinant()?) == field.one();
    }
    Ok(Check::flag("socle scalar is det^-1 on every element", ok))
}

fn s2() -> Result<Report> {
    let p = problem("s2")?;
    let mut r = Report::new("s2", "reproduce");
    let lc = p.local_cohomology()?;
    let c = lc.classification();
    r.checks.push(Check::flag("swap is a pseudoreflection", !c.pseudoreflections.is_empty()));
    r.checks.push(Check::flag("swap is not a transvection", !c.has_transvection));
    let s = lc.strand_report(-2)?;
    r.checks.push(Check::new("k=-2 dimV", 1, s.dim_v));
    r.checks.push(Check::new("k=-2 rank_H", "0", s.rank_h.map_or("-".into(), |v| v.to_string())));
    r.checks.push(Check::new("k=-2 rank_fixed", 0, s.rank_fixed));
    let strand = lc.build_strand(-2)?;
    let g = &lc.action().group().generators()[0];
    let one_minus = lc.act_on_strand(g, &strand)?.one_minus();
    r.checks.push(Check::new("(1-g) on k=-2", "2", p.field.format(one_minus.get(0, 0))));
    let eta = CechClass::new(lc.hsop(), p.poly("x")?, 1)?;
    r.cross_checks.push(Check::flag("[x/(e1 e2)] is nonzero", !lc.class_is_zero(&eta)?));
    r.cross_checks.push(Check::flag("transfer of [x/(e1 e2)] is zero", lc.class_is_zero(&lc.transfer_class(&eta)?)?));
    r.cross_checks.push(Check::new("a-invariant", -3, lc.a_invariant(None)?));
    r.cross_checks.push(socle_check(&lc)?);
    Ok(r)
}

fn s2_char2() -> Result<Report> {
    let p = problem("s2@2")?;
    let mut r = Report::new("s2@2", "reproduce");
    let lc = p.local_cohomology()?;
    let c = lc.classification();
    r.checks.push(Check::flag("swap is a transvection", c.has_transvection));
    let s = lc.strand_report(-2)?;
    r.checks.push(Check::new("cokernel rank refused", TRANSVECTION_MARKER, s.marker.clone().unwrap_or_default()));
    r.checks.push(Check::new("a-invariant refused", Error::TransvectionsPresent, lc.a_invariant(None).unwrap_err()));
    let strand = lc.build_strand(-2)?;
    let g = &lc.action().group().generators()[0];
    r.checks.push(Check::flag("(1-g) is zero on k=-2", lc.act_on_strand(g, &strand)?.one_minus().is_zero()));
    r.cross_checks.push(Check::new("k=-2 rank_fixed", 1, s.rank_fixed));
    if let Some(pa) = &p.presentation {
        r.cross_checks.push(Check::new("a-invariant via K[e1, e2]", -3, pa.presented_a_invariant(None)?));
    }
    r.cross_checks.push(socle_check(&lc)?);
    Ok(r)
}

fn a3() -> Result<Report> {
    let p = problem("a3")?;
    let mut r = Report::new("a3", "reproduce");
    let expected = polys(&p, &["x+y+z", "x*y+y*z+z*x", "x*y*z", "x^2*y+y^2*z+z^2*x"])?;
    let gens = p.action.algebra_generators_up_to(3)?;
    let degrees: Vec<u32> = gens.iter().map(|g| g.1).collect();
    r.checks.push(Check::new("generator degrees", "[1, 2, 3, 3]", format!("{degrees:?}")));
    let found: Vec<Poly> = gens.into_iter().map(|g| g.0).collect();
    let forward = SubalgebraMembership::new(&p.ring, &found)?;
    let back = SubalgebraMembership::new(&p.ring, &expected)?;
    let same = expected.iter().all(|e| forward.test(e).is_ok_and(|t| t.0)) && found.iter().all(|f| back.test(f).is_ok_and(|t| t.0));
    r.checks.push(Check::flag("generators span e1, e2, e3, D", same));
    let ok = p.relations.first().map(|rel| verify_relation(rel, &p.invariant_generators)).transpose()?;
    r.checks.push(Check::flag("D^2 - e1 e2 D + e2^3 + e1^3 e3 = 0", ok == Some(true)));
    r.checks.push(Check::flag("D lies in (e1, e2, e3)", ideal_member(&expected[3], &expected[..3])?));

    let lc = p.local_cohomology()?;
    let g = &lc.action().group().generators()[0];
    let d = "(x^2*y+y^2*z+z^2*x)";
    let classes = [
        (format!("x*{d}"), [2, 1, 1], -3),
        (d.to_string(), [2, 1, 1], -4),
        (d.to_string(), [1, 2, 1], -5),
        ("1".to_string(), [1, 1, 1], -6),
    ];
    for (num, exps, degree) in classes {
        let c = CechClass::with_denominator(lc.hsop(), p.poly(&num)?, &exps)?;
        let strand = lc.hsop().build_strand_with_min_power(c.degree, c.power)?;
        let coords = strand.class_coordinates(lc.hsop(), &c)?;
        let moved = strand.class_coordinates(lc.hsop(), &lc.act_on_class(g, &c)?)?;
        let good = c.degree == degree && !lc.class_is_zero(&c)? && coords == moved;
        r.checks.push(Check::flag(format!("class at {degree} is nonzero and fixed"), good));
    }
    let table = lc.hilbert_of_h(-8..=-3)?;
    let equal = table.rows.iter().all(|s| s.rank_h == Some(s.rank_fixed));
    r.checks.push(Check::flag("rank_H = rank_fixed on [-8, -3]", equal));
    r.checks.push(Check::new("a-invariant", -3, lc.a_invariant(None)?));
    if let Some(pa) = &p.presentation {
        let mut agree = true;
        for s in &table.rows {
            agree &= Some(pa.direct_strand_rank(s.degree)?) == s.rank_h;
        }
        r.cross_checks.push(Check::flag("presented direct ranks equal rank_H on [-8, -3]", agree));
    }
    r.cross_checks.push(socle_check(&lc)?);
    Ok(r)
}

fn klein3() -> Result<Report> {
    let p = problem("klein3")?;
    let mut r = Report::new("klein3", "reproduce");
    let gens: Vec<Poly> = p.action.algebra_generators_up_to(2)?.into_iter().map(|g| g.0).collect();
    r.checks.push(Check::new("generators up to degree 2", 3, gens.len()));
    let expected = polys(&p, &["z", "x^2+x*z", "y^2+y*z"])?;
    let back = SubalgebraMembership::new(&p.ring, &expected)?;
    let forward = SubalgebraMembership::new(&p.ring, &gens)?;
    let same = gens.iter().all(|g| back.test(g).is_ok_and(|t| t.0)) && expected.iter().all(|e| forward.test(e).is_ok_and(|t| t.0));
    r.checks.push(Check::flag("they span z, x^2+xz, y^2+yz", same));
    let c = p.action.group().classify();
    r.cross_checks.push(Check::new("group order", 4, c.order));
    r.cross_checks.push(Check::flag("generators are transvections", c.has_transvection));
    let dims: Vec<usize> = p.action.invariant_spaces(0..=4)?.iter().map(|s| s.dimension()).collect();
    if let Some(pa) = &p.presentation {
        r.cross_checks.push(Check::new("invariant dims match K[c, p, q]", format!("{:?}", pa.hilbert(0..=4)), format!("{dims:?}")));
        r.cross_checks.push(Check::new("a-invariant via K[c, p, q]", -5, pa.presented_a_invariant(None)?));
    }
    r.cross_checks.push(socle_check(&p.local_cohomology()?)?);
    Ok(r)
}

fn klein6() -> Result<Report> {
    let p = problem("klein6")?;
    let mut r = Report::new("klein6", "reproduce");
    let lc = p.local_cohomology()?;
    for (k, dim_v, rank_h, rank_fixed) in [(-6, 1, 1, 1), (-7, 6, 2, 4)] {
        let s = lc.strand_report(k)?;
        r.checks.push(Check::new(format!("k={k} dimV"), dim_v, s.dim_v));
        r.checks.push(Check::new(format!("k={k} rank_H"), rank_h.to_string(), s.rank_h.map_or("-".into(), |v| v.to_string())));
        r.checks.push(Check::new(format!("k={k} rank_fixed"), rank_fixed, s.rank_fixed));
    }
    r.checks.push(Check::new("a-invariant", -6, lc.a_invariant(None)?));
    let pa = p.presentation.as_ref().ok_or(Error::CMNotAsserted)?;
    r.cross_checks.push(Check::new("presented Hilbert function", "[1, 2, 9]", format!("{:?}", pa.hilbert(0..=2))));
    for (k, expected) in [(-6, 1), (-7, 2)] {
        r.cross_checks.push(Check::new(format!("direct rank at k={k}"), expected, pa.direct_strand_rank(k)?));
    }
    r.cross_checks.push(Check::new("presented a-invariant", -6, pa.presented_a_invariant(None)?));
    let dims: Vec<usize> = p.action.invariant_spaces(0..=4)?.iter().map(|s| s.dimension()).collect();
    r.cross_checks.push(Check::new("invariant dims match the presentation", format!("{:?}", pa.hilbert(0..=4)), format!("{dims:?}")));
    let ok = p.relations.iter().map(|rel| verify_relation(rel, &p.invariant_generators)).collect::<Result<Vec<_>>>()?;
    r.cross_checks.push(Check::flag("relations vanish on the generators", ok.iter().all(|&b| b)));
    r.cross_checks.push(socle_check(&lc)?);
    Ok(r)
}

fn braun() -> Result<Report> {
    let p = problem("braun")?;
    let mut r = Report::new("braun", "reproduce");
    let lc = p.local_cohomology()?;
    let c = lc.classification();
    r.checks.push(Check::flag("order divisible by 4 and 3", c.order % 12 == 0));
    r.checks.push(Check::flag("contains a transvection", c.has_transvection));
    r.checks.push(Check::flag("lies in SL_2", c.in_sl));
    r.cross_checks.push(Check::new("order", 12, c.order));
    r.cross_checks.push(Check::flag("cokernel rank refused", lc.strand_report(-2)?.rank_h.is_none()));
    r.cross_checks.push(socle_check(&lc)?);
    Ok(r)
}

/// `a = -n` exactly for groups in SL without pseudoreflections.
fn battery() -> Result<Report> {
    let mut r = Report::new("a_battery", "reproduce");
    for &(id, expected) in BATTERY {
        let p = problem(id)?;
        let c = p.action.group().classify();
        let a = report::a_invariant(&p, None)?.a_invariant.and_then(|a| a.value).ok_or(Error::TransvectionsPresent)?;
        let n = p.n() as i64;
        r.checks.push(Check::new(format!("{id} a-invariant"), expected, a));
        let predicted = c.in_sl && !c.has_pseudoreflection;
        r.checks.push(Check::new(format!("{id} a = -n (predicted by SL, no pseudoreflections)"), predicted, a == -n));
        let mut socle = socle_check(&p.local_cohomology()?)?;
        socle.name = format!("{id} {}", socle.name);
        r.cross_checks.push(socle);
    }
    let combos: std::collections::BTreeSet<(bool, bool)> = BATTERY
        .iter()
        .map(|(id, _)| problem(id).map(|p| {
            let c = p.action.group().classify();
            (c.in_sl, c.has_pseudoreflection)
        }))
        .collect::<Result<_>>()?;
    r.checks.push(Check::new("SL x pseudoreflection combinations covered", 4, combos.len()));
    Ok(r)
}
