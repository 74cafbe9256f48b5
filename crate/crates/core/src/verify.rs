//! Property suites run by `mil verify`. The oracles here avoid Gröbner bases:
//! ideal slices are spanned directly by `g * x^a` and ranked by elimination.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{binomial, CechClass, LocalCohomology, SplittingRule};
use crate::error::Result;
use crate::field::Scalar;
use crate::groebner::GroebnerBasis;
use crate::linalg::span_rank;
use crate::poly::{Monomial, Poly, Ring};
use crate::problem::Problem;
use crate::report::{Check, Report};

const SEED: u64 = 0x5eed;
const SAMPLES: usize = 8;

fn coefficient_vector(p: &Poly, basis: &[Monomial]) -> Vec<Scalar> {
    basis.iter().map(|m| p.coefficient(m)).collect()
}

/// Spanning set of `(gens) ∩ R_m`.
fn ideal_slice(ring: &Ring, gens: &[Poly], m: u32) -> Vec<Poly> {
    let mut out = Vec::new();
    for g in gens {
        let dg = g.degree().expect("homogeneous generator");
        if dg > m {
            continue;
        }
        for mono in ring.monomials_of_degree(m - dg) {
            out.push(g.mul_term(&mono, Scalar::ONE));
        }
    }
    out
}

/// `dim (R / (gens))_m` by linear algebra.
pub fn linear_quotient_dimension(ring: &Ring, gens: &[Poly], m: u32) -> usize {
    let basis = ring.monomials_of_degree(m);
    let rows: Vec<Vec<Scalar>> = ideal_slice(ring, gens, m).iter().map(|p| coefficient_vector(p, &basis)).collect();
    basis.len() - span_rank(ring.field(), &rows, basis.len())
}

/// Membership of a homogeneous `f` in `(gens)` by linear algebra.
pub fn linear_member(f: &Poly, gens: &[Poly]) -> bool {
    let Ok(m) = f.degree() else {
        return true;
    };
    let ring = f.ring();
    let basis = ring.monomials_of_degree(m);
    let mut rows: Vec<Vec<Scalar>> = ideal_slice(ring, gens, m).iter().map(|p| coefficient_vector(p, &basis)).collect();
    let before = span_rank(ring.field(), &rows, basis.len());
    rows.push(coefficient_vector(f, &basis));
    before == span_rank(ring.field(), &rows, basis.len())
}

pub fn random_form(rng: &mut ChaCha8Rng, ring: &Ring, degree: u32) -> Poly {
    let field = ring.field();
    let q = field.order();
    let terms = ring.monomials_of_degree(degree).into_iter().filter_map(|m| {
        let c = field.elements().nth(rng.gen_range(0..q) as usize).expect("in range");
        (!c.is_zero() && rng.gen_bool(0.5)).then_some((m, c))
    });
    Poly::from_terms(ring, terms)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// `Tr(s f) = s Tr(f)`, `Tr(s) = |G| s`, and `Tr(f)` is invariant.
pub fn transfer_checks(problem: &Problem) -> Result<Vec<Check>> {
    let action = &problem.action;
    let mut rng = rng();
    let invariants: Vec<Poly> = (1..=2).map(|d| action.invariant_space(d)).collect::<Result<Vec<_>>>()?.into_iter().flat_map(|s| s.basis).collect();
    let order = problem.field.from_int(action.group().order() as i64);
    let (mut linear, mut restricted, mut fixed) = (true, true, true);
    for i in 0..SAMPLES {
        let f = random_form(&mut rng, &problem.ring, 1 + (i as u32 % 3));
        let t = action.transfer(&f)?;
        fixed &= action.is_invariant(&t)?;
        if let Some(s) = invariants.get(i % invariants.len().max(1)) {
            linear &= action.transfer(&(s * &f))? == s * &t;
            restricted &= action.transfer(s)? == s.scalar_mul(order);
        }
    }
    Ok(vec![
        Check::flag("transfer output is invariant", fixed),
        Check::flag("transfer is R^G-linear", linear),
        Check::flag("transfer on R^G is |G| id", restricted),
    ])
}

/// Normal forms are idempotent, differ from the input by an ideal element,
/// and Gröbner membership agrees with the linear oracle.
pub fn normal_form_checks(ring: &Ring, gens: &[Poly]) -> Result<Vec<Check>> {
    let gb = GroebnerBasis::new(ring, gens)?;
    let mut rng = rng();
    let (mut idem, mut diff, mut member) = (true, true, true);
    for i in 0..SAMPLES {
        let d = 1 + (i as u32 % 4);
        let f = random_form(&mut rng, ring, d);
        let nf = gb.normal_form(&f);
        idem &= gb.normal_form(&nf) == nf;
        diff &= linear_member(&(&f - &nf), gens);
        // Half the samples are forced into the ideal.
        let g = if i % 2 == 0 {
            ideal_slice(ring, gens, d + 1).iter().take(3).fold(Poly::zero(ring), |acc, p| &acc + p)
        } else {
            random_form(&mut rng, ring, d)
        };
        member &= gb.contains(&g) == linear_member(&g, gens);
    }
    Ok(vec![
        Check::flag("normal form is idempotent", idem),
        Check::flag("f - NF(f) lies in the ideal", diff),
        Check::flag("membership agrees with the linear oracle", member),
    ])
}

/// Strand dimensions against `C(-k-1, n-1)` and against the linear quotient count.
pub fn strand_dimension_checks(lc: &LocalCohomology, depth: i64) -> Result<Vec<Check>> {
    let hsop = lc.hsop();
    let n = lc.n();
    let ring = hsop.ring();
    let mut closed = true;
    let mut brute = true;
    for j in 0..=depth {
        let k = -n - j;
        let s = hsop.build_strand(k)?;
        closed &= s.dimension() == binomial(n - 1 + j, n - 1);
        if n <= 3 {
            let powers: Vec<Poly> = hsop.parameters().iter().map(|y| y.pow(s.power)).collect();
            brute &= linear_quotient_dimension(ring, &powers, s.internal_degree as u32) == s.dimension();
        }
    }
    let mut out = vec![Check::flag("strand dims equal C(-k-1, n-1)", closed)];
    if n <= 3 {
        out.push(Check::flag("strand dims match the linear quotient count", brute));
    }
    Ok(out)
}

/// Both splitting rules give the same socle class, on which `g` acts by `det(g)^-1`.
pub fn socle_checks(lc: &LocalCohomology) -> Result<Vec<Check>> {
    let a = lc.socle_class(SplittingRule::SmallestIndex)?;
    let b = lc.socle_class(SplittingRule::LargestIndex)?;
    let diff = CechClass { numerator: &a.numerator - &b.numerator, ..a.clone() };
    let field = lc.action().ring().field();
    let mut det_inverse = true;
    for g in lc.action().group().elements() {
        det_inverse &= field.mul(lc.socle_action_scalar(g)?, g.determinant()?) == field.one();
    }
    Ok(vec![
        Check::flag("socle class is nonzero in degree -n", a.degree == -lc.n() && !lc.class_is_zero(&a)?),
        Check::flag("socle class is independent of the splitting", lc.class_is_zero(&diff)?),
        Check::flag("socle scalar is det^-1", det_inverse),
    ])
}

/// Duality, rank-nullity for one generator, and exactness without `p | |G|`.
pub fn strand_checks(lc: &LocalCohomology, lo: i64, hi: i64) -> Result<Vec<Check>> {
    let group = lc.action().group();
    let cyclic_gen = group.generators().len() == 1;
    let exact = !group.is_modular() && !lc.classification().has_transvection;
    let (mut dual, mut nullity, mut exactness) = (true, true, true);
    for k in lo..=hi {
        let r = lc.strand_report(k)?;
        dual &= r.dim_v - r.dim_w == lc.dual_fixed_dimension(k)?;
        if cyclic_gen {
            nullity &= r.rank_fixed == r.dim_v - r.dim_w;
        }
        if exact {
            exactness &= r.rank_h == Some(r.rank_fixed);
        }
    }
    let mut out = vec![Check::flag("dimV - dimW equals the dual fixed dimension", dual)];
    if cyclic_gen {
        out.push(Check::flag("rank-nullity for the single generator", nullity));
    }
    if exact {
        out.push(Check::flag("nonmodular: rank_H = rank_fixed", exactness));
    }
    Ok(out)
}

/// Everything applicable to one problem.
pub fn verify(problem: &Problem) -> Result<Report> {
    let mut r = Report::new(problem.name(), "verify");
    r.checks.extend(transfer_checks(problem)?);
    if let Some(ys) = &problem.hsop {
        r.checks.extend(normal_form_checks(&problem.ring, ys)?);
        let lc = problem.local_cohomology()?;
        let depth = if problem.n() <= 3 { 3 } else { 1 };
        r.checks.extend(strand_dimension_checks(&lc, depth)?);
        r.checks.extend(socle_checks(&lc)?);
        let (lo, hi) = problem.spec.windows.lc.unwrap_or((-lc.n() - 2, -lc.n()));
        let (lo, hi) = (lo.min(hi), lo.max(hi));
        r.checks.extend(strand_checks(&lc, lo, hi)?);
        if let Some(pa) = problem.presentation.as_ref().filter(|pa| pa.cm_asserted()) {
            if !lc.classification().has_transvection {
                let mut agree = true;
                for k in lo..=hi {
                    agree &= Some(pa.direct_strand_rank(k)?) == lc.strand_report(k)?.rank_h;
                }
                r.cross_checks.push(Check::flag("direct presented ranks equal rank_H", agree));
            }
        }
    } else {
        r.flags.push("no hsop: strand checks skipped".into());
    }
    for (i, rel) in problem.relations.iter().enumerate() {
        let ok = crate::invariants::verify_relation(rel, &problem.invariant_generators)?;
        r.cross_checks.push(Check::flag(format!("relation {} vanishes", i + 1), ok));
    }
    Ok(r)
}
