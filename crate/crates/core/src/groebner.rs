//! Buchberger's algorithm with the normal selection strategy and both of
//! Buchberger's pair criteria, plus the decision procedures built on a
//! reduced basis: normal forms, ideal membership, zero-dimensionality,
//! standard monomials, quotient Hilbert functions and subalgebra membership.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, RingCtx};

/// Default cap on the number of S-pairs Buchberger may process.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// Environment variable overriding [`DEFAULT_PAIR_BUDGET`].
pub const PAIR_BUDGET_ENV: &str = "MIL_PAIR_BUDGET";

pub fn pair_budget() -> usize {
    std::env::var(PAIR_BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_PAIR_BUDGET)
}

/// A reduced, monic Gröbner basis together with the generators it came from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    generators: Vec<Poly>,
    source: Vec<Poly>,
}

/// Standard monomials of one degree of `P / I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasisSlice {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl QuotientBasisSlice {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// Reduces `f` completely against `basis` (monic polynomials).
fn reduce(f: &Poly, basis: &[Poly]) -> Poly {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut p = f.clone();
    let mut rest: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        match basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m))) {
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient_of(&m);
                p = p.merge_shifted(g, field.neg(c), &q);
            }
            None => {
                rest.push((m, c));
                let tail = p.terms()[1..].to_vec();
                p = Poly::from_sorted(&ring, tail);
            }
        }
    }
    Poly::from_sorted(&ring, rest)
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(&lg);
    let field = f.ring().field();
    let a = f.mul_term(&lf.quotient_of(&l), Scalar::ONE);
    a.merge_shifted(g, field.neg(Scalar::ONE), &lg.quotient_of(&l))
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `gens` under the default pair budget.
    pub fn new(ring: &Ring, gens: &[Poly]) -> Result<GroebnerBasis> {
        Self::with_budget(ring, gens, pair_budget())
    }

    pub fn with_budget(ring: &Ring, gens: &[Poly], budget: usize) -> Result<GroebnerBasis> {
        if gens.iter().any(|g| !g.same_ring(&Poly::zero(ring))) {
            return Err(Error::ContextMismatch);
        }
        let source = gens.to_vec();
        let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(Poly::monic).collect();
        if basis.iter().any(|g| g.leading_monomial() == Some(Monomial::one())) {
            return Ok(GroebnerBasis { ring: ring.clone(), generators: vec![Poly::one(ring)], source });
        }

        let mut pending: Vec<(usize, usize)> = Vec::new();
        let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pending.push((i, j));
                pending_set.insert((i, j));
            }
        }
        let lcm_of = |b: &[Poly], (i, j): (usize, usize)| {
            b[i].leading_monomial().unwrap().lcm(&b[j].leading_monomial().unwrap())
        };
        let mut processed = 0usize;
        while !pending.is_empty() {
            // Normal strategy: smallest lcm first.
            let mut best = 0;
            let mut best_lcm = lcm_of(&basis, pending[0]);
            for (idx, &pair) in pending.iter().enumerate().skip(1) {
                let l = lcm_of(&basis, pair);
                if ring.cmp(&l, &best_lcm) == Ordering::Less {
                    best = idx;
                    best_lcm = l;
                }
            }
            let (i, j) = pending.swap_remove(best);
            pending_set.remove(&(i, j));
            processed += 1;
            if processed > budget {
                return Err(Error::PairBudgetExceeded(budget));
            }
            let (li, lj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
            if li.is_coprime(&lj) {
                continue;
            }
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].leading_monomial().unwrap().divides(&best_lcm)
                    && !pending_set.contains(&key(i, k))
                    && !pending_set.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            if r.leading_monomial() == Some(Monomial::one()) {
                return Ok(GroebnerBasis { ring: ring.clone(), generators: vec![Poly::one(ring)], source });
            }
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                pending.push((k, new));
                pending_set.insert((k, new));
            }
        }
        Ok(GroebnerBasis { ring: ring.clone(), generators: auto_reduce(basis), source })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn source(&self) -> &[Poly] {
        &self.source
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(Poly::leading_monomial).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.leading_monomial() == Some(Monomial::one()))
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        assert!(f.same_ring(&Poly::zero(&self.ring)), "normal form across rings");
        reduce(f, &self.generators)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether `m` lies outside the leading-term ideal.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.generators.iter().any(|g| g.leading_monomial().unwrap().divides(m))
    }

    /// True iff every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit_ideal() {
            return true;
        }
        let lms = self.leading_monomials();
        (0..self.ring.nvars()).all(|i| {
            lms.iter().any(|m| m.exp(i) > 0 && (0..self.ring.nvars()).all(|j| j == i || m.exp(j) == 0))
        })
    }

    pub fn standard_monomials(&self, degree: u32) -> QuotientBasisSlice {
        let monomials = self.ring.monomials_of_degree(degree).into_iter().filter(|m| self.is_standard(m)).collect();
        QuotientBasisSlice { degree, monomials }
    }

    /// Hilbert function of the quotient at each degree of `degrees`.
    pub fn quotient_hilbert(&self, degrees: std::ops::RangeInclusive<u32>) -> Vec<usize> {
        degrees.map(|d| self.standard_monomials(d).len()).collect()
    }

    /// All standard monomials of a zero-dimensional homogeneous ideal, grouped by degree.
    pub fn all_standard_monomials(&self) -> Result<Vec<QuotientBasisSlice>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotAnHsop);
        }
        let wmax = self.ring.weights().iter().copied().max().unwrap_or(1) as usize;
        let mut out = Vec::new();
        let mut empty_run = 0;
        let mut d = 0;
        while empty_run < wmax {
            let s = self.standard_monomials(d);
            if s.is_empty() {
                empty_run += 1;
            } else {
                empty_run = 0;
            }
            out.push(s);
            d += 1;
        }
        while out.last().is_some_and(|s| s.is_empty()) {
            out.pop();
        }
        Ok(out)
    }
}

/// Removes redundant elements and tail-reduces the rest; sorted by ascending leading monomial.
fn auto_reduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();
    basis.sort_by(|a, b| ring.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(&lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        let (lm, lc) = minimal[i].leading_term().unwrap();
        let tail = Poly::from_sorted(&ring, minimal[i].terms()[1..].to_vec());
        let tail = reduce(&tail, &others);
        reduced.push(Poly::monomial(&ring, lm, lc).checked_add(&tail).unwrap().monic());
    }
    reduced
}

pub fn buchberger(ring: &Ring, gens: &[Poly]) -> Result<GroebnerBasis> {
    GroebnerBasis::new(ring, gens)
}

pub fn ideal_member(f: &Poly, gens: &[Poly]) -> Result<bool> {
    let gb = GroebnerBasis::new(f.ring(), gens)?;
    Ok(gb.contains(f))
}

/// Membership tests in the subalgebra `K[g_1, ..., g_m]` via tag variables.
///
/// The ideal `(t_i - g_i)` lives in `K[x, t]` with a block order putting the
/// original variables first; `f` is in the subalgebra iff its normal form
/// only involves the tags, and that normal form is the certificate.
#[derive(Clone, Debug)]
pub struct SubalgebraMembership {
    base: Ring,
    gens: Vec<Poly>,
    extended: Ring,
    tags: Ring,
    gb: GroebnerBasis,
}

impl SubalgebraMembership {
    pub fn new(base: &Ring, gens: &[Poly]) -> Result<Self> {
        if gens.iter().any(|g| !g.is_homogeneous() || g.is_zero()) {
            return Err(Error::NonHomogeneousInput);
        }
        let n = base.nvars();
        let m = gens.len();
        let tag_names: Vec<String> = (1..=m).map(|i| format!("t{i}")).collect();
        let tag_weights: Vec<u32> = gens.iter().map(|g| g.degree().unwrap().max(1)).collect();
        let mut names: Vec<String> = base.names().iter().map(|s| format!("_{s}")).collect();
        names.extend(tag_names.iter().cloned());
        let mut weights = base.weights().to_vec();
        weights.extend(&tag_weights);
        let extended = RingCtx::weighted(base.field(), names, weights, MonomialOrder::Block { split: n })?;
        let tags = RingCtx::weighted(base.field(), tag_names, tag_weights, MonomialOrder::GrevLex)?;
        let xmap: Vec<usize> = (0..n).collect();
        let ideal: Vec<Poly> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| &Poly::var(&extended, n + i) - &g.embed(&extended, &xmap))
            .collect();
        let gb = GroebnerBasis::new(&extended, &ideal)?;
        Ok(SubalgebraMembership { base: base.clone(), gens: gens.to_vec(), extended, tags, gb })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// Ring of the certificate expressions, variables `t1..tm`.
    pub fn tag_ring(&self) -> &Ring {
        &self.tags
    }

    pub fn test(&self, f: &Poly) -> Result<(bool, Option<Poly>)> {
        if !f.same_ring(&Poly::zero(&self.base)) {
            return Err(Error::ContextMismatch);
        }
        if !f.is_homogeneous() {
            return Err(Error::NonHomogeneousInput);
        }
        let n = self.base.nvars();
        let xmap: Vec<usize> = (0..n).collect();
        let nf = self.gb.normal_form(&f.embed(&self.extended, &xmap));
        if nf.terms().iter().any(|(m, _)| (0..n).any(|i| m.exp(i) > 0)) {
            return Ok((false, None));
        }
        let terms = nf.terms().iter().map(|(m, c)| {
            let exps: Vec<u16> = (0..self.gens.len()).map(|i| m.exp(n + i)).collect();
            (Monomial::from_exponents(&exps), *c)
        });
        Ok((true, Some(Poly::from_terms(&self.tags, terms))))
    }
}

pub fn subalgebra_member(f: &Poly, gens: &[Poly]) -> Result<(bool, Option<Poly>)> {
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneousInput);
    }
    SubalgebraMembership::new(f.ring(), gens)?.test(f)
}
