//! The linear action of a matrix group on `K[x_1..x_n]`: transfer, Reynolds
//! operator, invariant subspaces, generator discovery and hsop checks.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{GroebnerBasis, SubalgebraMembership};
use crate::group::FiniteMatrixGroup;
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly, Ring};

/// A group acting on a polynomial ring by `x_i -> sum_j M_ij x_j`.
///
/// Note that this substitution reverses products: acting by `M` and then by
/// `N` is the same as acting by `N * M`.
#[derive(Clone, Debug)]
pub struct ActionCtx {
    group: FiniteMatrixGroup,
    ring: Ring,
}

#[derive(Clone, Debug)]
pub struct InvariantBasisSlice {
    pub degree: u32,
    pub basis: Vec<Poly>,
}

impl InvariantBasisSlice {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

impl ActionCtx {
    pub const MAX_VARS: usize = 16;

    pub fn new(group: FiniteMatrixGroup, ring: &Ring) -> Result<ActionCtx> {
        if group.dimension() != ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrices acting on {} variables",
                group.dimension(),
                group.dimension(),
                ring.nvars()
            )));
        }
        if ring.nvars() > Self::MAX_VARS {
            return Err(Error::DimensionMismatch(format!("at most {} variables", Self::MAX_VARS)));
        }
        if group.field() != ring.field() {
            return Err(Error::ContextMismatch);
        }
        Ok(ActionCtx { group, ring: ring.clone() })
    }

    pub fn group(&self) -> &FiniteMatrixGroup {
        &self.group
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn act(&self, g: &Matrix, f: &Poly) -> Result<Poly> {
        if !f.same_ring(&Poly::zero(&self.ring)) {
            return Err(Error::ContextMismatch);
        }
        f.linear_substitute(g)
    }

    /// Fixed by every generator, hence by the group.
    pub fn is_invariant(&self, f: &Poly) -> Result<bool> {
        for g in self.group.generators() {
            if self.act(g, f)? != *f {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn transfer(&self, f: &Poly) -> Result<Poly> {
        let mut acc = Poly::zero(&self.ring);
        for g in self.group.elements() {
            acc = &acc + &self.act(g, f)?;
        }
        Ok(acc)
    }

    /// Relative transfer `sum_{r in reps} r(f)` for an `H`-invariant `f`.
    ///
    /// Since `(h r)(f) = r(h(f)) = r(f)`, the value depends only on the cosets
    /// `{h r : h in H}`; the representatives must pick exactly one element from
    /// each of them.
    pub fn transfer_coset(&self, f: &Poly, subgroup: &[Matrix], reps: &[Matrix]) -> Result<Poly> {
        for h in subgroup {
            if !self.group.contains(h) {
                return Err(Error::InvalidCosets("subgroup element outside the group".into()));
            }
            if self.act(h, f)? != *f {
                return Err(Error::NotHInvariant);
            }
        }
        let mut covered: HashSet<usize> = HashSet::new();
        for r in reps {
            if !self.group.contains(r) {
                return Err(Error::InvalidCosets("representative outside the group".into()));
            }
            for h in subgroup {
                let idx = self.group.index_of(&h.mul(r)?).ok_or(Error::NotInvertible)?;
                if !covered.insert(idx) {
                    return Err(Error::InvalidCosets("two representatives share a coset".into()));
                }
            }
        }
        if covered.len() != self.group.order() || subgroup.len() * reps.len() != self.group.order() {
            return Err(Error::InvalidCosets(format!(
                "{} representatives of {} cosets",
                reps.len(),
                self.group.order() / subgroup.len().max(1)
            )));
        }
        let mut acc = Poly::zero(&self.ring);
        for r in reps {
            acc = &acc + &self.act(r, f)?;
        }
        Ok(acc)
    }

    pub fn reynolds(&self, f: &Poly) -> Result<Poly> {
        if self.group.is_modular() {
            return Err(Error::ModularCase);
        }
        let inv = self.ring.field().inv(self.group.order_in_field())?;
        Ok(self.transfer(f)?.scalar_mul(inv))
    }

    /// Matrix of `g - 1` on the monomial basis of degree `d`, columns indexed by `basis`.
    fn difference_matrix(&self, g: &Matrix, basis: &[Monomial], index: &HashMap<Monomial, usize>) -> Result<Matrix> {
        let field = self.ring.field();
        let mut out = Matrix::zeros(field, basis.len(), basis.len());
        for (j, m) in basis.iter().enumerate() {
            let image = self.act(g, &Poly::monomial(&self.ring, *m, Scalar::ONE))?;
            for (mm, c) in image.terms() {
                out.set(index[mm], j, *c);
            }
            out.set(j, j, field.sub(out.get(j, j), Scalar::ONE));
        }
        Ok(out)
    }

    /// Basis of `(R_d)^G`: the common kernel of `g - 1` over the generators.
    pub fn invariant_space(&self, d: u32) -> Result<InvariantBasisSlice> {
        let basis = self.ring.monomials_of_degree(d);
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let blocks = self
            .group
            .generators()
            .iter()
            .map(|g| self.difference_matrix(g, &basis, &index))
            .collect::<Result<Vec<_>>>()?;
        let stacked = Matrix::vstack(self.ring.field(), &blocks, basis.len());
        let polys = stacked
            .kernel()
            .into_iter()
            .map(|v| Poly::from_terms(&self.ring, basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c))))
            .collect();
        Ok(InvariantBasisSlice { degree: d, basis: polys })
    }

    pub fn invariant_spaces(&self, degrees: std::ops::RangeInclusive<u32>) -> Result<Vec<InvariantBasisSlice>> {
        degrees.collect::<Vec<_>>().into_par_iter().map(|d| self.invariant_space(d)).collect()
    }

    /// Greedy generators of the invariant ring up to degree `max_degree`.
    pub fn algebra_generators_up_to(&self, max_degree: u32) -> Result<Vec<(Poly, u32)>> {
        let mut gens: Vec<Poly> = Vec::new();
        let mut out = Vec::new();
        for d in 1..=max_degree {
            let slice = self.invariant_space(d)?;
            let mut membership = if gens.is_empty() { None } else { Some(SubalgebraMembership::new(&self.ring, &gens)?) };
            for b in slice.basis {
                let member = match &membership {
                    Some(m) => m.test(&b)?.0,
                    None => false,
                };
                if !member {
                    gens.push(b.clone());
                    out.push((b, d));
                    membership = Some(SubalgebraMembership::new(&self.ring, &gens)?);
                }
            }
        }
        Ok(out)
    }

    /// Whether `ys` is a homogeneous system of parameters for the invariant ring.
    pub fn verify_hsop(&self, ys: &[Poly]) -> Result<bool> {
        if ys.len() != self.ring.nvars() {
            return Err(Error::WrongCount { expected: self.ring.nvars(), got: ys.len() });
        }
        for y in ys {
            if y.is_zero() || !y.is_homogeneous() {
                return Err(Error::NonHomogeneousInput);
            }
            if !self.is_invariant(y)? {
                return Err(Error::NotInvariant(y.to_string()));
            }
        }
        Ok(GroebnerBasis::new(&self.ring, ys)?.is_zero_dimensional())
    }

    /// Product of the distinct polynomials in the orbit of `f`; always invariant.
    pub fn orbit_product(&self, f: &Poly) -> Result<Poly> {
        let mut seen: Vec<Poly> = Vec::new();
        for g in self.group.elements() {
            let image = self.act(g, f)?;
            if !seen.contains(&image) {
                seen.push(image);
            }
        }
        Ok(seen.iter().fold(Poly::one(&self.ring), |acc, p| &acc * p))
    }
}

/// Substitutes `gens` for the formal variables of `relation` and tests for zero.
pub fn verify_relation(relation: &Poly, gens: &[Poly]) -> Result<bool> {
    let expected = relation.ring().nvars();
    if gens.len() != expected {
        return Err(Error::ArityMismatch { expected, got: gens.len() });
    }
    let Some(first) = gens.first() else {
        return Ok(relation.is_zero());
    };
    Ok(relation.substitute(first.ring(), gens)?.is_zero())
}
