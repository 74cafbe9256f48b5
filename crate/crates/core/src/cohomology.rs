//! Top local cohomology through Čech classes `[r / (y_1 ... y_n)^d]`.
//!
//! A degree-`k` strand of `H^n(R)` is realised inside the Artinian quotient
//! `A_d = R / (y_1^d, ..., y_n^d)` at internal degree `k + d * Σ deg y_i`, for
//! the least power `d` at which that slice already has full dimension.
//! Multiplication by `y_1 ... y_n` embeds `A_d` into `A_{d+1}`, so the group
//! action on a strand is read off from normal forms in a single quotient.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::GroebnerBasis;
use crate::group::GroupClassification;
use crate::invariants::ActionCtx;
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly, Ring};

/// Largest power `d` tried before giving up on a strand.
pub const MAX_POWER: u32 = 256;

pub const TRANSVECTION_MARKER: &str = "transvections present";

type CachedBasis = Arc<OnceLock<Result<Arc<GroebnerBasis>>>>;

/// `C(a, b)`, zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> usize {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128) as usize
}

/// Homogeneous parameters `y_1..y_n` together with lazily computed bases of
/// the ideals `(y_1^d, ..., y_n^d)`, optionally on top of fixed relations.
#[derive(Debug)]
pub struct HsopData {
    ring: Ring,
    ys: Vec<Poly>,
    degrees: Vec<u32>,
    relations: Vec<Poly>,
    cache: Mutex<HashMap<u32, CachedBasis>>,
}

impl Clone for HsopData {
    fn clone(&self) -> Self {
        HsopData {
            ring: self.ring.clone(),
            ys: self.ys.clone(),
            degrees: self.degrees.clone(),
            relations: self.relations.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl HsopData {
    /// Checks that `ys` are `n` homogeneous forms cutting out a zero-dimensional ideal.
    pub fn new(ring: &Ring, ys: Vec<Poly>) -> Result<HsopData> {
        if ys.len() != ring.nvars() {
            return Err(Error::WrongCount { expected: ring.nvars(), got: ys.len() });
        }
        Self::over_relations(ring, Vec::new(), ys)
    }

    fn over_relations(ring: &Ring, relations: Vec<Poly>, ys: Vec<Poly>) -> Result<HsopData> {
        for y in ys.iter().chain(&relations) {
            if !y.same_ring(&Poly::zero(ring)) {
                return Err(Error::ContextMismatch);
            }
            if y.is_zero() || !y.is_homogeneous() {
                return Err(Error::NonHomogeneousInput);
            }
        }
        let degrees = ys.iter().map(|y| y.degree()).collect::<Result<Vec<_>>>()?;
        if degrees.contains(&0) {
            return Err(Error::NotAnHsop);
        }
        let data = HsopData { ring: ring.clone(), ys, degrees, relations, cache: Mutex::new(HashMap::new()) };
        if !data.power_basis(1)?.is_zero_dimensional() {
            return Err(Error::NotAnHsop);
        }
        Ok(data)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn parameters(&self) -> &[Poly] {
        &self.ys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn sigma(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// Basis of `(relations) + (y_1^d, ..., y_n^d)`, computed once per power.
    pub fn power_basis(&self, d: u32) -> Result<Arc<GroebnerBasis>> {
        if d == 0 || d > MAX_POWER {
            return Err(Error::PowerBudgetExceeded(MAX_POWER));
        }
        let cell = self.cache.lock().unwrap().entry(d).or_default().clone();
        cell.get_or_init(|| {
            let mut gens = self.relations.clone();
            gens.extend(self.ys.iter().map(|y| y.pow(d)));
            GroebnerBasis::new(&self.ring, &gens).map(Arc::new)
        })
        .clone()
    }

    /// `(y_1 ... y_n)^e`.
    pub fn parameter_product(&self, e: u32) -> Poly {
        self.ys.iter().fold(Poly::one(&self.ring), |acc, y| &acc * &y.pow(e))
    }

    /// Slice of `R / (y^d)` at `internal` degree; empty for negative degrees.
    fn slice(&self, d: u32, internal: i64) -> Result<Vec<Monomial>> {
        if internal < 0 {
            return Ok(Vec::new());
        }
        Ok(self.power_basis(d)?.standard_monomials(internal as u32).monomials)
    }

    /// Strand of degree `k` with power at least `min_power`, stopping once the
    /// slice reaches `target`.
    fn strand_towards(&self, k: i64, min_power: u32, target: usize) -> Result<Strand> {
        let sigma = self.sigma() as i64;
        let mut d = min_power.max(1);
        if target == 0 {
            return self.strand_at_power(k, d);
        }
        while d <= MAX_POWER {
            let internal = k + d as i64 * sigma;
            if internal >= 0 {
                let basis = self.slice(d, internal)?;
                if basis.len() == target {
                    return self.strand_from_basis(k, d, basis);
                }
                if basis.len() > target {
                    return Err(Error::StabilizationFailure { degree: k, expected: target, got: basis.len() });
                }
            }
            d += 1;
        }
        Err(Error::PowerBudgetExceeded(MAX_POWER))
    }

    fn strand_at_power(&self, k: i64, d: u32) -> Result<Strand> {
        let basis = self.slice(d, k + d as i64 * self.sigma() as i64)?;
        self.strand_from_basis(k, d, basis)
    }

    fn strand_from_basis(&self, k: i64, d: u32, basis: Vec<Monomial>) -> Result<Strand> {
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(Strand {
            degree: k,
            power: d,
            internal_degree: k + d as i64 * self.sigma() as i64,
            basis,
            index,
            gb: self.power_basis(d)?,
            ring: self.ring.clone(),
        })
    }

    /// Strand of `H^n(R)` at degree `k` for the polynomial ring.
    pub fn build_strand(&self, k: i64) -> Result<Strand> {
        self.build_strand_with_min_power(k, 1)
    }

    pub fn build_strand_with_min_power(&self, k: i64, min_power: u32) -> Result<Strand> {
        let n = self.len() as i64;
        self.strand_towards(k, min_power, binomial(-k - 1, n - 1))
    }

    pub fn class(&self, numerator: Poly, power: u32) -> Result<CechClass> {
        CechClass::new(self, numerator, power)
    }

    /// Membership of the numerator in `(y_1^d, ..., y_n^d)`.
    pub fn class_is_zero(&self, c: &CechClass) -> Result<bool> {
        Ok(c.numerator.is_zero() || self.power_basis(c.power)?.contains(&c.numerator))
    }
}

/// A symbol `[numerator / (y_1 ... y_n)^power]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechClass {
    pub numerator: Poly,
    pub power: u32,
    pub degree: i64,
}

impl CechClass {
    pub fn new(hsop: &HsopData, numerator: Poly, power: u32) -> Result<CechClass> {
        if power == 0 {
            return Err(Error::PowerBudgetExceeded(0));
        }
        let deg = numerator.degree()?;
        if !numerator.is_homogeneous() {
            return Err(Error::NonHomogeneousInput);
        }
        Ok(CechClass { numerator, power, degree: deg as i64 - power as i64 * hsop.sigma() as i64 })
    }

    pub fn zero(hsop: &HsopData, degree: i64) -> CechClass {
        CechClass { numerator: Poly::zero(hsop.ring()), power: 1, degree }
    }

    /// `[r / (y_1^{a_1} ... y_n^{a_n})]`, rewritten over a uniform power.
    pub fn with_denominator(hsop: &HsopData, numerator: Poly, exponents: &[u32]) -> Result<CechClass> {
        if exponents.len() != hsop.len() {
            return Err(Error::WrongCount { expected: hsop.len(), got: exponents.len() });
        }
        let d = exponents.iter().copied().max().unwrap_or(1).max(1);
        let lifted = hsop
            .parameters()
            .iter()
            .zip(exponents)
            .fold(numerator, |acc, (y, &a)| &acc * &y.pow(d - a));
        CechClass::new(hsop, lifted, d)
    }

    /// The same class written over `(y_1 ... y_n)^power`.
    pub fn lift(&self, hsop: &HsopData, power: u32) -> Result<CechClass> {
        if power < self.power {
            return Err(Error::PowerTooHigh { class: self.power, strand: power });
        }
        Ok(CechClass {
            numerator: &self.numerator * &hsop.parameter_product(power - self.power),
            power,
            degree: self.degree,
        })
    }

    pub fn scale(&self, c: Scalar) -> CechClass {
        CechClass { numerator: self.numerator.scalar_mul(c), ..self.clone() }
    }
}

/// A degree-`k` strand realised in `A_power` at `internal_degree`.
#[derive(Clone, Debug)]
pub struct Strand {
    pub degree: i64,
    pub power: u32,
    pub internal_degree: i64,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    gb: Arc<GroebnerBasis>,
    ring: Ring,
}

impl Strand {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_polys(&self) -> Vec<Poly> {
        self.basis.iter().map(|m| Poly::monomial(&self.ring, *m, Scalar::ONE)).collect()
    }

    /// Normal-form coordinates of a representative of internal degree.
    pub fn coordinates(&self, r: &Poly) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::ZERO; self.dimension()];
        if r.is_zero() {
            return Ok(out);
        }
        if !r.same_ring(&Poly::zero(&self.ring)) {
            return Err(Error::ContextMismatch);
        }
        if !r.is_homogeneous() || r.degree()? as i64 != self.internal_degree {
            return Err(Error::DimensionMismatch(format!("representative is not of degree {}", self.internal_degree)));
        }
        for (m, c) in self.gb.normal_form(r).terms() {
            out[self.index[m]] = *c;
        }
        Ok(out)
    }

    pub fn class_coordinates(&self, hsop: &HsopData, c: &CechClass) -> Result<Vec<Scalar>> {
        if c.degree != self.degree {
            return Err(Error::DimensionMismatch(format!("class of degree {} on strand {}", c.degree, self.degree)));
        }
        self.coordinates(&c.lift(hsop, self.power)?.numerator)
    }

    pub fn class_of(&self, coords: &[Scalar]) -> CechClass {
        let terms = self.basis.iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, *c));
        CechClass { numerator: Poly::from_terms(&self.ring, terms), power: self.power, degree: self.degree }
    }
}

/// Dimensions on one strand: `W = sum_g im(1 - g)` and the coinvariant rank `dim V - dim W`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandReport {
    pub degree: i64,
    pub power: u32,
    pub internal_degree: i64,
    pub dim_v: usize,
    pub dim_w: usize,
    pub rank_h: Option<usize>,
    pub rank_fixed: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marker: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaEntry {
    pub degree: i64,
    pub rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub rows: Vec<StrandReport>,
    /// Hilbert function of the canonical module, mirrored from `rank_h`.
    pub omega: Vec<OmegaEntry>,
}

/// Rule assigning each term of `y_i` to a column of the matrix `A` with `y = A x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplittingRule {
    SmallestIndex,
    LargestIndex,
}

/// Determinant by expansion along rows, memoised on the remaining column set.
pub fn poly_determinant(ring: &Ring, rows: &[Vec<Poly>]) -> Poly {
    fn go(ring: &Ring, rows: &[Vec<Poly>], i: usize, cols: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if i == rows.len() {
            return Poly::one(ring);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let field = ring.field().clone();
        let mut acc = Poly::zero(ring);
        let mut sign = Scalar::ONE;
        for j in 0..rows.len() {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !rows[i][j].is_zero() {
                let minor = go(ring, rows, i + 1, cols & !(1 << j), memo);
                acc = &acc + &(&rows[i][j] * &minor).scalar_mul(sign);
            }
            sign = field.neg(sign);
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let full = if rows.len() == 32 { u32::MAX } else { (1u32 << rows.len()) - 1 };
    go(ring, rows, 0, full, &mut HashMap::new())
}

/// Strand computations for a group acting with a chosen invariant hsop.
#[derive(Debug)]
pub struct LocalCohomology {
    action: ActionCtx,
    hsop: HsopData,
    classification: GroupClassification,
}

impl LocalCohomology {
    pub fn new(action: ActionCtx, ys: Vec<Poly>) -> Result<LocalCohomology> {
        if !action.verify_hsop(&ys)? {
            return Err(Error::NotAnHsop);
        }
        let hsop = HsopData::new(action.ring(), ys)?;
        let classification = action.group().classify();
        Ok(LocalCohomology { action, hsop, classification })
    }

    pub fn action(&self) -> &ActionCtx {
        &self.action
    }

    pub fn hsop(&self) -> &HsopData {
        &self.hsop
    }

    pub fn classification(&self) -> &GroupClassification {
        &self.classification
    }

    pub fn n(&self) -> i64 {
        self.hsop.len() as i64
    }

    pub fn build_strand(&self, k: i64) -> Result<Strand> {
        self.hsop.build_strand(k)
    }

    pub fn class_is_zero(&self, c: &CechClass) -> Result<bool> {
        self.hsop.class_is_zero(c)
    }

    /// Matrix of `η -> g(η)` on the strand basis; column `j` is the image of basis element `j`.
    pub fn act_on_strand(&self, g: &Matrix, strand: &Strand) -> Result<Matrix> {
        let field = self.action.ring().field();
        let dim = strand.dimension();
        let mut out = Matrix::zeros(field, dim, dim);
        for (j, b) in strand.basis_polys().iter().enumerate() {
            let image = strand.coordinates(&self.action.act(g, b)?)?;
            for (i, c) in image.into_iter().enumerate() {
                out.set(i, j, c);
            }
        }
        Ok(out)
    }

    /// `g(η)` for a class on any strand.
    pub fn act_on_class(&self, g: &Matrix, c: &CechClass) -> Result<CechClass> {
        Ok(CechClass { numerator: self.action.act(g, &c.numerator)?, ..c.clone() })
    }

    fn generator_differences(&self, strand: &Strand) -> Result<Vec<Matrix>> {
        self.action
            .group()
            .generators()
            .iter()
            .map(|g| Ok(self.act_on_strand(g, strand)?.one_minus()))
            .collect()
    }

    pub fn strand_report(&self, k: i64) -> Result<StrandReport> {
        let strand = self.build_strand(k)?;
        let dim_v = strand.dimension();
        let field = self.action.ring().field();
        let diffs = self.generator_differences(&strand)?;
        let (dim_w, rank_fixed) = if dim_v == 0 || diffs.is_empty() {
            (0, dim_v)
        } else {
            (
                Matrix::hstack(field, &diffs, dim_v).rank(),
                dim_v - Matrix::vstack(field, &diffs, dim_v).rank(),
            )
        };
        let licensed = !self.classification.has_transvection;
        Ok(StrandReport {
            degree: k,
            power: strand.power,
            internal_degree: strand.internal_degree,
            dim_v,
            dim_w,
            rank_h: licensed.then_some(dim_v - dim_w),
            rank_fixed,
            marker: (!licensed).then(|| TRANSVECTION_MARKER.to_string()),
        })
    }

    /// Dimension of the fixed space of the transposed action on a strand.
    pub fn dual_fixed_dimension(&self, k: i64) -> Result<usize> {
        let strand = self.build_strand(k)?;
        let dim = strand.dimension();
        let diffs: Vec<Matrix> = self.generator_differences(&strand)?.iter().map(|m| m.transpose()).collect();
        if dim == 0 || diffs.is_empty() {
            return Ok(dim);
        }
        Ok(dim - Matrix::vstack(self.action.ring().field(), &diffs, dim).rank())
    }

    pub fn default_floor(&self) -> i64 {
        -self.n() * self.action.group().order() as i64 - self.n()
    }

    /// Largest `k` with a nonzero cokernel strand, searched downward from `-n`.
    pub fn a_invariant(&self, floor: Option<i64>) -> Result<i64> {
        if self.classification.has_transvection {
            return Err(Error::TransvectionsPresent);
        }
        let floor = floor.unwrap_or_else(|| self.default_floor());
        let mut k = -self.n();
        while k >= floor {
            if self.strand_report(k)?.rank_h.unwrap_or(0) > 0 {
                return Ok(k);
            }
            k -= 1;
        }
        Err(Error::SearchFloorReached(floor))
    }

    /// `[det A / (y_1 ... y_n)]` for a matrix `A` over `R` with `y = A x`.
    pub fn socle_class(&self, rule: SplittingRule) -> Result<CechClass> {
        let ring = self.action.ring();
        let n = ring.nvars();
        let mut rows = vec![vec![Poly::zero(ring); n]; n];
        for (i, y) in self.hsop.parameters().iter().enumerate() {
            for (m, c) in y.terms() {
                let support = (0..n).filter(|&j| m.exp(j) > 0);
                let j = match rule {
                    SplittingRule::SmallestIndex => support.min(),
                    SplittingRule::LargestIndex => support.max(),
                }
                .ok_or(Error::NonHomogeneousInput)?;
                let rest = Monomial::var(j).quotient_of(m);
                rows[i][j] = &rows[i][j] + &Poly::monomial(ring, rest, *c);
            }
        }
        CechClass::new(&self.hsop, poly_determinant(ring, &rows), 1)
    }

    /// The scalar by which `g` acts on the one-dimensional strand at `-n`.
    pub fn socle_action_scalar(&self, g: &Matrix) -> Result<Scalar> {
        let field = self.action.ring().field();
        let eta = self.socle_class(SplittingRule::SmallestIndex)?;
        let strand = self.build_strand(-self.n())?;
        let before = strand.class_coordinates(&self.hsop, &eta)?;
        let after = strand.class_coordinates(&self.hsop, &self.act_on_class(g, &eta)?)?;
        let pivot = before.iter().position(|c| !c.is_zero()).ok_or(Error::DivisionByZero)?;
        field.div(after[pivot], before[pivot])
    }

    pub fn transfer_class(&self, c: &CechClass) -> Result<CechClass> {
        Ok(CechClass { numerator: self.action.transfer(&c.numerator)?, ..c.clone() })
    }

    /// Strand reports over a window of degrees, computed in parallel.
    pub fn hilbert_of_h(&self, degrees: std::ops::RangeInclusive<i64>) -> Result<HilbertTable> {
        let ks: Vec<i64> = degrees.rev().collect();
        let rows = ks.par_iter().map(|&k| self.strand_report(k)).collect::<Result<Vec<_>>>()?;
        let omega = rows.iter().map(|r| OmegaEntry { degree: -r.degree, rank: r.rank_h }).collect();
        Ok(HilbertTable { rows, omega })
    }
}

/// A graded quotient `S = K[z] / I` with weighted variables and parameters in `S`.
#[derive(Debug)]
pub struct PresentedAlgebra {
    hsop: HsopData,
    cm_asserted: bool,
    relations_gb: GroebnerBasis,
    h_vector: OnceLock<Vec<usize>>,
}

impl PresentedAlgebra {
    pub fn new(ring: &Ring, relations: Vec<Poly>, hsop: Vec<Poly>, cm_asserted: bool) -> Result<PresentedAlgebra> {
        let relations_gb = GroebnerBasis::new(ring, &relations)?;
        let hsop = HsopData::over_relations(ring, relations, hsop)?;
        Ok(PresentedAlgebra { hsop, cm_asserted, relations_gb, h_vector: OnceLock::new() })
    }

    pub fn ring(&self) -> &Ring {
        self.hsop.ring()
    }

    pub fn hsop(&self) -> &HsopData {
        &self.hsop
    }

    pub fn cm_asserted(&self) -> bool {
        self.cm_asserted
    }

    pub fn dimension(&self) -> usize {
        self.hsop.len()
    }

    pub fn hilbert(&self, degrees: std::ops::RangeInclusive<u32>) -> Vec<usize> {
        self.relations_gb.quotient_hilbert(degrees)
    }

    /// Hilbert function of `S / (y) S`, indexed by degree.
    pub fn h_vector(&self) -> Result<Vec<usize>> {
        if let Some(h) = self.h_vector.get() {
            return Ok(h.clone());
        }
        let h: Vec<usize> = self.hsop.power_basis(1)?.all_standard_monomials()?.iter().map(|s| s.len()).collect();
        Ok(self.h_vector.get_or_init(|| h).clone())
    }

    /// Rank of `[H^n(S)]_k` for a free module over `K[y]` with the h-vector basis.
    fn expected_rank(&self, k: i64) -> Result<usize> {
        let h = self.h_vector()?;
        let sigma = self.hsop.sigma() as i64;
        let degrees = self.hsop.degrees();
        let top = h.len() as i64 - 1 - k - sigma;
        if top < 0 {
            return Ok(0);
        }
        // counts[m] = #{b >= 0 : sum b_i d_i = m}
        let mut counts = vec![0usize; top as usize + 1];
        counts[0] = 1;
        for &d in degrees {
            for m in d as usize..counts.len() {
                counts[m] += counts[m - d as usize];
            }
        }
        Ok(h
            .iter()
            .enumerate()
            .filter_map(|(e, &mult)| {
                let m = e as i64 - k - sigma;
                (m >= 0).then(|| mult * counts[m as usize])
            })
            .sum())
    }

    /// Rank of `[H^n(S)]_k` as the dimension of the slice of `S / (y^d) S` at `k + dΣ`.
    pub fn direct_strand_rank(&self, k: i64) -> Result<usize> {
        Ok(self.direct_strand(k)?.dimension())
    }

    pub fn direct_strand(&self, k: i64) -> Result<Strand> {
        if !self.cm_asserted {
            return Err(Error::CMNotAsserted);
        }
        let target = self.expected_rank(k)?;
        self.hsop.strand_towards(k, 1, target)
    }

    /// Top degree of `H^n(S)`: `max e - Σ` over the h-vector support, confirmed on the strand.
    pub fn presented_a_invariant(&self, floor: Option<i64>) -> Result<i64> {
        if !self.cm_asserted {
            return Err(Error::CMNotAsserted);
        }
        let h = self.h_vector()?;
        let start = h.len() as i64 - 1 - self.hsop.sigma() as i64;
        let floor = floor.unwrap_or(start - self.hsop.sigma() as i64);
        let mut k = start;
        while k >= floor {
            if self.direct_strand_rank(k)? > 0 {
                return Ok(k);
            }
            k -= 1;
        }
        Err(Error::SearchFloorReached(floor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::FiniteMatrixGroup;
    use crate::parse::parse_poly;
    use crate::poly::{MonomialOrder, RingCtx};

    fn action(field: &Field, names: &[&str], gens: Vec<Matrix>) -> ActionCtx {
        let ring = RingCtx::new(field, names).unwrap();
        ActionCtx::new(FiniteMatrixGroup::closure(field, names.len(), gens).unwrap(), &ring).unwrap()
    }

    fn lc(act: ActionCtx, hsop: &[&str]) -> LocalCohomology {
        let ys = hsop.iter().map(|s| parse_poly(act.ring(), s).unwrap()).collect();
        LocalCohomology::new(act, ys).unwrap()
    }

    fn s2(p: u32) -> LocalCohomology {
        let f = Field::prime(p).unwrap();
        let g = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]).unwrap();
        lc(action(&f, &["x", "y"], vec![g]), &["x+y", "x*y"])
    }

    fn a3() -> LocalCohomology {
        let f = Field::prime(3).unwrap();
        let g = Matrix::from_ints(&f, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap();
        lc(action(&f, &["x", "y", "z"], vec![g]), &["x+y+z", "x*y+y*z+z*x", "x*y*z"])
    }

    fn klein6() -> LocalCohomology {
        let f = Field::prime(2).unwrap();
        let g = Matrix::from_ints(
            &f,
            &[&[1, 0, 0, 0, 0, 0], &[0, 1, 1, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 1], &[0, 0, 0, 0, 0, 1]],
        )
        .unwrap();
        let h = Matrix::from_ints(
            &f,
            &[&[1, 0, 1, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 1], &[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]],
        )
        .unwrap();
        lc(
            action(&f, &["u", "v", "w", "x", "y", "z"], vec![g, h]),
            &["w^2", "z^2", "u^2+u*w", "v^2+v*w", "x^2+x*z", "y^2+y*z"],
        )
    }

    fn diag(a: i64, b: i64, hsop: &[&str]) -> LocalCohomology {
        let f = Field::new(3, 2, None).unwrap();
        let z = f.find_root_of_unity(4).unwrap();
        let m = Matrix::from_rows(&f, vec![vec![f.pow(z, a as u64), Scalar::ZERO], vec![Scalar::ZERO, f.pow(z, b as u64)]]).unwrap();
        lc(action(&f, &["x", "y"], vec![m]), hsop)
    }

    fn p(l: &LocalCohomology, s: &str) -> Poly {
        parse_poly(l.action().ring(), s).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(-1, 0), 0);
    }

    #[test]
    fn klein_strands() {
        let l = klein6();
        let s = l.build_strand(-7).unwrap();
        assert_eq!((s.power, s.internal_degree, s.dimension()), (1, 5, 6));
        let r7 = l.strand_report(-7).unwrap();
        assert_eq!((r7.dim_v, r7.rank_h, r7.rank_fixed), (6, Some(2), 4));
        let r6 = l.strand_report(-6).unwrap();
        assert_eq!((r6.dim_v, r6.rank_h, r6.rank_fixed), (1, Some(1), 1));
        assert_eq!(l.a_invariant(None).unwrap(), -6);
    }

    #[test]
    fn klein_generator_on_strand() {
        let l = klein6();
        let s = l.build_strand(-7).unwrap();
        let g = l.action().group().generators()[0].clone();
        let m = l.act_on_strand(&g, &s).unwrap();
        let col = |r: &Poly| s.coordinates(r).unwrap();
        let image = |r: &Poly| m.mul_vec(&col(r));
        for fixed in ["v*w*x*y*z", "u*w*x*y*z", "u*v*w*y*z", "u*v*w*x*z"] {
            assert_eq!(image(&p(&l, fixed)), col(&p(&l, fixed)));
        }
        assert_eq!(image(&p(&l, "u*v*x*y*z")), col(&p(&l, "(u*v + u*w)*x*y*z")));
        let id = Matrix::identity(l.action().ring().field(), 6);
        assert!(l.act_on_strand(&id, &s).unwrap().is_identity());
    }

    #[test]
    fn s2_char_three() {
        let l = s2(3);
        let r = l.strand_report(-2).unwrap();
        assert_eq!((r.dim_v, r.rank_h, r.rank_fixed), (1, Some(0), 0));
        let s = l.build_strand(-2).unwrap();
        let g = l.action().group().generators()[0].clone();
        let f = l.action().ring().field().clone();
        assert_eq!(l.act_on_strand(&g, &s).unwrap().one_minus().get(0, 0), f.from_int(2));
        let hs = l.hsop();
        assert!(l.class_is_zero(&hs.class(p(&l, "x+y"), 1).unwrap()).unwrap());
        let eta = hs.class(p(&l, "x"), 1).unwrap();
        assert!(!l.class_is_zero(&eta).unwrap());
        let t = l.transfer_class(&eta).unwrap();
        assert_eq!(t.numerator, p(&l, "x+y"));
        assert!(l.class_is_zero(&t).unwrap());
        assert_eq!(l.a_invariant(None).unwrap(), -3);
    }

    #[test]
    fn s2_char_two_refused() {
        let l = s2(2);
        let r = l.strand_report(-2).unwrap();
        assert_eq!(r.rank_h, None);
        assert_eq!(r.marker.as_deref(), Some(TRANSVECTION_MARKER));
        let s = l.build_strand(-2).unwrap();
        let g = l.action().group().generators()[0].clone();
        assert!(l.act_on_strand(&g, &s).unwrap().one_minus().is_zero());
        assert_eq!(l.a_invariant(None).unwrap_err(), Error::TransvectionsPresent);
    }

    #[test]
    fn alternating_classes() {
        let l = a3();
        let hs = l.hsop();
        assert!(l.class_is_zero(&hs.class(p(&l, "x^2*y+y^2*z+z^2*x"), 1).unwrap()).unwrap());
        let delta = "(x^2*y+y^2*z+z^2*x)";
        let classes = [
            (format!("x*{delta}"), [2, 1, 1], -3),
            (delta.to_string(), [2, 1, 1], -4),
            (delta.to_string(), [1, 2, 1], -5),
            ("1".to_string(), [1, 1, 1], -6),
        ];
        let g = l.action().group().generators()[0].clone();
        for (num, exps, degree) in classes {
            let c = CechClass::with_denominator(hs, p(&l, &num), &exps).unwrap();
            assert_eq!(c.degree, degree);
            assert!(!l.class_is_zero(&c).unwrap());
            let s = hs.build_strand_with_min_power(degree, c.power).unwrap();
            let coords = s.class_coordinates(hs, &c).unwrap();
            assert!(coords.iter().any(|x| !x.is_zero()));
            assert_eq!(s.class_coordinates(hs, &l.act_on_class(&g, &c).unwrap()).unwrap(), coords);
        }
        assert_eq!(l.a_invariant(None).unwrap(), -3);
    }

    #[test]
    fn alternating_window() {
        let l = a3();
        let table = l.hilbert_of_h(-8..=-2).unwrap();
        for r in &table.rows {
            assert_eq!(r.rank_h, Some(r.rank_fixed), "k = {}", r.degree);
            assert_eq!(r.dim_v, binomial(-r.degree - 1, 2));
        }
        assert_eq!(table.omega.first().unwrap().degree, 2);
        assert_eq!(table.rows.first().unwrap().dim_v, 0);
    }

    #[test]
    fn strand_dimensions_brute_force() {
        let f = Field::prime(3).unwrap();
        let r2 = RingCtx::new(&f, &["x", "y"]).unwrap();
        let r3 = RingCtx::new(&f, &["x", "y", "z"]).unwrap();
        let cases: Vec<(Ring, Vec<&str>)> = vec![
            (r2.clone(), vec!["x", "y"]),
            (r2.clone(), vec!["x+y", "x*y"]),
            (r2.clone(), vec!["x^2+y^2", "x*y^2"]),
            (r3.clone(), vec!["x", "y", "z"]),
            (r3.clone(), vec!["x+y+z", "x*y+y*z+z*x", "x*y*z"]),
            (r3.clone(), vec!["x^2", "y^2+x*z", "z^2"]),
        ];
        for (ring, ys) in cases {
            let ys: Vec<Poly> = ys.iter().map(|s| parse_poly(&ring, s).unwrap()).collect();
            let hs = HsopData::new(&ring, ys).unwrap();
            let n = ring.nvars() as i64;
            for j in 0..=3 {
                let k = -n - j;
                let s = hs.build_strand(k).unwrap();
                assert_eq!(s.dimension(), binomial(n - 1 + j, n - 1));
                // Slices only grow with the power and stop at the closed form.
                let mut last = 0;
                for d in 1..=s.power + 2 {
                    let internal = k + d as i64 * hs.sigma() as i64;
                    let dim = hs.slice(d, internal).unwrap().len();
                    assert!(dim >= last && dim <= s.dimension());
                    last = dim;
                }
                assert_eq!(last, s.dimension());
            }
            assert_eq!(hs.build_strand(-n + 1).unwrap().dimension(), 0);
        }
    }

    #[test]
    fn socle_classes() {
        for l in [s2(3), s2(2), a3(), klein6(), diag(1, 0, &["x^4", "y"]), diag(1, 3, &["x^4", "y^4"])] {
            let small = l.socle_class(SplittingRule::SmallestIndex).unwrap();
            let large = l.socle_class(SplittingRule::LargestIndex).unwrap();
            assert_eq!(small.degree, -l.n());
            assert!(!l.class_is_zero(&small).unwrap());
            let diff = CechClass { numerator: &small.numerator - &large.numerator, ..small.clone() };
            assert!(l.class_is_zero(&diff).unwrap());
            let field = l.action().ring().field().clone();
            for g in l.action().group().elements() {
                let lambda = l.socle_action_scalar(g).unwrap();
                assert_eq!(field.mul(lambda, g.determinant().unwrap()), Scalar::ONE);
            }
        }
        let l = s2(3);
        let eta = l.socle_class(SplittingRule::SmallestIndex).unwrap();
        assert_eq!(eta.numerator, p(&l, "-y"));
        let x = l.hsop().class(p(&l, "x"), 1).unwrap();
        let diff = CechClass { numerator: &eta.numerator - &x.numerator, ..eta };
        assert!(l.class_is_zero(&diff).unwrap());
    }

    #[test]
    fn identity_hsop_socle() {
        let f = Field::prime(5).unwrap();
        let l = lc(action(&f, &["x", "y", "z"], vec![]), &["x", "y", "z"]);
        let c = l.socle_class(SplittingRule::SmallestIndex).unwrap();
        assert_eq!(c.numerator, Poly::one(l.action().ring()));
    }

    #[test]
    fn transfer_kills_differences() {
        let l = a3();
        let g = l.action().group().generators()[0].clone();
        let s = l.build_strand(-5).unwrap();
        for b in s.basis_polys() {
            let eta = l.hsop().class(b, s.power).unwrap();
            let moved = l.act_on_class(&g, &eta).unwrap();
            let diff = CechClass { numerator: &eta.numerator - &moved.numerator, ..eta };
            assert!(l.class_is_zero(&l.transfer_class(&diff).unwrap()).unwrap());
        }
    }

    #[test]
    fn duality_and_rank_nullity() {
        for l in [a3(), klein6(), s2(3), diag(1, 1, &["x^4", "y^4"])] {
            for k in -7..=-2 {
                let r = l.strand_report(k).unwrap();
                assert_eq!(r.dim_v - r.dim_w, l.dual_fixed_dimension(k).unwrap());
                if l.action().group().generators().len() == 1 {
                    assert_eq!(r.rank_fixed, r.dim_v - r.dim_w);
                }
            }
        }
    }

    #[test]
    fn battery() {
        assert_eq!(diag(1, 3, &["x^4", "y^4"]).a_invariant(None).unwrap(), -2);
        assert_eq!(diag(1, 0, &["x^4", "y"]).a_invariant(None).unwrap(), -5);
        assert_eq!(diag(1, 1, &["x^4", "y^4"]).a_invariant(None).unwrap(), -4);
        let f = Field::prime(3).unwrap();
        let minus = Matrix::from_ints(&f, &[&[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]]).unwrap();
        assert_eq!(lc(action(&f, &["x", "y", "z"], vec![minus]), &["x^2", "y^2", "z^2"]).a_invariant(None).unwrap(), -4);
        let l = diag(1, 1, &["x^4", "y^4"]);
        assert_eq!(l.a_invariant(Some(-3)).unwrap_err(), Error::SearchFloorReached(-3));
    }

    #[test]
    fn nonmodular_exactness() {
        let l = diag(1, 0, &["x^4", "y"]);
        for k in -9..=-2 {
            let r = l.strand_report(k).unwrap();
            assert_eq!(r.rank_h, Some(r.rank_fixed));
        }
    }

    fn presented(field: &Field, names: &[&str], weights: Vec<u32>, rels: &[&str], hsop: &[&str], cm: bool) -> PresentedAlgebra {
        let ring = RingCtx::weighted(field, names.iter().map(|s| s.to_string()).collect(), weights, MonomialOrder::GrevLex).unwrap();
        let rels = rels.iter().map(|s| parse_poly(&ring, s).unwrap()).collect();
        let ys = hsop.iter().map(|s| parse_poly(&ring, s).unwrap()).collect();
        PresentedAlgebra::new(&ring, rels, ys, cm).unwrap()
    }

    fn klein_presented(cm: bool) -> PresentedAlgebra {
        presented(
            &Field::prime(2).unwrap(),
            &["w", "z", "pu", "pv", "px", "py", "qx", "qy"],
            vec![1, 1, 2, 2, 2, 2, 2, 2],
            &["qx^2 + qx*w*z + pu*z^2 + px*w^2", "qy^2 + qy*w*z + pv*z^2 + py*w^2"],
            &["w^2", "z^2", "pu", "pv", "px", "py"],
            cm,
        )
    }

    #[test]
    fn klein_presentation() {
        let pa = klein_presented(true);
        assert_eq!(pa.hilbert(0..=2), vec![1, 2, 9]);
        assert_eq!(pa.direct_strand_rank(-6).unwrap(), 1);
        assert_eq!(pa.direct_strand_rank(-7).unwrap(), 2);
        assert_eq!(pa.presented_a_invariant(None).unwrap(), -6);
        assert_eq!(klein_presented(false).direct_strand_rank(-6).unwrap_err(), Error::CMNotAsserted);
        let l = klein6();
        for k in -9..=-5 {
            assert_eq!(Some(pa.direct_strand_rank(k).unwrap()), l.strand_report(k).unwrap().rank_h, "k = {k}");
        }
    }

    #[test]
    fn alternating_presentation() {
        let pa = presented(
            &Field::prime(3).unwrap(),
            &["e1", "e2", "e3", "D"],
            vec![1, 2, 3, 3],
            &["D^2 - e1*e2*D + e2^3 + e1^3*e3"],
            &["e1", "e2", "e3"],
            true,
        );
        assert_eq!(pa.direct_strand_rank(-3).unwrap(), 1);
        let l = a3();
        for k in -9..=-2 {
            assert_eq!(Some(pa.direct_strand_rank(k).unwrap()), l.strand_report(k).unwrap().rank_h, "k = {k}");
        }
    }

    #[test]
    fn weighted_plateau() {
        // Over K[a, b] with degrees (1, 2) the slice at k = -7 reads 2, 2, 3 for
        // d = 3, 4, 5: two equal consecutive values are not yet the answer.
        let pa = presented(&Field::prime(2).unwrap(), &["a", "b"], vec![1, 2], &[], &["a", "b"], true);
        assert_eq!(pa.direct_strand_rank(-7).unwrap(), 3);
        let dims: Vec<usize> = (3..=5).map(|d| pa.hsop().slice(d, -7 + 3 * d as i64).unwrap().len()).collect();
        assert_eq!(dims, vec![2, 2, 3]);
        assert_eq!(pa.presented_a_invariant(None).unwrap(), -3);
    }

    #[test]
    fn transvection_groups_via_presentation() {
        let f = Field::prime(2).unwrap();
        let klein3 = presented(&f, &["z", "s", "t"], vec![1, 2, 2], &[], &["z", "s", "t"], true);
        assert_eq!(klein3.presented_a_invariant(None).unwrap(), -5);
    }
}
