//! Graded multivariate polynomials over a [`Field`].
//!
//! Polynomials keep their terms sorted in descending monomial order with no
//! zero coefficients, so structural equality is mathematical equality. Every
//! variable has degree 1 in the polynomial ring `R`; rings built for
//! presentations and elimination may carry positive integer weights instead.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

/// Hard limit on exponent vector length (the polynomial ring plus any tag variables).
pub const MAX_VARS: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    /// Graded reverse lexicographic with respect to the variable weights.
    GrevLex,
    /// Variables `0..split` form a grevlex block that dominates the grevlex block `split..`.
    Block { split: usize },
}

/// Exponent vector; entries past the ring's variable count are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial([u16; MAX_VARS]);

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::one();
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        let mut m = Monomial::one();
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exponents(&self, n: usize) -> &[u16] {
        &self.0[..n]
    }

    /// Unweighted total degree.
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for (a, b) in m.0.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u16) -> Monomial {
        let mut m = *self;
        for a in m.0.iter_mut() {
            *a *= e;
        }
        m
    }
}

/// Coefficient field, variable names and weights, and monomial order.
#[derive(Debug, PartialEq, Eq)]
pub struct RingCtx {
    field: Field,
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

pub type Ring = Arc<RingCtx>;

impl RingCtx {
    /// Standard-graded ring with grevlex order.
    pub fn new(field: &Field, names: &[&str]) -> Result<Ring> {
        Self::with_order(field, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::GrevLex)
    }

    pub fn with_order(field: &Field, names: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        let w = vec![1; names.len()];
        Self::weighted(field, names, w, order)
    }

    pub fn weighted(field: &Field, names: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> Result<Ring> {
        if names.len() > MAX_VARS {
            return Err(Error::DimensionMismatch(format!("at most {MAX_VARS} variables supported")));
        }
        if weights.len() != names.len() || weights.contains(&0) {
            return Err(Error::DimensionMismatch("variable weights must be positive, one per variable".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Parse(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable name `{n}`")));
            }
            if n == "a" && field.degree() > 1 {
                return Err(Error::Parse("`a` is reserved for the field generator".into()));
            }
        }
        if let MonomialOrder::Block { split } = order {
            if split > names.len() {
                return Err(Error::DimensionMismatch("block split past variable count".into()));
            }
        }
        Ok(Arc::new(RingCtx { field: field.clone(), names, weights, order }))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Weighted degree.
    #[inline]
    pub fn degree(&self, m: &Monomial) -> u32 {
        self.weights.iter().zip(m.0.iter()).map(|(&w, &e)| w * e as u32).sum()
    }

    fn block_degree(&self, m: &Monomial, range: std::ops::Range<usize>) -> u32 {
        range.map(|i| self.weights[i] * m.0[i] as u32).sum()
    }

    fn revlex(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
        for i in range.rev() {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.names.len();
        match self.order {
            MonomialOrder::Lex => a.0[..n].cmp(&b.0[..n]),
            MonomialOrder::GrevLex => {
                self.degree(a).cmp(&self.degree(b)).then_with(|| Self::revlex(a, b, 0..n))
            }
            MonomialOrder::Block { split } => self
                .block_degree(a, 0..split)
                .cmp(&self.block_degree(b, 0..split))
                .then_with(|| Self::revlex(a, b, 0..split))
                .then_with(|| self.block_degree(a, split..n).cmp(&self.block_degree(b, split..n)))
                .then_with(|| Self::revlex(a, b, split..n)),
        }
    }

    /// All monomials of weighted degree `d`, in descending order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        fn rec(w: &[u32], i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(*cur);
                }
                return;
            }
            let mut e = 0;
            while e * w[i] <= left {
                cur.0[i] = e as u16;
                rec(w, i + 1, left - e * w[i], cur, out);
                e += 1;
            }
            cur.0[i] = 0;
        }
        let mut out = Vec::new();
        rec(&self.weights, 0, d, &mut Monomial::one(), &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = (0..self.nvars())
            .filter(|&i| m.0[i] > 0)
            .map(|i| if m.0[i] == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], m.0[i]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// A polynomial: sorted terms with nonzero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let minus_one = field.neg(Scalar::ONE);
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (sign, c) = if field.characteristic() > 2 && *c == minus_one {
                ("-", Scalar::ONE)
            } else {
                ("+", *c)
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff = field.format(c);
            let coeff = if field.is_simple(c) { coeff } else { format!("({coeff})") };
            match (m.is_one(), c == Scalar::ONE) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{}", self.ring.format_monomial(m))?,
                (false, false) => write!(f, "{coeff}*{}", self.ring.format_monomial(m))?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, Scalar::ONE)
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Poly {
        Poly::monomial(ring, Monomial::one(), c)
    }

    pub fn var(ring: &Ring, i: usize) -> Poly {
        assert!(i < ring.nvars(), "variable index out of range");
        Poly::monomial(ring, Monomial::var(i), Scalar::ONE)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Scalar) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { ring: ring.clone(), terms }
    }

    /// Collects arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Poly {
        let f = ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(Scalar::ZERO);
            *e = f.add(*e, c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly { ring: ring.clone(), terms }
    }

    /// Assumes `terms` already sorted descending, distinct, nonzero.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Scalar)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, Scalar)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<Scalar> {
        self.terms.first().map(|t| t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.iter().find(|(t, _)| t == m).map_or(Scalar::ZERO, |t| t.1)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub fn same_ring(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Maximal weighted degree of a term.
    pub fn degree(&self) -> Result<u32> {
        self.terms.iter().map(|(m, _)| self.ring.degree(m)).max().ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = self.ring.degree(m0);
                self.terms.iter().all(|(m, _)| self.ring.degree(m) == d)
            }
        }
    }

    /// Homogeneous parts in ascending degree.
    pub fn homogeneous_components(&self) -> Vec<(u32, Poly)> {
        let mut by_deg: Vec<(u32, Vec<(Monomial, Scalar)>)> = Vec::new();
        for &(m, c) in &self.terms {
            let d = self.ring.degree(&m);
            match by_deg.iter_mut().find(|(e, _)| *e == d) {
                Some((_, v)) => v.push((m, c)),
                None => by_deg.push((d, vec![(m, c)])),
            }
        }
        by_deg.sort_by_key(|(d, _)| *d);
        by_deg.into_iter().map(|(d, t)| (d, Poly::from_sorted(&self.ring, t))).collect()
    }

    /// Degree together with the homogeneous parts.
    pub fn degree_and_components(&self) -> Result<(u32, Vec<Poly>)> {
        let d = self.degree()?;
        Ok((d, self.homogeneous_components().into_iter().map(|(_, p)| p).collect()))
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.merge(other, Scalar::ONE))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.merge(other, self.ring.field().neg(Scalar::ONE)))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.mul_impl(other))
    }

    /// `self + c * other` by a sorted merge.
    fn merge(&self, other: &Poly, c: Scalar) -> Poly {
        self.merge_shifted(other, c, &Monomial::one())
    }

    /// `self + c * m * other`.
    pub(crate) fn merge_shifted(&self, other: &Poly, c: Scalar, m: &Monomial) -> Poly {
        let f = self.ring.field();
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, k)| (t.mul(m), f.mul(*k, c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(*a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ring.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(*a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(x.1, y.1);
                        let mono = x.0;
                        a.next();
                        b.next();
                        if !s.is_zero() {
                            out.push((mono, s));
                        }
                    }
                },
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly { ring: ring.clone(), terms: out }
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_term(&m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            return other.mul_term(&m, c);
        }
        let f = self.ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(Scalar::ZERO);
                *e = f.add(*e, f.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Poly { ring: self.ring.clone(), terms }
    }

    /// Multiplication by a single term preserves order.
    pub fn mul_term(&self, m: &Monomial, c: Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let f = self.ring.field();
        let terms = self.terms.iter().map(|(t, k)| (t.mul(m), f.mul(*k, c))).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scalar_mul(&self, c: Scalar) -> Poly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        result
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scalar_mul(self.ring.field().inv(c).expect("nonzero")),
        }
    }

    /// Ring map sending variable `i` to `images[i]`; the images fix the target ring.
    pub fn substitute(&self, target: &Ring, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        if images.iter().any(|p| !Arc::ptr_eq(&p.ring, target) && *p.ring != **target) {
            return Err(Error::ContextMismatch);
        }
        if target.field() != self.ring.field() {
            return Err(Error::ContextMismatch);
        }
        let mut cache: HashMap<(usize, u16), Poly> = HashMap::new();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, *c);
            for (i, image) in images.iter().enumerate().take(self.ring.nvars()) {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let p = power_cached(&mut cache, image, i, e);
                t = t.mul_impl(&p);
            }
            out = out.merge(&t, Scalar::ONE);
        }
        Ok(out)
    }

    /// `x_i -> sum_j M[i][j] x_j`.
    pub fn linear_substitute(&self, m: &Matrix) -> Result<Poly> {
        let n = self.ring.nvars();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix acting on {} variables",
                m.rows(),
                m.cols(),
                n
            )));
        }
        if m.field() != self.ring.field() {
            return Err(Error::ContextMismatch);
        }
        let images: Vec<Poly> = (0..n)
            .map(|i| {
                let terms = (0..n).map(|j| (Monomial::var(j), m.get(i, j))).filter(|t| !t.1.is_zero());
                Poly::from_terms(&self.ring, terms)
            })
            .collect();
        self.substitute(&self.ring.clone(), &images)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to variable `map[i]`.
    pub fn embed(&self, target: &Ring, map: &[usize]) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one();
            for (i, &j) in map.iter().enumerate() {
                out.0[j] += m.0[i];
            }
            (out, *c)
        });
        Poly::from_terms(target, terms)
    }

    /// Variable indices that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0)).collect()
    }
}

fn power_cached(cache: &mut HashMap<(usize, u16), Poly>, base: &Poly, i: usize, e: u16) -> Poly {
    if let Some(p) = cache.get(&(i, e)) {
        return p.clone();
    }
    let p = if e == 1 {
        base.clone()
    } else {
        let half = power_cached(cache, base, i, e / 2);
        let sq = half.mul_impl(&half);
        if e % 2 == 1 {
            sq.mul_impl(base)
        } else {
            sq
        }
    };
    cache.insert((i, e), p.clone());
    p
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scalar_mul(self.ring.field().neg(Scalar::ONE))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn ring(p: u32, names: &[&str]) -> Ring {
        RingCtx::new(&Field::prime(p).unwrap(), names).unwrap()
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = ring(2, &["x", "y"]);
        let s = parse_poly(&r, "x+y").unwrap();
        assert_eq!(s.pow(2), parse_poly(&r, "x^2+y^2").unwrap());
    }

    #[test]
    fn product_of_symmetric_functions() {
        let r = ring(3, &["x", "y", "z"]);
        let e1 = parse_poly(&r, "x+y+z").unwrap();
        let e2 = parse_poly(&r, "x*y+y*z+z*x").unwrap();
        // Expansion oracle: every term x_i * x_j x_k written out by hand.
        let expanded = parse_poly(
            &r,
            "x^2*y + x*y*z + x^2*z + x*y^2 + y^2*z + x*y*z + x*y*z + y*z^2 + x*z^2",
        )
        .unwrap();
        assert_eq!(&e1 * &e2, expanded);
        assert!((&e1 * &Poly::zero(&r)).is_zero());
    }

    #[test]
    fn context_mismatch() {
        let r1 = ring(3, &["x", "y"]);
        let r2 = ring(3, &["x", "z"]);
        let a = Poly::var(&r1, 0);
        let b = Poly::var(&r2, 0);
        assert_eq!(a.checked_add(&b), Err(Error::ContextMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::ContextMismatch));
    }

    #[test]
    fn substitution_examples() {
        let f = Field::prime(3).unwrap();
        let r = RingCtx::new(&f, &["x", "y"]).unwrap();
        let swap = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]).unwrap();
        let s = parse_poly(&r, "x+y").unwrap();
        assert_eq!(s.linear_substitute(&swap).unwrap(), s);
        let u = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(Poly::var(&r, 0).linear_substitute(&u).unwrap(), s);

        let r3 = RingCtx::new(&f, &["x", "y", "z"]).unwrap();
        let cycle = Matrix::from_ints(&f, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap();
        let delta = parse_poly(&r3, "x^2*y+y^2*z+z^2*x").unwrap();
        assert_eq!(delta.linear_substitute(&cycle).unwrap(), delta);

        let bad = Matrix::identity(&f, 3);
        assert!(matches!(s.linear_substitute(&bad), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn degrees_and_components() {
        let r = ring(3, &["x", "y", "z"]);
        let f = parse_poly(&r, "x^2*y").unwrap();
        let (d, parts) = f.degree_and_components().unwrap();
        assert_eq!((d, parts.len()), (3, 1));
        let g = parse_poly(&r, "x + x*y").unwrap();
        let (_, parts) = g.degree_and_components().unwrap();
        assert_eq!(parts, vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "x*y").unwrap()]);
        let e1 = parse_poly(&r, "x+y+z").unwrap();
        let e3 = parse_poly(&r, "x*y*z").unwrap();
        assert_eq!((&e1.pow(3) * &e3).degree().unwrap(), 6);
        assert_eq!(Poly::zero(&r).degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn monomial_enumeration_counts() {
        let r = ring(2, &["x", "y", "z"]);
        assert_eq!(r.monomials_of_degree(3).len(), 10);
        let w = RingCtx::weighted(r.field(), vec!["s".into(), "t".into()], vec![1, 2], MonomialOrder::GrevLex).unwrap();
        assert_eq!(w.monomials_of_degree(4).len(), 3);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(0i64..5, n * n)
    }

    fn arb_poly(r: &Ring) -> impl Strategy<Value = Poly> {
        let r = r.clone();
        proptest::collection::vec((0u16..3, 0u16..3, 0u16..3, 1i64..5), 0..6).prop_map(move |ts| {
            let f = r.field().clone();
            Poly::from_terms(&r, ts.into_iter().map(|(a, b, c, k)| (Monomial::from_exponents(&[a, b, c]), f.from_int(k))))
        })
    }

    fn to_matrix(f: &Field, v: &[i64]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = v.chunks(3).map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect();
        Matrix::from_rows(f, rows).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn substitution_composes_contravariantly(
            a in arb_poly(&ring(5, &["x", "y", "z"])),
            m in arb_matrix(3),
            n in arb_matrix(3),
        ) {
            let r = a.ring().clone();
            let f = r.field().clone();
            let (m, n) = (to_matrix(&f, &m), to_matrix(&f, &n));
            let lhs = a.linear_substitute(&n).unwrap().linear_substitute(&m).unwrap();
            let rhs = a.linear_substitute(&n.mul(&m).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(a.linear_substitute(&Matrix::identity(&f, 3)).unwrap(), a.clone());
        }

        #[test]
        fn substitution_is_a_ring_map(
            a in arb_poly(&ring(5, &["x", "y", "z"])),
            b in arb_poly(&ring(5, &["x", "y", "z"])),
            m in arb_matrix(3),
        ) {
            let b = Poly::from_terms(a.ring(), b.terms().iter().copied());
            let m = to_matrix(a.ring().field(), &m);
            let sub = |p: &Poly| p.linear_substitute(&m).unwrap();
            prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
            prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        }

        #[test]
        fn components_sum_back(a in arb_poly(&ring(5, &["x", "y", "z"]))) {
            let parts = a.homogeneous_components();
            let mut sum = Poly::zero(a.ring());
            for (d, p) in &parts {
                prop_assert!(p.is_homogeneous());
                prop_assert_eq!(p.degree().unwrap(), *d);
                sum = &sum + p;
            }
            prop_assert_eq!(sum, a);
        }
    }
}
