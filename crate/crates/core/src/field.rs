//! Exact arithmetic in prime fields `F_p` and small extensions `F_p[a]/(m(a))`.
//!
//! Elements are stored as a packed base-`p` integer of their coordinates with
//! respect to `1, a, ..., a^(k-1)`, so equality of [`Scalar`]s is equality of
//! coordinate lists. Multiplication goes through discrete log tables, which
//! keeps the supported fields at `p^k <= 2^16`.

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

const ADD_TABLE_LIMIT: u32 = 256;

/// A field element. Only meaningful together with the [`Field`] it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(pub(crate) u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The packed coordinate index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }
}

/// Serialized description of a field: `{"char": p, "degree": k, "modulus": [c0, ..., ck]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    #[serde(rename = "char")]
    pub characteristic: u32,
    #[serde(default = "one")]
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

/// `F_{p^k}` with an explicit modulus and precomputed log tables.
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u16>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

/// Shared handle to a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field(Arc<FieldSpec>);

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.k.hash(state);
        self.modulus.hash(state);
    }
}

impl Deref for Field {
    type Target = FieldSpec;
    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

/// Built-in moduli, constant term first.
pub fn default_modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    match (p, k) {
        (_, 1) => Some(vec![0, 1]),
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (3, 2) => Some(vec![1, 0, 1]),
        _ => None,
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p, constant term first, used only while building tables.
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    // Trial division by every monic polynomial of degree 1..=k/2.
    for deg in 1..=k / 2 {
        let count = (p as u64).pow(deg as u32);
        for idx in 0..count {
            let mut d = Vec::with_capacity(deg + 1);
            let mut t = idx;
            for _ in 0..deg {
                d.push((t % p as u64) as u32);
                t /= p as u64;
            }
            d.push(1);
            if poly_rem(m, &d, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds `F_{p^k}`; `modulus` may be omitted when a built-in default exists.
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER as u64).ok_or_else(
            || Error::InvalidField(format!("field of order {p}^{k} exceeds {MAX_FIELD_ORDER}")),
        )? as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            let m = match modulus {
                Some(m) => m,
                None => default_modulus(p, k).ok_or_else(|| {
                    Error::InvalidField(format!("no default modulus for F_{p}^{k}; supply one"))
                })?,
            };
            if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                return Err(Error::InvalidField(format!(
                    "modulus {m:?} must be monic of degree {k} with residues mod {p}"
                )));
            }
            if !is_irreducible(&m, p) {
                return Err(Error::InvalidField(format!("modulus {m:?} is reducible over F_{p}")));
            }
            m
        };

        let mut spec = FieldSpec { p, k, q, modulus, exp: Vec::new(), log: Vec::new(), add_table: None };
        spec.build_tables();
        Ok(Field(Arc::new(spec)))
    }

    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn from_desc(desc: &FieldDesc) -> Result<Field> {
        Field::new(desc.characteristic, desc.degree, desc.modulus.clone())
    }

    pub fn desc(&self) -> FieldDesc {
        FieldDesc {
            characteristic: self.p,
            degree: self.k,
            modulus: if self.k == 1 { None } else { Some(self.modulus.clone()) },
        }
    }
}

impl FieldSpec {
    fn build_tables(&mut self) {
        let (p, k, q) = (self.p, self.k as usize, self.q);
        let mul_slow = |a: u32, b: u32| -> u32 {
            let (ca, cb) = (self.unpack(a), self.unpack(b));
            let mut prod = vec![0u32; 2 * k];
            for (i, &x) in ca.iter().enumerate() {
                for (j, &y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let r = if k == 1 { prod } else { poly_rem(&prod, &self.modulus, p) };
            self.pack(&r)
        };
        // Find a generator of the multiplicative group by brute force.
        let order = q - 1;
        let mut generator = 1;
        for cand in 1..q {
            let mut x = cand;
            let mut m = 1;
            while x != 1 {
                x = mul_slow(x, cand);
                m += 1;
            }
            if m == order {
                generator = cand;
                break;
            }
        }
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x;
            log[x as usize] = i;
            x = mul_slow(x, generator);
        }
        self.exp = exp;
        self.log = log;
        if q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = self.add_digits(a, b) as u16;
                }
            }
            self.add_table = Some(t);
        }
    }

    fn unpack(&self, mut x: u32) -> Vec<u32> {
        let mut c = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            c.push(x % self.p);
            x /= self.p;
        }
        c
    }

    fn pack(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut r, mut place) = (0, 1);
        for _ in 0..self.k {
            r += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        r
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first (`[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar::ZERO
    }

    pub fn one(&self) -> Scalar {
        Scalar::ONE
    }

    /// The adjoined generator `a`; for prime fields this is `None`.
    pub fn generator(&self) -> Option<Scalar> {
        (self.k > 1).then_some(Scalar(self.p))
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar(n.rem_euclid(self.p as i64) as u32)
    }

    /// Coordinates with respect to `1, a, ..., a^(k-1)`.
    pub fn coords(&self, x: Scalar) -> Vec<u32> {
        self.unpack(x.0)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<Scalar> {
        if coords.len() > self.k as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidField(format!("bad coordinates {coords:?}")));
        }
        Ok(Scalar(self.pack(coords)))
    }

    /// All field elements in packed-index order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.q).map(Scalar)
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        if self.k == 1 {
            let s = a.0 + b.0;
            return Scalar(if s >= self.p { s - self.p } else { s });
        }
        match &self.add_table {
            Some(t) => Scalar(t[(a.0 * self.q + b.0) as usize] as u32),
            None => Scalar(self.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a.0 == 0 {
            return a;
        }
        if self.k == 1 {
            return Scalar(self.p - a.0);
        }
        let c: Vec<u32> = self.unpack(a.0).into_iter().map(|d| (self.p - d) % self.p).collect();
        Scalar(self.pack(&c))
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if a.0 == 0 || b.0 == 0 {
            return Scalar::ZERO;
        }
        if self.k == 1 {
            return Scalar(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize] + self.log[b.0 as usize];
        Scalar(self.exp[(if l >= order { l - order } else { l }) as usize])
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(Scalar(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Scalar, e: u64) -> Scalar {
        if e == 0 {
            return Scalar::ONE;
        }
        if a.is_zero() {
            return Scalar::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64 * (e % order) % order;
        Scalar(self.exp[l as usize])
    }

    /// Least `m >= 1` with `x^m = 1`.
    pub fn unit_order(&self, x: Scalar) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = (self.q - 1) as u64;
        let l = self.log[x.0 as usize] as u64;
        Ok(order / gcd(l, order))
    }

    /// First element (in packed-index order) of multiplicative order exactly `m`.
    pub fn find_root_of_unity(&self, m: u64) -> Result<Scalar> {
        let order = (self.q - 1) as u64;
        if m == 0 || !order.is_multiple_of(m) {
            return Err(Error::NoSuchRoot(m));
        }
        self.elements()
            .skip(1)
            .find(|&x| self.unit_order(x) == Ok(m))
            .ok_or(Error::NoSuchRoot(m))
    }

    /// Renders `x` in the generator `a`, e.g. `2*a+1`.
    pub fn format(&self, x: Scalar) -> String {
        if self.k == 1 {
            return x.0.to_string();
        }
        let coords = self.unpack(x.0);
        let mut parts = Vec::new();
        for (i, &c) in coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}*{var}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// True when `x` is `c` or `c*a^i` for a single coordinate, so it can be printed without parentheses.
    pub(crate) fn is_simple(&self, x: Scalar) -> bool {
        self.unpack(x.0).iter().filter(|&&c| c != 0).count() <= 1
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
