//! Exact arithmetic in GF(p^m).
//!
//! Elements are stored as their canonical integer: the polynomial residue
//! `c_0 + c_1 a + ... + c_{m-1} a^{m-1}` is encoded as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! Prime fields use plain modular arithmetic; extension fields multiply through
//! log/antilog tables built from a primitive element.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_FIELD_SIZE: u64 = 1 << 16;

/// A field element in canonical integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
}

/// Serialized form `{"p":…, "m":…, "poly":[c0,…,cm]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub p: u32,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, little-endian, length m+1. Empty for prime fields.
    poly: Vec<u32>,
    /// exp[k] = g^k for k in 0..2(q-1); only for m > 1.
    exp: Vec<u32>,
    /// log[x] for x != 0; only for m > 1.
    log: Vec<u32>,
}

/// A finite field GF(p^m). Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.poly == other.0.poly)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.m, self.0.poly)
        }
    }
}

fn is_prime(p: u32) -> bool {
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

/// Remainder of `a` modulo the monic polynomial `b` over GF(p). Little-endian coefficients.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (k, &c) in b.iter().enumerate() {
                let t = (lead * c) % p;
                r[shift + k] = (r[shift + k] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let m = poly.len() - 1;
    for d in 1..=m / 2 {
        // every monic polynomial of degree d
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                div.push((c % p as u64) as u32);
                c /= p as u64;
            }
            div.push(1);
            if poly_rem(poly, &div, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Creates GF(p^m). `poly` is the monic modulus `[c0, …, cm]` and is required
    /// (and checked for irreducibility) when `m > 1`; it is ignored for prime fields.
    pub fn new(p: u32, m: u32, poly: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidPolynomial("extension degree must be at least 1".into()));
        }
        let q64 = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE);
        let q = match q64 {
            Some(q) => q as u32,
            None => return Err(Error::SizeExceeded { p, m }),
        };
        if m == 1 {
            return Ok(Field(Arc::new(Inner { p, m, q, poly: Vec::new(), exp: Vec::new(), log: Vec::new() })));
        }
        let poly = poly.ok_or_else(|| Error::InvalidPolynomial("missing modulus for m > 1".into()))?;
        if poly.len() != m as usize + 1 {
            return Err(Error::InvalidPolynomial(format!(
                "expected {} coefficients, got {}",
                m + 1,
                poly.len()
            )));
        }
        if let Some(&c) = poly.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidPolynomial(format!("coefficient {c} not in [0,{p})")));
        }
        if poly[m as usize] != 1 {
            return Err(Error::InvalidPolynomial("modulus is not monic".into()));
        }
        if !is_irreducible(poly, p) {
            return Err(Error::Reducible(poly.to_vec(), p));
        }
        let mut inner = Inner { p, m, q, poly: poly.to_vec(), exp: Vec::new(), log: Vec::new() };
        build_tables(&mut inner);
        Ok(Field(Arc::new(inner)))
    }

    /// Prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn from_config(cfg: &FieldConfig) -> Result<Field> {
        Field::new(cfg.p, cfg.m, cfg.poly.as_deref())
    }

    pub fn config(&self) -> FieldConfig {
        FieldConfig {
            p: self.0.p,
            m: self.0.m,
            poly: if self.0.m == 1 { None } else { Some(self.0.poly.clone()) },
        }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// Number of elements q = p^m.
    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.poly
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Decodes a canonical integer into an element.
    pub fn elem(&self, value: u64) -> Result<Elem> {
        if value < self.0.q as u64 {
            Ok(Elem(value as u32))
        } else {
            Err(Error::OutOfRange { value, q: self.0.q })
        }
    }

    /// Encodes an element as its canonical integer.
    #[inline]
    pub fn encode(&self, a: Elem) -> u32 {
        a.0
    }

    /// Image of an integer under the prime-subfield embedding (reduced mod p).
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.0.p as i64) as u32)
    }

    /// All elements in ascending canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    /// Base-p digits `(c_0, …, c_{m-1})` of the element.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.m as usize {
            return Err(Error::LengthMismatch { expected: self.0.m as usize, got: coeffs.len() });
        }
        let p = self.0.p;
        let mut v: u32 = 0;
        for &c in coeffs.iter().rev() {
            if c >= p {
                return Err(Error::OutOfRange { value: c as u64, q: p });
            }
            v = v * p + c;
        }
        Ok(Elem(v))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if f.m == 1 {
            let s = a.0 + b.0;
            Elem(if s >= f.p { s - f.p } else { s })
        } else if f.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
            for _ in 0..f.m {
                let d = (x % f.p + y % f.p) % f.p;
                out += d * place;
                place *= f.p;
                x /= f.p;
                y /= f.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let f = &*self.0;
        if a.0 == 0 {
            a
        } else if f.m == 1 {
            Elem(f.p - a.0)
        } else if f.p == 2 {
            a
        } else {
            let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
            for _ in 0..f.m {
                let d = (f.p - x % f.p) % f.p;
                out += d * place;
                place *= f.p;
                x /= f.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if f.m == 1 {
            Elem(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + f.p - b.0 })
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if f.m == 1 {
            Elem(((a.0 as u64 * b.0 as u64) % f.p as u64) as u32)
        } else {
            let k = f.log[a.0 as usize] + f.log[b.0 as usize];
            Elem(f.exp[k as usize])
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let f = &*self.0;
        if f.m == 1 {
            Ok(self.pow(a, (f.p - 2) as u64))
        } else {
            let k = (f.q - 1 - f.log[a.0 as usize]) % (f.q - 1);
            Ok(Elem(f.exp[k as usize]))
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Single entry point for the six field operations. `b` is required for the
    /// binary ones and ignored by `Inv`/`Neg`.
    pub fn arith(&self, op: ArithOp, a: Elem, b: Option<Elem>) -> Result<Elem> {
        self.check(a)?;
        let rhs = |b: Option<Elem>| -> Result<Elem> {
            let b = b.ok_or_else(|| Error::InvalidPolynomial("missing second operand".into()))?;
            self.check(b)?;
            Ok(b)
        };
        match op {
            ArithOp::Add => Ok(self.add(a, rhs(b)?)),
            ArithOp::Sub => Ok(self.sub(a, rhs(b)?)),
            ArithOp::Mul => Ok(self.mul(a, rhs(b)?)),
            ArithOp::Div => self.div(a, rhs(b)?),
            ArithOp::Inv => self.inv(a),
            ArithOp::Neg => Ok(self.neg(a)),
        }
    }

    fn check(&self, a: Elem) -> Result<()> {
        if a.0 < self.0.q {
            Ok(())
        } else {
            Err(Error::OutOfRange { value: a.0 as u64, q: self.0.q })
        }
    }
}

/// Multiplies two residues given as digit vectors, reducing by the modulus.
fn slow_mul(a: &[u32], b: &[u32], poly: &[u32], p: u32) -> Vec<u32> {
    let m = poly.len() - 1;
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, poly, p);
    r.resize(m, 0);
    r
}

fn digits(v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut v = v;
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn build_tables(f: &mut Inner) {
    let (p, m, q) = (f.p, f.m, f.q);
    let order = (q - 1) as usize;
    // Smallest canonical element of full multiplicative order.
    for g in 2..q {
        let gd = digits(g, p, m);
        let mut exp = Vec::with_capacity(2 * order);
        let mut cur = digits(1, p, m);
        let mut full = true;
        for k in 0..order {
            let v = undigits(&cur, p);
            if k > 0 && v == 1 {
                full = false;
                break;
            }
            exp.push(v);
            cur = slow_mul(&cur, &gd, &f.poly, p);
        }
        if !full {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (k, &v) in exp.iter().enumerate() {
            log[v as usize] = k as u32;
        }
        let first: Vec<u32> = exp.clone();
        exp.extend_from_slice(&first);
        f.exp = exp;
        f.log = log;
        return;
    }
    unreachable!("the multiplicative group of a finite field is cyclic");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn creation_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.order(), 5);
        let f4 = f4();
        assert_eq!(f4.order(), 4);
        assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::Reducible(..))));
        assert!(matches!(Field::prime(6), Err(Error::NonPrime(6))));
        assert!(matches!(Field::new(2, 17, None), Err(Error::SizeExceeded { .. })));
        assert!(matches!(Field::new(3, 2, Some(&[1, 0, 2])), Err(Error::InvalidPolynomial(_))));
        assert!(matches!(Field::new(3, 2, None), Err(Error::InvalidPolynomial(_))));
        // GF(2^16) is the largest allowed
        assert!(Field::new(2, 16, Some(&[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])).is_ok());
    }

    #[test]
    fn cubic_without_roots_is_accepted_quartic_product_is_not() {
        // x^3 + x + 1 over GF(2)
        assert!(Field::new(2, 3, Some(&[1, 1, 0, 1])).is_ok());
        // (x^2+x+1)^2 = x^4 + x^2 + 1 has no roots but is reducible
        assert!(matches!(Field::new(2, 4, Some(&[1, 0, 1, 0, 1])), Err(Error::Reducible(..))));
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.arith(ArithOp::Mul, Elem(3), Some(Elem(4))).unwrap(), Elem(2));
        let f4 = f4();
        let alpha = f4.elem(2).unwrap();
        assert_eq!(f4.mul(alpha, alpha), Elem(3));
        assert_eq!(f4.inv(alpha).unwrap(), Elem(3));
        assert_eq!(f4.arith(ArithOp::Div, alpha, Some(Elem::ZERO)), Err(Error::DivisionByZero));
        assert_eq!(f5.arith(ArithOp::Inv, Elem::ZERO, None), Err(Error::DivisionByZero));
        assert_eq!(f5.arith(ArithOp::Neg, Elem(2), None).unwrap(), Elem(3));
        assert_eq!(f5.arith(ArithOp::Sub, Elem(1), Some(Elem(3))).unwrap(), Elem(3));
    }

    #[test]
    fn codec_examples() {
        let f4 = f4();
        assert_eq!(f4.coefficients(f4.elem(3).unwrap()), vec![1, 1]);
        assert_eq!(f4.encode(f4.from_coefficients(&[0, 1]).unwrap()), 2);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.elem(4).unwrap(), Elem(4));
        assert_eq!(f5.elem(5), Err(Error::OutOfRange { value: 5, q: 5 }));
    }

    fn small_fields(max_q: u32) -> Vec<Field> {
        let mut out = Vec::new();
        for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
            let mut m = 1;
            while p.pow(m) <= max_q {
                if m == 1 {
                    out.push(Field::prime(p).unwrap());
                } else {
                    // first monic irreducible found by search
                    let count = p.pow(m);
                    let f = (0..count).find_map(|code| {
                        let mut poly = digits(code, p, m);
                        poly.push(1);
                        Field::new(p, m, Some(&poly)).ok()
                    });
                    out.push(f.expect("irreducible polynomial exists"));
                }
                m += 1;
            }
        }
        out
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields(64) {
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, Elem::ZERO), a);
                assert_eq!(f.mul(a, Elem::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE, "{f:?} {a}");
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_little_theorem() {
        for f in small_fields(256) {
            let q = f.order() as u64;
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, q - 1), Elem::ONE, "{f:?}");
            }
        }
    }

    #[test]
    fn codec_round_trip() {
        for f in small_fields(256) {
            for v in 0..f.order() {
                let e = f.elem(v as u64).unwrap();
                assert_eq!(f.encode(e), v);
                assert_eq!(f.from_coefficients(&f.coefficients(e)).unwrap(), e);
            }
        }
    }
}
