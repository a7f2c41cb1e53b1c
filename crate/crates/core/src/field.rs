//! Finite fields GF(p^k) at desk scale.
//!
//! Elements are stored as `u32` in the polynomial basis: the element
//! `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` is encoded as `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
//! The prime subfield therefore occupies the codes `0..p`. The modulus is the
//! least monic irreducible polynomial of degree `k` under that same encoding,
//! so a field is reproducible from `(p, k)` alone.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Raw element code of a [`FiniteField`].
pub type Elem = u32;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;
const TABLE_LIMIT: u32 = 1 << 16;

#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, ascending coefficients, length k + 1.
    modulus: Vec<u32>,
    /// exp/log tables w.r.t. a primitive element; empty when q > TABLE_LIMIT.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.k == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.k)
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// --- dense polynomials over GF(p), used only for field construction ---

fn fp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let inv_lead = fp_pow(m[dm], p - 2, p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] as u64 * inv_lead as u64 % p as u64) as u32;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_pow(b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = b as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn decode_digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(v % p);
        v /= p;
    }
    out
}

/// Monic irreducibility by trial division over all monic polynomials of
/// degree at most k/2. Fine for p^k <= 2^20.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = decode_digits(code as u32, p, d as u32);
            g.push(1);
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(p^k) with the least irreducible modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        Self::check_size(p, k)?;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            let count = (p as u64).pow(k);
            let mut found = None;
            for code in 0..count {
                let mut f = decode_digits(code as u32, p, k);
                f.push(1);
                if f[0] != 0 && is_irreducible(&f, p) {
                    found = Some(f);
                    break;
                }
            }
            found.ok_or_else(|| Error::InvalidField(format!("no irreducible of degree {k}")))?
        };
        Ok(Self::build(p, k, modulus))
    }

    /// GF(p^k) with an explicit monic modulus given in ascending order.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic of degree >= 1".into()));
        }
        let k = (modulus.len() - 1) as u32;
        Self::check_size(p, k)?;
        if modulus.iter().any(|&c| c >= p) || !is_irreducible(&modulus, p) {
            return Err(Error::InvalidField("modulus is not irreducible".into()));
        }
        Ok(Self::build(p, k, modulus))
    }

    fn check_size(p: u32, k: u32) -> Result<()> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_FIELD_SIZE {
            return Err(Error::InvalidField(format!("{p}^{k} exceeds 2^20")));
        }
        Ok(())
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(k);
        let mut inner = Inner { p, k, q, modulus, exp: Vec::new(), log: Vec::new() };
        if q <= TABLE_LIMIT {
            let order = (q - 1) as u64;
            let factors = prime_factors(order);
            let generator = (1..q)
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&r| inner.pow_slow(g, order / r) != 1)
                })
                .expect("multiplicative group is cyclic");
            let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
            let mut log = vec![0u32; q as usize];
            let mut x = 1u32;
            for i in 0..(q - 1) as usize {
                exp[i] = x;
                log[x as usize] = i as u32;
                x = inner.mul_slow(x, generator);
            }
            for i in (q - 1) as usize..exp.len() {
                exp[i] = exp[i - (q - 1) as usize];
            }
            inner.exp = exp;
            inner.log = log;
        }
        FiniteField { inner: Arc::new(inner) }
    }

    /// Parses `GF(p)`, `GF(p^k)` or `GF(q)` with q a prime power.
    pub fn parse(spec: &str) -> Result<Self> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let body = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("field spec `{spec}` is not of the form GF(...)")))?;
        let bad = || Error::Parse(format!("bad field spec `{spec}`"));
        if let Some((p, k)) = body.split_once('^') {
            let p: u32 = p.parse().map_err(|_| bad())?;
            let k: u32 = k.parse().map_err(|_| bad())?;
            return Self::new(p, k);
        }
        let q: u64 = body.parse().map_err(|_| bad())?;
        if q < 2 || q > MAX_FIELD_SIZE {
            return Err(Error::InvalidField(format!("field size {q} out of range")));
        }
        let p = prime_factors(q)[0];
        let mut k = 0;
        let mut r = q;
        while r % p == 0 {
            r /= p;
            k += 1;
        }
        if r != 1 {
            return Err(Error::InvalidField(format!("{q} is not a prime power")));
        }
        Self::new(p as u32, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn size(&self) -> u32 {
        self.inner.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.k == 1
    }

    /// Modulus in ascending coefficient order (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// The class of `t` modulo the field modulus. In a prime field the
    /// modulus is `t` itself, so this is zero.
    pub fn t(&self) -> Elem {
        if self.inner.k == 1 {
            0
        } else {
            self.inner.p
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.inner.p as i64) as Elem
    }

    /// Element from its coefficient vector in the polynomial basis (ascending).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Elem {
        let p = self.inner.p as i64;
        let mut acc = 0;
        // reduce via Horner in t so that degrees >= k are folded by the modulus
        for &c in coeffs.iter().rev() {
            acc = self.mul(acc, self.t());
            acc = self.add(acc, c.rem_euclid(p) as Elem);
        }
        acc
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        decode_digits(a, self.inner.p, self.inner.k)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.k == 1 {
            let s = a + b;
            return if s >= inner.p { s - inner.p } else { s };
        }
        if inner.p == 2 {
            return a ^ b;
        }
        let (p, mut a, mut b) = (inner.p, a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let d = (a % p + b % p) % p;
            out += d * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.p == 2 {
            return a;
        }
        if inner.k == 1 {
            return if a == 0 { 0 } else { inner.p - a };
        }
        let p = inner.p;
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            let d = a % p;
            out += ((p - d) % p) * place;
            place *= p;
            a /= p;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.inner;
        if !inner.exp.is_empty() {
            return inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize];
        }
        inner.mul_slow(a, b)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        if !inner.exp.is_empty() {
            let n = inner.q - 1;
            return Ok(inner.exp[((n - inner.log[a as usize]) % n) as usize]);
        }
        Ok(inner.pow_slow(a, inner.q as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.inner;
        if !inner.exp.is_empty() {
            let n = (inner.q - 1) as u64;
            let l = inner.log[a as usize] as u64 * (e % n) % n;
            return inner.exp[l as usize];
        }
        inner.pow_slow(a, e)
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.q
    }

    /// Renders an element: decimal in prime fields, a `t`-polynomial otherwise.
    pub fn format(&self, a: Elem) -> String {
        if self.inner.k == 1 {
            return a.to_string();
        }
        if a == 0 {
            return "0".into();
        }
        let digits = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        parts.join("+")
    }

    /// Checked element wrapper bound to this field.
    pub fn element(&self, value: Elem) -> Result<FieldElement> {
        if value >= self.inner.q {
            return Err(Error::InvalidArgument(format!("{value} is not an element code of {self}")));
        }
        Ok(FieldElement { field: self.clone(), value })
    }

    /// Prime-subfield codes (0..p) mean the same element in both fields.
    pub fn same_characteristic(&self, other: &FiniteField) -> bool {
        self.inner.p == other.inner.p
    }
}

impl Inner {
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, k) = (self.p, self.k);
        if k == 1 {
            return (a as u64 * b as u64 % p as u64) as u32;
        }
        let da = decode_digits(a, p, k);
        let db = decode_digits(b, p, k);
        let mut prod = vec![0u32; 2 * k as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let r = fp_rem(&prod, &self.modulus, p);
        let mut out = 0;
        for &c in r.iter().rev() {
            out = out * p + c;
        }
        out
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

/// An element carrying its field, with checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    fn with(&self, value: Elem) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }
}
