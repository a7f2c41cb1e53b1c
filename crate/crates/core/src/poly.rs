//! Dense univariate polynomials over a [`FiniteField`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};

/// Dense polynomial, ascending coefficients, trailing zeros trimmed.
/// The zero polynomial has no coefficients and degree `None` (i.e. −∞).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FiniteField,
    coeffs: Vec<Elem>,
}

impl UniPoly {
    pub fn new(field: &FiniteField, coeffs: Vec<Elem>) -> Self {
        let mut p = UniPoly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(field: &FiniteField) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FiniteField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &FiniteField, c: Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(field: &FiniteField, c: Elem, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self::new(field, coeffs)
    }

    /// The variable itself.
    pub fn x(field: &FiniteField) -> Self {
        Self::monomial(field, 1, 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` standing for −∞.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { field: self.field.clone(), coeffs }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
            .collect();
        Self::new(f, coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv = f.inv(divisor.leading())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut q = vec![0; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], inv);
            if c == 0 {
                continue;
            }
            q[top - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = f.sub(r[idx], f.mul(c, d));
            }
        }
        r.truncate(dd);
        Ok((Self::new(f, q), Self::new(f, r)))
    }

    /// Division that must be exact.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    fn check(&self, other: &UniPoly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    /// Renders in variable `var` using the crate's polynomial grammar.
    pub fn format_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(crate::bipoly::format_term(&self.field, c, &mono));
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_in("X"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("X"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        UniPoly::new(f, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        UniPoly::new(f, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f);
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        UniPoly::new(f, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FiniteField {
        FiniteField::new(p, 1).unwrap()
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        let f = gf(5);
        assert_eq!(UniPoly::zero(&f).degree(), None);
        assert_eq!(UniPoly::new(&f, vec![1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = gf(7);
        let a = UniPoly::new(&f, vec![3, 0, 5, 1, 6]);
        let b = UniPoly::new(&f, vec![2, 4, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().map_or(true, |d| d < 2));
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn gcd_of_products() {
        let f = gf(5);
        let x = UniPoly::x(&f);
        let one = UniPoly::one(&f);
        let a = &(&x + &one) * &(&x - &UniPoly::constant(&f, 2));
        let b = &(&x + &one) * &(&x + &UniPoly::constant(&f, 4));
        assert_eq!(a.gcd(&b), &x + &one);
    }

    #[test]
    fn derivative_in_characteristic() {
        let f = gf(3);
        let p = UniPoly::monomial(&f, 1, 3);
        assert!(p.derivative().is_zero());
    }
}
