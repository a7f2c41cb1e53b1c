//! Sparse bivariate polynomials in X and Y.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::poly::UniPoly;

/// Sparse polynomial keyed by `(deg_X, deg_Y)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: FiniteField,
    terms: BTreeMap<(u32, u32), Elem>,
}

impl BiPoly {
    pub fn zero(field: &FiniteField) -> Self {
        BiPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn one(field: &FiniteField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &FiniteField, c: Elem) -> Self {
        Self::monomial(field, c, 0, 0)
    }

    /// `c * X^i * Y^j`.
    pub fn monomial(field: &FiniteField, c: Elem, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((i, j), c);
        }
        BiPoly { field: field.clone(), terms }
    }

    pub fn x(field: &FiniteField) -> Self {
        Self::monomial(field, 1, 1, 0)
    }

    pub fn y(field: &FiniteField) -> Self {
        Self::monomial(field, 1, 0, 1)
    }

    /// Collects `(i, j, c)` triples, summing repeated exponents.
    pub fn from_terms(field: &FiniteField, terms: impl IntoIterator<Item = (u32, u32, Elem)>) -> Self {
        let mut out = Self::zero(field);
        for (i, j, c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: Elem) {
        if c == 0 {
            return;
        }
        let f = &self.field;
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Terms as `((deg_X, deg_Y), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Elem)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Elem {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }

    /// `max(wx * i + wy * j)` over the support.
    pub fn weighted_degree(&self, wx: u64, wy: u64) -> Option<u64> {
        self.terms.keys().map(|&(i, j)| wx * i as u64 + wy * j as u64).max()
    }

    /// Coefficients as a polynomial in Y: entry `j` is the coefficient of `Y^j` in `F[X]`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let f = &self.field;
        let dy = match self.deg_y() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut dense: Vec<Vec<Elem>> = vec![Vec::new(); dy + 1];
        for (&(i, j), &c) in &self.terms {
            let row = &mut dense[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, 0);
            }
            row[i as usize] = c;
        }
        dense.into_iter().map(|r| UniPoly::new(f, r)).collect()
    }

    pub fn from_y_coeffs(field: &FiniteField, coeffs: &[UniPoly]) -> Self {
        let mut out = Self::zero(field);
        for (j, c) in coeffs.iter().enumerate() {
            for (i, &a) in c.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, a);
            }
        }
        out
    }

    /// Embeds a polynomial in X.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_y_coeffs(p.field(), std::slice::from_ref(p))
    }

    /// Leading coefficient as a polynomial in Y.
    pub fn lc_y(&self) -> UniPoly {
        match self.deg_y() {
            None => UniPoly::zero(&self.field),
            Some(d) => {
                let f = &self.field;
                let mut coeffs = Vec::new();
                for (&(i, j), &c) in &self.terms {
                    if j == d {
                        if coeffs.len() <= i as usize {
                            coeffs.resize(i as usize + 1, 0);
                        }
                        coeffs[i as usize] = c;
                    }
                }
                UniPoly::new(f, coeffs)
            }
        }
    }

    pub fn is_monic_in_y(&self) -> bool {
        let lc = self.lc_y();
        lc.is_constant() && lc.coeff(0) == 1
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        Self::from_terms(f, self.terms().map(|((i, j), a)| (i, j, f.mul(a, c))))
    }

    pub fn mul_monomial(&self, c: Elem, di: u32, dj: u32) -> Self {
        let f = &self.field;
        Self::from_terms(f, self.terms().map(|((i, j), a)| (i + di, j + dj, f.mul(a, c))))
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

    /// Division by a polynomial whose leading Y-coefficient is a nonzero
    /// constant. Returns `(q, r)` with `self = q * divisor + r` and
    /// `deg_Y r < deg_Y divisor`.
    pub fn div_rem_y(&self, divisor: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        self.check(divisor);
        let f = &self.field;
        let dd = divisor.deg_y().ok_or(Error::DivisionByZero)?;
        let lc = divisor.lc_y();
        if !lc.is_constant() {
            return Err(Error::NotMonic);
        }
        let inv = f.inv(lc.coeff(0))?;
        let div_coeffs = divisor.y_coeffs();
        let mut rem = self.y_coeffs();
        let mut quot = vec![UniPoly::zero(f); rem.len().saturating_sub(dd as usize)];
        for top in (dd as usize..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = rem[top].scale(inv);
            let shift = top - dd as usize;
            for (k, d) in div_coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + k] = &rem[shift + k] - &(&c * d);
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd as usize);
        Ok((Self::from_y_coeffs(f, &quot), Self::from_y_coeffs(f, &rem)))
    }

    /// Remainder modulo a divisor monic in Y.
    pub fn rem_y(&self, divisor: &BiPoly) -> Result<BiPoly> {
        Ok(self.div_rem_y(divisor)?.1)
    }

    /// Applies `X <- X + c * Y^k`.
    pub fn substitute_x(&self, c: Elem, k: u32) -> BiPoly {
        let f = &self.field;
        let shift = &BiPoly::x(f) + &BiPoly::monomial(f, c, 0, k);
        let mut powers = vec![BiPoly::one(f)];
        let mut out = BiPoly::zero(f);
        for (&(i, j), &a) in &self.terms {
            while powers.len() <= i as usize {
                let next = &powers[powers.len() - 1] * &shift;
                powers.push(next);
            }
            out = &out + &powers[i as usize].mul_monomial(a, 0, j);
        }
        out
    }

    /// Partial derivative with respect to Y.
    pub fn diff_y(&self) -> BiPoly {
        let f = &self.field;
        Self::from_terms(
            f,
            self.terms()
                .filter(|&((_, j), _)| j > 0)
                .map(|((i, j), a)| (i, j - 1, f.mul(a, f.from_int(j as i64)))),
        )
    }

    pub fn eval(&self, x: Elem, y: Elem) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for (&(i, j), &c) in &self.terms {
            acc = f.add(acc, f.mul(c, f.mul(f.pow(x, i as u64), f.pow(y, j as u64))));
        }
        acc
    }

    /// Polynomial in Y obtained by fixing `X = x`.
    pub fn eval_x(&self, x: Elem) -> UniPoly {
        let f = &self.field;
        let coeffs: Vec<Elem> = self.y_coeffs().iter().map(|c| c.eval(x)).collect();
        UniPoly::new(f, coeffs)
    }

    /// Re-reads the coefficients in `target`. Allowed when every coefficient
    /// lies in the common prime subfield, or when the fields coincide.
    pub fn map_field(&self, target: &FiniteField) -> Result<BiPoly> {
        if &self.field == target {
            return Ok(self.clone());
        }
        let p = self.field.characteristic();
        if !self.field.same_characteristic(target) || self.terms.values().any(|&c| c >= p) {
            return Err(Error::FieldMismatch(self.field.to_string(), target.to_string()));
        }
        Ok(BiPoly { field: target.clone(), terms: self.terms.clone() })
    }

    /// True when `self` vanishes identically on the curve `modulus = 0`.
    pub fn is_multiple_of(&self, modulus: &BiPoly) -> Result<bool> {
        Ok(self.rem_y(modulus)?.is_zero())
    }

    fn check(&self, other: &BiPoly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }
}

pub(crate) fn format_coeff(field: &FiniteField, c: Elem) -> String {
    if c < field.characteristic() {
        c.to_string()
    } else {
        format!("[{}]", field.format(c))
    }
}

pub(crate) fn format_term(field: &FiniteField, c: Elem, mono: &str) -> String {
    if mono.is_empty() {
        format_coeff(field, c)
    } else if c == 1 {
        mono.to_string()
    } else {
        format!("{}*{}", format_coeff(field, c), mono)
    }
}

fn format_monomial(i: u32, j: u32) -> String {
    let part = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    [part("X", i), part("Y", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|(i, j)| format_term(&self.field, self.terms[&(i, j)], &format_monomial(i, j)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        let f = &self.field;
        BiPoly::from_terms(f, self.terms().map(|((i, j), c)| (i, j, f.neg(c))))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.check(rhs);
        let f = &self.field;
        let mut out = BiPoly::zero(f);
        for (&(i1, j1), &a) in &self.terms {
            for (&(i2, j2), &b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, f.mul(a, b));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
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
    use crate::parse::parse_poly;

    fn gf(p: u32) -> FiniteField {
        FiniteField::new(p, 1).unwrap()
    }

    #[test]
    fn substitution_matches_worked_example() {
        let f = gf(2);
        let curve = parse_poly(&f, "Y^8 + Y^2 + X^3").unwrap();
        let expected = parse_poly(&f, "Y^9 + Y^8 + X*Y^6 + X^2*Y^3 + Y^2 + X^3").unwrap();
        assert_eq!(curve.substitute_x(1, 3), expected);
    }

    #[test]
    fn divmod_one_step() {
        let f = gf(5);
        let a = parse_poly(&f, "Y^2 + X").unwrap();
        let (q, r) = a.div_rem_y(&BiPoly::y(&f)).unwrap();
        assert_eq!(q, BiPoly::y(&f));
        assert_eq!(r, BiPoly::x(&f));
    }

    #[test]
    fn non_monic_divisor_rejected() {
        let f = gf(5);
        let a = parse_poly(&f, "Y^3 + 1").unwrap();
        let b = parse_poly(&f, "X*Y + 1").unwrap();
        assert_eq!(a.div_rem_y(&b), Err(Error::NotMonic));
    }

    #[test]
    fn inverse_substitution_odd_characteristic() {
        let f = gf(7);
        let x = BiPoly::x(&f);
        let there = x.substitute_x(1, 1);
        assert_eq!(there.substitute_x(f.neg(1), 1), x);
    }

    #[test]
    fn display_orders_by_y_degree() {
        let f = gf(2);
        let p = parse_poly(&f, "X^3 + Y^2 + X*Y^6 + Y^9").unwrap();
        assert_eq!(p.to_string(), "Y^9 + X*Y^6 + Y^2 + X^3");
    }
}
