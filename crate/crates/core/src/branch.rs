//! The branch at infinity as a Laurent series, and the valuation it induces.
//!
//! With `m = deg_Y F` prime to the characteristic and a single rational place
//! at infinity, `1/X` has a tame zero of order `m`, so a local parameter `s`
//! can be chosen with `X = c·s^{-m}` for some `c ∈ F*` (determined modulo
//! `m`-th powers). `Y(s)` is then a root of `F(c·s^{-m}, Y)` in `F((s))`,
//! found by Newton-polygon descent with backtracking over the possible `c`
//! and edge roots. Every series carries its known precision, so a leading
//! term is only reported once it is certain.

use std::fmt;

use crate::approx_roots::PlaneModel;
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::poly::UniPoly;
use crate::resultant::resultant_degree;
use crate::semigroup::gcd;

/// Default ceiling on the absolute series precision.
pub const DEFAULT_PRECISION_CEILING: usize = 1 << 16;

/// Environment variable overriding [`DEFAULT_PRECISION_CEILING`].
pub const PRECISION_CEILING_ENV: &str = "WEIERSTRASS_PRECISION_CEILING";

pub fn precision_ceiling_from_env() -> usize {
    std::env::var(PRECISION_CEILING_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v: &usize| v > 0)
        .unwrap_or(DEFAULT_PRECISION_CEILING)
}

/// Truncated Laurent series `Σ a_k s^k`; coefficients at exponents `>= prec`
/// are unknown (`prec = None` means the series is exact).
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    field: FiniteField,
    val: i64,
    coeffs: Vec<Elem>,
    prec: Option<i64>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl LaurentSeries {
    pub fn new(field: &FiniteField, val: i64, coeffs: Vec<Elem>, prec: Option<i64>) -> Self {
        let mut s = LaurentSeries { field: field.clone(), val, coeffs, prec };
        s.normalize();
        s
    }

    pub fn zero(field: &FiniteField) -> Self {
        Self::new(field, 0, Vec::new(), None)
    }

    pub fn monomial(field: &FiniteField, c: Elem, k: i64) -> Self {
        Self::new(field, k, vec![c], None)
    }

    fn normalize(&mut self) {
        if let Some(p) = self.prec {
            let keep = (p - self.val).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Exponents `>= prec` are unknown; `None` for an exact series.
    pub fn prec(&self) -> Option<i64> {
        self.prec
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec.is_none()
    }

    /// Order of the first known nonzero term.
    pub fn order(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn leading(&self) -> Option<(i64, Elem)> {
        self.order().map(|v| (v, self.coeffs[0]))
    }

    /// A lower bound for the true order (`None` for exact zero).
    fn order_bound(&self) -> Option<i64> {
        self.order().or(self.prec)
    }

    pub fn coeff(&self, k: i64) -> Elem {
        if k < self.val {
            return 0;
        }
        self.coeffs.get((k - self.val) as usize).copied().unwrap_or(0)
    }

    /// Known nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Elem)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.val + i as i64, c))
    }

    pub fn truncate(&self, cap: i64) -> Self {
        Self::new(&self.field, self.val, self.coeffs.clone(), min_opt(self.prec, Some(cap)))
    }

    pub fn mul_monomial(&self, c: Elem, k: i64) -> Self {
        let f = &self.field;
        Self::new(
            f,
            self.val + k,
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
            self.prec.map(|p| p + k),
        )
    }

    pub fn scale(&self, c: Elem) -> Self {
        self.mul_monomial(c, 0)
    }

    fn combine(&self, other: &Self, sub: bool) -> Self {
        let f = &self.field;
        let prec = min_opt(self.prec, other.prec);
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return Self::new(f, 0, Vec::new(), prec);
        }
        let lo = match (self.order(), other.order()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, b) => b.unwrap(),
        };
        let hi = (self.val + self.coeffs.len() as i64).max(other.val + other.coeffs.len() as i64);
        let coeffs = (lo..hi)
            .map(|k| {
                let b = other.coeff(k);
                f.add(self.coeff(k), if sub { f.neg(b) } else { b })
            })
            .collect();
        Self::new(f, lo, coeffs, prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero(f);
        }
        let prec = min_opt(
            self.prec.zip(other.order_bound()).map(|(p, o)| p + o),
            other.prec.zip(self.order_bound()).map(|(p, o)| p + o),
        );
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(f, 0, Vec::new(), prec);
        }
        let val = self.val + other.val;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(p) = prec {
            len = len.min((p - val).max(0) as usize);
        }
        let mut out = vec![0; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, val, out, prec)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms()
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => "s".to_string(),
                    _ => format!("s^{k}"),
                };
                crate::bipoly::format_term(&self.field, c, &mono)
            })
            .collect();
        if let Some(p) = self.prec {
            parts.push(format!("O(s^{p})"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        f.write_str(&parts.join(" + "))
    }
}

/// `−υ` and leading coefficient of a function along the branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Valuation {
    /// Order in the local parameter; negative for a pole.
    pub order: i64,
    /// Leading coefficient, never zero.
    pub lead: Elem,
}

impl Valuation {
    pub fn pole_order(&self) -> i64 {
        -self.order
    }

    pub fn mul(&self, other: &Valuation, field: &FiniteField) -> Valuation {
        Valuation { order: self.order + other.order, lead: field.mul(self.lead, other.lead) }
    }
}

#[derive(Debug)]
enum Fail {
    NoRoot,
    NeedPrecision,
    NotPrimitive(u64),
}

struct Candidate {
    gamma: i64,
    a: Elem,
    mult: usize,
}

struct Expansion<'a> {
    field: &'a FiniteField,
    m: u64,
    target: i64,
    cap: i64,
}

fn root_multiplicity(e: &UniPoly, a: Elem) -> usize {
    let f = e.field();
    let lin = UniPoly::new(f, vec![f.neg(a), 1]);
    let mut p = e.clone();
    let mut k = 0;
    loop {
        let (q, r) = p.div_rem(&lin).expect("monic divisor");
        if !r.is_zero() {
            return k;
        }
        p = q;
        k += 1;
    }
}

impl Expansion<'_> {
    /// Edges of the Newton polygon on `[0, r]` with integral slope, and the
    /// nonzero roots of their edge polynomials.
    fn candidates(&self, p: &[LaurentSeries], r: usize) -> std::result::Result<Vec<Candidate>, Fail> {
        let f = self.field;
        let Some(o_r) = p[r].order() else { return Err(Fail::NeedPrecision) };
        let mut known: Vec<(usize, i64)> = Vec::new();
        for (j, pj) in p.iter().enumerate().take(r) {
            if let Some(o) = pj.order() {
                known.push((j, o));
            }
        }
        if known.first().map(|k| k.0) != Some(0) {
            return Err(Fail::NeedPrecision);
        }
        known.push((r, o_r));
        // lower convex hull, left to right
        let mut hull: Vec<(usize, i64)> = Vec::new();
        for &pt in &known {
            while hull.len() >= 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                let cross = (b.0 as i64 - a.0 as i64) as i128 * (pt.1 - a.1) as i128
                    - (b.1 - a.1) as i128 * (pt.0 as i64 - a.0 as i64) as i128;
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(pt);
        }
        // an unknown coefficient must lie strictly above the hull
        for (j, pj) in p.iter().enumerate().take(r) {
            if pj.order().is_some() {
                continue;
            }
            let Some(bound) = pj.prec() else { continue };
            let seg = hull.windows(2).find(|w| w[0].0 <= j && j <= w[1].0).expect("covers [0,r]");
            let ((j1, o1), (j2, o2)) = (seg[0], seg[1]);
            let lhs = bound as i128 * (j2 - j1) as i128;
            let rhs = o1 as i128 * (j2 - j1) as i128 + (o2 - o1) as i128 * (j - j1) as i128;
            if lhs <= rhs {
                return Err(Fail::NeedPrecision);
            }
        }
        let mut out = Vec::new();
        for w in hull.windows(2) {
            let ((j1, o1), (j2, o2)) = (w[0], w[1]);
            let span = (j2 - j1) as i64;
            if (o1 - o2) % span != 0 {
                continue;
            }
            let gamma = (o1 - o2) / span;
            let coeffs: Vec<Elem> =
                (j1..=j2).map(|j| p[j].coeff(o1 - (j - j1) as i64 * gamma)).collect();
            let e = UniPoly::new(f, coeffs);
            for a in f.elements().skip(1) {
                if e.eval(a) == 0 {
                    out.push(Candidate { gamma, a, mult: root_multiplicity(&e, a) });
                }
            }
        }
        Ok(out)
    }

    /// `P(Y) <- P(Y + a s^γ)`.
    fn shift(&self, p: &[LaurentSeries], a: Elem, gamma: i64) -> Vec<LaurentSeries> {
        let mut q = p.to_vec();
        let n = q.len() - 1;
        for i in 0..n {
            for j in (i..n).rev() {
                let t = q[j + 1].mul_monomial(a, gamma);
                q[j] = q[j].add(&t);
            }
        }
        if gamma >= 0 {
            for c in q.iter_mut() {
                *c = c.truncate(self.cap);
            }
        }
        q
    }

    fn descend(
        &self,
        p: Vec<LaurentSeries>,
        r: usize,
        terms: &mut Vec<(i64, Elem)>,
    ) -> std::result::Result<LaurentSeries, Fail> {
        if r == 1 {
            return self.simple(p, terms);
        }
        if p[0].is_exact_zero() {
            // the partial sum is already an exact root
            return if p[1].order().is_some() { self.finish(terms, None) } else { Err(Fail::NoRoot) };
        }
        for cand in self.candidates(&p, r)? {
            let q = self.shift(&p, cand.a, cand.gamma);
            terms.push((cand.gamma, cand.a));
            match self.descend(q, cand.mult, terms) {
                Err(Fail::NoRoot) => {
                    terms.pop();
                }
                other => return other,
            }
        }
        Err(Fail::NoRoot)
    }

    /// After isolation the root is simple: each step reads one term off
    /// `p_0 / p_1`.
    fn simple(
        &self,
        mut p: Vec<LaurentSeries>,
        terms: &mut Vec<(i64, Elem)>,
    ) -> std::result::Result<LaurentSeries, Fail> {
        let g = terms.iter().fold(self.m, |acc, &(k, _)| gcd(acc, k.unsigned_abs()));
        if g != 1 {
            return Err(Fail::NotPrimitive(g));
        }
        let f = self.field;
        loop {
            let Some((o1, l1)) = p[1].leading() else { return Err(Fail::NeedPrecision) };
            match p[0].leading() {
                Some((o0, l0)) => {
                    let gamma = o0 - o1;
                    if gamma >= self.target {
                        return self.finish(terms, Some(gamma));
                    }
                    let a = f.neg(f.div(l0, l1).expect("nonzero"));
                    p = self.shift(&p, a, gamma);
                    terms.push((gamma, a));
                }
                None => {
                    let bound = p[0].prec().map(|b| b - o1);
                    return match bound {
                        Some(b) if b < self.target => Err(Fail::NeedPrecision),
                        b => self.finish(terms, b),
                    };
                }
            }
        }
    }

    fn finish(&self, terms: &[(i64, Elem)], prec: Option<i64>) -> std::result::Result<LaurentSeries, Fail> {
        let f = self.field;
        let lo = terms.iter().map(|t| t.0).min().unwrap_or(0);
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![0; (hi - lo + 1) as usize];
        for &(k, a) in terms {
            let idx = (k - lo) as usize;
            coeffs[idx] = f.add(coeffs[idx], a);
        }
        Ok(LaurentSeries::new(f, lo, coeffs, prec))
    }
}

/// Representatives of `F* / (F*)^m`.
fn power_class_representatives(field: &FiniteField, m: u64) -> Vec<Elem> {
    let powers: std::collections::BTreeSet<Elem> =
        field.elements().skip(1).map(|x| field.pow(x, m)).collect();
    let mut reps: Vec<Elem> = Vec::new();
    for c in field.elements().skip(1) {
        let covered = reps.iter().any(|&r| powers.contains(&field.div(c, r).expect("nonzero")));
        if !covered {
            reps.push(c);
        }
    }
    reps
}

/// Laurent parametrization `X = c s^{-m}`, `Y = Y(s)` of the branch at infinity.
#[derive(Debug, Clone)]
pub struct BranchParam {
    equation: BiPoly,
    m: u32,
    c: Elem,
    y: LaurentSeries,
    target: i64,
    slack: i64,
    ceiling: usize,
}

impl BranchParam {
    pub fn field(&self) -> &FiniteField {
        self.equation.field()
    }

    pub fn equation(&self) -> &BiPoly {
        &self.equation
    }

    /// The constant `c` in `X = c s^{-m}`.
    pub fn c(&self) -> Elem {
        self.c
    }

    pub fn x_series(&self) -> LaurentSeries {
        LaurentSeries::monomial(self.field(), self.c, -(self.m as i64))
    }

    pub fn y_series(&self) -> &LaurentSeries {
        &self.y
    }

    /// `−υ(Y)`.
    pub fn y_pole_order(&self) -> i64 {
        -self.y.order().expect("Y has a pole")
    }

    /// Number of known terms of `Y(s)` counted from its leading exponent
    /// (`None` when the series is exact).
    pub fn precision(&self) -> Option<usize> {
        self.y.prec().map(|p| (p - self.y.order().unwrap_or(0)) as usize)
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    pub fn set_ceiling(&mut self, ceiling: usize) {
        self.ceiling = ceiling;
    }

    /// Extends `Y(s)` so that every exponent below `target` is known.
    pub fn refine_to(&mut self, target: i64) -> Result<()> {
        if self.y.prec().is_none_or(|p| p >= target) {
            return Ok(());
        }
        let (y, slack) =
            expand_with(&self.equation, self.m, self.c, target, self.slack, self.ceiling)?
                .ok_or_else(|| Error::Internal("branch lost during refinement".into()))?;
        self.y = y;
        self.target = target;
        self.slack = slack;
        Ok(())
    }

    fn check_ceiling(&self, target: i64, context: &str) -> Result<()> {
        if target + self.slack > self.ceiling as i64 {
            return Err(Error::PrecisionCeiling { ceiling: self.ceiling, context: context.into() });
        }
        Ok(())
    }

    /// `g(c s^{-m}, Y(s))` with whatever precision is currently available.
    pub fn evaluate(&self, g: &BiPoly) -> LaurentSeries {
        let f = self.field();
        let m = self.m as i64;
        let to_series = |q: &UniPoly| {
            let mut coeffs = Vec::new();
            let deg = q.degree().unwrap_or(0) as i64;
            // X^i -> c^i s^{-m i}, stored from the most negative exponent up
            for i in (0..=deg).rev() {
                coeffs.push(f.mul(q.coeff(i as usize), f.pow(self.c, i as u64)));
                if i > 0 {
                    coeffs.extend(std::iter::repeat_n(0, (m - 1) as usize));
                }
            }
            LaurentSeries::new(f, -m * deg, coeffs, None)
        };
        let ys = g.y_coeffs();
        let mut acc = LaurentSeries::zero(f);
        for q in ys.iter().rev() {
            acc = acc.mul(&self.y).add(&to_series(q));
        }
        acc
    }

    /// Valuation of a polynomial function; refines the series as needed.
    pub fn valuation_poly(&mut self, g: &BiPoly) -> Result<Valuation> {
        let g = g.rem_y(&self.equation)?;
        if g.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let wdeg = g.weighted_degree(self.m as u64, self.y_pole_order() as u64).unwrap_or(0);
        let mut target = (wdeg as i64 + 1).max(self.target);
        loop {
            self.check_ceiling(target, &format!("leading term of {g}"))?;
            self.refine_to(target)?;
            if let Some((order, lead)) = self.evaluate(&g).leading() {
                return Ok(Valuation { order, lead });
            }
            target *= 2;
        }
    }

    /// Valuation of `num / den`.
    pub fn valuation(&mut self, num: &BiPoly, den: &BiPoly) -> Result<Valuation> {
        if den.rem_y(&self.equation)?.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let n = self.valuation_poly(num)?;
        let d = self.valuation_poly(den)?;
        let f = self.field();
        Ok(Valuation { order: n.order - d.order, lead: f.div(n.lead, d.lead)? })
    }
}

/// Runs the expansion for one `c`, doubling the truncation slack on
/// precision ambiguity. `Ok(None)` means no root in `F((s))` for this `c`.
fn expand_with(
    eq: &BiPoly,
    m: u32,
    c: Elem,
    target: i64,
    mut slack: i64,
    ceiling: usize,
) -> Result<Option<(LaurentSeries, i64)>> {
    let field = eq.field();
    let mi = m as i64;
    let initial: Vec<LaurentSeries> = eq
        .y_coeffs()
        .iter()
        .map(|q| {
            let mut s = LaurentSeries::zero(field);
            for i in 0..=q.degree().unwrap_or(0) {
                let a = q.coeff(i);
                if a != 0 {
                    let t = field.mul(a, field.pow(c, i as u64));
                    s = s.add(&LaurentSeries::monomial(field, t, -mi * i as i64));
                }
            }
            s
        })
        .collect();
    loop {
        let exp = Expansion { field, m: m as u64, target, cap: target + slack };
        let mut terms = Vec::new();
        match exp.descend(initial.clone(), m as usize, &mut terms) {
            Ok(y) => return Ok(Some((y, slack))),
            Err(Fail::NoRoot) => return Ok(None),
            Err(Fail::NotPrimitive(g)) => {
                return Err(Error::NotOneBranch(format!(
                    "branch expansion at infinity lies in F((s^{g})): several places at infinity"
                )))
            }
            Err(Fail::NeedPrecision) => {
                slack *= 2;
                if target + slack > ceiling as i64 {
                    return Err(Error::PrecisionCeiling {
                        ceiling,
                        context: format!("expanding the branch to exponent {target}"),
                    });
                }
            }
        }
    }
}

/// Parametrizes the branch at infinity so that `Y(s)` is known through
/// `precision` terms past its leading exponent.
pub fn parametrize(model: &PlaneModel, precision: usize) -> Result<BranchParam> {
    parametrize_with_ceiling(model, precision, precision_ceiling_from_env())
}

pub fn parametrize_with_ceiling(
    model: &PlaneModel,
    precision: usize,
    ceiling: usize,
) -> Result<BranchParam> {
    let eq = model.equation().clone();
    let field = eq.field().clone();
    let m = model.m();
    if m % field.characteristic() == 0 {
        return Err(Error::HypothesisH { p: field.characteristic(), m, n: model.n() });
    }
    let delta1 = resultant_degree(&eq, &BiPoly::y(&field))?.ok_or(Error::YDividesF)? as i64;
    let target = precision as i64 - delta1;
    let slack = 4 * (m as i64).pow(2);
    if target + slack > ceiling as i64 {
        return Err(Error::PrecisionCeiling { ceiling, context: "initial expansion".into() });
    }
    for c in power_class_representatives(&field, m as u64) {
        if let Some((y, slack)) = expand_with(&eq, m, c, target, slack, ceiling)? {
            if y.order() != Some(-delta1) {
                return Err(Error::NotOneBranch(format!(
                    "branch expansion gives −υ(Y) = {:?}, resultant gives {delta1}",
                    y.order().map(|o| -o)
                )));
            }
            return Ok(BranchParam { equation: eq, m, c, y, target, slack, ceiling });
        }
    }
    Err(Error::NotOneBranch("no rational branch at infinity".into()))
}

/// `deg_X Res_Y(F, g) = −υ(g)` for a polynomial `g` prime to `F`.
pub fn valuation_by_resultant(model: &PlaneModel, g: &BiPoly) -> Result<u64> {
    resultant_degree(model.equation(), g)?.map(|d| d as u64).ok_or(Error::CommonFactor)
}
