//! Completing the semigroup at infinity to the Weierstrass semigroup with
//! explicit functions, and bases of `L(mP)`.
//!
//! Functions are stored per Apéry slot: `h_i` with value `a_i` for each
//! residue class mod `e = δ_0`, plus `h_e = X`. The function of value
//! `a_i + l·e` is the composite `h_i · X^l`.

use std::collections::BTreeMap;
use std::fmt;

use crate::approx_roots::SemigroupAtInfinity;
use crate::bipoly::BiPoly;
use crate::branch::{BranchParam, Valuation};
use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::parse::parse_rational;
use crate::poly::UniPoly;
use crate::semigroup::NumericalSemigroup;

/// `num / den`, both kept reduced modulo the curve equation.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: BiPoly,
    den: BiPoly,
}

impl RationalFunction {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: BiPoly) -> Self {
        let den = BiPoly::one(p.field());
        RationalFunction { num: p, den }
    }

    pub fn one(field: &FiniteField) -> Self {
        Self::polynomial(BiPoly::one(field))
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn field(&self) -> &FiniteField {
        self.num.field()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Reduces both parts modulo `modulus`, removes their common content in
    /// X and scales the denominator's leading term to 1.
    pub fn normalized(&self, modulus: &BiPoly) -> Result<Self> {
        let mut num = self.num.rem_y(modulus)?;
        let mut den = self.den.rem_y(modulus)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let f = num.field().clone();
        if num.is_zero() {
            return Ok(RationalFunction { num, den: BiPoly::one(&f) });
        }
        let content = num
            .y_coeffs()
            .iter()
            .chain(den.y_coeffs().iter())
            .fold(UniPoly::zero(&f), |acc, c| acc.gcd(c));
        if content.degree().unwrap_or(0) > 0 {
            let divide = |p: &BiPoly| -> Result<BiPoly> {
                let cs: Result<Vec<UniPoly>> =
                    p.y_coeffs().iter().map(|c| c.div_exact(&content)).collect();
                Ok(BiPoly::from_y_coeffs(&f, &cs?))
            };
            num = divide(&num)?;
            den = divide(&den)?;
        }
        let lead = den.terms().last().map(|(_, c)| c).expect("nonzero");
        let inv = f.inv(lead)?;
        Ok(RationalFunction { num: num.scale(inv), den: den.scale(inv) })
    }

    pub fn mul(&self, other: &Self, modulus: &BiPoly) -> Result<Self> {
        RationalFunction { num: &self.num * &other.num, den: &self.den * &other.den }
            .normalized(modulus)
    }

    pub fn pow(&self, e: u64, modulus: &BiPoly) -> Result<Self> {
        let mut acc = Self::one(self.field());
        for _ in 0..e {
            acc = acc.mul(self, modulus)?;
        }
        Ok(acc)
    }

    /// `self − c·other`.
    pub fn sub_scaled(&self, c: Elem, other: &Self, modulus: &BiPoly) -> Result<Self> {
        let r = if self.den == other.den {
            RationalFunction { num: &self.num - &other.num.scale(c), den: self.den.clone() }
        } else {
            RationalFunction {
                num: &(&self.num * &other.den) - &(&other.num * &self.den).scale(c),
                den: &self.den * &other.den,
            }
        };
        r.normalized(modulus)
    }

    pub fn add(&self, other: &Self, modulus: &BiPoly) -> Result<Self> {
        let f = self.field();
        self.sub_scaled(f.neg(1), other, modulus)
    }

    /// Value at an affine point; both parts must be read in the point's field.
    pub fn eval(&self, x: Elem, y: Elem) -> Result<Elem> {
        let f = self.field();
        let d = self.den.eval(x, y);
        if d == 0 {
            return Err(Error::PoleAtPoint(format!("({}, {})", f.format(x), f.format(y))));
        }
        f.div(self.num.eval(x, y), d)
    }

    /// The same function with coefficients read in `target`.
    pub fn map_field(&self, target: &FiniteField) -> Result<Self> {
        Ok(RationalFunction { num: self.num.map_field(target)?, den: self.den.map_field(target)? })
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.coeff(0, 0) == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Where a table function came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Power product of the approximate roots `F_0, ..., F_h`.
    AmProduct,
    /// Reduction of the given integral-basis element (0-based index).
    IntegralBasis(usize),
    /// Product of earlier table functions.
    Product,
}

/// A function together with its pole order at the branch and the leading
/// coefficient of its expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedFunction {
    pub function: RationalFunction,
    pub value: u64,
    pub lead: Elem,
    pub provenance: Provenance,
}

impl ValuedFunction {
    pub fn valuation(&self) -> Valuation {
        Valuation { order: -(self.value as i64), lead: self.lead }
    }
}

/// Values a rational function with the oracle, rejecting zeros at the branch.
pub fn value_of(
    oracle: &mut BranchParam,
    function: RationalFunction,
    provenance: Provenance,
) -> Result<ValuedFunction> {
    let v = oracle.valuation(function.num(), function.den())?;
    if v.order > 0 {
        return Err(Error::InconsistentBasis(format!(
            "{function} vanishes at the branch at infinity, so it is not integral"
        )));
    }
    Ok(ValuedFunction { function, value: (-v.order) as u64, lead: v.lead, provenance })
}

/// Apéry-slot functions for a semigroup containing `S_P`.
#[derive(Debug, Clone)]
pub struct FunctionTable {
    modulus: BiPoly,
    semigroup: NumericalSemigroup,
    sp: SemigroupAtInfinity,
    apery: Vec<ValuedFunction>,
    pivot: ValuedFunction,
}

impl FunctionTable {
    /// The table for `S_P` itself: slot functions are AM power products.
    pub fn from_semigroup_at_infinity(
        sp: &SemigroupAtInfinity,
        oracle: &mut BranchParam,
    ) -> Result<Self> {
        let modulus = oracle.equation().clone();
        let field = modulus.field().clone();
        let mut leads = Vec::new();
        for (f, &delta) in sp.functions().iter().zip(sp.generators()) {
            let v = oracle.valuation_poly(f)?;
            if v.pole_order() != delta as i64 {
                return Err(Error::Internal(format!(
                    "−υ({f}) = {} but the resultant gives {delta}",
                    v.pole_order()
                )));
            }
            leads.push(v.lead);
        }
        let semigroup = sp.semigroup();
        let tele = sp.telescopic();
        let mut apery = Vec::new();
        for &a in semigroup.apery() {
            let lambda = tele.repr(a)?;
            let mut lead = 1;
            for (k, &l) in lambda.iter().enumerate() {
                lead = field.mul(lead, field.pow(leads[k], l));
            }
            let poly = sp.power_product(a)?.rem_y(&modulus)?;
            apery.push(ValuedFunction {
                function: RationalFunction::polynomial(poly),
                value: a,
                lead,
                provenance: Provenance::AmProduct,
            });
        }
        let pivot = ValuedFunction {
            function: RationalFunction::polynomial(sp.functions()[0].clone()),
            value: sp.generators()[0],
            lead: leads[0],
            provenance: Provenance::AmProduct,
        };
        Ok(FunctionTable { modulus, semigroup, sp: sp.clone(), apery, pivot })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn semigroup_at_infinity(&self) -> &SemigroupAtInfinity {
        &self.sp
    }

    pub fn modulus(&self) -> &BiPoly {
        &self.modulus
    }

    pub fn apery_function(&self, i: usize) -> &ValuedFunction {
        &self.apery[i]
    }

    /// All slot functions `h_0, ..., h_{e-1}`.
    pub fn apery_functions(&self) -> &[ValuedFunction] {
        &self.apery
    }

    pub fn pivot_function(&self) -> &ValuedFunction {
        &self.pivot
    }

    /// Adds `g` (value outside the semigroup) as a generator; slots whose
    /// Apéry element drops get the product `h_j · g^λ`. Returns the newly
    /// covered values in increasing order.
    pub fn adjoin(&mut self, g: &ValuedFunction) -> Result<Vec<u64>> {
        let field = self.modulus.field().clone();
        let old_gaps = self.semigroup.gaps();
        let (next, provenance) = self.semigroup.adjoin_tracked(g.value);
        let mut powers = vec![RationalFunction::one(&field)];
        let mut apery = self.apery.clone();
        for (i, prov) in provenance.iter().enumerate() {
            let Some((j, lambda)) = *prov else { continue };
            while powers.len() <= lambda as usize {
                let next_pow = powers.last().unwrap().mul(&g.function, &self.modulus)?;
                powers.push(next_pow);
            }
            let base = &self.apery[j];
            let function = base.function.mul(&powers[lambda as usize], &self.modulus)?;
            let lead = field.mul(base.lead, field.pow(g.lead, lambda));
            let provenance =
                if j == 0 && lambda == 1 { g.provenance.clone() } else { Provenance::Product };
            apery[i] = ValuedFunction {
                function,
                value: base.value + lambda * g.value,
                lead,
                provenance,
            };
        }
        self.apery = apery;
        self.semigroup = next;
        Ok(old_gaps.into_iter().filter(|&v| self.semigroup.contains(v)).collect())
    }

    /// The canonical function `h_i · X^l` of value `r = a_i + l·e`.
    pub fn composite(&self, r: u64) -> Result<ValuedFunction> {
        let c = self.semigroup.coordinates(r).ok_or(Error::NotInSemigroup(r))?;
        let base = &self.apery[c.i];
        if c.l == 0 {
            return Ok(base.clone());
        }
        let field = self.modulus.field();
        let xl = RationalFunction::polynomial(self.pivot.function.num().pow(c.l));
        Ok(ValuedFunction {
            function: base.function.mul(&xl, &self.modulus)?,
            value: r,
            lead: field.mul(base.lead, field.pow(self.pivot.lead, c.l)),
            provenance: Provenance::Product,
        })
    }

    /// A function with a single pole of order exactly `r`: the AM power
    /// product when `r ∈ S_P`, the Apéry composite otherwise. The value is
    /// re-checked with the oracle.
    pub fn function_for(&self, r: u64, oracle: &mut BranchParam) -> Result<ValuedFunction> {
        if !self.semigroup.contains(r) {
            return Err(Error::NotInSemigroup(r));
        }
        let function = if self.sp.semigroup().contains(r) {
            RationalFunction::polynomial(self.sp.power_product(r)?.rem_y(&self.modulus)?)
        } else {
            self.composite(r)?.function
        };
        let provenance = if function.is_polynomial() && self.sp.semigroup().contains(r) {
            Provenance::AmProduct
        } else {
            Provenance::Product
        };
        let vf = value_of(oracle, function, provenance)?;
        if vf.value != r {
            return Err(Error::Internal(format!("function for {r} has value {}", vf.value)));
        }
        Ok(vf)
    }

    /// One function per value `r ∈ Γ ∩ [0, m]`, increasing.
    pub fn l_basis(&self, m: u64, oracle: &mut BranchParam) -> Result<Vec<ValuedFunction>> {
        self.semigroup.elements_up_to(m).into_iter().map(|r| self.function_for(r, oracle)).collect()
    }

    /// `l_basis` without the oracle re-check.
    pub fn l_basis_unchecked(&self, m: u64) -> Result<Vec<ValuedFunction>> {
        self.semigroup.elements_up_to(m).into_iter().map(|r| self.composite(r)).collect()
    }
}

/// `g − c·f` where `f` is the table function of the same value and `c` the
/// ratio of leading coefficients; the pole order strictly drops.
pub fn reduce_step(
    g: &ValuedFunction,
    table: &FunctionTable,
    oracle: &mut BranchParam,
) -> Result<ValuedFunction> {
    if !table.semigroup.contains(g.value) {
        return Err(Error::InvalidArgument(format!(
            "value {} is a gap of the current semigroup",
            g.value
        )));
    }
    let f = table.composite(g.value)?;
    subtract_matching(g, &f, &table.modulus, oracle)
}

fn subtract_matching(
    g: &ValuedFunction,
    f: &ValuedFunction,
    modulus: &BiPoly,
    oracle: &mut BranchParam,
) -> Result<ValuedFunction> {
    let field = modulus.field();
    let c = field.div(g.lead, f.lead)?;
    let next = g.function.sub_scaled(c, &f.function, modulus)?;
    let reduced = value_of(oracle, next, g.provenance.clone())?;
    if reduced.value >= g.value {
        return Err(Error::Internal(format!(
            "reduction did not lower the pole order {} (got {})",
            g.value, reduced.value
        )));
    }
    Ok(reduced)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TriangulationMode {
    /// Adjoin each escaped value as a generator and stop once `s` values
    /// are covered.
    #[default]
    Fast,
    /// Grow the set `S_P ∪ {v(g_1), ...}` one value at a time and reduce only
    /// against AM products and earlier `g_j`.
    Plain,
}

/// History of one integral-basis element.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// Index of the basis element.
    pub index: usize,
    /// Pole orders visited, starting with the input's.
    pub trajectory: Vec<u64>,
    /// The resulting `g_i`, `None` when it reduced to zero or was not needed.
    pub result: Option<ValuedFunction>,
}

#[derive(Debug, Clone)]
pub struct TriangulationReport {
    pub s_p: NumericalSemigroup,
    /// Number `s` of integral-basis elements.
    pub basis_size: usize,
    /// Values of the `g_i`, in discovery order.
    pub escaped_values: Vec<u64>,
    /// Gaps of `S_P` covered, in discovery order.
    pub added_values: Vec<u64>,
    pub reductions: Vec<Reduction>,
    pub gamma: NumericalSemigroup,
    pub genus: u64,
}

impl TriangulationReport {
    pub fn reduced_functions(&self) -> Vec<&ValuedFunction> {
        self.reductions.iter().filter_map(|r| r.result.as_ref()).collect()
    }
}

/// Parses one rational function per line (`numerator / denominator`);
/// blank lines and `#` comments are skipped.
pub fn parse_integral_basis(field: &FiniteField, text: &str) -> Result<Vec<RationalFunction>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            let (n, d) = parse_rational(field, l)?;
            RationalFunction::new(n, d)
        })
        .collect()
}

pub fn triangulate(
    sp: &SemigroupAtInfinity,
    basis: &[RationalFunction],
    oracle: &mut BranchParam,
    mode: TriangulationMode,
) -> Result<(TriangulationReport, FunctionTable)> {
    let mut table = FunctionTable::from_semigroup_at_infinity(sp, oracle)?;
    let s_p = table.semigroup.clone();
    let s = basis.len();
    let modulus = table.modulus.clone();
    let mut reductions = Vec::new();
    let mut escaped_values = Vec::new();
    let mut added_values = Vec::new();
    // plain mode: value -> g_j
    let mut found: BTreeMap<u64, ValuedFunction> = BTreeMap::new();

    for (index, h) in basis.iter().enumerate() {
        if mode == TriangulationMode::Fast && added_values.len() >= s {
            reductions.push(Reduction { index, trajectory: Vec::new(), result: None });
            continue;
        }
        let h = h.normalized(&modulus)?;
        let mut g = match value_of(oracle, h, Provenance::IntegralBasis(index)) {
            Err(Error::ZeroFunction) => {
                reductions.push(Reduction { index, trajectory: Vec::new(), result: None });
                continue;
            }
            other => other?,
        };
        let mut trajectory = vec![g.value];
        let result = loop {
            let step = match mode {
                TriangulationMode::Fast if table.semigroup.contains(g.value) => {
                    Some(reduce_step(&g, &table, oracle))
                }
                TriangulationMode::Plain if s_p.contains(g.value) => {
                    let f = value_of(
                        oracle,
                        RationalFunction::polynomial(sp.power_product(g.value)?),
                        Provenance::AmProduct,
                    )?;
                    Some(subtract_matching(&g, &f, &modulus, oracle))
                }
                TriangulationMode::Plain if found.contains_key(&g.value) => {
                    Some(subtract_matching(&g, &found[&g.value], &modulus, oracle))
                }
                _ => None,
            };
            match step {
                Some(Err(Error::ZeroFunction)) => break None,
                Some(next) => {
                    g = next?;
                    trajectory.push(g.value);
                }
                None => break Some(g),
            }
        };
        if let Some(g) = &result {
            escaped_values.push(g.value);
            match mode {
                TriangulationMode::Fast => added_values.extend(table.adjoin(g)?),
                TriangulationMode::Plain => {
                    found.insert(g.value, g.clone());
                    added_values.push(g.value);
                }
            }
        }
        reductions.push(Reduction { index, trajectory, result });
    }

    if mode == TriangulationMode::Plain {
        for g in found.values() {
            if !table.semigroup.contains(g.value) {
                table.adjoin(g)?;
            }
        }
    }
    let gamma = table.semigroup.clone();
    let covered = s_p.genus() - gamma.genus();
    if added_values.len() != s || covered as usize != s {
        return Err(Error::InconsistentBasis(format!(
            "{s} basis elements but {} values added and {covered} gaps of S_P covered",
            added_values.len()
        )));
    }
    let report = TriangulationReport {
        s_p,
        basis_size: s,
        escaped_values,
        added_values,
        reductions,
        genus: gamma.genus(),
        gamma,
    };
    Ok((report, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx_roots::analyze_curve;
    use crate::branch::parametrize;
    use crate::parse::parse_poly;

    const BASIS: &str = "\
        Y(1+Y^6) / (X+Y^3)
        Y(1+Y^6) / ((X+Y^3)(Y^2+Y+1))
        (X^2+Y^6) / (Y^2+Y+1)
        Y^2(1+Y^3)(Y^2+Y+1) / (X+Y^3)
    ";

    fn setup() -> (SemigroupAtInfinity, BranchParam, Vec<RationalFunction>) {
        let f = FiniteField::new(2, 1).unwrap();
        let a = analyze_curve(&parse_poly(&f, "Y^8 + Y^2 + X^3").unwrap()).unwrap();
        let oracle = parametrize(&a.model, 16).unwrap();
        let basis = parse_integral_basis(&f, BASIS).unwrap();
        (a.semigroup.unwrap(), oracle, basis)
    }

    #[test]
    fn plain_mode_follows_worked_example() {
        let (sp, mut oracle, basis) = setup();
        let (rep, _) = triangulate(&sp, &basis, &mut oracle, TriangulationMode::Plain).unwrap();
        assert_eq!(rep.escaped_values, vec![13, 7, 10, 4]);
        assert_eq!(rep.reductions[3].trajectory, vec![13, 10, 4]);
        assert_eq!(rep.gamma.gaps(), vec![1, 2, 5]);
        assert_eq!(rep.genus, 3);
        let f = sp.functions()[0].field().clone();
        let modulus = oracle.equation().clone();
        let g4 = basis[3].add(&basis[0], &modulus).unwrap().add(&basis[2], &modulus).unwrap();
        let expected = g4.normalized(&modulus).unwrap();
        let got = rep.reductions[3].result.as_ref().unwrap();
        let diff = got.function.sub_scaled(1, &expected, &modulus).unwrap();
        assert!(diff.num().is_zero(), "{diff}");
        assert_eq!(f.characteristic(), 2);
    }

    #[test]
    fn fast_mode_covers_same_values() {
        let (sp, mut oracle, basis) = setup();
        let (rep, table) = triangulate(&sp, &basis, &mut oracle, TriangulationMode::Fast).unwrap();
        let mut added = rep.added_values.clone();
        added.sort_unstable();
        assert_eq!(added, vec![4, 7, 10, 13]);
        assert_eq!(rep.gamma.gaps(), vec![1, 2, 5]);
        for i in 0..9 {
            let h = table.apery_function(i);
            let v = value_of(&mut oracle, h.function.clone(), Provenance::Product).unwrap();
            assert_eq!((v.value, v.lead), (h.value, h.lead));
        }
    }

    #[test]
    fn l_basis_and_function_for() {
        let (sp, mut oracle, basis) = setup();
        let (_, table) = triangulate(&sp, &basis, &mut oracle, TriangulationMode::Fast).unwrap();
        let vals: Vec<u64> = table.l_basis(10, &mut oracle).unwrap().iter().map(|f| f.value).collect();
        assert_eq!(vals, vec![0, 3, 4, 6, 7, 8, 9, 10]);
        let f12 = table.function_for(12, &mut oracle).unwrap();
        let field = sp.functions()[0].field().clone();
        assert_eq!(f12.function.num(), &parse_poly(&field, "X*Y").unwrap());
        assert_eq!(table.function_for(0, &mut oracle).unwrap().function, RationalFunction::one(&field));
        assert!(table.function_for(5, &mut oracle).is_err());
    }

    #[test]
    fn reduce_step_guard_and_single_step() {
        let (sp, mut oracle, basis) = setup();
        let table = FunctionTable::from_semigroup_at_infinity(&sp, &mut oracle).unwrap();
        let h1 = value_of(&mut oracle, basis[0].clone(), Provenance::IntegralBasis(0)).unwrap();
        assert_eq!(h1.value, 13);
        assert!(reduce_step(&h1, &table, &mut oracle).is_err());
        let mut grown = table.clone();
        grown.adjoin(&h1).unwrap();
        let h4 = value_of(&mut oracle, basis[3].clone(), Provenance::IntegralBasis(3)).unwrap();
        let next = reduce_step(&h4, &grown, &mut oracle).unwrap();
        assert_eq!(next.value, 10);
    }

    #[test]
    fn empty_basis_and_inconsistent_basis() {
        let (sp, mut oracle, basis) = setup();
        let (rep, _) = triangulate(&sp, &[], &mut oracle, TriangulationMode::Fast).unwrap();
        assert_eq!(rep.gamma.gaps(), sp.semigroup().gaps());
        let dup = [basis[0].clone(), basis[0].clone()];
        for mode in [TriangulationMode::Fast, TriangulationMode::Plain] {
            let err = triangulate(&sp, &dup, &mut oracle, mode);
            assert!(matches!(err, Err(Error::InconsistentBasis(_))));
        }
    }
}
