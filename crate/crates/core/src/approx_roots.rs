//! Approximate roots, the Abhyankar-Moh sequence and the one-branch test.

use std::fmt;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::resultant::resultant_degree;
use crate::semigroup::{gcd, in_generated, NumericalSemigroup, TelescopicStructure};

/// A curve equation prepared for the approximate-root algorithm: monic in Y
/// with `deg_Y F` prime to the characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneModel {
    equation: BiPoly,
    original: BiPoly,
    substitution: Option<u32>,
}

impl PlaneModel {
    pub fn field(&self) -> &FiniteField {
        self.equation.field()
    }

    /// The normalized equation `F`.
    pub fn equation(&self) -> &BiPoly {
        &self.equation
    }

    /// The equation as supplied, before any change of variables.
    pub fn original(&self) -> &BiPoly {
        &self.original
    }

    /// `m = deg_Y F`.
    pub fn m(&self) -> u32 {
        self.equation.deg_y().unwrap_or(0)
    }

    /// `n = deg_X F`.
    pub fn n(&self) -> u32 {
        self.equation.deg_x().unwrap_or(0)
    }

    /// `e_P = m − n`.
    pub fn multiplicity_at_infinity(&self) -> i64 {
        self.m() as i64 - self.n() as i64
    }

    /// The `k` of the applied change `X_old = X + Y^k`, if any.
    pub fn substitution(&self) -> Option<u32> {
        self.substitution
    }

    /// Rewrites a polynomial given in the original coordinates.
    pub fn from_original(&self, g: &BiPoly) -> BiPoly {
        match self.substitution {
            Some(k) => g.substitute_x(1, k),
            None => g.clone(),
        }
    }

    /// Rewrites a polynomial in model coordinates back to the original ones.
    pub fn to_original(&self, g: &BiPoly) -> BiPoly {
        let f = self.field();
        match self.substitution {
            Some(k) => g.substitute_x(f.neg(1), k),
            None => g.clone(),
        }
    }
}

fn make_monic(f: &BiPoly) -> Result<BiPoly> {
    let lc = f.lc_y();
    if f.deg_y().unwrap_or(0) == 0 || !lc.is_constant() {
        return Err(Error::NotMonic);
    }
    Ok(f.scale(f.field().inv(lc.coeff(0))?))
}

/// Ensures the characteristic does not divide `deg_Y F`, applying
/// `X <- X + Y^k` with the least admissible `k` when needed.
pub fn normalize_degree(f: &BiPoly) -> Result<PlaneModel> {
    let field = f.field();
    let p = field.characteristic();
    let eq = make_monic(f)?;
    let m = eq.deg_y().expect("positive degree");
    let n = eq.deg_x().unwrap_or(0);
    if m % p != 0 {
        return Ok(PlaneModel { equation: eq.clone(), original: f.clone(), substitution: None });
    }
    if n % p == 0 {
        return Err(Error::HypothesisH { p, m, n });
    }
    let mut k = m / n + 1;
    // a term X^a Y^b may outgrow X^n after the change, so try successive k
    for _ in 0..64 {
        if k % p != 0 && n * k > m {
            let moved = eq.substitute_x(1, k);
            if let Ok(monic) = make_monic(&moved) {
                if monic.deg_y().unwrap() % p != 0 {
                    return Ok(PlaneModel {
                        equation: monic,
                        original: f.clone(),
                        substitution: Some(k),
                    });
                }
            }
        }
        k += 1;
    }
    Err(Error::HypothesisH { p, m, n })
}

/// The approximate `d`-th root: the monic `G` of Y-degree `m/d` with
/// `deg_Y(F − G^d) < m − m/d`.
pub fn approximate_root(f: &BiPoly, d: u32) -> Result<BiPoly> {
    let field = f.field();
    if !f.is_monic_in_y() {
        return Err(Error::NotMonic);
    }
    let m = f.deg_y().expect("monic");
    if d == 0 || m % d != 0 {
        return Err(Error::ApproximateRoot(format!("{d} does not divide deg_Y F = {m}")));
    }
    let d_elem = field.from_int(d as i64);
    if d_elem == 0 {
        return Err(Error::ApproximateRoot(format!(
            "{d} is not a unit in characteristic {}",
            field.characteristic()
        )));
    }
    let inv_d = field.inv(d_elem)?;
    let e = m / d;
    let mut g = BiPoly::monomial(field, 1, 0, e);
    loop {
        let r = f - &g.pow(d as u64);
        let Some(top) = r.deg_y() else { return Ok(g) };
        if top < m - e {
            return Ok(g);
        }
        // cancel the coefficient of Y^{m-k}
        let k = m - top;
        let c = r.lc_y().scale(inv_d);
        g = &g + &BiPoly::from_x_poly(&c).mul_monomial(1, 0, e - k);
    }
}

/// Output of the approximate-root algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AMSequence {
    /// Number of characteristic approximate roots.
    pub h: usize,
    /// `δ_0, ..., δ_h`.
    pub delta: Vec<u64>,
    /// `d_1, ..., d_{h+1}`.
    pub d: Vec<u64>,
    /// `n_1, ..., n_h`.
    pub nseq: Vec<u64>,
    /// `F_0 = X, F_1 = Y, F_i = app(d_i, F)`.
    pub roots: Vec<BiPoly>,
}

pub fn am_sequence(model: &PlaneModel) -> Result<AMSequence> {
    let f = model.equation();
    let field = f.field();
    let m = model.m();
    if m % field.characteristic() == 0 {
        return Err(Error::HypothesisH { p: field.characteristic(), m, n: model.n() });
    }
    if f.y_coeffs()[0].is_zero() {
        return Err(Error::YDividesF);
    }
    let mut delta = vec![m as u64];
    let mut d = vec![m as u64];
    let mut roots = vec![BiPoly::x(field), BiPoly::y(field)];
    loop {
        let i = d.len();
        let root = &roots[i];
        // δ = −∞ leaves the gcd unchanged and ends the loop
        let next = match resultant_degree(f, root)? {
            Some(v) => {
                delta.push(v as u64);
                gcd(d[i - 1], v as u64)
            }
            None => d[i - 1],
        };
        if next == d[i - 1] {
            let h = i - 1;
            delta.truncate(h + 1);
            roots.truncate(h + 1);
            let nseq = d.windows(2).map(|w| w[0] / w[1]).collect();
            return Ok(AMSequence { h, delta, d, nseq, roots });
        }
        d.push(next);
        roots.push(approximate_root(f, next as u32)?);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchVerdict {
    OneBranch,
    NotOneBranch(String),
}

impl BranchVerdict {
    pub fn is_one_branch(&self) -> bool {
        matches!(self, BranchVerdict::OneBranch)
    }
}

impl fmt::Display for BranchVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchVerdict::OneBranch => f.write_str("yes"),
            BranchVerdict::NotOneBranch(r) => write!(f, "no ({r})"),
        }
    }
}

/// The three Abhyankar-Moh properties, checked independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AMProperties {
    /// `d_{h+1} = 1` and `n_i > 1` for `i >= 2`.
    pub gcd_chain: bool,
    /// `n_i δ_i ∈ ⟨δ_0, ..., δ_{i-1}⟩`.
    pub membership: bool,
    /// `n_i δ_i > δ_{i+1}`.
    pub decreasing: bool,
}

pub fn am_properties(seq: &AMSequence) -> AMProperties {
    let h = seq.h;
    let gcd_chain = seq.d[h] == 1 && seq.nseq.iter().skip(1).all(|&n| n > 1);
    let membership =
        (1..=h).all(|i| in_generated(seq.nseq[i - 1] * seq.delta[i], &seq.delta[..i]));
    let decreasing = (1..h).all(|i| seq.nseq[i - 1] * seq.delta[i] > seq.delta[i + 1]);
    AMProperties { gcd_chain, membership, decreasing }
}

/// One rational branch at infinity iff `d_{h+1} = 1`, `δ_i d_i` strictly
/// decreases and `n_i δ_i ∈ ⟨δ_0, ..., δ_{i-1}⟩`.
pub fn one_branch_criterion(seq: &AMSequence) -> BranchVerdict {
    let h = seq.h;
    if seq.d[h] != 1 {
        return BranchVerdict::NotOneBranch(format!("d_{{h+1}} = {} ≠ 1", seq.d[h]));
    }
    if h <= 1 {
        return BranchVerdict::OneBranch;
    }
    for i in 1..h {
        let (a, b) = (seq.delta[i] * seq.d[i - 1], seq.delta[i + 1] * seq.d[i]);
        if a <= b {
            return BranchVerdict::NotOneBranch(format!(
                "δ_{i} d_{i} = {a} is not greater than δ_{} d_{} = {b}",
                i + 1,
                i + 1
            ));
        }
    }
    for i in 1..=h {
        let v = seq.nseq[i - 1] * seq.delta[i];
        if !in_generated(v, &seq.delta[..i]) {
            return BranchVerdict::NotOneBranch(format!(
                "n_{i} δ_{i} = {v} is not in the semigroup generated by {:?}",
                &seq.delta[..i]
            ));
        }
    }
    BranchVerdict::OneBranch
}

/// The semigroup of polynomial pole orders at the branch, with its
/// distinguished generators and the functions attaining them.
#[derive(Debug, Clone)]
pub struct SemigroupAtInfinity {
    telescopic: TelescopicStructure,
    functions: Vec<BiPoly>,
}

impl SemigroupAtInfinity {
    pub fn generators(&self) -> &[u64] {
        self.telescopic.generators()
    }

    pub fn telescopic(&self) -> &TelescopicStructure {
        &self.telescopic
    }

    /// `F_0, ..., F_h` with `−υ(F_i) = δ_i`.
    pub fn functions(&self) -> &[BiPoly] {
        &self.functions
    }

    /// The semigroup with pivot `δ_0`.
    pub fn semigroup(&self) -> NumericalSemigroup {
        self.telescopic.semigroup()
    }

    /// `F_0^{λ_0} ··· F_h^{λ_h}` for the telescopic representation of `r`.
    pub fn power_product(&self, r: u64) -> Result<BiPoly> {
        let lambda = self.telescopic.repr(r)?;
        let field = self.functions[0].field();
        let mut out = BiPoly::one(field);
        for (f, &l) in self.functions.iter().zip(&lambda) {
            if l > 0 {
                out = &out * &f.pow(l);
            }
        }
        Ok(out)
    }
}

pub fn semigroup_at_infinity(seq: &AMSequence) -> Result<SemigroupAtInfinity> {
    if let BranchVerdict::NotOneBranch(reason) = one_branch_criterion(seq) {
        return Err(Error::NotOneBranch(reason));
    }
    let telescopic = TelescopicStructure::new(&seq.delta)?;
    let props = am_properties(seq);
    if !(props.gcd_chain && props.membership && props.decreasing) {
        return Err(Error::Internal(format!("AM properties fail after criterion: {props:?}")));
    }
    Ok(SemigroupAtInfinity { telescopic, functions: seq.roots.clone() })
}

/// Everything `curve analyze` reports.
#[derive(Debug, Clone)]
pub struct CurveAnalysis {
    pub model: PlaneModel,
    pub sequence: AMSequence,
    pub verdict: BranchVerdict,
    pub semigroup: Option<SemigroupAtInfinity>,
}

pub fn analyze_curve(f: &BiPoly) -> Result<CurveAnalysis> {
    let model = normalize_degree(f)?;
    let sequence = am_sequence(&model)?;
    let verdict = one_branch_criterion(&sequence);
    let semigroup =
        if verdict.is_one_branch() { Some(semigroup_at_infinity(&sequence)?) } else { None };
    Ok(CurveAnalysis { model, sequence, verdict, semigroup })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn gf(p: u32) -> FiniteField {
        FiniteField::new(p, 1).unwrap()
    }

    #[test]
    fn normalization_of_worked_example() {
        let f = gf(2);
        let model = normalize_degree(&parse_poly(&f, "Y^8 + Y^2 + X^3").unwrap()).unwrap();
        assert_eq!(model.substitution(), Some(3));
        assert_eq!(
            model.equation(),
            &parse_poly(&f, "Y^9 + Y^8 + X*Y^6 + X^2*Y^3 + Y^2 + X^3").unwrap()
        );
        assert_eq!(model.to_original(model.equation()), *model.original());
    }

    #[test]
    fn normalization_identity_and_failure() {
        let f5 = gf(5);
        let c = parse_poly(&f5, "Y^3 + X^2").unwrap();
        assert_eq!(normalize_degree(&c).unwrap().substitution(), None);
        let f2 = gf(2);
        let bad = parse_poly(&f2, "Y^8 + Y + X^10 + X^3").unwrap();
        assert_eq!(normalize_degree(&bad), Err(Error::HypothesisH { p: 2, m: 8, n: 10 }));
        let nonmonic = parse_poly(&f5, "X*Y^2 + 1").unwrap();
        assert_eq!(normalize_degree(&nonmonic), Err(Error::NotMonic));
    }

    #[test]
    fn approximate_roots() {
        let f2 = gf(2);
        let model = normalize_degree(&parse_poly(&f2, "Y^8 + Y^2 + X^3").unwrap()).unwrap();
        let f = model.equation();
        assert_eq!(approximate_root(f, 1).unwrap(), *f);
        assert_eq!(
            approximate_root(f, 3).unwrap(),
            parse_poly(&f2, "Y^3 + Y^2 + Y + X + 1").unwrap()
        );
        assert!(approximate_root(f, 2).is_err());
        assert!(approximate_root(&parse_poly(&f2, "Y^2 + X").unwrap(), 2).is_err());
        let f7 = gf(7);
        let q = parse_poly(&f7, "Y^2 + 3Y + X").unwrap();
        assert_eq!(approximate_root(&q, 2).unwrap(), parse_poly(&f7, "Y + 5").unwrap());
    }

    #[test]
    fn sequence_of_worked_example() {
        let f2 = gf(2);
        let a = analyze_curve(&parse_poly(&f2, "Y^8 + Y^2 + X^3").unwrap()).unwrap();
        assert_eq!(a.sequence.h, 2);
        assert_eq!(a.sequence.delta, vec![9, 3, 8]);
        assert_eq!(a.sequence.d, vec![9, 3, 1]);
        assert_eq!(a.sequence.nseq, vec![3, 3]);
        assert!(a.verdict.is_one_branch());
        let sp = a.semigroup.unwrap();
        assert_eq!(sp.generators(), &[9, 3, 8]);
        assert_eq!(sp.power_product(12).unwrap(), parse_poly(&f2, "X*Y").unwrap());
    }

    #[test]
    fn cusp_and_line() {
        let f5 = gf(5);
        let a = analyze_curve(&parse_poly(&f5, "Y^2 + X^3").unwrap()).unwrap();
        assert_eq!((a.sequence.h, a.sequence.delta.clone()), (1, vec![2, 3]));
        assert_eq!(a.semigroup.unwrap().generators(), &[2, 3]);
        let line = analyze_curve(&parse_poly(&f5, "Y - X").unwrap()).unwrap();
        assert_eq!(line.sequence.h, 0);
        assert_eq!(line.sequence.d, vec![1]);
        assert_eq!(line.semigroup.unwrap().semigroup().genus(), 0);
    }

    #[test]
    fn two_branches_rejected() {
        let f7 = gf(7);
        let a = analyze_curve(&parse_poly(&f7, "(Y - X)(Y - 2X) + 1").unwrap()).unwrap();
        assert_eq!(a.sequence.d, vec![2]);
        assert!(!a.verdict.is_one_branch());
        assert!(semigroup_at_infinity(&a.sequence).is_err());
    }

    #[test]
    fn y_divides_f_rejected() {
        let f5 = gf(5);
        let model = normalize_degree(&parse_poly(&f5, "Y^2 + X*Y").unwrap()).unwrap();
        assert_eq!(am_sequence(&model), Err(Error::YDividesF));
    }
}
