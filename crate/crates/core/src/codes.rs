//! One-point codes `C(m)`: the dual of the evaluation image of `L(mP)`.

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::semigroup::NumericalSemigroup;
use crate::weierstrass::{FunctionTable, RationalFunction};

/// Affine rational points of the curve over an extension of its prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationSet {
    field: FiniteField,
    points: Vec<(Elem, Elem)>,
}

impl EvaluationSet {
    /// All affine points of `curve = 0` over `ext` at which none of the
    /// `avoid` functions has a vanishing denominator.
    pub fn enumerate(
        curve: &BiPoly,
        ext: &FiniteField,
        avoid: &[RationalFunction],
    ) -> Result<Self> {
        let curve = curve.map_field(ext)?;
        let dens: Vec<BiPoly> =
            avoid.iter().map(|f| f.den().map_field(ext)).collect::<Result<_>>()?;
        let mut points = Vec::new();
        for x in ext.elements() {
            let row = curve.eval_x(x);
            for y in ext.elements() {
                if row.eval(y) == 0 && dens.iter().all(|d| d.eval(x, y) != 0) {
                    points.push((x, y));
                }
            }
        }
        Ok(EvaluationSet { field: ext.clone(), points })
    }

    /// Points where every function of `table` can be evaluated.
    pub fn for_table(table: &FunctionTable, ext: &FiniteField) -> Result<Self> {
        let avoid: Vec<RationalFunction> =
            table.apery_functions().iter().map(|h| h.function.clone()).collect();
        Self::enumerate(table.modulus(), ext, &avoid)
    }

    /// Checks that every point lies on the curve.
    pub fn from_points(curve: &BiPoly, ext: &FiniteField, points: Vec<(Elem, Elem)>) -> Result<Self> {
        let curve = curve.map_field(ext)?;
        for &(x, y) in &points {
            if curve.eval(x, y) != 0 {
                return Err(Error::InvalidArgument(format!(
                    "({}, {}) is not on the curve",
                    ext.format(x),
                    ext.format(y)
                )));
            }
        }
        Ok(EvaluationSet { field: ext.clone(), points })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn points(&self) -> &[(Elem, Elem)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct CodeSpec {
    pub field: FiniteField,
    pub m: u64,
    pub n: usize,
    /// Rank of the evaluation matrix.
    pub rank: usize,
    /// `k(m) = n − rank`.
    pub k: usize,
    /// Goppa designed distance `d*(m) = m + 2 − 2g`.
    pub goppa: i64,
    /// `m' = min{r ∈ Γ : r > m}`.
    pub m_prime: u64,
    /// `δ_FR(m')`, a lower bound on the minimum distance.
    pub feng_rao: u64,
    pub improved: bool,
    /// Pole order of the function behind each row.
    pub row_values: Vec<u64>,
    /// Parity-check matrix, rows `f_r(P_1), ..., f_r(P_n)`.
    pub matrix: Vec<Vec<Elem>>,
}

/// Builds the parity-check matrix of `C(m)`. With `improved`, only rows
/// with `r ∈ S_P` (AM power products) are kept.
pub fn build_code(
    table: &FunctionTable,
    points: &EvaluationSet,
    m: u64,
    improved: bool,
) -> Result<CodeSpec> {
    let ext = points.field();
    let gamma = table.semigroup();
    let sp = table.semigroup_at_infinity();
    let mut row_values = Vec::new();
    let mut matrix = Vec::new();
    for r in gamma.elements_up_to(m) {
        let function = if improved {
            if !sp.semigroup().contains(r) {
                continue;
            }
            RationalFunction::polynomial(sp.power_product(r)?)
        } else {
            table.composite(r)?.function
        };
        let function = function.map_field(ext)?;
        let row = points
            .points()
            .iter()
            .map(|&(x, y)| function.eval(x, y))
            .collect::<Result<Vec<_>>>()?;
        row_values.push(r);
        matrix.push(row);
    }
    let n = points.len();
    let rank = rank(ext, &matrix);
    let m_prime = gamma.next_element(m as i64 + 1);
    Ok(CodeSpec {
        field: ext.clone(),
        m,
        n,
        rank,
        k: n - rank,
        goppa: m as i64 + 2 - 2 * gamma.genus() as i64,
        m_prime,
        feng_rao: gamma.feng_rao(m_prime)?,
        improved,
        row_values,
        matrix,
    })
}

/// Row echelon form in place; returns the pivot columns.
fn echelon(field: &FiniteField, rows: &mut [Vec<Elem>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, p);
        let inv = field.inv(rows[r][col]).expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let factor = rows[i][col];
                for j in 0..ncols {
                    let t = field.mul(factor, rows[r][j]);
                    rows[i][j] = field.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(field: &FiniteField, matrix: &[Vec<Elem>]) -> usize {
    let mut rows = matrix.to_vec();
    echelon(field, &mut rows).len()
}

/// Basis of `{y : H y = 0}`, i.e. a generator matrix of `C(m)`.
pub fn dual_basis(field: &FiniteField, matrix: &[Vec<Elem>], n: usize) -> Vec<Vec<Elem>> {
    let mut rows = matrix.to_vec();
    let pivots = echelon(field, &mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(rows[r][fc]);
            }
            v
        })
        .collect()
}

impl CodeSpec {
    pub fn dual_basis(&self) -> Vec<Vec<Elem>> {
        dual_basis(&self.field, &self.matrix, self.n)
    }

    /// Known syndromes `s_r(y) = Σ_k y_k f_r(P_k)` for every row.
    pub fn known_syndromes(&self, y: &[Elem]) -> Result<Vec<Elem>> {
        if y.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: y.len() });
        }
        let f = &self.field;
        Ok(self
            .matrix
            .iter()
            .map(|row| row.iter().zip(y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect())
    }

    pub fn is_codeword(&self, y: &[Elem]) -> Result<bool> {
        Ok(self.known_syndromes(y)?.iter().all(|&s| s == 0))
    }

    /// `s_{a,b}(e) = Σ_k e_k f_a(P_k) f_b(P_k)` over all pairs of rows.
    pub fn bidimensional_syndromes(&self, e: &[Elem]) -> Result<Vec<Vec<Elem>>> {
        if e.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: e.len() });
        }
        let f = &self.field;
        Ok(self
            .matrix
            .iter()
            .map(|ra| {
                self.matrix
                    .iter()
                    .map(|rb| {
                        (0..self.n).fold(0, |acc, k| f.add(acc, f.mul(e[k], f.mul(ra[k], rb[k]))))
                    })
                    .collect()
            })
            .collect())
    }

    /// Exact minimum distance by scanning all codewords; `None` when the
    /// code is too large to scan (`n > 24` or more than 2^22 codewords).
    pub fn min_distance_exhaustive(&self) -> Option<usize> {
        let basis = self.dual_basis();
        let q = self.field.size() as u64;
        let k = basis.len() as u32;
        if self.n > 24 || (k as f64) * (q as f64).log2() > 22.0 {
            return None;
        }
        if k == 0 {
            return Some(self.n + 1);
        }
        let f = &self.field;
        let total = q.pow(k);
        let mut best = usize::MAX;
        for idx in 1..total {
            let mut word = vec![0; self.n];
            let mut rest = idx;
            for b in &basis {
                let c = (rest % q) as Elem;
                rest /= q;
                if c != 0 {
                    for (w, &v) in word.iter_mut().zip(b) {
                        *w = f.add(*w, f.mul(c, v));
                    }
                }
            }
            best = best.min(word.iter().filter(|&&v| v != 0).count());
        }
        Some(best)
    }
}

/// One line of the designed-distance comparison for `m ∈ Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundRow {
    pub m: u64,
    /// `d*(m − 1) = m + 1 − 2g`.
    pub goppa: i64,
    pub feng_rao: u64,
    /// `δ_FR(m) − d*(m − 1)`.
    pub gain: i64,
    /// `⌊(δ_FR(m) − 1)/2⌋`, errors corrected by the code whose first
    /// unknown syndrome sits at `m`.
    pub correctable: u64,
}

/// Goppa versus Feng-Rao for every element of `gamma` in `range`.
pub fn distance_bound_table(
    gamma: &NumericalSemigroup,
    range: std::ops::RangeInclusive<u64>,
) -> Vec<BoundRow> {
    range
        .filter(|&m| gamma.contains(m))
        .map(|m| {
            let fr = gamma.feng_rao(m).expect("element");
            let goppa = gamma.goppa_bound(m);
            BoundRow { m, goppa, feng_rao: fr, gain: fr as i64 - goppa, correctable: fr.saturating_sub(1) / 2 }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx_roots::analyze_curve;
    use crate::branch::parametrize;
    use crate::parse::parse_poly;
    use crate::weierstrass::{parse_integral_basis, triangulate, TriangulationMode};

    fn worked_example(ext_degree: u32) -> (FunctionTable, EvaluationSet) {
        let f = FiniteField::new(2, 1).unwrap();
        let a = analyze_curve(&parse_poly(&f, "Y^8 + Y^2 + X^3").unwrap()).unwrap();
        let mut oracle = parametrize(&a.model, 16).unwrap();
        let basis = parse_integral_basis(
            &f,
            "Y(1+Y^6)/(X+Y^3)\nY(1+Y^6)/((X+Y^3)(Y^2+Y+1))\n(X^2+Y^6)/(Y^2+Y+1)\nY^2(1+Y^3)(Y^2+Y+1)/(X+Y^3)",
        )
        .unwrap();
        let sp = a.semigroup.unwrap();
        let (_, table) = triangulate(&sp, &basis, &mut oracle, TriangulationMode::Fast).unwrap();
        let ext = FiniteField::new(2, ext_degree).unwrap();
        let pts = EvaluationSet::for_table(&table, &ext).unwrap();
        (table, pts)
    }

    #[test]
    fn points_over_gf8() {
        let (_, pts) = worked_example(3);
        assert_eq!(pts.len(), 6);
    }

    #[test]
    fn riemann_roch_and_syndromes() {
        let (table, pts) = worked_example(3);
        let n = pts.len();
        let c0 = build_code(&table, &pts, 0, false).unwrap();
        assert_eq!(c0.k, n - 1);
        assert!(c0.matrix[0].iter().all(|&v| v == 1));
        let c = build_code(&table, &pts, 5, false).unwrap();
        assert_eq!(c.rank, 3);
        assert_eq!(c.k, n - 5 + 3 - 1);
        for y in c.dual_basis() {
            assert!(c.is_codeword(&y).unwrap());
        }
        assert!(c.known_syndromes(&[0; 3]).is_err());
        assert!(c.known_syndromes(&vec![0; n]).unwrap().iter().all(|&s| s == 0));
        let d = c.min_distance_exhaustive().unwrap();
        assert!(d as u64 >= c.feng_rao);
        assert!(d as i64 >= c.goppa);
    }

    #[test]
    fn improved_code_is_not_larger() {
        let (table, pts) = worked_example(3);
        for m in [3, 4, 5] {
            let std = build_code(&table, &pts, m, false).unwrap();
            let imp = build_code(&table, &pts, m, true).unwrap();
            assert!(imp.row_values.len() <= std.row_values.len());
            assert!(imp.k >= std.k);
        }
    }

    #[test]
    fn bound_table() {
        let gamma = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        let rows = distance_bound_table(&gamma, 0..=12);
        assert!(rows.iter().all(|r| r.gain >= 0));
        let g = gamma.genus();
        assert!(rows.iter().filter(|r| r.m >= 4 * g - 1).all(|r| r.gain == 0));
    }
}
