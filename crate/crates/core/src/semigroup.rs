//! Numerical semigroups described by Apéry sets.
//!
//! A semigroup `S` is stored as its Apéry set `a_0, ..., a_{e-1}` with respect
//! to a pivot `e ∈ S \ {0}`: `a_i` is the least element of `S` congruent to `i`
//! modulo `e`. Every element then has unique coordinates `m = a_i + l·e`, and
//! membership, ν, the Feng-Rao distance and generator adjunction all reduce to
//! arithmetic on the array.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Position of an element: `m = a_i + l·e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AperyCoordinates {
    pub i: usize,
    pub l: u64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    pivot: u64,
    apery: Vec<u64>,
    genus: u64,
    conductor: u64,
    multiplicity: u64,
    max_index: usize,
}

/// Shortest paths over residue classes mod `e`, edges weighted by generators.
fn apery_by_shortest_paths(gens: &[u64], e: u64) -> Vec<u64> {
    let e_us = e as usize;
    let mut dist = vec![u64::MAX; e_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nr = ((r as u64 + g) % e) as usize;
            let nd = d + g;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

impl NumericalSemigroup {
    /// Semigroup generated by `gens`, pivot = least nonzero generator.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let gens = Self::clean_generators(gens)?;
        let pivot = gens[0];
        Ok(Self::from_apery_unchecked(gens.clone(), pivot, apery_by_shortest_paths(&gens, pivot)))
    }

    /// Semigroup generated by `gens` with the Apéry set taken w.r.t. `pivot`.
    pub fn with_pivot(gens: &[u64], pivot: u64) -> Result<Self> {
        let base = Self::from_generators(gens)?;
        if pivot == 0 || !base.contains(pivot) {
            return Err(Error::InvalidArgument(format!(
                "pivot {pivot} is not a nonzero element of the semigroup"
            )));
        }
        Ok(base.repivot(pivot))
    }

    /// Same semigroup, Apéry set recomputed w.r.t. another nonzero element.
    pub fn repivot(&self, pivot: u64) -> Self {
        assert!(pivot > 0 && self.contains(pivot));
        let gens = self.generators.clone();
        Self::from_apery_unchecked(gens.clone(), pivot, apery_by_shortest_paths(&gens, pivot))
    }

    fn clean_generators(gens: &[u64]) -> Result<Vec<u64>> {
        let mut g: Vec<u64> = gens.iter().copied().filter(|&x| x > 0).collect();
        g.sort_unstable();
        g.dedup();
        let d = g.iter().fold(0, |acc, &x| gcd(acc, x));
        if d != 1 {
            return Err(Error::NotNumericalSemigroup(d));
        }
        Ok(g)
    }

    fn from_apery_unchecked(generators: Vec<u64>, pivot: u64, apery: Vec<u64>) -> Self {
        let e = pivot;
        let genus = apery.iter().enumerate().map(|(i, &a)| (a - i as u64) / e).sum();
        let (max_index, &a_max) = apery
            .iter()
            .enumerate()
            .max_by_key(|&(i, &a)| (a, Reverse(i)))
            .expect("pivot >= 1");
        let conductor = a_max + 1 - e;
        let multiplicity = apery.iter().skip(1).copied().chain([e]).min().unwrap();
        NumericalSemigroup { generators, pivot, apery, genus, conductor, multiplicity, max_index }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn pivot(&self) -> u64 {
        self.pivot
    }

    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Last gap `c - 1`; −1 for ℕ.
    pub fn last_gap(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Index `N` with `a_N = max(apery)`.
    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn contains(&self, m: u64) -> bool {
        m >= self.apery[(m % self.pivot) as usize]
    }

    pub fn contains_i64(&self, m: i64) -> bool {
        m >= 0 && self.contains(m as u64)
    }

    pub fn coordinates(&self, m: u64) -> Option<AperyCoordinates> {
        let i = (m % self.pivot) as usize;
        let a = self.apery[i];
        (m >= a).then(|| AperyCoordinates { i, l: (m - a) / self.pivot })
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&m| !self.contains(m)).collect()
    }

    /// Elements of `S` in `[0, bound]`.
    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&m| self.contains(m)).collect()
    }

    /// Least element of `S` that is `>= m` (`m` may be negative).
    pub fn next_element(&self, m: i64) -> u64 {
        let mut r = m.max(0) as u64;
        while !self.contains(r) {
            r += 1;
        }
        r
    }

    /// Apéry relation `α_{i,j}`: `a_i + a_j = a_{i+j} + α_{i,j}·e`.
    pub fn apery_relation(&self, i: usize, j: usize) -> u64 {
        let e = self.pivot as usize;
        let (i, j) = (i % e, j % e);
        (self.apery[i] + self.apery[j] - self.apery[(i + j) % e]) / self.pivot
    }

    /// `B_i^{(h)} = #{k ∈ Z_e : α_{k, i-k} <= h}`.
    pub fn b_count(&self, i: usize, h: u64) -> u64 {
        let e = self.pivot as usize;
        (0..e).filter(|&k| self.apery_relation(k, (i + e - k) % e) <= h).count() as u64
    }

    /// ν(m) = #{(a, b) ∈ S² : a + b = m}, as `B_i^{(0)} + ... + B_i^{(l)}`.
    pub fn nu(&self, m: u64) -> Result<u64> {
        let c = self.coordinates(m).ok_or(Error::NotInSemigroup(m))?;
        let e = self.pivot as usize;
        // each k with α_{k,i-k} = α <= l is counted in B^{(α)}, ..., B^{(l)}
        Ok((0..e)
            .map(|k| self.apery_relation(k, (c.i + e - k) % e))
            .filter(|&alpha| alpha <= c.l)
            .map(|alpha| c.l - alpha + 1)
            .sum())
    }

    /// ν by direct pair enumeration.
    pub fn nu_bruteforce(&self, m: u64) -> Result<u64> {
        if !self.contains(m) {
            return Err(Error::NotInSemigroup(m));
        }
        Ok((0..=m).filter(|&a| self.contains(a) && self.contains(m - a)).count() as u64)
    }

    /// ν extended by zero on gaps and negative integers.
    pub fn nu_or_zero(&self, m: i64) -> u64 {
        if self.contains_i64(m) {
            self.nu(m as u64).expect("element")
        } else {
            0
        }
    }

    /// D(m): ordered pairs of gaps summing to `m`.
    pub fn gap_pair_count(&self, m: u64) -> u64 {
        (0..=m).filter(|&x| !self.contains(x) && !self.contains(m - x)).count() as u64
    }

    /// Feng-Rao distance via the minimum over residue classes of ν(m_j),
    /// where `m_j` is the least element of class `j` that is `>= m`.
    pub fn feng_rao(&self, m: u64) -> Result<u64> {
        if !self.contains(m) {
            return Err(Error::NotInSemigroup(m));
        }
        let e = self.pivot;
        let mut best = u64::MAX;
        for &a_j in &self.apery {
            let t_j = if m > a_j { (m - a_j).div_ceil(e) } else { 0 };
            best = best.min(self.nu(a_j + t_j * e)?);
        }
        Ok(best)
    }

    /// Feng-Rao distance by scanning ν upward from `m` until ν(r) = r + 1 − 2g
    /// with D(r) = 0, beyond which ν only grows past the running minimum.
    pub fn feng_rao_bruteforce(&self, m: u64) -> Result<u64> {
        if !self.contains(m) {
            return Err(Error::NotInSemigroup(m));
        }
        let g2 = 2 * self.genus as i64;
        let mut best = u64::MAX;
        let mut r = m;
        loop {
            if self.contains(r) {
                let v = self.nu_bruteforce(r)?;
                best = best.min(v);
                if v as i64 == r as i64 + 1 - g2 && self.gap_pair_count(r) == 0 {
                    return Ok(best);
                }
            }
            r += 1;
        }
    }

    /// Goppa bound `d*(m - 1) = m + 1 − 2g` (may be negative).
    pub fn goppa_bound(&self, m: u64) -> i64 {
        m as i64 + 1 - 2 * self.genus as i64
    }

    /// `min{r ∈ S : r >= m + 1 − 2g}`, the right side of the minimum formula.
    pub fn min_formula_value(&self, m: u64) -> u64 {
        self.next_element(self.goppa_bound(m))
    }

    pub fn min_formula_holds(&self, m: u64) -> Result<bool> {
        Ok(self.feng_rao(m)? == self.min_formula_value(m))
    }

    /// Least element `t` such that the minimum formula holds for every
    /// element `m >= t`, determined with the brute-force Feng-Rao oracle.
    pub fn min_formula_threshold(&self) -> u64 {
        let top = 4 * self.genus + 2 * self.pivot;
        let mut threshold = 0;
        for m in self.elements_up_to(top) {
            let lhs = self.feng_rao_bruteforce(m).expect("element");
            if lhs != self.min_formula_value(m) {
                threshold = m + 1;
            }
        }
        self.next_element(threshold as i64)
    }

    pub fn is_symmetric(&self) -> bool {
        let e = self.pivot as usize;
        let n = self.max_index;
        let top = self.apery[n];
        (0..e).all(|i| self.apery[i] + self.apery[(n + e - i) % e] == top)
    }

    /// Feng-Rao distance for symmetric `S` and `m ∈ [c, 2c − 2]` using
    /// ν(m + t) = (n + t) + ν(q − t), where `n = m − c + 1` and `q = c − 1 − n`.
    pub fn feng_rao_symmetric(&self, m: u64) -> Result<u64> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let c = self.conductor;
        if c == 0 || m < c || m > 2 * c - 2 {
            return Err(Error::OutsideSymmetricInterval(m, c, (2 * c).saturating_sub(2)));
        }
        let n = m - c + 1;
        if self.contains(n) {
            return Ok(n);
        }
        let q = (c - 1 - n) as i64;
        let n_next = self.next_element(n as i64);
        let delta = n_next - n;
        let mut best = n_next;
        for t in 0..delta.saturating_sub(2) {
            best = best.min(n + t + self.nu_or_zero(q - t as i64));
        }
        Ok(best)
    }

    /// δ(q): distance from `q ∈ S` down to the nearest gap, i.e. the least δ
    /// with `q − δ < a_{i−δ}`.
    pub fn delta_gap(&self, q: u64) -> Result<u64> {
        let c = self.coordinates(q).ok_or(Error::NotInSemigroup(q))?;
        let e = self.pivot as i64;
        let mut delta: i64 = 1;
        loop {
            let idx = (c.i as i64 - delta).rem_euclid(e) as usize;
            if (q as i64 - delta) < self.apery[idx] as i64 {
                return Ok(delta as u64);
            }
            delta += 1;
        }
    }

    /// `q_0` (least element with ν(q) < δ(q), else `c − 1`) and `m_0 = 4g − 2 − q_0`.
    pub fn q0_m0(&self) -> Result<Q0Report> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let c = self.conductor as i64;
        let mut q0 = c - 1;
        for q in 0..self.conductor {
            if self.contains(q) && self.nu(q)? < self.delta_gap(q)? {
                q0 = q as i64;
                break;
            }
        }
        let m0 = 4 * self.genus as i64 - 2 - q0;
        Ok(Q0Report { q0, m0, above_bound: q0 >= self.multiplicity as i64 + 2 })
    }

    /// Adjoins `b` as a generator.
    pub fn adjoin(&self, b: u64) -> NumericalSemigroup {
        self.adjoin_tracked(b).0
    }

    /// Adjoins `b`, also reporting for every Apéry slot that changed the pair
    /// `(j, λ)` with new `a_i = a_j + λ·b` (old array).
    pub fn adjoin_tracked(&self, b: u64) -> (NumericalSemigroup, Vec<Option<(usize, u64)>>) {
        let e = self.pivot as usize;
        let mut provenance = vec![None; e];
        if self.contains(b) {
            return (self.clone(), provenance);
        }
        let mut apery = self.apery.clone();
        for (j, &a_j) in self.apery.iter().enumerate() {
            for lambda in 0..e as u64 {
                let cand = a_j + lambda * b;
                let i = (cand % self.pivot) as usize;
                if cand < apery[i] {
                    apery[i] = cand;
                    provenance[i] = Some((j, lambda));
                }
            }
        }
        let mut gens = self.generators.clone();
        gens.push(b);
        gens.sort_unstable();
        gens.dedup();
        (Self::from_apery_unchecked(gens, self.pivot, apery), provenance)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} apery={:?} (e={})", self.apery, self.pivot)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|x| x.to_string()).collect();
        write!(f, "<{}>", g.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Q0Report {
    pub q0: i64,
    pub m0: i64,
    /// Whether `q_0 >= e_0 + 2`.
    pub above_bound: bool,
}

/// Generators `δ_0, ..., δ_h` with `d_{i} = gcd(δ_0, ..., δ_{i-1})`,
/// `n_i = d_i / d_{i+1}`, `d_{h+1} = 1` and `n_i δ_i ∈ ⟨δ_0, ..., δ_{i-1}⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopicStructure {
    generators: Vec<u64>,
    /// `d_1, ..., d_{h+1}`.
    d: Vec<u64>,
    /// `n_1, ..., n_h`.
    n: Vec<u64>,
}

/// Is `x` in the (not necessarily numerical) semigroup generated by `gens`?
pub fn in_generated(x: u64, gens: &[u64]) -> bool {
    let gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
    if x == 0 {
        return true;
    }
    let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
    if d == 0 || x % d != 0 {
        return false;
    }
    let reduced: Vec<u64> = gens.iter().map(|g| g / d).collect();
    NumericalSemigroup::from_generators(&reduced)
        .expect("gcd is one after reduction")
        .contains(x / d)
}

impl TelescopicStructure {
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::InvalidArgument("telescopic generators must be positive".into()));
        }
        let mut d = vec![generators[0]];
        for &g in &generators[1..] {
            d.push(gcd(*d.last().unwrap(), g));
        }
        if *d.last().unwrap() != 1 {
            return Err(Error::NotNumericalSemigroup(*d.last().unwrap()));
        }
        let n: Vec<u64> = d.windows(2).map(|w| w[0] / w[1]).collect();
        for i in 1..generators.len() {
            if !in_generated(n[i - 1] * generators[i], &generators[..i]) {
                return Err(Error::InvalidArgument(format!(
                    "n_{i} δ_{i} = {} is not in the semigroup generated by the previous generators",
                    n[i - 1] * generators[i]
                )));
            }
        }
        Ok(TelescopicStructure { generators: generators.to_vec(), d, n })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn h(&self) -> usize {
        self.generators.len() - 1
    }

    /// `d_1, ..., d_{h+1}`.
    pub fn d(&self) -> &[u64] {
        &self.d
    }

    /// `n_1, ..., n_h`.
    pub fn n(&self) -> &[u64] {
        &self.n
    }

    /// Unique `(λ_0, ..., λ_h)` with `m = Σ λ_k δ_k`, `λ_0 >= 0`, `0 <= λ_k < n_k`.
    pub fn repr(&self, m: u64) -> Result<Vec<u64>> {
        let h = self.h();
        let mut lambda = vec![0u64; h + 1];
        let mut r = m as i128;
        for k in (1..=h).rev() {
            let dk1 = self.d[k] as i128;
            let nk = self.n[k - 1] as i128;
            let step = self.generators[k] as i128 / dk1;
            // r is divisible by d_{k+1}; solve λ·step ≡ r/d_{k+1} (mod n_k)
            let target = (r / dk1).rem_euclid(nk);
            let inv = mod_inverse(step.rem_euclid(nk), nk);
            let l = (target * inv).rem_euclid(nk);
            lambda[k] = l as u64;
            r -= l * self.generators[k] as i128;
        }
        let d0 = self.generators[0] as i128;
        if r < 0 || r % d0 != 0 {
            return Err(Error::NotInSemigroup(m));
        }
        lambda[0] = (r / d0) as u64;
        Ok(lambda)
    }

    /// Apéry set w.r.t. `δ_0`, indexed by residue class.
    pub fn apery(&self) -> Vec<u64> {
        let e = self.generators[0];
        let mut out = vec![u64::MAX; e as usize];
        let mut stack = vec![(1usize, 0u64)];
        while let Some((k, acc)) = stack.pop() {
            if k > self.h() {
                out[(acc % e) as usize] = acc;
                continue;
            }
            for l in 0..self.n[k - 1] {
                stack.push((k + 1, acc + l * self.generators[k]));
            }
        }
        out
    }

    /// The semigroup with pivot `δ_0`, built from the telescopic Apéry set.
    pub fn semigroup(&self) -> NumericalSemigroup {
        let mut gens = self.generators.clone();
        gens.sort_unstable();
        gens.dedup();
        NumericalSemigroup::from_apery_unchecked(gens, self.generators[0], self.apery())
    }
}

fn mod_inverse(a: i128, n: i128) -> i128 {
    if n == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a, n);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn naturals() {
        let s = sg(&[1]);
        assert_eq!((s.genus(), s.conductor(), s.apery()), (0, 0, &[0u64][..]));
        assert_eq!(s.last_gap(), -1);
        assert!(s.is_symmetric());
        assert_eq!(s.nu_bruteforce(7).unwrap(), 8);
        assert_eq!(s.feng_rao_bruteforce(7).unwrap(), 8);
        assert_eq!(s.gap_pair_count(9), 0);
    }

    #[test]
    fn gcd_not_one_rejected() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotNumericalSemigroup(2))
        );
    }

    #[test]
    fn apery_with_pivot_nine() {
        let s = NumericalSemigroup::with_pivot(&[9, 3, 8], 9).unwrap();
        assert_eq!(s.apery(), &[0, 19, 11, 3, 22, 14, 6, 16, 8]);
        assert!(NumericalSemigroup::with_pivot(&[9, 3, 8], 5).is_err());
    }

    #[test]
    fn conductor_six_ten_fifteen() {
        assert_eq!(sg(&[6, 10, 15]).conductor(), 30);
    }

    #[test]
    fn relations() {
        let s = sg(&[3, 8]);
        assert_eq!(s.apery(), &[0, 16, 8]);
        assert_eq!(s.apery_relation(1, 1), 8);
        for j in 0..3 {
            assert_eq!(s.apery_relation(0, j), 0);
        }
        let sym = sg(&[6, 10, 15]);
        let n = sym.max_index();
        for k in 0..6 {
            assert_eq!(sym.apery_relation(k, (n + 6 - k) % 6), 0);
        }
    }

    #[test]
    fn nu_examples() {
        let s = sg(&[3, 8]);
        assert_eq!(s.nu(0).unwrap(), 1);
        assert_eq!(s.nu(16).unwrap(), 3);
        assert_eq!(s.nu_bruteforce(16).unwrap(), 3);
        assert_eq!(s.nu(5), Err(Error::NotInSemigroup(5)));
        assert_eq!(s.gap_pair_count(14), 5);
        assert_eq!(s.gaps(), vec![1, 2, 4, 5, 7, 10, 13]);
    }

    #[test]
    fn symmetric_examples() {
        assert!(sg(&[6, 10, 15]).is_symmetric());
        let s = sg(&[3, 5, 7]);
        assert!(!s.is_symmetric());
        assert_eq!((s.conductor(), s.genus()), (5, 3));
        assert_eq!(s.feng_rao_symmetric(6), Err(Error::NotSymmetric));
    }

    #[test]
    fn delta_gap_basics() {
        let s = sg(&[6, 10, 15]);
        assert_eq!(s.delta_gap(6).unwrap(), 1);
        assert_eq!(s.delta_gap(s.conductor()).unwrap(), 1);
        assert_eq!(s.delta_gap(0).unwrap(), 1);
        assert_eq!(s.delta_gap(12).unwrap(), 1);
        assert_eq!(s.delta_gap(31).unwrap(), 2);
    }

    #[test]
    fn q0_small_gap_family() {
        // gaps 1..g-1 and 2g-1: generated by g, ..., 2g-2 and 2g
        for g in 3..8u64 {
            let gens: Vec<u64> = (g..=2 * g - 2).chain([2 * g]).collect();
            let s = sg(&gens);
            let mut expected: Vec<u64> = (1..g).collect();
            expected.push(2 * g - 1);
            assert_eq!(s.gaps(), expected);
            let r = s.q0_m0().unwrap();
            assert_eq!(r.q0, s.multiplicity() as i64 + 2);
        }
    }

    #[test]
    fn telescopic_repr_and_apery() {
        let t = TelescopicStructure::new(&[9, 3, 8]).unwrap();
        assert_eq!(t.d(), &[9, 3, 1]);
        assert_eq!(t.n(), &[3, 3]);
        assert_eq!(t.repr(20).unwrap(), vec![1, 1, 1]);
        assert_eq!(t.repr(0).unwrap(), vec![0, 0, 0]);
        assert_eq!(t.repr(8).unwrap(), vec![0, 0, 1]);
        assert_eq!(t.repr(12).unwrap(), vec![1, 1, 0]);
        assert!(t.repr(13).is_err());
        let mut ap = t.apery();
        ap.sort_unstable();
        assert_eq!(ap, vec![0, 3, 6, 8, 11, 14, 16, 19, 22]);
        assert_eq!(TelescopicStructure::new(&[2, 3]).unwrap().apery(), vec![0, 3]);
        assert_eq!(TelescopicStructure::new(&[1]).unwrap().apery(), vec![0]);
    }

    #[test]
    fn telescopic_rejects_bad_sequences() {
        assert!(TelescopicStructure::new(&[4, 6]).is_err());
        // n_2 δ_2 = 7 is not in <3, 5>
        assert!(TelescopicStructure::new(&[3, 5, 7]).is_err());
    }

    #[test]
    fn adjoin_chain_worked_example() {
        let mut s = sg(&[3, 8]);
        assert_eq!(s.adjoin(8), s);
        for b in [13, 7, 10, 4] {
            s = s.adjoin(b);
        }
        assert_eq!(s.gaps(), vec![1, 2, 5]);
        assert_eq!(s.genus(), 3);
    }

    #[test]
    fn in_generated_non_numerical() {
        assert!(in_generated(9, &[9, 3]));
        assert!(!in_generated(8, &[9, 3]));
        assert!(in_generated(24, &[9, 3]));
    }
}
