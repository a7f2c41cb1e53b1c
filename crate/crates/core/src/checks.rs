//! Instance-level invariant checks. Each returns the list of violations
//! found, empty when everything holds.

use crate::semigroup::{NumericalSemigroup, TelescopicStructure};

/// ν and δ_FR against their brute-force oracles, plus the standard bounds,
/// for every element up to `4g + 2e`.
pub fn semigroup_oracles(s: &NumericalSemigroup) -> Vec<String> {
    let mut bad = Vec::new();
    let g = s.genus();
    let e = s.pivot();
    let c = s.conductor();
    let bound = 4 * g + 2 * e;
    for m in s.elements_up_to(bound) {
        let nu = s.nu(m).unwrap();
        let nu_b = s.nu_bruteforce(m).unwrap();
        if nu != nu_b {
            bad.push(format!("{s}: nu({m}) = {nu}, oracle {nu_b}"));
        }
        let fr = s.feng_rao(m).unwrap();
        let fr_b = s.feng_rao_bruteforce(m).unwrap();
        if fr != fr_b {
            bad.push(format!("{s}: feng_rao({m}) = {fr}, oracle {fr_b}"));
        }
        if m > 0 && !(2 <= fr && fr <= nu && nu <= m + 1) {
            bad.push(format!("{s}: bounds fail at {m} (nu {nu}, fr {fr})"));
        }
        if m >= c && nu as i64 != s.goppa_bound(m) + s.gap_pair_count(m) as i64 {
            bad.push(format!("{s}: nu({m}) != m+1-2g+D(m)"));
        }
        if (fr as i64) < s.goppa_bound(m) {
            bad.push(format!("{s}: feng_rao({m}) below m+1-2g"));
        }
        if m + 1 >= 4 * g && (nu as i64 != s.goppa_bound(m) || fr as i64 != s.goppa_bound(m)) {
            bad.push(format!("{s}: equality fails at {m} >= 4g-1"));
        }
        if s.nu(m + e).unwrap() < nu {
            bad.push(format!("{s}: nu decreases from {m} to {}", m + e));
        }
    }
    bad
}

/// Checks specific to symmetric semigroups; no-op otherwise apart from
/// the agreement of the symmetry characterizations.
pub fn symmetric_suite(s: &NumericalSemigroup) -> Vec<String> {
    let mut bad = Vec::new();
    let g = s.genus();
    let c = s.conductor();
    let by_conductor = c == 2 * g;
    let by_reflection = (0..c as i64).all(|r| s.contains_i64(r) != s.contains_i64(c as i64 - 1 - r));
    if s.is_symmetric() != by_conductor || by_conductor != by_reflection {
        bad.push(format!("{s}: symmetry characterizations disagree"));
    }
    if !s.is_symmetric() || g == 0 {
        return bad;
    }
    for m in c..=2 * c - 2 {
        let fast = s.feng_rao_symmetric(m).unwrap();
        let slow = s.feng_rao(m).unwrap();
        if fast != slow {
            bad.push(format!("{s}: feng_rao_symmetric({m}) = {fast}, general {slow}"));
        }
    }
    for e in s.elements_up_to(3 * c).into_iter().filter(|&e| e > 0) {
        let m = 2 * g - 1 + e;
        let fr = s.feng_rao(m).unwrap();
        if fr != e {
            bad.push(format!("{s}: feng_rao(2g-1+{e}) = {fr}"));
        }
    }
    let report = s.q0_m0().unwrap();
    for m in s.elements_up_to(4 * g) {
        if (m as i64) > report.m0 && !s.min_formula_holds(m).unwrap() {
            bad.push(format!("{s}: minimum formula fails at {m} > m0 = {}", report.m0));
        }
    }
    if report.m0 >= 0 && s.contains(report.m0 as u64) && s.min_formula_holds(report.m0 as u64).unwrap() {
        bad.push(format!("{s}: minimum formula holds at m0 = {}", report.m0));
    }
    bad
}

/// Telescopic Apéry set and bounded representations against the general
/// construction.
pub fn telescopic_suite(t: &TelescopicStructure) -> Vec<String> {
    let mut bad = Vec::new();
    let s = NumericalSemigroup::from_generators(t.generators()).unwrap();
    let s = s.repivot(t.generators()[0]);
    if t.apery() != s.apery() {
        bad.push(format!("{s}: telescopic Apéry set {:?} differs", t.apery()));
    }
    let gens = t.generators();
    for m in s.elements_up_to(s.conductor() + 2 * gens[0]) {
        let lambda = t.repr(m).unwrap();
        let back: u64 = lambda.iter().zip(gens).map(|(l, d)| l * d).sum();
        let bounded = lambda.iter().skip(1).zip(t.n()).all(|(l, n)| l < n);
        if back != m || !bounded {
            bad.push(format!("{s}: repr({m}) = {lambda:?}"));
        }
    }
    bad
}

/// `adjoin(s, b)` against recomputation from the enlarged generator list.
pub fn adjoin_check(s: &NumericalSemigroup, b: u64) -> Vec<String> {
    let fast = s.adjoin(b);
    let mut gens = s.generators().to_vec();
    gens.push(b);
    let slow = NumericalSemigroup::from_generators(&gens).unwrap();
    let bound = slow.conductor() + s.pivot();
    match (0..=bound).find(|&m| fast.contains(m) != slow.contains(m)) {
        Some(m) => vec![format!("{s} + {b}: membership of {m} differs")],
        None => Vec::new(),
    }
}

/// Product formula over the telescopic Apéry elements, compared with the
/// true ν. Returns `(element, formula, nu)` for every mismatch.
pub fn apery_product_formula(t: &TelescopicStructure) -> Vec<(u64, i64, u64)> {
    let s = t.semigroup().repivot(t.generators()[0]);
    let mut out = Vec::new();
    for a in t.apery() {
        let lambda = t.repr(a).unwrap();
        let formula: i64 = lambda.iter().skip(1).map(|&l| l as i64 - 1).product();
        let nu = s.nu(a).unwrap();
        if formula != nu as i64 {
            out.push((a, formula, nu));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_semigroups_pass() {
        for gens in [&[6, 10, 15][..], &[3, 5, 7], &[8, 10, 12, 13], &[9, 3, 8]] {
            let s = NumericalSemigroup::from_generators(gens).unwrap();
            assert!(semigroup_oracles(&s).is_empty());
            assert!(symmetric_suite(&s).is_empty(), "{:?}", symmetric_suite(&s));
            assert!(adjoin_check(&s, 7).is_empty());
        }
        let t = TelescopicStructure::new(&[9, 3, 8]).unwrap();
        assert!(telescopic_suite(&t).is_empty());
        assert!(!apery_product_formula(&t).is_empty());
    }
}
