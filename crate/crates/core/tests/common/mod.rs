#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weierstrass_core::approx_roots::{analyze_curve, CurveAnalysis};
use weierstrass_core::parse::parse_poly;
use weierstrass_core::semigroup::NumericalSemigroup;
use weierstrass_core::{BiPoly, FiniteField};

pub fn gf(p: u32, k: u32) -> FiniteField {
    FiniteField::new(p, k).unwrap()
}

pub fn analyze(field: &FiniteField, text: &str) -> CurveAnalysis {
    analyze_curve(&parse_poly(field, text).unwrap()).unwrap()
}

/// Random polynomial with `deg_X ≤ dx`, `deg_Y ≤ dy`.
pub fn random_poly(rng: &mut ChaCha8Rng, field: &FiniteField, dx: u32, dy: u32, terms: usize) -> BiPoly {
    let q = field.size();
    BiPoly::from_terms(
        field,
        (0..terms).map(|_| (rng.gen_range(0..=dx), rng.gen_range(0..=dy), rng.gen_range(0..q))),
    )
}

/// First curve `Y^5 + (terms of total degree < 5)` over GF(7) that has one
/// place at infinity and a singular semigroup at infinity of genus > 2.
pub fn degree_five_curve(rng: &mut ChaCha8Rng) -> CurveAnalysis {
    let f = gf(7, 1);
    loop {
        let lead = BiPoly::from_terms(&f, [(0, 5, 1), (rng.gen_range(2..5), 0, rng.gen_range(1..7))]);
        let low = random_poly(rng, &f, 3, 3, 4);
        let low = BiPoly::from_terms(&f, low.terms().filter(|((i, j), _)| i + j < 4).map(|((i, j), c)| (i, j, c)));
        let curve = &lead + &low;
        if let Ok(a) = analyze_curve(&curve) {
            let genus = a.semigroup.as_ref().map_or(0, |sp| sp.semigroup().genus());
            if a.verdict.is_one_branch() && genus > 2 {
                return a;
            }
        }
    }
}

/// Random numerical semigroup with multiplicity `≤ max_e` and genus `≤ max_g`.
pub fn random_semigroup(rng: &mut ChaCha8Rng, max_e: u64, max_g: u64) -> NumericalSemigroup {
    loop {
        let e = rng.gen_range(2..=max_e);
        let k = rng.gen_range(1..=4);
        let mut gens = vec![e];
        gens.extend((0..k).map(|_| rng.gen_range(e + 1..4 * e)));
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            if s.genus() <= max_g {
                return s;
            }
        }
    }
}

/// Random telescopic generator list `δ_0, ..., δ_h`.
pub fn random_telescopic(rng: &mut ChaCha8Rng) -> Vec<u64> {
    loop {
        let h = rng.gen_range(1..=3);
        let n: Vec<u64> = (0..h).map(|_| rng.gen_range(2..=4)).collect();
        let delta0: u64 = n.iter().product();
        let mut gens = vec![delta0];
        let mut d = delta0;
        for (k, &nk) in n.iter().enumerate() {
            let dnext = d / nk;
            let prev = if k == 0 { 0 } else { n[k - 1] * gens[k] };
            let mut u = prev / dnext + rng.gen_range(1..6);
            while num_gcd(u, nk) != 1 {
                u += 1;
            }
            gens.push(dnext * u);
            d = dnext;
        }
        if weierstrass_core::semigroup::TelescopicStructure::new(&gens).is_ok() {
            return gens;
        }
    }
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
