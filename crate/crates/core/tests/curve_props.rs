mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weierstrass_core::approx_roots::{am_properties, approximate_root};
use weierstrass_core::branch::{parametrize, valuation_by_resultant};
use weierstrass_core::BiPoly;

#[test]
fn approximate_root_is_unique_for_the_worked_example() {
    let f = gf(2, 1);
    let a = analyze(&f, "Y^8 + Y^2 + X^3");
    let eq = a.model.equation();
    let g = approximate_root(eq, 3).unwrap();
    let bound = eq.deg_y().unwrap() - g.deg_y().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let delta = random_poly(&mut rng, &f, 3, 2, 3);
        if delta.is_zero() {
            continue;
        }
        let other = &g + &delta;
        let diff = eq - &other.pow(3);
        assert!(diff.deg_y().unwrap() >= bound, "{other} also qualifies");
    }
}

#[test]
fn am_sequence_shape() {
    let f = gf(2, 1);
    let a = analyze(&f, "Y^8 + Y^2 + X^3");
    let seq = &a.sequence;
    assert!(seq.d.windows(2).all(|w| w[0] > w[1]));
    assert!(seq.h as f64 <= (a.model.m() as f64).log2() + 2.0);
    let props = am_properties(seq);
    assert!(props.gcd_chain && props.membership && props.decreasing);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn valuation_laws(seed in 0u64..10_000) {
        let f = gf(2, 1);
        let a = analyze(&f, "Y^8 + Y^2 + X^3");
        let mut param = parametrize(&a.model, 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_poly(&mut rng, &f, 4, 7, 4);
        let h = random_poly(&mut rng, &f, 4, 7, 4);
        let (Ok(vg), Ok(vh)) = (param.valuation_poly(&g), param.valuation_poly(&h)) else {
            return Ok(());
        };
        if let Ok(r) = valuation_by_resultant(&a.model, &g) {
            prop_assert_eq!(vg.pole_order(), r as i64);
        }
        let vgh = param.valuation_poly(&(&g * &h)).unwrap();
        prop_assert_eq!(vgh, vg.mul(&vh, &f));
        if let Ok(vs) = param.valuation_poly(&(&g + &h)) {
            prop_assert!(vs.order >= vg.order.min(vh.order));
            if vg.order != vh.order {
                prop_assert_eq!(vs.order, vg.order.min(vh.order));
            }
        }
    }
}

#[test]
fn refinement_keeps_valuations() {
    let f = gf(2, 1);
    let a = analyze(&f, "Y^8 + Y^2 + X^3");
    let mut param = parametrize(&a.model, 16).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let polys: Vec<BiPoly> = (0..20).map(|_| random_poly(&mut rng, &f, 5, 7, 5)).collect();
    let before: Vec<_> = polys.iter().map(|g| param.valuation_poly(g).ok()).collect();
    param.refine_to(400).unwrap();
    let after: Vec<_> = polys.iter().map(|g| param.valuation_poly(g).ok()).collect();
    assert_eq!(before, after);
}

#[test]
fn degree_five_search_is_deterministic() {
    let a = degree_five_curve(&mut ChaCha8Rng::seed_from_u64(11));
    let b = degree_five_curve(&mut ChaCha8Rng::seed_from_u64(11));
    assert_eq!(a.model.equation(), b.model.equation());
    assert!(a.semigroup.is_some());
}
