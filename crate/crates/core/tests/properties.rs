mod common;

use proptest::prelude::*;

use sixlines::field::{rational, FieldElement, FieldTower, Sign};
use sixlines::invariants::classify::{identify_class, InvariantKey};
use sixlines::invariants::{
    chirality_graph, cocycle_check, is_homogeneous, mirror_config, signature, signature_spectrum, triple_chains,
};
use sixlines::joins::{build_join, cyclic_orbit, Perm};
use sixlines::projgeom::triple_linking;

fn tower() -> FieldTower {
    FieldTower::from_radicands(&[rational(2, 1), rational(3, 1)]).unwrap()
}

fn element() -> impl Strategy<Value = FieldElement> {
    prop::collection::vec((-20i64..=20, 1i64..=9), 4)
        .prop_map(|c| FieldElement::new(tower(), c.into_iter().map(|(n, d)| rational(n, d)).collect()))
}

/// Value in the real embedding `√2, √3 > 0`.
fn embed(x: &FieldElement) -> f64 {
    let c: Vec<f64> = x
        .coefficients()
        .iter()
        .map(|q| {
            use num_traits::ToPrimitive;
            q.to_f64().unwrap()
        })
        .collect();
    c[0] + c[1] * 2f64.sqrt() + c[2] * 3f64.sqrt() + c[3] * 6f64.sqrt()
}

proptest! {
    #[test]
    fn ring_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, FieldElement::one(&tower()));
        }
    }

    #[test]
    fn signs_are_multiplicative(a in element(), b in element()) {
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
        prop_assert_eq!((-&a).sign(), -a.sign());
        let sq = a.square();
        prop_assert!(sq.sign() != Sign::Negative);
        prop_assert_eq!(sq.sqrt().map(|r| r.sign()), Some(if a.is_zero() { Sign::Zero } else { Sign::Positive }));
    }

    // Nonzero elements with these coefficient bounds have norm at least
    // 9⁻¹⁶ and conjugates below 200, so they stay far above f64 error.
    #[test]
    fn sign_matches_real_embedding(a in element()) {
        let v = embed(&a);
        match a.sign() {
            Sign::Zero => prop_assert!(v.abs() < 1e-12),
            Sign::Positive => prop_assert!(v > 1e-12, "{} vs {}", a, v),
            Sign::Negative => prop_assert!(v < -1e-12, "{} vs {}", a, v),
        }
        prop_assert!((a.to_f64() - v).abs() < 1e-9);
    }

    #[test]
    fn order_agrees_with_embedding(a in element(), b in element()) {
        let (x, y) = (embed(&a), embed(&b));
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(a < b, x < y);
        }
    }

    #[test]
    fn triple_linking_ignores_orientation_and_order(seed in any::<u64>()) {
        let c = common::random_config(&mut common::rng(seed), 3);
        let l = c.plucker_lines();
        let s = triple_linking(&l[0], &l[1], &l[2]).unwrap();
        prop_assert_eq!(triple_linking(&l[0].negated(), &l[1], &l[2]).unwrap(), s);
        prop_assert_eq!(triple_linking(&l[2], &l[0], &l[1].negated()).unwrap(), s);
        prop_assert_eq!(triple_linking(&l[1], &l[0], &l[2]).unwrap(), s);
        prop_assert_eq!(c.triple(0, 1, 2), s);
        let m = mirror_config(&c);
        prop_assert_eq!(m.triple(0, 1, 2), -s);
    }

    #[test]
    fn random_six_line_invariants(seed in any::<u64>()) {
        let c = common::random_config(&mut common::rng(seed), 6);
        prop_assert!(cocycle_check(&c));
        let homogeneous = is_homogeneous(&c).unwrap();
        let chains = triple_chains(&c);
        prop_assert_eq!(chirality_graph(&c).is_regular(), homogeneous);
        prop_assert_eq!(chains.positive_is_cycle && chains.negative_is_cycle, homogeneous);
        let m = mirror_config(&c);
        prop_assert_eq!(signature(&m), -signature(&c));
        prop_assert_eq!(signature_spectrum(&m), signature_spectrum(&c).negated());
        // every random six is some tabulated class
        prop_assert!(identify_class(&c).is_ok());
    }
}

#[test]
fn identification_is_constant_on_cyclic_orbits() {
    for sigma in Perm::all(6) {
        let id = identify_class(&build_join(&sigma)).unwrap();
        for other in cyclic_orbit(&sigma) {
            assert_eq!(identify_class(&build_join(&other)).unwrap(), id, "{sigma} vs {other}");
        }
    }
}

#[test]
fn inverse_joins_share_invariants() {
    for sigma in Perm::all(6) {
        let a = InvariantKey::of(&build_join(&sigma));
        let b = InvariantKey::of(&build_join(&sigma.inverse()));
        assert_eq!(a, b, "{sigma}");
    }
}
