mod common;

use common::{group, heisenberg, small_groups};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use simconj_core::invariants::{
    a_equivalent, a_of, alpha_n, asymptotic_report, b_equivalent, b_of, class_eq_from_alpha, normalized_a, normalized_b,
};
use simconj_core::oracle::{alpha_bruteforce, beta_bruteforce};
use simconj_core::ratfun::q;
use simconj_core::{FiniteGroup, GroupSpec, InvariantRecord, Polynomial, RationalFunction};

fn coeffs(f: &RationalFunction, n: usize) -> Vec<u64> {
    f.series_coeffs(n)
        .into_iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer().to_u64().unwrap()
        })
        .collect()
}

#[test]
fn series_agree_with_the_oracle() {
    for (name, g) in small_groups().into_iter().filter(|(_, g)| g.order() <= 24) {
        let a = coeffs(&a_of(&g), 4);
        let b = coeffs(&b_of(&g).unwrap(), 4);
        for n in 0..4u32 {
            let alpha = alpha_bruteforce(&g, n).unwrap().count;
            let beta = beta_bruteforce(&g, n).unwrap().count;
            assert_eq!(a[n as usize], alpha, "{name}: α_{n}");
            assert_eq!(alpha_n(&g, n), BigInt::from(alpha), "{name}: α_{n}");
            assert_eq!(b[n as usize], beta, "{name}: β_{n}");
        }
    }
}

#[test]
fn a_equivalence_is_equality_of_class_equations() {
    let groups = small_groups();
    for (i, (x, g)) in groups.iter().enumerate() {
        for (y, h) in &groups[i + 1..] {
            if g.order() != h.order() {
                continue;
            }
            assert_eq!(
                a_equivalent(g, h),
                g.class_equation() == h.class_equation(),
                "{x} vs {y}"
            );
        }
    }
}

#[test]
fn class_equation_round_trips_through_alpha() {
    for (name, g) in small_groups() {
        let n = g.order() as u32;
        let alphas: Vec<BigInt> = (1..=n).map(|k| alpha_n(&g, k)).collect();
        assert_eq!(class_eq_from_alpha(&alphas).unwrap(), g.class_equation(), "{name}");
    }
}

#[test]
fn products_with_abelian_groups_scale_the_variable() {
    let bases = [
        ("Q8", GroupSpec::quaternion(8)),
        ("S3", GroupSpec::dihedral(6)),
        ("Heis27", heisenberg(3)),
    ];
    for (name, base) in bases {
        let g = group(base.clone());
        let (ag, bg) = (a_of(&g), b_of(&g).unwrap());
        for k in [2u64, 3, 4] {
            let gh = group(GroupSpec::product([base.clone(), GroupSpec::cyclic(k)]));
            let c = q(k as i64, 1);
            assert_eq!(a_of(&gh), ag.scale_variable(&c), "{name} x C{k}");
            assert_eq!(b_of(&gh).unwrap(), bg.scale_variable(&c), "{name} x C{k}");
            assert_eq!(normalized_a(&gh), normalized_a(&g));
            assert_eq!(normalized_b(&gh).unwrap(), normalized_b(&g).unwrap());
        }
    }
}

#[test]
fn dominant_poles() {
    for (name, g) in small_groups() {
        let report = asymptotic_report(&g, 12).unwrap();
        let order = g.order() as i64;
        assert_eq!(report.dominant_pole_a, order as u64, "{name}");
        assert_eq!(report.leading_residue_a, q(g.center().order() as i64, order), "{name}");
        assert_eq!(report.dominant_pole_b, g.max_abelian_order() as u64, "{name}");
        if let Some(r) = &report.dominant_residue_b {
            assert!(*r > q(0, 1), "{name}");
        }
    }
}

#[test]
fn ac_groups_are_a_equivalent_iff_b_equivalent() {
    let groups: Vec<(&str, FiniteGroup)> = small_groups().into_iter().filter(|(_, g)| g.is_ac_group()).collect();
    let mut pairs = 0;
    for (i, (x, g)) in groups.iter().enumerate() {
        for (y, h) in &groups[i + 1..] {
            if g.order() == h.order() {
                pairs += 1;
                assert_eq!(a_equivalent(g, h), b_equivalent(g, h).unwrap(), "{x} vs {y}");
            }
        }
    }
    assert!(pairs > 5);
}

#[test]
fn ac_groups_follow_the_centralizer_formula() {
    for (name, g) in small_groups().into_iter().filter(|(_, g)| g.is_ac_group()) {
        let classes = g.conjugacy_classes();
        let z = g.center().order();
        let mut sum = RationalFunction::one();
        for &m in classes.centralizer_orders.iter().filter(|&&m| m != g.order()) {
            sum = sum.add(
                &RationalFunction::from_polynomial(Polynomial::from_ints(&[0, 1]))
                    .mul(&RationalFunction::geometric(m as u64)),
            );
        }
        let expected = sum.mul(&RationalFunction::geometric(z as u64));
        assert_eq!(b_of(&g).unwrap(), expected, "{name}");
    }
}

#[test]
fn beta_one_counts_classes() {
    for (name, g) in small_groups() {
        let b = b_of(&g).unwrap().series_coeffs(2);
        let k = g.conjugacy_classes().class_count();
        assert_eq!(b[1], q(k as i64, 1), "{name}");
        assert!(b[0].is_one());
    }
}

#[test]
fn records_are_consistent() {
    for (name, g) in small_groups() {
        let rec = InvariantRecord::compute(&g).unwrap();
        assert_eq!(rec.order, g.order() as u64, "{name}");
        assert_eq!(rec.a_pf.to_rational_function(), rec.a, "{name}");
        assert_eq!(rec.b_pf.to_rational_function(), rec.b, "{name}");
        assert_eq!(rec.spectrum.total(), rec.order, "{name}");
        assert_eq!(
            rec.normalized_a,
            rec.a.scale_variable(&q(1, rec.order as i64)),
            "{name}"
        );
        assert_eq!(rec.is_ac, g.is_ac_group(), "{name}");
    }
}

#[test]
fn printed_order_18_and_27_values() {
    let b8 = "(1-t)/((1-2t)(1-4t))".parse::<RationalFunction>().unwrap();
    assert_eq!(b_of(&group(GroupSpec::dihedral(8))).unwrap(), b8);
    assert_eq!(b_of(&group(GroupSpec::quaternion(8))).unwrap(), b8);
    let b27 = "(1-t)/((1-3t)(1-9t))".parse::<RationalFunction>().unwrap();
    assert_eq!(b_of(&group(heisenberg(3))).unwrap(), b27);
    let d18 = group(GroupSpec::dihedral(18));
    let b18 = "(-t^2+6t-1)/(18t^3-29t^2+12t-1)".parse::<RationalFunction>().unwrap();
    assert_eq!(b_of(&d18).unwrap(), b18);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_groups_have_geometric_invariants(orders in prop::collection::vec(1u64..7, 1..4)) {
        let g = group(GroupSpec::product(orders.iter().map(|&k| GroupSpec::cyclic(k))));
        let n = g.order() as u64;
        prop_assert_eq!(a_of(&g), RationalFunction::geometric(n));
        prop_assert_eq!(b_of(&g).unwrap(), RationalFunction::geometric(n));
    }

    #[test]
    fn dihedral_series_are_nonnegative_integers(k in 3u64..14) {
        let g = group(GroupSpec::dihedral(2 * k));
        let a = coeffs(&a_of(&g), 6);
        let b = coeffs(&b_of(&g).unwrap(), 6);
        for n in 0..6 {
            prop_assert!(b[n] <= a[n]);
        }
        prop_assert_eq!(b[1] as usize, g.conjugacy_classes().class_count());
    }
}
