mod common;

use common::{int, parameter, parameter_pair, q, setup, setup_of};
use gvm_core::gk::{gk_dimension, gk_dimension_integral, gk_dimension_raw};
use gvm_core::rootdata::{lambda_plus_rho, weight_plus_rho};
use gvm_core::verdict::{
    criterion, criterion_a_unequal, criterion_a_unequal_branches, reducible_oracle,
    shape_irreducibility_diagnostic_d, shape_maximality_test_a, single_weight_criterion_a,
};
use gvm_core::{ExactScalar, LieKind, LieType, ParabolicSetup, Rational, WeightVector};
use proptest::prelude::*;

fn integral_weight() -> impl Strategy<Value = (LieType, WeightVector)> {
    let a = (2usize..=9).prop_flat_map(|n| {
        prop::collection::vec(-8i64..=8, n).prop_map(move |v| {
            let shift = Rational::new(1, 3);
            let w: Vec<ExactScalar> = v.into_iter().map(|x| ExactScalar::from_int(x) + shift).collect();
            (LieType::new(LieKind::A, n).unwrap(), WeightVector::new(w))
        })
    });
    let d = (4usize..=8, any::<bool>()).prop_flat_map(|(n, half)| {
        prop::collection::vec(-8i64..=8, n).prop_map(move |v| {
            let w: Vec<ExactScalar> =
                v.into_iter().map(|x| if half { q(2 * x + 1, 2) } else { int(x) }).collect();
            (LieType::new(LieKind::D, n).unwrap(), WeightVector::new(w))
        })
    });
    prop_oneof![a, d]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn raising_a_parameter_never_raises_gk(s in setup(), (z1, z2) in parameter_pair()) {
        let one = Rational::from_integer(1);
        let base = gk_dimension(&s, &z1, &z2);
        prop_assert!(gk_dimension(&s, &(&z1 + one), &z2) <= base);
        prop_assert!(gk_dimension(&s, &z1, &(&z2 + one)) <= base);
    }

    #[test]
    fn gk_is_bounded_by_dim_u(s in setup(), (z1, z2) in parameter_pair()) {
        let gk = gk_dimension(&s, &z1, &z2);
        prop_assert!(gk <= s.dim_u());
        prop_assert!(gk <= s.lie().positive_root_count());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn integral_route_agrees((lie, w) in integral_weight()) {
        let general = gk_dimension_raw(&w, lie).unwrap();
        prop_assert_eq!(gk_dimension_integral(&w, lie).unwrap(), general);
        prop_assert!(general <= lie.positive_root_count());
    }

    #[test]
    fn criterion_matches_oracle_off_grid(s in setup(), (z1, z2) in parameter_pair()) {
        let v = reducible_oracle(&s, &z1, &z2);
        prop_assert_eq!(criterion(&s, &z1, &z2).unwrap(), v.reducible, "{} z1={} z2={} gk={}", s, z1, z2, v.gk);
    }

    #[test]
    fn reducibility_is_upward_closed(s in setup(), (z1, z2) in parameter_pair(), a in 0i64..4, b in 0i64..4) {
        let z1b = &z1 + Rational::from_integer(a);
        let z2b = &z2 + Rational::from_integer(b);
        if reducible_oracle(&s, &z1, &z2).reducible {
            prop_assert!(reducible_oracle(&s, &z1b, &z2b).reducible);
        }
        if criterion(&s, &z1, &z2).unwrap() {
            prop_assert!(criterion(&s, &z1b, &z2b).unwrap());
        }
    }

    #[test]
    fn unequal_forms_agree(s in setup_of(LieKind::A), (z1, z2) in parameter_pair()) {
        prop_assume!(z1 != z2);
        prop_assert_eq!(
            criterion_a_unequal(&s, &z1, &z2).unwrap(),
            criterion_a_unequal_branches(&s, &z1, &z2).unwrap()
        );
    }

    #[test]
    fn type_d_diagnostic_holds_at_irreducible_points(s in setup_of(LieKind::D), (z1, z2) in parameter_pair()) {
        if !reducible_oracle(&s, &z1, &z2).reducible {
            let lpr = lambda_plus_rho(&s, &z1, &z2);
            prop_assert!(shape_irreducibility_diagnostic_d(&s, &lpr).unwrap());
        }
    }

    #[test]
    fn three_column_shape_iff_irreducible(s in setup_of(LieKind::A), z1 in -12i64..=4, z2 in -12i64..=4) {
        let (z1, z2) = (int(z1), int(z2));
        let lpr = lambda_plus_rho(&s, &z1, &z2);
        let v = reducible_oracle(&s, &z1, &z2);
        prop_assert_eq!(shape_maximality_test_a(&s, &lpr).unwrap(), v.gk == v.dim_u);
    }
}

#[test]
fn single_weight_criterion_matches_gk() {
    let half = Rational::new(1, 2);
    for n in 2..=9usize {
        let lie = LieType::new(LieKind::A, n).unwrap();
        for p in 1..n {
            let dim_u = p * (n - p);
            for twice in -2 * (n as i64 + 2)..=6 {
                let z = ExactScalar::from_rational(Rational::from_integer(twice) * half);
                let gk = gk_dimension_raw(&weight_plus_rho(lie, &[(p, z.clone())]).unwrap(), lie).unwrap();
                assert!(gk <= dim_u);
                assert_eq!(single_weight_criterion_a(n, p, &z).unwrap(), gk < dim_u, "n={n} p={p} z={z}");
            }
        }
    }
}

#[test]
fn equal_parameters_with_generic_values() {
    let t = ExactScalar::symbol(gvm_core::TAU);
    for s in ParabolicSetup::enumerate(LieKind::A, 9).into_iter().chain(ParabolicSetup::enumerate(LieKind::D, 8)) {
        let v = reducible_oracle(&s, &t, &t);
        assert!(!v.reducible, "{s}");
        assert_eq!(v.gk, s.dim_u());
        assert!(!criterion(&s, &t, &t).unwrap());
    }
}

#[test]
fn parameter_strategy_covers_all_cosets() {
    use gvm_core::CosetClass;
    use proptest::strategy::ValueTree;
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let mut seen = [false; 3];
    for _ in 0..200 {
        let z = parameter().new_tree(&mut runner).unwrap().current();
        let slot = match z.coset_class() {
            CosetClass::Integer => 0,
            CosetClass::HalfInteger => 1,
            CosetClass::Other => 2,
        };
        seen[slot] = true;
    }
    assert_eq!(seen, [true; 3]);
}
