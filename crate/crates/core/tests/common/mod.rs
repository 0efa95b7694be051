#![allow(dead_code)]

use gvm_core::{ExactScalar, LieKind, ParabolicSetup, Rational, SIGMA, TAU};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, prop::sample::select(vec![1i64, 2, 3, 4, 6])).prop_map(|(a, b)| Rational::new(a, b))
}

fn coefficient() -> impl Strategy<Value = Option<Rational>> {
    prop_oneof![
        3 => Just(None),
        1 => prop::sample::select(vec![-2i64, -1, 1, 2]).prop_map(|c| Some(Rational::from_integer(c))),
        1 => prop::sample::select(vec![-1i64, 1]).prop_map(|c| Some(Rational::new(c, 2))),
    ]
}

/// Rational part plus optional small `tau` / `sigma` coefficients.
pub fn scalar() -> impl Strategy<Value = ExactScalar> {
    (rational(), coefficient(), coefficient()).prop_map(|(r, t, s)| {
        let mut z = ExactScalar::from_rational(r);
        if let Some(c) = t {
            z = z.plus_symbol(TAU, c);
        }
        if let Some(c) = s {
            z = z.plus_symbol(SIGMA, c);
        }
        z
    })
}

/// Parameters of the shapes the criteria distinguish: integers,
/// half-integers, thirds, and integers shifted by `±tau` or `sigma`.
pub fn parameter() -> impl Strategy<Value = ExactScalar> {
    let base = (-12i64..=4, 0usize..6);
    base.prop_map(|(a, flavour)| {
        let a = Rational::from_integer(a);
        match flavour {
            0 | 1 => ExactScalar::from_rational(a),
            2 => ExactScalar::from_rational(a + Rational::new(1, 2)),
            3 => ExactScalar::from_rational(a + Rational::new(1, 3)),
            4 => ExactScalar::from_rational(a).plus_symbol(TAU, Rational::from_integer(1)),
            _ => ExactScalar::from_rational(a).plus_symbol(SIGMA, Rational::from_integer(1)),
        }
    })
}

/// Parameter pairs, a fifth of them coupled as `(a + tau, b - tau)`.
pub fn parameter_pair() -> impl Strategy<Value = (ExactScalar, ExactScalar)> {
    prop_oneof![
        4 => (parameter(), parameter()),
        1 => (-12i64..=4, -12i64..=4).prop_map(|(a, b)| {
            let one = Rational::from_integer(1);
            (ExactScalar::from_int(a).plus_symbol(TAU, one), ExactScalar::from_int(b).plus_symbol(TAU, -one))
        }),
        1 => parameter().prop_map(|z| (z.clone(), z)),
    ]
}

pub fn all_setups() -> Vec<ParabolicSetup> {
    let mut v = ParabolicSetup::enumerate(LieKind::A, 9);
    v.extend(ParabolicSetup::enumerate(LieKind::D, 8));
    v
}

pub fn setup() -> impl Strategy<Value = ParabolicSetup> {
    prop::sample::select(all_setups())
}

pub fn int(v: i64) -> ExactScalar {
    ExactScalar::from_int(v)
}

pub fn q(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

pub fn setup_of(kind: LieKind) -> impl Strategy<Value = ParabolicSetup> {
    let n_max = if kind == LieKind::A { 9 } else { 8 };
    prop::sample::select(ParabolicSetup::enumerate(kind, n_max))
}
