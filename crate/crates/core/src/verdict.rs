//! Reducibility of scalar generalized Verma modules `M_I(z1·ξ_p + z2·ξ_q)`.
//!
//! The oracle compares the GK dimension of the simple quotient against
//! `dim 𝔲`. The closed-form criteria are written independently, straight
//! from the parameter conditions, so the two can be checked against each
//! other.
//!
//! Coset conditions such as `z ∈ -2 + ½ℤ≥0` are false for any scalar with
//! a generic part, and a branch quantified over `z ∈ ℂ` places no condition
//! on that coordinate.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{CosetClass, ExactScalar, Rational};
use crate::gk::{gk_dimension, partition_classes, tilde};
use crate::rootdata::{LieKind, ParabolicSetup, WeightVector};
use crate::tableaux::{even_odd_counts, ScalarSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub setup: ParabolicSetup,
    pub z1: ExactScalar,
    pub z2: ExactScalar,
    pub gk: usize,
    pub dim_u: usize,
    /// `gk < dim_u`.
    pub reducible: bool,
    pub criterion: Option<bool>,
    pub agree: Option<bool>,
}

impl Verdict {
    pub fn with_criterion(mut self, criterion: bool) -> Self {
        self.criterion = Some(criterion);
        self.agree = Some(criterion == self.reducible);
        self
    }
}

pub fn reducible_oracle(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> Verdict {
    let gk = gk_dimension(setup, z1, z2);
    let dim_u = setup.dim_u();
    debug_assert!(gk <= dim_u, "GK dimension {gk} exceeds dim u = {dim_u} for {setup}");
    Verdict {
        setup: *setup,
        z1: z1.clone(),
        z2: z2.clone(),
        gk,
        dim_u,
        reducible: gk < dim_u,
        criterion: None,
        agree: None,
    }
}

/// Oracle verdict plus the closed-form answer from [`criterion`].
pub fn evaluate(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> Result<Verdict> {
    Ok(reducible_oracle(setup, z1, z2).with_criterion(criterion(setup, z1, z2)?))
}

/// The closed-form criterion matching the setup: the equal- or
/// unequal-parameter theorem for type A, the type D theorem otherwise.
pub fn criterion(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> Result<bool> {
    match setup.kind() {
        LieKind::A if z1 == z2 => criterion_a_equal(setup, z1),
        LieKind::A => criterion_a_unequal(setup, z1, z2),
        LieKind::D => criterion_d(setup, z1, z2),
    }
}

fn floor_half(v: i64) -> i64 {
    v.div_euclid(2)
}

fn ceil_half(v: i64) -> i64 {
    -(-v).div_euclid(2)
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn one() -> Rational {
    int(1)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// `z ∈ base + ℤ≥0`.
fn at_least(z: &ExactScalar, base: i64) -> bool {
    z.in_progression(int(base), one(), false)
}

/// `z ∈ base + ℤ>0`.
fn above(z: &ExactScalar, base: i64) -> bool {
    z.in_progression(int(base), one(), true)
}

fn require_kind(setup: &ParabolicSetup, expected: LieKind) -> Result<()> {
    if setup.kind() == expected {
        Ok(())
    } else {
        Err(Error::WrongLieType { expected, found: setup.kind() })
    }
}

/// Type A, `z1 = z2 = z`.
pub fn criterion_a_equal(setup: &ParabolicSetup, z: &ExactScalar) -> Result<bool> {
    require_kind(setup, LieKind::A)?;
    let (k, m, h) = (setup.k() as i64, setup.m() as i64, setup.h() as i64);

    if !z.is_integer() {
        let half_integral = z.coset_class() == CosetClass::HalfInteger;
        return Ok(m >= 1 && half_integral && z.rational_gt(Rational::new(-(k + m), 2)));
    }

    let first_reducible = if m >= k - 1 {
        let m_half = if k % 2 == 0 { ceil_half(m) } else { floor_half(m) };
        -m_half - floor_half(k - 1)
    } else if m > 0 {
        if h < k {
            -ceil_half(k + m).max(h) + 1
        } else {
            -k + 1
        }
    } else {
        -h.min(k) + 1
    };
    Ok(at_least(z, first_reducible))
}

fn check_unequal(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> Result<()> {
    require_kind(setup, LieKind::A)?;
    if z1 == z2 {
        return Err(Error::EqualParameters);
    }
    Ok(())
}

/// Type A, `z1 != z2`, in the consolidated three-family form.
pub fn criterion_a_unequal(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> Result<bool> {
    check_unequal(setup, z1, z2)?;
    let (n, p, q) = (setup.n() as i64, setup.p() as i64, setup.q() as i64);
    let k = q - p;
    if n == q {
        return Ok(at_least(z1, 1 - p.min(k)));
    }
    Ok(at_least(z2, 1 - k.min(n - q))
        || at_least(z1, 1 - p.min(k))
        || above(&(z1 + z2), -q + p - p.min(n - q)))
}

/// Type A, `z1 != z2`, following the case split on which parameters are
/// integral.
pub fn criterion_a_unequal_branches(
    setup: &ParabolicSetup,
    z1: &ExactScalar,
    z2: &ExactScalar,
) -> Result<bool> {
    check_unequal(setup, z1, z2)?;
    let (n, p, q) = (setup.n() as i64, setup.p() as i64, setup.q() as i64);
    let k = q - p;
    let m = setup.m() as i64;
    if n == q {
        return Ok(at_least(z1, 1 - p.min(n - p)));
    }
    let sum = z1 + z2;
    Ok(match (z1.is_integer(), z2.is_integer()) {
        (false, false) => above(&sum, -k - m),
        (false, true) => at_least(z2, 1 - k.min(n - q)),
        (true, false) => at_least(z1, 1 - p.min(k)),
        (true, true) => {
            let gt = |z: &ExactScalar, b: i64| z.rational_gt(int(b));
            gt(z2, -1)
                || gt(z1, -1)
                || gt(&sum, -k - m)
                || gt(z1, -k.min(p))
                || gt(z2, -k.min(n - q))
        }
    })
}

/// Type D with `(p, q)` in `{(1, n-1), (1, n), (n-1, n)}`.
pub fn criterion_d(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> Result<bool> {
    require_kind(setup, LieKind::D)?;
    let n = setup.n() as i64;
    let odd = n % 2 == 1;
    let sum = z1 + z2;
    let equal = z1 == z2;

    if setup.p() == 1 {
        let coupled_ok = (!z1.is_integer() && !z2.is_integer()) || *z1 == ExactScalar::from_int(-1);
        let diagonal_base = Rational::from_integer(floor_half(-n)) + Rational::new(3, 2);
        Ok(at_least(z1, 0)
            || (coupled_ok && at_least(&sum, -n + 2))
            || (equal && !z1.is_integer() && z1.in_progression(diagonal_base, one(), false))
            || at_least(z2, if odd { -n + 3 } else { -n + 4 }))
    } else {
        let diagonal_base = Rational::new(-n, 2) + if odd { half() } else { one() };
        Ok(at_least(z1, 0)
            || at_least(z2, 0)
            || (equal && z1.in_progression(diagonal_base, half(), false))
            || at_least(&sum, if odd { -n + 1 } else { -n + 2 }))
    }
}

/// Type A maximal parabolic `{α_p}`: `M(z·ξ_p)` is reducible iff
/// `z ∈ 1 - min{p, n-p} + ℤ≥0`.
pub fn single_weight_criterion_a(n: usize, p: usize, z: &ExactScalar) -> Result<bool> {
    if n < 2 || !(1..n).contains(&p) {
        return Err(Error::IndexOutOfRange { index: p, min: 1, max: n.saturating_sub(1) });
    }
    Ok(at_least(z, 1 - p.min(n - p) as i64))
}

/// For integral `λ+ρ` in type A: whether the RS shape of `λ+ρ` has column
/// lengths `{p, q-p, n-q}` (zero columns dropped).
pub fn shape_maximality_test_a(setup: &ParabolicSetup, lpr: &WeightVector) -> Result<bool> {
    require_kind(setup, LieKind::A)?;
    let entries = lpr.entries();
    if entries.len() != setup.n() {
        return Err(Error::LengthMismatch { expected: setup.n(), found: entries.len() });
    }
    if entries.iter().any(|e| !e.sub_is_integer(&entries[0])) {
        return Err(Error::NonIntegralWeight);
    }
    let columns = ScalarSequence::new(entries.to_vec()).rs_shape()?.conjugate();
    let mut target: Vec<usize> = [setup.p(), setup.k(), setup.n() - setup.q()]
        .into_iter()
        .filter(|&c| c > 0)
        .collect();
    target.sort_unstable_by(|a, b| b.cmp(a));
    Ok(columns.rows() == target.as_slice())
}

/// Type D shape test: true when some integral or half-integral class `x`
/// has `p(x⁻)^ev` equal to `(2, 1^{n-2})` or `(1, 1^{n-2})`, or some other
/// class `y` has `p(ỹ)` equal to one of those.
///
/// Every irreducible point satisfies this; the converse is not claimed.
pub fn shape_irreducibility_diagnostic_d(setup: &ParabolicSetup, lpr: &WeightVector) -> Result<bool> {
    require_kind(setup, LieKind::D)?;
    let n = setup.n();
    let mut wide = alloc::vec![1usize; n - 1];
    wide[0] = 2;
    let narrow = alloc::vec![1usize; n - 1];
    let matches = |rows: &[usize]| rows == wide.as_slice() || rows == narrow.as_slice();

    let classes = partition_classes(lpr.entries(), LieKind::D);
    for x in [&classes.integer_class, &classes.half_class].into_iter().flatten() {
        let (mut ev, _) = even_odd_counts(&x.minus_double().rs_shape()?);
        while ev.last() == Some(&0) {
            ev.pop();
        }
        if matches(&ev) {
            return Ok(true);
        }
    }
    for y in &classes.other_classes {
        if matches(tilde(y).rs_shape()?.rows()) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{SIGMA, TAU};
    use crate::rootdata::lambda_plus_rho;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::ratio(n, d)
    }

    fn z(v: i64) -> ExactScalar {
        ExactScalar::from_int(v)
    }

    fn tau() -> ExactScalar {
        ExactScalar::symbol(TAU)
    }

    fn setup(kind: LieKind, n: usize, p: usize, qq: usize) -> ParabolicSetup {
        ParabolicSetup::of(kind, n, p, qq).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let s = setup(LieKind::A, 8, 2, 5);
        let v = reducible_oracle(&s, &z(-2), &z(-2));
        assert!(v.reducible);
        assert_eq!(v.dim_u, 21);
        assert!(!reducible_oracle(&s, &q(-5, 2), &q(-5, 2)).reducible);
        let s = setup(LieKind::D, 6, 1, 5);
        assert!(reducible_oracle(&s, &z(0), &tau()).reducible);
    }

    #[test]
    fn criterion_a_equal_examples() {
        let s = setup(LieKind::A, 8, 2, 5);
        assert!(criterion_a_equal(&s, &q(-3, 2)).unwrap());
        assert!(!criterion_a_equal(&s, &z(-3)).unwrap());
        assert!(!criterion_a_equal(&s, &tau()).unwrap());
        let s = setup(LieKind::A, 4, 1, 3);
        assert!(criterion_a_equal(&s, &z(-1)).unwrap());
        assert!(!criterion_a_equal(&s, &z(-2)).unwrap());
        let d = setup(LieKind::D, 6, 1, 5);
        assert!(matches!(criterion_a_equal(&d, &z(0)), Err(Error::WrongLieType { .. })));
    }

    #[test]
    fn criterion_a_equal_left_endpoint_is_open() {
        // k=3, m=2: threshold -(k+m)/2 = -5/2 is irreducible, -3/2 reducible.
        let s = setup(LieKind::A, 8, 2, 5);
        assert!(!criterion_a_equal(&s, &q(-5, 2)).unwrap());
        assert!(!reducible_oracle(&s, &q(-5, 2), &q(-5, 2)).reducible);
    }

    #[test]
    fn criterion_a_unequal_examples() {
        let s = setup(LieKind::A, 10, 3, 6);
        assert!(criterion_a_unequal(&s, &z(5), &z(-2)).unwrap());
        assert!(!criterion_a_unequal(&s, &tau(), &ExactScalar::symbol(SIGMA)).unwrap());
        let s = setup(LieKind::A, 11, 3, 9);
        assert!(criterion_a_unequal(&s, &z(-3), &z(-4)).unwrap());
        assert_eq!(criterion_a_unequal(&s, &z(1), &z(1)), Err(Error::EqualParameters));
        assert_eq!(criterion_a_unequal_branches(&s, &z(1), &z(1)), Err(Error::EqualParameters));
    }

    #[test]
    fn unequal_forms_agree_on_small_lattice() {
        for s in ParabolicSetup::enumerate(LieKind::A, 7) {
            let axis: Vec<ExactScalar> = (-20..=6)
                .map(|i| q(i, 2))
                .chain([q(1, 3), tau(), &tau() + Rational::new(1, 2)])
                .collect();
            for a in &axis {
                for b in &axis {
                    if a == b {
                        continue;
                    }
                    assert_eq!(
                        criterion_a_unequal(&s, a, b).unwrap(),
                        criterion_a_unequal_branches(&s, a, b).unwrap(),
                        "{s} z1={a} z2={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn criterion_d_examples() {
        let s = setup(LieKind::D, 6, 1, 5);
        assert!(criterion_d(&s, &q(-3, 2), &q(-3, 2)).unwrap());
        assert!(!criterion_d(&s, &q(-5, 2), &q(-5, 2)).unwrap());
        let s = setup(LieKind::D, 7, 6, 7);
        assert!(criterion_d(&s, &z(-3), &z(-3)).unwrap());
        let t = tau();
        let z1 = &t + int(-4);
        let z2 = &(-&t) + int(-3);
        assert!(!criterion_d(&s, &z1, &z2).unwrap());
        assert!(!reducible_oracle(&s, &z1, &z2).reducible);
        let a = setup(LieKind::A, 8, 2, 5);
        assert!(matches!(criterion_d(&a, &z(0), &z(0)), Err(Error::WrongLieType { .. })));
    }

    #[test]
    fn single_weight_examples() {
        assert!(single_weight_criterion_a(8, 2, &z(-1)).unwrap());
        assert!(!single_weight_criterion_a(8, 2, &q(-3, 2)).unwrap());
        assert!(!single_weight_criterion_a(4, 2, &z(-2)).unwrap());
        assert!(single_weight_criterion_a(8, 0, &z(0)).is_err());
        assert!(single_weight_criterion_a(8, 8, &z(0)).is_err());
    }

    #[test]
    fn shape_maximality_examples() {
        let s = setup(LieKind::A, 4, 1, 2);
        assert!(!shape_maximality_test_a(&s, &crate::rootdata::rho(s.lie())).unwrap());
        let s = setup(LieKind::A, 5, 2, 3);
        let lpr = lambda_plus_rho(&s, &z(-2), &z(-2));
        assert!(shape_maximality_test_a(&s, &lpr).unwrap());
        assert!(!reducible_oracle(&s, &z(-2), &z(-2)).reducible);
        let s = setup(LieKind::A, 8, 2, 5);
        assert!(!shape_maximality_test_a(&s, &lambda_plus_rho(&s, &z(0), &z(0))).unwrap());
        let lpr = lambda_plus_rho(&s, &q(1, 3), &z(0));
        assert_eq!(shape_maximality_test_a(&s, &lpr), Err(Error::NonIntegralWeight));
    }

    #[test]
    fn evaluate_sets_agreement() {
        let s = setup(LieKind::A, 8, 2, 5);
        let v = evaluate(&s, &z(-2), &z(-2)).unwrap();
        assert_eq!((v.reducible, v.criterion, v.agree), (true, Some(true), Some(true)));
    }
}
