//! Exact scalars: a rational number plus a rational combination of named
//! generic symbols.
//!
//! A generic symbol stands for a complex parameter that satisfies no
//! integrality relation beyond the ones forced by linear combination. Two
//! scalars have an integral difference only when their generic parts agree
//! exactly, and only scalars sharing a generic part can be ordered.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

/// Name of a formal generic parameter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Cow<'static, str>);

impl Symbol {
    pub const fn new_static(name: &'static str) -> Self {
        Symbol(Cow::Borrowed(name))
    }

    pub fn new(name: impl Into<alloc::string::String>) -> Self {
        Symbol(Cow::Owned(name.into()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub const TAU: Symbol = Symbol::new_static("tau");
pub const SIGMA: Symbol = Symbol::new_static("sigma");

/// Residue of a scalar modulo the integers, as far as the reducibility
/// criteria care.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetClass {
    Integer,
    HalfInteger,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    rational: Rational,
    generic: BTreeMap<Symbol, Rational>,
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_rational(Rational::from_integer(value))
    }

    /// `numer / denom`, reduced. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(Rational::new(numer, denom))
    }

    pub fn from_rational(rational: Rational) -> Self {
        ExactScalar { rational, generic: BTreeMap::new() }
    }

    /// The bare generic symbol, coefficient one.
    pub fn symbol(sym: Symbol) -> Self {
        Self::zero().plus_symbol(sym, Rational::one())
    }

    /// Adds `coef * sym` to the generic part.
    pub fn plus_symbol(mut self, sym: Symbol, coef: Rational) -> Self {
        let entry = self.generic.entry(sym.clone()).or_insert_with(Rational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.generic.remove(&sym);
        }
        self
    }

    pub fn from_parts(
        rational: Rational,
        generic: impl IntoIterator<Item = (Symbol, Rational)>,
    ) -> Self {
        generic
            .into_iter()
            .fold(Self::from_rational(rational), |acc, (sym, coef)| acc.plus_symbol(sym, coef))
    }

    pub fn rational_part(&self) -> Rational {
        self.rational
    }

    pub fn generic_part(&self) -> &BTreeMap<Symbol, Rational> {
        &self.generic
    }

    pub fn is_rational(&self) -> bool {
        self.generic.is_empty()
    }

    /// The value as a rational, if the generic part is empty.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then_some(self.rational)
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.rational.is_integer()
    }

    pub fn same_generic_part(&self, other: &Self) -> bool {
        self.generic == other.generic
    }

    /// `self - other ∈ ℤ`.
    pub fn sub_is_integer(&self, other: &Self) -> bool {
        self.same_generic_part(other) && (self.rational - other.rational).is_integer()
    }

    /// `self + other ∈ ℤ`.
    pub fn sum_is_integer(&self, other: &Self) -> bool {
        self.generic.len() == other.generic.len()
            && self
                .generic
                .iter()
                .all(|(sym, c)| other.generic.get(sym).is_some_and(|d| *c + *d == Rational::zero()))
            && (self.rational + other.rational).is_integer()
    }

    pub fn coset_class(&self) -> CosetClass {
        if !self.is_rational() {
            CosetClass::Other
        } else if self.rational.is_integer() {
            CosetClass::Integer
        } else if (self.rational * Rational::from_integer(2)).is_integer() {
            CosetClass::HalfInteger
        } else {
            CosetClass::Other
        }
    }

    /// Orders two scalars that share a generic part.
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        if self.same_generic_part(other) {
            Ok(self.rational.cmp(&other.rational))
        } else {
            Err(Error::IncomparableScalars)
        }
    }

    /// `self ∈ base + step·ℤ≥0` (or `ℤ>0` when `strict`). Always false for
    /// scalars with a generic part.
    pub fn in_progression(&self, base: Rational, step: Rational, strict: bool) -> bool {
        let Some(value) = self.as_rational() else {
            return false;
        };
        let offset = (value - base) / step;
        offset.is_integer() && if strict { offset.is_positive() } else { !offset.is_negative() }
    }

    /// Strict `self > bound` for rational scalars; false otherwise.
    pub fn rational_gt(&self, bound: Rational) -> bool {
        self.as_rational().is_some_and(|v| v > bound)
    }

    pub fn scale(&self, factor: Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        ExactScalar {
            rational: self.rational * factor,
            generic: self.generic.iter().map(|(s, c)| (s.clone(), *c * factor)).collect(),
        }
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(value: i64) -> Self {
        Self::from_int(value)
    }
}

impl From<Rational> for ExactScalar {
    fn from(value: Rational) -> Self {
        Self::from_rational(value)
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;

    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let start = ExactScalar { rational: self.rational + rhs.rational, generic: self.generic.clone() };
        rhs.generic.iter().fold(start, |acc, (s, c)| acc.plus_symbol(s.clone(), *c))
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;

    fn add(self, rhs: ExactScalar) -> ExactScalar {
        &self + &rhs
    }
}

impl Add<Rational> for &ExactScalar {
    type Output = ExactScalar;

    fn add(self, rhs: Rational) -> ExactScalar {
        ExactScalar { rational: self.rational + rhs, generic: self.generic.clone() }
    }
}

impl Add<Rational> for ExactScalar {
    type Output = ExactScalar;

    fn add(mut self, rhs: Rational) -> ExactScalar {
        self.rational += rhs;
        self
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        ExactScalar {
            rational: -self.rational,
            generic: self.generic.iter().map(|(s, c)| (s.clone(), -*c)).collect(),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;

    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self + &(-rhs)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;

    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        &self - &rhs
    }
}

impl Mul<Rational> for &ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: Rational) -> ExactScalar {
        self.scale(rhs)
    }
}

impl Mul<Rational> for ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: Rational) -> ExactScalar {
        self.scale(rhs)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `a`, `a/b`, `a/b+tau`, `-1/2*sigma`, `3+2*tau-sigma`, ...
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.rational.is_zero() || self.generic.is_empty() {
            write_rational(f, self.rational)?;
            wrote = true;
        }
        for (sym, coef) in &self.generic {
            let magnitude = coef.abs();
            if coef.is_negative() {
                f.write_str("-")?;
            } else if wrote {
                f.write_str("+")?;
            }
            if !magnitude.is_one() {
                write_rational(f, magnitude)?;
                f.write_str("*")?;
            }
            write!(f, "{sym}")?;
            wrote = true;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::ratio(n, d)
    }

    fn tau() -> ExactScalar {
        ExactScalar::symbol(TAU)
    }

    #[test]
    fn sub_is_integer_examples() {
        assert!(q(3, 2).sub_is_integer(&q(1, 2)));
        assert!(!q(1, 3).sub_is_integer(&q(0, 1)));
        assert!((tau() + Rational::new(3, 2)).sub_is_integer(&(tau() + Rational::new(1, 2))));
        assert!(!(tau() + Rational::new(1, 2)).sub_is_integer(&tau()));
        assert!(!(tau() + Rational::new(1, 2)).sub_is_integer(&q(1, 2)));
    }

    #[test]
    fn sum_is_integer_examples() {
        assert!(q(1, 3).sum_is_integer(&q(2, 3)));
        assert!(tau().sum_is_integer(&(-tau() + Rational::from_integer(2))));
        assert!(!q(1, 2).sum_is_integer(&q(1, 4)));
        assert!(!tau().sum_is_integer(&tau()));
    }

    #[test]
    fn coset_class_examples() {
        assert_eq!(ExactScalar::from_int(5).coset_class(), CosetClass::Integer);
        assert_eq!(q(-7, 2).coset_class(), CosetClass::HalfInteger);
        assert_eq!((tau() + Rational::new(1, 3)).coset_class(), CosetClass::Other);
        assert_eq!(q(1, 3).coset_class(), CosetClass::Other);
        assert_eq!(tau().coset_class(), CosetClass::Other);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(q(3, 2).compare(&q(1, 2)), Ok(Ordering::Greater));
        let t1 = tau() + Rational::one();
        assert_eq!(t1.compare(&t1.clone()), Ok(Ordering::Equal));
        assert_eq!(tau().compare(&ExactScalar::symbol(SIGMA)), Err(Error::IncomparableScalars));
    }

    #[test]
    fn canonical_form() {
        let s = tau().plus_symbol(TAU, -Rational::one());
        assert!(s.is_rational());
        assert_eq!(s, ExactScalar::zero());
        assert_eq!(q(2, 4), q(-1, -2));
        assert_eq!(q(2, 4).rational_part(), Rational::new(1, 2));
        assert_eq!(*q(3, -6).rational_part().denom(), 2);
        assert_eq!((tau() - tau()).generic_part().len(), 0);
        assert_eq!(tau().scale(Rational::zero()), ExactScalar::zero());
    }

    #[test]
    fn progression_membership() {
        let half = Rational::new(1, 2);
        let base = Rational::from_integer(-2);
        assert!(q(-3, 2).in_progression(base, half, false));
        assert!(q(-2, 1).in_progression(base, half, false));
        assert!(!q(-2, 1).in_progression(base, half, true));
        assert!(!q(-5, 2).in_progression(base, half, false));
        assert!(!q(-3, 2).in_progression(base, Rational::one(), false));
        assert!(!tau().in_progression(base, half, false));
    }

    #[test]
    fn display() {
        assert_eq!(q(-5, 2).to_string(), "-5/2");
        assert_eq!(ExactScalar::from_int(3).to_string(), "3");
        assert_eq!(ExactScalar::zero().to_string(), "0");
        assert_eq!(tau().to_string(), "tau");
        assert_eq!((-tau()).to_string(), "-tau");
        assert_eq!((tau() + Rational::new(1, 2)).to_string(), "1/2+tau");
        let s = q(-1, 3)
            .plus_symbol(SIGMA, Rational::new(-3, 2))
            .plus_symbol(TAU, Rational::from_integer(2));
        assert_eq!(s.to_string(), "-1/3-3/2*sigma+2*tau");
    }
}
