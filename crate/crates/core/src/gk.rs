//! Gelfand–Kirillov dimension of the simple highest weight module `L(λ)`
//! from `λ+ρ`, for types A and D.
//!
//! Entries of `λ+ρ` are grouped into maximal classes related by integral
//! differences (type A) or integral differences or sums (type D). Each
//! class contributes an RS-shape statistic that is subtracted from the
//! number of positive roots.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{CosetClass, ExactScalar};
use crate::rootdata::{lambda_plus_rho, LieKind, LieType, ParabolicSetup, WeightVector};
use crate::tableaux::ScalarSequence;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassDecomposition {
    /// All classes, ordered by first appearance; each keeps the original
    /// entry order.
    pub classes: Vec<ScalarSequence>,
    /// Type D only: the class whose entries are integers.
    pub integer_class: Option<ScalarSequence>,
    /// Type D only: the class whose entries lie in `1/2 + ℤ`.
    pub half_class: Option<ScalarSequence>,
    /// Type D only: every remaining class.
    pub other_classes: Vec<ScalarSequence>,
}

fn related(kind: LieKind, a: &ExactScalar, b: &ExactScalar) -> bool {
    match kind {
        LieKind::A => a.sub_is_integer(b),
        LieKind::D => a.sub_is_integer(b) || a.sum_is_integer(b),
    }
}

pub fn partition_classes(x: &[ExactScalar], kind: LieKind) -> ClassDecomposition {
    let mut classes: Vec<Vec<ExactScalar>> = Vec::new();
    for entry in x {
        match classes.iter_mut().find(|c| related(kind, &c[0], entry)) {
            Some(class) => class.push(entry.clone()),
            None => classes.push(alloc::vec![entry.clone()]),
        }
    }
    let classes: Vec<ScalarSequence> = classes.into_iter().map(ScalarSequence::new).collect();
    let mut out = ClassDecomposition { classes: classes.clone(), ..Default::default() };
    if kind == LieKind::D {
        for class in classes {
            match class[0].coset_class() {
                CosetClass::Integer => out.integer_class = Some(class),
                CosetClass::HalfInteger => out.half_class = Some(class),
                CosetClass::Other => out.other_classes.push(class),
            }
        }
    }
    out
}

/// Splits `x` into the entries with an integral difference to the first
/// entry (`y`) and the rest (`z`), and returns `y` followed by the negation
/// of `z` reversed.
pub fn tilde(x: &[ExactScalar]) -> ScalarSequence {
    let Some(first) = x.first() else {
        return ScalarSequence::default();
    };
    let (y, z): (Vec<&ExactScalar>, Vec<&ExactScalar>) =
        x.iter().partition(|e| e.sub_is_integer(first));
    let out: ScalarSequence =
        y.into_iter().cloned().chain(z.into_iter().rev().map(|e| -e)).collect();
    debug_assert!(out.iter().all(|e| e.same_generic_part(first)));
    out
}

fn check_len(lpr: &WeightVector, lie: LieType) -> Result<()> {
    if lpr.len() != lie.n() {
        return Err(Error::LengthMismatch { expected: lie.n(), found: lpr.len() });
    }
    Ok(())
}

/// GK dimension of `L(λ)` from `λ+ρ`, valid for any weight.
pub fn gk_dimension_raw(lpr: &WeightVector, lie: LieType) -> Result<usize> {
    check_len(lpr, lie)?;
    let total = lie.positive_root_count();
    let decomposition = partition_classes(lpr.entries(), lie.kind());
    let deficit = match lie.kind() {
        LieKind::A => decomposition.classes.iter().map(|c| c.f_a()).sum::<Result<usize>>()?,
        LieKind::D => {
            let doubled = [&decomposition.integer_class, &decomposition.half_class]
                .into_iter()
                .flatten()
                .map(|c| c.minus_double().f_d())
                .sum::<Result<usize>>()?;
            let rest = decomposition
                .other_classes
                .iter()
                .map(|c| tilde(c).f_a())
                .sum::<Result<usize>>()?;
            doubled + rest
        }
    };
    Ok(total - deficit)
}

/// GK dimension through the integral-weight formula, which reads the RS
/// shape of the whole of `λ+ρ` (type A) or of its doubling (type D).
///
/// Returns [`Error::NonIntegralWeight`] unless every pair of entries has an
/// integral difference (type A) or every entry lies in `ℤ` or every entry
/// lies in `1/2 + ℤ` (type D).
pub fn gk_dimension_integral(lpr: &WeightVector, lie: LieType) -> Result<usize> {
    check_len(lpr, lie)?;
    let entries = lpr.entries();
    let seq = ScalarSequence::new(entries.to_vec());
    match lie.kind() {
        LieKind::A => {
            if entries.iter().any(|e| !e.sub_is_integer(&entries[0])) {
                return Err(Error::NonIntegralWeight);
            }
            Ok(lie.positive_root_count() - seq.f_a()?)
        }
        LieKind::D => {
            let all = |c| entries.iter().all(|e| e.coset_class() == c);
            if !(all(CosetClass::Integer) || all(CosetClass::HalfInteger)) {
                return Err(Error::NonIntegralWeight);
            }
            Ok(lie.positive_root_count() - seq.minus_double().f_d()?)
        }
    }
}

/// GK dimension of `L(z1·ξ_p + z2·ξ_q)`.
pub fn gk_dimension(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> usize {
    gk_dimension_raw(&lambda_plus_rho(setup, z1, z2), setup.lie())
        .expect("classes of a well-formed weight are internally comparable")
}
