//! Parameter grids, sweeps and criterion-vs-oracle verification.
//!
//! Everything here is sequential and allocation-only; the `gvm` crate adds
//! a parallel sweep that reassembles rows in the same order.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{ExactScalar, Rational, SIGMA, TAU};
use crate::rootdata::{LieKind, ParabolicSetup};
use crate::verdict::{criterion, reducible_oracle, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    Cartesian,
    /// `(z1_values[i], z2_values[i])`.
    Diagonal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBlock {
    pub z1_values: Vec<ExactScalar>,
    pub z2_values: Vec<ExactScalar>,
    pub pairing: Pairing,
}

impl GridBlock {
    pub fn new(z1_values: Vec<ExactScalar>, z2_values: Vec<ExactScalar>, pairing: Pairing) -> Result<Self> {
        if pairing == Pairing::Diagonal && z1_values.len() != z2_values.len() {
            return Err(Error::DiagonalLengthMismatch { z1: z1_values.len(), z2: z2_values.len() });
        }
        Ok(GridBlock { z1_values, z2_values, pairing })
    }

    pub fn len(&self) -> usize {
        match self.pairing {
            Pairing::Cartesian => self.z1_values.len() * self.z2_values.len(),
            Pairing::Diagonal => self.z1_values.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points in `(z1 index, z2 index)` order.
    pub fn points(&self) -> impl Iterator<Item = (&ExactScalar, &ExactScalar)> + '_ {
        let cartesian = (self.pairing == Pairing::Cartesian).then(|| {
            self.z1_values.iter().flat_map(move |a| self.z2_values.iter().map(move |b| (a, b)))
        });
        let diagonal =
            (self.pairing == Pairing::Diagonal).then(|| self.z1_values.iter().zip(&self.z2_values));
        cartesian.into_iter().flatten().chain(diagonal.into_iter().flatten())
    }
}

/// An ordered union of grid blocks.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParameterGrid {
    pub blocks: Vec<GridBlock>,
}

impl ParameterGrid {
    pub fn len(&self) -> usize {
        self.blocks.iter().map(GridBlock::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> impl Iterator<Item = (&ExactScalar, &ExactScalar)> + '_ {
        self.blocks.iter().flat_map(GridBlock::points)
    }

    pub fn contains(&self, z1: &ExactScalar, z2: &ExactScalar) -> bool {
        self.points().any(|(a, b)| a == z1 && b == z2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenericOffset {
    None,
    PlusTau,
    MinusTau,
    PlusSigma,
}

impl GenericOffset {
    pub fn apply(self, z: &ExactScalar) -> ExactScalar {
        let one = Rational::from_integer(1);
        match self {
            GenericOffset::None => z.clone(),
            GenericOffset::PlusTau => z.clone().plus_symbol(TAU, one),
            GenericOffset::MinusTau => z.clone().plus_symbol(TAU, -one),
            GenericOffset::PlusSigma => z.clone().plus_symbol(SIGMA, one),
        }
    }
}

/// `lo, lo+step, …` up to and including `hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalRange {
    pub lo: Rational,
    pub hi: Rational,
    pub step: Rational,
}

impl RationalRange {
    pub fn values(&self) -> Result<Vec<ExactScalar>> {
        if self.step <= Rational::default() {
            return Err(Error::InvalidGridStep);
        }
        let mut out = Vec::new();
        let mut v = self.lo;
        while v <= self.hi {
            out.push(ExactScalar::from_rational(v));
            v += self.step;
        }
        Ok(out)
    }
}

/// Recipe for a [`ParameterGrid`]: one block over the rational range plus
/// `extra_values` on both axes, then one block per coupled offset pair over
/// the shifted rational range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub range: RationalRange,
    pub extra_values: Vec<ExactScalar>,
    pub coupled_offsets: Vec<(GenericOffset, GenericOffset)>,
    pub pairing: Pairing,
}

impl GridSpec {
    pub fn build(&self) -> Result<ParameterGrid> {
        let range = self.range.values()?;
        let mut axis = range.clone();
        axis.extend(self.extra_values.iter().cloned());
        let mut blocks = alloc::vec![GridBlock::new(axis.clone(), axis, self.pairing)?];
        for (o1, o2) in &self.coupled_offsets {
            blocks.push(GridBlock::new(
                range.iter().map(|z| o1.apply(z)).collect(),
                range.iter().map(|z| o2.apply(z)).collect(),
                self.pairing,
            )?);
        }
        Ok(ParameterGrid { blocks })
    }
}

/// Range `[-(n+2), 3]` in steps of 1/2 on each axis, extended by `1/3`,
/// `tau` and `sigma`, paired cartesian (which contains the diagonal
/// `z1 = z2`), plus the coupled points `(a+tau, b-tau)` over the range.
pub fn standard_grid_spec(setup: &ParabolicSetup) -> GridSpec {
    GridSpec {
        range: RationalRange {
            lo: Rational::from_integer(-(setup.n() as i64 + 2)),
            hi: Rational::from_integer(3),
            step: Rational::new(1, 2),
        },
        extra_values: alloc::vec![
            ExactScalar::ratio(1, 3),
            ExactScalar::symbol(TAU),
            ExactScalar::symbol(SIGMA),
        ],
        coupled_offsets: alloc::vec![(GenericOffset::PlusTau, GenericOffset::MinusTau)],
        pairing: Pairing::Cartesian,
    }
}

pub fn standard_grid(setup: &ParabolicSetup) -> ParameterGrid {
    standard_grid_spec(setup).build().expect("standard grid spec is well-formed")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointError {
    /// Position in grid order.
    pub index: usize,
    pub z1: ExactScalar,
    pub z2: ExactScalar,
    pub error: Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepSummary {
    pub points: usize,
    pub reducible: usize,
    pub irreducible: usize,
    pub mismatches: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub setup: ParabolicSetup,
    /// Verdicts in grid order; points that errored are left out and listed
    /// in `errors`.
    pub rows: Vec<Verdict>,
    pub errors: Vec<PointError>,
    pub summary: SweepSummary,
}

impl SweepReport {
    /// Assembles a report from per-point outcomes given in grid order.
    pub fn from_outcomes(
        setup: ParabolicSetup,
        outcomes: impl IntoIterator<Item = (ExactScalar, ExactScalar, Result<Verdict>)>,
    ) -> Self {
        let mut rows = Vec::new();
        let mut errors = Vec::new();
        let mut summary = SweepSummary::default();
        for (index, (z1, z2, outcome)) in outcomes.into_iter().enumerate() {
            summary.points += 1;
            match outcome {
                Ok(v) => {
                    if v.reducible {
                        summary.reducible += 1;
                    } else {
                        summary.irreducible += 1;
                    }
                    if v.agree == Some(false) {
                        summary.mismatches += 1;
                    }
                    rows.push(v);
                }
                Err(error) => {
                    summary.errors += 1;
                    errors.push(PointError { index, z1, z2, error });
                }
            }
        }
        SweepReport { setup, rows, errors, summary }
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Verdict> {
        self.rows.iter().filter(|v| v.agree == Some(false))
    }
}

pub type Criterion<'a> = &'a dyn Fn(&ParabolicSetup, &ExactScalar, &ExactScalar) -> Result<bool>;

/// Oracle plus criterion at one point.
pub fn evaluate_point(
    setup: &ParabolicSetup,
    z1: &ExactScalar,
    z2: &ExactScalar,
    check: Criterion<'_>,
) -> Result<Verdict> {
    let verdict = reducible_oracle(setup, z1, z2);
    Ok(verdict.with_criterion(check(setup, z1, z2)?))
}

pub fn sweep(setup: &ParabolicSetup, grid: &ParameterGrid) -> SweepReport {
    sweep_with(setup, grid, &criterion)
}

pub fn sweep_with(setup: &ParabolicSetup, grid: &ParameterGrid, check: Criterion<'_>) -> SweepReport {
    SweepReport::from_outcomes(
        *setup,
        grid.points()
            .map(|(a, b)| (a.clone(), b.clone(), evaluate_point(setup, a, b, check))),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MismatchReport {
    pub kind: LieKind,
    pub n_max: usize,
    pub setups_checked: usize,
    pub points_checked: usize,
    pub mismatches: Vec<Verdict>,
    pub errors: Vec<(ParabolicSetup, PointError)>,
}

impl MismatchReport {
    pub fn is_verified(&self) -> bool {
        self.mismatches.is_empty() && self.errors.is_empty()
    }
}

/// Sweeps the standard grid of every valid setup of `kind` up to `n_max`
/// and collects the points where the criterion and oracle disagree.
pub fn verify_family(kind: LieKind, n_max: usize) -> MismatchReport {
    verify_family_with(kind, n_max, &criterion)
}

pub fn verify_family_with(kind: LieKind, n_max: usize, check: Criterion<'_>) -> MismatchReport {
    let mut report = MismatchReport {
        kind,
        n_max,
        setups_checked: 0,
        points_checked: 0,
        mismatches: Vec::new(),
        errors: Vec::new(),
    };
    for setup in ParabolicSetup::enumerate(kind, n_max) {
        let sweep = sweep_with(&setup, &standard_grid(&setup), check);
        report.setups_checked += 1;
        report.points_checked += sweep.summary.points;
        report.mismatches.extend(sweep.mismatches().cloned());
        report.errors.extend(sweep.errors.into_iter().map(|e| (setup, e)));
    }
    report
}
