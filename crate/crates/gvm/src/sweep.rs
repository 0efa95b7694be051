//! Parallel sweeps. Points are evaluated on a rayon pool and reassembled in
//! grid order, so the report is identical to the sequential one.

use std::env;

use gvm_core::harness::{
    evaluate_point, standard_grid, MismatchReport, ParameterGrid, SweepReport,
};
use gvm_core::verdict::criterion;
use gvm_core::{LieKind, ParabolicSetup};
use rayon::prelude::*;
use thiserror::Error;

pub const THREADS_VAR: &str = "GVM_THREADS";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThreadConfigError {
    #[error("{THREADS_VAR} must be a positive integer, got {0:?}")]
    Invalid(String),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Worker count from `GVM_THREADS`; `None` when the variable is unset.
pub fn threads_from_env() -> Result<Option<usize>, ThreadConfigError> {
    match env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(raw) => parse_threads(&raw).map(Some),
    }
}

pub fn parse_threads(raw: &str) -> Result<usize, ThreadConfigError> {
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(ThreadConfigError::Invalid(raw.to_string())),
    }
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, ThreadConfigError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| ThreadConfigError::Pool(e.to_string()))
}

fn sweep_in_pool(setup: &ParabolicSetup, grid: &ParameterGrid) -> SweepReport {
    let points: Vec<_> = grid.points().collect();
    let outcomes: Vec<_> = points
        .par_iter()
        .map(|&(a, b)| (a.clone(), b.clone(), evaluate_point(setup, a, b, &criterion)))
        .collect();
    SweepReport::from_outcomes(*setup, outcomes)
}

/// Sweep with at most `threads` workers (`None`: rayon's default).
pub fn par_sweep(
    setup: &ParabolicSetup,
    grid: &ParameterGrid,
    threads: Option<usize>,
) -> Result<SweepReport, ThreadConfigError> {
    Ok(pool(threads)?.install(|| sweep_in_pool(setup, grid)))
}

/// Parallel counterpart of `gvm_core::harness::verify_family`.
pub fn par_verify_family(
    kind: LieKind,
    n_max: usize,
    threads: Option<usize>,
) -> Result<MismatchReport, ThreadConfigError> {
    let setups = ParabolicSetup::enumerate(kind, n_max);
    let sweeps: Vec<SweepReport> = pool(threads)?.install(|| {
        setups.par_iter().map(|s| sweep_in_pool(s, &standard_grid(s))).collect()
    });
    let mut report = MismatchReport {
        kind,
        n_max,
        setups_checked: 0,
        points_checked: 0,
        mismatches: Vec::new(),
        errors: Vec::new(),
    };
    for sweep in sweeps {
        report.setups_checked += 1;
        report.points_checked += sweep.summary.points;
        report.mismatches.extend(sweep.mismatches().cloned());
        let setup = sweep.setup;
        report.errors.extend(sweep.errors.into_iter().map(|e| (setup, e)));
    }
    Ok(report)
}
