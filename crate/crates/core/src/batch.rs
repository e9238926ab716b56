//! Batch evaluation over many inputs.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! thread pool; without it, or with [`Execution::Sequential`], it runs on the
//! calling thread. Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;
use crate::ingest::{group_measurements, MeasurementTable};
use crate::measures::{entropy_exchange_residual, metrics, KnowledgeMetrics, MeasureSource};
use crate::model::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise the same
    /// as `Sequential`.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Like [`map`], stopping at an error. Which error is reported when several
/// items fail is only deterministic for sequential execution.
pub fn try_map<T, R, F>(exec: Execution, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

pub fn metrics_batch<S>(exec: Execution, sources: &[S]) -> Vec<KnowledgeMetrics>
where
    S: MeasureSource + Sync,
{
    map(exec, sources, |s| metrics(s))
}

/// Knowledge-exchange residuals for `(before, after)` pairs.
pub fn exchange_residuals(exec: Execution, pairs: &[(Partition, Partition)]) -> Result<Vec<f64>> {
    try_map(exec, pairs, |(before, after)| {
        entropy_exchange_residual(before, after)
    })
}

/// One point of a tolerance sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub tolerance: f64,
    pub partition: Partition,
    pub metrics: KnowledgeMetrics,
}

/// Groups one rater's column at every tolerance in `tolerances`.
pub fn tolerance_sweep(
    exec: Execution,
    table: &MeasurementTable,
    rater: &str,
    tolerances: &[f64],
) -> Result<Vec<SweepPoint>> {
    try_map(exec, tolerances, |&tolerance| {
        let partition = group_measurements(table, rater, tolerance)?;
        let metrics = metrics(&partition);
        Ok(SweepPoint {
            tolerance,
            partition,
            metrics,
        })
    })
}
