//! Knowledge, ignorance and knowledge entropy.
//!
//! All three measures are functions of the object count `n` and an
//! uncertainty cardinality `W` with `n <= W <= n²`:
//!
//! * knowledge `K = ln(n²/W) / ln n`, in `[0, 1]`
//! * ignorance `I = ln(W/n) / ln n`, in `[0, 1]`
//! * knowledge entropy `S = ln W / ln n`, in `[1, 2]`
//!
//! For a [`Partition`] the cardinality is the class-size sum `W`; for a
//! [`PreferenceSequence`] it is `|PS|`. Each measure is evaluated from its
//! own formula so that `K + I = 1` and `S = I + 1` can be checked rather
//! than assumed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Partition, PreferenceSequence};

/// Tolerance for the algebraic identities between measures.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// `ln(n²/W) / ln n`.
pub fn knowledge(n: usize, cardinality: u64) -> f64 {
    let n = n as f64;
    (n * n / cardinality as f64).ln() / n.ln()
}

/// `ln(W/n) / ln n`.
pub fn ignorance(n: usize, cardinality: u64) -> f64 {
    let n = n as f64;
    (cardinality as f64 / n).ln() / n.ln()
}

/// `ln W / ln n`.
pub fn knowledge_entropy(n: usize, cardinality: u64) -> f64 {
    (cardinality as f64).ln() / (n as f64).ln()
}

/// Which kind of data a measurement was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceKind {
    PartitionBased,
    PreferenceBased,
}

/// Anything that carries an object count and an uncertainty cardinality.
pub trait MeasureSource {
    fn object_count(&self) -> usize;
    fn cardinality(&self) -> u64;
    fn source_kind(&self) -> SourceKind;

    fn knowledge(&self) -> f64 {
        knowledge(self.object_count(), self.cardinality())
    }

    fn ignorance(&self) -> f64 {
        ignorance(self.object_count(), self.cardinality())
    }

    fn knowledge_entropy(&self) -> f64 {
        knowledge_entropy(self.object_count(), self.cardinality())
    }
}

impl MeasureSource for Partition {
    fn object_count(&self) -> usize {
        self.n()
    }

    fn cardinality(&self) -> u64 {
        self.uncertainty_w()
    }

    fn source_kind(&self) -> SourceKind {
        SourceKind::PartitionBased
    }
}

impl MeasureSource for PreferenceSequence {
    fn object_count(&self) -> usize {
        self.n()
    }

    fn cardinality(&self) -> u64 {
        PreferenceSequence::cardinality(self)
    }

    fn source_kind(&self) -> SourceKind {
        SourceKind::PreferenceBased
    }
}

/// Knowledge of a partition.
pub fn knowledge_of_partition(p: &Partition) -> f64 {
    p.knowledge()
}

pub fn ignorance_of_partition(p: &Partition) -> f64 {
    p.ignorance()
}

pub fn knowledge_entropy_of_partition(p: &Partition) -> f64 {
    p.knowledge_entropy()
}

pub fn knowledge_of_ps(ps: &PreferenceSequence) -> f64 {
    ps.knowledge()
}

pub fn ignorance_of_ps(ps: &PreferenceSequence) -> f64 {
    ps.ignorance()
}

pub fn entropy_of_ps(ps: &PreferenceSequence) -> f64 {
    ps.knowledge_entropy()
}

/// All measures of one source, with the residuals of the identities that
/// tie them together.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KnowledgeMetrics {
    pub n: usize,
    pub cardinality: u64,
    pub knowledge: f64,
    pub ignorance: f64,
    pub entropy: f64,
    pub source_kind: SourceKind,
    /// `|K + I - 1|`
    pub complement_residual: f64,
    /// `|S - I - 1|`
    pub entropy_residual: f64,
}

impl KnowledgeMetrics {
    /// True when both identity residuals are below [`IDENTITY_TOLERANCE`].
    pub fn identities_hold(&self) -> bool {
        self.complement_residual < IDENTITY_TOLERANCE && self.entropy_residual < IDENTITY_TOLERANCE
    }

    /// Field-by-field comparison that ignores the source kind, with exact
    /// integers and `tol` on reals.
    pub fn agrees_with(&self, other: &KnowledgeMetrics, tol: f64) -> bool {
        self.n == other.n
            && self.cardinality == other.cardinality
            && (self.knowledge - other.knowledge).abs() <= tol
            && (self.ignorance - other.ignorance).abs() <= tol
            && (self.entropy - other.entropy).abs() <= tol
    }
}

pub fn metrics<S: MeasureSource + ?Sized>(source: &S) -> KnowledgeMetrics {
    let n = source.object_count();
    let cardinality = source.cardinality();
    let k = knowledge(n, cardinality);
    let i = ignorance(n, cardinality);
    let s = knowledge_entropy(n, cardinality);
    KnowledgeMetrics {
        n,
        cardinality,
        knowledge: k,
        ignorance: i,
        entropy: s,
        source_kind: source.source_kind(),
        complement_residual: (k + i - 1.0).abs(),
        entropy_residual: (s - i - 1.0).abs(),
    }
}

/// Knowledge gained and knowledge entropy lost between two states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyExchange {
    /// `K(after) - K(before)`
    pub knowledge_gain: f64,
    /// `S(before) - S(after)`
    pub entropy_drop: f64,
    /// `knowledge_gain - entropy_drop`; zero up to rounding.
    pub residual: f64,
}

/// Compares two partitions of the same objects: the gain in knowledge must
/// equal the drop in knowledge entropy.
pub fn entropy_exchange(before: &Partition, after: &Partition) -> Result<EntropyExchange> {
    if !before.base().same_members(after.base()) {
        return Err(Error::Input(
            "partitions are defined over different object sets".into(),
        ));
    }
    let knowledge_gain = after.knowledge() - before.knowledge();
    let entropy_drop = before.knowledge_entropy() - after.knowledge_entropy();
    Ok(EntropyExchange {
        knowledge_gain,
        entropy_drop,
        residual: knowledge_gain - entropy_drop,
    })
}

/// `[K(after) - K(before)] - [S(before) - S(after)]`.
pub fn entropy_exchange_residual(before: &Partition, after: &Partition) -> Result<f64> {
    entropy_exchange(before, after).map(|e| e.residual)
}
