//! Measures of how finely a rater tells objects apart.
//!
//! A rater's judgments are either an equivalence [`Partition`] of an object
//! set ("these look the same, those differ") or a ties-permitted ranking
//! ([`WeakOrder`]). Both reduce to an uncertainty cardinality between `n`
//! (every object distinguished) and `n²` (none distinguished), from which
//! the crate derives a knowledge level, its complementary ignorance and a
//! knowledge entropy.
//!
//! ```
//! use kmeasure::{partition_from_labels, measures};
//!
//! let john = partition_from_labels([
//!     ("egg1", 60), ("egg2", 63), ("egg3", 63), ("egg4", 61), ("egg5", 61),
//! ])?;
//! assert_eq!(john.uncertainty_w(), 9);
//! let m = measures::metrics(&john);
//! assert!((m.knowledge - 0.6348).abs() < 5e-5);
//! assert!(m.identities_hold());
//! # Ok::<(), kmeasure::Error>(())
//! ```
//!
//! Modules:
//!
//! * [`model`]: object sets, partitions, weak orders, preference sequences
//! * [`measures`]: knowledge, ignorance, knowledge entropy
//! * [`dynamics`]: the log-linear uncertainty model and its calibration
//! * [`analysis`]: additivity checks, Shannon contrast, rater ranking
//! * [`ingest`]: ranking DSL, measurement tables, dataset files
//! * [`batch`]: data-parallel evaluation (rayon, behind the `parallel` feature)

pub mod analysis;
pub mod batch;
pub mod dynamics;
mod error;
pub mod ingest;
pub mod measures;
pub mod model;

pub use analysis::{
    additivity_contrast_report, decomposition_check, pairwise_additivity_check, rank_raters,
    shannon_entropy, AdditivityReport, ContrastReport, RaterRecord, RaterSource,
};
pub use batch::Execution;
pub use dynamics::{EvolutionModel, VariableKind};
pub use error::{Error, Result};
pub use ingest::{
    group_measurements, load_dataset, parse_ranking, parse_rankings, DatasetFormat,
    MeasurementTable, RankingExpression,
};
pub use measures::{metrics, KnowledgeMetrics, MeasureSource, SourceKind};
pub use model::{
    is_refinement, partition_from_labels, ObjectId, ObjectSet, Partition, PositionRange,
    PreferenceSequence, WeakOrder,
};
