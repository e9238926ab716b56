//! Additivity checks, the Shannon-entropy contrast and rater comparison.
//!
//! The knowledge measure is not additive in two senses, and both are
//! exposed here:
//!
//! * [`pairwise_additivity_check`]: the sum of two raters' knowledge levels
//!   generally corresponds to no achievable uncertainty `W` in `[n, n²]`.
//! * [`decomposition_check`]: a rater's knowledge on a whole set differs
//!   from the sum of their knowledge on the blocks of a split of that set.
//!
//! [`additivity_contrast_report`] puts the second check next to the
//! chain-rule decomposition of Shannon entropy, which does add up.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::{self, metrics, KnowledgeMetrics, MeasureSource, IDENTITY_TOLERANCE};
use crate::model::{ObjectSet, Partition, WeakOrder};

/// Result of comparing a sum of knowledge levels against what a single
/// measurement could produce.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdditivityReport {
    /// Object count the summed level is interpreted against.
    pub n: usize,
    /// The individual knowledge levels being added.
    pub k_values: Vec<f64>,
    pub k_sum: f64,
    /// The `W` for which `K(W) = k_sum` at this `n`, i.e. `n^(2 - k_sum)`.
    pub implied_cardinality: f64,
    /// Whether `implied_cardinality` lies in `[n, n²]`.
    pub feasible: bool,
    /// Knowledge on the whole set, for decompositions.
    pub k_whole: Option<f64>,
    /// `k_sum - k_whole`, for decompositions.
    pub gap: Option<f64>,
}

impl AdditivityReport {
    fn new(n: usize, k_values: Vec<f64>) -> Self {
        let k_sum: f64 = k_values.iter().sum();
        let implied_cardinality = implied_cardinality(n, k_sum);
        let nf = n as f64;
        let feasible = implied_cardinality >= nf * (1.0 - IDENTITY_TOLERANCE)
            && implied_cardinality <= nf * nf * (1.0 + IDENTITY_TOLERANCE);
        AdditivityReport {
            n,
            k_values,
            k_sum,
            implied_cardinality,
            feasible,
            k_whole: None,
            gap: None,
        }
    }

    /// True when the whole-versus-parts gap is distinguishable from zero.
    pub fn gap_is_nonzero(&self) -> bool {
        self.gap.is_some_and(|g| g.abs() > IDENTITY_TOLERANCE)
    }
}

/// The cardinality `W` at which the knowledge measure over `n` objects equals `k`.
pub fn implied_cardinality(n: usize, k: f64) -> f64 {
    (n as f64).powf(2.0 - k)
}

/// Asks whether `k_a + k_b` is the knowledge level of any partition of `n` objects.
pub fn pairwise_additivity_check(k_a: f64, k_b: f64, n: usize) -> Result<AdditivityReport> {
    if n < 2 {
        return Err(Error::Domain(format!("need at least 2 objects, got {n}")));
    }
    for k in [k_a, k_b] {
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::Domain(format!(
                "knowledge level must lie in [0, 1], got {k}"
            )));
        }
    }
    Ok(AdditivityReport::new(n, vec![k_a, k_b]))
}

/// Resolves named blocks to base positions and checks they split the base.
fn block_positions<S: AsRef<str>>(base: &ObjectSet, blocks: &[Vec<S>]) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; base.len()];
    let mut out = Vec::with_capacity(blocks.len());
    for block in blocks {
        if block.len() < 2 {
            return Err(Error::Domain(format!(
                "every block needs at least 2 objects, got a block of {}",
                block.len()
            )));
        }
        let mut positions = Vec::with_capacity(block.len());
        for name in block {
            let name = name.as_ref();
            let i = base
                .position(name)
                .ok_or_else(|| Error::Input(format!("unknown object `{name}` in block")))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Input(format!(
                    "object `{name}` appears in more than one block"
                )));
            }
            positions.push(i);
        }
        out.push(positions);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::Input(format!(
            "object `{}` is not covered by any block",
            base.members()[i]
        )));
    }
    Ok(out)
}

/// A partition together with its restrictions to the blocks of a split.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub whole: Partition,
    pub blocks: Vec<Vec<usize>>,
    pub parts: Vec<Partition>,
}

impl Decomposition {
    pub fn new<S: AsRef<str>>(p: &Partition, blocks: &[Vec<S>]) -> Result<Self> {
        let blocks = block_positions(p.base(), blocks)?;
        let parts = blocks
            .iter()
            .map(|b| p.restrict(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            whole: p.clone(),
            blocks,
            parts,
        })
    }

    pub fn report(&self) -> AdditivityReport {
        let ks = self.parts.iter().map(Partition::knowledge).collect();
        let mut report = AdditivityReport::new(self.whole.n(), ks);
        let k_whole = self.whole.knowledge();
        report.gap = Some(report.k_sum - k_whole);
        report.k_whole = Some(k_whole);
        report
    }
}

/// Compares knowledge on the whole set with the sum of knowledge on each block.
pub fn decomposition_check<S: AsRef<str>>(
    p: &Partition,
    blocks: &[Vec<S>],
) -> Result<AdditivityReport> {
    Decomposition::new(p, blocks).map(|d| d.report())
}

/// `-Σ p ln p` over a probability vector.
pub fn shannon_entropy(weights: &[f64]) -> Result<f64> {
    if weights.is_empty() {
        return Err(Error::Input("no weights given".into()));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
        return Err(Error::Input(format!(
            "weights must be finite and positive, got {w}"
        )));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::Input(format!("weights must sum to 1, got {total}")));
    }
    let h: f64 = weights.iter().map(|p| p * p.ln()).sum();
    // keeps a certain outcome at +0 rather than -0
    Ok(0.0 - h)
}

/// Relative class sizes of a partition, in canonical class order.
pub fn class_distribution(p: &Partition) -> Vec<f64> {
    let n = p.n() as f64;
    p.classes().iter().map(|c| c.len() as f64 / n).collect()
}

/// Chain-rule decomposition of the Shannon entropy of class frequencies:
/// `H(whole) = H(block weights) + Σ_b w_b H(classes within b)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShannonDecomposition {
    /// Entropy of the class distribution of the partition refined by the
    /// blocks (equal to the partition itself when no class straddles blocks).
    pub whole: f64,
    /// Entropy of the block weights.
    pub between: f64,
    pub block_weights: Vec<f64>,
    pub block_entropies: Vec<f64>,
    /// `Σ_b w_b H_b`
    pub within: f64,
    /// `whole - (between + within)`
    pub residual: f64,
    pub additive: bool,
}

/// Knowledge entropy and Shannon entropy, each compared whole-versus-parts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContrastReport {
    pub knowledge: AdditivityReport,
    pub entropy_whole: f64,
    pub entropy_blocks: Vec<f64>,
    pub entropy_sum: f64,
    /// `entropy_sum - entropy_whole`
    pub entropy_gap: f64,
    pub entropy_gap_nonzero: bool,
    pub shannon: ShannonDecomposition,
}

pub fn additivity_contrast_report<S: AsRef<str>>(
    p: &Partition,
    blocks: &[Vec<S>],
) -> Result<ContrastReport> {
    let d = Decomposition::new(p, blocks)?;
    let knowledge = d.report();

    let entropy_whole = p.knowledge_entropy();
    let entropy_blocks: Vec<f64> = d.parts.iter().map(Partition::knowledge_entropy).collect();
    let entropy_sum: f64 = entropy_blocks.iter().sum();
    let entropy_gap = entropy_sum - entropy_whole;

    let block_partition = Partition::from_class_indices(Arc::clone(p.base()), d.blocks.clone())?;
    let refined = p.meet(&block_partition)?;
    let n = p.n() as f64;
    let block_weights: Vec<f64> = d.blocks.iter().map(|b| b.len() as f64 / n).collect();
    let block_entropies = d
        .parts
        .iter()
        .map(|part| shannon_entropy(&class_distribution(part)))
        .collect::<Result<Vec<_>>>()?;
    let whole = shannon_entropy(&class_distribution(&refined))?;
    let between = shannon_entropy(&block_weights)?;
    let within: f64 = block_weights
        .iter()
        .zip(&block_entropies)
        .map(|(w, h)| w * h)
        .sum();
    let residual = whole - (between + within);

    Ok(ContrastReport {
        knowledge,
        entropy_whole,
        entropy_blocks,
        entropy_sum,
        entropy_gap,
        entropy_gap_nonzero: entropy_gap.abs() > IDENTITY_TOLERANCE,
        shannon: ShannonDecomposition {
            whole,
            between,
            block_weights,
            block_entropies,
            within,
            residual,
            additive: residual.abs() <= IDENTITY_TOLERANCE,
        },
    })
}

/// What a rater supplied.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum RaterSource {
    Partition(Partition),
    WeakOrder(WeakOrder),
}

impl RaterSource {
    pub fn base(&self) -> &Arc<ObjectSet> {
        match self {
            RaterSource::Partition(p) => p.base(),
            RaterSource::WeakOrder(w) => w.base(),
        }
    }

    /// The equivalence classes the rater drew: a partition as-is, or the
    /// tie-groups of a ranking.
    pub fn partition(&self) -> Partition {
        match self {
            RaterSource::Partition(p) => p.clone(),
            RaterSource::WeakOrder(w) => w.tie_partition(),
        }
    }

    /// Partitions are measured through `W`, rankings through their
    /// preference sequence.
    pub fn metrics(&self) -> KnowledgeMetrics {
        match self {
            RaterSource::Partition(p) => metrics(p),
            RaterSource::WeakOrder(w) => metrics(&w.preference_sequence()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RaterRecord {
    pub rater_id: String,
    pub source: RaterSource,
    pub metrics: KnowledgeMetrics,
}

impl RaterRecord {
    pub fn new(rater_id: impl Into<String>, source: RaterSource) -> Self {
        let metrics = source.metrics();
        RaterRecord {
            rater_id: rater_id.into(),
            source,
            metrics,
        }
    }

    pub fn from_partition(rater_id: impl Into<String>, p: Partition) -> Self {
        RaterRecord::new(rater_id, RaterSource::Partition(p))
    }

    pub fn from_weak_order(rater_id: impl Into<String>, w: WeakOrder) -> Self {
        RaterRecord::new(rater_id, RaterSource::WeakOrder(w))
    }
}

/// Checks that rater ids are unique and that all records cover the same objects.
pub fn check_comparable(records: &[RaterRecord]) -> Result<()> {
    let mut ids = HashSet::new();
    for r in records {
        if !ids.insert(r.rater_id.as_str()) {
            return Err(Error::Input(format!("duplicate rater id `{}`", r.rater_id)));
        }
    }
    if let Some((first, rest)) = records.split_first() {
        if let Some(r) = rest
            .iter()
            .find(|r| !r.source.base().same_members(first.source.base()))
        {
            return Err(Error::Input(format!(
                "raters `{}` and `{}` judged different object sets",
                first.rater_id, r.rater_id
            )));
        }
    }
    Ok(())
}

fn by_knowledge_desc(a: &RaterRecord, b: &RaterRecord) -> Ordering {
    b.metrics
        .knowledge
        .total_cmp(&a.metrics.knowledge)
        .then_with(|| a.rater_id.cmp(&b.rater_id))
}

/// Sorts raters from most to least knowledge; equal levels fall back to
/// rater id order.
pub fn rank_raters(mut records: Vec<RaterRecord>) -> Result<Vec<RaterRecord>> {
    check_comparable(&records)?;
    records.sort_by(by_knowledge_desc);
    Ok(records)
}

/// The rater with the lowest knowledge entropy (first by id on ties).
pub fn lowest_entropy(records: &[RaterRecord]) -> Option<&RaterRecord> {
    records.iter().min_by(|a, b| {
        a.metrics
            .entropy
            .total_cmp(&b.metrics.entropy)
            .then_with(|| a.rater_id.cmp(&b.rater_id))
    })
}

/// Knowledge of a partition restricted to a named subset of its objects.
pub fn knowledge_on_subset<S: AsRef<str>>(p: &Partition, subset: &[S]) -> Result<f64> {
    let positions = subset
        .iter()
        .map(|s| {
            p.base()
                .position(s.as_ref())
                .ok_or_else(|| Error::Input(format!("unknown object `{}`", s.as_ref())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(measures::knowledge_of_partition(&p.restrict(&positions)?))
}
