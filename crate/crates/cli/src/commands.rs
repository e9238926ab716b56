use std::sync::Arc;

use kmeasure::analysis::{additivity_contrast_report, lowest_entropy, ContrastReport};
use kmeasure::{
    load_dataset, pairwise_additivity_check, rank_raters, DatasetFormat, EvolutionModel,
    KnowledgeMetrics, ObjectSet, Partition, RaterRecord, VariableKind,
};
use serde::Serialize;

use crate::output::{listing, table, Envelope};
use crate::{DatasetArgs, DecomposeArgs, DynamicsArgs, Failure, Kind, PairArgs};

fn input(e: kmeasure::Error) -> Failure {
    Failure::Input(e.to_string())
}

struct Dataset {
    kind: &'static str,
    cardinality_label: &'static str,
    tolerance: Option<f64>,
    records: Vec<RaterRecord>,
}

fn load(
    rankings: Option<&std::path::Path>,
    partitions: Option<&std::path::Path>,
    tolerance: Option<f64>,
    raters: &[String],
) -> Result<Dataset, Failure> {
    let (path, format, kind, label) = match (rankings, partitions) {
        (Some(p), None) => {
            if tolerance.is_some() {
                return Err(Failure::Usage(
                    "--tolerance only applies to --partitions".into(),
                ));
            }
            (p, DatasetFormat::Rankings, "rankings", "|PS|")
        }
        (None, Some(p)) => (
            p,
            DatasetFormat::Table {
                tolerance: tolerance.unwrap_or(0.0),
            },
            "partitions",
            "W",
        ),
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --rankings or --partitions".into(),
            ))
        }
    };
    let mut records = load_dataset(path, format)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if !raters.is_empty() {
        if let Some(missing) = raters
            .iter()
            .find(|r| !records.iter().any(|rec| &rec.rater_id == *r))
        {
            return Err(Failure::Input(format!(
                "{}: no rater `{missing}`",
                path.display()
            )));
        }
        records.retain(|rec| raters.contains(&rec.rater_id));
    }
    Ok(Dataset {
        kind,
        cardinality_label: label,
        tolerance: match format {
            DatasetFormat::Table { tolerance } => Some(tolerance),
            DatasetFormat::Rankings => None,
        },
        records,
    })
}

fn load_args(a: &DatasetArgs) -> Result<Dataset, Failure> {
    load(
        a.rankings.as_deref(),
        a.partitions.as_deref(),
        a.tolerance,
        &a.rater,
    )
}

#[derive(Serialize)]
struct RaterMetrics<'a> {
    rater_id: &'a str,
    #[serde(flatten)]
    metrics: &'a KnowledgeMetrics,
}

#[derive(Serialize)]
struct DatasetPayload<'a> {
    input: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
    raters: Vec<RaterMetrics<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lowest_entropy: Option<&'a str>,
}

impl<'a> DatasetPayload<'a> {
    fn new(d: &'a Dataset, records: &'a [RaterRecord]) -> Self {
        DatasetPayload {
            input: d.kind,
            tolerance: d.tolerance,
            raters: records
                .iter()
                .map(|r| RaterMetrics {
                    rater_id: &r.rater_id,
                    metrics: &r.metrics,
                })
                .collect(),
            lowest_entropy: None,
        }
    }
}

pub fn measure(a: &DatasetArgs, env: &Envelope) -> Result<String, Failure> {
    let d = load_args(a)?;
    let payload = DatasetPayload::new(&d, &d.records);
    Ok(env.render("measure", &payload, |e| {
        let rows: Vec<Vec<String>> = d
            .records
            .iter()
            .map(|r| {
                let m = &r.metrics;
                vec![
                    r.rater_id.clone(),
                    m.n.to_string(),
                    m.cardinality.to_string(),
                    e.num(m.knowledge),
                    e.num(m.ignorance),
                    e.num(m.entropy),
                ]
            })
            .collect();
        table(
            &[
                "rater",
                "n",
                d.cardinality_label,
                "knowledge",
                "ignorance",
                "entropy",
            ],
            1,
            &rows,
        )
    }))
}

pub fn entropy(a: &DatasetArgs, env: &Envelope) -> Result<String, Failure> {
    let d = load_args(a)?;
    let lowest = lowest_entropy(&d.records).map(|r| r.rater_id.as_str());
    let mut payload = DatasetPayload::new(&d, &d.records);
    payload.lowest_entropy = lowest;
    Ok(env.render("entropy", &payload, |e| {
        let rows: Vec<Vec<String>> = d
            .records
            .iter()
            .map(|r| {
                vec![
                    r.rater_id.clone(),
                    r.metrics.n.to_string(),
                    r.metrics.cardinality.to_string(),
                    e.num(r.metrics.entropy),
                ]
            })
            .collect();
        let mut out = table(&["rater", "n", d.cardinality_label, "entropy"], 1, &rows);
        if let Some(id) = lowest {
            out.push_str(&format!("lowest entropy: {id}\n"));
        }
        out
    }))
}

pub fn rank(a: &DatasetArgs, env: &Envelope) -> Result<String, Failure> {
    let d = load_args(a)?;
    let ranked = rank_raters(d.records.clone()).map_err(input)?;
    let payload = DatasetPayload::new(&d, &ranked);
    Ok(env.render("rank", &payload, |e| {
        let rows: Vec<Vec<String>> = ranked
            .iter()
            .enumerate()
            .map(|(k, r)| {
                vec![
                    (k + 1).to_string(),
                    r.rater_id.clone(),
                    e.num(r.metrics.knowledge),
                    e.num(r.metrics.entropy),
                ]
            })
            .collect();
        table(&["rank", "rater", "knowledge", "entropy"], 2, &rows)
    }))
}

fn verdict(ok: bool, yes: &str, no: &str) -> String {
    if ok { yes } else { no }.to_string()
}

pub fn pair(a: &PairArgs, env: &Envelope) -> Result<String, Failure> {
    let [k_a, k_b] = a.k[..] else {
        return Err(Failure::Usage(format!(
            "give exactly two --k values, got {}",
            a.k.len()
        )));
    };
    let r = pairwise_additivity_check(k_a, k_b, a.n).map_err(input)?;
    Ok(env.render("additivity pair", &r, |e| {
        let n = r.n as f64;
        listing(&[
            ("n", r.n.to_string()),
            ("knowledge levels", e.nums(&r.k_values)),
            ("sum", e.num(r.k_sum)),
            ("implied W", e.num(r.implied_cardinality)),
            ("achievable W", format!("[{}, {}]", e.num(n), e.num(n * n))),
            ("result", verdict(r.feasible, "FEASIBLE", "INFEASIBLE")),
        ])
    }))
}

fn split_names(s: &str) -> Vec<String> {
    s.split(',').map(|t| t.trim().to_string()).collect()
}

fn decompose_source(a: &DecomposeArgs) -> Result<Partition, Failure> {
    if !a.class.is_empty() {
        let classes: Vec<Vec<String>> = a.class.iter().map(|c| split_names(c)).collect();
        let base = ObjectSet::from_names(classes.iter().flatten()).map_err(input)?;
        return Partition::from_classes(Arc::new(base), &classes).map_err(input);
    }
    let rater = a
        .rater
        .clone()
        .expect("clap requires --rater with a dataset");
    let d = load(
        a.rankings.as_deref(),
        a.partitions.as_deref(),
        a.tolerance,
        std::slice::from_ref(&rater),
    )?;
    Ok(d.records[0].source.partition())
}

#[derive(Serialize)]
struct DecomposePayload<'a> {
    partition: &'a Partition,
    blocks: &'a [Vec<String>],
    #[serde(flatten)]
    report: &'a ContrastReport,
}

pub fn decompose(a: &DecomposeArgs, env: &Envelope) -> Result<String, Failure> {
    if !a.class.is_empty() && (a.rater.is_some() || a.tolerance.is_some()) {
        return Err(Failure::Usage(
            "--rater and --tolerance need a dataset, not --class".into(),
        ));
    }
    let p = decompose_source(a)?;
    let blocks: Vec<Vec<String>> = a.block.iter().map(|b| split_names(b)).collect();
    let c = additivity_contrast_report(&p, &blocks).map_err(input)?;
    let payload = DecomposePayload {
        partition: &p,
        blocks: &blocks,
        report: &c,
    };
    Ok(env.render("additivity decompose", &payload, |e| {
        let k = &c.knowledge;
        let sh = &c.shannon;
        let blocks_text = blocks
            .iter()
            .map(|b| b.join(" "))
            .collect::<Vec<_>>()
            .join(" | ");
        listing(&[
            ("partition", p.to_string()),
            ("blocks", blocks_text),
            ("knowledge whole", e.num(k.k_whole.unwrap_or(f64::NAN))),
            ("knowledge blocks", e.nums(&k.k_values)),
            ("knowledge sum", e.num(k.k_sum)),
            ("knowledge gap", e.num(k.gap.unwrap_or(f64::NAN))),
            ("implied W", e.num(k.implied_cardinality)),
            (
                "knowledge",
                verdict(!k.gap_is_nonzero(), "ADDITIVE", "NOT ADDITIVE"),
            ),
            ("entropy whole", e.num(c.entropy_whole)),
            ("entropy blocks", e.nums(&c.entropy_blocks)),
            ("entropy sum", e.num(c.entropy_sum)),
            ("entropy gap", e.num(c.entropy_gap)),
            (
                "knowledge entropy",
                verdict(!c.entropy_gap_nonzero, "ADDITIVE", "NOT ADDITIVE"),
            ),
            ("shannon whole", e.num(sh.whole)),
            ("shannon between", e.num(sh.between)),
            ("shannon within", e.num(sh.within)),
            ("shannon residual", e.num(sh.residual)),
            ("shannon", verdict(sh.additive, "ADDITIVE", "NOT ADDITIVE")),
        ])
    }))
}

#[derive(Serialize)]
struct Inference {
    u: f64,
    v: f64,
}

#[derive(Serialize)]
struct DynamicsPayload {
    model: EvolutionModel,
    inferred: Vec<Inference>,
    predicted: Vec<Inference>,
}

pub fn dynamics(a: &DynamicsArgs, env: &Envelope) -> Result<String, Failure> {
    let kind = match a.kind {
        Kind::Knowledge => VariableKind::Knowledge,
        Kind::Ignorance => VariableKind::Ignorance,
    };
    let model = EvolutionModel::calibrate(a.u0, a.u1, kind).map_err(input)?;
    let inferred = a
        .at_u
        .iter()
        .map(|&u| model.infer_variable(u).map(|v| Inference { u, v }))
        .collect::<Result<Vec<_>, _>>()
        .map_err(input)?;
    let predicted = a
        .at_v
        .iter()
        .map(|&v| model.predict_uncertainty(v).map(|u| Inference { u, v }))
        .collect::<Result<Vec<_>, _>>()
        .map_err(input)?;
    let payload = DynamicsPayload {
        model,
        inferred,
        predicted,
    };
    Ok(env.render("dynamics", &payload, |e| {
        let var = match kind {
            VariableKind::Knowledge => "K",
            VariableKind::Ignorance => "I",
        };
        let mut out = listing(&[
            ("kind", format!("{:?}", kind).to_lowercase()),
            ("slope", e.num(model.slope())),
            ("intercept", e.num(model.intercept())),
            (
                "U range",
                format!("[{}, {}]", e.num(model.u_min()), e.num(model.u_max())),
            ),
        ]);
        for q in &payload.inferred {
            out.push_str(&format!("U = {}  ->  {var} = {}\n", e.num(q.u), e.num(q.v)));
        }
        for q in &payload.predicted {
            out.push_str(&format!("{var} = {}  ->  U = {}\n", e.num(q.v), e.num(q.u)));
        }
        out
    }))
}
