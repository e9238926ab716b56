//! Reading rankings and measurement tables.
//!
//! Rankings use a small DSL where `>` is strict preference and `~` is
//! indifference:
//!
//! ```text
//! ranking := group ( '>' group )*
//! group   := id ( '~' id )*
//! ```
//!
//! Whitespace around tokens is ignored. A rankings file holds one
//! `rater_id: <ranking>` per line; `#` starts a comment line.
//!
//! Measurement tables are delimiter-separated text with a header
//! `object,<rater1>,<rater2>,...` and one row of numbers per object. A cell
//! may carry a unit after the number (`60 g`); units are kept as opaque text.

use std::path::Path;
use std::sync::Arc;

use crate::analysis::{check_comparable, RaterRecord};
use crate::batch::{self, Execution};
use crate::error::{Error, Result};
use crate::model::{ObjectId, ObjectSet, Partition, WeakOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TokenKind {
    Id,
    Prefer,
    Tie,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    kind: TokenKind,
    text: &'a str,
    position: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token<'_>>> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '>' | '~' => {
                chars.next();
                tokens.push(Token {
                    kind: if c == '>' {
                        TokenKind::Prefer
                    } else {
                        TokenKind::Tie
                    },
                    text: &text[pos..pos + 1],
                    position: pos,
                });
            }
            ',' => {
                return Err(Error::Syntax {
                    position: pos,
                    message: "`,` is not allowed in a ranking".into(),
                })
            }
            _ => {
                let mut end = text.len();
                while let Some(&(p, c)) = chars.peek() {
                    if c.is_whitespace() || matches!(c, '>' | '~' | ',') {
                        end = p;
                        break;
                    }
                    chars.next();
                }
                tokens.push(Token {
                    kind: TokenKind::Id,
                    text: &text[pos..end],
                    position: pos,
                });
            }
        }
    }
    Ok(tokens)
}

type NamedTiers<'a> = Vec<Vec<(&'a str, usize)>>;

/// Syntax-only pass: tiers of `(name, byte position)`.
fn parse_tiers(text: &str) -> Result<NamedTiers<'_>> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax {
            position: 0,
            message: "empty ranking".into(),
        });
    }
    let mut tiers: NamedTiers<'_> = vec![Vec::new()];
    let mut expect_id = true;
    for tok in &tokens {
        match (expect_id, tok.kind) {
            (true, TokenKind::Id) => {
                tiers
                    .last_mut()
                    .expect("at least one tier")
                    .push((tok.text, tok.position));
                expect_id = false;
            }
            (true, _) => {
                return Err(Error::Syntax {
                    position: tok.position,
                    message: format!("expected an object name, found `{}`", tok.text),
                })
            }
            (false, TokenKind::Id) => {
                return Err(Error::Syntax {
                    position: tok.position,
                    message: format!("expected `>` or `~` before `{}`", tok.text),
                })
            }
            (false, TokenKind::Prefer) => {
                tiers.push(Vec::new());
                expect_id = true;
            }
            (false, TokenKind::Tie) => expect_id = true,
        }
    }
    if expect_id {
        return Err(Error::Syntax {
            position: text.len(),
            message: "expected an object name, found end of input".into(),
        });
    }
    Ok(tiers)
}

/// Parses a ranking over a known object set. Every object must appear
/// exactly once.
pub fn parse_ranking(text: &str, objects: &Arc<ObjectSet>) -> Result<WeakOrder> {
    let tiers = parse_tiers(text)?;
    let mut seen = vec![false; objects.len()];
    let mut idx = Vec::with_capacity(tiers.len());
    for tier in tiers {
        let mut t = Vec::with_capacity(tier.len());
        for (name, position) in tier {
            let i = objects.position(name).ok_or_else(|| Error::UnknownObject {
                token: name.to_string(),
                position,
            })?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::DuplicateObject {
                    token: name.to_string(),
                    position,
                });
            }
            t.push(i);
        }
        idx.push(t);
    }
    let absent: Vec<String> = seen
        .iter()
        .enumerate()
        .filter(|(_, s)| !**s)
        .map(|(i, _)| objects.members()[i].to_string())
        .collect();
    if !absent.is_empty() {
        return Err(Error::MissingObjects { absent });
    }
    WeakOrder::from_tier_indices(Arc::clone(objects), idx)
}

/// Parses a ranking and takes its object set from the names it mentions,
/// in order of appearance.
pub fn parse_ranking_inferring(text: &str) -> Result<WeakOrder> {
    let tiers = parse_tiers(text)?;
    let mut names: Vec<&str> = Vec::new();
    for &(name, position) in tiers.iter().flatten() {
        if names.contains(&name) {
            return Err(Error::DuplicateObject {
                token: name.to_string(),
                position,
            });
        }
        names.push(name);
    }
    let objects = Arc::new(ObjectSet::from_names(&names)?);
    parse_ranking(text, &objects)
}

/// A ranking together with the text it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingExpression {
    pub source_text: String,
    pub parsed: WeakOrder,
}

impl RankingExpression {
    pub fn parse(text: &str, objects: &Arc<ObjectSet>) -> Result<Self> {
        Ok(RankingExpression {
            source_text: text.to_string(),
            parsed: parse_ranking(text, objects)?,
        })
    }

    /// Normalized text: single spaces around operators, tie-groups in base order.
    pub fn canonical(&self) -> String {
        self.parsed.to_string()
    }
}

/// A rectangular table of numeric measurements: one row per object, one
/// column per rater.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementTable {
    objects: Vec<ObjectId>,
    raters: Vec<String>,
    values: Vec<Vec<f64>>,
    units: Vec<Vec<Option<String>>>,
}

impl MeasurementTable {
    /// `values[row][column]` is object `row` as measured by rater `column`.
    pub fn new(objects: Vec<ObjectId>, raters: Vec<String>, values: Vec<Vec<f64>>) -> Result<Self> {
        let units = values.iter().map(|r| vec![None; r.len()]).collect();
        MeasurementTable::with_units(objects, raters, values, units)
    }

    pub fn with_units(
        objects: Vec<ObjectId>,
        raters: Vec<String>,
        mut values: Vec<Vec<f64>>,
        units: Vec<Vec<Option<String>>>,
    ) -> Result<Self> {
        if values.len() != objects.len() || units.len() != objects.len() {
            return Err(Error::Input(format!(
                "{} objects but {} value rows",
                objects.len(),
                values.len()
            )));
        }
        for (o, (row, urow)) in objects.iter().zip(values.iter_mut().zip(&units)) {
            if row.len() != raters.len() || urow.len() != raters.len() {
                return Err(Error::Input(format!(
                    "row `{o}` has {} cells, expected {}",
                    row.len(),
                    raters.len()
                )));
            }
            for v in row.iter_mut() {
                if !v.is_finite() {
                    return Err(Error::Input(format!(
                        "row `{o}` holds non-finite value {v}"
                    )));
                }
                // -0.0 and 0.0 are the same reading
                *v += 0.0;
            }
        }
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(Error::Input(format!("duplicate object `{o}`")));
            }
        }
        for (i, r) in raters.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::Input("empty rater name".into()));
            }
            if raters[..i].contains(r) {
                return Err(Error::Input(format!("duplicate rater `{r}`")));
            }
        }
        Ok(MeasurementTable {
            objects,
            raters,
            values,
            units,
        })
    }

    /// Parses delimiter-separated text. The delimiter is `,` if the header
    /// contains one, otherwise tab, otherwise `;`.
    pub fn parse(text: &str) -> Result<Self> {
        let header = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or(Error::NoRecords)?;
        let delimiter = if header.contains(',') {
            b','
        } else if header.contains('\t') {
            b'\t'
        } else {
            b';'
        };
        let mut reader = csv::ReaderBuilder::new()
            .delimiter(delimiter)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .has_headers(false)
            .from_reader(text.as_bytes());

        let mut rows = reader.records();
        let (header, header_line) = match rows.next() {
            Some(r) => {
                let r = r.map_err(csv_error)?;
                let line = r.position().map_or(1, |p| p.line());
                (r, line)
            }
            None => return Err(Error::NoRecords),
        };
        let mut cells = header.iter();
        match cells.next() {
            Some(first) if first.eq_ignore_ascii_case("object") => {}
            other => {
                return Err(Error::Input(format!(
                    "header must start with `object`, found `{}`",
                    other.unwrap_or("")
                ))
                .at_line(header_line))
            }
        }
        let raters: Vec<String> = cells.map(str::to_string).collect();
        if raters.is_empty() {
            return Err(Error::NoRecords);
        }

        let mut objects = Vec::new();
        let mut values = Vec::new();
        let mut units = Vec::new();
        for row in rows {
            let row = row.map_err(csv_error)?;
            let line = row.position().map_or(0, |p| p.line());
            let mut cells = row.iter();
            let name = cells.next().unwrap_or("");
            let id = ObjectId::new(name).map_err(|e| e.at_line(line))?;
            let mut vrow = Vec::with_capacity(raters.len());
            let mut urow = Vec::with_capacity(raters.len());
            for (cell, rater) in cells.zip(&raters) {
                let (v, u) = parse_cell(cell).ok_or_else(|| {
                    Error::Input(format!(
                        "row `{name}`, column `{rater}`: `{cell}` is not a number"
                    ))
                    .at_line(line)
                })?;
                vrow.push(v);
                urow.push(u);
            }
            objects.push(id);
            values.push(vrow);
            units.push(urow);
        }
        MeasurementTable::with_units(objects, raters, values, units)
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn raters(&self) -> &[String] {
        &self.raters
    }

    pub fn column(&self, rater: &str) -> Option<Vec<f64>> {
        let c = self.raters.iter().position(|r| r == rater)?;
        Some(self.values.iter().map(|row| row[c]).collect())
    }

    pub fn value(&self, row: usize, column: usize) -> f64 {
        self.values[row][column]
    }

    pub fn unit(&self, row: usize, column: usize) -> Option<&str> {
        self.units[row][column].as_deref()
    }
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line());
    let err = match e.kind() {
        csv::ErrorKind::UnequalLengths {
            expected_len, len, ..
        } => Error::Input(format!("row has {len} cells, expected {expected_len}")),
        _ => Error::Input(e.to_string()),
    };
    match line {
        Some(l) => err.at_line(l),
        None => err,
    }
}

fn parse_cell(cell: &str) -> Option<(f64, Option<String>)> {
    let mut parts = cell.splitn(2, char::is_whitespace);
    let v: f64 = parts.next()?.parse().ok()?;
    if !v.is_finite() {
        return None;
    }
    let unit = parts
        .next()
        .map(str::trim)
        .filter(|u| !u.is_empty())
        .map(str::to_string);
    Some((v, unit))
}

// Values are decimal text parsed to doubles, so a difference that is exactly
// the tolerance in decimal can land a few ulps above it.
fn within_tolerance(a: f64, b: f64, tolerance: f64) -> bool {
    let diff = (b - a).abs();
    if tolerance == 0.0 {
        return diff == 0.0;
    }
    diff <= tolerance + 8.0 * f64::EPSILON * a.abs().max(b.abs())
}

/// Groups one rater's readings into equivalence classes.
///
/// With `tolerance == 0` objects share a class iff their readings are equal.
/// Otherwise readings are sorted and consecutive ones within `tolerance` are
/// chained into the same class.
pub fn group_measurements(
    table: &MeasurementTable,
    rater: &str,
    tolerance: f64,
) -> Result<Partition> {
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be finite and non-negative, got {tolerance}"
        )));
    }
    let column = table
        .column(rater)
        .ok_or_else(|| Error::Input(format!("no column for rater `{rater}`")))?;
    let base = Arc::new(ObjectSet::new(table.objects.iter().cloned())?);
    let mut order: Vec<usize> = (0..column.len()).collect();
    order.sort_by(|&a, &b| column[a].total_cmp(&column[b]));
    let mut chain = vec![0usize; column.len()];
    for w in order.windows(2) {
        let (prev, cur) = (w[0], w[1]);
        chain[cur] = if within_tolerance(column[prev], column[cur], tolerance) {
            chain[prev]
        } else {
            chain[prev] + 1
        };
    }
    Partition::from_keys(base, &chain)
}

/// Turns every column of a table into a rater record.
pub fn table_records(
    table: &MeasurementTable,
    tolerance: f64,
    exec: Execution,
) -> Result<Vec<RaterRecord>> {
    let records = batch::try_map(exec, table.raters(), |rater| {
        group_measurements(table, rater, tolerance)
            .map(|p| RaterRecord::from_partition(rater.clone(), p))
    })?;
    check_comparable(&records)?;
    Ok(records)
}

/// Parses a rankings file. The first rater's ranking fixes the object set
/// and every later rater must rank the same objects.
pub fn parse_rankings(text: &str) -> Result<Vec<RaterRecord>> {
    let mut base: Option<(Arc<ObjectSet>, String)> = None;
    let mut records: Vec<RaterRecord> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k as u64 + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (id, ranking) = l
            .split_once(':')
            .ok_or_else(|| Error::Input("expected `rater_id: ranking`".into()).at_line(line))?;
        let id = id.trim();
        if id.is_empty() {
            return Err(Error::Input("empty rater id".into()).at_line(line));
        }
        if records.iter().any(|r| r.rater_id == id) {
            return Err(Error::Input(format!("duplicate rater id `{id}`")).at_line(line));
        }
        // byte offsets in errors are relative to the ranking text
        let w = parse_ranking_inferring(ranking).map_err(|e| e.at_line(line))?;
        let w = match &base {
            None => {
                base = Some((Arc::clone(w.base()), id.to_string()));
                w
            }
            Some((objects, first)) => {
                if !w.base().same_members(objects) {
                    return Err(Error::Input(format!(
                        "rater `{id}` ranks a different object set than `{first}`"
                    ))
                    .at_line(line));
                }
                WeakOrder::from_tiers(Arc::clone(objects), &w.named_tiers())
                    .map_err(|e| e.at_line(line))?
            }
        };
        records.push(RaterRecord::from_weak_order(id, w));
    }
    if records.is_empty() {
        return Err(Error::NoRecords);
    }
    Ok(records)
}

/// How to interpret a dataset file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DatasetFormat {
    /// A measurement table; readings are grouped with the given tolerance.
    Table { tolerance: f64 },
    /// A rankings file.
    Rankings,
}

pub fn load_dataset(path: &Path, format: DatasetFormat) -> Result<Vec<RaterRecord>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_dataset(&text, format)
}

pub fn parse_dataset(text: &str, format: DatasetFormat) -> Result<Vec<RaterRecord>> {
    match format {
        DatasetFormat::Rankings => parse_rankings(text),
        DatasetFormat::Table { tolerance } => {
            let table = MeasurementTable::parse(text)?;
            table_records(&table, tolerance, Execution::default())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EGGS: &str = "object,John,Jack\n\
        egg1,60,60.2\n\
        egg2,63,62.8\n\
        egg3,63,63.1\n\
        egg4,61,61.1\n\
        egg5,61,61.1\n";

    fn x(n: usize) -> Arc<ObjectSet> {
        Arc::new(ObjectSet::numbered("x", n).unwrap())
    }

    fn class_names(p: &Partition) -> Vec<Vec<String>> {
        p.named_classes()
            .iter()
            .map(|c| c.iter().map(|id| id.to_string()).collect())
            .collect()
    }

    #[test]
    fn parses_expert_one() {
        let w = parse_ranking("x1 > x2 ~ x3 > x4 ~ x5", &x(5)).unwrap();
        assert_eq!(w.tiers(), &[vec![0], vec![1, 2], vec![3, 4]]);
        let w = parse_ranking("x1>x2~x3>x4~x5", &x(5)).unwrap();
        assert_eq!(w.tiers(), &[vec![0], vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn parses_total_indifference() {
        let w = parse_ranking("x1 ~ x2 ~ x3", &x(3)).unwrap();
        assert_eq!(w.tiers().len(), 1);
    }

    #[test]
    fn duplicate_is_reported_at_second_occurrence() {
        let err = parse_ranking("x1 > x1 > x2", &x(2)).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateObject {
                token: "x1".into(),
                position: 5
            }
        );
    }

    #[test]
    fn unknown_and_missing() {
        assert_eq!(
            parse_ranking("x1 > y", &x(2)).unwrap_err(),
            Error::UnknownObject {
                token: "y".into(),
                position: 5
            }
        );
        assert_eq!(
            parse_ranking("x2", &x(3)).unwrap_err(),
            Error::MissingObjects {
                absent: vec!["x1".into(), "x3".into()]
            }
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let pos = |t: &str| match parse_ranking(t, &x(3)) {
            Err(Error::Syntax { position, .. }) => position,
            other => panic!("{t:?}: {other:?}"),
        };
        assert_eq!(pos("x1 >> x2"), 4);
        assert_eq!(pos("> x1"), 0);
        assert_eq!(pos("x1 > x2 ~"), 9);
        assert_eq!(pos("x1 x2"), 3);
        assert_eq!(pos("x1, x2"), 2);
        assert_eq!(pos(""), 0);
        assert_eq!(pos("   "), 0);
        assert_eq!(pos("x1 ~ ~ x2"), 5);
    }

    #[test]
    fn canonical_text() {
        let e = RankingExpression::parse("  x3~x1 >x2 ", &x(3)).unwrap();
        assert_eq!(e.canonical(), "x1 ~ x3 > x2");
        assert_eq!(parse_ranking(&e.canonical(), &x(3)).unwrap(), e.parsed);
    }

    #[test]
    fn inferring_objects() {
        let w = parse_ranking_inferring("b > a ~ c").unwrap();
        let names: Vec<&str> = w.base().members().iter().map(|m| m.as_str()).collect();
        assert_eq!(names, ["b", "a", "c"]);
        assert!(matches!(
            parse_ranking_inferring("a > a"),
            Err(Error::DuplicateObject { position: 4, .. })
        ));
        assert!(matches!(
            parse_ranking_inferring("a"),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn egg_table_exact_grouping() {
        let t = MeasurementTable::parse(EGGS).unwrap();
        assert_eq!(t.raters(), ["John", "Jack"]);
        let john = group_measurements(&t, "John", 0.0).unwrap();
        assert_eq!(
            class_names(&john),
            vec![vec!["egg1"], vec!["egg2", "egg3"], vec!["egg4", "egg5"]]
        );
        let jack = group_measurements(&t, "Jack", 0.0).unwrap();
        assert_eq!(
            class_names(&jack),
            vec![
                vec!["egg1"],
                vec!["egg2"],
                vec!["egg3"],
                vec!["egg4", "egg5"]
            ]
        );
    }

    #[test]
    fn tolerance_chains_jack_into_john() {
        let t = MeasurementTable::parse(EGGS).unwrap();
        let jack = group_measurements(&t, "Jack", 0.3).unwrap();
        assert_eq!(jack, group_measurements(&t, "John", 0.0).unwrap());
        // just below the gap keeps egg2 and egg3 apart
        let jack = group_measurements(&t, "Jack", 0.29).unwrap();
        assert_eq!(jack.num_classes(), 4);
    }

    #[test]
    fn chaining_is_transitive() {
        let t = MeasurementTable::new(
            ObjectSet::numbered("o", 3).unwrap().members().to_vec(),
            vec!["r".into()],
            vec![vec![1.0], vec![1.5], vec![2.0]],
        )
        .unwrap();
        // 1.0 and 2.0 are 1.0 apart but linked through 1.5
        assert_eq!(group_measurements(&t, "r", 0.5).unwrap().num_classes(), 1);
    }

    #[test]
    fn grouping_errors() {
        let t = MeasurementTable::parse(EGGS).unwrap();
        assert!(matches!(
            group_measurements(&t, "Jill", 0.0),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            group_measurements(&t, "John", -1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            group_measurements(&t, "John", f64::NAN),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn table_parse_errors() {
        let err = MeasurementTable::parse("object,A\nx,1\ny,abc\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 3, .. }), "{err:?}");
        assert!(err.to_string().contains("row `y`, column `A`"));
        let err = MeasurementTable::parse("object,A,B\nx,1,2\ny,1\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 3, .. }), "{err:?}");
        let err = MeasurementTable::parse("name,A\nx,1\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 1, .. }), "{err:?}");
        assert_eq!(MeasurementTable::parse("").unwrap_err(), Error::NoRecords);
        assert_eq!(
            MeasurementTable::parse("object\n").unwrap_err(),
            Error::NoRecords
        );
        assert!(matches!(
            MeasurementTable::parse("object,A\nx,1\nx,2\n"),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            MeasurementTable::parse("object,A,A\nx,1,1\ny,2,2\n"),
            Err(Error::Input(_))
        ));
        assert!(MeasurementTable::parse("object,A\nx,NaN\ny,1\n").is_err());
    }

    #[test]
    fn table_units_and_delimiters() {
        let t = MeasurementTable::parse("# weights\nobject\tA\nx\t60 g\ny\t61 g\n").unwrap();
        assert_eq!(t.column("A").unwrap(), vec![60.0, 61.0]);
        assert_eq!(t.unit(0, 0), Some("g"));
        let t = MeasurementTable::parse("object;A\nx;-0\ny;0\n").unwrap();
        assert_eq!(group_measurements(&t, "A", 0.0).unwrap().num_classes(), 1);
    }

    #[test]
    fn rankings_file() {
        let text = "# Example\n\
            Expert1: x1 > x2 ~ x3 > x4 ~ x5\n\
            \n\
            Expert2: x1 > x2 ~ x3 ~ x4 > x5\n\
            Expert3: x1 ~ x2 > x3 > x4 > x5\n";
        let records = parse_rankings(text).unwrap();
        let ids: Vec<&str> = records.iter().map(|r| r.rater_id.as_str()).collect();
        assert_eq!(ids, ["Expert1", "Expert2", "Expert3"]);
        assert_eq!(records[1].metrics.cardinality, 11);
    }

    #[test]
    fn rankings_with_reordered_objects_share_a_base() {
        let records = parse_rankings("a: x > y > z\nb: z ~ y > x\n").unwrap();
        assert_eq!(records[0].source.base(), records[1].source.base());
    }

    #[test]
    fn rankings_file_errors() {
        assert_eq!(parse_rankings("").unwrap_err(), Error::NoRecords);
        assert_eq!(
            parse_rankings("# nothing\n\n").unwrap_err(),
            Error::NoRecords
        );
        let err = parse_rankings("a: x > y\nb x > y\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }));
        let err = parse_rankings("a: x > y\nb: x > z\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }));
        assert!(matches!(err.root(), Error::Input(_)));
        let err = parse_rankings("a: x > y\na: y > x\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }));
        let err = parse_rankings("a: x >> y\n").unwrap_err();
        assert!(matches!(err.root(), Error::Syntax { .. }));
    }

    #[test]
    fn table_dataset() {
        let records = parse_dataset(EGGS, DatasetFormat::Table { tolerance: 0.0 }).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].rater_id, "John");
        assert_eq!(records[0].metrics.cardinality, 9);
        assert_eq!(records[1].metrics.cardinality, 7);
    }
}
