//! Object sets, equivalence partitions, weak orders and preference sequences.
//!
//! Every value in this module is immutable once built. Members of an
//! [`ObjectSet`] are addressed by their position, and partitions and weak
//! orders store classes as sorted position lists so two values built from
//! the same data compare equal regardless of input order.

use std::borrow::Borrow;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Characters an object name may not contain: they are the ranking DSL's
/// operators and the table delimiter.
pub const RESERVED_CHARS: [char; 3] = ['>', '~', ','];

/// Name of a single object.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ObjectId(String);

impl ObjectId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::Input("object name is empty".into()));
        }
        if let Some(c) = name
            .chars()
            .find(|c| c.is_whitespace() || RESERVED_CHARS.contains(c))
        {
            return Err(Error::Input(format!(
                "object name `{name}` contains forbidden character {c:?}"
            )));
        }
        Ok(ObjectId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for ObjectId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObjectId::new(s)
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for ObjectId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for ObjectId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// An ordered set of at least two distinct objects.
#[derive(Debug, Clone)]
pub struct ObjectSet {
    members: Vec<ObjectId>,
    index: HashMap<ObjectId, usize>,
}

impl ObjectSet {
    pub fn new(members: impl IntoIterator<Item = ObjectId>) -> Result<Self> {
        let members: Vec<ObjectId> = members.into_iter().collect();
        if members.len() < 2 {
            return Err(Error::Construction(format!(
                "an object set needs at least 2 members, got {}",
                members.len()
            )));
        }
        let mut index = HashMap::with_capacity(members.len());
        for (i, m) in members.iter().enumerate() {
            if index.insert(m.clone(), i).is_some() {
                return Err(Error::Input(format!("duplicate object `{m}`")));
            }
        }
        Ok(ObjectSet { members, index })
    }

    /// Builds a set from plain names, validating each one.
    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let ids = names
            .into_iter()
            .map(|s| ObjectId::new(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        ObjectSet::new(ids)
    }

    /// `x1, x2, ..., xn`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        ObjectSet::from_names((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[ObjectId] {
        &self.members
    }

    pub fn get(&self, position: usize) -> Option<&ObjectId> {
        self.members.get(position)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn position_of(&self, id: &ObjectId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn contains(&self, id: &ObjectId) -> bool {
        self.index.contains_key(id)
    }

    /// True when both sets hold the same members, in any order.
    pub fn same_members(&self, other: &ObjectSet) -> bool {
        self.len() == other.len() && self.members.iter().all(|m| other.contains(m))
    }

    /// For each member of `self`, its position in `other`.
    fn positions_in(&self, other: &ObjectSet) -> Result<Vec<usize>> {
        if !self.same_members(other) {
            return Err(Error::Input(
                "the two values are defined over different object sets".into(),
            ));
        }
        Ok(self.members.iter().map(|m| other.index[m]).collect())
    }
}

impl PartialEq for ObjectSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for ObjectSet {}

impl Serialize for ObjectSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

/// Checks that `groups` are non-empty, disjoint and cover `0..n`, then sorts
/// each group ascending.
fn canonical_blocks(n: usize, mut groups: Vec<Vec<usize>>, what: &str) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; n];
    for g in &mut groups {
        if g.is_empty() {
            return Err(Error::Construction(format!("empty {what}")));
        }
        for &i in g.iter() {
            if i >= n {
                return Err(Error::Construction(format!(
                    "{what} refers to position {i} outside an object set of size {n}"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Construction(format!(
                    "position {i} appears in more than one {what}"
                )));
            }
        }
        g.sort_unstable();
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::Construction(format!(
            "position {missing} is not covered by any {what}"
        )));
    }
    Ok(groups)
}

fn indices_for<S: AsRef<str>>(base: &ObjectSet, groups: &[Vec<S>]) -> Result<Vec<Vec<usize>>> {
    groups
        .iter()
        .map(|g| {
            g.iter()
                .map(|name| {
                    let name = name.as_ref();
                    base.position(name)
                        .ok_or_else(|| Error::Input(format!("unknown object `{name}`")))
                })
                .collect()
        })
        .collect()
}

/// A partition of an [`ObjectSet`] into disjoint, non-empty equivalence classes.
///
/// Classes are kept in canonical order: members ascending by base position,
/// classes ascending by their first member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    base: Arc<ObjectSet>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from classes given as base positions.
    pub fn from_class_indices(base: Arc<ObjectSet>, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut classes = canonical_blocks(base.len(), classes, "class")?;
        classes.sort_unstable_by_key(|c| c[0]);
        let mut class_of = vec![0; base.len()];
        for (k, c) in classes.iter().enumerate() {
            for &i in c {
                class_of[i] = k;
            }
        }
        Ok(Partition {
            base,
            classes,
            class_of,
        })
    }

    /// Builds a partition from classes given by object name.
    pub fn from_classes<S: AsRef<str>>(base: Arc<ObjectSet>, classes: &[Vec<S>]) -> Result<Self> {
        let idx = indices_for(&base, classes)?;
        Partition::from_class_indices(base, idx)
    }

    /// Groups objects by key: position `i` of `keys` is the key of member `i`.
    pub fn from_keys<K: Eq + Hash>(base: Arc<ObjectSet>, keys: &[K]) -> Result<Self> {
        if keys.len() != base.len() {
            return Err(Error::Input(format!(
                "{} keys supplied for {} objects",
                keys.len(),
                base.len()
            )));
        }
        let mut groups: HashMap<&K, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, k) in keys.iter().enumerate() {
            let slot = *groups.entry(k).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[slot].push(i);
        }
        Partition::from_class_indices(base, classes)
    }

    /// The finest partition: every object on its own.
    pub fn singletons(base: Arc<ObjectSet>) -> Self {
        let classes = (0..base.len()).map(|i| vec![i]).collect();
        Partition::from_class_indices(base, classes).expect("singletons are a valid partition")
    }

    /// The coarsest partition: one class holding everything.
    pub fn single_class(base: Arc<ObjectSet>) -> Self {
        let classes = vec![(0..base.len()).collect()];
        Partition::from_class_indices(base, classes).expect("one full class is a valid partition")
    }

    pub fn base(&self) -> &Arc<ObjectSet> {
        &self.base
    }

    /// Number of objects.
    pub fn n(&self) -> usize {
        self.base.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Classes as sorted base positions, in canonical order.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Index into [`Partition::classes`] of the class holding position `i`.
    pub fn class_index_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// The equivalence class `[x_i]` of the object at position `i`.
    pub fn class_of(&self, i: usize) -> &[usize] {
        &self.classes[self.class_of[i]]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Classes with member names.
    pub fn named_classes(&self) -> Vec<Vec<&ObjectId>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&i| &self.base.members[i]).collect())
            .collect()
    }

    /// Uncertainty `W`: the sum over objects of the size of their class.
    pub fn uncertainty_w(&self) -> u64 {
        (0..self.n()).map(|i| self.class_of(i).len() as u64).sum()
    }

    /// `W` computed as the sum of squared class sizes; always equal to
    /// [`Partition::uncertainty_w`].
    pub fn uncertainty_w_by_classes(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| (c.len() as u64) * (c.len() as u64))
            .sum()
    }

    /// The partition induced on a subset of the base, given as base positions.
    pub fn restrict(&self, block: &[usize]) -> Result<Partition> {
        let members = block
            .iter()
            .map(|&i| {
                self.base
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::Input(format!("position {i} outside the object set")))
            })
            .collect::<Result<Vec<_>>>()?;
        let sub = Arc::new(ObjectSet::new(members)?);
        let keys: Vec<usize> = block.iter().map(|&i| self.class_of[i]).collect();
        Partition::from_keys(sub, &keys)
    }

    /// The coarsest common refinement of `self` and `other`.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        let map = self.base.positions_in(&other.base)?;
        let keys: Vec<(usize, usize)> = (0..self.n())
            .map(|i| (self.class_of[i], other.class_of[map[i]]))
            .collect();
        Partition::from_keys(Arc::clone(&self.base), &keys)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.named_classes().iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            for (j, id) in c.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{id}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.named_classes().serialize(s)
    }
}

/// Builds a partition from `(object, label)` pairs: objects sharing a label
/// share a class. The base set keeps the order of the pairs.
pub fn partition_from_labels<I, S, L>(assignments: I) -> Result<Partition>
where
    I: IntoIterator<Item = (S, L)>,
    S: AsRef<str>,
    L: Eq + Hash,
{
    let (names, labels): (Vec<S>, Vec<L>) = assignments.into_iter().unzip();
    let base = Arc::new(ObjectSet::from_names(names)?);
    Partition::from_keys(base, &labels)
}

/// True iff every class of `fine` lies inside some class of `coarse`.
pub fn is_refinement(fine: &Partition, coarse: &Partition) -> Result<bool> {
    let map = fine.base.positions_in(&coarse.base)?;
    Ok(fine.classes.iter().all(|c| {
        let target = coarse.class_of[map[c[0]]];
        c.iter().all(|&i| coarse.class_of[map[i]] == target)
    }))
}

/// A ties-permitted ranking: tie-groups (tiers) ordered from most to least
/// preferred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakOrder {
    base: Arc<ObjectSet>,
    tiers: Vec<Vec<usize>>,
}

impl WeakOrder {
    pub fn from_tier_indices(base: Arc<ObjectSet>, tiers: Vec<Vec<usize>>) -> Result<Self> {
        let tiers = canonical_blocks(base.len(), tiers, "tier")?;
        Ok(WeakOrder { base, tiers })
    }

    pub fn from_tiers<S: AsRef<str>>(base: Arc<ObjectSet>, tiers: &[Vec<S>]) -> Result<Self> {
        let idx = indices_for(&base, tiers)?;
        WeakOrder::from_tier_indices(base, idx)
    }

    pub fn base(&self) -> &Arc<ObjectSet> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.len()
    }

    /// Tiers as sorted base positions, most preferred first.
    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    pub fn named_tiers(&self) -> Vec<Vec<&ObjectId>> {
        self.tiers
            .iter()
            .map(|t| t.iter().map(|&i| &self.base.members[i]).collect())
            .collect()
    }

    /// Per-object ranking positions `{|ξ_i|+1, ..., |ξ_i|+|η_i|}`, where `ξ_i`
    /// are the objects strictly preferred to `x_i` and `η_i` its tie-group.
    pub fn preference_sequence(&self) -> PreferenceSequence {
        let mut entries = vec![PositionRange { first: 0, last: 0 }; self.n()];
        let mut ahead = 0;
        for tier in &self.tiers {
            let range = PositionRange {
                first: ahead + 1,
                last: ahead + tier.len(),
            };
            for &i in tier {
                entries[i] = range;
            }
            ahead += tier.len();
        }
        PreferenceSequence {
            base: Arc::clone(&self.base),
            entries,
        }
    }

    /// The indifference relation of the ranking as a partition: its classes
    /// are exactly the tiers.
    pub fn tie_partition(&self) -> Partition {
        Partition::from_class_indices(Arc::clone(&self.base), self.tiers.clone())
            .expect("tiers of a weak order partition its base")
    }
}

/// Canonical DSL text: `x1 > x2 ~ x3 > x4`.
impl fmt::Display for WeakOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, tier) in self.named_tiers().iter().enumerate() {
            if k > 0 {
                f.write_str(" > ")?;
            }
            for (j, id) in tier.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ~ ")?;
                }
                write!(f, "{id}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for WeakOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.named_tiers().serialize(s)
    }
}

/// A contiguous, 1-based, inclusive range of ranking positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PositionRange {
    pub first: usize,
    pub last: usize,
}

impl PositionRange {
    pub fn len(&self) -> usize {
        self.last + 1 - self.first
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, position: usize) -> bool {
        (self.first..=self.last).contains(&position)
    }

    pub fn positions(&self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.last
    }
}

impl fmt::Display for PositionRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.positions().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// The preference sequence of a weak order: for each object, the set of
/// ranking positions it could occupy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceSequence {
    base: Arc<ObjectSet>,
    entries: Vec<PositionRange>,
}

impl PreferenceSequence {
    pub fn base(&self) -> &Arc<ObjectSet> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.len()
    }

    /// Entries in base order.
    pub fn entries(&self) -> &[PositionRange] {
        &self.entries
    }

    /// `|PS|`: the sum of entry sizes.
    pub fn cardinality(&self) -> u64 {
        self.entries.iter().map(|e| e.len() as u64).sum()
    }
}

impl Serialize for PreferenceSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let sets: Vec<Vec<usize>> = self
            .entries
            .iter()
            .map(|e| e.positions().collect())
            .collect();
        sets.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(names: &[&str]) -> Arc<ObjectSet> {
        Arc::new(ObjectSet::from_names(names).unwrap())
    }

    fn eggs() -> Arc<ObjectSet> {
        set(&["egg1", "egg2", "egg3", "egg4", "egg5"])
    }

    fn john() -> Partition {
        partition_from_labels([
            ("egg1", 60),
            ("egg2", 63),
            ("egg3", 63),
            ("egg4", 61),
            ("egg5", 61),
        ])
        .unwrap()
    }

    #[test]
    fn object_ids_reject_reserved_and_blank() {
        assert!(ObjectId::new("x1").is_ok());
        for bad in ["", "a b", "a>b", "a~b", "a,b", "\t"] {
            assert!(
                matches!(ObjectId::new(bad), Err(Error::Input(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn object_set_needs_two_distinct_members() {
        assert!(matches!(
            ObjectSet::from_names(["a"]),
            Err(Error::Construction(_))
        ));
        assert!(matches!(
            ObjectSet::from_names(Vec::<&str>::new()),
            Err(Error::Construction(_))
        ));
        assert!(matches!(
            ObjectSet::from_names(["a", "a"]),
            Err(Error::Input(_))
        ));
        let s = ObjectSet::from_names(["b", "a"]).unwrap();
        assert_eq!(s.position("a"), Some(1));
        assert_eq!(s.position("z"), None);
    }

    #[test]
    fn labels_group_john_column() {
        let p = john();
        let names: Vec<Vec<&str>> = p
            .named_classes()
            .iter()
            .map(|c| c.iter().map(|id| id.as_str()).collect())
            .collect();
        assert_eq!(
            names,
            vec![vec!["egg1"], vec!["egg2", "egg3"], vec!["egg4", "egg5"]]
        );
        assert_eq!(p.to_string(), "egg1 | egg2 egg3 | egg4 egg5");
    }

    #[test]
    fn labels_extremes() {
        let all_same = partition_from_labels((1..=5).map(|i| (format!("o{i}"), "same"))).unwrap();
        assert_eq!(all_same.class_sizes(), vec![5]);
        let distinct = partition_from_labels([("a", 1), ("b", 2), ("c", 3)]).unwrap();
        assert_eq!(distinct.class_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn labels_errors() {
        assert!(matches!(
            partition_from_labels([("a", 1)]),
            Err(Error::Construction(_))
        ));
        assert!(matches!(
            partition_from_labels([("a", 1), ("a", 2)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn uncertainty_matches_examples() {
        let p = john();
        assert_eq!(p.uncertainty_w(), 9);
        assert_eq!(p.uncertainty_w_by_classes(), 9);
        assert_eq!(Partition::singletons(eggs()).uncertainty_w(), 5);
        assert_eq!(Partition::single_class(eggs()).uncertainty_w(), 25);
    }

    #[test]
    fn classes_are_canonical() {
        let base = set(&["a", "b", "c", "d"]);
        let p =
            Partition::from_classes(base.clone(), &[vec!["d", "b"], vec!["c"], vec!["a"]]).unwrap();
        let q = Partition::from_classes(base, &[vec!["a"], vec!["b", "d"], vec!["c"]]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.classes(), &[vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn malformed_classes_are_rejected() {
        let base = set(&["a", "b", "c"]);
        assert!(Partition::from_class_indices(base.clone(), vec![vec![0, 1]]).is_err());
        assert!(Partition::from_class_indices(base.clone(), vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_class_indices(base.clone(), vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::from_class_indices(base.clone(), vec![vec![0, 1, 2, 3]]).is_err());
        assert!(Partition::from_classes(base, &[vec!["a", "b", "zz"]]).is_err());
    }

    #[test]
    fn reference_preference_sequences() {
        let base = set(&["x1", "x2", "x3", "x4"]);
        let w = WeakOrder::from_tiers(base, &[vec!["x1"], vec!["x2", "x3"], vec!["x4"]]).unwrap();
        let ps = w.preference_sequence();
        let shown: Vec<String> = ps.entries().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["{1}", "{2,3}", "{2,3}", "{4}"]);
        assert_eq!(ps.cardinality(), 6);

        let base = set(&["x1", "x2", "x3", "x4", "x5"]);
        let w = WeakOrder::from_tiers(
            base.clone(),
            &[vec!["x1"], vec!["x2", "x3", "x4"], vec!["x5"]],
        )
        .unwrap();
        let shown: Vec<String> = w
            .preference_sequence()
            .entries()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(shown, ["{1}", "{2,3,4}", "{2,3,4}", "{2,3,4}", "{5}"]);
        assert_eq!(w.preference_sequence().cardinality(), 11);

        let strict =
            WeakOrder::from_tier_indices(base.clone(), (0..5).map(|i| vec![i]).collect()).unwrap();
        assert_eq!(strict.preference_sequence().cardinality(), 5);

        let flat = WeakOrder::from_tier_indices(base, vec![(0..5).collect()]).unwrap();
        assert!(flat
            .preference_sequence()
            .entries()
            .iter()
            .all(|e| *e == PositionRange { first: 1, last: 5 }));
    }

    #[test]
    fn tie_partition_matches_tiers() {
        let base = set(&["x1", "x2", "x3", "x4", "x5"]);
        let w =
            WeakOrder::from_tiers(base, &[vec!["x1"], vec!["x2", "x3"], vec!["x4", "x5"]]).unwrap();
        let p = w.tie_partition();
        assert_eq!(p.class_sizes(), vec![1, 2, 2]);
        assert_eq!(p.uncertainty_w(), 9);
        assert_eq!(p.uncertainty_w(), w.preference_sequence().cardinality());
        assert_eq!(w.to_string(), "x1 > x2 ~ x3 > x4 ~ x5");
    }

    #[test]
    fn tie_partition_order_is_ignored() {
        let base = set(&["a", "b", "c"]);
        let w = WeakOrder::from_tiers(base.clone(), &[vec!["c"], vec!["a", "b"]]).unwrap();
        let v = WeakOrder::from_tiers(base, &[vec!["b", "a"], vec!["c"]]).unwrap();
        assert_ne!(w, v);
        assert_eq!(w.tie_partition(), v.tie_partition());
    }

    #[test]
    fn refinement_examples() {
        let base = set(&["a", "b", "c"]);
        let fine = Partition::singletons(base.clone());
        let ab_c = Partition::from_classes(base.clone(), &[vec!["a", "b"], vec!["c"]]).unwrap();
        let a_bc = Partition::from_classes(base.clone(), &[vec!["a"], vec!["b", "c"]]).unwrap();
        assert!(is_refinement(&fine, &ab_c).unwrap());
        assert!(is_refinement(&fine, &Partition::single_class(base)).unwrap());
        assert!(!is_refinement(&ab_c, &a_bc).unwrap());
        assert!(!is_refinement(&ab_c, &fine).unwrap());

        let jack = partition_from_labels([
            ("egg1", "60.2"),
            ("egg2", "62.8"),
            ("egg3", "63.1"),
            ("egg4", "61.1"),
            ("egg5", "61.1"),
        ])
        .unwrap();
        assert!(is_refinement(&jack, &john()).unwrap());
        assert!(!is_refinement(&john(), &jack).unwrap());
    }

    #[test]
    fn refinement_across_member_orderings() {
        let p =
            Partition::from_classes(set(&["a", "b", "c"]), &[vec!["a"], vec!["b", "c"]]).unwrap();
        let q = Partition::single_class(set(&["c", "b", "a"]));
        assert!(is_refinement(&p, &q).unwrap());
    }

    #[test]
    fn refinement_needs_same_objects() {
        let p = Partition::singletons(set(&["a", "b"]));
        let q = Partition::singletons(set(&["a", "c"]));
        assert!(matches!(is_refinement(&p, &q), Err(Error::Input(_))));
    }

    #[test]
    fn restrict_and_meet() {
        let base = set(&["x1", "x2", "x3", "x4"]);
        let cassie =
            Partition::from_classes(base.clone(), &[vec!["x1"], vec!["x2", "x3"], vec!["x4"]])
                .unwrap();
        let r = cassie.restrict(&[0, 3]).unwrap();
        assert_eq!(r.class_sizes(), vec![1, 1]);
        let r = cassie.restrict(&[1, 2]).unwrap();
        assert_eq!(r.class_sizes(), vec![2]);
        assert!(matches!(cassie.restrict(&[1]), Err(Error::Construction(_))));

        let halves = Partition::from_classes(base, &[vec!["x1", "x2"], vec!["x3", "x4"]]).unwrap();
        let m = cassie.meet(&halves).unwrap();
        assert_eq!(m.num_classes(), 4);
        assert!(is_refinement(&m, &cassie).unwrap());
        assert!(is_refinement(&m, &halves).unwrap());
    }
}
