//! Extension computation for the eleven supported semantics, plus reasoning
//! modes and decision-set aggregation.
//!
//! The flat semantics run on the bitmask engine: scan all subsets, keep the
//! ones passing the defining predicate, then apply the maximality step. cf2
//! and stage2 are evaluated by their recursive membership test per strongly
//! connected component. Parallel and sequential execution return identical
//! results; extensions always come back in canonical (size, then
//! lexicographic) order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::dense::Dense;
use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::framework::{ArgumentSet, ArgumentationFramework};

/// The semantics the solver knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticsId {
    Complete,
    Grounded,
    Preferred,
    Stable,
    SemiStable,
    Ideal,
    Eager,
    Naive,
    Stage,
    Cf2,
    Stage2,
}

pub const ALL_SEMANTICS: [SemanticsId; 11] = [
    SemanticsId::Complete,
    SemanticsId::Grounded,
    SemanticsId::Preferred,
    SemanticsId::Stable,
    SemanticsId::SemiStable,
    SemanticsId::Ideal,
    SemanticsId::Eager,
    SemanticsId::Naive,
    SemanticsId::Stage,
    SemanticsId::Cf2,
    SemanticsId::Stage2,
];

impl SemanticsId {
    pub fn name(self) -> &'static str {
        match self {
            SemanticsId::Complete => "complete",
            SemanticsId::Grounded => "grounded",
            SemanticsId::Preferred => "preferred",
            SemanticsId::Stable => "stable",
            SemanticsId::SemiStable => "semi_stable",
            SemanticsId::Ideal => "ideal",
            SemanticsId::Eager => "eager",
            SemanticsId::Naive => "naive",
            SemanticsId::Stage => "stage",
            SemanticsId::Cf2 => "cf2",
            SemanticsId::Stage2 => "stage2",
        }
    }

    /// Whether the semantics yields at least one extension on every finite
    /// framework. Only stable can come up empty.
    pub fn universally_defined(self) -> bool {
        self != SemanticsId::Stable
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemanticsId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(SemanticsId::Complete),
            "grounded" => Ok(SemanticsId::Grounded),
            "preferred" => Ok(SemanticsId::Preferred),
            "stable" => Ok(SemanticsId::Stable),
            "semi_stable" | "semi-stable" => Ok(SemanticsId::SemiStable),
            "ideal" => Ok(SemanticsId::Ideal),
            "eager" => Ok(SemanticsId::Eager),
            "naive" => Ok(SemanticsId::Naive),
            "stage" => Ok(SemanticsId::Stage),
            "cf2" => Ok(SemanticsId::Cf2),
            "stage2" => Ok(SemanticsId::Stage2),
            other => Err(Error::UnknownSemantics(other.to_owned())),
        }
    }
}

/// How an extension family is consumed: keep the family, or reduce it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AggregationMode {
    Credulous,
    Skeptical,
    DecideUnion,
    DecideIntersection,
}

impl fmt::Display for AggregationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AggregationMode::Credulous => "credulous",
            AggregationMode::Skeptical => "skeptical",
            AggregationMode::DecideUnion => "decide_union",
            AggregationMode::DecideIntersection => "decide_intersection",
        })
    }
}

impl FromStr for AggregationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "credulous" => Ok(AggregationMode::Credulous),
            "skeptical" => Ok(AggregationMode::Skeptical),
            "decide_union" => Ok(AggregationMode::DecideUnion),
            "decide_intersection" => Ok(AggregationMode::DecideIntersection),
            other => Err(Error::InvalidParameter(format!(
                "unknown aggregation mode {other:?}"
            ))),
        }
    }
}

/// The two reasoning modes a principle check can attach to a semantics:
/// credulous keeps the family, skeptical collapses it to its intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReasoningMode {
    Credulous,
    Skeptical,
}

impl fmt::Display for ReasoningMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReasoningMode::Credulous => "credulous",
            ReasoningMode::Skeptical => "skeptical",
        })
    }
}

impl FromStr for ReasoningMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "credulous" => Ok(ReasoningMode::Credulous),
            "skeptical" => Ok(ReasoningMode::Skeptical),
            other => Err(Error::InvalidParameter(format!(
                "unknown reasoning mode {other:?} (expected credulous or skeptical)"
            ))),
        }
    }
}

/// Canonical order for argument sets: smaller sets first, ties broken
/// lexicographically on the sorted member lists.
pub fn canonical_set_order(a: &ArgumentSet, b: &ArgumentSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A family of extensions in canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExtensionSet {
    sets: Vec<ArgumentSet>,
}

impl ExtensionSet {
    pub fn empty() -> Self {
        ExtensionSet { sets: Vec::new() }
    }

    pub fn singleton(set: ArgumentSet) -> Self {
        ExtensionSet { sets: vec![set] }
    }

    pub fn from_sets(sets: impl IntoIterator<Item = ArgumentSet>) -> Self {
        let mut sets: Vec<ArgumentSet> = sets.into_iter().collect();
        sets.sort_by(canonical_set_order);
        sets.dedup();
        ExtensionSet { sets }
    }

    pub fn sets(&self) -> &[ArgumentSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: &ArgumentSet) -> bool {
        self.sets.iter().any(|s| s == set)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentSet> {
        self.sets.iter()
    }

    /// Union of all members; the empty family unions to the empty set.
    pub fn union_of_all(&self) -> ArgumentSet {
        self.sets
            .iter()
            .fold(ArgumentSet::new(), |acc, s| acc.union(s))
    }

    /// Intersection of all members; undefined (None) on the empty family.
    pub fn intersection_of_all(&self) -> Option<ArgumentSet> {
        let mut iter = self.sets.iter();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, s| acc.intersection(s)))
    }
}

impl FromIterator<ArgumentSet> for ExtensionSet {
    fn from_iter<I: IntoIterator<Item = ArgumentSet>>(iter: I) -> Self {
        ExtensionSet::from_sets(iter)
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = &'a ArgumentSet;
    type IntoIter = std::slice::Iter<'a, ArgumentSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

impl fmt::Display for ExtensionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ExtensionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Computes the extensions of `af` under `sem` with the default execution
/// mode.
pub fn extensions(af: &ArgumentationFramework, sem: SemanticsId) -> Result<ExtensionSet> {
    extensions_with_mode(af, sem, ExecMode::default())
}

/// Computes the extensions of `af` under `sem`, running subset scans in the
/// given execution mode. Both modes return identical families.
pub fn extensions_with_mode(
    af: &ArgumentationFramework,
    sem: SemanticsId,
    mode: ExecMode,
) -> Result<ExtensionSet> {
    let d = Dense::new(af)?;
    let masks = match sem {
        SemanticsId::Complete => complete_masks(&d, mode),
        SemanticsId::Grounded => vec![grounded_mask(&d)],
        SemanticsId::Preferred => maximal_masks(admissible_masks(&d, mode)),
        SemanticsId::Stable => {
            let full = d.full();
            exec::filter_masks(mode, full, |m| d.conflict_free(m) && d.range(m) == full)
        }
        SemanticsId::SemiStable => range_maximal_masks(&d, complete_masks(&d, mode)),
        SemanticsId::Ideal => {
            vec![unique_maximal_admissible_within(
                &d,
                intersect_masks(&maximal_masks(admissible_masks(&d, mode))),
                mode,
            )]
        }
        SemanticsId::Eager => {
            let semi = range_maximal_masks(&d, complete_masks(&d, mode));
            vec![unique_maximal_admissible_within(&d, intersect_masks(&semi), mode)]
        }
        SemanticsId::Naive => maximal_masks(conflict_free_masks(&d, mode)),
        SemanticsId::Stage => range_maximal_masks(&d, conflict_free_masks(&d, mode)),
        SemanticsId::Cf2 => return scc_recursive_extensions(af, &d, BaseSemantics::Naive, mode),
        SemanticsId::Stage2 => return scc_recursive_extensions(af, &d, BaseSemantics::Stage, mode),
    };
    Ok(masks.into_iter().map(|m| d.to_set(m)).collect())
}

fn conflict_free_masks(d: &Dense<'_>, mode: ExecMode) -> Vec<u32> {
    exec::filter_masks(mode, d.full(), |m| d.conflict_free(m))
}

fn admissible_masks(d: &Dense<'_>, mode: ExecMode) -> Vec<u32> {
    exec::filter_masks(mode, d.full(), |m| d.admissible(m))
}

fn complete_masks(d: &Dense<'_>, mode: ExecMode) -> Vec<u32> {
    exec::filter_masks(mode, d.full(), |m| {
        d.conflict_free(m) && d.characteristic(m) == m
    })
}

/// Least fixed point of the characteristic function.
fn grounded_mask(d: &Dense<'_>) -> u32 {
    let mut current = 0u32;
    loop {
        let next = d.characteristic(current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Keeps the masks that are subset-maximal within the given family.
///
/// Every member of the family sits below some maximal member, so scanning in
/// descending popcount order and comparing against the kept maxima is exact.
fn maximal_masks(mut masks: Vec<u32>) -> Vec<u32> {
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut kept: Vec<u32> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| m != k && m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps the masks whose range is subset-maximal among the family's ranges.
fn range_maximal_masks(d: &Dense<'_>, masks: Vec<u32>) -> Vec<u32> {
    let ranges: Vec<u32> = masks.iter().map(|&m| d.range(m)).collect();
    let distinct: BTreeSet<u32> = ranges.iter().copied().collect();
    let maximal: BTreeSet<u32> = maximal_masks(distinct.into_iter().collect())
        .into_iter()
        .collect();
    masks
        .into_iter()
        .zip(ranges)
        .filter(|(_, r)| maximal.contains(r))
        .map(|(m, _)| m)
        .collect()
}

fn intersect_masks(masks: &[u32]) -> u32 {
    masks.iter().fold(!0u32, |acc, &m| acc & m)
}

/// The largest admissible subset of `bound`. Admissible subsets of a
/// conflict-free bound are closed under union, so the maximum is unique; the
/// empty set always qualifies.
fn unique_maximal_admissible_within(d: &Dense<'_>, bound: u32, mode: ExecMode) -> u32 {
    let bound = bound & d.full();
    let candidates: Vec<u32> =
        exec::filter_masks(mode, d.full(), |m| m & !bound == 0 && d.admissible(m));
    let maxima = maximal_masks(candidates);
    debug_assert_eq!(maxima.len(), 1, "maximal admissible subset must be unique");
    maxima.into_iter().next_back().unwrap_or(0)
}

/// Base semantics plugged into the per-component recursion.
#[derive(Clone, Copy, PartialEq, Eq)]
enum BaseSemantics {
    Naive,
    Stage,
}

/// Recursive evaluator shared by cf2 and stage2.
///
/// Membership follows the component decomposition: a single-component
/// framework defers to the base semantics, otherwise every component's slice
/// of the candidate must be an extension of the framework restricted to the
/// component minus its defeated part. Results are memoized per (restricted
/// framework, candidate) because sibling candidates reuse sub-frameworks.
struct SccRecursion {
    base: BaseSemantics,
    membership: HashMap<(ArgumentationFramework, ArgumentSet), bool>,
    stage_families: HashMap<ArgumentationFramework, ExtensionSet>,
}

impl SccRecursion {
    fn new(base: BaseSemantics) -> Self {
        SccRecursion {
            base,
            membership: HashMap::new(),
            stage_families: HashMap::new(),
        }
    }

    fn is_extension(&mut self, af: &ArgumentationFramework, e: &ArgumentSet) -> Result<bool> {
        let key = (af.clone(), e.clone());
        if let Some(&known) = self.membership.get(&key) {
            return Ok(known);
        }
        let verdict = self.decide(af, e)?;
        self.membership.insert(key, verdict);
        Ok(verdict)
    }

    fn decide(&mut self, af: &ArgumentationFramework, e: &ArgumentSet) -> Result<bool> {
        if af.argument_count() == 0 {
            return Ok(e.is_empty());
        }
        let components = af.sccs();
        if components.len() == 1 {
            return self.base_membership(af, e);
        }
        for component in components.components() {
            let slice = e.intersection(component);
            let defeated = defeated_members(af, component, e);
            let surviving = component.difference(&defeated);
            if !slice.is_subset_of(&surviving) {
                return Ok(false);
            }
            let sub = af.restriction(&surviving);
            if !self.is_extension(&sub, &slice)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn base_membership(&mut self, af: &ArgumentationFramework, e: &ArgumentSet) -> Result<bool> {
        match self.base {
            BaseSemantics::Naive => is_maximal_conflict_free(af, e),
            BaseSemantics::Stage => {
                if let Some(family) = self.stage_families.get(af) {
                    return Ok(family.contains(e));
                }
                let family = extensions_with_mode(af, SemanticsId::Stage, ExecMode::Sequential)?;
                let verdict = family.contains(e);
                self.stage_families.insert(af.clone(), family);
                Ok(verdict)
            }
        }
    }
}

/// Members of `component` attacked by `e` from outside the component.
fn defeated_members(
    af: &ArgumentationFramework,
    component: &ArgumentSet,
    e: &ArgumentSet,
) -> ArgumentSet {
    component
        .iter()
        .filter(|a| {
            af.attackers_of(a)
                .iter()
                .any(|b| !component.contains(b) && e.contains(b))
        })
        .cloned()
        .collect()
}

/// Maximality of a conflict-free set is a local property: no outside
/// argument can join without a conflict.
fn is_maximal_conflict_free(af: &ArgumentationFramework, e: &ArgumentSet) -> Result<bool> {
    if !af.is_conflict_free(e)? {
        return Ok(false);
    }
    let blocked = af.arguments().iter().filter(|a| !e.contains(a)).all(|a| {
        af.has_attack(a, a)
            || e.iter().any(|b| af.has_attack(a, b) || af.has_attack(b, a))
    });
    Ok(blocked)
}

fn scc_recursive_extensions(
    af: &ArgumentationFramework,
    d: &Dense<'_>,
    base: BaseSemantics,
    mode: ExecMode,
) -> Result<ExtensionSet> {
    // Every extension is conflict-free: cross-component attacks from the
    // candidate defeat their targets out of the recursion, and in-component
    // conflicts fail the (conflict-free) base semantics.
    let candidates = conflict_free_masks(d, mode);
    let mut recursion = SccRecursion::new(base);
    let mut accepted = Vec::new();
    for mask in candidates {
        let candidate = d.to_set(mask);
        if recursion.is_extension(af, &candidate)? {
            accepted.push(candidate);
        }
    }
    Ok(ExtensionSet::from_sets(accepted))
}

/// Result of [`aggregate`]: either a family of extensions or a single
/// decision set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Aggregated {
    Extensions(ExtensionSet),
    Decision(ArgumentSet),
}

impl fmt::Display for Aggregated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Aggregated::Extensions(e) => write!(f, "{e}"),
            Aggregated::Decision(s) => write!(f, "{s}"),
        }
    }
}

/// Applies a reasoning mode or decision rule to the extensions of `af`.
///
/// Credulous keeps the family; skeptical collapses it to the singleton
/// holding the intersection of all extensions; the decide rules return the
/// union or intersection as one argument set. Skeptical and intersection
/// aggregation are undefined on an empty family (possible only for stable)
/// and report `NoExtensions`; the union over an empty family is the empty
/// set.
pub fn aggregate(
    af: &ArgumentationFramework,
    sem: SemanticsId,
    mode: AggregationMode,
) -> Result<Aggregated> {
    let family = extensions(af, sem)?;
    match mode {
        AggregationMode::Credulous => Ok(Aggregated::Extensions(family)),
        AggregationMode::Skeptical => family
            .intersection_of_all()
            .map(|s| Aggregated::Extensions(ExtensionSet::singleton(s)))
            .ok_or(Error::NoExtensions),
        AggregationMode::DecideUnion => Ok(Aggregated::Decision(family.union_of_all())),
        AggregationMode::DecideIntersection => family
            .intersection_of_all()
            .map(Aggregated::Decision)
            .ok_or(Error::NoExtensions),
    }
}

/// The decision set `g ∘ σ(af)` for the union or intersection rule.
pub fn decision_set(
    af: &ArgumentationFramework,
    sem: SemanticsId,
    rule: AggregationMode,
) -> Result<ArgumentSet> {
    match aggregate(af, sem, rule)? {
        Aggregated::Decision(s) => Ok(s),
        Aggregated::Extensions(_) => Err(Error::InvalidParameter(
            "decision sets require decide_union or decide_intersection".to_owned(),
        )),
    }
}

/// Static table: does the semantics guarantee exactly one extension under
/// the given reasoning mode on every framework?
///
/// Credulously only the single-extension semantics qualify; skeptically
/// every universally defined semantics collapses to one set, and stable is
/// the lone exception in both columns.
pub fn uniqueness_guarantee(sem: SemanticsId, mode: ReasoningMode) -> bool {
    match mode {
        ReasoningMode::Credulous => matches!(
            sem,
            SemanticsId::Grounded | SemanticsId::Ideal | SemanticsId::Eager
        ),
        ReasoningMode::Skeptical => sem != SemanticsId::Stable,
    }
}
