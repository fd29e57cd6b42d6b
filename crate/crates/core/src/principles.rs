//! Principle checkers for framework pairs (the monotony family and
//! reference independence), the single-framework directionality check,
//! decision-level reference independence, and a counterexample search
//! harness over generated or exhaustively enumerated expansion pairs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::expansions::{
    classify_expansion, generate_framework, generate_normal_expansion,
    generate_rational_mans_expansion, is_normal_expansion, nth_seed, ExpansionKind, GenParams,
};
use crate::framework::{Argument, ArgumentSet, ArgumentationFramework};
use crate::semantics::{
    decision_set, extensions, AggregationMode, ExtensionSet, ReasoningMode, SemanticsId,
};

/// Weak principles quantify existentially over the expanded extensions,
/// strong ones universally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strength {
    Weak,
    Strong,
}

/// The checkable principles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrincipleId {
    WeakRefIndependence,
    StrongRefIndependence,
    WeakMonotony,
    StrongMonotony,
    WeakCautiousMonotony,
    StrongCautiousMonotony,
    WeakRationalMonotony,
    StrongRationalMonotony,
    Directionality,
    DecisionRefIndependence,
}

pub const ALL_PRINCIPLES: [PrincipleId; 10] = [
    PrincipleId::WeakRefIndependence,
    PrincipleId::StrongRefIndependence,
    PrincipleId::WeakMonotony,
    PrincipleId::StrongMonotony,
    PrincipleId::WeakCautiousMonotony,
    PrincipleId::StrongCautiousMonotony,
    PrincipleId::WeakRationalMonotony,
    PrincipleId::StrongRationalMonotony,
    PrincipleId::Directionality,
    PrincipleId::DecisionRefIndependence,
];

impl PrincipleId {
    pub fn name(self) -> &'static str {
        match self {
            PrincipleId::WeakRefIndependence => "weak_ref_independence",
            PrincipleId::StrongRefIndependence => "strong_ref_independence",
            PrincipleId::WeakMonotony => "weak_monotony",
            PrincipleId::StrongMonotony => "strong_monotony",
            PrincipleId::WeakCautiousMonotony => "weak_cautious_monotony",
            PrincipleId::StrongCautiousMonotony => "strong_cautious_monotony",
            PrincipleId::WeakRationalMonotony => "weak_rational_monotony",
            PrincipleId::StrongRationalMonotony => "strong_rational_monotony",
            PrincipleId::Directionality => "directionality",
            PrincipleId::DecisionRefIndependence => "decision_ref_independence",
        }
    }
}

impl fmt::Display for PrincipleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PrincipleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let canonical = s.replace('-', "_");
        ALL_PRINCIPLES
            .iter()
            .copied()
            .find(|p| p.name() == canonical)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown principle {s:?}")))
    }
}

/// Evidence for a violated principle. Which fields are present depends on
/// the principle: pairwise checks record the failing base extension (and for
/// strong variants the expanded extension it clashes with), directionality
/// records the failing unattacked set and the restriction's extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub base_extension: Option<ArgumentSet>,
    pub expanded_extension: Option<ArgumentSet>,
    pub expanded_extensions: Option<ExtensionSet>,
    pub detail: String,
}

/// Outcome of a principle check.
///
/// `vacuous` marks a pass in which no obligation was ever instantiated (an
/// empty extension family, or a conditional principle whose condition never
/// fired). Strong principles additionally conjoin universal definedness in
/// their textbook form; a single pair cannot witness that, so it is reported
/// as the `universally_defined` metadata flag instead of folding it into
/// `holds`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipleVerdict {
    pub principle: PrincipleId,
    pub holds: bool,
    pub vacuous: bool,
    pub universally_defined: Option<bool>,
    pub witness: Option<Witness>,
}

impl PrincipleVerdict {
    fn pass(principle: PrincipleId, vacuous: bool) -> Self {
        PrincipleVerdict {
            principle,
            holds: true,
            vacuous,
            universally_defined: None,
            witness: None,
        }
    }

    fn fail(principle: PrincipleId, witness: Witness) -> Self {
        PrincipleVerdict {
            principle,
            holds: false,
            vacuous: false,
            universally_defined: None,
            witness: Some(witness),
        }
    }

    fn with_definedness(mut self, sem: SemanticsId) -> Self {
        self.universally_defined = Some(sem.universally_defined());
        self
    }
}

/// Extension family under a reasoning mode as the principles use it: the
/// skeptical collapse of an empty family stays empty (no extensions means no
/// skeptically accepted set either).
fn moded_family(
    af: &ArgumentationFramework,
    sem: SemanticsId,
    mode: ReasoningMode,
) -> Result<ExtensionSet> {
    let family = extensions(af, sem)?;
    match mode {
        ReasoningMode::Credulous => Ok(family),
        ReasoningMode::Skeptical => Ok(family
            .intersection_of_all()
            .map(ExtensionSet::singleton)
            .unwrap_or_default()),
    }
}

fn ensure_normal(
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
) -> Result<()> {
    if is_normal_expansion(base, expanded) {
        Ok(())
    } else {
        Err(Error::NotNormalExpansion)
    }
}

fn principle_of(kind: PairwisePrinciple, strength: Strength) -> PrincipleId {
    match (kind, strength) {
        (PairwisePrinciple::RefIndependence, Strength::Weak) => PrincipleId::WeakRefIndependence,
        (PairwisePrinciple::RefIndependence, Strength::Strong) => {
            PrincipleId::StrongRefIndependence
        }
        (PairwisePrinciple::Monotony, Strength::Weak) => PrincipleId::WeakMonotony,
        (PairwisePrinciple::Monotony, Strength::Strong) => PrincipleId::StrongMonotony,
        (PairwisePrinciple::CautiousMonotony, Strength::Weak) => {
            PrincipleId::WeakCautiousMonotony
        }
        (PairwisePrinciple::CautiousMonotony, Strength::Strong) => {
            PrincipleId::StrongCautiousMonotony
        }
        (PairwisePrinciple::RationalMonotony, Strength::Weak) => {
            PrincipleId::WeakRationalMonotony
        }
        (PairwisePrinciple::RationalMonotony, Strength::Strong) => {
            PrincipleId::StrongRationalMonotony
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairwisePrinciple {
    RefIndependence,
    Monotony,
    CautiousMonotony,
    RationalMonotony,
}

/// Shared quantifier skeleton of the four pairwise principles.
///
/// Each principle supplies a per-extension condition (always true for
/// monotony and reference independence) and a clause over (E, E'). Weak
/// variants ask, for every base extension meeting the condition, for some
/// expanded extension satisfying the clause; strong variants demand the
/// clause for all pairs.
fn check_pairwise(
    kind: PairwisePrinciple,
    sem: SemanticsId,
    mode: ReasoningMode,
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
    strength: Strength,
) -> Result<PrincipleVerdict> {
    ensure_normal(base, expanded)?;
    let principle = principle_of(kind, strength);
    let base_family = moded_family(base, sem, mode)?;
    let expanded_family = moded_family(expanded, sem, mode)?;
    let base_arguments = base.argument_set();

    // Arguments outside the base that appear in some expanded extension;
    // only rational monotony restricts the attacker pool to these.
    let new_accepted: ArgumentSet = expanded_family
        .union_of_all()
        .difference(&base_arguments);

    let condition = |e: &ArgumentSet| -> bool {
        match kind {
            PairwisePrinciple::RefIndependence | PairwisePrinciple::Monotony => true,
            PairwisePrinciple::CautiousMonotony => expanded
                .attacks()
                .iter()
                .all(|(a, b)| base_arguments.contains(a) || !e.contains(b)),
            PairwisePrinciple::RationalMonotony => expanded
                .attacks()
                .iter()
                .all(|(a, b)| !new_accepted.contains(a) || !e.contains(b)),
        }
    };
    let clause = |e: &ArgumentSet, e2: &ArgumentSet| -> bool {
        match kind {
            PairwisePrinciple::RefIndependence => !e2.is_subset_of(&base_arguments) || e2 == e,
            _ => e.is_subset_of(e2),
        }
    };
    let describe = |e: &ArgumentSet, e2: Option<&ArgumentSet>| -> String {
        match (kind, e2) {
            (PairwisePrinciple::RefIndependence, Some(e2)) => format!(
                "E' = {e2} stays within the base arguments and differs from E = {e}"
            ),
            (PairwisePrinciple::RefIndependence, None) => format!(
                "no expanded extension leaves the base arguments or equals E = {e}"
            ),
            (_, Some(e2)) => format!("E = {e} is not contained in E' = {e2}"),
            (_, None) => format!("no expanded extension contains E = {e}"),
        }
    };

    let mut obligations = 0usize;
    for e in &base_family {
        if !condition(e) {
            continue;
        }
        match strength {
            Strength::Weak => {
                obligations += 1;
                if !expanded_family.iter().any(|e2| clause(e, e2)) {
                    return Ok(PrincipleVerdict::fail(
                        principle,
                        Witness {
                            base_extension: Some(e.clone()),
                            expanded_extension: None,
                            expanded_extensions: Some(expanded_family.clone()),
                            detail: describe(e, None),
                        },
                    )
                    .with_definedness_if_strong(sem, strength));
                }
            }
            Strength::Strong => {
                for e2 in &expanded_family {
                    obligations += 1;
                    if !clause(e, e2) {
                        return Ok(PrincipleVerdict::fail(
                            principle,
                            Witness {
                                base_extension: Some(e.clone()),
                                expanded_extension: Some(e2.clone()),
                                expanded_extensions: Some(expanded_family.clone()),
                                detail: describe(e, Some(e2)),
                            },
                        )
                        .with_definedness_if_strong(sem, strength));
                    }
                }
            }
        }
    }
    Ok(PrincipleVerdict::pass(principle, obligations == 0)
        .with_definedness_if_strong(sem, strength))
}

impl PrincipleVerdict {
    fn with_definedness_if_strong(self, sem: SemanticsId, strength: Strength) -> Self {
        match strength {
            Strength::Weak => self,
            Strength::Strong => self.with_definedness(sem),
        }
    }
}

/// Reference independence across a normal expansion: accepted positions may
/// change only when the change is carried by new arguments.
pub fn check_reference_independence(
    sem: SemanticsId,
    mode: ReasoningMode,
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
    strength: Strength,
) -> Result<PrincipleVerdict> {
    check_pairwise(PairwisePrinciple::RefIndependence, sem, mode, base, expanded, strength)
}

/// Monotony: every base extension survives (weak: in some expanded
/// extension; strong: in all of them).
pub fn check_monotony(
    sem: SemanticsId,
    mode: ReasoningMode,
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
    strength: Strength,
) -> Result<PrincipleVerdict> {
    check_pairwise(PairwisePrinciple::Monotony, sem, mode, base, expanded, strength)
}

/// Cautious monotony: monotony restricted to base extensions that no new
/// argument attacks.
pub fn check_cautious_monotony(
    sem: SemanticsId,
    mode: ReasoningMode,
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
    strength: Strength,
) -> Result<PrincipleVerdict> {
    check_pairwise(PairwisePrinciple::CautiousMonotony, sem, mode, base, expanded, strength)
}

/// Rational monotony: monotony restricted to base extensions not attacked by
/// any newly accepted argument (a new argument occurring in some expanded
/// extension).
pub fn check_rational_monotony(
    sem: SemanticsId,
    mode: ReasoningMode,
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
    strength: Strength,
) -> Result<PrincipleVerdict> {
    check_pairwise(PairwisePrinciple::RationalMonotony, sem, mode, base, expanded, strength)
}

/// Largest framework [`check_directionality`] accepts; it enumerates every
/// unattacked set.
pub const MAX_DIRECTIONALITY_ARGUMENTS: usize = 12;

/// Directionality: restricting the framework to any unattacked set must
/// yield exactly the projections of the full extensions onto that set.
pub fn check_directionality(
    sem: SemanticsId,
    af: &ArgumentationFramework,
) -> Result<PrincipleVerdict> {
    if af.argument_count() > MAX_DIRECTIONALITY_ARGUMENTS {
        return Err(Error::CapacityExceeded {
            what: "framework size for the directionality check",
            limit: MAX_DIRECTIONALITY_ARGUMENTS,
            actual: af.argument_count(),
        });
    }
    let family = extensions(af, sem)?;
    for u in af.unattacked_sets()? {
        let restricted = extensions(&af.restriction(&u), sem)?;
        let projected: ExtensionSet = family.iter().map(|e| e.intersection(&u)).collect();
        if restricted != projected {
            return Ok(PrincipleVerdict::fail(
                PrincipleId::Directionality,
                Witness {
                    base_extension: Some(u.clone()),
                    expanded_extension: None,
                    expanded_extensions: Some(restricted.clone()),
                    detail: format!(
                        "restriction to U = {u} yields {restricted} but the projected extensions are {projected}"
                    ),
                },
            ));
        }
    }
    Ok(PrincipleVerdict::pass(PrincipleId::Directionality, false))
}

/// Decision-level reference independence: when the expanded decision set
/// stays within the base arguments, it must equal the base decision set.
pub fn check_decision_reference_independence(
    sem: SemanticsId,
    rule: AggregationMode,
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
) -> Result<PrincipleVerdict> {
    ensure_normal(base, expanded)?;
    let base_decision = decision_set(base, sem, rule)?;
    let expanded_decision = decision_set(expanded, sem, rule)?;
    let within_base = expanded_decision.is_subset_of(&base.argument_set());
    if !within_base || expanded_decision == base_decision {
        return Ok(PrincipleVerdict::pass(
            PrincipleId::DecisionRefIndependence,
            !within_base,
        ));
    }
    Ok(PrincipleVerdict::fail(
        PrincipleId::DecisionRefIndependence,
        Witness {
            base_extension: Some(base_decision.clone()),
            expanded_extension: Some(expanded_decision.clone()),
            expanded_extensions: None,
            detail: format!(
                "the expanded decision set {expanded_decision} stays within the base arguments but differs from {base_decision}"
            ),
        },
    ))
}

/// Routes a principle to its checker. Pairwise principles read the
/// aggregation mode as a reasoning mode; decision-level reference
/// independence requires a decide rule; directionality evaluates the plain
/// extension family of `base` and ignores both `mode` and `expanded`.
pub fn check_principle(
    principle: PrincipleId,
    sem: SemanticsId,
    mode: AggregationMode,
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
) -> Result<PrincipleVerdict> {
    let reasoning = match mode {
        AggregationMode::Credulous => Some(ReasoningMode::Credulous),
        AggregationMode::Skeptical => Some(ReasoningMode::Skeptical),
        AggregationMode::DecideUnion | AggregationMode::DecideIntersection => None,
    };
    let pairwise = |kind: PairwisePrinciple, strength: Strength| -> Result<PrincipleVerdict> {
        let reasoning = reasoning.ok_or_else(|| {
            Error::InvalidParameter(format!(
                "principle {principle} expects a credulous or skeptical mode, got {mode}"
            ))
        })?;
        check_pairwise(kind, sem, reasoning, base, expanded, strength)
    };
    match principle {
        PrincipleId::WeakRefIndependence => {
            pairwise(PairwisePrinciple::RefIndependence, Strength::Weak)
        }
        PrincipleId::StrongRefIndependence => {
            pairwise(PairwisePrinciple::RefIndependence, Strength::Strong)
        }
        PrincipleId::WeakMonotony => pairwise(PairwisePrinciple::Monotony, Strength::Weak),
        PrincipleId::StrongMonotony => pairwise(PairwisePrinciple::Monotony, Strength::Strong),
        PrincipleId::WeakCautiousMonotony => {
            pairwise(PairwisePrinciple::CautiousMonotony, Strength::Weak)
        }
        PrincipleId::StrongCautiousMonotony => {
            pairwise(PairwisePrinciple::CautiousMonotony, Strength::Strong)
        }
        PrincipleId::WeakRationalMonotony => {
            pairwise(PairwisePrinciple::RationalMonotony, Strength::Weak)
        }
        PrincipleId::StrongRationalMonotony => {
            pairwise(PairwisePrinciple::RationalMonotony, Strength::Strong)
        }
        PrincipleId::Directionality => check_directionality(sem, base),
        PrincipleId::DecisionRefIndependence => match mode {
            AggregationMode::DecideUnion | AggregationMode::DecideIntersection => {
                check_decision_reference_independence(sem, mode, base, expanded)
            }
            _ => Err(Error::InvalidParameter(format!(
                "decision_ref_independence expects decide_union or decide_intersection, got {mode}"
            ))),
        },
    }
}

/// How the search harness produces candidate pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// All labelled pairs up to `max_arguments` total arguments, deduped up
    /// to argument relabeling.
    Exhaustive,
    /// `count` seeded candidate pairs; candidates failing the required
    /// expansion kind are discarded without replacement.
    Random { count: usize, seed: u64 },
}

/// Bounds for [`search_counterexamples`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_arguments: usize,
    pub mode: SearchMode,
    pub allow_self_attacks: bool,
    pub required_kind: ExpansionKind,
}

/// Largest `max_arguments` the random search accepts.
pub const MAX_SEARCH_ARGUMENTS: usize = 12;
/// Largest `max_arguments` the exhaustive search accepts.
pub const MAX_EXHAUSTIVE_ARGUMENTS: usize = 5;

/// A violating pair found by the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub base: ArgumentationFramework,
    pub expanded: ArgumentationFramework,
    pub verdict: PrincipleVerdict,
}

/// Searches expansion pairs for violations of a principle, with the default
/// execution mode.
pub fn search_counterexamples(
    sem: SemanticsId,
    mode: AggregationMode,
    principle: PrincipleId,
    bounds: &SearchBounds,
) -> Result<Vec<Counterexample>> {
    search_counterexamples_with_mode(sem, mode, principle, bounds, ExecMode::default())
}

/// Searches expansion pairs for violations of a principle.
///
/// Pairs are generated deterministically from the bounds, checked
/// (violations collected, pairs on which the check is undefined skipped),
/// and returned sorted by (base, expanded); the result does not depend on
/// the execution mode.
pub fn search_counterexamples_with_mode(
    sem: SemanticsId,
    mode: AggregationMode,
    principle: PrincipleId,
    bounds: &SearchBounds,
    exec_mode: ExecMode,
) -> Result<Vec<Counterexample>> {
    if bounds.required_kind == ExpansionKind::NotExpansion {
        return Err(Error::InvalidParameter(
            "principles are undefined across non-expansions".to_owned(),
        ));
    }
    if bounds.max_arguments > MAX_SEARCH_ARGUMENTS {
        return Err(Error::CapacityExceeded {
            what: "search framework size",
            limit: MAX_SEARCH_ARGUMENTS,
            actual: bounds.max_arguments,
        });
    }
    let pairs = match bounds.mode {
        SearchMode::Exhaustive => {
            if bounds.max_arguments > MAX_EXHAUSTIVE_ARGUMENTS {
                return Err(Error::CapacityExceeded {
                    what: "exhaustive search framework size",
                    limit: MAX_EXHAUSTIVE_ARGUMENTS,
                    actual: bounds.max_arguments,
                });
            }
            exhaustive_pairs(bounds, principle == PrincipleId::Directionality)?
        }
        SearchMode::Random { count, seed } => {
            random_pairs(bounds, count, seed, principle == PrincipleId::Directionality)?
        }
    };

    let checked = exec::map_items(exec_mode, pairs, |(base, expanded)| {
        match check_principle(principle, sem, mode, &base, &expanded) {
            Ok(verdict) if !verdict.holds => Ok(Some(Counterexample { base, expanded, verdict })),
            Ok(_) => Ok(None),
            // Undefined on this pair: no extensions to aggregate, or the
            // pair fell outside the principle's domain.
            Err(Error::NoExtensions) | Err(Error::NotNormalExpansion) => Ok(None),
            Err(e) => Err(e),
        }
    });
    let mut found = Vec::new();
    for item in checked {
        if let Some(cx) = item? {
            found.push(cx);
        }
    }
    found.sort_by(|x, y| {
        (&x.base, &x.expanded).cmp(&(&y.base, &y.expanded))
    });
    found.dedup_by(|x, y| x.base == y.base && x.expanded == y.expanded);
    Ok(found)
}

/// All permutations of `0..n` (n is tiny here).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for slot in 0..n {
            let mut perm = Vec::with_capacity(n);
            perm.extend(rest.iter().map(|&v| if v >= slot { v + 1 } else { v }));
            perm.insert(0, slot);
            out.push(perm);
        }
    }
    out
}

/// Canonical form of a pair under independent relabeling of base and new
/// arguments: the lexicographically smallest (base attacks, added attacks)
/// encoding over all such permutations.
fn pair_canon_key(
    base_count: usize,
    new_count: usize,
    base_attacks: &[(usize, usize)],
    added_attacks: &[(usize, usize)],
) -> (usize, usize, Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut best: Option<(Vec<(usize, usize)>, Vec<(usize, usize)>)> = None;
    for base_perm in permutations(base_count) {
        for new_perm in permutations(new_count) {
            let map = |v: usize| -> usize {
                if v < base_count {
                    base_perm[v]
                } else {
                    base_count + new_perm[v - base_count]
                }
            };
            let mut b: Vec<(usize, usize)> =
                base_attacks.iter().map(|&(x, y)| (map(x), map(y))).collect();
            let mut a: Vec<(usize, usize)> =
                added_attacks.iter().map(|&(x, y)| (map(x), map(y))).collect();
            b.sort_unstable();
            a.sort_unstable();
            let candidate = (b, a);
            if best.as_ref().map_or(true, |cur| candidate < *cur) {
                best = Some(candidate);
            }
        }
    }
    let (b, a) = best.expect("at least the identity permutation exists");
    (base_count, new_count, b, a)
}

fn indexed_framework(labels: &[Argument], attacks: &[(usize, usize)]) -> ArgumentationFramework {
    ArgumentationFramework::from_sets(
        labels.iter().cloned().collect(),
        attacks
            .iter()
            .map(|&(i, j)| (labels[i].clone(), labels[j].clone()))
            .collect(),
    )
    .expect("attack endpoints are drawn from the label list")
}

/// Every subset of `positions`, as index vectors.
fn attack_subsets(positions: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new()];
    for &p in positions {
        let with_p: Vec<Vec<(usize, usize)>> = out
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.push(p);
                s
            })
            .collect();
        out.extend(with_p);
    }
    out
}

/// All pairs (base, expanded) with at most `max_arguments` total arguments,
/// deduped up to relabeling. For single-framework principles only the bases
/// are enumerated, paired with themselves.
fn exhaustive_pairs(
    bounds: &SearchBounds,
    single_framework: bool,
) -> Result<Vec<(ArgumentationFramework, ArgumentationFramework)>> {
    let max = bounds.max_arguments;
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::new();

    for base_count in 0..=max {
        let base_labels: Vec<Argument> = (0..base_count)
            .map(|i| Argument::new(format!("a{i}")).expect("generated label is valid"))
            .collect();
        let base_positions: Vec<(usize, usize)> = (0..base_count)
            .flat_map(|i| (0..base_count).map(move |j| (i, j)))
            .filter(|&(i, j)| bounds.allow_self_attacks || i != j)
            .collect();

        for base_attacks in attack_subsets(&base_positions) {
            if single_framework {
                let key = pair_canon_key(base_count, 0, &base_attacks, &[]);
                if seen.insert(key) {
                    let af = indexed_framework(&base_labels, &base_attacks);
                    pairs.push((af.clone(), af));
                }
                continue;
            }
            for new_count in 0..=(max - base_count) {
                let total = base_count + new_count;
                let labels: Vec<Argument> = base_labels
                    .iter()
                    .cloned()
                    .chain((0..new_count).map(|i| {
                        Argument::new(format!("b{i}")).expect("generated label is valid")
                    }))
                    .collect();
                // Added attacks touch a new argument unless plain expansions
                // are enough, in which case base-base additions are allowed.
                let added_positions: Vec<(usize, usize)> = (0..total)
                    .flat_map(|i| (0..total).map(move |j| (i, j)))
                    .filter(|&(i, j)| {
                        (bounds.allow_self_attacks || i != j)
                            && !base_attacks.contains(&(i, j))
                            && (bounds.required_kind == ExpansionKind::Expansion
                                || i >= base_count
                                || j >= base_count)
                    })
                    .collect();
                for added in attack_subsets(&added_positions) {
                    let key = pair_canon_key(base_count, new_count, &base_attacks, &added);
                    if !seen.insert(key) {
                        continue;
                    }
                    let base = indexed_framework(&base_labels, &base_attacks);
                    let mut expanded_attacks = base_attacks.clone();
                    expanded_attacks.extend(&added);
                    let expanded = indexed_framework(&labels, &expanded_attacks);
                    if classify_expansion(&base, &expanded)?.includes(bounds.required_kind) {
                        pairs.push((base, expanded));
                    }
                }
            }
        }
    }
    Ok(pairs)
}

/// `count` seeded pairs; pair `i` is a pure function of `(seed, i)`.
fn random_pairs(
    bounds: &SearchBounds,
    count: usize,
    seed: u64,
    single_framework: bool,
) -> Result<Vec<(ArgumentationFramework, ArgumentationFramework)>> {
    let mut pairs = Vec::new();
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(nth_seed(seed, i as u64));
        let base_count = rng.gen_range(0..=bounds.max_arguments);
        let new_count = rng.gen_range(0..=(bounds.max_arguments - base_count));
        let base_probability = rng.gen::<f64>();
        let expansion_probability = rng.gen::<f64>();
        let base_seed = rng.gen::<u64>();
        let expansion_seed = rng.gen::<u64>();

        let base = generate_framework(&GenParams {
            num_arguments: base_count,
            attack_probability: base_probability,
            allow_self_attacks: bounds.allow_self_attacks,
            num_new_arguments: 0,
            seed: base_seed,
        })?;
        if single_framework {
            pairs.push((base.clone(), base));
            continue;
        }
        let params = GenParams {
            num_arguments: 0,
            attack_probability: expansion_probability,
            allow_self_attacks: bounds.allow_self_attacks,
            num_new_arguments: new_count,
            seed: expansion_seed,
        };
        let expanded = match bounds.required_kind {
            ExpansionKind::RationalMan => generate_rational_mans_expansion(&base, &params)?,
            _ => generate_normal_expansion(&base, &params)?,
        };
        // The generators guarantee normal (or rational-man's) expansions;
        // stricter requirements use rejection.
        if classify_expansion(&base, &expanded)?.includes(bounds.required_kind) {
            pairs.push((base, expanded));
        }
    }
    Ok(pairs)
}
