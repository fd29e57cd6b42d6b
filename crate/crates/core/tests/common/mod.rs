//! Definition-level oracle used by the integration suites.
//!
//! Everything here recomputes extension families by filtering all `2^n`
//! subsets against the textbook definitions over plain string sets, sharing
//! no code with the library's solver, so agreement between the two is
//! meaningful evidence.

// Each test target uses a different slice of this module.
#![allow(dead_code)]

use std::collections::BTreeSet;

use afaudit::{ArgumentationFramework, ExtensionSet, SemanticsId};

pub type Labels = BTreeSet<String>;
pub type Attacks = BTreeSet<(String, String)>;

pub fn plain(af: &ArgumentationFramework) -> (Labels, Attacks) {
    let arguments = af.arguments().iter().map(|a| a.to_string()).collect();
    let attacks = af
        .attacks()
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    (arguments, attacks)
}

pub fn plain_family(family: &ExtensionSet) -> BTreeSet<Labels> {
    family
        .iter()
        .map(|e| e.iter().map(|a| a.to_string()).collect())
        .collect()
}

fn subsets(arguments: &Labels) -> Vec<Labels> {
    let items: Vec<&String> = arguments.iter().collect();
    (0..1u32 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect()
}

fn conflict_free(attacks: &Attacks, set: &Labels) -> bool {
    attacks
        .iter()
        .all(|(a, b)| !set.contains(a) || !set.contains(b))
}

fn set_attacks(attacks: &Attacks, set: &Labels, target: &String) -> bool {
    attacks
        .iter()
        .any(|(a, b)| b == target && set.contains(a))
}

fn acceptable(attacks: &Attacks, set: &Labels, argument: &String) -> bool {
    attacks
        .iter()
        .all(|(a, b)| b != argument || set_attacks(attacks, set, a))
}

fn admissible(attacks: &Attacks, set: &Labels) -> bool {
    conflict_free(attacks, set) && set.iter().all(|x| acceptable(attacks, set, x))
}

fn complete(arguments: &Labels, attacks: &Attacks, set: &Labels) -> bool {
    admissible(attacks, set)
        && arguments
            .iter()
            .all(|x| !acceptable(attacks, set, x) || set.contains(x))
}

fn range(attacks: &Attacks, set: &Labels) -> Labels {
    let mut out = set.clone();
    for (a, b) in attacks {
        if set.contains(a) {
            out.insert(b.clone());
        }
    }
    out
}

fn maximal(family: Vec<Labels>) -> BTreeSet<Labels> {
    family
        .iter()
        .filter(|s| {
            !family
                .iter()
                .any(|t| *s != t && s.is_subset(t))
        })
        .cloned()
        .collect()
}

fn range_maximal(attacks: &Attacks, family: Vec<Labels>) -> BTreeSet<Labels> {
    let ranges: Vec<Labels> = family.iter().map(|s| range(attacks, s)).collect();
    family
        .iter()
        .zip(&ranges)
        .filter(|(_, r)| !ranges.iter().any(|t| *r != t && r.is_subset(t)))
        .map(|(s, _)| s.clone())
        .collect()
}

/// The unique maximal admissible set contained in every member of `upper`.
fn contained_maximal_admissible(
    attacks: &Attacks,
    all: &[Labels],
    upper: &BTreeSet<Labels>,
) -> BTreeSet<Labels> {
    let candidates: Vec<Labels> = all
        .iter()
        .filter(|s| admissible(attacks, s) && upper.iter().all(|u| s.is_subset(u)))
        .cloned()
        .collect();
    let best = maximal(candidates);
    assert_eq!(best.len(), 1, "the contained maximal admissible set is unique");
    best
}

fn reachability(arguments: &Labels, attacks: &Attacks) -> BTreeSet<(String, String)> {
    let mut closure: BTreeSet<(String, String)> = attacks.clone();
    loop {
        let mut added = Vec::new();
        for (a, b) in &closure {
            for (b2, c) in &closure {
                if b == b2 && !closure.contains(&(a.clone(), c.clone())) {
                    added.push((a.clone(), c.clone()));
                }
            }
        }
        if added.is_empty() {
            break;
        }
        closure.extend(added);
    }
    closure
        .into_iter()
        .filter(|(a, b)| arguments.contains(a) && arguments.contains(b))
        .collect()
}

fn components(arguments: &Labels, attacks: &Attacks) -> Vec<Labels> {
    let reach = reachability(arguments, attacks);
    let mut remaining: Labels = arguments.clone();
    let mut out = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let component: Labels = arguments
            .iter()
            .filter(|x| {
                **x == seed
                    || (reach.contains(&(seed.clone(), (*x).clone()))
                        && reach.contains(&((*x).clone(), seed.clone())))
            })
            .cloned()
            .collect();
        for x in &component {
            remaining.remove(x);
        }
        out.push(component);
    }
    out
}

fn restrict(arguments: &Labels, attacks: &Attacks, keep: &Labels) -> (Labels, Attacks) {
    let arguments = arguments.intersection(keep).cloned().collect();
    let attacks = attacks
        .iter()
        .filter(|(a, b)| keep.contains(a) && keep.contains(b))
        .cloned()
        .collect();
    (arguments, attacks)
}

/// Membership test for the component-recursive families; `base` is naive or
/// stage.
fn component_recursive_member(
    arguments: &Labels,
    attacks: &Attacks,
    base: SemanticsId,
    set: &Labels,
) -> bool {
    let sccs = components(arguments, attacks);
    if sccs.len() <= 1 {
        return oracle(arguments, attacks, base).contains(set);
    }
    sccs.iter().all(|scc| {
        let defeated: Labels = scc
            .iter()
            .filter(|b| {
                attacks
                    .iter()
                    .any(|(a, t)| t == *b && set.contains(a) && !scc.contains(a))
            })
            .cloned()
            .collect();
        let survivors: Labels = scc.difference(&defeated).cloned().collect();
        let part: Labels = set.intersection(scc).cloned().collect();
        if !part.is_subset(&survivors) {
            return false;
        }
        let (sub_args, sub_atts) = restrict(arguments, attacks, &survivors);
        component_recursive_member(&sub_args, &sub_atts, base, &part)
    })
}

/// Extension family per the literal definition of each semantics.
pub fn oracle(arguments: &Labels, attacks: &Attacks, sem: SemanticsId) -> BTreeSet<Labels> {
    let all = subsets(arguments);
    match sem {
        SemanticsId::Complete => all
            .into_iter()
            .filter(|s| complete(arguments, attacks, s))
            .collect(),
        SemanticsId::Grounded => {
            let complete_sets: Vec<Labels> = all
                .into_iter()
                .filter(|s| complete(arguments, attacks, s))
                .collect();
            let least: Vec<Labels> = complete_sets
                .iter()
                .filter(|s| complete_sets.iter().all(|t| s.is_subset(t)))
                .cloned()
                .collect();
            assert_eq!(least.len(), 1, "the least complete set is unique");
            least.into_iter().collect()
        }
        SemanticsId::Preferred => maximal(
            all.into_iter()
                .filter(|s| admissible(attacks, s))
                .collect(),
        ),
        SemanticsId::Stable => all
            .into_iter()
            .filter(|s| conflict_free(attacks, s) && range(attacks, s) == *arguments)
            .collect(),
        SemanticsId::SemiStable => range_maximal(
            attacks,
            all.into_iter()
                .filter(|s| complete(arguments, attacks, s))
                .collect(),
        ),
        SemanticsId::Ideal => {
            let preferred = oracle(arguments, attacks, SemanticsId::Preferred);
            contained_maximal_admissible(attacks, &all, &preferred)
        }
        SemanticsId::Eager => {
            let semi_stable = oracle(arguments, attacks, SemanticsId::SemiStable);
            contained_maximal_admissible(attacks, &all, &semi_stable)
        }
        SemanticsId::Naive => maximal(
            all.into_iter()
                .filter(|s| conflict_free(attacks, s))
                .collect(),
        ),
        SemanticsId::Stage => range_maximal(
            attacks,
            all.into_iter()
                .filter(|s| conflict_free(attacks, s))
                .collect(),
        ),
        SemanticsId::Cf2 => all
            .into_iter()
            .filter(|s| component_recursive_member(arguments, attacks, SemanticsId::Naive, s))
            .collect(),
        SemanticsId::Stage2 => all
            .into_iter()
            .filter(|s| component_recursive_member(arguments, attacks, SemanticsId::Stage, s))
            .collect(),
    }
}
