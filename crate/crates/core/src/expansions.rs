//! Expansion relations between framework pairs and seeded random generators
//! for frameworks and expansions.
//!
//! The classifier reports cumulative flags: every normal, non-cyclic, or
//! rational-man's expansion is in particular an expansion, and the
//! rational-man's relation requires both normal and non-cyclic. Cycle-set
//! equality is decided on canonical cycle representations, so relabeled
//! rotations of the same cycle never compare unequal.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::framework::{Argument, ArgumentSet, ArgumentationFramework};

/// One level of the expansion hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpansionKind {
    NotExpansion,
    Expansion,
    Normal,
    NonCyclic,
    RationalMan,
}

impl ExpansionKind {
    pub fn name(self) -> &'static str {
        match self {
            ExpansionKind::NotExpansion => "not_expansion",
            ExpansionKind::Expansion => "expansion",
            ExpansionKind::Normal => "normal",
            ExpansionKind::NonCyclic => "non_cyclic",
            ExpansionKind::RationalMan => "rational_man",
        }
    }
}

impl fmt::Display for ExpansionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExpansionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "not_expansion" => Ok(ExpansionKind::NotExpansion),
            "expansion" => Ok(ExpansionKind::Expansion),
            "normal" => Ok(ExpansionKind::Normal),
            "non_cyclic" | "non-cyclic" => Ok(ExpansionKind::NonCyclic),
            "rational_man" | "rational-man" => Ok(ExpansionKind::RationalMan),
            other => Err(Error::InvalidParameter(format!(
                "unknown expansion kind {other:?}"
            ))),
        }
    }
}

/// Classification result for an ordered framework pair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExpansionFlags {
    pub expansion: bool,
    pub normal: bool,
    pub non_cyclic: bool,
    pub rational_man: bool,
}

impl ExpansionFlags {
    pub fn includes(&self, kind: ExpansionKind) -> bool {
        match kind {
            ExpansionKind::NotExpansion => !self.expansion,
            ExpansionKind::Expansion => self.expansion,
            ExpansionKind::Normal => self.normal,
            ExpansionKind::NonCyclic => self.non_cyclic,
            ExpansionKind::RationalMan => self.rational_man,
        }
    }

    /// The raised flags as kinds; a non-expansion reports `{not_expansion}`.
    pub fn kinds(&self) -> Vec<ExpansionKind> {
        if !self.expansion {
            return vec![ExpansionKind::NotExpansion];
        }
        let mut kinds = vec![ExpansionKind::Expansion];
        if self.normal {
            kinds.push(ExpansionKind::Normal);
        }
        if self.non_cyclic {
            kinds.push(ExpansionKind::NonCyclic);
        }
        if self.rational_man {
            kinds.push(ExpansionKind::RationalMan);
        }
        kinds
    }
}

impl fmt::Display for ExpansionFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, kind) in self.kinds().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{kind}")?;
        }
        f.write_str("}")
    }
}

/// Does `expanded` contain every argument and attack of `base`?
pub fn is_expansion(base: &ArgumentationFramework, expanded: &ArgumentationFramework) -> bool {
    base.arguments().is_subset(expanded.arguments())
        && base.attacks().is_subset(expanded.attacks())
}

/// An expansion is normal when no added attack joins two base arguments.
pub fn is_normal_expansion(
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
) -> bool {
    is_expansion(base, expanded)
        && expanded.attacks().iter().all(|(a, b)| {
            base.attacks().contains(&(a.clone(), b.clone()))
                || !base.contains_argument(a)
                || !base.contains_argument(b)
        })
}

/// Classifies the ordered pair into the expansion hierarchy.
///
/// The cycle flags are decided through reachability and strongly connected
/// components rather than cycle enumeration, so cycle-dense inputs are fine.
pub fn classify_expansion(
    base: &ArgumentationFramework,
    expanded: &ArgumentationFramework,
) -> Result<ExpansionFlags> {
    if !is_expansion(base, expanded) {
        return Ok(ExpansionFlags::default());
    }
    let normal = is_normal_expansion(base, expanded);

    // Attacks are never removed, so every base cycle survives the expansion.
    // The cycle sets can then only differ when some added attack (a, b) lies
    // on a cycle of the expanded framework, i.e. when b attacks its way back
    // to a there.
    let mut non_cyclic = true;
    for (a, b) in expanded.attacks() {
        if base.attacks().contains(&(a.clone(), b.clone())) {
            continue;
        }
        if expanded.is_reachable(b, a)? {
            non_cyclic = false;
            break;
        }
    }

    let rational_man = normal && non_cyclic && {
        let on_cycle = expanded.cycle_arguments();
        let new_arguments: Vec<&Argument> = expanded
            .arguments()
            .iter()
            .filter(|a| !base.contains_argument(a))
            .collect();
        let mut ok = true;
        'outer: for a in base.arguments() {
            if !on_cycle.contains(a) {
                continue;
            }
            for b in &new_arguments {
                if expanded.is_reachable(a, b)? {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };

    Ok(ExpansionFlags {
        expansion: true,
        normal,
        non_cyclic,
        rational_man,
    })
}

/// Parameters for the random generators. Output is a pure function of the
/// parameters: the same seed always reproduces the same framework.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub num_arguments: usize,
    pub attack_probability: f64,
    pub allow_self_attacks: bool,
    pub num_new_arguments: usize,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            num_arguments: 0,
            attack_probability: 0.25,
            allow_self_attacks: false,
            num_new_arguments: 0,
            seed: 0,
        }
    }
}

impl GenParams {
    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.attack_probability) {
            return Err(Error::InvalidParameter(format!(
                "attack_probability must lie in [0, 1], got {}",
                self.attack_probability
            )));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn fresh_argument(index: usize) -> Argument {
    Argument::new(format!("a{index}")).expect("generated label is valid")
}

/// New-argument labels: b0, b1, ..., skipping names the base already uses.
fn fresh_expansion_arguments(base: &ArgumentationFramework, count: usize) -> Vec<Argument> {
    let mut out = Vec::with_capacity(count);
    let mut next = 0usize;
    while out.len() < count {
        let candidate = Argument::new(format!("b{next}")).expect("generated label is valid");
        next += 1;
        if !base.contains_argument(&candidate) {
            out.push(candidate);
        }
    }
    out
}

/// A random framework over arguments a0..a{n-1}: one probability draw per
/// ordered pair, visited in row-major label order (self pairs only when
/// allowed).
pub fn generate_framework(params: &GenParams) -> Result<ArgumentationFramework> {
    params.validate()?;
    let mut rng = params.rng();
    let arguments: Vec<Argument> = (0..params.num_arguments).map(fresh_argument).collect();
    let mut attacks = Vec::new();
    for a in &arguments {
        for b in &arguments {
            if a == b && !params.allow_self_attacks {
                continue;
            }
            if rng.gen::<f64>() < params.attack_probability {
                attacks.push((a.clone(), b.clone()));
            }
        }
    }
    ArgumentationFramework::from_sets(arguments.into_iter().collect(), attacks.into_iter().collect())
}

/// Candidate attack pairs with at least one new endpoint, in a fixed order:
/// base arguments in label order, then new arguments in creation order.
fn expansion_pairs(base_args: &[Argument], new_args: &[Argument]) -> Vec<(Argument, Argument)> {
    let all: Vec<&Argument> = base_args.iter().chain(new_args.iter()).collect();
    let base_len = base_args.len();
    let mut pairs = Vec::new();
    for i in 0..all.len() {
        for j in 0..all.len() {
            if i < base_len && j < base_len {
                continue; // both endpoints old: never added
            }
            pairs.push((all[i].clone(), all[j].clone()));
        }
    }
    pairs
}

/// A normal expansion of `base`: adds `num_new_arguments` fresh arguments
/// and random attacks touching at least one of them.
pub fn generate_normal_expansion(
    base: &ArgumentationFramework,
    params: &GenParams,
) -> Result<ArgumentationFramework> {
    params.validate()?;
    let mut rng = params.rng();
    let base_args: Vec<Argument> = base.arguments().iter().cloned().collect();
    let new_args = fresh_expansion_arguments(base, params.num_new_arguments);

    let mut arguments = base.argument_set();
    for a in &new_args {
        arguments.insert(a.clone());
    }
    let mut attacks: Vec<(Argument, Argument)> =
        base.attacks().iter().cloned().collect();
    for (a, b) in expansion_pairs(&base_args, &new_args) {
        if a == b && !params.allow_self_attacks {
            continue;
        }
        if rng.gen::<f64>() < params.attack_probability {
            attacks.push((a, b));
        }
    }
    let expanded = ArgumentationFramework::from_sets(
        arguments.iter().cloned().collect(),
        attacks.into_iter().collect(),
    )?;
    debug_assert!(is_normal_expansion(base, &expanded));
    Ok(expanded)
}

/// A rational-man's expansion of `base`: like the normal generator, but a
/// drawn attack is discarded when it would close a cycle or let a new
/// argument become reachable from a base argument that lies on a cycle.
///
/// The probability draw happens for every candidate pair whether or not the
/// attack survives, so rejection never shifts the randomness of later pairs.
pub fn generate_rational_mans_expansion(
    base: &ArgumentationFramework,
    params: &GenParams,
) -> Result<ArgumentationFramework> {
    params.validate()?;
    let mut rng = params.rng();
    let base_args: Vec<Argument> = base.arguments().iter().cloned().collect();
    let new_args = fresh_expansion_arguments(base, params.num_new_arguments);
    // No attack may close a cycle, so the cycle-resident arguments stay
    // exactly those of the base.
    let on_cycle = base.cycle_arguments();

    let mut arguments = base.argument_set();
    for a in &new_args {
        arguments.insert(a.clone());
    }
    let mut attacks: Vec<(Argument, Argument)> =
        base.attacks().iter().cloned().collect();

    let reaches = |attacks: &[(Argument, Argument)], from: &Argument, to: &Argument| -> bool {
        let mut frontier = vec![from.clone()];
        let mut seen = ArgumentSet::new();
        while let Some(v) = frontier.pop() {
            for (x, y) in attacks {
                if x == &v && !seen.contains(y) {
                    if y == to {
                        return true;
                    }
                    seen.insert(y.clone());
                    frontier.push(y.clone());
                }
            }
        }
        false
    };
    let is_new = |a: &Argument| -> bool { !base.contains_argument(a) };

    for (a, b) in expansion_pairs(&base_args, &new_args) {
        if a == b && !params.allow_self_attacks {
            continue;
        }
        if rng.gen::<f64>() >= params.attack_probability {
            continue;
        }
        // A self-attack or an attack whose target already reaches its source
        // would create a cycle.
        if a == b || reaches(&attacks, &b, &a) {
            continue;
        }
        // Adding (a, b) must not complete a path from a cycle argument to a
        // new argument: the source side may not descend from a cycle, or the
        // target side may not lead into the new arguments.
        let source_tainted =
            on_cycle.contains(&a) || on_cycle.iter().any(|c| reaches(&attacks, c, &a));
        let target_reaches_new =
            is_new(&b) || new_args.iter().any(|m| reaches(&attacks, &b, m));
        if source_tainted && target_reaches_new {
            continue;
        }
        attacks.push((a, b));
    }

    let expanded = ArgumentationFramework::from_sets(
        arguments.iter().cloned().collect(),
        attacks.into_iter().collect(),
    )?;
    debug_assert!(classify_expansion(base, &expanded)?.rational_man);
    Ok(expanded)
}

/// Seed for the i-th pair of a batch: decorrelates consecutive pairs while
/// keeping the whole batch a function of the master seed.
pub(crate) fn nth_seed(master: u64, index: u64) -> u64 {
    master.wrapping_add(index.wrapping_mul(0x9E3779B97F4A7C15))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn af(arguments: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
        ArgumentationFramework::new(arguments, attacks).unwrap()
    }

    #[test]
    fn classification_matches_the_hierarchy() {
        let base = af(&["a", "b"], &[("a", "b")]);

        let with_cycle = af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        let flags = classify_expansion(&base, &with_cycle).unwrap();
        assert!(flags.expansion && flags.normal);
        assert!(!flags.non_cyclic && !flags.rational_man);

        let guarded = af(&["a", "b", "c"], &[("a", "b"), ("c", "b")]);
        let flags = classify_expansion(&base, &guarded).unwrap();
        assert_eq!(
            flags,
            ExpansionFlags { expansion: true, normal: true, non_cyclic: true, rational_man: true }
        );

        let back_attack = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        let flags = classify_expansion(&base, &back_attack).unwrap();
        assert!(flags.expansion && !flags.normal);
        assert_eq!(flags.kinds(), vec![ExpansionKind::Expansion]);

        let unrelated = af(&["x"], &[]);
        let flags = classify_expansion(&base, &unrelated).unwrap();
        assert!(!flags.expansion);
        assert_eq!(flags.kinds(), vec![ExpansionKind::NotExpansion]);
        assert!(flags.includes(ExpansionKind::NotExpansion));
    }

    #[test]
    fn new_cycle_through_new_arguments_breaks_non_cyclic() {
        let base = af(&["a", "b", "c"], &[("b", "a"), ("c", "a")]);
        let expanded = af(
            &["a", "b", "c", "d", "e", "f"],
            &[("b", "a"), ("c", "a"), ("d", "c"), ("e", "d"), ("f", "e"), ("d", "f")],
        );
        let flags = classify_expansion(&base, &expanded).unwrap();
        assert!(flags.normal && !flags.non_cyclic && !flags.rational_man);
    }

    #[test]
    fn reaching_into_a_new_cycle_is_not_rational() {
        let base = af(&["a"], &[]);
        let expanded = af(
            &["a", "b", "c", "d"],
            &[("b", "a"), ("c", "b"), ("d", "c"), ("b", "d")],
        );
        let flags = classify_expansion(&base, &expanded).unwrap();
        assert!(flags.expansion && flags.normal);
        assert!(!flags.non_cyclic && !flags.rational_man);
    }

    #[test]
    fn identity_is_a_rational_mans_expansion() {
        let cyclic = af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        let flags = classify_expansion(&cyclic, &cyclic).unwrap();
        assert_eq!(
            flags,
            ExpansionFlags { expansion: true, normal: true, non_cyclic: true, rational_man: true }
        );
    }

    #[test]
    fn classification_handles_cycle_dense_frameworks() {
        // A complete digraph on 12 arguments holds over 10^8 simple cycles,
        // far past any enumeration budget; classification must not care.
        let dense = GenParams {
            num_arguments: 12,
            attack_probability: 1.0,
            allow_self_attacks: true,
            seed: 77,
            ..GenParams::default()
        };
        let base = generate_framework(&dense).unwrap();
        let expanded = generate_normal_expansion(
            &base,
            &GenParams { num_new_arguments: 3, ..dense },
        )
        .unwrap();
        let flags = classify_expansion(&base, &expanded).unwrap();
        assert!(flags.expansion && flags.normal);
        assert!(!flags.non_cyclic && !flags.rational_man);

        let flags = classify_expansion(&base, &base).unwrap();
        assert!(flags.rational_man);
    }

    #[test]
    fn generated_frameworks_are_deterministic() {
        let params = GenParams {
            num_arguments: 6,
            attack_probability: 0.4,
            seed: 11,
            ..GenParams::default()
        };
        let first = generate_framework(&params).unwrap();
        let second = generate_framework(&params).unwrap();
        assert_eq!(first, second);
        assert_eq!(first.argument_count(), 6);

        let other_seed = generate_framework(&GenParams { seed: 12, ..params }).unwrap();
        assert_ne!(first, other_seed);
    }

    #[test]
    fn generator_probability_extremes() {
        let empty = generate_framework(&GenParams {
            num_arguments: 3,
            attack_probability: 0.0,
            seed: 5,
            ..GenParams::default()
        })
        .unwrap();
        assert_eq!(empty.attack_count(), 0);

        let complete = generate_framework(&GenParams {
            num_arguments: 2,
            attack_probability: 1.0,
            seed: 5,
            ..GenParams::default()
        })
        .unwrap();
        assert_eq!(complete, af(&["a0", "a1"], &[("a0", "a1"), ("a1", "a0")]));

        assert!(matches!(
            generate_framework(&GenParams {
                attack_probability: 1.5,
                ..GenParams::default()
            }),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn normal_expansion_generator_postconditions() {
        let base = af(&["a", "b0"], &[("a", "b0")]);
        let expanded = generate_normal_expansion(
            &base,
            &GenParams {
                attack_probability: 1.0,
                num_new_arguments: 1,
                seed: 3,
                ..GenParams::default()
            },
        )
        .unwrap();
        // b0 is taken by the base, so the fresh argument is b1.
        let b1 = Argument::new("b1").unwrap();
        assert!(expanded.contains_argument(&b1));
        assert_eq!(expanded.argument_count(), 3);
        assert!(is_normal_expansion(&base, &expanded));

        let unchanged = generate_normal_expansion(
            &base,
            &GenParams { attack_probability: 0.0, seed: 9, ..GenParams::default() },
        )
        .unwrap();
        assert_eq!(unchanged, base);
    }

    #[test]
    fn rational_expansion_generator_postconditions() {
        for seed in 0..40 {
            let base = generate_framework(&GenParams {
                num_arguments: 4,
                attack_probability: 0.5,
                seed,
                ..GenParams::default()
            })
            .unwrap();
            let expanded = generate_rational_mans_expansion(
                &base,
                &GenParams {
                    num_new_arguments: 2,
                    attack_probability: 0.7,
                    seed: seed ^ 0xABCD,
                    ..GenParams::default()
                },
            )
            .unwrap();
            let flags = classify_expansion(&base, &expanded).unwrap();
            assert!(flags.rational_man, "seed {seed}: {base:?} -> {expanded:?}");
        }
    }

    #[test]
    fn rational_generator_still_attacks_the_base() {
        // A cycle-free base accepts attacks in both directions.
        let base = af(&["a", "b"], &[("a", "b")]);
        let expanded = generate_rational_mans_expansion(
            &base,
            &GenParams {
                num_new_arguments: 1,
                attack_probability: 1.0,
                seed: 0,
                ..GenParams::default()
            },
        )
        .unwrap();
        // The first drawn pair (a, b0) lands; everything closing a cycle
        // afterwards is discarded.
        assert!(expanded.attack_count() > base.attack_count());
        assert!(classify_expansion(&base, &expanded).unwrap().rational_man);
    }
}
