//! Preference-based argumentation frameworks: attacks only defeat an
//! argument when the target does not weakly prefer itself over the
//! attacker. Acceptance is a single set computed by `tau_preferred`, not an
//! extension family.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::expansions::{classify_expansion, is_normal_expansion};
use crate::framework::{Argument, ArgumentSet, ArgumentationFramework};
use crate::principles::{PrincipleId, PrincipleVerdict, Witness};

/// A framework with a preference ordering over its arguments.
///
/// Preferences are kept as the transitive closure of the declared pairs,
/// with reflexive pairs implicit; `(x, y)` means x is weakly preferred to
/// y. The closure must be antisymmetric or construction fails.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreferenceBasedFramework {
    framework: ArgumentationFramework,
    prefs: BTreeSet<(Argument, Argument)>,
}

impl PreferenceBasedFramework {
    /// Builds a framework from label slices; `prefs` pairs read "first is
    /// weakly preferred to second". Attack and preference endpoints must be
    /// listed among the arguments.
    pub fn new(
        arguments: &[&str],
        attacks: &[(&str, &str)],
        prefs: &[(&str, &str)],
    ) -> Result<Self> {
        let framework = ArgumentationFramework::new(arguments, attacks)?;
        let prefs = prefs
            .iter()
            .map(|(a, b)| Ok((Argument::new(*a)?, Argument::new(*b)?)))
            .collect::<Result<_>>()?;
        Self::from_parts(framework, prefs)
    }

    pub fn from_parts(
        framework: ArgumentationFramework,
        prefs: BTreeSet<(Argument, Argument)>,
    ) -> Result<Self> {
        for (a, b) in &prefs {
            for end in [a, b] {
                if !framework.contains_argument(end) {
                    return Err(Error::MemberOutOfFramework(end.as_str().to_owned()));
                }
            }
        }
        let prefs = transitive_closure(prefs);
        for (a, b) in &prefs {
            if a != b && prefs.contains(&(b.clone(), a.clone())) {
                return Err(Error::ConflictingPreferences(
                    a.as_str().to_owned(),
                    b.as_str().to_owned(),
                ));
            }
        }
        Ok(PreferenceBasedFramework { framework, prefs })
    }

    /// The underlying attack framework, preferences dropped.
    pub fn abstract_framework(&self) -> &ArgumentationFramework {
        &self.framework
    }

    pub fn arguments(&self) -> &BTreeSet<Argument> {
        self.framework.arguments()
    }

    pub fn argument_set(&self) -> ArgumentSet {
        self.framework.argument_set()
    }

    pub fn attacks(&self) -> &BTreeSet<(Argument, Argument)> {
        self.framework.attacks()
    }

    /// The transitive closure of the declared preference pairs, reflexive
    /// pairs still implicit.
    pub fn preferences(&self) -> &BTreeSet<(Argument, Argument)> {
        &self.prefs
    }

    /// Whether `a` is weakly preferred to `b`.
    pub fn prefers(&self, a: &Argument, b: &Argument) -> bool {
        a == b || self.prefs.contains(&(a.clone(), b.clone()))
    }
}

impl fmt::Debug for PreferenceBasedFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} with prefs {{", self.framework)?;
        for (i, (a, b)) in self.prefs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a}, {b})")?;
        }
        f.write_str("}")
    }
}

fn transitive_closure(
    pairs: BTreeSet<(Argument, Argument)>,
) -> BTreeSet<(Argument, Argument)> {
    let mut closed = pairs;
    loop {
        let mut added = Vec::new();
        for (a, b) in &closed {
            for (b2, c) in &closed {
                if b == b2 && a != c && !closed.contains(&(a.clone(), c.clone())) {
                    added.push((a.clone(), c.clone()));
                }
            }
        }
        if added.is_empty() {
            return closed;
        }
        closed.extend(added);
    }
}

/// The accepted arguments: those that weakly prefer themselves over each of
/// their attackers.
pub fn tau_preferred(paf: &PreferenceBasedFramework) -> ArgumentSet {
    paf.arguments()
        .iter()
        .filter(|a| {
            paf.attacks()
                .iter()
                .all(|(b, target)| &target != a || paf.prefers(a, b))
        })
        .cloned()
        .collect()
}

/// Expansion classification for preference-based frameworks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PafExpansionFlags {
    pub normal_paf: bool,
    pub rational_man_paf: bool,
}

impl fmt::Display for PafExpansionFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = Vec::new();
        if self.normal_paf {
            names.push("normal_paf");
        }
        if self.rational_man_paf {
            names.push("rational_man_paf");
        }
        if names.is_empty() {
            names.push("none");
        }
        f.write_str(&names.join(", "))
    }
}

/// Classifies the pair: normal when the attack-level pair is a normal
/// expansion, preferences only grow, and every new preference (in the
/// closures) involves a new argument; rational-man when additionally the
/// attack-level pair is a rational man's expansion.
pub fn classify_paf_expansion(
    base: &PreferenceBasedFramework,
    expanded: &PreferenceBasedFramework,
) -> Result<PafExpansionFlags> {
    let base_af = base.abstract_framework();
    let expanded_af = expanded.abstract_framework();
    let prefs_grow = base.preferences().is_subset(expanded.preferences());
    let new_prefs_touch_new = expanded
        .preferences()
        .difference(base.preferences())
        .all(|(a, b)| !base_af.contains_argument(a) || !base_af.contains_argument(b));
    let normal_paf =
        is_normal_expansion(base_af, expanded_af) && prefs_grow && new_prefs_touch_new;
    let rational_man_paf =
        normal_paf && classify_expansion(base_af, expanded_af)?.rational_man;
    Ok(PafExpansionFlags {
        normal_paf,
        rational_man_paf,
    })
}

/// Reference independence of the accepted set across a normal PAF
/// expansion: when the expanded accepted set stays within the base
/// arguments, it must equal the base accepted set.
pub fn check_paf_reference_independence(
    base: &PreferenceBasedFramework,
    expanded: &PreferenceBasedFramework,
) -> Result<PrincipleVerdict> {
    if !classify_paf_expansion(base, expanded)?.normal_paf {
        return Err(Error::NotNormalExpansion);
    }
    let accepted = tau_preferred(base);
    let expanded_accepted = tau_preferred(expanded);
    let within_base = expanded_accepted.is_subset_of(&base.argument_set());
    if !within_base || expanded_accepted == accepted {
        return Ok(PrincipleVerdict {
            principle: PrincipleId::DecisionRefIndependence,
            holds: true,
            vacuous: !within_base,
            universally_defined: None,
            witness: None,
        });
    }
    Ok(PrincipleVerdict {
        principle: PrincipleId::DecisionRefIndependence,
        holds: false,
        vacuous: false,
        universally_defined: None,
        witness: Some(Witness {
            base_extension: Some(accepted.clone()),
            expanded_extension: Some(expanded_accepted.clone()),
            expanded_extensions: None,
            detail: format!(
                "the expanded accepted set {expanded_accepted} stays within the base arguments but differs from {accepted}"
            ),
        }),
    })
}
