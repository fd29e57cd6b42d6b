//! Core data model: arguments, argument sets, attack graphs, and the basic
//! acceptability predicates everything else is built from.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A single abstract argument, identified by its label.
///
/// Labels are nonempty strings over `[A-Za-z0-9_]`. Identity is label
/// equality: two `Argument` values with the same label denote the same
/// argument everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Argument(String);

impl Argument {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        let ok = !label.is_empty()
            && label.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_');
        if ok {
            Ok(Argument(label))
        } else {
            Err(Error::InvalidLabel(label))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A set of arguments. Iteration order is always lexicographic by label, so
/// every serialization derived from it is deterministic.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentSet(BTreeSet<Argument>);

impl ArgumentSet {
    pub fn new() -> Self {
        ArgumentSet(BTreeSet::new())
    }

    pub fn from_labels(labels: &[&str]) -> Result<Self> {
        labels.iter().map(|l| Argument::new(*l)).collect()
    }

    pub fn insert(&mut self, argument: Argument) -> bool {
        self.0.insert(argument)
    }

    pub fn contains(&self, argument: &Argument) -> bool {
        self.0.contains(argument)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Argument> {
        self.0.iter()
    }

    pub fn is_subset_of(&self, other: &ArgumentSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &ArgumentSet) -> ArgumentSet {
        ArgumentSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &ArgumentSet) -> ArgumentSet {
        ArgumentSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &ArgumentSet) -> ArgumentSet {
        ArgumentSet(self.0.difference(&other.0).cloned().collect())
    }
}

impl FromIterator<Argument> for ArgumentSet {
    fn from_iter<I: IntoIterator<Item = Argument>>(iter: I) -> Self {
        ArgumentSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ArgumentSet {
    type Item = &'a Argument;
    type IntoIter = std::collections::btree_set::Iter<'a, Argument>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite attack graph: a set of arguments and a binary attack relation
/// over them. The value is immutable once constructed.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentationFramework {
    arguments: BTreeSet<Argument>,
    attacks: BTreeSet<(Argument, Argument)>,
}

impl ArgumentationFramework {
    /// Builds a framework from label slices. Every attack endpoint must be
    /// listed among the arguments.
    pub fn new(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let arguments: BTreeSet<Argument> = arguments
            .iter()
            .map(|l| Argument::new(*l))
            .collect::<Result<_>>()?;
        let attacks: BTreeSet<(Argument, Argument)> = attacks
            .iter()
            .map(|(a, b)| Ok((Argument::new(*a)?, Argument::new(*b)?)))
            .collect::<Result<_>>()?;
        Self::from_sets(arguments, attacks)
    }

    pub fn from_sets(
        arguments: BTreeSet<Argument>,
        attacks: BTreeSet<(Argument, Argument)>,
    ) -> Result<Self> {
        for (a, b) in &attacks {
            for end in [a, b] {
                if !arguments.contains(end) {
                    return Err(Error::MemberOutOfFramework(end.as_str().to_owned()));
                }
            }
        }
        Ok(ArgumentationFramework { arguments, attacks })
    }

    pub fn empty() -> Self {
        ArgumentationFramework::default()
    }

    pub fn arguments(&self) -> &BTreeSet<Argument> {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<(Argument, Argument)> {
        &self.attacks
    }

    pub fn argument_count(&self) -> usize {
        self.arguments.len()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn contains_argument(&self, argument: &Argument) -> bool {
        self.arguments.contains(argument)
    }

    pub fn has_attack(&self, attacker: &Argument, target: &Argument) -> bool {
        self.attacks
            .contains(&(attacker.clone(), target.clone()))
    }

    /// All arguments of the framework as an owned set.
    pub fn argument_set(&self) -> ArgumentSet {
        self.arguments.iter().cloned().collect()
    }

    /// The arguments that attack `target`. Returns the empty set for an
    /// argument the framework does not know.
    pub fn attackers_of(&self, target: &Argument) -> ArgumentSet {
        self.attacks
            .iter()
            .filter(|(_, b)| b == target)
            .map(|(a, _)| a.clone())
            .collect()
    }

    /// The arguments that `attacker` attacks.
    pub fn targets_of(&self, attacker: &Argument) -> ArgumentSet {
        self.attacks
            .iter()
            .filter(|(a, _)| a == attacker)
            .map(|(_, b)| b.clone())
            .collect()
    }

    /// Does some member of `attackers` attack `target`?
    pub fn set_attacks(&self, attackers: &ArgumentSet, target: &Argument) -> bool {
        self.attacks
            .iter()
            .any(|(a, b)| b == target && attackers.contains(a))
    }

    pub(crate) fn ensure_member(&self, argument: &Argument) -> Result<()> {
        if self.arguments.contains(argument) {
            Ok(())
        } else {
            Err(Error::MemberOutOfFramework(argument.as_str().to_owned()))
        }
    }

    pub(crate) fn ensure_subset(&self, set: &ArgumentSet) -> Result<()> {
        for a in set {
            self.ensure_member(a)?;
        }
        Ok(())
    }

    /// No member of `set` attacks another member (or itself).
    pub fn is_conflict_free(&self, set: &ArgumentSet) -> Result<bool> {
        self.ensure_subset(set)?;
        Ok(!self
            .attacks
            .iter()
            .any(|(a, b)| set.contains(a) && set.contains(b)))
    }

    /// Every attacker of `argument` is counter-attacked by some member of
    /// `set`.
    pub fn is_acceptable(&self, argument: &Argument, set: &ArgumentSet) -> Result<bool> {
        self.ensure_member(argument)?;
        self.ensure_subset(set)?;
        Ok(self
            .attackers_of(argument)
            .iter()
            .all(|b| self.set_attacks(set, b)))
    }

    /// Conflict-free and every member is acceptable with respect to the set.
    pub fn is_admissible(&self, set: &ArgumentSet) -> Result<bool> {
        if !self.is_conflict_free(set)? {
            return Ok(false);
        }
        for a in set {
            if !self.is_acceptable(a, set)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every member `c` is acceptable with respect to some subset of
    /// `set \ {c}` that is itself strongly admissible.
    ///
    /// Decided by dynamic programming over the subsets of `set`, so the cost
    /// grows as `3^|set|`; sets beyond 16 members are rejected rather than
    /// left to run for hours.
    pub fn is_strongly_admissible(&self, set: &ArgumentSet) -> Result<bool> {
        self.ensure_subset(set)?;
        let members: Vec<&Argument> = set.iter().collect();
        let k = members.len();
        if k == 0 {
            return Ok(true);
        }
        if k > 16 {
            return Err(Error::CapacityExceeded {
                what: "strong admissibility set size",
                limit: 16,
                actual: k,
            });
        }

        // defender_masks[c][j]: members of `set` attacking the j-th attacker
        // of member c. Acceptability of c w.r.t. a subset is then a handful
        // of bit tests.
        let member_bit = |arg: &Argument| -> Option<u32> {
            members
                .binary_search_by(|m| m.as_str().cmp(arg.as_str()))
                .ok()
                .map(|i| 1u32 << i)
        };
        let defender_masks: Vec<Vec<u32>> = members
            .iter()
            .map(|c| {
                self.attackers_of(c)
                    .iter()
                    .map(|b| {
                        self.attackers_of(b)
                            .iter()
                            .filter_map(member_bit)
                            .fold(0u32, |acc, bit| acc | bit)
                    })
                    .collect()
            })
            .collect();
        let acceptable = |c: usize, sub: u32| defender_masks[c].iter().all(|dm| dm & sub != 0);

        let full = (1u32 << k) - 1;
        let mut strongly = vec![false; (full as usize) + 1];
        strongly[0] = true;
        for mask in 1..=full {
            let mut ok = true;
            for c in 0..k {
                let bit = 1u32 << c;
                if mask & bit == 0 {
                    continue;
                }
                let rest = mask & !bit;
                // Acceptability is monotone in the defending subset, so if
                // even the largest candidate fails there is nothing to scan.
                if !acceptable(c, rest) {
                    ok = false;
                    break;
                }
                let mut found = false;
                let mut sub = rest;
                loop {
                    if strongly[sub as usize] && acceptable(c, sub) {
                        found = true;
                        break;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                if !found {
                    ok = false;
                    break;
                }
            }
            strongly[mask as usize] = ok;
        }
        Ok(strongly[full as usize])
    }

    /// The set together with everything it attacks.
    pub fn range_of(&self, set: &ArgumentSet) -> Result<ArgumentSet> {
        self.ensure_subset(set)?;
        let mut range: ArgumentSet = set.clone();
        for (a, b) in &self.attacks {
            if set.contains(a) {
                range.insert(b.clone());
            }
        }
        Ok(range)
    }

    /// The framework induced on `arguments ∩ set`: the surviving arguments
    /// and every attack with both endpoints among them.
    pub fn restriction(&self, set: &ArgumentSet) -> ArgumentationFramework {
        let arguments: BTreeSet<Argument> = self
            .arguments
            .iter()
            .filter(|a| set.contains(a))
            .cloned()
            .collect();
        let attacks: BTreeSet<(Argument, Argument)> = self
            .attacks
            .iter()
            .filter(|(a, b)| arguments.contains(a) && arguments.contains(b))
            .cloned()
            .collect();
        ArgumentationFramework { arguments, attacks }
    }
}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {{", self.argument_set())?;
        for (i, (a, b)) in self.attacks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a}, {b})")?;
        }
        f.write_str("})")
    }
}
