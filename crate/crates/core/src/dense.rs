//! Bitmask view of a framework for subset enumeration.
//!
//! Arguments are indexed in label order and subsets become `u32` masks, which
//! keeps the inner loops of the solvers branch-light. The view is capped at
//! [`MAX_SOLVE_ARGUMENTS`] arguments; callers surface that as
//! `CapacityExceeded`.

use crate::error::{Error, Result};
use crate::framework::{Argument, ArgumentSet, ArgumentationFramework};

/// Largest framework the subset-enumeration engine accepts.
pub const MAX_SOLVE_ARGUMENTS: usize = 24;

pub(crate) struct Dense<'a> {
    pub labels: Vec<&'a Argument>,
    pub n: usize,
    /// `out[i]`: mask of arguments attacked by `i`.
    pub out: Vec<u32>,
    /// `inn[i]`: mask of arguments attacking `i`.
    pub inn: Vec<u32>,
}

impl<'a> Dense<'a> {
    pub fn new(af: &'a ArgumentationFramework) -> Result<Self> {
        let labels: Vec<&Argument> = af.arguments().iter().collect();
        let n = labels.len();
        if n > MAX_SOLVE_ARGUMENTS {
            return Err(Error::CapacityExceeded {
                what: "framework size for subset enumeration",
                limit: MAX_SOLVE_ARGUMENTS,
                actual: n,
            });
        }
        let mut out = vec![0u32; n];
        let mut inn = vec![0u32; n];
        for (a, b) in af.attacks() {
            let i = index_of(&labels, a).expect("attack endpoint is declared");
            let j = index_of(&labels, b).expect("attack endpoint is declared");
            out[i] |= 1 << j;
            inn[j] |= 1 << i;
        }
        Ok(Dense { labels, n, out, inn })
    }

    pub fn full(&self) -> u32 {
        if self.n == 0 {
            0
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn to_set(&self, mask: u32) -> ArgumentSet {
        self.bits(mask).map(|i| self.labels[i].clone()).collect()
    }

    /// Mask for a set of arguments, all of which must exist in the view.
    #[cfg(test)]
    pub fn to_mask(&self, set: &ArgumentSet) -> u32 {
        set.iter()
            .map(|a| {
                1u32 << index_of(&self.labels, a).expect("argument belongs to the framework")
            })
            .fold(0, |acc, bit| acc | bit)
    }

    pub fn bits(&self, mask: u32) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |i| mask & (1 << i) != 0)
    }

    /// Mask of arguments attacked by some member of `mask`.
    pub fn attacked_by(&self, mask: u32) -> u32 {
        self.bits(mask).fold(0, |acc, i| acc | self.out[i])
    }

    pub fn conflict_free(&self, mask: u32) -> bool {
        self.attacked_by(mask) & mask == 0
    }

    /// Mask of arguments whose every attacker is attacked by `mask`.
    pub fn characteristic(&self, mask: u32) -> u32 {
        let attacked = self.attacked_by(mask);
        (0..self.n)
            .filter(|&i| self.inn[i] & !attacked == 0)
            .fold(0, |acc, i| acc | (1 << i))
    }

    pub fn admissible(&self, mask: u32) -> bool {
        if !self.conflict_free(mask) {
            return false;
        }
        let attacked = self.attacked_by(mask);
        self.bits(mask).all(|i| self.inn[i] & !attacked == 0)
    }

    pub fn range(&self, mask: u32) -> u32 {
        mask | self.attacked_by(mask)
    }
}

fn index_of(labels: &[&Argument], a: &Argument) -> Option<usize> {
    labels.binary_search_by(|l| l.as_str().cmp(a.as_str())).ok()
}
