//! Graph-theoretic structure of a framework: reachability along attacks,
//! strongly connected components, attack cycles, unattacked sets, and the
//! defeat partition of a component against an external set.

use std::collections::BTreeSet;
use std::fmt;

use crate::dense::Dense;
use crate::error::{Error, Result};
use crate::framework::{Argument, ArgumentSet, ArgumentationFramework};

/// Largest number of attack cycles [`ArgumentationFramework::attack_cycles`]
/// will enumerate before giving up with `CapacityExceeded`.
pub const CYCLE_BUDGET: usize = 100_000;

/// The unique partition of a framework into strongly connected components.
/// Arguments on no cycle form singleton components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccPartition {
    components: Vec<ArgumentSet>,
}

impl SccPartition {
    /// Components in canonical order (by their smallest member).
    pub fn components(&self) -> &[ArgumentSet] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of(&self, argument: &Argument) -> Option<&ArgumentSet> {
        self.components.iter().find(|c| c.contains(argument))
    }

    pub fn contains_component(&self, set: &ArgumentSet) -> bool {
        self.components.iter().any(|c| c == set)
    }
}

/// A simple attack cycle, stored as a closed walk whose first and last
/// entries coincide: a self-attack is `⟨a, a⟩`, a three-cycle `⟨a, b, c, a⟩`.
/// The walk starts at the lexicographically smallest argument on the cycle,
/// which makes the representation canonical under rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttackCycle {
    sequence: Vec<Argument>,
}

impl AttackCycle {
    pub fn sequence(&self) -> &[Argument] {
        &self.sequence
    }

    /// Number of attacks on the cycle (1 for a self-attack).
    pub fn len(&self) -> usize {
        self.sequence.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The distinct arguments on the cycle.
    pub fn arguments(&self) -> ArgumentSet {
        self.sequence[..self.sequence.len() - 1]
            .iter()
            .cloned()
            .collect()
    }
}

impl fmt::Display for AttackCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, a) in self.sequence.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for AttackCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How the members of a strongly connected component fare against an external
/// set `e`: `defeated` members are attacked by `e` from outside the
/// component; `provisionally_defeated` members escape that but have an
/// external attacker `e` does not attack; `undefeated` is the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpuPartition {
    pub defeated: ArgumentSet,
    pub provisionally_defeated: ArgumentSet,
    pub undefeated: ArgumentSet,
}

impl DpuPartition {
    /// Undefeated and provisionally defeated members together; this is the
    /// part of the component that stays alive for recursive evaluation.
    pub fn undefeated_or_provisional(&self) -> ArgumentSet {
        self.undefeated.union(&self.provisionally_defeated)
    }
}

impl ArgumentationFramework {
    /// Is there an attack path (at least one attack long) from `from` to
    /// `to`? In particular an argument reaches itself only when it lies on a
    /// cycle.
    pub fn is_reachable(&self, from: &Argument, to: &Argument) -> Result<bool> {
        self.ensure_member(from)?;
        self.ensure_member(to)?;
        let (labels, adj) = self.adjacency();
        let start = labels.binary_search(&from).expect("member was checked");
        let goal = labels.binary_search(&to).expect("member was checked");
        let mut seen = vec![false; labels.len()];
        let mut frontier: Vec<usize> = adj[start].clone();
        while let Some(v) = frontier.pop() {
            if v == goal {
                return Ok(true);
            }
            if !seen[v] {
                seen[v] = true;
                frontier.extend(adj[v].iter().copied());
            }
        }
        Ok(false)
    }

    /// The strongly connected components, in canonical order.
    pub fn sccs(&self) -> SccPartition {
        let (labels, adj) = self.adjacency();
        let comps = tarjan(labels.len(), &adj);
        let mut components: Vec<ArgumentSet> = comps
            .into_iter()
            .map(|c| c.into_iter().map(|i| labels[i].clone()).collect())
            .collect();
        components.sort();
        SccPartition { components }
    }

    /// All simple attack cycles, each in canonical rotation, sorted.
    ///
    /// Enumeration stops with `CapacityExceeded` once [`CYCLE_BUDGET`] cycles
    /// have been found.
    pub fn attack_cycles(&self) -> Result<Vec<AttackCycle>> {
        let (labels, adj) = self.adjacency();
        let index_cycles = simple_cycles(labels.len(), &adj, CYCLE_BUDGET)?;
        let mut cycles: Vec<AttackCycle> = index_cycles
            .into_iter()
            .map(|walk| AttackCycle {
                sequence: walk.into_iter().map(|i| labels[i].clone()).collect(),
            })
            .collect();
        cycles.sort();
        Ok(cycles)
    }

    /// The arguments lying on at least one attack cycle: members of a
    /// strongly connected component with two or more arguments, plus the
    /// self-attackers.
    pub fn cycle_arguments(&self) -> ArgumentSet {
        let mut on_cycle = ArgumentSet::new();
        for component in self.sccs().components() {
            if component.len() >= 2 {
                for a in component.iter() {
                    on_cycle.insert(a.clone());
                }
            }
        }
        for (a, b) in self.attacks() {
            if a == b {
                on_cycle.insert(a.clone());
            }
        }
        on_cycle
    }

    /// Splits the component `component` into defeated / provisionally
    /// defeated / undefeated members relative to the external set `e`.
    ///
    /// `component` must be one of `self.sccs()` and `e` a subset of the
    /// arguments.
    pub fn dpu_partition(&self, component: &ArgumentSet, e: &ArgumentSet) -> Result<DpuPartition> {
        self.ensure_subset(e)?;
        if !self.sccs().contains_component(component) {
            return Err(Error::NotAnScc);
        }

        // External attackers of the component.
        let outside_attackers: ArgumentSet = self
            .attacks()
            .iter()
            .filter(|(a, b)| !component.contains(a) && component.contains(b))
            .map(|(a, _)| a.clone())
            .collect();
        let relevant: ArgumentSet = e.intersection(&outside_attackers);

        let mut defeated = ArgumentSet::new();
        let mut provisionally = ArgumentSet::new();
        let mut undefeated = ArgumentSet::new();
        for a in component {
            if self.set_attacks(&relevant, a) {
                defeated.insert(a.clone());
            } else {
                let shaky = self
                    .attackers_of(a)
                    .iter()
                    .any(|b| outside_attackers.contains(b) && !self.set_attacks(e, b));
                if shaky {
                    provisionally.insert(a.clone());
                } else {
                    undefeated.insert(a.clone());
                }
            }
        }
        Ok(DpuPartition {
            defeated,
            provisionally_defeated: provisionally,
            undefeated,
        })
    }

    /// Every subset of the arguments that receives no attack from outside
    /// itself, in canonical (size, then lexicographic) order. The empty set
    /// and the full argument set are always included.
    ///
    /// The result is one entry per closed subset, found by scanning all
    /// `2^n` subsets, so the same capacity bound applies as for solving.
    pub fn unattacked_sets(&self) -> Result<Vec<ArgumentSet>> {
        let d = Dense::new(self)?;
        let full = d.full();
        let mut out = Vec::new();
        for mask in 0..=full {
            // Unattacked: no attacker of a member lies outside the set.
            let attacked_from_outside =
                d.bits(mask).any(|i| d.inn[i] & !mask != 0);
            if !attacked_from_outside {
                out.push(d.to_set(mask));
            }
            if full == 0 {
                break;
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Sorted label list plus forward adjacency (by index).
    fn adjacency(&self) -> (Vec<&Argument>, Vec<Vec<usize>>) {
        let labels: Vec<&Argument> = self.arguments().iter().collect();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
        for (a, b) in self.attacks() {
            let i = labels.binary_search(&a).expect("endpoint is declared");
            let j = labels.binary_search(&b).expect("endpoint is declared");
            adj[i].push(j);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        (labels, adj)
    }
}

/// Tarjan's strongly connected components over an index graph.
fn tarjan(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;

    struct State<'g> {
        adj: &'g [Vec<usize>],
        index: Vec<usize>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        comps: Vec<Vec<usize>>,
    }

    fn visit(v: usize, st: &mut State<'_>) {
        st.index[v] = st.next;
        st.low[v] = st.next;
        st.next += 1;
        st.stack.push(v);
        st.on_stack[v] = true;
        for &w in &st.adj[v] {
            if st.index[w] == UNVISITED {
                visit(w, st);
                st.low[v] = st.low[v].min(st.low[w]);
            } else if st.on_stack[w] {
                st.low[v] = st.low[v].min(st.index[w]);
            }
        }
        if st.low[v] == st.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().expect("stack holds the component");
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            st.comps.push(comp);
        }
    }

    let mut st = State {
        adj,
        index: vec![UNVISITED; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.index[v] == UNVISITED {
            visit(v, &mut st);
        }
    }
    st.comps
}

/// Johnson-style enumeration of elementary cycles. Each cycle is returned as
/// a closed index walk anchored at its smallest vertex, so with labels in
/// sorted order the rotation is canonical. Self-loops come out as `[v, v]`.
fn simple_cycles(n: usize, adj: &[Vec<usize>], budget: usize) -> Result<Vec<Vec<usize>>> {
    struct Search<'g> {
        adj: &'g [Vec<usize>],
        anchor: usize,
        in_comp: Vec<bool>,
        blocked: Vec<bool>,
        blist: Vec<BTreeSet<usize>>,
        path: Vec<usize>,
        out: Vec<Vec<usize>>,
        budget: usize,
    }

    impl Search<'_> {
        fn unblock(&mut self, v: usize) {
            self.blocked[v] = false;
            let waiting = std::mem::take(&mut self.blist[v]);
            for u in waiting {
                if self.blocked[u] {
                    self.unblock(u);
                }
            }
        }

        fn circuit(&mut self, v: usize) -> Result<bool> {
            let mut found = false;
            self.path.push(v);
            self.blocked[v] = true;
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                if !self.in_comp[w] || w == v {
                    continue; // self-loops are emitted separately
                }
                if w == self.anchor {
                    if self.out.len() >= self.budget {
                        return Err(Error::CapacityExceeded {
                            what: "number of attack cycles",
                            limit: self.budget,
                            actual: self.budget + 1,
                        });
                    }
                    let mut cycle = self.path.clone();
                    cycle.push(self.anchor);
                    self.out.push(cycle);
                    found = true;
                } else if !self.blocked[w] && self.circuit(w)? {
                    found = true;
                }
            }
            if found {
                self.unblock(v);
            } else {
                for i in 0..self.adj[v].len() {
                    let w = self.adj[v][i];
                    if self.in_comp[w] && w != v {
                        self.blist[w].insert(v);
                    }
                }
            }
            self.path.pop();
            Ok(found)
        }
    }

    let mut out: Vec<Vec<usize>> = Vec::new();
    for anchor in 0..n {
        if adj[anchor].contains(&anchor) {
            if out.len() >= budget {
                return Err(Error::CapacityExceeded {
                    what: "number of attack cycles",
                    limit: budget,
                    actual: budget + 1,
                });
            }
            out.push(vec![anchor, anchor]);
        }

        // Component of the anchor within the subgraph on vertices >= anchor.
        let sub_adj: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                if v < anchor {
                    Vec::new()
                } else {
                    adj[v].iter().copied().filter(|&w| w >= anchor).collect()
                }
            })
            .collect();
        let comp = tarjan(n, &sub_adj)
            .into_iter()
            .find(|c| c.contains(&anchor))
            .expect("every vertex lies in a component");
        if comp.len() < 2 {
            continue;
        }
        let mut in_comp = vec![false; n];
        for &v in &comp {
            in_comp[v] = true;
        }

        let mut search = Search {
            adj,
            anchor,
            in_comp,
            blocked: vec![false; n],
            blist: vec![BTreeSet::new(); n],
            path: Vec::new(),
            out: std::mem::take(&mut out),
            budget,
        };
        search.circuit(anchor)?;
        out = search.out;
    }
    Ok(out)
}
