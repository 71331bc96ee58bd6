//! Explicit finite preferential models `⟨S, ℓ, ≺⟩` over teams.
//!
//! The order is given as an arbitrary edge list and stored as its transitive
//! closure; a model is rejected when the closure is not irreflexive. On a
//! finite strict partial order every nonempty set of states has minimal
//! elements, so smoothness needs no further check.

mod canon;
mod file;

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::teams::eval_team_with;
use crate::{Domain, Error, Formula, Limits, Result, Team};

pub use canon::{state_name, w_circ_star, w_pq, w_sub, w_sup};
pub use file::parse_model;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub name: String,
    pub label: Team,
}

#[derive(Debug, Clone)]
pub struct PreferentialModel {
    domain: Domain,
    states: Vec<State>,
    /// `lower[s]` holds every `t` with `t ≺ s`.
    lower: Vec<BitSet>,
    limits: Limits,
}

/// Outcome of a preferential entailment query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntailmentVerdict {
    pub holds: bool,
    /// The `≺`-minimal states satisfying the premise, ascending.
    pub minimal_states: Vec<usize>,
    /// A minimal premise state whose label falsifies the conclusion.
    pub witness: Option<usize>,
}

impl PreferentialModel {
    /// Build a model from named states and `a ≺ b` edges given by name.
    pub fn new(
        domain: &Domain,
        states: Vec<(String, Team)>,
        edges: &[(String, String)],
    ) -> Result<PreferentialModel> {
        Self::new_with(domain, states, edges, &Limits::default())
    }

    pub fn new_with(
        domain: &Domain,
        states: Vec<(String, Team)>,
        edges: &[(String, String)],
        limits: &Limits,
    ) -> Result<PreferentialModel> {
        let mut index = HashMap::new();
        for (i, (name, _)) in states.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let resolve = |n: &String| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownState(n.clone()))
        };
        let edges = edges
            .iter()
            .map(|(a, b)| Ok((resolve(a)?, resolve(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indexed(domain, states, &edges, limits)
    }

    /// Build a model from states and `a ≺ b` edges given by position.
    pub fn from_indexed(
        domain: &Domain,
        states: Vec<(String, Team)>,
        edges: &[(usize, usize)],
        limits: &Limits,
    ) -> Result<PreferentialModel> {
        let n = states.len();
        if n > limits.max_states {
            return Err(Error::guard("state count", limits.max_states, n));
        }
        let states: Vec<State> = states
            .into_iter()
            .map(|(name, label)| {
                if label.domain() != domain {
                    Err(Error::DomainMismatch(format!(
                        "state `{name}` is labelled over [{}], model is over [{domain}]",
                        label.domain()
                    )))
                } else {
                    Ok(State { name, label })
                }
            })
            .collect::<Result<_>>()?;
        let mut lower = vec![BitSet::new(n); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownState(format!("#{}", a.max(b))));
            }
            lower[b].insert(a);
        }
        // Warshall: after step k, lower[s] contains every t reaching s through states <= k.
        for k in 0..n {
            let lk = lower[k].clone();
            for l in lower.iter_mut() {
                if l.contains(k) {
                    l.union_with(&lk);
                }
            }
        }
        if let Some(s) = (0..n).find(|&s| lower[s].contains(s)) {
            return Err(Error::Cycle(states[s].name.clone()));
        }
        Ok(PreferentialModel {
            domain: domain.clone(),
            states,
            lower,
            limits: *limits,
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn label(&self, s: usize) -> &Team {
        &self.states[s].label
    }

    pub fn name(&self, s: usize) -> &str {
        &self.states[s].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s.name == name)
    }

    /// `a ≺ b`: `a` is preferred to `b`.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.lower[b].contains(a)
    }

    /// All states strictly preferred to `s`.
    pub fn below(&self, s: usize) -> &BitSet {
        &self.lower[s]
    }

    /// Every pair `(a, b)` with `a ≺ b`, in index order.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|b| self.lower[b].iter().map(move |a| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Covering pairs of the order (its transitive reduction), sorted.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            for a in self.lower[b].iter() {
                let between = self.lower[b].intersects(&self.upper_of(a));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn upper_of(&self, a: usize) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&u| self.lower[u].contains(a)))
    }

    pub fn all_states(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// `S(φ)`: the states whose label satisfies `φ`.
    pub fn satisfying(&self, f: &Formula) -> Result<BitSet> {
        self.domain.check_vars(f)?;
        let mut out = BitSet::new(self.len());
        for (i, s) in self.states.iter().enumerate() {
            if eval_team_with(&s.label, f, &self.limits)? {
                out.insert(i);
            }
        }
        Ok(out)
    }

    /// `≺`-minimal elements of a state set.
    pub fn minimal_in(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.len());
        for s in set.iter() {
            if !self.lower[s].intersects(set) {
                out.insert(s);
            }
        }
        out
    }

    /// `min(S(φ), ≺)`, ascending.
    pub fn min_states(&self, f: &Formula) -> Result<Vec<usize>> {
        Ok(self.minimal_in(&self.satisfying(f)?).iter().collect())
    }

    /// `φ |~ ψ`: mark the states satisfying `φ`, find the minimal marked
    /// states, and require each of them to satisfy `ψ`.
    pub fn entails(&self, lhs: &Formula, rhs: &Formula) -> Result<EntailmentVerdict> {
        self.domain.check_vars(rhs)?;
        let marked = self.satisfying(lhs)?;
        let minimal: Vec<usize> = self.minimal_in(&marked).iter().collect();
        let mut witness = None;
        for &s in &minimal {
            if !eval_team_with(self.label(s), rhs, &self.limits)? {
                witness = Some(s);
                break;
            }
        }
        Ok(EntailmentVerdict {
            holds: witness.is_none(),
            minimal_states: minimal,
            witness,
        })
    }

    /// The classical model induced by the singleton-labelled states.
    pub fn induce_classical(&self) -> PreferentialModel {
        let keep: Vec<usize> = (0..self.len()).filter(|&s| self.label(s).len() == 1).collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut lower = vec![BitSet::new(keep.len()); keep.len()];
        for (i, &s) in keep.iter().enumerate() {
            for t in self.lower[s].iter() {
                if let Some(&j) = pos.get(&t) {
                    lower[i].insert(j);
                }
            }
        }
        PreferentialModel {
            domain: self.domain.clone(),
            states: keep.iter().map(|&s| self.states[s].clone()).collect(),
            lower,
            limits: self.limits,
        }
    }
}
