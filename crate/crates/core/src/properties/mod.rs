//! Structural and rule-based checks on explicit preferential models.
//!
//! Rule checks run against a [`CorpusTable`]: the team model sets of the
//! corpus are computed once, after which `S(φ)` for a model is the set of
//! states whose label lies in the model set of `φ`.

mod corpus;

use std::fmt;

use crate::bitset::BitSet;
use crate::formula::size_bounded_formula;
use crate::prefmodel::PreferentialModel;
use crate::teams::ModelSet;
use crate::{Formula, Result, Team};

pub use corpus::{Corpus, CorpusParams, CorpusTable, MAX_THETA_VARS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Triangle,
    Star,
    SystemC,
    SystemP,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Triangle => "triangle",
            Property::Star => "star",
            Property::SystemC => "system-c",
            Property::SystemP => "system-p",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Ref,
    Lle,
    Rw,
    Cut,
    Cm,
    Or,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Ref => "Ref",
            Rule::Lle => "LLE",
            Rule::Rw => "RW",
            Rule::Cut => "Cut",
            Rule::Cm => "CM",
            Rule::Or => "Or",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// A state with a multi-member label and no preferred proper-subteam state.
    State { state: usize, name: String, label: Team },
    /// A minimal state of `φ | ψ` whose label is minimal for neither side.
    Star {
        phi: Formula,
        psi: Formula,
        state: usize,
        name: String,
        label: Team,
    },
    /// A rule instance with true premises and a false conclusion.
    /// The formulas are `φ`, then `ψ` and `γ` where the rule has them.
    Rule { rule: Rule, formulas: Vec<Formula> },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::State { name, label, .. } => write!(f, "state {name} = {label}"),
            Counterexample::Star { phi, psi, name, label, .. } => {
                write!(f, "phi={phi} psi={psi} state {name} = {label}")
            }
            Counterexample::Rule { rule, formulas } => {
                write!(f, "({rule})")?;
                for (n, g) in ["phi", "psi", "gamma"].iter().zip(formulas) {
                    write!(f, " {n}={g}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl PropertyReport {
    fn from(property: Property, counterexample: Option<Counterexample>) -> Self {
        PropertyReport {
            property,
            holds: counterexample.is_none(),
            counterexample,
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PROPERTY {} HOLDS", self.property.name()),
            Some(c) => write!(f, "PROPERTY {} FAILS {c}", self.property.name()),
        }
    }
}

/// States violating the subteam-preference condition. With `strict`, the
/// preferred state must carry a nonempty label.
pub fn triangle_failures(w: &PreferentialModel, strict: bool) -> Vec<usize> {
    (0..w.len())
        .filter(|&s| {
            let x = w.label(s);
            x.len() > 1
                && !w
                    .below(s)
                    .iter()
                    .any(|t| w.label(t).is_proper_subset(x) && !(strict && w.label(t).is_empty()))
        })
        .collect()
}

pub fn check_triangle(w: &PreferentialModel, strict: bool) -> PropertyReport {
    let cex = triangle_failures(w, strict).first().map(|&s| Counterexample::State {
        state: s,
        name: w.name(s).to_string(),
        label: w.label(s).clone(),
    });
    PropertyReport::from(Property::Triangle, cex)
}

pub fn check_star(w: &PreferentialModel, phi: &Formula, psi: &Formula) -> Result<PropertyReport> {
    let or = Formula::or(phi.clone(), psi.clone());
    let min_or = w.minimal_in(&w.satisfying(&or)?);
    let mut allowed: Vec<Team> = Vec::new();
    for f in [phi, psi] {
        for s in w.minimal_in(&w.satisfying(f)?).iter() {
            allowed.push(w.label(s).clone());
        }
    }
    let cex = min_or.iter().find(|&s| !allowed.contains(w.label(s))).map(|s| Counterexample::Star {
        phi: phi.clone(),
        psi: psi.clone(),
        state: s,
        name: w.name(s).to_string(),
        label: w.label(s).clone(),
    });
    Ok(PropertyReport::from(Property::Star, cex))
}

/// One model viewed through a corpus table.
struct View<'a> {
    w: &'a PreferentialModel,
    table: &'a CorpusTable,
    /// Characteristic mask of each state's label.
    masks: Vec<u64>,
    sat: Vec<BitSet>,
    /// `ent[i]` holds every `j` with `formula(i) |~ formula(j)`.
    ent: Vec<BitSet>,
}

impl<'a> View<'a> {
    fn new(w: &'a PreferentialModel, table: &'a CorpusTable) -> Result<View<'a>> {
        if w.domain() != table.corpus().domain() {
            return Err(crate::Error::DomainMismatch(format!(
                "model over [{}], corpus over [{}]",
                w.domain(),
                table.corpus().domain()
            )));
        }
        let masks: Vec<u64> = w
            .states()
            .iter()
            .map(|s| s.label.mask().expect("corpus domains are small"))
            .collect();
        let k = table.len();
        let sat: Vec<BitSet> = (0..k).map(|i| Self::states_in(&masks, table.models(i))).collect();
        let min: Vec<BitSet> = sat.iter().map(|s| w.minimal_in(s)).collect();
        let ent = (0..k)
            .map(|i| BitSet::from_indices(k, (0..k).filter(|&j| min[i].is_subset(&sat[j]))))
            .collect();
        Ok(View { w, table, masks, sat, ent })
    }

    fn states_in(masks: &[u64], models: &ModelSet) -> BitSet {
        BitSet::from_indices(masks.len(), (0..masks.len()).filter(|&s| models.contains_mask(masks[s])))
    }

    /// First `γ` with `min(set) ⊆ S(γ)` false among the candidates.
    fn first_unentailed(&self, set: &BitSet, candidates: &BitSet) -> Option<usize> {
        let min = self.w.minimal_in(set);
        candidates.iter().find(|&g| !min.is_subset(&self.sat[g]))
    }

    fn rule(&self, rule: Rule, idx: &[usize]) -> Counterexample {
        Counterexample::Rule {
            rule,
            formulas: idx.iter().map(|&i| self.table.formula(i).clone()).collect(),
        }
    }

    fn first_system_c_violation(&self) -> Option<Counterexample> {
        let k = self.table.len();
        if let Some(i) = (0..k).find(|&i| !self.ent[i].contains(i)) {
            return Some(self.rule(Rule::Ref, &[i]));
        }
        for i in 0..k {
            for j in 0..k {
                if self.table.models(i) == self.table.models(j) {
                    if let Some(g) = self.ent[i].difference(&self.ent[j]).iter().next() {
                        return Some(self.rule(Rule::Lle, &[i, j, g]));
                    }
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                if self.table.models(i).is_subset(self.table.models(j)) {
                    if let Some(g) = (0..k).find(|&g| self.ent[g].contains(i) && !self.ent[g].contains(j)) {
                        return Some(self.rule(Rule::Rw, &[i, j, g]));
                    }
                }
            }
        }
        for i in 0..k {
            for j in self.ent[i].iter() {
                let both = self.sat[i].intersection(&self.sat[j]);
                let min_both = self.w.minimal_in(&both);
                if let Some(g) = (0..k).find(|&g| min_both.is_subset(&self.sat[g]) && !self.ent[i].contains(g)) {
                    return Some(self.rule(Rule::Cut, &[i, j, g]));
                }
            }
        }
        for i in 0..k {
            for j in self.ent[i].iter() {
                let both = self.sat[i].intersection(&self.sat[j]);
                if let Some(g) = self.first_unentailed(&both, &self.ent[i]) {
                    return Some(self.rule(Rule::Cm, &[i, j, g]));
                }
            }
        }
        None
    }

    fn first_or_violation(&self) -> Option<Counterexample> {
        let k = self.table.len();
        for i in 0..k {
            for j in 0..k {
                let common = self.ent[i].intersection(&self.ent[j]);
                if common.is_empty() {
                    continue;
                }
                let either = Self::states_in(&self.masks, self.table.or_models(i, j));
                if let Some(g) = self.first_unentailed(&either, &common) {
                    return Some(self.rule(Rule::Or, &[i, j, g]));
                }
            }
        }
        None
    }

    fn first_star_violation(&self) -> Option<Counterexample> {
        let k = self.table.len();
        let min_labels: Vec<Vec<u64>> = (0..k)
            .map(|i| self.w.minimal_in(&self.sat[i]).iter().map(|s| self.masks[s]).collect())
            .collect();
        for i in 0..k {
            for j in 0..k {
                let either = Self::states_in(&self.masks, self.table.or_models(i, j));
                let bad = self.w.minimal_in(&either).iter().find(|&s| {
                    let m = self.masks[s];
                    !min_labels[i].contains(&m) && !min_labels[j].contains(&m)
                });
                if let Some(s) = bad {
                    return Some(Counterexample::Star {
                        phi: self.table.formula(i).clone(),
                        psi: self.table.formula(j).clone(),
                        state: s,
                        name: self.w.name(s).to_string(),
                        label: self.w.label(s).clone(),
                    });
                }
            }
        }
        None
    }
}

/// (★) for every ordered pair of corpus formulas; the first failing pair is reported.
pub fn check_star_corpus(w: &PreferentialModel, table: &CorpusTable) -> Result<PropertyReport> {
    let view = View::new(w, table)?;
    Ok(PropertyReport::from(Property::Star, view.first_star_violation()))
}

/// Ref, LLE, RW, Cut and CM over every corpus instance, in that order.
pub fn check_system_c(w: &PreferentialModel, table: &CorpusTable) -> Result<PropertyReport> {
    let view = View::new(w, table)?;
    Ok(PropertyReport::from(Property::SystemC, view.first_system_c_violation()))
}

/// System C followed by Or.
pub fn check_system_p(w: &PreferentialModel, table: &CorpusTable) -> Result<PropertyReport> {
    let view = View::new(w, table)?;
    let cex = view.first_system_c_violation().or_else(|| view.first_or_violation());
    Ok(PropertyReport::from(Property::SystemP, cex))
}

/// A confirmed Or violation: `φ |~ γ` and `ψ |~ γ` hold, `φ | ψ |~ γ` fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrViolation {
    pub phi: Formula,
    pub psi: Formula,
    pub gamma: Formula,
    /// The state whose label the construction started from.
    pub state: usize,
}

/// For a state labelled `X` with no preferred proper-subteam state, `φ` and
/// `ψ` restrict to subteams of `X` with at most `l` and `k` members
/// (`l + k = |X|`). Then `X` itself is minimal for `φ | ψ` and fails `ψ`.
pub fn or_counterexample(w: &PreferentialModel) -> Result<Option<OrViolation>> {
    for s in triangle_failures(w, false) {
        let x = w.label(s);
        let j = x.len();
        let l = j / 2;
        let phi = size_bounded_formula(x, l);
        let psi = size_bounded_formula(x, j - l);
        let gamma = psi.clone();
        let confirmed = w.entails(&phi, &gamma)?.holds
            && w.entails(&psi, &gamma)?.holds
            && !w.entails(&Formula::or(phi.clone(), psi.clone()), &gamma)?.holds;
        if confirmed {
            return Ok(Some(OrViolation { phi, psi, gamma, state: s }));
        }
    }
    Ok(None)
}
