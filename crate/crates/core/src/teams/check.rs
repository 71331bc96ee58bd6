use std::collections::HashMap;

use super::{Domain, Team, Valuation};
use crate::limits::MAX_CHECKED_TEAM;
use crate::{Error, Formula, Limits, Result};

/// Classical truth of a dependence-free formula under one valuation.
pub fn eval_classical(v: &Valuation, f: &Formula) -> Result<bool> {
    let lookup = |p: &str| {
        v.value_of(p)
            .ok_or_else(|| Error::UnboundVariable(p.to_string()))
    };
    Ok(match f {
        Formula::Var(p) => lookup(p)?,
        Formula::NegVar(p) => !lookup(p)?,
        Formula::Top => true,
        Formula::Bot => false,
        Formula::And(l, r) => {
            // evaluate both sides so unbound variables and dependence atoms are always reported
            let a = eval_classical(v, l)?;
            let b = eval_classical(v, r)?;
            a && b
        }
        Formula::Or(l, r) => {
            let a = eval_classical(v, l)?;
            let b = eval_classical(v, r)?;
            a || b
        }
        Formula::Dep(..) => return Err(Error::DependenceAtom),
    })
}

/// `team |= f` under team semantics, with the default team-size guard.
pub fn eval_team(team: &Team, f: &Formula) -> Result<bool> {
    eval_team_with(team, f, &Limits::default())
}

pub fn eval_team_with(team: &Team, f: &Formula, limits: &Limits) -> Result<bool> {
    let cap = limits.max_team_size.min(MAX_CHECKED_TEAM);
    if team.len() > cap {
        return Err(Error::guard("team size", cap, team.len()));
    }
    let compiled = Compiled::new(f, team.domain())?;
    Ok(compiled.check(team.codes()))
}

#[derive(Debug, Clone, Copy)]
enum Node {
    Lit { bit: u32, positive: bool },
    Top,
    Bot,
    And(usize, usize),
    Or(usize, usize),
    Dep { det: u32, target: u32 },
}

/// A formula resolved against a domain, stored in post-order.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    nodes: Vec<Node>,
    flat: Vec<bool>,
}

impl Compiled {
    pub(crate) fn new(f: &Formula, domain: &Domain) -> Result<Compiled> {
        let mut c = Compiled {
            nodes: Vec::with_capacity(f.size()),
            flat: Vec::with_capacity(f.size()),
        };
        c.push(f, domain)?;
        Ok(c)
    }

    fn push(&mut self, f: &Formula, d: &Domain) -> Result<usize> {
        let bit = |p: &str| {
            d.index_of(p)
                .map(|i| d.bit(i))
                .ok_or_else(|| Error::UnboundVariable(p.to_string()))
        };
        let (node, flat) = match f {
            Formula::Var(p) => (Node::Lit { bit: bit(p)?, positive: true }, true),
            Formula::NegVar(p) => (Node::Lit { bit: bit(p)?, positive: false }, true),
            Formula::Top => (Node::Top, true),
            Formula::Bot => (Node::Bot, true),
            Formula::And(l, r) => {
                let (a, b) = (self.push(l, d)?, self.push(r, d)?);
                (Node::And(a, b), self.flat[a] && self.flat[b])
            }
            Formula::Or(l, r) => {
                let (a, b) = (self.push(l, d)?, self.push(r, d)?);
                (Node::Or(a, b), self.flat[a] && self.flat[b])
            }
            Formula::Dep(det, b) => {
                let mut mask = 0;
                for p in det {
                    mask |= bit(p)?;
                }
                (Node::Dep { det: mask, target: bit(b)? }, false)
            }
        };
        self.nodes.push(node);
        self.flat.push(flat);
        Ok(self.nodes.len() - 1)
    }

    fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Truth of node `n` on the singleton team `{code}`; dependence atoms hold on singletons.
    fn holds_on(&self, n: usize, code: u32) -> bool {
        match self.nodes[n] {
            Node::Lit { bit, positive } => (code & bit != 0) == positive,
            Node::Top | Node::Dep { .. } => true,
            Node::Bot => false,
            Node::And(a, b) => self.holds_on(a, code) && self.holds_on(b, code),
            Node::Or(a, b) => self.holds_on(a, code) || self.holds_on(b, code),
        }
    }

    /// Team check over `members` (at most 64 distinct codes).
    pub(crate) fn check(&self, members: &[u32]) -> bool {
        assert!(members.len() <= MAX_CHECKED_TEAM);
        let full = if members.len() == 64 {
            u64::MAX
        } else {
            (1u64 << members.len()) - 1
        };
        let mut run = Run {
            c: self,
            members,
            memo: HashMap::new(),
        };
        run.sat(self.root(), full)
    }
}

struct Run<'a> {
    c: &'a Compiled,
    members: &'a [u32],
    memo: HashMap<(usize, u64), bool>,
}

impl Run<'_> {
    fn codes(&self, mask: u64) -> impl Iterator<Item = u32> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(move |(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
    }

    /// Positions in `mask` whose singleton satisfies the flat node `n`.
    fn flat_part(&self, n: usize, mask: u64) -> u64 {
        let mut out = 0;
        for (i, &code) in self.members.iter().enumerate() {
            if mask >> i & 1 == 1 && self.c.holds_on(n, code) {
                out |= 1 << i;
            }
        }
        out
    }

    fn sat(&mut self, n: usize, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        if self.c.flat[n] {
            // flat formulas hold iff every singleton satisfies them
            return self.flat_part(n, mask) == mask;
        }
        match self.c.nodes[n] {
            Node::And(a, b) => self.sat(a, mask) && self.sat(b, mask),
            Node::Or(a, b) => {
                // A witnessing cover can always be normalised to Y ∪ (X \ Y) by
                // downward closure; a flat disjunct can take its maximal part.
                if self.c.flat[a] {
                    let y = self.flat_part(a, mask);
                    return self.sat(b, mask & !y);
                }
                if self.c.flat[b] {
                    let z = self.flat_part(b, mask);
                    return self.sat(a, mask & !z);
                }
                if let Some(&r) = self.memo.get(&(n, mask)) {
                    return r;
                }
                let mut r = self.sat(a, mask) || self.sat(b, mask);
                if !r {
                    let mut y = (mask - 1) & mask;
                    while y != 0 {
                        if self.sat(a, y) && self.sat(b, mask ^ y) {
                            r = true;
                            break;
                        }
                        y = (y - 1) & mask;
                    }
                }
                self.memo.insert((n, mask), r);
                r
            }
            Node::Dep { det, target } => {
                let codes: Vec<u32> = self.codes(mask).collect();
                codes.iter().enumerate().all(|(i, &u)| {
                    codes[i + 1..]
                        .iter()
                        .all(|&w| (u & det) != (w & det) || (u & target) == (w & target))
                })
            }
            Node::Lit { .. } | Node::Top | Node::Bot => unreachable!("flat node"),
        }
    }
}
