//! A small backtracking SAT procedure on negation-normal formulas, and the
//! greedy lexicographic search built on top of it.

use crate::{Domain, Error, Formula, Limits, Result, Valuation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatResult {
    pub satisfiable: bool,
    pub model: Option<Valuation>,
}

#[derive(Debug, Clone, Copy)]
enum Node {
    Lit(usize, bool),
    Const(bool),
    And(usize, usize),
    Or(usize, usize),
}

struct Solver {
    nodes: Vec<Node>,
    root: usize,
    /// Literals that every model must satisfy (top-level conjuncts).
    units: Vec<(usize, bool)>,
}

impl Solver {
    fn new(f: &Formula, domain: &Domain) -> Result<Solver> {
        let mut s = Solver { nodes: Vec::new(), root: 0, units: Vec::new() };
        s.root = s.add(f, domain)?;
        s.collect_units(s.root);
        Ok(s)
    }

    fn add(&mut self, f: &Formula, d: &Domain) -> Result<usize> {
        let idx = |p: &String| d.index_of(p).ok_or_else(|| Error::UnboundVariable(p.clone()));
        let node = match f {
            Formula::Var(p) => Node::Lit(idx(p)?, true),
            Formula::NegVar(p) => Node::Lit(idx(p)?, false),
            Formula::Top => Node::Const(true),
            Formula::Bot => Node::Const(false),
            Formula::And(a, b) => Node::And(self.add(a, d)?, self.add(b, d)?),
            Formula::Or(a, b) => Node::Or(self.add(a, d)?, self.add(b, d)?),
            Formula::Dep(..) => return Err(Error::DependenceAtom),
        };
        self.nodes.push(node);
        Ok(self.nodes.len() - 1)
    }

    fn collect_units(&mut self, i: usize) {
        match self.nodes[i] {
            Node::Lit(v, pos) => self.units.push((v, pos)),
            Node::And(a, b) => {
                self.collect_units(a);
                self.collect_units(b);
            }
            _ => {}
        }
    }

    /// Three-valued evaluation under a partial assignment.
    fn eval(&self, i: usize, assign: &[Option<bool>]) -> Option<bool> {
        match self.nodes[i] {
            Node::Lit(v, pos) => assign[v].map(|b| b == pos),
            Node::Const(c) => Some(c),
            Node::And(a, b) => match (self.eval(a, assign), self.eval(b, assign)) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (Some(true), Some(true)) => Some(true),
                _ => None,
            },
            Node::Or(a, b) => match (self.eval(a, assign), self.eval(b, assign)) {
                (Some(true), _) | (_, Some(true)) => Some(true),
                (Some(false), Some(false)) => Some(false),
                _ => None,
            },
        }
    }

    fn search(&self, assign: &mut [Option<bool>]) -> bool {
        if let Some(v) = self.eval(self.root, assign) {
            return v;
        }
        let v = assign.iter().position(Option::is_none).expect("undetermined value has a free variable");
        for b in [false, true] {
            let mut trial = assign.to_vec();
            trial[v] = Some(b);
            if self.search(&mut trial) {
                assign.copy_from_slice(&trial);
                return true;
            }
        }
        false
    }

    fn solve(&self, n: usize) -> Option<Vec<bool>> {
        let mut assign = vec![None; n];
        for &(v, pos) in &self.units {
            match assign[v] {
                Some(b) if b != pos => return None,
                _ => assign[v] = Some(pos),
            }
        }
        if !self.search(&mut assign) {
            return None;
        }
        Some(assign.into_iter().map(|b| b.unwrap_or(false)).collect())
    }
}

/// Satisfiability of a dependence-free formula over `domain`. Search order:
/// forced top-level literals first, then variables in domain order, trying 0
/// before 1; variables left free are set to 0.
pub fn sat_oracle(f: &Formula, domain: &Domain, limits: &Limits) -> Result<SatResult> {
    if domain.len() > limits.max_sat_vars {
        return Err(Error::guard("SAT variables", limits.max_sat_vars, domain.len()));
    }
    let solver = Solver::new(f, domain)?;
    Ok(match solver.solve(domain.len()) {
        Some(bits) => SatResult {
            satisfiable: true,
            model: Some(Valuation::from_bits(domain, &bits)?),
        },
        None => SatResult { satisfiable: false, model: None },
    })
}

/// Replace every occurrence of `x` by the constant `c`.
pub fn substitute(f: &Formula, x: &str, c: bool) -> Formula {
    match f {
        Formula::Var(p) if p == x => Formula::constant(c),
        Formula::NegVar(p) if p == x => Formula::constant(!c),
        Formula::And(a, b) => Formula::and(substitute(a, x, c), substitute(b, x, c)),
        Formula::Or(a, b) => Formula::or(substitute(a, x, c), substitute(b, x, c)),
        other => other.clone(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BitPreference {
    /// Try 1 first at each position: the lexicographically largest model.
    OneFirst,
    /// Try 0 first: the lexicographically smallest model.
    ZeroFirst,
}

/// Greedy extreme model by one oracle call per variable, in domain order.
/// Returns the model (if any) and the number of oracle calls made.
pub fn lexmax_model_counted(
    f: &Formula,
    domain: &Domain,
    pref: BitPreference,
    limits: &Limits,
) -> Result<(Option<Valuation>, usize)> {
    let first = pref == BitPreference::OneFirst;
    let mut cur = f.clone();
    let mut bits = Vec::with_capacity(domain.len());
    let mut calls = 0;
    for x in domain.names() {
        let trial = substitute(&cur, x, first);
        calls += 1;
        let bit = if sat_oracle(&trial, domain, limits)?.satisfiable { first } else { !first };
        bits.push(bit);
        cur = if bit == first { trial } else { substitute(&cur, x, bit) };
    }
    let v = Valuation::from_bits(domain, &bits)?;
    let found = crate::teams::eval_classical(&v, f)?.then_some(v);
    Ok((found, calls))
}

pub fn lexmax_model(f: &Formula, domain: &Domain, pref: BitPreference, limits: &Limits) -> Result<Option<Valuation>> {
    Ok(lexmax_model_counted(f, domain, pref, limits)?.0)
}
