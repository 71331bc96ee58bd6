//! Seeded random formulas and explicit models.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::circuits::{lex_into, CircuitBuilder, Strictness, Variant};
use crate::succinct::{Mode, SuccinctModel};
use crate::teams::all_teams;
use crate::{Domain, Formula, Limits, PreferentialModel, Result, Team};

/// A random formula with at most `depth` connective levels above the atoms.
pub fn random_formula<R: Rng>(rng: &mut R, domain: &Domain, depth: usize, with_dep: bool) -> Formula {
    let names = domain.names();
    if depth <= 1 || rng.gen_bool(0.3) {
        let roll = rng.gen_range(0..10);
        return match roll {
            0 => Formula::Top,
            1 => Formula::Bot,
            7..=9 if with_dep => {
                let b = names.choose(rng).expect("nonempty domain").clone();
                let args: Vec<String> = names.iter().filter(|&n| *n != b && rng.gen_bool(0.5)).cloned().collect();
                Formula::dep(args, b)
            }
            _ => Formula::literal(names.choose(rng).expect("nonempty domain").clone(), rng.gen()),
        };
    }
    let a = random_formula(rng, domain, depth - 1, with_dep);
    let b = random_formula(rng, domain, depth - 1, with_dep);
    if rng.gen_bool(0.5) {
        Formula::and(a, b)
    } else {
        Formula::or(a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub max_states: usize,
    /// Probability of an order edge between two states of increasing rank.
    pub edge_prob: f64,
    /// Probability that a multi-member state gets a preferred proper-subteam state.
    pub triangle_bias: f64,
    pub allow_empty_label: bool,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            max_states: 8,
            edge_prob: 0.3,
            triangle_bias: 0.5,
            allow_empty_label: false,
        }
    }
}

/// A random model: random labels (repeats allowed), ranked so that every
/// edge goes from a lower to a higher rank, hence acyclic.
pub fn random_model<R: Rng>(rng: &mut R, domain: &Domain, params: &ModelParams) -> Result<PreferentialModel> {
    let pool: Vec<Team> = all_teams(domain)
        .filter(|t| params.allow_empty_label || !t.is_empty())
        .collect();
    let n = rng.gen_range(1..=params.max_states.max(1));
    let mut labels: Vec<Team> = (0..n).map(|_| pool.choose(rng).expect("nonempty pool").clone()).collect();
    // Ranks follow label size with random tie-breaking, so subteams can sit below.
    labels.shuffle(rng);
    labels.sort_by_key(|t| t.len());
    let mut edges = Vec::new();
    for b in 0..n {
        for a in 0..b {
            if labels[a].len() < labels[b].len() && rng.gen_bool(params.edge_prob) {
                edges.push((a, b));
            }
        }
        if labels[b].len() > 1 && rng.gen_bool(params.triangle_bias) {
            let subs: Vec<usize> = (0..b).filter(|&a| labels[a].is_proper_subset(&labels[b])).collect();
            if let Some(&a) = subs.choose(rng) {
                edges.push((a, b));
            }
        }
    }
    let states = labels
        .into_iter()
        .enumerate()
        .map(|(i, t)| (format!("s{i}"), t))
        .collect();
    PreferentialModel::from_indexed(domain, states, &edges, &Limits::default())
}

/// A random gate tree of the given depth over `leaves`.
fn random_wire<R: Rng>(rng: &mut R, b: &mut CircuitBuilder, leaves: &[usize], depth: usize) -> usize {
    if depth == 0 || rng.gen_bool(0.25) {
        let w = *leaves.choose(rng).expect("at least one input");
        return match rng.gen_range(0..8) {
            0 => b.constant(rng.gen()),
            1..=3 => b.not(w),
            _ => w,
        };
    }
    let l = random_wire(rng, b, leaves, depth - 1);
    let r = random_wire(rng, b, leaves, depth - 1);
    if rng.gen_bool(0.5) {
        b.and(l, r)
    } else {
        b.or(l, r)
    }
}

/// A random strict partial order on `m`-bit states: a lex or reverse-lex
/// comparison of a permuted subset of positions, componentwise dominance on
/// a subset of positions, an intersection of two such orders, or the empty
/// order.
fn random_order_wire<R: Rng>(rng: &mut R, b: &mut CircuitBuilder, s: &[usize], t: &[usize], kind: u8) -> usize {
    let m = s.len();
    let mut pos: Vec<usize> = (0..m).collect();
    pos.shuffle(rng);
    pos.truncate(rng.gen_range(1..=m));
    match kind {
        0 => {
            let (a, c): (Vec<usize>, Vec<usize>) = pos.iter().map(|&k| (s[k], t[k])).unzip();
            let variant = if rng.gen() { Variant::Lex } else { Variant::Rlex };
            lex_into(b, &a, &c, variant, Strictness::Strict)
        }
        1 => {
            let mut le = Vec::new();
            let mut lt = Vec::new();
            for &k in &pos {
                let ns = b.not(s[k]);
                le.push(b.or(ns, t[k]));
                lt.push(b.and(ns, t[k]));
            }
            let all = b.and_all(&le);
            let any = b.or_all(&lt);
            b.and(all, any)
        }
        _ => b.constant(false),
    }
}

/// A random succinct model with `m`-bit states over `domain`; the order is
/// always a strict partial order.
pub fn random_succinct<R: Rng>(rng: &mut R, mode: Mode, domain: &Domain, m: usize) -> SuccinctModel {
    let mut lb = CircuitBuilder::new();
    let ins: Vec<usize> = (0..m).map(|i| lb.input(format!("s{i}")).expect("fresh")).collect();
    let def = if rng.gen_bool(0.6) {
        lb.constant(true)
    } else {
        let w = random_wire(rng, &mut lb, &ins, 2);
        let x = random_wire(rng, &mut lb, &ins, 1);
        lb.or(w, x)
    };
    let width = match mode {
        Mode::Classical => domain.len(),
        Mode::Team => domain.valuation_count(),
    };
    let mut outs = vec![def];
    for _ in 0..width {
        outs.push(random_wire(rng, &mut lb, &ins, 3));
    }
    let labels = lb.finish(outs);

    let mut ob = CircuitBuilder::new();
    let s: Vec<usize> = (0..m).map(|i| ob.input(format!("s{i}")).expect("fresh")).collect();
    let t: Vec<usize> = (0..m).map(|i| ob.input(format!("t{i}")).expect("fresh")).collect();
    let one = ob.constant(true);
    let lt = match rng.gen_range(0..10) {
        0 => random_order_wire(rng, &mut ob, &s, &t, 2),
        1..=4 => random_order_wire(rng, &mut ob, &s, &t, 0),
        5..=7 => random_order_wire(rng, &mut ob, &s, &t, 1),
        _ => {
            let (k1, k2) = (rng.gen_range(0..2), rng.gen_range(0..2));
            let x = random_order_wire(rng, &mut ob, &s, &t, k1);
            let y = random_order_wire(rng, &mut ob, &s, &t, k2);
            ob.and(x, y)
        }
    };
    let order = ob.finish(vec![one, lt]);
    SuccinctModel::new(mode, domain, labels, order).expect("well-formed random circuits")
}
