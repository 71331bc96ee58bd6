//! Preferential models given by circuits.
//!
//! States are the bit strings `{0,1}^m`, read with the first character most
//! significant. The labelling circuit `L` has `m` inputs and outputs `def`
//! then the label bits: one per variable in classical mode, one per
//! valuation code in team mode. The order circuit `O` has `2m` inputs (the
//! two states in turn) and outputs `def`, `lt`; `s ≺ s'` when both are 1.
//! States with `def = 0` under `L` are not part of the model.

mod file;
mod olms;
mod sat;

use crate::bitset::BitSet;
use crate::circuits::{lex_into, Circuit, CircuitBuilder, Strictness, Variant};
use crate::teams::{eval_classical, eval_team_with};
use crate::{EntailmentVerdict, Domain, Error, Formula, Limits, PreferentialModel, Result, Team, Valuation};

pub use file::{load_succinct, parse_succinct, save_succinct, succinct_file_text};
pub use olms::{olms, olms_reduction};
pub use sat::{lexmax_model, lexmax_model_counted, sat_oracle, substitute, BitPreference, SatResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Classical,
    Team,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Classical => "classical",
            Mode::Team => "team",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccinctModel {
    mode: Mode,
    domain: Domain,
    labels: Circuit,
    order: Circuit,
    /// `L` is the identity and `O` the strict reverse-lex order.
    declared_rlex: bool,
}

/// Result of a succinct entailment query; states are indices into `{0,1}^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccinctVerdict {
    pub holds: bool,
    /// The lowest minimal premise state falsifying the conclusion.
    pub witness: Option<u64>,
    pub oracle_calls: usize,
}

fn state_bits(s: u64, m: usize, out: &mut Vec<bool>) {
    out.extend((0..m).map(|k| s >> (m - 1 - k) & 1 == 1));
}

/// Bit-string name of state `s`.
pub fn state_string(s: u64, m: usize) -> String {
    (0..m).map(|k| if s >> (m - 1 - k) & 1 == 1 { '1' } else { '0' }).collect()
}

impl SuccinctModel {
    pub fn new(mode: Mode, domain: &Domain, labels: Circuit, order: Circuit) -> Result<SuccinctModel> {
        if mode == Mode::Team && domain.len() > 5 {
            return Err(Error::guard("team-mode variables", 5, domain.len()));
        }
        let m = labels.num_inputs();
        if m == 0 || m > 63 {
            return Err(Error::Arity { expected: 1, actual: m });
        }
        let width = 1 + match mode {
            Mode::Classical => domain.len(),
            Mode::Team => domain.valuation_count(),
        };
        if labels.num_outputs() != width {
            return Err(Error::Arity { expected: width, actual: labels.num_outputs() });
        }
        if order.num_inputs() != 2 * m {
            return Err(Error::Arity { expected: 2 * m, actual: order.num_inputs() });
        }
        if order.num_outputs() != 2 {
            return Err(Error::Arity { expected: 2, actual: order.num_outputs() });
        }
        let declared_rlex = mode == Mode::Classical
            && m == domain.len()
            && labels == identity_labels(domain)
            && order == order_circuit(m, Variant::Rlex);
        Ok(SuccinctModel { mode, domain: domain.clone(), labels, order, declared_rlex })
    }

    /// Identity labelling with the strict reverse-lex order over `{0,1}^n`.
    pub fn rlex_identity(domain: &Domain) -> SuccinctModel {
        Self::new(Mode::Classical, domain, identity_labels(domain), order_circuit(domain.len(), Variant::Rlex))
            .expect("well-formed circuits")
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn m(&self) -> usize {
        self.labels.num_inputs()
    }

    pub fn labels(&self) -> &Circuit {
        &self.labels
    }

    pub fn order(&self) -> &Circuit {
        &self.order
    }

    pub fn is_declared_rlex(&self) -> bool {
        self.declared_rlex
    }

    fn try_label(&self, s: u64) -> Result<Option<Team>> {
        let mut bits = Vec::with_capacity(self.m());
        state_bits(s, self.m(), &mut bits);
        let out = self.labels.eval(&bits)?;
        if !out[0] {
            return Ok(None);
        }
        Ok(Some(match self.mode {
            Mode::Classical => Team::from_codes(&self.domain, [Valuation::from_bits(&self.domain, &out[1..])?.code()])?,
            Mode::Team => {
                let codes: Vec<u32> = (0..out.len() - 1).filter(|&k| out[1 + k]).map(|k| k as u32).collect();
                Team::from_codes(&self.domain, codes)?
            }
        }))
    }

    /// Label of `s` if `s` is relevant.
    pub fn relevant_label(&self, s: u64) -> Option<Team> {
        self.try_label(s).expect("state in range")
    }

    /// `O(a, b)`: `def` and `lt` both set.
    pub fn precedes(&self, a: u64, b: u64) -> bool {
        let m = self.m();
        let mut bits = Vec::with_capacity(2 * m);
        state_bits(a, m, &mut bits);
        state_bits(b, m, &mut bits);
        let out = self.order.eval(&bits).expect("arity checked on construction");
        out[0] && out[1]
    }

    pub fn state_name(&self, s: u64) -> String {
        state_string(s, self.m())
    }

    /// The explicit model on the relevant states, ordered by `O`. `O` must be
    /// irreflexive and transitive on relevant states.
    pub fn expand(&self, limits: &Limits) -> Result<PreferentialModel> {
        let m = self.m();
        if m > limits.max_expand_bits {
            return Err(Error::guard("state bits for expansion", limits.max_expand_bits, m));
        }
        let mut ids = Vec::new();
        let mut states = Vec::new();
        for s in 0..1u64 << m {
            if let Some(t) = self.try_label(s)? {
                ids.push(s);
                states.push((self.state_name(s), t));
            }
        }
        let k = ids.len();
        let above: Vec<BitSet> = ids
            .iter()
            .map(|&a| BitSet::from_indices(k, (0..k).filter(|&j| self.precedes(a, ids[j]))))
            .collect();
        for i in 0..k {
            if above[i].contains(i) {
                let n = &states[i].0;
                return Err(Error::NotStrictOrder(format!("{n} ≺ {n}")));
            }
            for j in above[i].iter() {
                if let Some(l) = above[j].difference(&above[i]).iter().next() {
                    return Err(Error::NotStrictOrder(format!(
                        "{} ≺ {} ≺ {} without {} ≺ {}",
                        states[i].0, states[j].0, states[l].0, states[i].0, states[l].0
                    )));
                }
            }
        }
        let edges: Vec<(usize, usize)> = (0..k).flat_map(|i| above[i].iter().map(move |j| (i, j))).collect();
        PreferentialModel::from_indexed(&self.domain, states, &edges, limits).map_err(|e| match e {
            Error::Cycle(n) => Error::NotStrictOrder(format!("cycle through {n}")),
            other => other,
        })
    }

    fn check_formula(&self, f: &Formula) -> Result<()> {
        self.domain.check_vars(f)?;
        if self.mode == Mode::Classical && !f.is_flat() {
            return Err(Error::ModeMismatch("classical-mode models take dependence-free formulas".into()));
        }
        Ok(())
    }

    fn sat_on(&self, label: &Team, f: &Formula, limits: &Limits) -> Result<bool> {
        match self.mode {
            Mode::Classical => eval_classical(&label.valuations().next().expect("singleton label"), f),
            Mode::Team => eval_team_with(label, f, limits),
        }
    }
}

/// Labels `{0,1}^n` by themselves: `def = 1`, `y_i = s_i`.
pub fn identity_labels(domain: &Domain) -> Circuit {
    let n = domain.len();
    let mut b = CircuitBuilder::new();
    let ins: Vec<usize> = (0..n).map(|i| b.input(format!("s{i}")).expect("fresh")).collect();
    let def = b.push_named("def", crate::circuits::Gate::Const(true)).expect("fresh");
    let mut outs = vec![def];
    for (i, &w) in ins.iter().enumerate() {
        outs.push(b.push_named(format!("y{i}"), crate::circuits::Gate::And(w, w)).expect("fresh"));
    }
    b.finish(outs)
}

/// `O` over `m`-bit states: `def = 1`, `lt` the strict comparison of the
/// first state against the second.
pub fn order_circuit(m: usize, variant: Variant) -> Circuit {
    let mut b = CircuitBuilder::new();
    let s: Vec<usize> = (0..m).map(|i| b.input(format!("s{i}")).expect("fresh")).collect();
    let t: Vec<usize> = (0..m).map(|i| b.input(format!("t{i}")).expect("fresh")).collect();
    let def = b.push_named("def", crate::circuits::Gate::Const(true)).expect("fresh");
    let lt = lex_into(&mut b, &s, &t, variant, Strictness::Strict);
    b.rename(lt, "lt").expect("fresh");
    b.finish(vec![def, lt])
}

fn state_guard(model: &SuccinctModel, limits: &Limits) -> Result<()> {
    let m = model.m();
    match model.mode {
        Mode::Classical if m > limits.max_classical_state_bits => {
            Err(Error::guard("state bits", limits.max_classical_state_bits, m))
        }
        Mode::Team if m > limits.max_team_state_bits => Err(Error::guard("state bits", limits.max_team_state_bits, m)),
        Mode::Team if model.domain.len() > limits.max_team_mode_vars => {
            Err(Error::guard("team-mode variables", limits.max_team_mode_vars, model.domain.len()))
        }
        _ => Ok(()),
    }
}

/// Exhaustive check: every relevant `φ`-state falsifying `ψ` must have some
/// relevant `φ`-state `s'` with `O(s', s)`.
pub fn succ_entails_generic(
    model: &SuccinctModel,
    phi: &Formula,
    psi: &Formula,
    limits: &Limits,
) -> Result<SuccinctVerdict> {
    state_guard(model, limits)?;
    model.check_formula(phi)?;
    model.check_formula(psi)?;
    let mut premise = Vec::new();
    let mut failing = Vec::new();
    for s in 0..1u64 << model.m() {
        let Some(label) = model.try_label(s)? else { continue };
        if model.sat_on(&label, phi, limits)? {
            premise.push(s);
            if !model.sat_on(&label, psi, limits)? {
                failing.push(s);
            }
        }
    }
    let witness = failing
        .into_iter()
        .find(|&s| !premise.iter().any(|&t| model.precedes(t, s)));
    Ok(SuccinctVerdict { holds: witness.is_none(), witness, oracle_calls: 0 })
}

/// For the identity labelling under strict reverse-lex order the unique
/// minimal `φ`-state is the lexicographically largest model of `φ`.
pub fn succ_entails_rlex(
    model: &SuccinctModel,
    phi: &Formula,
    psi: &Formula,
    limits: &Limits,
) -> Result<SuccinctVerdict> {
    if model.mode != Mode::Classical {
        return Err(Error::ModeMismatch("reverse-lex entailment needs a classical-mode model".into()));
    }
    if !model.declared_rlex {
        return Err(Error::OrderNotRlex);
    }
    model.check_formula(phi)?;
    model.check_formula(psi)?;
    let (best, calls) = lexmax_model_counted(phi, &model.domain, BitPreference::OneFirst, limits)?;
    let witness = match best {
        Some(v) if !eval_classical(&v, psi)? => Some(u64::from(v.code())),
        _ => None,
    };
    Ok(SuccinctVerdict { holds: witness.is_none(), witness, oracle_calls: calls })
}

/// Entailment on an explicit model, organised as one pair of model checks
/// per state followed by a scan of the minimal premise states for the
/// answer pattern (1, 0).
pub fn ent_pdl(w: &PreferentialModel, phi: &Formula, psi: &Formula) -> Result<EntailmentVerdict> {
    w.domain().check_vars(phi)?;
    w.domain().check_vars(psi)?;
    let answers = w
        .states()
        .iter()
        .map(|s| Ok((eval_team_with(&s.label, phi, w.limits())?, eval_team_with(&s.label, psi, w.limits())?)))
        .collect::<Result<Vec<(bool, bool)>>>()?;
    let premise = BitSet::from_indices(w.len(), (0..w.len()).filter(|&s| answers[s].0));
    let minimal: Vec<usize> = w.minimal_in(&premise).iter().collect();
    let witness = minimal.iter().copied().find(|&s| answers[s] == (true, false));
    Ok(EntailmentVerdict { holds: witness.is_none(), minimal_states: minimal, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::prefmodel::{w_circ_star, w_pq};

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn x(n: usize) -> Domain {
        Domain::new((1..=n).map(|i| format!("x{i}"))).unwrap()
    }

    #[test]
    fn rlex_identity_is_recognised() {
        let m = SuccinctModel::rlex_identity(&x(2));
        assert!(m.is_declared_rlex());
        let lex = SuccinctModel::new(Mode::Classical, &x(2), identity_labels(&x(2)), order_circuit(2, Variant::Lex)).unwrap();
        assert!(!lex.is_declared_rlex());
        assert_eq!(
            succ_entails_rlex(&lex, &f("x1"), &f("x2"), &Limits::default()),
            Err(Error::OrderNotRlex)
        );
    }

    #[test]
    fn expansion_of_rlex_is_a_chain() {
        let w = SuccinctModel::rlex_identity(&x(2)).expand(&Limits::default()).unwrap();
        assert_eq!(w.len(), 4);
        let names: Vec<&str> = (0..4).map(|i| w.name(i)).collect();
        assert_eq!(names, ["00", "01", "10", "11"]);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(w.precedes(a, b), a > b);
            }
        }
    }

    #[test]
    fn undefined_labels_give_an_empty_model() {
        let mut b = CircuitBuilder::new();
        b.input("s0").unwrap();
        let z = b.constant(false);
        let l = b.finish(vec![z, z]);
        let m = SuccinctModel::new(Mode::Classical, &x(1), l, order_circuit(1, Variant::Lex)).unwrap();
        assert!(m.expand(&Limits::default()).unwrap().is_empty());
        assert!(succ_entails_generic(&m, &f("T"), &f("F"), &Limits::default()).unwrap().holds);
    }

    #[test]
    fn reflexive_order_is_rejected() {
        let mut b = CircuitBuilder::new();
        b.input("s0").unwrap();
        b.input("t0").unwrap();
        let one = b.constant(true);
        let o = b.finish(vec![one, one]);
        let m = SuccinctModel::new(Mode::Classical, &x(1), identity_labels(&x(1)), o).unwrap();
        let err = m.expand(&Limits::default()).unwrap_err();
        assert!(err.to_string().starts_with("O is not a strict partial order"), "{err}");
    }

    #[test]
    fn rlex_queries() {
        let m = SuccinctModel::rlex_identity(&x(2));
        let l = Limits::default();
        let v = succ_entails_rlex(&m, &f("x1 | x2"), &f("x2"), &l).unwrap();
        assert!(v.holds);
        assert_eq!(v.oracle_calls, 2);
        let v = succ_entails_rlex(&m, &f("x1 & ~x2"), &f("x2"), &l).unwrap();
        assert_eq!(v.witness.map(|s| state_string(s, 2)), Some("10".into()));
        assert!(succ_entails_rlex(&m, &f("F"), &f("x2"), &l).unwrap().holds);
        for (a, b) in [("x1 | x2", "x2"), ("x1 & ~x2", "x2"), ("F", "x1"), ("~x1", "x2")] {
            assert_eq!(
                succ_entails_generic(&m, &f(a), &f(b), &l).unwrap(),
                SuccinctVerdict { oracle_calls: 0, ..succ_entails_rlex(&m, &f(a), &f(b), &l).unwrap() }
            );
        }
    }

    #[test]
    fn classical_mode_rejects_dependence_atoms() {
        let m = SuccinctModel::rlex_identity(&x(2));
        assert!(matches!(
            succ_entails_generic(&m, &f("dep(x1)"), &f("T"), &Limits::default()),
            Err(Error::ModeMismatch(_))
        ));
    }

    #[test]
    fn ent_pdl_on_fixtures() {
        let w = w_circ_star();
        let v = ent_pdl(&w, &f("dep(p) | dep(p)"), &f("dep(p)")).unwrap();
        assert!(!v.holds);
        assert_eq!(w.name(v.witness.unwrap()), "t_0_1");
        let pq = w_pq();
        for (a, b) in [("p", "q"), ("p | ~p", "q"), ("dep(p)", "dep(q)"), ("T", "dep(p;q)")] {
            assert_eq!(ent_pdl(&pq, &f(a), &f(b)).unwrap(), pq.entails(&f(a), &f(b)).unwrap());
        }
    }

    #[test]
    fn singleton_team_labels_mirror_classical_mode() {
        let d = Domain::new(["p", "q"]).unwrap();
        // Team-mode labels: exactly the member whose code equals the state.
        let mut b = CircuitBuilder::new();
        let s: Vec<usize> = (0..2).map(|i| b.input(format!("s{i}")).unwrap()).collect();
        let def = b.constant(true);
        let mut outs = vec![def];
        for code in 0..4u32 {
            let lits: Vec<usize> = (0..2)
                .map(|k| if code >> (1 - k) & 1 == 1 { s[k] } else { b.not(s[k]) })
                .collect();
            outs.push(b.and_all(&lits));
        }
        let team = SuccinctModel::new(Mode::Team, &d, b.finish(outs), order_circuit(2, Variant::Rlex)).unwrap();
        let classical = SuccinctModel::new(Mode::Classical, &d, identity_labels(&d), order_circuit(2, Variant::Rlex)).unwrap();
        let (wt, wc) = (team.expand(&Limits::default()).unwrap(), classical.expand(&Limits::default()).unwrap());
        assert_eq!(wt.states(), wc.states());
        assert_eq!(wt.order_pairs(), wc.order_pairs());
    }

    #[test]
    fn single_state_reduces_to_model_checking() {
        let d = Domain::new(["p", "q"]).unwrap();
        let t = Team::parse(&d, "00,01").unwrap();
        let w = PreferentialModel::new(&d, vec![("t".into(), t.clone())], &[]).unwrap();
        for g in ["dep(p)", "dep(q)", "~p", "q"] {
            let expect = crate::teams::eval_team(&t, &f(g)).unwrap();
            assert_eq!(ent_pdl(&w, &Formula::Top, &f(g)).unwrap().holds, expect);
        }
    }
}
