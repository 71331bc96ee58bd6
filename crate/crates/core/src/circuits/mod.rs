//! Boolean circuits over AND, OR, NOT and constants.
//!
//! Wires are numbered inputs first, then gates in definition order; a gate
//! may only read lower-numbered wires, so every circuit is acyclic. Outputs
//! are positional and may name any wire, inputs included.

mod lex;
mod netlist;

use std::collections::HashMap;

use crate::{Error, Result};

pub use lex::{build_lex_circuit, lex_into, Strictness, Variant};
pub use netlist::{parse_netlist, print_netlist};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    And(usize, usize),
    Or(usize, usize),
    Not(usize),
    Const(bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    inputs: Vec<String>,
    gates: Vec<(String, Gate)>,
    outputs: Vec<usize>,
}

impl Circuit {
    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn gates(&self) -> &[(String, Gate)] {
        &self.gates
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn wire_name(&self, w: usize) -> &str {
        if w < self.inputs.len() {
            &self.inputs[w]
        } else {
            &self.gates[w - self.inputs.len()].0
        }
    }

    pub fn eval(&self, bits: &[bool]) -> Result<Vec<bool>> {
        let mut scratch = Vec::new();
        self.eval_with(bits, &mut scratch)?;
        Ok(self.outputs.iter().map(|&o| scratch[o]).collect())
    }

    /// Evaluate into `wires` (one slot per wire) without allocating outputs.
    pub fn eval_with(&self, bits: &[bool], wires: &mut Vec<bool>) -> Result<()> {
        if bits.len() != self.inputs.len() {
            return Err(Error::Arity {
                expected: self.inputs.len(),
                actual: bits.len(),
            });
        }
        wires.clear();
        wires.extend_from_slice(bits);
        for (_, g) in &self.gates {
            let v = match *g {
                Gate::And(a, b) => wires[a] && wires[b],
                Gate::Or(a, b) => wires[a] || wires[b],
                Gate::Not(a) => !wires[a],
                Gate::Const(c) => c,
            };
            wires.push(v);
        }
        Ok(())
    }

    /// Output `k` after [`Circuit::eval_with`].
    pub fn output_of(&self, wires: &[bool], k: usize) -> bool {
        wires[self.outputs[k]]
    }
}

pub fn eval_circuit(c: &Circuit, bits: &[bool]) -> Result<Vec<bool>> {
    c.eval(bits)
}

/// Incremental construction with automatic gate names `g0`, `g1`, ...
#[derive(Debug, Default, Clone)]
pub struct CircuitBuilder {
    inputs: Vec<String>,
    gates: Vec<(String, Gate)>,
    names: HashMap<String, usize>,
    fresh: usize,
}

impl CircuitBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declare an input; all inputs must precede the first gate.
    pub fn input(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        assert!(self.gates.is_empty(), "inputs must be declared before gates");
        if self.names.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        self.inputs.push(name.clone());
        self.names.insert(name, self.inputs.len() - 1);
        Ok(self.inputs.len() - 1)
    }

    pub fn wire(&self, name: &str) -> Option<usize> {
        self.names.get(name).copied()
    }

    fn next_wire(&self) -> usize {
        self.inputs.len() + self.gates.len()
    }

    fn push(&mut self, g: Gate) -> usize {
        let mut name;
        loop {
            name = format!("g{}", self.fresh);
            self.fresh += 1;
            if !self.names.contains_key(&name) {
                break;
            }
        }
        self.push_named(name, g).expect("fresh name")
    }

    /// Add a gate under an explicit name.
    pub fn push_named(&mut self, name: impl Into<String>, g: Gate) -> Result<usize> {
        let name = name.into();
        if self.names.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        let w = self.next_wire();
        let refs: &[usize] = match &g {
            Gate::And(a, b) | Gate::Or(a, b) => &[*a, *b],
            Gate::Not(a) => &[*a],
            Gate::Const(_) => &[],
        };
        if let Some(&bad) = refs.iter().find(|&&r| r >= w) {
            return Err(Error::UndefinedWire(format!("#{bad}")));
        }
        self.gates.push((name.clone(), g));
        self.names.insert(name, w);
        Ok(w)
    }

    /// Rename a gate wire, e.g. to give an output a readable name.
    pub fn rename(&mut self, w: usize, name: impl Into<String>) -> Result<()> {
        let name = name.into();
        if self.names.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        let k = w.checked_sub(self.inputs.len()).expect("only gates can be renamed");
        let old = std::mem::replace(&mut self.gates[k].0, name.clone());
        self.names.remove(&old);
        self.names.insert(name, w);
        Ok(())
    }

    pub fn and(&mut self, a: usize, b: usize) -> usize {
        self.push(Gate::And(a, b))
    }

    pub fn or(&mut self, a: usize, b: usize) -> usize {
        self.push(Gate::Or(a, b))
    }

    pub fn not(&mut self, a: usize) -> usize {
        self.push(Gate::Not(a))
    }

    pub fn constant(&mut self, c: bool) -> usize {
        self.push(Gate::Const(c))
    }

    /// `(a & b) | (~a & ~b)`.
    pub fn equal(&mut self, a: usize, b: usize) -> usize {
        let both = self.and(a, b);
        let na = self.not(a);
        let nb = self.not(b);
        let neither = self.and(na, nb);
        self.or(both, neither)
    }

    /// Balanced AND tree; `CONST 1` when empty.
    pub fn and_all(&mut self, ws: &[usize]) -> usize {
        self.tree(ws, true)
    }

    /// Balanced OR tree; `CONST 0` when empty.
    pub fn or_all(&mut self, ws: &[usize]) -> usize {
        self.tree(ws, false)
    }

    fn tree(&mut self, ws: &[usize], conj: bool) -> usize {
        match ws.len() {
            0 => self.constant(conj),
            1 => ws[0],
            n => {
                let l = self.tree(&ws[..n / 2], conj);
                let r = self.tree(&ws[n / 2..], conj);
                if conj {
                    self.and(l, r)
                } else {
                    self.or(l, r)
                }
            }
        }
    }

    pub fn finish(self, outputs: Vec<usize>) -> Circuit {
        let total = self.next_wire();
        assert!(outputs.iter().all(|&o| o < total), "output wire out of range");
        Circuit {
            inputs: self.inputs,
            gates: self.gates,
            outputs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_negation() {
        let mut b = CircuitBuilder::new();
        let x = b.input("x").unwrap();
        let n = b.not(x);
        let one = b.constant(true);
        let zero = b.constant(false);
        let c = b.finish(vec![n, one, zero, x]);
        assert_eq!(c.eval(&[true]).unwrap(), [false, true, false, true]);
        assert_eq!(c.eval(&[]), Err(Error::Arity { expected: 1, actual: 0 }));
    }

    #[test]
    fn wide_gates_are_balanced() {
        let mut b = CircuitBuilder::new();
        let ins: Vec<usize> = (0..5).map(|i| b.input(format!("x{i}")).unwrap()).collect();
        let all = b.and_all(&ins);
        let any = b.or_all(&ins);
        let t = b.and_all(&[]);
        let f = b.or_all(&[]);
        let c = b.finish(vec![all, any, t, f]);
        assert_eq!(c.gates().len(), 4 + 4 + 2);
        assert_eq!(c.eval(&[true; 5]).unwrap(), [true, true, true, false]);
        assert_eq!(c.eval(&[false, false, true, false, false]).unwrap(), [false, true, true, false]);
    }

    #[test]
    fn builder_rejects_bad_wires() {
        let mut b = CircuitBuilder::new();
        b.input("x").unwrap();
        assert_eq!(b.input("x"), Err(Error::DuplicateName("x".into())));
        assert!(matches!(b.push_named("y", Gate::Not(1)), Err(Error::UndefinedWire(_))));
        let w = b.constant(true);
        b.rename(w, "one").unwrap();
        assert_eq!(b.wire("one"), Some(w));
        assert!(b.rename(w, "x").is_err());
    }

    #[test]
    fn equality_gadget() {
        let mut b = CircuitBuilder::new();
        let x = b.input("x").unwrap();
        let y = b.input("y").unwrap();
        let e = b.equal(x, y);
        let c = b.finish(vec![e]);
        for (u, v) in [(false, false), (false, true), (true, false), (true, true)] {
            assert_eq!(c.eval(&[u, v]).unwrap(), [u == v]);
        }
    }
}
