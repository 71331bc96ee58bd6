//! Line-oriented netlists:
//!
//! ```text
//! input a
//! gate g = NOT a
//! output g
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Circuit, Gate};
use crate::{Error, Result};

struct RawGate<'t> {
    line: usize,
    name: &'t str,
    op: &'t str,
    args: Vec<&'t str>,
}

pub fn parse_netlist(text: &str) -> Result<Circuit> {
    let mut inputs: Vec<String> = Vec::new();
    let mut raw: Vec<RawGate> = Vec::new();
    let mut outputs: Option<(usize, Vec<&str>)> = None;
    for (i, full) in text.lines().enumerate() {
        let line = i + 1;
        let body = full.split('#').next().unwrap_or("").trim();
        let mut toks = body.split_whitespace();
        let Some(keyword) = toks.next() else { continue };
        match keyword {
            "input" => {
                if !raw.is_empty() {
                    return Err(Error::format(line, "inputs must precede gates"));
                }
                let names: Vec<&str> = toks.collect();
                if names.is_empty() {
                    return Err(Error::format(line, "`input` needs a name"));
                }
                inputs.extend(names.into_iter().map(String::from));
            }
            "gate" => {
                let name = toks.next().ok_or_else(|| Error::format(line, "`gate` needs a name"))?;
                if toks.next() != Some("=") {
                    return Err(Error::format(line, "expected `gate <name> = <OP> ...`"));
                }
                let op = toks.next().ok_or_else(|| Error::format(line, "missing gate operator"))?;
                raw.push(RawGate { line, name, op, args: toks.collect() });
            }
            "output" => {
                if outputs.is_some() {
                    return Err(Error::format(line, "duplicate `output` line"));
                }
                outputs = Some((line, toks.collect()));
            }
            other => return Err(Error::format(line, format!("unknown keyword `{other}`"))),
        }
    }

    let mut wires: HashMap<&str, usize> = HashMap::new();
    for (i, name) in inputs.iter().enumerate() {
        if wires.insert(name, i).is_some() {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    let mut defined_at: HashMap<&str, usize> = HashMap::new();
    for (k, g) in raw.iter().enumerate() {
        if wires.contains_key(g.name) || defined_at.insert(g.name, k).is_some() {
            return Err(Error::DuplicateName(g.name.to_string()));
        }
    }

    let mut gates = Vec::with_capacity(raw.len());
    for (k, g) in raw.iter().enumerate() {
        let arity = match g.op {
            "AND" | "OR" => 2,
            "NOT" | "CONST" => 1,
            other => return Err(Error::format(g.line, format!("unknown operator `{other}`"))),
        };
        if g.args.len() != arity {
            return Err(Error::format(g.line, format!("{} takes {arity} operand(s)", g.op)));
        }
        let gate = if g.op == "CONST" {
            match g.args[0] {
                "0" => Gate::Const(false),
                "1" => Gate::Const(true),
                _ => return Err(Error::format(g.line, "CONST takes 0 or 1")),
            }
        } else {
            let mut refs = Vec::with_capacity(2);
            for &a in &g.args {
                match wires.get(a) {
                    Some(&w) => refs.push(w),
                    None => return Err(unresolved(&raw, &defined_at, k, a)),
                }
            }
            match g.op {
                "AND" => Gate::And(refs[0], refs[1]),
                "OR" => Gate::Or(refs[0], refs[1]),
                _ => Gate::Not(refs[0]),
            }
        };
        wires.insert(g.name, inputs.len() + k);
        gates.push((g.name.to_string(), gate));
    }

    let (out_line, out_names) = outputs.ok_or_else(|| Error::format(0, "missing `output` line"))?;
    let outputs = out_names
        .iter()
        .map(|n| {
            wires
                .get(n)
                .copied()
                .ok_or_else(|| Error::UndefinedWire(format!("{n} (line {out_line})")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Circuit { inputs, gates, outputs })
}

/// Classify a reference to a wire that is not yet defined at gate `k`: a
/// cycle when the later definition depends back on gate `k`, otherwise an
/// undefined (or out-of-order) wire.
fn unresolved(raw: &[RawGate], defined_at: &HashMap<&str, usize>, k: usize, name: &str) -> Error {
    let line = raw[k].line;
    let Some(&start) = defined_at.get(name) else {
        return Error::UndefinedWire(format!("{name} (line {line})"));
    };
    let mut stack = vec![start];
    let mut seen = vec![false; raw.len()];
    while let Some(j) = stack.pop() {
        if j == k {
            return Error::CircuitCycle(format!("{} (line {line})", raw[k].name));
        }
        if std::mem::replace(&mut seen[j], true) {
            continue;
        }
        stack.extend(raw[j].args.iter().filter_map(|a| defined_at.get(a).copied()));
    }
    Error::UndefinedWire(format!("{name} used before its definition (line {line})"))
}

pub fn print_netlist(c: &Circuit) -> String {
    let mut out = String::new();
    for name in c.inputs() {
        writeln!(out, "input {name}").unwrap();
    }
    for (name, g) in c.gates() {
        let rhs = match *g {
            Gate::And(a, b) => format!("AND {} {}", c.wire_name(a), c.wire_name(b)),
            Gate::Or(a, b) => format!("OR {} {}", c.wire_name(a), c.wire_name(b)),
            Gate::Not(a) => format!("NOT {}", c.wire_name(a)),
            Gate::Const(v) => format!("CONST {}", u8::from(v)),
        };
        writeln!(out, "gate {name} = {rhs}").unwrap();
    }
    let outs: Vec<&str> = c.outputs().iter().map(|&o| c.wire_name(o)).collect();
    writeln!(out, "output {}", outs.join(" ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{build_lex_circuit, Strictness, Variant};

    #[test]
    fn single_gate() {
        let c = parse_netlist("input a\ngate g = NOT a\noutput g\n").unwrap();
        assert_eq!(c.gates().len(), 1);
        assert_eq!(c.eval(&[true]).unwrap(), [false]);
    }

    #[test]
    fn reference_errors() {
        assert!(matches!(
            parse_netlist("input a\ngate g = AND a h\ngate h = NOT a\noutput g\n"),
            Err(Error::UndefinedWire(_))
        ));
        assert!(matches!(parse_netlist("input a\ngate g = NOT zz\noutput g\n"), Err(Error::UndefinedWire(_))));
        assert!(matches!(parse_netlist("input a\ngate g = NOT g\noutput g\n"), Err(Error::CircuitCycle(_))));
        assert!(matches!(
            parse_netlist("input a\ngate g = NOT h\ngate h = NOT g\noutput g\n"),
            Err(Error::CircuitCycle(_))
        ));
        assert!(matches!(
            parse_netlist("input a\ngate a = CONST 1\noutput a\n"),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(parse_netlist("input a\noutput b\n"), Err(Error::UndefinedWire(_))));
        assert!(matches!(parse_netlist("input a\n"), Err(Error::Format { .. })));
        assert!(matches!(parse_netlist("input a\ngate g = XOR a a\noutput g\n"), Err(Error::Format { line: 2, .. })));
    }

    #[test]
    fn outputs_may_be_inputs_and_comments_are_ignored() {
        let c = parse_netlist("# identity\ninput x y\noutput y x  # swapped\n").unwrap();
        assert_eq!(c.eval(&[true, false]).unwrap(), [false, true]);
    }

    #[test]
    fn lex_round_trip() {
        for variant in [Variant::Lex, Variant::Rlex] {
            let c = build_lex_circuit(3, variant, Strictness::Strict);
            let text = print_netlist(&c);
            let back = parse_netlist(&text).unwrap();
            assert_eq!(back, c);
            assert_eq!(print_netlist(&back), text);
        }
    }
}
