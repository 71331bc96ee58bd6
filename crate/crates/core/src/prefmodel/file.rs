//! Line-oriented model files:
//!
//! ```text
//! vars p q
//! state s1 = 10,01
//! state s2 = 11
//! order s1 < s2
//! ```

use std::fmt::Write as _;

use super::PreferentialModel;
use crate::{Domain, Error, Limits, Result, Team};

pub fn parse_model(text: &str, limits: &Limits) -> Result<PreferentialModel> {
    let mut domain: Option<Domain> = None;
    let mut states = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "vars" => {
                if domain.is_some() {
                    return Err(Error::format(line_no, "duplicate `vars` line"));
                }
                domain = Some(
                    Domain::new(rest.split_whitespace())
                        .map_err(|e| Error::format(line_no, e.to_string()))?,
                );
            }
            "state" => {
                let d = domain
                    .as_ref()
                    .ok_or_else(|| Error::format(line_no, "`state` before `vars`"))?;
                let (name, lit) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::format(line_no, "expected `state <name> = <team>`"))?;
                let name = name.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(Error::format(line_no, "state name must be a single token"));
                }
                let team = Team::parse(d, lit).map_err(|e| Error::format(line_no, e.to_string()))?;
                states.push((name.to_string(), team));
            }
            "order" => {
                let (a, b) = rest
                    .split_once('<')
                    .ok_or_else(|| Error::format(line_no, "expected `order <a> < <b>`"))?;
                let (a, b) = (a.trim(), b.trim());
                if a.is_empty() || b.is_empty() || b.contains('<') {
                    return Err(Error::format(line_no, "expected `order <a> < <b>`"));
                }
                edges.push((a.to_string(), b.to_string()));
            }
            other => return Err(Error::format(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let domain = domain.ok_or_else(|| Error::format(0, "missing `vars` line"))?;
    PreferentialModel::new_with(&domain, states, &edges, limits)
}

impl PreferentialModel {
    /// Serialise in model-file syntax; the order is written as its covering pairs.
    pub fn to_model_file(&self) -> String {
        let mut out = String::new();
        writeln!(out, "vars {}", self.domain()).unwrap();
        for s in self.states() {
            writeln!(out, "state {} = {}", s.name, s.label).unwrap();
        }
        for (a, b) in self.covering_pairs() {
            writeln!(out, "order {} < {}", self.name(a), self.name(b)).unwrap();
        }
        out
    }
}
