//! Canonical models: the subteam and superteam orders and the two fixed
//! counterexample models over `{p, q}` and `{p}`.

use super::PreferentialModel;
use crate::teams::all_teams;
use crate::{Domain, Error, Limits, Result, Team};

/// State name derived from the label: `t_` followed by the members, e.g. `t_00_11`.
pub fn state_name(team: &Team) -> String {
    if team.is_empty() {
        return "t_empty".to_string();
    }
    let parts: Vec<String> = team.valuations().map(|v| v.to_string()).collect();
    format!("t_{}", parts.join("_"))
}

fn nonempty_teams(domain: &Domain, limits: &Limits) -> Result<Vec<(String, Team)>> {
    let cap = limits.max_vars.min(5);
    if domain.len() > cap {
        return Err(Error::guard("domain size", cap, domain.len()));
    }
    let count = (1usize << domain.valuation_count()) - 1;
    if count > limits.max_states {
        return Err(Error::guard("state count", limits.max_states, count));
    }
    Ok(all_teams(domain)
        .filter(|t| !t.is_empty())
        .map(|t| (state_name(&t), t))
        .collect())
}

fn by_inclusion(domain: &Domain, limits: &Limits, sub_preferred: bool) -> Result<PreferentialModel> {
    let states = nonempty_teams(domain, limits)?;
    let mut edges = Vec::new();
    for (i, (_, x)) in states.iter().enumerate() {
        for (j, (_, y)) in states.iter().enumerate() {
            if x.is_proper_subset(y) {
                edges.push(if sub_preferred { (i, j) } else { (j, i) });
            }
        }
    }
    PreferentialModel::from_indexed(domain, states, &edges, limits)
}

/// One state per nonempty team, proper subteams preferred.
pub fn w_sub(domain: &Domain, limits: &Limits) -> Result<PreferentialModel> {
    by_inclusion(domain, limits, true)
}

/// One state per nonempty team, proper superteams preferred.
pub fn w_sup(domain: &Domain, limits: &Limits) -> Result<PreferentialModel> {
    by_inclusion(domain, limits, false)
}

/// The model over `{p, q}` whose entailment violates the (Or) rule.
///
/// With `X_pq = {11}`, `X_np_q = {01}` and `X_iff = {11, 00}`: `X_iff` is below
/// `X_pq` and `X_np_q`, and those two are below every other nonempty team
/// except `X_np_q`, `X_iff` and themselves.
pub fn w_pq() -> PreferentialModel {
    let d = Domain::new(["p", "q"]).expect("static domain");
    let team = |s: &str| Team::parse(&d, s).expect("static team");
    let (x_pq, x_npq, x_iff) = (team("11"), team("01"), team("00,11"));
    let states = nonempty_teams(&d, &Limits::default()).expect("two variables");
    let pos = |t: &Team| states.iter().position(|(_, x)| x == t).expect("nonempty team");
    let (i_pq, i_npq, i_iff) = (pos(&x_pq), pos(&x_npq), pos(&x_iff));
    let mut edges = vec![(i_iff, i_pq), (i_iff, i_npq)];
    for (j, (_, x)) in states.iter().enumerate() {
        if *x == x_npq || *x == x_iff {
            continue;
        }
        if j != i_pq {
            edges.push((i_pq, j));
        }
        edges.push((i_npq, j));
    }
    PreferentialModel::from_indexed(&d, states, &edges, &Limits::default()).expect("valid fixture")
}

/// The three-state model over `{p}` with `{0,1}` below `{1}` and `{0}`.
pub fn w_circ_star() -> PreferentialModel {
    let d = Domain::new(["p"]).expect("static domain");
    let states: Vec<(String, Team)> = ["1", "0", "0,1"]
        .iter()
        .map(|s| {
            let t = Team::parse(&d, s).expect("static team");
            (state_name(&t), t)
        })
        .collect();
    PreferentialModel::from_indexed(&d, states, &[(2, 0), (2, 1)], &Limits::default())
        .expect("valid fixture")
}
