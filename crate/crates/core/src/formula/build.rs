use super::Formula;
use crate::teams::{Domain, Team};
use crate::{Error, Result};

/// The formula whose team models over `domain` are exactly the subteams of `team`:
/// one conjunction of literals per member, joined by disjunction (`F` for the empty team).
pub fn theta_of_team(team: &Team, domain: &Domain) -> Result<Formula> {
    if team.domain() != domain {
        return Err(Error::DomainMismatch(format!(
            "team over [{}], expected [{domain}]",
            team.domain()
        )));
    }
    Ok(Formula::or_all(team.valuations().map(|v| {
        Formula::and_all(
            domain
                .names()
                .iter()
                .enumerate()
                .map(|(i, p)| Formula::literal(p.clone(), v.get(i))),
        )
    })))
}

/// `dep(p1) & .. & dep(pn)`: holds exactly on teams with at most one member.
pub fn constancy_conjunction(domain: &Domain) -> Formula {
    Formula::and_all(domain.names().iter().map(|p| Formula::constancy(p.clone())))
}

/// `Θ_X & (θ | .. | θ)` with `bound` disjuncts, satisfied exactly by the subteams
/// of `team` with at most `bound` members.
pub fn size_bounded_formula(team: &Team, bound: usize) -> Formula {
    let theta = constancy_conjunction(team.domain());
    let theta_x = theta_of_team(team, team.domain()).expect("team is over its own domain");
    Formula::and(theta_x, Formula::or_all(std::iter::repeat_n(theta, bound)))
}
