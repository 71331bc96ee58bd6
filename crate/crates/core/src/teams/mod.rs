//! Valuations, teams and team-semantics model checking.
//!
//! A valuation over the ordered domain `x1 .. xn` is stored as the integer
//! whose binary string is `v(x1) .. v(xn)`, so `x1` is the most significant
//! bit. Teams are sets of such codes.

mod check;
mod models;

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

pub use check::{eval_classical, eval_team, eval_team_with};
pub use models::{entails_classical, entails_logical, models_of, ModelSet};

/// Hard upper bound on the number of variables in a domain.
pub const MAX_DOMAIN_VARS: usize = 30;

/// An ordered, duplicate-free list of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Domain(Arc<[String]>);

impl Domain {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Domain> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_DOMAIN_VARS {
            return Err(Error::guard("domain size", MAX_DOMAIN_VARS, names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        Ok(Domain(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Bit mask selecting variable `i` inside a valuation code.
    pub fn bit(&self, i: usize) -> u32 {
        1 << (self.len() - 1 - i)
    }

    /// Number of valuations, `2^n`.
    pub fn valuation_count(&self) -> usize {
        1usize << self.len()
    }

    pub fn valuations(&self) -> impl Iterator<Item = Valuation> + '_ {
        (0..self.valuation_count() as u32).map(|c| Valuation {
            domain: self.clone(),
            code: c,
        })
    }

    /// Reject formulas mentioning variables outside the domain.
    pub fn check_vars(&self, f: &crate::Formula) -> Result<()> {
        match f.vars().into_iter().find(|v| self.index_of(v).is_none()) {
            Some(v) => Err(Error::UnboundVariable(v)),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Domain{:?}", &*self.0)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Valuation {
    domain: Domain,
    code: u32,
}

impl Valuation {
    pub fn from_code(domain: &Domain, code: u32) -> Result<Valuation> {
        if (code as usize) >= domain.valuation_count() {
            return Err(Error::DomainMismatch(format!(
                "valuation code {code} out of range for {} variables",
                domain.len()
            )));
        }
        Ok(Valuation {
            domain: domain.clone(),
            code,
        })
    }

    pub fn from_bits(domain: &Domain, bits: &[bool]) -> Result<Valuation> {
        if bits.len() != domain.len() {
            return Err(Error::DomainMismatch(format!(
                "{} bits for {} variables",
                bits.len(),
                domain.len()
            )));
        }
        let code = bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        Ok(Valuation {
            domain: domain.clone(),
            code,
        })
    }

    /// Parse a bit string such as `101` in domain order.
    pub fn parse(domain: &Domain, s: &str) -> Result<Valuation> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::DomainMismatch(format!("bad bit `{c}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Valuation::from_bits(domain, &bits)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    /// Value of the `i`-th variable in domain order.
    pub fn get(&self, i: usize) -> bool {
        self.code & self.domain.bit(i) != 0
    }

    pub fn value_of(&self, name: &str) -> Option<bool> {
        self.domain.index_of(name).map(|i| self.get(i))
    }

    pub fn bits(&self) -> Vec<bool> {
        (0..self.domain.len()).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.domain.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Valuation({self})")
    }
}

/// A set of valuations over one domain, kept as sorted distinct codes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Team {
    domain: Domain,
    members: Vec<u32>,
}

impl Team {
    pub fn empty(domain: &Domain) -> Team {
        Team {
            domain: domain.clone(),
            members: Vec::new(),
        }
    }

    /// Build a team from valuation codes; duplicates collapse.
    pub fn from_codes(domain: &Domain, codes: impl IntoIterator<Item = u32>) -> Result<Team> {
        let mut members: Vec<u32> = codes.into_iter().collect();
        if let Some(&c) = members.iter().find(|&&c| c as usize >= domain.valuation_count()) {
            return Err(Error::DomainMismatch(format!(
                "valuation code {c} out of range for {} variables",
                domain.len()
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Team {
            domain: domain.clone(),
            members,
        })
    }

    pub fn from_valuations<'a>(
        domain: &Domain,
        vals: impl IntoIterator<Item = &'a Valuation>,
    ) -> Result<Team> {
        let mut codes = Vec::new();
        for v in vals {
            if v.domain() != domain {
                return Err(Error::DomainMismatch(format!(
                    "valuation over [{}] in team over [{domain}]",
                    v.domain()
                )));
            }
            codes.push(v.code());
        }
        Team::from_codes(domain, codes)
    }

    /// Team whose members are the set bits of `mask` (bit `c` = code `c`).
    pub fn from_mask(domain: &Domain, mask: u64) -> Team {
        debug_assert!(domain.valuation_count() >= 64 || mask >> domain.valuation_count() == 0);
        let members = (0..64u32).filter(|c| mask >> c & 1 == 1).collect();
        Team {
            domain: domain.clone(),
            members,
        }
    }

    /// Characteristic vector over valuation codes; only for domains of at most 6 variables.
    pub fn mask(&self) -> Option<u64> {
        if self.domain.len() > 6 {
            return None;
        }
        Some(self.members.iter().fold(0u64, |m, &c| m | 1 << c))
    }

    /// Parse a team literal: comma-separated bit strings, or `-` for the empty team.
    pub fn parse(domain: &Domain, s: &str) -> Result<Team> {
        let s = s.trim();
        if s == "-" {
            return Ok(Team::empty(domain));
        }
        let vals = s
            .split(',')
            .map(|part| Valuation::parse(domain, part.trim()))
            .collect::<Result<Vec<_>>>()?;
        Team::from_valuations(domain, &vals)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn codes(&self) -> &[u32] {
        &self.members
    }

    pub fn valuations(&self) -> impl Iterator<Item = Valuation> + '_ {
        self.members.iter().map(|&code| Valuation {
            domain: self.domain.clone(),
            code,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &Valuation) -> bool {
        v.domain() == &self.domain && self.members.binary_search(&v.code()).is_ok()
    }

    pub fn contains_code(&self, code: u32) -> bool {
        self.members.binary_search(&code).is_ok()
    }

    pub fn is_subset(&self, other: &Team) -> bool {
        self.domain == other.domain && self.members.iter().all(|c| other.contains_code(*c))
    }

    pub fn is_proper_subset(&self, other: &Team) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    /// Subteam selected by a bit mask over member positions.
    pub fn select(&self, positions: u64) -> Team {
        let members = self
            .members
            .iter()
            .enumerate()
            .filter(|(i, _)| positions >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        Team {
            domain: self.domain.clone(),
            members,
        }
    }

    /// All subteams in order of their member-position masks.
    pub fn subteams(&self) -> impl Iterator<Item = Team> + '_ {
        assert!(self.len() < 64, "team too large to enumerate subteams");
        (0..1u64 << self.len()).map(move |m| self.select(m))
    }

    pub fn union(&self, other: &Team) -> Team {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        Team {
            domain: self.domain.clone(),
            members,
        }
    }
}

impl fmt::Display for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for (i, v) in self.valuations().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Team{{{self}}}")
    }
}

/// Every team over `domain`, ordered by characteristic mask.
pub fn all_teams(domain: &Domain) -> impl Iterator<Item = Team> + '_ {
    assert!(domain.len() <= 5, "team space too large");
    (0..1u64 << domain.valuation_count()).map(move |m| Team::from_mask(domain, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pqr() -> Domain {
        Domain::new(["p", "q", "r"]).unwrap()
    }

    #[test]
    fn valuation_strings_follow_domain_order() {
        let d = pqr();
        let v = Valuation::parse(&d, "100").unwrap();
        assert_eq!(v.code(), 4);
        assert_eq!(v.value_of("p"), Some(true));
        assert_eq!(v.value_of("q"), Some(false));
        assert_eq!(v.to_string(), "100");
        assert!(Valuation::parse(&d, "10").is_err());
    }

    #[test]
    fn duplicate_rows_collapse() {
        let d = pqr();
        let t = Team::parse(&d, "100,010,010").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.to_string(), "010,100");
        assert_eq!(Team::parse(&d, "-").unwrap(), Team::empty(&d));
    }

    #[test]
    fn subset_and_mask() {
        let d = Domain::new(["p", "q"]).unwrap();
        let x = Team::parse(&d, "10,01").unwrap();
        let y = Team::parse(&d, "01").unwrap();
        assert!(y.is_proper_subset(&x));
        assert_eq!(x.mask(), Some(0b0110));
        assert_eq!(Team::from_mask(&d, 0b0110), x);
        assert_eq!(x.subteams().count(), 4);
        assert_eq!(all_teams(&d).count(), 16);
    }

    #[test]
    fn domain_rejects_duplicates() {
        assert_eq!(Domain::new(["p", "p"]), Err(Error::DuplicateName("p".into())));
    }
}
