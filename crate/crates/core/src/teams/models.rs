use super::check::Compiled;
use super::{eval_classical, Domain, Team};
use crate::bitset::BitSet;
use crate::{Error, Formula, Limits, Result};

/// A set of teams over a small domain, indexed by characteristic mask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelSet {
    domain: Domain,
    bits: BitSet,
}

impl ModelSet {
    pub fn empty(domain: &Domain) -> ModelSet {
        ModelSet {
            domain: domain.clone(),
            bits: BitSet::new(1 << domain.valuation_count()),
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn insert(&mut self, team: &Team) {
        self.bits.insert(Self::index(team));
    }

    pub fn contains(&self, team: &Team) -> bool {
        team.domain() == &self.domain && self.bits.contains(Self::index(team))
    }

    /// Membership by characteristic mask.
    pub fn contains_mask(&self, mask: u64) -> bool {
        self.bits.contains(mask as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_subset(&self, other: &ModelSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn teams(&self) -> impl Iterator<Item = Team> + '_ {
        self.bits
            .iter()
            .map(|m| Team::from_mask(&self.domain, m as u64))
    }

    /// First team in `self` missing from `other`.
    pub fn first_outside(&self, other: &ModelSet) -> Option<Team> {
        self.bits
            .first_outside(&other.bits)
            .map(|m| Team::from_mask(&self.domain, m as u64))
    }

    /// Teams `X` with some `Y ⊆ X` in `self` and `X \ Y` in `other`: the team
    /// semantics of a disjunction, given downward-closed disjunct model sets.
    pub fn disjunction(&self, other: &ModelSet) -> ModelSet {
        let mut out = ModelSet::empty(&self.domain);
        let space = self.bits.capacity() as u64;
        for x in 0..space {
            let mut y = x;
            loop {
                if self.bits.contains(y as usize) && other.bits.contains((x ^ y) as usize) {
                    out.bits.insert(x as usize);
                    break;
                }
                if y == 0 {
                    break;
                }
                y = (y - 1) & x;
            }
        }
        out
    }

    pub fn intersection(&self, other: &ModelSet) -> ModelSet {
        ModelSet {
            domain: self.domain.clone(),
            bits: self.bits.intersection(&other.bits),
        }
    }

    fn index(team: &Team) -> usize {
        team.mask().expect("model sets cover small domains only") as usize
    }
}

/// All teams over `domain` satisfying `f`.
pub fn models_of(f: &Formula, domain: &Domain, limits: &Limits) -> Result<ModelSet> {
    if domain.len() > limits.max_vars.min(5) {
        return Err(Error::guard("domain size", limits.max_vars.min(5), domain.len()));
    }
    let compiled = Compiled::new(f, domain)?;
    let mut out = ModelSet::empty(domain);
    let space = 1u64 << domain.valuation_count();
    let mut codes = Vec::with_capacity(domain.valuation_count());
    for mask in 0..space {
        codes.clear();
        codes.extend((0..64u32).filter(|c| mask >> c & 1 == 1));
        if compiled.check(&codes) {
            out.bits.insert(mask as usize);
        }
    }
    Ok(out)
}

/// Team-semantic logical consequence: every team model of `lhs` is one of `rhs`.
pub fn entails_logical(lhs: &Formula, rhs: &Formula, domain: &Domain, limits: &Limits) -> Result<bool> {
    Ok(models_of(lhs, domain, limits)?.is_subset(&models_of(rhs, domain, limits)?))
}

/// Classical consequence between dependence-free formulas, by truth tables
/// over the variables the two formulas mention.
pub fn entails_classical(lhs: &Formula, rhs: &Formula, domain: &Domain) -> Result<bool> {
    domain.check_vars(lhs)?;
    domain.check_vars(rhs)?;
    let mut vars = lhs.vars();
    vars.extend(rhs.vars());
    let table = Domain::new(vars)?;
    for v in table.valuations() {
        if eval_classical(&v, lhs)? && !eval_classical(&v, rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn small_model_sets() {
        let d = Domain::new(["p"]).unwrap();
        let l = Limits::default();
        let bot: Vec<String> = models_of(&f("F"), &d, &l).unwrap().teams().map(|t| t.to_string()).collect();
        assert_eq!(bot, ["-"]);
        let dep: Vec<String> = models_of(&f("dep(p)"), &d, &l).unwrap().teams().map(|t| t.to_string()).collect();
        assert_eq!(dep, ["-", "0", "1"]);
        let p: Vec<String> = models_of(&f("p"), &d, &l).unwrap().teams().map(|t| t.to_string()).collect();
        assert_eq!(p, ["-", "1"]);
    }

    #[test]
    fn logical_entailment() {
        let d = Domain::new(["p", "q"]).unwrap();
        let l = Limits::default();
        assert!(entails_logical(&f("p"), &f("dep(p)"), &d, &l).unwrap());
        assert!(!entails_logical(&f("dep(p) | dep(p)"), &f("dep(p)"), &d, &l).unwrap());
        let lhs = models_of(&f("dep(p) | dep(p)"), &d, &l).unwrap();
        let rhs = models_of(&f("dep(p)"), &d, &l).unwrap();
        let w = lhs.first_outside(&rhs).unwrap();
        assert!(w.len() >= 2);
        assert!(entails_logical(&f("dep(p;q) & q"), &f("dep(p;q) & q"), &d, &l).unwrap());
    }

    #[test]
    fn disjunction_algebra_matches_the_checker() {
        let d = Domain::new(["p", "q"]).unwrap();
        let l = Limits::default();
        let fs = ["dep(p)", "q", "dep(q;p) & ~q", "p | dep(q)", "F", "T"];
        for a in fs {
            for b in fs {
                let direct = models_of(&f(&format!("({a}) | ({b})")), &d, &l).unwrap();
                let ma = models_of(&f(a), &d, &l).unwrap();
                let mb = models_of(&f(b), &d, &l).unwrap();
                assert_eq!(ma.disjunction(&mb), direct, "{a} | {b}");
                let conj = models_of(&f(&format!("({a}) & ({b})")), &d, &l).unwrap();
                assert_eq!(ma.intersection(&mb), conj);
            }
        }
    }

    #[test]
    fn guard_rejects_large_domains() {
        let d = Domain::new(["a", "b", "c", "d", "e"]).unwrap();
        assert!(matches!(
            models_of(&Formula::Top, &d, &Limits::default()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn classical_entailment_by_truth_table() {
        let d = Domain::new(["p", "q"]).unwrap();
        assert!(entails_classical(&f("p & q"), &f("p"), &d).unwrap());
        assert!(!entails_classical(&f("p | q"), &f("p"), &d).unwrap());
        assert!(entails_classical(&f("F"), &f("q"), &d).unwrap());
        assert_eq!(
            entails_classical(&f("r"), &f("p"), &d),
            Err(Error::UnboundVariable("r".into()))
        );
    }
}
