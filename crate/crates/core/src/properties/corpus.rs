//! Finite formula corpora and their shared model-set tables.

use std::collections::HashSet;

use rand::SeedableRng;
use rand::rngs::StdRng;

use crate::formula::{constancy_conjunction, size_bounded_formula, theta_of_team};
use crate::gen::random_formula;
use crate::teams::{all_teams, models_of, ModelSet};
use crate::{Domain, Error, Formula, Limits, Result};

/// Domains above this size are refused when every `Θ_X` is requested.
pub const MAX_THETA_VARS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusParams {
    /// 1 keeps only atoms; each further level adds pairwise `&` and `|`.
    pub depth: usize,
    pub seed: u64,
    /// Extra random formulas of at most `depth` levels.
    pub random: usize,
    pub include_theta: bool,
    pub include_dep: bool,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            depth: 2,
            seed: 0,
            random: 0,
            include_theta: true,
            include_dep: true,
        }
    }
}

impl CorpusParams {
    /// Dependence-free corpus of the given depth.
    pub fn classical(depth: usize) -> Self {
        CorpusParams {
            depth,
            include_theta: false,
            include_dep: false,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    domain: Domain,
    formulas: Vec<Formula>,
    params: Option<CorpusParams>,
}

impl Corpus {
    pub fn generate(domain: &Domain, params: CorpusParams) -> Result<Corpus> {
        if params.include_theta && domain.len() > MAX_THETA_VARS {
            return Err(Error::guard("corpus domain size", MAX_THETA_VARS, domain.len()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut push = |f: Formula, out: &mut Vec<Formula>| {
            if seen.insert(f.clone()) {
                out.push(f);
            }
        };

        let mut atoms = vec![Formula::Top, Formula::Bot];
        for p in domain.names() {
            atoms.push(Formula::var(p.clone()));
            atoms.push(Formula::neg(p.clone()));
        }
        if params.include_dep {
            let names = domain.names();
            for (bi, b) in names.iter().enumerate() {
                atoms.push(Formula::constancy(b.clone()));
                let others: Vec<&String> = names.iter().enumerate().filter(|&(i, _)| i != bi).map(|(_, n)| n).collect();
                for sel in 1u32..(1 << others.len()) {
                    let args: Vec<String> = others
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| sel >> i & 1 == 1)
                        .map(|(_, n)| (*n).clone())
                        .collect();
                    atoms.push(Formula::dep(args, b.clone()));
                }
            }
            atoms.push(constancy_conjunction(domain));
        }
        let mut level: Vec<Formula> = Vec::new();
        for a in atoms {
            if !level.contains(&a) {
                level.push(a);
            }
        }
        for _ in 1..params.depth {
            let mut next = level.clone();
            for i in 0..level.len() {
                for j in i..level.len() {
                    if i < j {
                        next.push(Formula::and(level[i].clone(), level[j].clone()));
                    }
                    next.push(Formula::or(level[i].clone(), level[j].clone()));
                }
            }
            let mut dedup = HashSet::new();
            next.retain(|f| dedup.insert(f.clone()));
            level = next;
        }
        for f in level {
            push(f, &mut out);
        }
        if params.include_theta {
            for x in all_teams(domain) {
                push(theta_of_team(&x, domain)?, &mut out);
            }
            if params.include_dep {
                for x in all_teams(domain) {
                    for l in 1..x.len() {
                        push(size_bounded_formula(&x, l), &mut out);
                    }
                }
            }
        }
        let mut rng = StdRng::seed_from_u64(params.seed);
        for _ in 0..params.random {
            push(random_formula(&mut rng, domain, params.depth.max(1), params.include_dep), &mut out);
        }
        Ok(Corpus {
            domain: domain.clone(),
            formulas: out,
            params: Some(params),
        })
    }

    /// A corpus of explicitly given formulas, kept in order.
    pub fn from_formulas(domain: &Domain, formulas: Vec<Formula>) -> Result<Corpus> {
        for f in &formulas {
            domain.check_vars(f)?;
        }
        Ok(Corpus {
            domain: domain.clone(),
            formulas,
            params: None,
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn params(&self) -> Option<CorpusParams> {
        self.params
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }
}

/// Team model sets of every corpus formula and of every pairwise disjunction,
/// computed once and shared by all models over the same domain.
#[derive(Debug, Clone)]
pub struct CorpusTable {
    corpus: Corpus,
    models: Vec<ModelSet>,
    /// Row-major upper triangle: entry for `(i, j)` with `i <= j`.
    or_models: Vec<ModelSet>,
}

impl CorpusTable {
    pub fn new(corpus: &Corpus, limits: &Limits) -> Result<CorpusTable> {
        let models = corpus
            .formulas
            .iter()
            .map(|f| models_of(f, &corpus.domain, limits))
            .collect::<Result<Vec<_>>>()?;
        let k = models.len();
        let mut or_models = Vec::with_capacity(k * (k + 1) / 2);
        for i in 0..k {
            for j in i..k {
                or_models.push(models[i].disjunction(&models[j]));
            }
        }
        Ok(CorpusTable {
            corpus: corpus.clone(),
            models,
            or_models,
        })
    }

    pub fn corpus(&self) -> &Corpus {
        &self.corpus
    }

    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.corpus.formulas[i]
    }

    pub fn models(&self, i: usize) -> &ModelSet {
        &self.models[i]
    }

    /// Model set of `formula(i) | formula(j)`.
    pub fn or_models(&self, i: usize, j: usize) -> &ModelSet {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        let k = self.models.len();
        &self.or_models[a * (2 * k - a + 1) / 2 + (b - a)]
    }
}
