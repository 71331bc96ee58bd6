use super::SuccinctModel;
use crate::teams::eval_classical;
use crate::{Domain, Error, Formula, Limits, Result, Valuation};

/// Whether `φ` is satisfiable with its lexicographically largest model
/// setting the last variable to 1. Decided by scanning valuations downward.
pub fn olms(f: &Formula, domain: &Domain, limits: &Limits) -> Result<bool> {
    let n = domain.len();
    if n == 0 {
        return Err(Error::guard("OLMS variables (minimum)", 1, 0));
    }
    if n > limits.max_olms_vars {
        return Err(Error::guard("OLMS variables", limits.max_olms_vars, n));
    }
    for code in (0..domain.valuation_count() as u32).rev() {
        let v = Valuation::from_code(domain, code)?;
        if eval_classical(&v, f)? {
            return Ok(v.get(n - 1));
        }
    }
    Ok(false)
}

/// `φ ↦ (M, φ, ~x_n)` with `M` the identity labelling under strict
/// reverse-lex order: the query fails exactly when `olms(φ)` holds.
pub fn olms_reduction(f: &Formula, domain: &Domain) -> Result<(SuccinctModel, Formula, Formula)> {
    domain.check_vars(f)?;
    let last = domain
        .names()
        .last()
        .ok_or_else(|| Error::guard("OLMS variables (minimum)", 1, 0))?;
    Ok((SuccinctModel::rlex_identity(domain), f.clone(), Formula::neg(last.clone())))
}
