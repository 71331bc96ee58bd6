//! Formulas of propositional dependence logic in negation normal form.
//!
//! Negation is only available on variables, and the dependence atom
//! `dep(a1 .. ak ; b)` states that the values of `a1..ak` functionally
//! determine the value of `b`. With no determinants it is the constancy
//! atom `dep(b)`.

mod build;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

pub use build::{constancy_conjunction, size_bounded_formula, theta_of_team};
pub use parse::parse;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    NegVar(String),
    Top,
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `Dep(determinants, determined)`; constancy when `determinants` is empty.
    Dep(Vec<String>, String),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    pub fn neg(name: impl Into<String>) -> Formula {
        Formula::NegVar(name.into())
    }

    pub fn literal(name: impl Into<String>, positive: bool) -> Formula {
        if positive {
            Formula::Var(name.into())
        } else {
            Formula::NegVar(name.into())
        }
    }

    /// `T` or `F`.
    pub fn constant(value: bool) -> Formula {
        if value {
            Formula::Top
        } else {
            Formula::Bot
        }
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn dep<S: Into<String>>(determinants: impl IntoIterator<Item = S>, determined: S) -> Formula {
        Formula::Dep(
            determinants.into_iter().map(Into::into).collect(),
            determined.into(),
        )
    }

    pub fn constancy(name: impl Into<String>) -> Formula {
        Formula::Dep(Vec::new(), name.into())
    }

    /// Left-nested conjunction; the empty conjunction is `T`.
    pub fn and_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction; the empty disjunction is `F`.
    pub fn or_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Variables occurring anywhere in the formula, dependence atoms included.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(p) | Formula::NegVar(p) => {
                out.insert(p.clone());
            }
            Formula::Top | Formula::Bot => {}
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Formula::Dep(det, b) => {
                out.extend(det.iter().cloned());
                out.insert(b.clone());
            }
        }
    }

    /// True when the formula contains no dependence atom.
    pub fn is_flat(&self) -> bool {
        match self {
            Formula::Dep(..) => false,
            Formula::And(l, r) | Formula::Or(l, r) => l.is_flat() && r.is_flat(),
            _ => true,
        }
    }

    /// Replace every dependence atom by `T`.
    pub fn flatten(&self) -> Formula {
        match self {
            Formula::Dep(..) => Formula::Top,
            Formula::And(l, r) => Formula::and(l.flatten(), r.flatten()),
            Formula::Or(l, r) => Formula::or(l.flatten(), r.flatten()),
            other => other.clone(),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::And(l, r) | Formula::Or(l, r) => 1 + l.size() + r.size(),
            _ => 1,
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Formula> {
        parse(s)
    }
}

// Printing follows the grammar: `&` binds tighter than `|`, both parse
// left-associatively, so a right operand of the same connective needs parens.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(p) => write!(f, "{p}"),
            Formula::NegVar(p) => write!(f, "~{p}"),
            Formula::Top => write!(f, "T"),
            Formula::Bot => write!(f, "F"),
            Formula::Dep(det, b) if det.is_empty() => write!(f, "dep({b})"),
            Formula::Dep(det, b) => write!(f, "dep({} ; {b})", det.join(" ")),
            Formula::Or(l, r) => {
                write!(f, "{l} | ")?;
                if matches!(**r, Formula::Or(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Formula::And(l, r) => {
                if matches!(**l, Formula::Or(..)) {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                write!(f, " & ")?;
                if matches!(**r, Formula::Or(..) | Formula::And(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({self})")
    }
}
