//! Preferential (KLM-style) entailment over propositional dependence logic
//! with team semantics, together with circuit-represented (succinct) models
//! and the algorithms that decide entailment over them.

pub mod bitset;
pub mod circuits;
pub mod error;
pub mod formula;
pub mod gen;
pub mod limits;
pub mod prefmodel;
pub mod properties;
pub mod succinct;
pub mod teams;

pub use error::{Error, Result};
pub use formula::Formula;
pub use limits::Limits;
pub use prefmodel::{EntailmentVerdict, PreferentialModel};
pub use teams::{Domain, Team, Valuation};
