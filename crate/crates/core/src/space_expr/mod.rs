//! Space expressions, their homotopy rewrites, and the bound engine.

mod ast;
mod cohomology;
mod engine;
mod normalize;
mod parser;

pub use ast::{GroupAtom, SpaceExpr};
pub use cohomology::{cohomology, rp3_ring};
pub use engine::{
    Certificate, Engine, EngineError, Interval, Invariant, InvariantBounds, NodeBounds, RuleId,
    RuleSet, Side,
};
pub use normalize::{is_normal, normalize, Normalized, RewriteRule, RewriteStep};
pub use parser::parse;

use thiserror::Error;

use crate::exact_linalg::Field;
use crate::graded_algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("semantic error at position {pos}: {msg}")]
    Semantic { pos: usize, msg: String },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("no registered ring for {atom} over {field}")]
    UnregisteredRing { atom: String, field: Field },
    #[error("expression must be normalized first: {0}")]
    NotNormalized(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Renders the rewrite chain and rule firings in order.
pub fn explain(bounds: &InvariantBounds) -> String {
    let mut out = String::new();
    out.push_str(&format!("input:      {}\n", bounds.input));
    for step in &bounds.rewrites {
        out.push_str(&format!(
            "rewrite {:?}: {} => {}  [{}]\n",
            step.rule,
            step.before,
            step.after,
            step.rule.anchor()
        ));
    }
    out.push_str(&format!("normalized: {}\n", bounds.normalized));
    for (i, c) in bounds.certificates.iter().enumerate() {
        out.push_str(&format!("{:>3}. {c}\n", i + 1));
    }
    out.push_str(&format!("cat  = {}\n", bounds.cat));
    out.push_str(&format!("TC   = {}\n", bounds.tc));
    match bounds.tcm {
        Some(t) => out.push_str(&format!("TC^M = {t}\n")),
        None => out.push_str("TC^M = (not reported: input is not in normal form)\n"),
    }
    for c in &bounds.conditional {
        out.push_str(&format!("conditional: {c}\n"));
    }
    out
}

#[cfg(test)]
mod tests;
