//! Monotone bound propagation for `cat`, `TC` and `TC^M`.
//!
//! The normalized expression is flattened into an arena of nodes (children
//! before parents). Rules run round-robin in a fixed order until nothing
//! changes; every narrowing is logged as a [`Certificate`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::exact_linalg::Field;
use crate::invariants::{cup_length, zcl};

use super::cohomology::cohomology;
use super::normalize::{is_normal, normalize, RewriteStep};
use super::{SpaceError, SpaceExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    R13,
    R14,
}

impl RuleId {
    pub const ALL: [RuleId; 14] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
        RuleId::R10,
        RuleId::R11,
        RuleId::R12,
        RuleId::R13,
        RuleId::R14,
    ];

    /// The classical fact each rule encodes.
    pub fn anchor(self) -> &'static str {
        match self {
            RuleId::R1 => "cup-length bound: 1 + cup_K(X) <= cat(X)",
            RuleId::R2 => "zero-divisor bound: 1 + zcl_K(X) <= TC(X)",
            RuleId::R3 => "product inequality: cat(X x Y) <= cat(X) + cat(Y) - 1",
            RuleId::R4 => "wedge category: cat(X v Y) = max(cat X, cat Y)",
            RuleId::R5 => "cat(S^m) = 2, cat(pt) = 1, registered group categories",
            RuleId::R6 => "TC(X) <= 2 cat(X) - 1",
            RuleId::R7 => "connected Lie group: TC = cat and TC^M = TC",
            RuleId::R8 => "spheres: TC(S^m) = 2 (m odd) or 3 (m even); TC^M(S^m) = TC(S^m)",
            RuleId::R9 => "cat <= TC <= TC^M <= TC + 1",
            RuleId::R10 => {
                "wedge formula: TC(X v Y) = max(TC X, TC Y, cat(X x Y)) when that max >= dim + 2"
            }
            RuleId::R11 => {
                "wedge with a sphere: TC(X v S^m) = TC(X) + 1 when cat X = TC X = TC^M X and cat(X x S^m) = cat X + 1"
            }
            RuleId::R12 => {
                "product of zcl-sharp spaces: TC(X x Y) = TC X + TC Y - 1 when TC = 1 + zcl_K on both"
            }
            RuleId::R13 => "wedge of spheres: TC = 3 unless it is a single odd sphere",
            RuleId::R14 => "dimension bound: cat(X) <= dim(X) + 1",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The rules an [`Engine`] may fire. Dropping a rule is how the mutation
/// tests check that every rule carries weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet(BTreeSet<RuleId>);

impl RuleSet {
    pub fn all() -> Self {
        RuleSet(RuleId::ALL.into_iter().collect())
    }

    pub fn without(mut self, r: RuleId) -> Self {
        self.0.remove(&r);
        self
    }

    pub fn contains(&self, r: RuleId) -> bool {
        self.0.contains(&r)
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::all()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Invariant {
    Cat,
    Tc,
    TcM,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Cat => "cat",
            Invariant::Tc => "TC",
            Invariant::TcM => "TC^M",
        })
    }
}

/// Closed integer interval; `hi == None` means unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl Interval {
    pub fn unknown() -> Self {
        Interval { lo: 1, hi: None }
    }

    pub fn exact(&self) -> Option<u32> {
        (self.hi == Some(self.lo)).then_some(self.lo)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.exact(), self.hi) {
            (Some(v), _) => write!(f, "{v} (exact)"),
            (None, Some(h)) => write!(f, "[{}, {h}]", self.lo),
            (None, None) => write!(f, "[{}, inf)", self.lo),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rule: RuleId,
    pub anchor: &'static str,
    pub node: String,
    pub invariant: Invariant,
    pub side: Side,
    pub value: u32,
    pub premises: String,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.side {
            Side::Lower => ">=",
            Side::Upper => "<=",
        };
        write!(
            f,
            "{}: {}({}) {} {}  [{}]  from {}",
            self.rule, self.invariant, self.node, rel, self.value, self.anchor, self.premises
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("rule {rule} pushed {invariant}({node}) to an empty interval [{lo}, {hi}]")]
    Crossing {
        rule: RuleId,
        node: String,
        invariant: Invariant,
        lo: u32,
        hi: u32,
    },
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// Per-node state.
#[derive(Clone, Debug, Serialize)]
pub struct NodeBounds {
    pub expr: String,
    pub dim: u32,
    pub children: Vec<usize>,
    pub cat: Interval,
    pub tc: Interval,
    pub tcm: Interval,
    /// Cup-lengths recorded by R1, per field.
    pub cup: BTreeMap<Field, usize>,
    /// Zero-divisor cup-lengths recorded by R2, per field.
    pub zcl: BTreeMap<Field, usize>,
    #[serde(skip)]
    space: SpaceExpr,
    #[serde(skip)]
    cup_done: bool,
    #[serde(skip)]
    zcl_done: bool,
}

impl NodeBounds {
    fn get(&self, inv: Invariant) -> Interval {
        match inv {
            Invariant::Cat => self.cat,
            Invariant::Tc => self.tc,
            Invariant::TcM => self.tcm,
        }
    }

    fn get_mut(&mut self, inv: Invariant) -> &mut Interval {
        match inv {
            Invariant::Cat => &mut self.cat,
            Invariant::Tc => &mut self.tc,
            Invariant::TcM => &mut self.tcm,
        }
    }

    pub fn space(&self) -> &SpaceExpr {
        &self.space
    }
}

/// Result of running the engine on one expression.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantBounds {
    pub input: String,
    pub normalized: String,
    pub rewrites: Vec<RewriteStep>,
    pub fields: Vec<Field>,
    pub cat: Interval,
    pub tc: Interval,
    /// Suppressed unless the input is already in normal form: `TC^M` is
    /// not a homotopy invariant.
    pub tcm: Option<Interval>,
    pub certificates: Vec<Certificate>,
    pub nodes: Vec<NodeBounds>,
    /// Hypotheses the engine could not settle, e.g. categories of products
    /// with atoms that have no registered ring.
    pub conditional: Vec<String>,
}

impl InvariantBounds {
    pub fn root(&self) -> &NodeBounds {
        self.nodes.last().expect("at least one node")
    }

    pub fn cup(&self, field: Field) -> Option<usize> {
        self.root().cup.get(&field).copied()
    }

    pub fn zcl(&self, field: Field) -> Option<usize> {
        self.root().zcl.get(&field).copied()
    }
}

#[derive(Clone, Debug)]
pub struct Engine {
    rules: RuleSet,
    fields: Vec<Field>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(vec![Field::Q, Field::Z2])
    }
}

struct Run<'a> {
    rules: &'a RuleSet,
    fields: &'a [Field],
    nodes: Vec<NodeBounds>,
    certs: Vec<Certificate>,
    conditional: BTreeSet<String>,
}

impl Engine {
    pub fn new(fields: Vec<Field>) -> Self {
        Engine {
            rules: RuleSet::all(),
            fields,
        }
    }

    pub fn with_rules(mut self, rules: RuleSet) -> Self {
        self.rules = rules;
        self
    }

    pub fn fields(&self) -> &[Field] {
        &self.fields
    }

    /// Normalizes `e` and runs the rules to a fixpoint.
    pub fn bounds(&self, e: &SpaceExpr) -> Result<InvariantBounds, EngineError> {
        let normal = normalize(e)?;
        let mut run = Run {
            rules: &self.rules,
            fields: &self.fields,
            nodes: Vec::new(),
            certs: Vec::new(),
            conditional: BTreeSet::new(),
        };
        run.build(&normal.expr);
        run.fixpoint()?;
        let root = run.nodes.last().expect("root");
        Ok(InvariantBounds {
            input: e.to_string(),
            normalized: normal.expr.to_string(),
            rewrites: normal.steps,
            fields: self.fields.clone(),
            cat: root.cat,
            tc: root.tc,
            tcm: is_normal(e).then_some(root.tcm),
            certificates: run.certs,
            conditional: run.conditional.into_iter().collect(),
            nodes: run.nodes,
        })
    }
}

impl Run<'_> {
    /// Identical subexpressions share one node.
    fn build(&mut self, e: &SpaceExpr) -> usize {
        if let Some(i) = self.nodes.iter().position(|n| &n.space == e) {
            return i;
        }
        let children = e.children().iter().map(|c| self.build(c)).collect();
        self.nodes.push(NodeBounds {
            expr: e.to_string(),
            dim: e.dim(),
            children,
            cat: Interval::unknown(),
            tc: Interval::unknown(),
            tcm: Interval::unknown(),
            cup: BTreeMap::new(),
            zcl: BTreeMap::new(),
            space: e.clone(),
            cup_done: false,
            zcl_done: false,
        });
        self.nodes.len() - 1
    }

    fn fixpoint(&mut self) -> Result<(), EngineError> {
        loop {
            let mut changed = false;
            for rule in RuleId::ALL {
                if !self.rules.contains(rule) {
                    continue;
                }
                for n in 0..self.nodes.len() {
                    changed |= self.apply(rule, n)?;
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn raise(
        &mut self,
        rule: RuleId,
        n: usize,
        inv: Invariant,
        value: u32,
        premises: impl FnOnce() -> String,
    ) -> Result<bool, EngineError> {
        let iv = self.nodes[n].get(inv);
        if value <= iv.lo {
            return Ok(false);
        }
        self.narrow(rule, n, inv, Side::Lower, value, premises())
    }

    fn lower(
        &mut self,
        rule: RuleId,
        n: usize,
        inv: Invariant,
        value: u32,
        premises: impl FnOnce() -> String,
    ) -> Result<bool, EngineError> {
        let iv = self.nodes[n].get(inv);
        if iv.hi.is_some_and(|h| value >= h) {
            return Ok(false);
        }
        self.narrow(rule, n, inv, Side::Upper, value, premises())
    }

    fn narrow(
        &mut self,
        rule: RuleId,
        n: usize,
        inv: Invariant,
        side: Side,
        value: u32,
        premises: String,
    ) -> Result<bool, EngineError> {
        let node = &mut self.nodes[n];
        let iv = node.get_mut(inv);
        match side {
            Side::Lower => iv.lo = value,
            Side::Upper => iv.hi = Some(value),
        }
        let (lo, hi) = (iv.lo, iv.hi);
        if let Some(hi) = hi.filter(|&h| h < lo) {
            return Err(EngineError::Crossing {
                rule,
                node: node.expr.clone(),
                invariant: inv,
                lo,
                hi,
            });
        }
        self.certs.push(Certificate {
            rule,
            anchor: rule.anchor(),
            node: node.expr.clone(),
            invariant: inv,
            side,
            value,
            premises,
        });
        Ok(true)
    }

    fn name(&self, n: usize) -> &str {
        &self.nodes[n].expr
    }

    fn apply(&mut self, rule: RuleId, n: usize) -> Result<bool, EngineError> {
        match rule {
            RuleId::R1 | RuleId::R2 => self.ring_rules(rule, n),
            RuleId::R3 => self.product_cat(n),
            RuleId::R4 => self.wedge_cat(n),
            RuleId::R5 => self.atom_cat(n),
            RuleId::R6 => self.tc_from_cat(n),
            RuleId::R7 => self.lie_group(n),
            RuleId::R8 => self.sphere_tc(n),
            RuleId::R9 => self.general_inequalities(n),
            RuleId::R10 => self.wedge_formula(n),
            RuleId::R11 => self.wedge_with_sphere(n),
            RuleId::R12 => self.sharp_product(n),
            RuleId::R13 => self.wedge_of_spheres(n),
            RuleId::R14 => self.dimension_bound(n),
        }
    }
}

mod rules;
