//! Cover-based motion planners.
//!
//! A [`Planner`] is an ordered family of rules. Each rule pairs a signed
//! margin (positive exactly on its open domain in `X x X`) with a section
//! that returns a closed-form [`PathFn`] from `A` to `B`. The number of
//! rules of a covering family is an upper bound for TC, so each planner
//! here is an executable witness of an upper bound computed by the engine.

mod cylinder;
pub(crate) mod geom;
mod path;
mod product;
mod space;
mod sphere;
mod transfer;
mod wedge;


use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

pub use cylinder::{config_cylinder_planner, punctured_cylinder_retraction};
pub use path::{PathFn, PointMap};
pub use product::{product_planner, pullback};
pub use space::GeometricSpace;
pub use sphere::{circle_planner, contractible_planner, odd_sphere_planner, sphere_planner, Chart};
pub use transfer::{retract_transfer, Retraction, TrackFn};
pub use wedge::wedge_planner;

/// Tolerance for "this point lies in its space".
pub const MEMBERSHIP_TOL: f64 = 1e-12;
/// Tolerance for `gamma(0) = A` and `gamma(1) = B`.
pub const ENDPOINT_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlanError {
    #[error("point {point:?} is not in {space} (error {error:e})")]
    Membership {
        space: String,
        point: Vec<f64>,
        error: f64,
    },
    #[error("configuration {point:?} has coinciding bodies")]
    Collision { point: Vec<f64> },
    #[error("no rule covers the pair ({a:?}, {b:?})")]
    Uncovered { a: Vec<f64>, b: Vec<f64> },
    #[error("invalid retraction: r(r(z)) differs from r(z) by {error:e} at {point:?}")]
    InvalidRetraction { point: Vec<f64>, error: f64 },
    #[error("unsupported planner parameter: {0}")]
    Unsupported(String),
}

pub type MarginFn = Arc<dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync>;
pub type SectionFn = Arc<dyn Fn(&[f64], &[f64]) -> PathFn + Send + Sync>;

/// One open set of the cover together with its local section.
#[derive(Clone)]
pub struct PlannerRule {
    pub index: usize,
    pub domain: String,
    pub anchor: String,
    margin: MarginFn,
    section: SectionFn,
}

impl fmt::Debug for PlannerRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlannerRule")
            .field("index", &self.index)
            .field("domain", &self.domain)
            .finish()
    }
}

impl PlannerRule {
    pub fn new(
        index: usize,
        domain: impl Into<String>,
        anchor: impl Into<String>,
        margin: MarginFn,
        section: SectionFn,
    ) -> Self {
        PlannerRule {
            index,
            domain: domain.into(),
            anchor: anchor.into(),
            margin,
            section,
        }
    }

    /// Positive inside the rule's open domain; the magnitude is a
    /// distance-to-boundary proxy.
    pub fn margin(&self, a: &[f64], b: &[f64]) -> f64 {
        (self.margin)(a, b)
    }

    /// The rule's section. Only meaningful where `margin > 0`.
    pub fn section(&self, a: &[f64], b: &[f64]) -> PathFn {
        (self.section)(a, b)
    }
}

#[derive(Debug, Clone)]
pub struct Planner {
    pub name: String,
    pub space: GeometricSpace,
    pub rules: Vec<PlannerRule>,
    /// Whether every rule meeting the diagonal returns constant paths there.
    pub reserved: bool,
}

/// Answer to a single query.
#[derive(Debug, Clone)]
pub struct Plan {
    pub rule: usize,
    pub margin: f64,
    pub path: PathFn,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleDescription {
    pub index: usize,
    pub domain: String,
    pub anchor: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlannerDescription {
    pub name: String,
    pub space: String,
    pub rule_count: usize,
    pub reserved: bool,
    pub rules: Vec<RuleDescription>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PathSample {
    pub t: f64,
    pub point: Vec<f64>,
}

impl Planner {
    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn margins(&self, a: &[f64], b: &[f64]) -> Vec<f64> {
        self.rules.iter().map(|r| r.margin(a, b)).collect()
    }

    /// Rule with the largest margin, ties to the lowest index; `None` when
    /// no margin is positive.
    pub fn select(&self, a: &[f64], b: &[f64]) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        for (i, m) in self.margins(a, b).into_iter().enumerate() {
            if m > 0.0 && best.is_none_or(|(_, bm)| m > bm) {
                best = Some((i, m));
            }
        }
        best
    }

    /// Plan without validating the inputs.
    pub fn plan_unchecked(&self, a: &[f64], b: &[f64]) -> Option<Plan> {
        self.select(a, b).map(|(rule, margin)| Plan {
            rule,
            margin,
            path: self.rules[rule].section(a, b),
        })
    }

    pub fn plan(&self, a: &[f64], b: &[f64]) -> Result<Plan, PlanError> {
        self.space.check(a)?;
        self.space.check(b)?;
        self.plan_unchecked(a, b)
            .ok_or_else(|| PlanError::Uncovered {
                a: a.to_vec(),
                b: b.to_vec(),
            })
    }

    pub fn describe(&self) -> PlannerDescription {
        PlannerDescription {
            name: self.name.clone(),
            space: self.space.to_string(),
            rule_count: self.rules.len(),
            reserved: self.reserved,
            rules: self
                .rules
                .iter()
                .map(|r| RuleDescription {
                    index: r.index,
                    domain: r.domain.clone(),
                    anchor: r.anchor.clone(),
                })
                .collect(),
        }
    }
}

/// Samples of a path at `resolution + 1` evenly spaced times.
pub fn export_path(path: &PathFn, resolution: usize) -> Vec<PathSample> {
    path.sample(resolution)
        .into_iter()
        .map(|(t, point)| PathSample { t, point })
        .collect()
}
