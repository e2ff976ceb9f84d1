use serde::Serialize;

use super::parser::{check_config_hypotheses, split_group_euclidean};
use super::{SpaceError, SpaceExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RewriteRule {
    /// `F(G × R^n, 2) ≃ G × (G ∨ S^{m+n-1})`, via `(g, h) ↦ (g, h g⁻¹)`.
    ConfigSplit,
    /// Contractible factors and summands collapse to a point.
    DropContractible,
    /// Nested products and wedges are flattened.
    Flatten,
}

impl RewriteRule {
    pub fn anchor(self) -> &'static str {
        match self {
            RewriteRule::ConfigSplit => {
                "two-point configuration space of G x R^n splits as G x (G minus a point), and G x R^n minus a point is G wedge S^(m+n-1)"
            }
            RewriteRule::DropContractible => "homotopy invariance; R^n is contractible",
            RewriteRule::Flatten => "associativity of products and wedges",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    pub before: String,
    pub after: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub expr: SpaceExpr,
    pub steps: Vec<RewriteStep>,
}

struct Normalizer {
    steps: Vec<RewriteStep>,
}

impl Normalizer {
    fn log(&mut self, rule: RewriteRule, before: &SpaceExpr, after: &SpaceExpr) {
        self.steps.push(RewriteStep {
            rule,
            before: before.to_string(),
            after: after.to_string(),
        });
    }

    fn run(&mut self, e: &SpaceExpr) -> Result<SpaceExpr, SpaceError> {
        match e {
            SpaceExpr::Sphere(_) | SpaceExpr::Point | SpaceExpr::Group(_) => Ok(e.clone()),
            SpaceExpr::Euclidean(_) => {
                self.log(RewriteRule::DropContractible, e, &SpaceExpr::Point);
                Ok(SpaceExpr::Point)
            }
            SpaceExpr::Config2(inner) => {
                check_config_hypotheses(e).map_err(SpaceError::Hypothesis)?;
                let (group, n) = split_group_euclidean(inner);
                let group = group.expect("checked by hypotheses");
                if n == 0 {
                    return Err(SpaceError::Hypothesis(format!(
                        "{e}: the splitting needs at least one Euclidean factor (n >= 1)"
                    )));
                }
                let m = group.dim();
                let split = SpaceExpr::Product(vec![
                    group.clone(),
                    SpaceExpr::Wedge(vec![group, SpaceExpr::Sphere(m + n - 1)]),
                ]);
                self.log(RewriteRule::ConfigSplit, e, &split);
                self.run(&split)
            }
            SpaceExpr::Product(children) | SpaceExpr::Wedge(children) => {
                let is_product = matches!(e, SpaceExpr::Product(_));
                let mut flat = Vec::new();
                let mut flattened = false;
                let mut dropped = false;
                for c in children {
                    match self.run(c)? {
                        SpaceExpr::Point => dropped = true,
                        SpaceExpr::Product(inner) if is_product => {
                            flattened = true;
                            flat.extend(inner);
                        }
                        SpaceExpr::Wedge(inner) if !is_product => {
                            flattened = true;
                            flat.extend(inner);
                        }
                        other => flat.push(other),
                    }
                }
                let out = match flat.len() {
                    0 => SpaceExpr::Point,
                    1 => flat.pop().unwrap(),
                    _ if is_product => SpaceExpr::Product(flat),
                    _ => SpaceExpr::Wedge(flat),
                };
                if flattened {
                    self.log(RewriteRule::Flatten, e, &out);
                } else if dropped {
                    self.log(RewriteRule::DropContractible, e, &out);
                }
                Ok(out)
            }
        }
    }
}

/// Rewrites to a homotopy-equivalent expression with no configuration
/// spaces and no Euclidean factors.
pub fn normalize(e: &SpaceExpr) -> Result<Normalized, SpaceError> {
    let mut n = Normalizer { steps: Vec::new() };
    let expr = n.run(e)?;
    Ok(Normalized {
        expr,
        steps: n.steps,
    })
}

/// Whether `normalize` leaves the expression untouched.
pub fn is_normal(e: &SpaceExpr) -> bool {
    normalize(e).is_ok_and(|n| n.steps.is_empty() && &n.expr == e)
}
