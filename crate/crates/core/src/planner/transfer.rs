use std::sync::Arc;

use super::{geom, GeometricSpace, PathFn, PlanError, Planner, PlannerRule, PointMap};

/// A retraction `r: Z -> W` onto an embedded copy of `W`, with a homotopy
/// from the identity of `Z` to `inclusion . r`.
///
/// `retract` lands in the coordinates of `W`; `include` embeds `W` in `Z`;
/// `track(z)` is the path `H(z, .)` from `z` to `include(retract(z))`.
/// `z -> H(z, .)`, the track of a deformation.
pub type TrackFn = Arc<dyn Fn(&[f64]) -> PathFn + Send + Sync>;

#[derive(Clone)]
pub struct Retraction {
    pub ambient: GeometricSpace,
    pub retract: PointMap,
    pub include: PointMap,
    pub track: TrackFn,
    /// Points of `Z` on which `r . i . r = r` is checked.
    pub probes: Vec<Vec<f64>>,
}

/// Planner on `Z` from a planner on the retract `W`.
///
/// Rule `j` has domain `(r x r)^-1(V_j)`; its section tracks `H(A, .)` to
/// `r(A)`, follows the `W`-section to `r(B)`, and runs `H(B, .)` backwards.
/// The result is not claimed reserved: on the diagonal the path is the
/// track out and back, not a constant.
pub fn retract_transfer(planner: &Planner, r: Retraction) -> Result<Planner, PlanError> {
    for z in &r.probes {
        let w = (r.retract)(z);
        let again = (r.retract)(&(r.include)(&w));
        let error = geom::dist(&w, &again);
        if !(error < 1e-9) {
            return Err(PlanError::InvalidRetraction {
                point: z.clone(),
                error,
            });
        }
    }
    let inner = Arc::new(planner.clone());
    let r = Arc::new(r);
    let rules = (0..inner.rules.len())
        .map(|k| {
            let (im, rm) = (inner.clone(), r.clone());
            let (is, rs) = (inner.clone(), r.clone());
            PlannerRule::new(
                k,
                format!("preimage under r x r of [{}]", inner.rules[k].domain),
                format!("retraction transfer of: {}", inner.rules[k].anchor),
                Arc::new(move |a, b| im.rules[k].margin(&(rm.retract)(a), &(rm.retract)(b))),
                Arc::new(move |a, b| {
                    let (ra, rb) = ((rs.retract)(a), (rs.retract)(b));
                    PathFn::concat(vec![
                        (rs.track)(a),
                        is.rules[k].section(&ra, &rb).mapped(rs.include.clone()),
                        (rs.track)(b).reversed(),
                    ])
                }),
            )
        })
        .collect();
    Ok(Planner {
        name: format!("transfer({})", planner.name),
        space: r.ambient.clone(),
        rules,
        reserved: false,
    })
}
