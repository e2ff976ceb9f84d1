use std::sync::Arc;

use super::{GeometricSpace, PathFn, Planner, PlannerRule, PointMap};

/// Sum-of-indices cover of `X x Y` from planners on `X` and `Y`.
///
/// Rule `k` has domain the union of `U_i x V_j` over `i + j = k`, so `p`
/// and `q` rules give `p + q - 1`. Inside the union the piece maximizing
/// `min(margin_i, margin_j)` is used (ties to the lowest `i`), and the
/// section is the componentwise pair of factor sections.
pub fn product_planner(p: &Planner, q: &Planner) -> Planner {
    let split = p.space.ambient_dim();
    let np = p.rules.len();
    let nq = q.rules.len();
    let p = Arc::new(p.clone());
    let q = Arc::new(q.clone());

    let pieces = move |k: usize| -> Vec<(usize, usize)> {
        (0..np)
            .filter(|i| *i <= k && k - i < nq)
            .map(|i| (i, k - i))
            .collect()
    };

    let mut rules = Vec::with_capacity(np + nq - 1);
    for k in 0..np + nq - 1 {
        let ps = pieces(k);
        let domain = ps
            .iter()
            .map(|(i, j)| format!("[{}] x [{}]", p.rules[*i].domain, q.rules[*j].domain))
            .collect::<Vec<_>>()
            .join(" or ");
        let (pm, qm, ps_m) = (p.clone(), q.clone(), ps.clone());
        let best = move |a: &[f64], b: &[f64]| -> (f64, usize, usize) {
            let (a1, a2) = a.split_at(split);
            let (b1, b2) = b.split_at(split);
            let mut out = (f64::NEG_INFINITY, ps_m[0].0, ps_m[0].1);
            for (i, j) in &ps_m {
                let m = pm.rules[*i].margin(a1, b1).min(qm.rules[*j].margin(a2, b2));
                if m > out.0 {
                    out = (m, *i, *j);
                }
            }
            out
        };
        let best = Arc::new(best);
        let best2 = best.clone();
        let (ps_, qs_) = (p.clone(), q.clone());
        rules.push(PlannerRule::new(
            k,
            domain,
            "product cover: union of pieces with index sum k",
            Arc::new(move |a, b| best(a, b).0),
            Arc::new(move |a, b| {
                let (_, i, j) = best2(a, b);
                let (a1, a2) = a.split_at(split);
                let (b1, b2) = b.split_at(split);
                PathFn::Product(vec![
                    ps_.rules[i].section(a1, b1),
                    qs_.rules[j].section(a2, b2),
                ])
            }),
        ));
    }

    Planner {
        name: format!("{} x {}", p.name, q.name),
        space: GeometricSpace::Product(vec![p.space.clone(), q.space.clone()]),
        rules,
        reserved: p.reserved && q.reserved,
    }
}

/// Transport a planner along a homeomorphism `forward: space -> planner.space`
/// with inverse `backward`.
pub fn pullback(
    planner: &Planner,
    name: impl Into<String>,
    space: GeometricSpace,
    forward: PointMap,
    backward: PointMap,
) -> Planner {
    let inner = Arc::new(planner.clone());
    let rules = (0..inner.rules.len())
        .map(|k| {
            let (im, f1) = (inner.clone(), forward.clone());
            let (is, f2, g) = (inner.clone(), forward.clone(), backward.clone());
            PlannerRule::new(
                k,
                inner.rules[k].domain.clone(),
                inner.rules[k].anchor.clone(),
                Arc::new(move |a, b| im.rules[k].margin(&f1(a), &f1(b))),
                Arc::new(move |a, b| is.rules[k].section(&f2(a), &f2(b)).mapped(g.clone())),
            )
        })
        .collect();
    Planner {
        name: name.into(),
        space,
        rules,
        reserved: planner.reserved,
    }
}
