//! Reserved three-rule planner on `X v S^m` with `X = S^1`.
//!
//! The square of the wedge splits into the quadrants `X x X`, `Y x Y`,
//! `X x Y`, `Y x X` (`Y = S^m`), which overlap where a coordinate is the
//! basepoint. On `X x X` and `Y x Y` rule `k` is the circle/sphere rule
//! placed in slot `k` (the circle occupies slots 0 and 2, slot 1 is empty
//! there). On the mixed quadrants rule `k` is the product `U_k x V_k` of
//! sets contractible to the basepoint, with section "contract `a` to the
//! basepoint, then un-contract to `b`":
//!
//! | k | `U_k` (on X)   | contraction of a      | `V_k` (on Y)     | path basepoint -> b      |
//! |---|----------------|-----------------------|------------------|--------------------------|
//! | 0 | `a != -x0`     | geodesic              | `b != -C`        | geodesic                 |
//! | 1 | `a != p`       | arc avoiding `p`      | `b != C, B0`     | sphere rule 1 from `C`   |
//! | 2 | `a != x0`      | circle rule 1 to `x0` | `b != -B0`       | chart line at `-B0`      |
//!
//! with `x0 = C = e0`, `p = (0, 1)`, `B0 = e_m`. Every point of `X` lies in
//! at least two of the `U_k` and every point of `Y` in at least two of the
//! `V_k`, so with three slots some `U_k x V_k` contains any mixed pair.
//! The contractions are chosen so that on the faces `X x x0` and `x0 x Y`
//! each mixed section coincides with the quadrant rule of the same slot
//! (zero-length pieces take no time), which makes every rule's domain open
//! and its section continuous. The `Y x X` quadrant is the mirror image,
//! with `V'_1 = {b != C}`.

use std::sync::Arc;

use super::space::base_dist;
use super::sphere::{chart_line, circle_turn, geodesic, sphere_base, sphere_north, sphere_turn};
use super::{geom, GeometricSpace, PathFn, Planner, PlannerRule, PointMap};

#[derive(Debug, Clone)]
enum Lobe {
    X(Vec<f64>),
    Y(Vec<f64>),
}

struct WedgeGeometry {
    m: usize,
    x0: Vec<f64>,
    px: Vec<f64>,
    c: Vec<f64>,
    north: Vec<f64>,
    q: Vec<f64>,
    embed_x: PointMap,
    embed_y: PointMap,
}

impl WedgeGeometry {
    fn new(m: usize) -> Self {
        let c = sphere_base(m);
        let x0 = vec![1.0, 0.0];
        let c_for_x = c.clone();
        let x0_for_y = x0.clone();
        WedgeGeometry {
            m,
            px: vec![0.0, 1.0],
            north: sphere_north(m),
            q: geom::neg(&sphere_north(m)),
            embed_x: Arc::new(move |a: &[f64]| {
                let mut v = a.to_vec();
                v.extend_from_slice(&c_for_x);
                v
            }),
            embed_y: Arc::new(move |b: &[f64]| {
                let mut v = x0_for_y.clone();
                v.extend_from_slice(b);
                v
            }),
            x0,
            c,
        }
    }

    /// Which lobe a point is on. The basepoint is reported on `X`; this is
    /// harmless because the sections agree on the faces.
    fn lobe(&self, p: &[f64]) -> Lobe {
        let (a, b) = p.split_at(2);
        if base_dist(b) <= base_dist(a) {
            Lobe::X(a.to_vec())
        } else {
            Lobe::Y(b.to_vec())
        }
    }

    fn on_x(&self, path: PathFn) -> PathFn {
        path.mapped(self.embed_x.clone())
    }

    fn on_y(&self, path: PathFn) -> PathFn {
        path.mapped(self.embed_y.clone())
    }

    /// Arc contracting `a != p` to `x0` inside `X - {p}`.
    fn arc_to_base(&self, a: &[f64]) -> PathFn {
        let mut th = a[1].atan2(a[0]);
        if th > std::f64::consts::FRAC_PI_2 {
            th -= 2.0 * std::f64::consts::PI;
        }
        if th == 0.0 {
            PathFn::Constant(self.x0.clone())
        } else {
            PathFn::Arc { from: th, to: 0.0 }
        }
    }

    fn margin(&self, k: usize, p: &[f64], r: &[f64]) -> f64 {
        let d = geom::dist;
        match (self.lobe(p), self.lobe(r)) {
            (Lobe::X(a), Lobe::X(b)) => match k {
                0 => geom::dist_neg(&a, &b),
                1 => -1.0,
                _ => d(&a, &b),
            },
            (Lobe::Y(a), Lobe::Y(b)) => match k {
                0 => geom::dist_neg(&a, &b),
                1 => d(&a, &b).min(d(&b, &self.north)),
                _ => d(&a, &self.c).min(d(&b, &self.c)),
            },
            (Lobe::X(a), Lobe::Y(b)) => match k {
                0 => geom::dist_neg(&a, &self.x0).min(geom::dist_neg(&b, &self.c)),
                1 => d(&a, &self.px).min(d(&b, &self.c)).min(d(&b, &self.north)),
                _ => d(&a, &self.x0).min(d(&b, &self.q)),
            },
            (Lobe::Y(b), Lobe::X(a)) => match k {
                0 => geom::dist_neg(&b, &self.c).min(geom::dist_neg(&a, &self.x0)),
                1 => d(&b, &self.c).min(d(&a, &self.px)),
                _ => d(&b, &self.q).min(d(&a, &self.x0)),
            },
        }
    }

    fn section(&self, k: usize, p: &[f64], r: &[f64]) -> PathFn {
        match (self.lobe(p), self.lobe(r)) {
            (Lobe::X(a), Lobe::X(b)) => self.on_x(match k {
                0 => geodesic(&a, &b),
                1 => PathFn::Constant(a.clone()),
                _ => circle_turn(&a, &b),
            }),
            (Lobe::Y(a), Lobe::Y(b)) => self.on_y(match k {
                0 => geodesic(&a, &b),
                1 => sphere_turn(self.m, &a, &b),
                _ => chart_line(&self.c, &a, &b),
            }),
            (Lobe::X(a), Lobe::Y(b)) => {
                let (to_base, from_base) = match k {
                    0 => (geodesic(&a, &self.x0), geodesic(&self.c, &b)),
                    1 => (self.arc_to_base(&a), sphere_turn(self.m, &self.c, &b)),
                    _ => (circle_turn(&a, &self.x0), chart_line(&self.q, &self.c, &b)),
                };
                PathFn::concat(vec![self.on_x(to_base), self.on_y(from_base)])
            }
            (Lobe::Y(b), Lobe::X(a)) => {
                let (to_base, from_base) = match k {
                    0 => (geodesic(&b, &self.c), geodesic(&self.x0, &a)),
                    1 => (
                        sphere_turn(self.m, &b, &self.c),
                        self.arc_to_base(&a).reversed(),
                    ),
                    _ => (chart_line(&self.q, &b, &self.c), circle_turn(&self.x0, &a)),
                };
                PathFn::concat(vec![self.on_y(to_base), self.on_x(from_base)])
            }
        }
    }
}

const DOMAINS: [&str; 3] = [
    "X x X: a != -b; Y x Y: a != -b; X x Y: a != -x0, b != -C; Y x X: mirror",
    "X x X: empty; Y x Y: a != b, b != B0; X x Y: a != p, b not in {C, B0}; Y x X: b != C, a != p",
    "X x X: a != b; Y x Y: a, b != C; X x Y: a != x0, b != -B0; Y x X: mirror",
];

/// The reserved planner on `S^1 v S^m` (basepoints `e0` on both lobes).
pub fn wedge_planner(m: usize) -> Planner {
    assert!(m >= 1, "sphere dimension must be at least 1");
    let g = Arc::new(WedgeGeometry::new(m));
    let rules = (0..3)
        .map(|k| {
            let (gm, gs) = (g.clone(), g.clone());
            PlannerRule::new(
                k,
                DOMAINS[k],
                "wedge cover: slot k of the circle and sphere covers glued with the mixed products U_k x V_k; the X-side and Y-side families are 2-covers (every point in at least two sets)",
                Arc::new(move |a, b| gm.margin(k, a, b)),
                Arc::new(move |a, b| gs.section(k, a, b)),
            )
        })
        .collect();
    Planner {
        name: format!("wedge:{m}"),
        space: GeometricSpace::Wedge(vec![1, m]),
        rules,
        reserved: true,
    }
}
