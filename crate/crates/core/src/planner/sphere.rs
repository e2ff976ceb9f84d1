use std::sync::Arc;

use super::{geom, GeometricSpace, PathFn, Planner, PlannerRule};

/// A global chart making a space contractible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// `R^n` with its identity chart.
    Euclidean(usize),
    /// `S^m - {e_0}` through stereographic projection from `e_0`.
    Stereographic(usize),
}

/// Geodesic section of the "not antipodal" set.
pub(crate) fn geodesic(a: &[f64], b: &[f64]) -> PathFn {
    if a == b {
        PathFn::Constant(a.to_vec())
    } else {
        PathFn::Geodesic {
            from: a.to_vec(),
            to: b.to_vec(),
        }
    }
}

/// Geodesic `a -> -b`, then the half turn `-b -> b` along `tangent`.
pub(crate) fn half_turn_path(a: &[f64], b: &[f64], tangent: Vec<f64>) -> PathFn {
    PathFn::concat(vec![
        geodesic(a, &geom::neg(b)),
        PathFn::HalfTurn {
            base: b.to_vec(),
            tangent,
        },
    ])
}

pub(crate) fn sphere_north(m: usize) -> Vec<f64> {
    geom::basis(m + 1, m)
}

pub(crate) fn sphere_base(m: usize) -> Vec<f64> {
    geom::basis(m + 1, 0)
}

/// Section of the sphere's second rule, defined for `a != b`, `b != B0`.
pub(crate) fn sphere_turn(m: usize, a: &[f64], b: &[f64]) -> PathFn {
    let w = geom::stereo_frame(&sphere_north(m), &sphere_base(m), b);
    half_turn_path(a, b, w)
}

/// Chart line in the stereographic chart from `pole`.
pub(crate) fn chart_line(pole: &[f64], a: &[f64], b: &[f64]) -> PathFn {
    if a == b {
        return PathFn::Constant(a.to_vec());
    }
    PathFn::ChartLine {
        pole: pole.to_vec(),
        from: geom::stereo(pole, a),
        to: geom::stereo(pole, b),
    }
}

/// Tangent field `v(x1, x2) = (-x2, x1)` of the circle.
pub(crate) fn circle_field(b: &[f64]) -> Vec<f64> {
    odd_sphere_field(b)
}

pub(crate) fn circle_turn(a: &[f64], b: &[f64]) -> PathFn {
    half_turn_path(a, b, circle_field(b))
}

/// The reserved three-rule planner on `S^m`, with `B0 = e_m` (north pole)
/// and `C = e_0`:
///
/// 0. `A != -B`: minimal geodesic.
/// 1. `A != B`, `B != B0`: geodesic to `-B`, then a half turn along the
///    tangent field pulled back from the stereographic chart at `B0`.
/// 2. `A, B != C`: straight line in the stereographic chart at `C`.
pub fn sphere_planner(m: usize) -> Planner {
    assert!(m >= 1, "sphere dimension must be at least 1");
    let north = sphere_north(m);
    let c = sphere_base(m);
    let c2 = c.clone();
    let c3 = c.clone();
    let rules = vec![
        PlannerRule::new(
            0,
            "pairs (A, B) with A != -B",
            "sphere cover, set of non-antipodal pairs: minimal geodesic",
            Arc::new(geom::dist_neg),
            Arc::new(geodesic),
        ),
        PlannerRule::new(
            1,
            format!("pairs (A, B) with A != B and B != B0 = e{m}"),
            "sphere cover, set avoiding the diagonal and B = B0: geodesic to -B, then half turn along a pulled-back frame",
            Arc::new(move |a, b| geom::dist(a, b).min(geom::dist(b, &north))),
            Arc::new(move |a, b| sphere_turn(m, a, b)),
        ),
        PlannerRule::new(
            2,
            "pairs (A, B) with A != C and B != C, C = e0",
            "sphere cover, complement of C squared: straight line in the stereographic chart from C",
            Arc::new(move |a, b| geom::dist(a, &c2).min(geom::dist(b, &c2))),
            Arc::new(move |a, b| chart_line(&c3, a, b)),
        ),
    ];
    Planner {
        name: format!("sphere:{m}"),
        space: GeometricSpace::Sphere(m),
        rules,
        reserved: true,
    }
}

/// The reserved two-rule planner on `S^1`, using the nonvanishing field
/// `v(x1, x2) = (-x2, x1)` for antipodal pairs.
pub fn circle_planner() -> Planner {
    Planner {
        name: "circle".into(),
        ..odd_sphere_planner(1)
    }
}

/// Nonvanishing tangent field `v(x) = (-x1, x0, -x3, x2, ..)` on an odd sphere.
pub(crate) fn odd_sphere_field(b: &[f64]) -> Vec<f64> {
    b.chunks(2).flat_map(|p| [-p[1], p[0]]).collect()
}

/// The reserved two-rule planner on an odd sphere `S^m`: the three-rule
/// cover collapses because the half turn can follow a global field.
pub fn odd_sphere_planner(m: usize) -> Planner {
    assert!(m % 2 == 1, "odd_sphere_planner needs an odd dimension");
    let rules = vec![
        PlannerRule::new(
            0,
            "pairs (A, B) with A != -B",
            "odd sphere cover, set of non-antipodal pairs: minimal geodesic",
            Arc::new(geom::dist_neg),
            Arc::new(geodesic),
        ),
        PlannerRule::new(
            1,
            "pairs (A, B) with A != B",
            "odd sphere cover, off-diagonal set: geodesic to -B, then half turn along v(x) = (-x1, x0, -x3, x2, ..)",
            Arc::new(geom::dist),
            Arc::new(|a, b| half_turn_path(a, b, odd_sphere_field(b))),
        ),
    ];
    Planner {
        name: format!("odd-sphere:{m}"),
        space: GeometricSpace::Sphere(m),
        rules,
        reserved: true,
    }
}

/// Single-rule planner on a space with a global chart: straight lines in
/// the chart.
pub fn contractible_planner(chart: Chart) -> Planner {
    let (space, rule) = match chart {
        Chart::Euclidean(n) => (
            GeometricSpace::Euclidean(n),
            PlannerRule::new(
                0,
                "all pairs",
                "contractible space: straight line",
                Arc::new(|_, _| f64::INFINITY),
                Arc::new(|a, b| {
                    if a == b {
                        PathFn::Constant(a.to_vec())
                    } else {
                        PathFn::Line {
                            from: a.to_vec(),
                            to: b.to_vec(),
                        }
                    }
                }),
            ),
        ),
        Chart::Stereographic(m) => {
            let c = sphere_base(m);
            let c2 = c.clone();
            (
                GeometricSpace::PuncturedSphere(m),
                PlannerRule::new(
                    0,
                    "all pairs of points different from e0",
                    "contractible space: straight line in the stereographic chart from e0",
                    Arc::new(move |a, b| geom::dist(a, &c).min(geom::dist(b, &c))),
                    Arc::new(move |a, b| chart_line(&c2, a, b)),
                ),
            )
        }
    };
    Planner {
        name: format!("contractible:{space}"),
        space,
        rules: vec![rule],
        reserved: true,
    }
}
