//! Two bodies on the cylinder `S^1 x R^n`.
//!
//! The configuration space is carried by `(a, b) -> (a, b a^-1)` onto
//! `(S^1 x R^n) x (S^1 x R^n - {e})`. The first factor gets the product of
//! the circle and straight-line planners (2 rules), the punctured factor a
//! transfer of the wedge planner along a retraction onto an embedded
//! `S^1 v S^n` (3 rules), and the product has `2 + 3 - 1 = 4` rules.
//!
//! The retraction is written in the model `psi: S^1 x R^n -> R^(n+1)`,
//! `(theta, h) -> (e^h1 cos theta, e^h1 sin theta, h2..hn)`, which sends the
//! cylinder onto `R^(n+1)` minus the axis `x = y = 0` and the puncture `e`
//! to `p = (1, 0, .., 0)`. The embedded wedge is the circle of radius 1/2
//! about the axis in the plane `h' = 0`, and the sphere of radius 1/2 about
//! `p`; they touch at `T = (1/2, 0, .., 0)`. The half-space `x <= 1/2`
//! retracts onto the circle and `x >= 1/2` onto the sphere; both send the
//! plane `x = 1/2` to `T`, so the two halves glue continuously. The
//! homotopy is the straight segment in the model, which stays in the same
//! half-space and misses both the axis and `p`.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

use super::space::base_dist;
use super::sphere::{circle_planner, contractible_planner, Chart};
use super::{
    geom, product_planner, pullback, retract_transfer, wedge_planner, GeometricSpace, PathFn,
    PlanError, Planner, PointMap, Retraction,
};

fn psi(z: &[f64]) -> Vec<f64> {
    let r = z[2].exp();
    let mut out = vec![r * z[0], r * z[1]];
    out.extend_from_slice(&z[3..]);
    out
}

fn psi_inv(x: &[f64]) -> Vec<f64> {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    let mut out = vec![x[0] / r, x[1] / r, r.ln()];
    out.extend_from_slice(&x[2..]);
    out
}

/// Fraction of the way from the plane `x = 1/2` (0) to the "free" region
/// (1) along a ray that leaves the radius-1/2 sphere at `rho = 1/2` and
/// meets the plane at `rho_plane`.
fn squeeze(rho: f64, rho_plane: f64) -> f64 {
    if rho <= 0.5 || !rho_plane.is_finite() {
        return 1.0;
    }
    let span = rho_plane - 0.5;
    if span <= 0.0 {
        return 0.0;
    }
    ((rho_plane - rho) / span).clamp(0.0, 1.0)
}

/// Retraction in the model; returns the wedge point in wedge coordinates
/// `(a, b)` with `a in S^1`, `b in S^n`.
fn retract_model(n: usize, x: &[f64]) -> Vec<f64> {
    let mut out;
    if x[0] <= 0.5 {
        let (u, v) = (x[0], x[1]);
        let rho = (u * u + v * v).sqrt();
        let alpha = v.atan2(u);
        let beta = if u > 0.0 && alpha.abs() < FRAC_PI_2 {
            alpha * squeeze(rho, rho / (2.0 * u))
        } else {
            alpha
        };
        out = vec![beta.cos(), beta.sin()];
        out.extend(geom::basis(n + 1, 0));
    } else {
        let mut v = x.to_vec();
        v[0] -= 1.0;
        let rho = geom::norm(&v);
        let u = geom::scale(&v, 1.0 / rho);
        let towards_t = geom::neg(&geom::basis(n + 1, 0));
        let u2 = if u[0] < 0.0 {
            let lam = squeeze(rho, 0.5 / -u[0]);
            geom::slerp(&towards_t, &u, lam)
        } else {
            u
        };
        out = vec![1.0, 0.0];
        out.extend(geom::neg(&u2));
    }
    out
}

/// Model point of a wedge point.
fn include_model(n: usize, w: &[f64]) -> Vec<f64> {
    let (a, b) = w.split_at(2);
    let mut x = vec![0.0; n + 1];
    if base_dist(b) <= base_dist(a) {
        x[0] = a[0] / 2.0;
        x[1] = a[1] / 2.0;
    } else {
        for (i, bi) in b.iter().enumerate() {
            x[i] = -bi / 2.0;
        }
        x[0] += 1.0;
    }
    x
}

/// The retraction of `S^1 x R^n - {e}` onto the embedded `S^1 v S^n`.
pub fn punctured_cylinder_retraction(n: usize) -> Retraction {
    let retract: PointMap = Arc::new(move |z: &[f64]| retract_model(n, &psi(z)));
    let include: PointMap = Arc::new(move |w: &[f64]| psi_inv(&include_model(n, w)));
    let track = Arc::new(move |z: &[f64]| {
        let from = psi(z);
        let to = include_model(n, &retract_model(n, &from));
        if from == to {
            PathFn::Constant(z.to_vec())
        } else {
            PathFn::Line { from, to }.mapped(Arc::new(|x: &[f64]| psi_inv(x)))
        }
    });
    let mut probes = Vec::new();
    for i in 0..24 {
        let th = i as f64 * std::f64::consts::TAU / 24.0 + 0.05;
        for j in -6..=6 {
            let h = j as f64 * 0.5;
            let mut z = vec![th.cos(), th.sin(), h];
            z.extend(std::iter::repeat_n(0.3 * h, n - 1));
            probes.push(z);
        }
    }
    Retraction {
        ambient: GeometricSpace::PuncturedCylinder(n),
        retract,
        include,
        track,
        probes,
    }
}

/// Group law on `S^1 x R^n` in `(cos, sin, h)` coordinates.
fn mul(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut out = vec![x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]];
    out.extend(x[2..].iter().zip(&y[2..]).map(|(s, t)| s + t));
    out
}

fn inv(x: &[f64]) -> Vec<f64> {
    let mut out = vec![x[0], -x[1]];
    out.extend(x[2..].iter().map(|h| -h));
    out
}

/// The four-rule collision-free planner for two bodies on `S^1 x R^n`.
pub fn config_cylinder_planner(n: usize) -> Result<Planner, PlanError> {
    if !(1..=2).contains(&n) {
        return Err(PlanError::Unsupported(format!(
            "cylinder-config supports n = 1 or 2, got {n}"
        )));
    }
    let base = product_planner(
        &circle_planner(),
        &contractible_planner(Chart::Euclidean(n)),
    );
    let punctured = retract_transfer(&wedge_planner(n), punctured_cylinder_retraction(n))?;
    let both = product_planner(&base, &punctured);
    let k = n + 2;
    let forward: PointMap = Arc::new(move |p: &[f64]| {
        let (a, b) = p.split_at(k);
        let mut out = a.to_vec();
        out.extend(mul(b, &inv(a)));
        out
    });
    let backward: PointMap = Arc::new(move |p: &[f64]| {
        let (a, z) = p.split_at(k);
        let mut out = a.to_vec();
        out.extend(mul(z, a));
        out
    });
    let mut planner = pullback(
        &both,
        format!("cylinder-config:{n}"),
        GeometricSpace::ConfigCylinder(n),
        forward,
        backward,
    );
    planner.reserved = false;
    Ok(planner)
}
