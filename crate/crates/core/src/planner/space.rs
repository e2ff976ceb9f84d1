use std::fmt;
use std::ops::Range;

use super::{geom, PlanError, MEMBERSHIP_TOL};

/// Spaces the planners live on, all embedded in some `R^d`.
///
/// Coordinates:
/// - `Sphere(m)`: unit vectors in `R^(m+1)`.
/// - `PuncturedSphere(m)`: `S^m` minus `e_0`, the chart domain of the
///   stereographic projection from `e_0`.
/// - `Euclidean(n)`: `R^n`.
/// - `Product(fs)`: concatenated factor coordinates.
/// - `Wedge(ms)`: concatenated sphere coordinates; a point lies on lobe `i`
///   when every other block sits at its basepoint `e_0`. All lobes share
///   the basepoint `(e_0, ..., e_0)`.
/// - `PuncturedCylinder(n)`: `(cos, sin, h_1..h_n)` on `S^1 x R^n` minus
///   the group identity `(1, 0, 0..)`.
/// - `ConfigCylinder(n)`: two cylinder points, required distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometricSpace {
    Sphere(usize),
    PuncturedSphere(usize),
    Euclidean(usize),
    Product(Vec<GeometricSpace>),
    Wedge(Vec<usize>),
    PuncturedCylinder(usize),
    ConfigCylinder(usize),
}

impl fmt::Display for GeometricSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometricSpace::Sphere(m) => write!(f, "S{m}"),
            GeometricSpace::PuncturedSphere(m) => write!(f, "S{m} - {{e0}}"),
            GeometricSpace::Euclidean(n) => write!(f, "R^{n}"),
            GeometricSpace::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", parts.join(" x "))
            }
            GeometricSpace::Wedge(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| format!("S{m}")).collect();
                write!(f, "wedge({})", parts.join(", "))
            }
            GeometricSpace::PuncturedCylinder(n) => write!(f, "S1 x R^{n} - {{e}}"),
            GeometricSpace::ConfigCylinder(n) => write!(f, "F(S1 x R^{n}, 2)"),
        }
    }
}

impl GeometricSpace {
    pub fn cylinder(n: usize) -> GeometricSpace {
        GeometricSpace::Product(vec![
            GeometricSpace::Sphere(1),
            GeometricSpace::Euclidean(n),
        ])
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            GeometricSpace::Sphere(m) | GeometricSpace::PuncturedSphere(m) => m + 1,
            GeometricSpace::Euclidean(n) => *n,
            GeometricSpace::Product(fs) => fs.iter().map(|s| s.ambient_dim()).sum(),
            GeometricSpace::Wedge(ms) => ms.iter().map(|m| m + 1).sum(),
            GeometricSpace::PuncturedCylinder(n) => n + 2,
            GeometricSpace::ConfigCylinder(n) => 2 * (n + 2),
        }
    }

    /// Coordinate ranges of the factors of a product, or of the lobes of a
    /// wedge, or of the two bodies of a configuration.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let dims: Vec<usize> = match self {
            GeometricSpace::Product(fs) => fs.iter().map(|s| s.ambient_dim()).collect(),
            GeometricSpace::Wedge(ms) => ms.iter().map(|m| m + 1).collect(),
            GeometricSpace::ConfigCylinder(n) => vec![n + 2, n + 2],
            other => vec![other.ambient_dim()],
        };
        let mut out = Vec::with_capacity(dims.len());
        let mut start = 0;
        for d in dims {
            out.push(start..start + d);
            start += d;
        }
        out
    }

    /// Distance from `p` to the space, measured through the defining
    /// constraints (unit norms, wedge incidence). Distinctness and punctures
    /// are reported by [`GeometricSpace::collision_margin`] and
    /// [`GeometricSpace::check`] instead.
    pub fn membership_error(&self, p: &[f64]) -> f64 {
        if p.len() != self.ambient_dim() || p.iter().any(|x| !x.is_finite()) {
            return f64::INFINITY;
        }
        match self {
            GeometricSpace::Sphere(_) | GeometricSpace::PuncturedSphere(_) => {
                (geom::norm(p) - 1.0).abs()
            }
            GeometricSpace::Euclidean(_) => 0.0,
            GeometricSpace::Product(fs) => fs
                .iter()
                .zip(self.blocks())
                .map(|(s, r)| s.membership_error(&p[r]))
                .fold(0.0, f64::max),
            GeometricSpace::Wedge(_) => {
                let blocks = self.blocks();
                let norms = blocks
                    .iter()
                    .map(|r| (geom::norm(&p[r.clone()]) - 1.0).abs())
                    .fold(0.0, f64::max);
                let incidence = (0..blocks.len())
                    .map(|i| {
                        blocks
                            .iter()
                            .enumerate()
                            .filter(|(j, _)| *j != i)
                            .map(|(_, r)| base_dist(&p[r.clone()]))
                            .fold(0.0, f64::max)
                    })
                    .fold(f64::INFINITY, f64::min);
                norms.max(incidence)
            }
            GeometricSpace::PuncturedCylinder(_) => (geom::norm(&p[0..2]) - 1.0).abs(),
            GeometricSpace::ConfigCylinder(n) => {
                let k = n + 2;
                (geom::norm(&p[0..2]) - 1.0)
                    .abs()
                    .max((geom::norm(&p[k..k + 2]) - 1.0).abs())
            }
        }
    }

    /// Distance between the two bodies of a configuration; for a punctured
    /// cylinder, the distance to the puncture. `None` for other spaces.
    pub fn collision_margin(&self, p: &[f64]) -> Option<f64> {
        match self {
            GeometricSpace::ConfigCylinder(n) => {
                let k = n + 2;
                Some(geom::dist(&p[0..k], &p[k..2 * k]))
            }
            GeometricSpace::PuncturedCylinder(n) => {
                let mut e = vec![0.0; n + 2];
                e[0] = 1.0;
                Some(geom::dist(p, &e))
            }
            _ => None,
        }
    }

    /// Validate a query point.
    pub fn check(&self, p: &[f64]) -> Result<(), PlanError> {
        let error = self.membership_error(p);
        if error > MEMBERSHIP_TOL {
            return Err(PlanError::Membership {
                space: self.to_string(),
                point: p.to_vec(),
                error,
            });
        }
        if let GeometricSpace::PuncturedSphere(m) = self {
            if geom::dist(p, &geom::basis(m + 1, 0)) == 0.0 {
                return Err(PlanError::Membership {
                    space: self.to_string(),
                    point: p.to_vec(),
                    error: f64::INFINITY,
                });
            }
        }
        match self.collision_margin(p) {
            Some(m) if m <= 0.0 => Err(PlanError::Collision { point: p.to_vec() }),
            _ => Ok(()),
        }
    }
}

/// Distance of a unit vector from the basepoint `e_0`.
pub(crate) fn base_dist(v: &[f64]) -> f64 {
    let mut s = (v[0] - 1.0) * (v[0] - 1.0);
    for x in &v[1..] {
        s += x * x;
    }
    s.sqrt()
}
