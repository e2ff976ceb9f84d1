use std::fmt;
use std::sync::Arc;

use super::geom;

/// A closed-form point map used to push a path between coordinate systems.
pub type PointMap = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// A path `[0, 1] -> space`, stored as a composition of closed-form pieces.
///
/// Every piece carries a weight (its length, or a length proxy in a chart)
/// and concatenations spend time proportionally to weight. Zero-weight
/// pieces are constant and consume no time, so prefixing or suffixing a
/// constant path leaves the parametrization untouched.
#[derive(Clone)]
pub enum PathFn {
    Constant(Vec<f64>),
    /// Straight segment in ambient coordinates.
    Line {
        from: Vec<f64>,
        to: Vec<f64>,
    },
    /// Minimal great-circle arc between unit vectors that are not antipodal.
    Geodesic {
        from: Vec<f64>,
        to: Vec<f64>,
    },
    /// `s -> -cos(pi s) base + sin(pi s) tangent`, from `-base` to `base`.
    HalfTurn {
        base: Vec<f64>,
        tangent: Vec<f64>,
    },
    /// Circle arc by angle, `theta -> (cos, sin)`.
    Arc {
        from: f64,
        to: f64,
    },
    /// Straight line between chart coordinates, pulled back through the
    /// inverse stereographic projection from `pole`.
    ChartLine {
        pole: Vec<f64>,
        from: Vec<f64>,
        to: Vec<f64>,
    },
    /// `inner` pushed through a closed-form map.
    Map {
        inner: Box<PathFn>,
        map: PointMap,
    },
    Concat(Vec<PathFn>),
    Reverse(Box<PathFn>),
    /// Componentwise path in a product; coordinates are concatenated.
    Product(Vec<PathFn>),
}

impl fmt::Debug for PathFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathFn::Constant(p) => write!(f, "Constant({p:?})"),
            PathFn::Line { from, to } => write!(f, "Line({from:?} -> {to:?})"),
            PathFn::Geodesic { from, to } => write!(f, "Geodesic({from:?} -> {to:?})"),
            PathFn::HalfTurn { base, tangent } => {
                write!(f, "HalfTurn(base {base:?}, tangent {tangent:?})")
            }
            PathFn::Arc { from, to } => write!(f, "Arc({from} -> {to})"),
            PathFn::ChartLine { pole, .. } => write!(f, "ChartLine(pole {pole:?})"),
            PathFn::Map { inner, .. } => write!(f, "Map({inner:?})"),
            PathFn::Concat(parts) => f.debug_tuple("Concat").field(parts).finish(),
            PathFn::Reverse(p) => write!(f, "Reverse({p:?})"),
            PathFn::Product(parts) => f.debug_tuple("Product").field(parts).finish(),
        }
    }
}

impl PathFn {
    pub fn concat(parts: Vec<PathFn>) -> PathFn {
        PathFn::Concat(parts)
    }

    pub fn reversed(self) -> PathFn {
        match self {
            PathFn::Reverse(inner) => *inner,
            other => PathFn::Reverse(Box::new(other)),
        }
    }

    pub fn mapped(self, map: PointMap) -> PathFn {
        PathFn::Map {
            inner: Box::new(self),
            map,
        }
    }

    /// Time-allocation weight; zero exactly for constant pieces.
    pub fn weight(&self) -> f64 {
        match self {
            PathFn::Constant(_) => 0.0,
            PathFn::Line { from, to } => geom::dist(from, to),
            PathFn::Geodesic { from, to } => geom::angle(from, to),
            PathFn::HalfTurn { .. } => std::f64::consts::PI,
            PathFn::Arc { from, to } => (to - from).abs(),
            PathFn::ChartLine { from, to, .. } => geom::dist(from, to),
            PathFn::Map { inner, .. } => inner.weight(),
            PathFn::Concat(parts) | PathFn::Product(parts) => {
                parts.iter().map(PathFn::weight).sum()
            }
            PathFn::Reverse(inner) => inner.weight(),
        }
    }

    pub fn start(&self) -> Vec<f64> {
        self.eval(0.0)
    }

    pub fn end(&self) -> Vec<f64> {
        self.eval(1.0)
    }

    /// Evaluate at `t`, clamped to `[0, 1]`.
    pub fn eval(&self, t: f64) -> Vec<f64> {
        let t = t.clamp(0.0, 1.0);
        match self {
            PathFn::Constant(p) => p.clone(),
            PathFn::Line { from, to } => {
                if t == 1.0 {
                    to.clone()
                } else {
                    geom::lerp(from, to, t)
                }
            }
            PathFn::Geodesic { from, to } => {
                if t == 0.0 {
                    from.clone()
                } else if t == 1.0 {
                    to.clone()
                } else {
                    geom::slerp(from, to, t)
                }
            }
            PathFn::HalfTurn { base, tangent } => {
                let a = std::f64::consts::PI * t;
                if t == 1.0 {
                    base.clone()
                } else {
                    geom::combine(base, -a.cos(), tangent, a.sin())
                }
            }
            PathFn::Arc { from, to } => {
                let th = from + t * (to - from);
                vec![th.cos(), th.sin()]
            }
            PathFn::ChartLine { pole, from, to } => {
                geom::stereo_inv(pole, &geom::lerp(from, to, t))
            }
            PathFn::Map { inner, map } => map(&inner.eval(t)),
            PathFn::Reverse(inner) => inner.eval(1.0 - t),
            PathFn::Product(parts) => parts.iter().flat_map(|p| p.eval(t)).collect(),
            PathFn::Concat(parts) => eval_concat(parts, t),
        }
    }

    /// `resolution + 1` evenly spaced samples `(t, point)`.
    pub fn sample(&self, resolution: usize) -> Vec<(f64, Vec<f64>)> {
        let k = resolution.max(1);
        (0..=k)
            .map(|i| {
                let t = i as f64 / k as f64;
                (t, self.eval(t))
            })
            .collect()
    }
}

fn eval_concat(parts: &[PathFn], t: f64) -> Vec<f64> {
    let weights: Vec<f64> = parts.iter().map(PathFn::weight).collect();
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return parts[0].eval(0.0);
    }
    let last = weights.iter().rposition(|w| *w > 0.0).unwrap_or(0);
    let mut start = 0.0;
    for (i, (part, w)) in parts.iter().zip(&weights).enumerate() {
        if *w <= 0.0 {
            continue;
        }
        let end = start + w / total;
        if i == last && t >= 1.0 {
            return part.eval(1.0);
        }
        if t <= end || i == last {
            return part.eval(((t - start) * total / w).clamp(0.0, 1.0));
        }
        start = end;
    }
    parts[last].eval(1.0)
}
