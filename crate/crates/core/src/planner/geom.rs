//! Small dense-vector helpers shared by the planners. Points are plain
//! `Vec<f64>` in the ambient coordinates of their space.

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// `|a + b|`, the chord distance from `a` to `-b`.
pub(crate) fn dist_neg(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x + y) * (x + y))
        .sum::<f64>()
        .sqrt()
}

pub(crate) fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub(crate) fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

pub(crate) fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

/// `a * s + b * u`
pub(crate) fn combine(a: &[f64], s: f64, b: &[f64], u: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| s * x + u * y).collect()
}

pub(crate) fn normalize(a: &[f64]) -> Vec<f64> {
    let n = norm(a);
    scale(a, 1.0 / n)
}

pub(crate) fn basis(dim: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; dim];
    v[i] = 1.0;
    v
}

/// Angle between two unit vectors, computed with `atan2` so it stays
/// accurate near 0 and near pi.
pub(crate) fn angle(a: &[f64], b: &[f64]) -> f64 {
    let d = dist(a, b);
    let s = dist_neg(a, b);
    2.0 * d.atan2(s)
}

/// Point at fraction `t` along the minimal great-circle arc from `a` to `b`.
/// Requires `a != -b`.
pub(crate) fn slerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    let theta = angle(a, b);
    if theta < 1e-9 {
        return normalize(&lerp(a, b, t));
    }
    let s = theta.sin();
    combine(a, ((1.0 - t) * theta).sin() / s, b, (t * theta).sin() / s)
}

/// Stereographic projection from the unit pole `pole`, landing in the
/// hyperplane orthogonal to `pole` (kept in ambient coordinates).
pub(crate) fn stereo(pole: &[f64], x: &[f64]) -> Vec<f64> {
    let c = dot(x, pole);
    let denom = 1.0 - c;
    x.iter()
        .zip(pole)
        .map(|(xi, pi)| (xi - c * pi) / denom)
        .collect()
}

/// Inverse of [`stereo`].
pub(crate) fn stereo_inv(pole: &[f64], u: &[f64]) -> Vec<f64> {
    let r2 = dot(u, u);
    let d = r2 + 1.0;
    u.iter()
        .zip(pole)
        .map(|(ui, pi)| (2.0 * ui + (r2 - 1.0) * pi) / d)
        .collect()
}

/// Unit tangent at `b` obtained by pushing the constant chart vector
/// `dir` (orthogonal to `pole`) through the inverse stereographic projection
/// from `pole`. Defined and nonvanishing for `b != pole`.
pub(crate) fn stereo_frame(pole: &[f64], dir: &[f64], b: &[f64]) -> Vec<f64> {
    let u = stereo(pole, b);
    let r2 = dot(&u, &u);
    let d = r2 + 1.0;
    let uv = dot(&u, dir);
    // derivative of (2u + (|u|^2 - 1) pole) / (|u|^2 + 1) along dir
    let w: Vec<f64> = (0..b.len())
        .map(|i| {
            let num = 2.0 * dir[i] + 2.0 * uv * pole[i];
            let f = 2.0 * u[i] + (r2 - 1.0) * pole[i];
            num / d - f * 2.0 * uv / (d * d)
        })
        .collect();
    // remove any rounding drift out of the tangent space before normalizing
    let c = dot(&w, b);
    normalize(&combine(&w, 1.0, b, -c))
}
