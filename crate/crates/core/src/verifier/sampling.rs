use std::f64::consts::PI;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::planner::geom::{basis, dist, neg, normalize};
use crate::planner::GeometricSpace;

/// Heights of unbounded factors are drawn from `[-HEIGHT_BOX, HEIGHT_BOX]`.
pub const HEIGHT_BOX: f64 = 3.0;

fn gaussian_unit<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        if v.iter().map(|x| x * x).sum::<f64>() > 1e-12 {
            return normalize(&v);
        }
    }
}

/// Volume of the unit `m`-sphere.
pub(crate) fn sphere_volume(m: usize) -> f64 {
    match m {
        0 => 2.0,
        1 => 2.0 * PI,
        _ => 2.0 * PI / (m as f64 - 1.0) * sphere_volume(m - 2),
    }
}

fn cylinder_point<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let th = rng.gen_range(0.0..2.0 * PI);
    let mut p = vec![th.cos(), th.sin()];
    p.extend((0..n).map(|_| rng.gen_range(-HEIGHT_BOX..=HEIGHT_BOX)));
    p
}

/// A random point of `space`: normalized Gaussians on spheres, uniform
/// heights on the stated box, wedge lobes proportional to volume, and
/// rejection for punctures and collisions.
pub fn sample_point<R: Rng + ?Sized>(space: &GeometricSpace, rng: &mut R) -> Vec<f64> {
    match space {
        GeometricSpace::Sphere(m) => gaussian_unit(m + 1, rng),
        GeometricSpace::PuncturedSphere(m) => loop {
            let p = gaussian_unit(m + 1, rng);
            if dist(&p, &basis(m + 1, 0)) > 1e-9 {
                return p;
            }
        },
        GeometricSpace::Euclidean(n) => (0..*n)
            .map(|_| rng.gen_range(-HEIGHT_BOX..=HEIGHT_BOX))
            .collect(),
        GeometricSpace::Product(fs) => fs.iter().flat_map(|f| sample_point(f, rng)).collect(),
        GeometricSpace::Wedge(ms) => {
            let vols: Vec<f64> = ms.iter().map(|m| sphere_volume(*m)).collect();
            let mut pick = rng.gen_range(0.0..vols.iter().sum::<f64>());
            let mut lobe = ms.len() - 1;
            for (i, v) in vols.iter().enumerate() {
                if pick < *v {
                    lobe = i;
                    break;
                }
                pick -= v;
            }
            ms.iter()
                .enumerate()
                .flat_map(|(i, m)| {
                    if i == lobe {
                        gaussian_unit(m + 1, rng)
                    } else {
                        basis(m + 1, 0)
                    }
                })
                .collect()
        }
        GeometricSpace::PuncturedCylinder(n) => loop {
            let p = cylinder_point(*n, rng);
            if space.collision_margin(&p).unwrap_or(1.0) > 1e-9 {
                return p;
            }
        },
        GeometricSpace::ConfigCylinder(n) => loop {
            let mut p = cylinder_point(*n, rng);
            p.extend(cylinder_point(*n, rng));
            if space.collision_margin(&p).unwrap_or(1.0) > 1e-9 {
                return p;
            }
        },
    }
}

/// Two independent points of `space`.
pub fn sample_pair<R: Rng + ?Sized>(space: &GeometricSpace, rng: &mut R) -> (Vec<f64>, Vec<f64>) {
    let a = sample_point(space, rng);
    let b = sample_point(space, rng);
    (a, b)
}

/// Move `p` by roughly `eps` while staying in `space` (same wedge lobe,
/// same side of the puncture). Returns `None` if the move would leave the
/// space, e.g. make two bodies collide.
pub fn perturb<R: Rng + ?Sized>(
    space: &GeometricSpace,
    p: &[f64],
    eps: f64,
    rng: &mut R,
) -> Option<Vec<f64>> {
    let jitter = |v: &[f64], rng: &mut R| -> Vec<f64> {
        v.iter()
            .map(|x| x + eps * rng.sample::<f64, _>(StandardNormal))
            .collect()
    };
    let out = match space {
        GeometricSpace::Sphere(_) | GeometricSpace::PuncturedSphere(_) => {
            normalize(&jitter(p, rng))
        }
        GeometricSpace::Euclidean(_) => jitter(p, rng),
        GeometricSpace::Product(fs) => {
            let mut out = Vec::with_capacity(p.len());
            for (f, r) in fs.iter().zip(space.blocks()) {
                out.extend(perturb(f, &p[r], eps, rng)?);
            }
            out
        }
        GeometricSpace::Wedge(_) => {
            let blocks = space.blocks();
            // the lobe whose block is farthest from its basepoint
            let active = blocks
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    (
                        i,
                        crate::planner::geom::dist(&p[r.clone()], &basis(r.len(), 0)),
                    )
                })
                .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc })
                .0;
            let mut out = p.to_vec();
            let r = blocks[active].clone();
            let moved = normalize(&jitter(&p[r.clone()], rng));
            out[r].copy_from_slice(&moved);
            out
        }
        GeometricSpace::PuncturedCylinder(_) | GeometricSpace::ConfigCylinder(_) => {
            let k = match space {
                GeometricSpace::PuncturedCylinder(n) => n + 2,
                GeometricSpace::ConfigCylinder(n) => n + 2,
                _ => unreachable!(),
            };
            let mut out = Vec::with_capacity(p.len());
            for body in p.chunks(k) {
                let th = body[1].atan2(body[0]) + eps * rng.sample::<f64, _>(StandardNormal);
                out.push(th.cos());
                out.push(th.sin());
                out.extend(jitter(&body[2..], rng));
            }
            out
        }
    };
    match space.collision_margin(&out) {
        Some(m) if m <= 1e-12 => None,
        _ => Some(out),
    }
}

fn product_points(space: &GeometricSpace) -> Vec<Vec<f64>> {
    match space {
        GeometricSpace::Sphere(m) => {
            let mut pts = Vec::new();
            for i in 0..=*m {
                pts.push(basis(m + 1, i));
                pts.push(neg(&basis(m + 1, i)));
            }
            pts
        }
        GeometricSpace::PuncturedSphere(m) => {
            let mut pts = vec![neg(&basis(m + 1, 0))];
            for i in 1..=*m {
                pts.push(basis(m + 1, i));
            }
            pts
        }
        GeometricSpace::Euclidean(n) => vec![vec![0.0; *n], vec![1.0; *n]],
        GeometricSpace::Product(fs) => {
            let mut pts: Vec<Vec<f64>> = vec![vec![]];
            for f in fs {
                let fp = product_points(f);
                pts = pts
                    .iter()
                    .flat_map(|p| {
                        fp.iter()
                            .take(4)
                            .map(move |q| [p.clone(), q.clone()].concat())
                    })
                    .collect();
            }
            pts
        }
        GeometricSpace::Wedge(ms) => {
            let mut pts = Vec::new();
            for (lobe, m) in ms.iter().enumerate() {
                for special in product_points(&GeometricSpace::Sphere(*m)) {
                    let p: Vec<f64> = ms
                        .iter()
                        .enumerate()
                        .flat_map(|(i, mi)| {
                            if i == lobe {
                                special.clone()
                            } else {
                                basis(mi + 1, 0)
                            }
                        })
                        .collect();
                    pts.push(p);
                }
            }
            pts
        }
        GeometricSpace::PuncturedCylinder(n) => {
            let near = 1e-6_f64;
            let mut pts = vec![
                [vec![near.cos(), near.sin()], vec![0.0; *n]].concat(),
                [vec![-1.0, 0.0], vec![0.0; *n]].concat(),
                [vec![1.0, 0.0], vec![near; *n]].concat(),
            ];
            // the embedded wedge's junction and a point straddling the cut
            pts.push([vec![1.0, 0.0], vec![-(2.0f64).ln()], vec![0.0; n - 1]].concat());
            pts.push([vec![0.0, 1.0], vec![0.0; *n]].concat());
            pts
        }
        GeometricSpace::ConfigCylinder(_) => Vec::new(),
    }
}

/// Hand-picked pairs on the strata where the covers switch: antipodal and
/// coordinate poles, basepoint pairs, near-puncture and near-collision
/// configurations, and diagonal points.
pub fn adversarial_pairs(space: &GeometricSpace) -> Vec<(Vec<f64>, Vec<f64>)> {
    if let GeometricSpace::ConfigCylinder(n) = space {
        let body = |deg: f64, h: f64| -> Vec<f64> {
            let r = deg.to_radians();
            let mut v = vec![r.cos(), r.sin(), h];
            v.extend(std::iter::repeat_n(0.0, n - 1));
            v
        };
        let eps = 1e-6;
        let swap_a = [body(0.0, -1.0), body(180.0, 1.0)].concat();
        let swap_b = [body(180.0, 1.0), body(0.0, -1.0)].concat();
        let close = [body(0.0, 0.0), body(0.0, eps)].concat();
        let close_turned = [body(0.0, 0.0), body(eps.to_degrees(), 0.0)].concat();
        let antipodal = [body(90.0, 0.0), body(270.0, 0.0)].concat();
        let stacked = [body(45.0, -2.0), body(45.0, 2.0)].concat();
        let configs = [
            swap_a.clone(),
            swap_b.clone(),
            close,
            close_turned,
            antipodal,
            stacked,
        ];
        let mut pairs = vec![(swap_a, swap_b)];
        for a in &configs {
            for b in &configs {
                pairs.push((a.clone(), b.clone()));
            }
        }
        return pairs;
    }
    let pts = product_points(space);
    let mut pairs = Vec::new();
    for a in &pts {
        for b in &pts {
            pairs.push((a.clone(), b.clone()));
        }
    }
    pairs
}
