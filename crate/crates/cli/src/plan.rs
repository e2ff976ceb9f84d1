use lscat::planner::{
    circle_planner, config_cylinder_planner, export_path, odd_sphere_planner, sphere_planner,
    wedge_planner, Planner,
};
use lscat::verifier::{verify as run_verify, VerificationConfig};
use serde_json::json;

use crate::{UsageError, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceName {
    Circle,
    Sphere(usize),
    OddSphere(usize),
    Wedge(usize),
    CylinderConfig(usize),
}

const SPACES: &str = "circle | sphere:<m> | odd-sphere:<m> | wedge:<m> | cylinder-config:<n>";

pub fn parse_space(name: &str) -> Result<SpaceName, UsageError> {
    let bad = || UsageError(format!("unknown space '{name}'; expected {SPACES}"));
    let name = name.trim().to_ascii_lowercase();
    if name == "circle" {
        return Ok(SpaceName::Circle);
    }
    let (kind, arg) = name.split_once(':').ok_or_else(bad)?;
    let k: usize = arg.trim().parse().map_err(|_| bad())?;
    match kind.trim() {
        "sphere" if k >= 1 => Ok(SpaceName::Sphere(k)),
        "odd-sphere" if k % 2 == 1 => Ok(SpaceName::OddSphere(k)),
        "wedge" if k >= 1 => Ok(SpaceName::Wedge(k)),
        "cylinder-config" if (1..=2).contains(&k) => Ok(SpaceName::CylinderConfig(k)),
        _ => Err(bad()),
    }
}

pub fn planner_for(space: SpaceName) -> Result<Planner, UsageError> {
    Ok(match space {
        SpaceName::Circle => circle_planner(),
        SpaceName::Sphere(m) => sphere_planner(m),
        SpaceName::OddSphere(m) => odd_sphere_planner(m),
        SpaceName::Wedge(m) => wedge_planner(m),
        SpaceName::CylinderConfig(n) => config_cylinder_planner(n)?,
    })
}

fn numbers(text: &str) -> Result<Vec<f64>, UsageError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .trim_end_matches('°')
                .trim_end_matches("deg")
                .trim()
        })
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| UsageError(format!("cannot read number '{s}'")))
        })
        .collect()
}

fn angle_point(deg: f64) -> Vec<f64> {
    let r = deg.to_radians();
    vec![r.cos(), r.sin()]
}

fn expect_len(v: Vec<f64>, len: usize, what: &str) -> Result<Vec<f64>, UsageError> {
    if v.len() == len {
        Ok(v)
    } else {
        Err(UsageError(format!(
            "{what}: expected {len} coordinates, got {}",
            v.len()
        )))
    }
}

/// Reads a point in the coordinates of the named space.
///
/// - circle: an angle in degrees, or `x,y`
/// - sphere:m, odd-sphere:m: `x0,..,xm`
/// - wedge:m: `x:<degrees>` (circle lobe), `y:<y0,..,ym>` (sphere lobe),
///   `base`, or all `m + 3` coordinates
/// - cylinder-config:n: two bodies `(deg,h..),(deg,h..)` or `deg,h..;deg,h..`
pub fn parse_point(space: SpaceName, text: &str) -> Result<Vec<f64>, UsageError> {
    let text = text.trim();
    match space {
        SpaceName::Circle => {
            let v = numbers(text)?;
            match v.len() {
                1 => Ok(angle_point(v[0])),
                _ => expect_len(v, 2, "circle point"),
            }
        }
        SpaceName::Sphere(m) | SpaceName::OddSphere(m) => {
            expect_len(numbers(text)?, m + 1, "sphere point")
        }
        SpaceName::Wedge(m) => {
            let mut base_y = vec![0.0; m + 1];
            base_y[0] = 1.0;
            if text.eq_ignore_ascii_case("base") {
                return Ok([vec![1.0, 0.0], base_y].concat());
            }
            if let Some(rest) = text.strip_prefix("x:") {
                let v = numbers(rest)?;
                let a = match v.len() {
                    1 => angle_point(v[0]),
                    _ => expect_len(v, 2, "circle lobe point")?,
                };
                return Ok([a, base_y].concat());
            }
            if let Some(rest) = text.strip_prefix("y:") {
                let b = expect_len(numbers(rest)?, m + 1, "sphere lobe point")?;
                return Ok([vec![1.0, 0.0], b].concat());
            }
            expect_len(numbers(text)?, m + 3, "wedge point")
        }
        SpaceName::CylinderConfig(n) => {
            let cleaned: String = text
                .chars()
                .filter(|c| *c != '(' && !c.is_whitespace())
                .collect();
            let bodies: Vec<&str> = cleaned
                .split([')', ';'])
                .map(|s| s.trim_matches(','))
                .filter(|s| !s.is_empty())
                .collect();
            if bodies.len() != 2 {
                return Err(UsageError(format!(
                    "configuration needs two bodies, got {}",
                    bodies.len()
                )));
            }
            let mut out = Vec::new();
            for body in bodies {
                let v = expect_len(numbers(body)?, n + 1, "body (degrees, heights)")?;
                out.extend(angle_point(v[0]));
                out.extend_from_slice(&v[1..]);
            }
            Ok(out)
        }
    }
}

pub fn plan(space: &str, a: &str, b: &str, resolution: usize) -> Result<(), UsageError> {
    let name = parse_space(space)?;
    let planner = planner_for(name)?;
    let a = parse_point(name, a)?;
    let b = parse_point(name, b)?;
    let plan = planner.plan(&a, &b)?;
    let samples = export_path(&plan.path, resolution);
    let min_gap = samples
        .iter()
        .filter_map(|s| planner.space.collision_margin(&s.point))
        .reduce(f64::min);
    let v = json!({
        "schema": "lscat.path",
        "schema_version": SCHEMA_VERSION,
        "planner": planner.name,
        "space": planner.space.to_string(),
        "rule": plan.rule,
        "rule_domain": planner.rules[plan.rule].domain,
        "margin": plan.margin,
        "min_collision_margin": min_gap,
        "samples": samples,
    });
    say!("{}", serde_json::to_string_pretty(&v)?);
    Ok(())
}

pub fn verify(
    space: &str,
    samples: usize,
    seed: u64,
    time_steps: usize,
) -> Result<bool, UsageError> {
    let planner = planner_for(parse_space(space)?)?;
    if time_steps == 0 {
        return Err(UsageError("--time-steps must be positive".into()));
    }
    let config = VerificationConfig {
        time_steps,
        ..VerificationConfig::new(samples, seed)
    };
    let report = run_verify(&planner, &config);
    let v = json!({
        "schema": "lscat.verification",
        "schema_version": SCHEMA_VERSION,
        "report": report,
    });
    say!("{}", serde_json::to_string_pretty(&v)?);
    Ok(report.passed)
}
