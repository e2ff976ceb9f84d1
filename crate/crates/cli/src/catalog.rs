use lscat::exact_linalg::Field;
use lscat::invariants::{cup_length, zcl};
use lscat::space_expr::{cohomology, parse};
use serde_json::json;

use crate::plan::{planner_for, SpaceName};
use crate::{UsageError, SCHEMA_VERSION};

const RINGS: [&str; 7] = ["pt", "S1", "S2", "S3", "RP3", "T2", "T3"];

const PLANNERS: [SpaceName; 7] = [
    SpaceName::Circle,
    SpaceName::Sphere(2),
    SpaceName::Sphere(3),
    SpaceName::OddSphere(3),
    SpaceName::Wedge(1),
    SpaceName::Wedge(2),
    SpaceName::CylinderConfig(1),
];

fn space_label(s: SpaceName) -> String {
    match s {
        SpaceName::Circle => "circle".into(),
        SpaceName::Sphere(m) => format!("sphere:{m}"),
        SpaceName::OddSphere(m) => format!("odd-sphere:{m}"),
        SpaceName::Wedge(m) => format!("wedge:{m}"),
        SpaceName::CylinderConfig(n) => format!("cylinder-config:{n}"),
    }
}

pub fn run(as_json: bool) -> Result<(), UsageError> {
    let mut rings = Vec::new();
    for name in RINGS {
        let expr = parse(name)?;
        let mut per_field = Vec::new();
        for f in [Field::Q, Field::Z2] {
            let a = cohomology(&expr, f)?;
            per_field.push(json!({
                "field": f.to_string(),
                "betti": a.betti(),
                "cup_length": cup_length(&a),
                "zcl": zcl(&a),
            }));
        }
        rings.push(json!({ "space": name, "rings": per_field }));
    }
    let mut planners = Vec::new();
    for s in PLANNERS {
        let p = planner_for(s)?;
        planners.push(json!({
            "name": space_label(s),
            "space": p.space.to_string(),
            "rules": p.rule_count(),
            "reserved": p.reserved,
            "description": p.describe(),
        }));
    }
    if as_json {
        let v = json!({
            "schema": "lscat.catalog",
            "schema_version": SCHEMA_VERSION,
            "rings": rings,
            "planners": planners,
        });
        say!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(());
    }
    say!("rings (betti / cup-length / zcl):");
    for r in &rings {
        let cells: Vec<String> = r["rings"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|f| {
                format!(
                    "{}: {} / {} / {}",
                    f["field"].as_str().unwrap_or("?"),
                    f["betti"],
                    f["cup_length"],
                    f["zcl"]
                )
            })
            .collect();
        say!(
            "  {:<5} {}",
            r["space"].as_str().unwrap_or("?"),
            cells.join("   ")
        );
    }
    say!("planners:");
    for p in &planners {
        say!(
            "  {:<18} {:<18} {} rules{}",
            p["name"].as_str().unwrap_or("?"),
            p["space"].as_str().unwrap_or("?"),
            p["rules"],
            if p["reserved"] == true {
                ", reserved"
            } else {
                ""
            }
        );
    }
    Ok(())
}
