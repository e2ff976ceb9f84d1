use lscat::exact_linalg::Field;
use lscat::graded_algebra::{parse_presentation, GradedAlgebra};
use lscat::invariants::{cup_length, zcl};
use lscat::space_expr::{cohomology, normalize, parse};
use serde_json::json;

use crate::{UsageError, SCHEMA_VERSION};

/// A presentation if it parses as one, otherwise the cohomology of a space
/// expression.
fn build(text: &str, field: Field) -> Result<GradedAlgebra, UsageError> {
    match parse_presentation(text, field) {
        Ok(a) => Ok(a),
        Err(pe) => {
            let expr = parse(text).map_err(|se| {
                UsageError(format!("not a presentation ({pe}) nor a space ({se})"))
            })?;
            let normal = normalize(&expr)?.expr;
            Ok(cohomology(&normal, field)?)
        }
    }
}

fn products(a: &GradedAlgebra) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..a.dim() {
        for j in i..a.dim() {
            let p = a
                .multiply(&a.basis_element(i), &a.basis_element(j))
                .expect("same parent");
            if !p.is_zero() {
                out.push(format!(
                    "{} * {} = {}",
                    a.basis()[i].label,
                    a.basis()[j].label,
                    a.display(&p)
                ));
            }
        }
    }
    out
}

pub fn run(text: &str, fields: &[Field], as_json: bool) -> Result<(), UsageError> {
    let mut reports = Vec::new();
    let mut seen = Vec::new();
    for f in fields {
        let a = build(text, *f)?;
        // a presentation may pin its own field with `@K`
        if seen.contains(&a.field()) {
            continue;
        }
        seen.push(a.field());
        let basis: Vec<_> = a
            .basis()
            .iter()
            .map(|e| json!({ "label": e.label, "degree": e.degree }))
            .collect();
        reports.push(json!({
            "field": a.field().to_string(),
            "dimension": a.dim(),
            "betti": a.betti(),
            "basis": basis,
            "products": products(&a),
            "valid": a.validate().is_ok(),
            "cup_length": cup_length(&a),
            "zcl": zcl(&a),
        }));
    }
    if as_json {
        let v = json!({
            "schema": "lscat.ring",
            "schema_version": SCHEMA_VERSION,
            "input": text,
            "rings": reports,
        });
        say!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(());
    }
    for r in &reports {
        say!("over {}:", r["field"].as_str().unwrap_or("?"));
        say!("  dimension {}  betti {}", r["dimension"], r["betti"]);
        let labels: Vec<String> = r["basis"]
            .as_array()
            .map(|b| {
                b.iter()
                    .map(|e| format!("{}({})", e["label"].as_str().unwrap_or(""), e["degree"]))
                    .collect()
            })
            .unwrap_or_default();
        say!("  basis {}", labels.join(" "));
        for p in r["products"].as_array().into_iter().flatten() {
            say!("  {}", p.as_str().unwrap_or(""));
        }
        say!("  cup-length {}  zcl {}", r["cup_length"], r["zcl"]);
    }
    Ok(())
}
