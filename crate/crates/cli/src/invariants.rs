use lscat::exact_linalg::Field;
use lscat::space_expr::{
    cohomology, normalize, parse, Engine, Interval, InvariantBounds, SpaceExpr,
};
use serde_json::{json, Value};

use crate::{UsageError, SCHEMA_VERSION};

struct FieldRow {
    field: Field,
    betti: Option<Vec<usize>>,
    cup: Option<usize>,
    zcl: Option<usize>,
}

fn interval_json(iv: &Interval) -> Value {
    json!({ "lo": iv.lo, "hi": iv.hi, "exact": iv.exact() })
}

fn field_rows(normal: &SpaceExpr, bounds: &InvariantBounds) -> Vec<FieldRow> {
    bounds
        .fields
        .iter()
        .map(|f| FieldRow {
            field: *f,
            betti: cohomology(normal, *f).ok().map(|a| a.betti()),
            cup: bounds.cup(*f),
            zcl: bounds.zcl(*f),
        })
        .collect()
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".into(), |x| x.to_string())
}

fn report_json(bounds: &InvariantBounds, rows: &[FieldRow]) -> Value {
    json!({
        "schema": "lscat.invariants",
        "schema_version": SCHEMA_VERSION,
        "input": bounds.input,
        "normalized": bounds.normalized,
        "rewrites": bounds.rewrites.iter().map(|s| json!({
            "rule": format!("{:?}", s.rule),
            "before": s.before,
            "after": s.after,
            "anchor": s.rule.anchor(),
        })).collect::<Vec<_>>(),
        "fields": rows.iter().map(|r| json!({
            "field": r.field.to_string(),
            "betti": r.betti,
            "cup_length": r.cup,
            "zcl": r.zcl,
        })).collect::<Vec<_>>(),
        "cat": interval_json(&bounds.cat),
        "tc": interval_json(&bounds.tc),
        "tcm": bounds.tcm.as_ref().map(interval_json),
        "certificates": bounds.certificates.iter().map(|c| json!({
            "rule": c.rule.to_string(),
            "anchor": c.anchor,
            "node": c.node,
            "invariant": c.invariant.to_string(),
            "side": format!("{:?}", c.side).to_lowercase(),
            "value": c.value,
            "premises": c.premises,
        })).collect::<Vec<_>>(),
        "conditional": bounds.conditional,
    })
}

pub fn run(expr: &str, fields: &[Field], as_json: bool) -> Result<(), UsageError> {
    let parsed = parse(expr)?;
    let normal = normalize(&parsed)?.expr;
    let bounds = Engine::new(fields.to_vec()).bounds(&parsed)?;
    let rows = field_rows(&normal, &bounds);
    if as_json {
        let v = report_json(&bounds, &rows);
        say!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(());
    }
    say!("input:      {}", bounds.input);
    for s in &bounds.rewrites {
        say!(
            "rewrite:    {} => {}  [{}]",
            s.before,
            s.after,
            s.rule.anchor()
        );
    }
    say!("normalized: {}", bounds.normalized);
    for r in &rows {
        let betti = r.betti.as_ref().map_or("-".into(), |b| format!("{b:?}"));
        say!(
            "over {}: betti {}  cup-length {}  zcl {}",
            r.field,
            betti,
            opt(r.cup),
            opt(r.zcl)
        );
    }
    say!("cat = {}", bounds.cat);
    say!("TC = {}", bounds.tc);
    match &bounds.tcm {
        Some(t) => say!("TC^M = {t}"),
        None => say!("TC^M = not reported (input is not in normal form)"),
    }
    say!("certificates:");
    for (i, c) in bounds.certificates.iter().enumerate() {
        say!("  {:>3}. {c}", i + 1);
    }
    for c in &bounds.conditional {
        say!("conditional: {c}");
    }
    Ok(())
}
