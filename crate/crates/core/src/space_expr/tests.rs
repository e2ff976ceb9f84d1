use super::*;
use crate::exact_linalg::Field;

fn bounds(text: &str) -> InvariantBounds {
    Engine::default().bounds(&parse(text).unwrap()).unwrap()
}

#[test]
fn parse_examples() {
    assert_eq!(
        parse("F(S1 x R^2, 2)").unwrap(),
        SpaceExpr::Config2(Box::new(SpaceExpr::Product(vec![
            SpaceExpr::Sphere(1),
            SpaceExpr::Euclidean(2)
        ])))
    );
    assert_eq!(
        parse("RP3 x R^3").unwrap(),
        SpaceExpr::Product(vec![SpaceExpr::rp3(), SpaceExpr::Euclidean(3)])
    );
    assert_eq!(
        parse("wedge(RP3, S5)").unwrap(),
        SpaceExpr::Wedge(vec![SpaceExpr::rp3(), SpaceExpr::Sphere(5)])
    );
    assert_eq!(
        parse("f( s1xr^2 ,2 )").unwrap(),
        parse("F(S1 x R^2, 2)").unwrap()
    );
    assert_eq!(parse("T2").unwrap(), SpaceExpr::Group(GroupAtom::Torus(2)));
    assert_eq!(parse("pt").unwrap(), SpaceExpr::Point);
}

#[test]
fn parse_errors_carry_positions() {
    match parse("S1 x ?") {
        Err(SpaceError::Syntax { pos, .. }) => assert_eq!(pos, 5),
        other => panic!("{other:?}"),
    }
    match parse("F(S2 x R^1, 2)") {
        Err(SpaceError::Semantic { pos, .. }) => assert_eq!(pos, 0),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse("F(S1 x R^1, 3)"),
        Err(SpaceError::Syntax { .. })
    ));
    assert!(matches!(parse("wedge(S1"), Err(SpaceError::Syntax { .. })));
}

#[test]
fn dimensions() {
    assert_eq!(parse("wedge(RP3, S5)").unwrap().dim(), 5);
    assert_eq!(parse("RP3 x R^3").unwrap().dim(), 6);
    assert_eq!(parse("F(S1 x R^2, 2)").unwrap().dim(), 6);
}

#[test]
fn normalize_examples() {
    let n = normalize(&parse("F(S1 x R^1, 2)").unwrap()).unwrap();
    assert_eq!(n.expr.to_string(), "S1 x wedge(S1, S1)");
    assert_eq!(n.steps[0].rule, RewriteRule::ConfigSplit);

    let n = normalize(&parse("F(RP3 x R^3, 2)").unwrap()).unwrap();
    assert_eq!(n.expr.to_string(), "RP3 x wedge(RP3, S5)");

    let n = normalize(&parse("(S1 x R^2) x (S1 x R^2)").unwrap()).unwrap();
    assert_eq!(n.expr.to_string(), "S1 x S1");

    assert!(matches!(
        normalize(&parse("F(S1, 2)").unwrap()),
        Err(SpaceError::Hypothesis(_))
    ));
}

#[test]
fn normalize_is_idempotent() {
    for text in [
        "F(T2 x R^2, 2)",
        "wedge(S1, R^3, S2 x pt)",
        "F(SO3 x R^1, 2) x S2",
    ] {
        let once = normalize(&parse(text).unwrap()).unwrap().expr;
        let twice = normalize(&once).unwrap();
        assert_eq!(twice.expr, once);
        assert!(twice.steps.is_empty());
        assert!(is_normal(&once));
    }
}

#[test]
fn cohomology_examples() {
    let e = normalize(&parse("F(S1 x R^1, 2)").unwrap()).unwrap().expr;
    assert_eq!(cohomology(&e, Field::Q).unwrap().betti(), vec![1, 3, 2]);
    let w = parse("wedge(RP3, S5)").unwrap();
    assert_eq!(
        cohomology(&w, Field::Z2).unwrap().betti(),
        vec![1, 1, 1, 1, 0, 1]
    );
    assert_eq!(cohomology(&SpaceExpr::Point, Field::Q).unwrap().dim(), 1);
    assert!(matches!(
        cohomology(&parse("SO5").unwrap(), Field::Z2),
        Err(SpaceError::UnregisteredRing { .. })
    ));
}

#[test]
fn headline_bounds() {
    assert_eq!(bounds("F(S1 x R^2, 2)").tc.exact(), Some(4));
    assert_eq!(bounds("F(RP3 x R^3, 2)").tc.exact(), Some(8));
    assert_eq!(bounds("F(SO3 x R^2, 2)").cat.exact(), Some(7));
}

#[test]
fn explain_chain_for_cylinder() {
    let b = bounds("F(S1 x R^1, 2)");
    let text = explain(&b);
    assert!(text.contains("ConfigSplit"));
    let tc_rules: Vec<RuleId> = b
        .certificates
        .iter()
        .filter(|c| c.invariant == Invariant::Tc && c.side == Side::Upper)
        .map(|c| c.rule)
        .collect();
    assert!(tc_rules.contains(&RuleId::R7) || tc_rules.contains(&RuleId::R8));
    // The wedge S1 v S1 closes through R10 or R11, whichever fires first.
    assert!(tc_rules.contains(&RuleId::R11) || tc_rules.contains(&RuleId::R10));
    assert!(b.certificates.iter().any(|c| c.rule == RuleId::R11));
    assert_eq!(
        b.certificates
            .iter()
            .rev()
            .find(|c| c.invariant == Invariant::Tc && c.node == b.normalized)
            .map(|c| c.rule),
        Some(RuleId::R12)
    );
}

#[test]
fn sphere_and_point() {
    let b = bounds("S2");
    assert_eq!(b.tc.exact(), Some(3));
    assert_eq!(b.cat.exact(), Some(2));
    assert!(b.certificates.iter().any(|c| c.rule == RuleId::R8));
    assert!(b.certificates.iter().any(|c| c.rule == RuleId::R5));
    let p = bounds("pt");
    assert_eq!(
        (p.cat.exact(), p.tc.exact(), p.tcm.unwrap().exact()),
        (Some(1), Some(1), Some(1))
    );
}

#[test]
fn rp3_square() {
    let b = bounds("RP3 x RP3");
    assert_eq!(b.tc.exact(), Some(7));
    assert!(b
        .certificates
        .iter()
        .any(|c| c.rule == RuleId::R12 && c.node == "RP3 x RP3"));
}

#[test]
fn tcm_only_for_normal_inputs() {
    assert!(bounds("F(S1 x R^1, 2)").tcm.is_none());
    assert_eq!(bounds("wedge(RP3, S5)").tcm.unwrap().exact(), Some(5));
}

#[test]
fn unregistered_atoms_stay_conditional() {
    let b = bounds("F(SO5 x R^1, 2)");
    assert!(!b.conditional.is_empty());
    assert_eq!(b.cat.hi, Some(17));
    assert!(b.cat.exact().is_none());
}

#[test]
fn registry_values() {
    let cat = |m| GroupAtom::SpecialOrthogonal(m).registry_cat().unwrap();
    assert_eq!(cat(4), 5);
    assert_eq!(cat(5), 9);
}

#[test]
fn group_names_accept_parentheses() {
    assert_eq!(parse("SO(3)").unwrap(), parse("SO3").unwrap());
    assert_eq!(parse("so(5) x S1").unwrap(), parse("SO5 x S1").unwrap());
    assert!(parse("SO(3").is_err());
}
