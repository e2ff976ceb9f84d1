//! The configuration-space formulas are consequences of generic rules, not
//! rules themselves: check them on groups the engine never names together
//! with a configuration space.

use lscat::exact_linalg::Field;
use lscat::space_expr::{parse, Engine, InvariantBounds};

fn bounds(text: &str) -> InvariantBounds {
    Engine::new(vec![Field::Q, Field::Z2])
        .bounds(&parse(text).unwrap())
        .unwrap()
}

const GROUPS: [&str; 5] = ["S1", "S3", "RP3", "SO(3)", "T2"];

#[test]
fn category_doubles_minus_one() {
    for g in GROUPS {
        let cat_g = bounds(g).cat.exact().unwrap();
        for n in 1..=3 {
            let f = format!("F({g} x R^{n}, 2)");
            assert_eq!(bounds(&f).cat.exact(), Some(2 * cat_g - 1), "{f}");
        }
    }
}

#[test]
fn complexity_doubles() {
    for g in GROUPS {
        let tc_g = bounds(g).tc.exact().unwrap();
        for n in 1..=3 {
            let f = format!("F({g} x R^{n}, 2)");
            assert_eq!(bounds(&f).tc.exact(), Some(2 * tc_g), "{f}");
        }
    }
}

#[test]
fn collisions_cost_exactly_one_motion() {
    for g in GROUPS {
        let free = bounds(&format!("({g} x R^2) x ({g} x R^2)"))
            .tc
            .exact()
            .unwrap();
        let config = bounds(&format!("F({g} x R^2, 2)")).tc.exact().unwrap();
        assert_eq!(config, free + 1, "{g}");
    }
}

#[test]
fn bounds_are_cohomologically_sharp() {
    for g in GROUPS {
        let b = bounds(&format!("F({g} x R^1, 2)"));
        let cup = [Field::Q, Field::Z2]
            .iter()
            .filter_map(|f| b.cup(*f))
            .max()
            .unwrap();
        let zcl = [Field::Q, Field::Z2]
            .iter()
            .filter_map(|f| b.zcl(*f))
            .max()
            .unwrap();
        assert_eq!(b.cat.exact(), Some(cup as u32 + 1), "{g}");
        assert_eq!(b.tc.exact(), Some(zcl as u32 + 1), "{g}");
    }
}

#[test]
fn torus_answer_is_derived_through_rewrites() {
    let b = bounds("F(T2 x R^2, 2)");
    assert!(!b.rewrites.is_empty());
    assert_eq!(b.normalized.to_string(), "T2 x wedge(T2, S3)");
    let rules: Vec<String> = b.certificates.iter().map(|c| c.rule.to_string()).collect();
    assert!(rules.iter().any(|r| r == "R12"), "{rules:?}");
}
