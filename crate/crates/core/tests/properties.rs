use lscat::exact_linalg::Field;
use lscat::graded_algebra::GradedAlgebra;
use lscat::invariants::{cup_length, zcl};
use lscat::space_expr::parse;
use proptest::prelude::*;

fn field(k: u8) -> Field {
    match k % 3 {
        0 => Field::Q,
        1 => Field::Z2,
        _ => Field::prime(3).unwrap(),
    }
}

/// A small building block: sphere, even truncated polynomial, or exterior algebra.
fn block(kind: u8, d: u32, f: Field) -> GradedAlgebra {
    match kind % 3 {
        0 => GradedAlgebra::sphere(d, f),
        1 => GradedAlgebra::truncated_polynomial(2 * d.min(2), 2 + d as usize % 2, f).unwrap(),
        _ => GradedAlgebra::exterior(&[1, 2 * d - 1], f).unwrap(),
    }
}

fn blocks() -> impl Strategy<Value = (GradedAlgebra, GradedAlgebra)> {
    (any::<u8>(), 0u8..3, 1u32..5, 0u8..3, 1u32..5).prop_map(|(fk, k1, d1, k2, d2)| {
        let f = field(fk);
        (block(k1, d1, f), block(k2, d2, f))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_and_wedge_stay_rings((a, b) in blocks()) {
        prop_assert!(a.tensor_product(&b).unwrap().validate().is_ok());
        prop_assert!(a.wedge_sum(&b).unwrap().validate().is_ok());
    }

    #[test]
    fn cup_length_is_additive_and_max((a, b) in blocks()) {
        let t = a.tensor_product(&b).unwrap();
        let w = a.wedge_sum(&b).unwrap();
        prop_assert_eq!(cup_length(&t), cup_length(&a) + cup_length(&b));
        prop_assert_eq!(cup_length(&w), cup_length(&a).max(cup_length(&b)));
    }

    #[test]
    fn zero_divisors_sit_between_cup_and_twice_cup((a, b) in blocks()) {
        for x in [&a, &b] {
            let z = zcl(x);
            prop_assert!(cup_length(x) <= z && z <= 2 * cup_length(x));
        }
        let w = a.wedge_sum(&b).unwrap();
        prop_assert!(zcl(&w) >= zcl(&a).max(zcl(&b)));
    }

    #[test]
    fn betti_numbers_convolve((a, b) in blocks()) {
        let t = a.tensor_product(&b).unwrap().betti();
        let (ba, bb) = (a.betti(), b.betti());
        for (k, v) in t.iter().enumerate() {
            let want: usize = (0..=k)
                .map(|i| ba.get(i).copied().unwrap_or(0) * bb.get(k - i).copied().unwrap_or(0))
                .sum();
            prop_assert_eq!(*v, want);
        }
    }
}

fn expr_text() -> impl Strategy<Value = String> {
    let atom = prop_oneof![
        Just("pt".to_string()),
        Just("RP3".to_string()),
        (1u32..6).prop_map(|m| format!("S{m}")),
        (1u32..4).prop_map(|n| format!("R^{n}")),
        (2u32..4).prop_map(|k| format!("T{k}")),
    ];
    atom.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(|v| format!("({})", v.join(" x "))),
            prop::collection::vec(inner, 2..4).prop_map(|v| format!("wedge({})", v.join(", "))),
        ]
    })
}

proptest! {
    #[test]
    fn printed_expressions_parse_back(text in expr_text()) {
        let e = parse(&text).unwrap();
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }
}
