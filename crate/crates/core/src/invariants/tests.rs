use super::*;
use crate::exact_linalg::Field;
use crate::graded_algebra::GradedAlgebra;

fn rp3_z2() -> GradedAlgebra {
    GradedAlgebra::truncated_named("a", 1, 4, Field::Z2).unwrap()
}

fn s(m: u32) -> GradedAlgebra {
    GradedAlgebra::sphere(m, Field::Q)
}

/// Longest nonzero product of (possibly repeated) elements from `gens`, by
/// depth-first search over non-decreasing index sequences. For homogeneous
/// elements of a graded-commutative ring the order only affects the sign.
fn brute_force_longest(a: &GradedAlgebra, gens: &[Element]) -> usize {
    fn go(a: &GradedAlgebra, gens: &[Element], from: usize, acc: &Element, len: usize) -> usize {
        let mut best = len;
        for (i, g) in gens.iter().enumerate().skip(from) {
            let p = a.multiply(acc, g).unwrap();
            if !p.is_zero() {
                best = best.max(go(a, gens, i, &p, len + 1));
            }
        }
        best
    }
    go(a, gens, 0, &a.unit(), 0)
}

#[test]
fn augmentation_examples() {
    assert_eq!(augmentation_ideal_basis(&s(3)).len(), 1);
    assert_eq!(augmentation_ideal_basis(&rp3_z2()).len(), 3);
    let w = s(1).wedge_sum(&s(2)).unwrap();
    assert_eq!(augmentation_ideal_basis(&w).len(), 2);
}

#[test]
fn trace_examples() {
    let a = s(4);
    let tr = ideal_power_trace(&a, &augmentation_ideal_basis(&a)).unwrap();
    assert_eq!(tr.dims, vec![1]);
    assert_eq!(tr.nilpotency_length, 1);

    let a = rp3_z2();
    let tr = ideal_power_trace(&a, &augmentation_ideal_basis(&a)).unwrap();
    assert_eq!(tr.dims, vec![3, 2, 1]);
    assert_eq!(tr.nilpotency_length, 3);

    let t = GradedAlgebra::torus(2, Field::Q);
    let tr = ideal_power_trace(&t, &augmentation_ideal_basis(&t)).unwrap();
    assert_eq!(tr.nilpotency_length, 2);

    assert_eq!(ideal_power_trace(&t, &[]).unwrap().nilpotency_length, 0);
}

#[test]
fn non_homogeneous_generators_take_the_dense_path() {
    let t = GradedAlgebra::torus(2, Field::Q);
    let x = t.basis_element(1);
    let xy = t.basis_element(3);
    let mixed = t.add(&x, &xy).unwrap();
    let gens = vec![mixed, t.basis_element(2), xy];
    let tr = ideal_power_trace(&t, &gens).unwrap();
    assert_eq!(tr, ideal_power_trace_dense(&t, &gens));
    assert_eq!(tr.nilpotency_length, 2);
}

#[test]
fn cup_length_examples() {
    assert_eq!(cup_length(&s(7)), 1);
    assert_eq!(cup_length(&rp3_z2()), 3);
    assert_eq!(cup_length(&s(1).wedge_sum(&s(5)).unwrap()), 1);
}

#[test]
fn zero_divisors_of_circle() {
    let a = s(1);
    let zd = zero_divisor_ideal_basis(&a);
    let t = zd.algebra();
    let xbar = t.element([
        (zd.tensor.index(1, 0), Field::Q.one()),
        (zd.tensor.index(0, 1), Field::Q.from_i64(-1)),
    ]);
    let xx = t.basis_element(zd.tensor.index(1, 1));
    assert_eq!(zd.basis.len(), 2);
    let span = |e: &Element| {
        let mut ech = EchelonBasis::new(Field::Q, t.dim());
        for b in &zd.basis {
            ech.insert(b.to_dense(t.dim())).unwrap();
        }
        ech.contains(e.to_dense(t.dim())).unwrap()
    };
    assert!(span(&xbar));
    assert!(span(&xx));
}

#[test]
fn ubar_is_always_a_zero_divisor() {
    let a = rp3_z2()
        .tensor_product(&GradedAlgebra::sphere(2, Field::Z2))
        .unwrap();
    let zd = zero_divisor_ideal_basis(&a);
    let t = zd.algebra();
    let mut ech = EchelonBasis::new(a.field(), t.dim());
    for b in &zd.basis {
        ech.insert(b.to_dense(t.dim())).unwrap();
    }
    for g in zero_divisor_generators(&a, &zd.tensor) {
        assert!(ech.contains(g.to_dense(t.dim())).unwrap());
    }
    // Rank-nullity: kernel dimension is dim(A)^2 - dim(A) (the map is onto).
    assert_eq!(zd.basis.len(), a.dim() * a.dim() - a.dim());
}

#[test]
fn ground_field_has_no_zero_divisors() {
    let zd = zero_divisor_ideal_basis(&GradedAlgebra::ground(Field::Q));
    assert!(zd.basis.is_empty());
    assert_eq!(zcl(&GradedAlgebra::ground(Field::Q)), 0);
}

#[test]
fn xbar_squared_by_hand() {
    // S^1: the two cross terms cancel. S^2: they add to -2 x⊗x.
    for (m, expect) in [(1u32, 0i64), (2, -2)] {
        let a = s(m);
        let tensor = a.tensor_indexed(&a).unwrap();
        let t = &tensor.algebra;
        let xbar = &zero_divisor_generators(&a, &tensor)[0];
        let sq = t.multiply(xbar, xbar).unwrap();
        let xx = t.basis_element(tensor.index(1, 1));
        assert_eq!(sq, xx.scale(&Field::Q.from_i64(expect)));
    }
}

#[test]
fn zcl_examples() {
    assert_eq!(zcl(&s(1)), 1);
    assert_eq!(zcl(&s(2)), 2);
    assert_eq!(zcl(&s(1).wedge_sum(&s(2)).unwrap()), 2);
}

#[test]
fn lower_bounds() {
    assert_eq!(cat_lower_bound(&s(3)), 2);
    assert_eq!(cat_lower_bound(&rp3_z2()), 4);
    assert_eq!(
        cat_lower_bound(&rp3_z2().tensor_product(&rp3_z2()).unwrap()),
        7
    );
    assert_eq!(tc_lower_bound(&s(1)), 2);
    assert_eq!(tc_lower_bound(&rp3_z2()), 4);
    let f = s(1)
        .tensor_product(&s(1).wedge_sum(&s(1)).unwrap())
        .unwrap();
    assert_eq!(tc_lower_bound(&f), 4);
}

#[test]
fn full_kernel_multipliers_agree_with_ubar_multipliers() {
    for a in [s(1), s(2), rp3_z2(), GradedAlgebra::torus(2, Field::Q)] {
        let zd = zero_divisor_ideal_basis(&a);
        let full = ideal_power_trace(zd.algebra(), &zd.basis).unwrap();
        assert_eq!(full.dims, zero_divisor_trace(&a).dims);
    }
}

#[test]
fn ideal_powers_match_brute_force() {
    let rings = [
        s(1),
        s(2),
        s(3),
        rp3_z2(),
        GradedAlgebra::torus(2, Field::Q),
        s(1).wedge_sum(&s(2)).unwrap(),
        s(1).wedge_sum(&s(1)).unwrap(),
        GradedAlgebra::truncated_polynomial(2, 3, Field::Q).unwrap(),
    ];
    for a in &rings {
        let aug = augmentation_ideal_basis(a);
        assert_eq!(cup_length(a), brute_force_longest(a, &aug));
        let zd = zero_divisor_ideal_basis(a);
        if zd.algebra().dim() <= 16 {
            assert_eq!(zcl(a), brute_force_longest(zd.algebra(), &zd.basis));
        }
    }
}
