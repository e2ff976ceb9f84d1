//! Exact scalar arithmetic and the dense linear-algebra kernels used by the
//! ring and invariant computations. Nothing here touches floating point.

mod matrix;
mod scalar;

pub use matrix::{span_dimension, EchelonBasis, Matrix};
pub use scalar::{Field, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("rows or vectors of unequal length")]
    Ragged,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(field: Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(Field::Q, 2);
        let (r, p) = m.rref();
        assert_eq!(r, m);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one_mod_two() {
        let m = Matrix::from_i64(Field::Z2, &[&[1, 1], &[1, 1]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Field::Z2, &[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_rational_hand_reduction() {
        // R1 <-> R2, then R2 -= 2 R1.
        let m = Matrix::from_i64(Field::Q, &[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Field::Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn mixed_fields_rejected() {
        let err = Matrix::from_rows(Field::Q, vec![vec![Field::Q.one(), Field::Z2.one()]]);
        assert!(matches!(err, Err(LinalgError::FieldMismatch(..))));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(Field::Q, 3).kernel_basis().is_empty());

        let k = Matrix::from_i64(Field::Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![ints(Field::Q, &[-1, 1])]);

        let k = Matrix::from_i64(Field::Z2, &[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, vec![ints(Field::Z2, &[1, 1])]);
    }

    #[test]
    fn span_dimension_examples() {
        assert_eq!(span_dimension(&[]).unwrap(), 0);
        let q = [
            ints(Field::Q, &[1, 0]),
            ints(Field::Q, &[0, 1]),
            ints(Field::Q, &[1, 1]),
        ];
        assert_eq!(span_dimension(&q).unwrap(), 2);
        assert_eq!(span_dimension(&[ints(Field::Z2, &[1, 1])]).unwrap(), 1);
    }

    #[test]
    fn echelon_membership() {
        let mut e = EchelonBasis::new(Field::Q, 3);
        assert!(e.insert(ints(Field::Q, &[1, 2, 0])).unwrap());
        assert!(e.insert(ints(Field::Q, &[0, 1, 1])).unwrap());
        assert!(!e.insert(ints(Field::Q, &[2, 5, 1])).unwrap());
        assert!(e.contains(ints(Field::Q, &[1, 3, 1])).unwrap());
        assert!(!e.contains(ints(Field::Q, &[0, 0, 1])).unwrap());
        assert_eq!(e.rank(), 2);
    }

    fn small_matrix(field: Field, modulus: i64) -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..6).prop_flat_map(move |(r, c)| {
            prop::collection::vec(prop::collection::vec(-modulus..=modulus, c), r).prop_map(
                move |rows| {
                    let rows = rows
                        .into_iter()
                        .map(|row| row.into_iter().map(|v| field.from_i64(v)).collect())
                        .collect();
                    Matrix::from_rows(field, rows).unwrap()
                },
            )
        })
    }

    fn brute_force_kernel_z2(m: &Matrix) -> usize {
        let n = m.cols();
        (0u32..1 << n)
            .filter(|mask| {
                let v: Vec<Scalar> = (0..n)
                    .map(|i| Field::Z2.from_i64(((mask >> i) & 1) as i64))
                    .collect();
                m.apply(&v).unwrap().iter().all(Scalar::is_zero)
            })
            .count()
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(Field::Q, 4)) {
            let (r, p) = m.rref();
            let (rr, pp) = r.rref();
            prop_assert_eq!(rr, r);
            prop_assert_eq!(pp, p);
        }

        #[test]
        fn rank_nullity(m in small_matrix(Field::Q, 3)) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn z2_kernel_matches_enumeration(m in small_matrix(Field::Z2, 1)) {
            let k = m.kernel_basis();
            prop_assert_eq!(1usize << k.len(), brute_force_kernel_z2(&m));
        }
    }
}
