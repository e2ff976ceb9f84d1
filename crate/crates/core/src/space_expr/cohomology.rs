use crate::exact_linalg::Field;
use crate::graded_algebra::GradedAlgebra;

use super::{GroupAtom, SpaceError, SpaceExpr};

/// `H*(RP³)`: `Z₂[a]/(a⁴)` in characteristic 2, otherwise a 3-sphere.
pub fn rp3_ring(field: Field) -> GradedAlgebra {
    if field.characteristic() == 2 {
        GradedAlgebra::truncated_named("a", 1, 4, field).expect("RP3 ring")
    } else {
        GradedAlgebra::truncated_named("x", 3, 2, field).expect("RP3 ring")
    }
}

fn atom_ring(g: &GroupAtom, field: Field) -> Result<GradedAlgebra, SpaceError> {
    match g {
        GroupAtom::Rp3 { .. } => Ok(rp3_ring(field)),
        GroupAtom::Torus(k) => Ok(GradedAlgebra::torus(*k as usize, field)),
        GroupAtom::SpecialOrthogonal(_) => Err(SpaceError::UnregisteredRing {
            atom: g.name(),
            field,
        }),
    }
}

/// Cohomology ring of a normalized expression: Künneth for products,
/// reduced direct sum for wedges, catalog rings for atoms.
pub fn cohomology(e: &SpaceExpr, field: Field) -> Result<GradedAlgebra, SpaceError> {
    Ok(match e {
        SpaceExpr::Sphere(m) => GradedAlgebra::sphere(*m, field),
        SpaceExpr::Point | SpaceExpr::Euclidean(_) => GradedAlgebra::ground(field),
        SpaceExpr::Group(g) => atom_ring(g, field)?,
        SpaceExpr::Product(c) | SpaceExpr::Wedge(c) => {
            let mut acc = GradedAlgebra::ground(field);
            for (i, child) in c.iter().enumerate() {
                let ring = cohomology(child, field)?;
                acc = if i == 0 {
                    ring
                } else if matches!(e, SpaceExpr::Product(_)) {
                    acc.tensor_product(&ring)?
                } else {
                    acc.wedge_sum(&ring)?
                };
            }
            acc
        }
        SpaceExpr::Config2(_) => return Err(SpaceError::NotNormalized(e.to_string())),
    })
}
