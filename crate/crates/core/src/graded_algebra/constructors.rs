use crate::exact_linalg::Field;

use super::{AlgebraError, BasisElement, GradedAlgebra, Term};

fn power_label(name: &str, k: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    match k {
        0 => "1".into(),
        1 => name.into(),
        _ => {
            let digits: String = k
                .to_string()
                .chars()
                .map(|d| SUP[d.to_digit(10).unwrap() as usize])
                .collect();
            format!("{name}{digits}")
        }
    }
}

/// `A ⊗ B` together with the position of each `a_i ⊗ b_j` in its basis.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub algebra: GradedAlgebra,
    left_dim: usize,
    right_dim: usize,
    pair_index: Vec<usize>,
}

impl Tensor {
    /// Basis index of `a_i ⊗ b_j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        self.pair_index[i * self.right_dim + j]
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }
}

impl GradedAlgebra {
    /// The ground field as a graded algebra concentrated in degree 0.
    pub fn ground(field: Field) -> GradedAlgebra {
        GradedAlgebra::from_table(
            field,
            vec![BasisElement {
                degree: 0,
                label: "1".into(),
            }],
            vec![vec![(0, field.one())]],
        )
        .expect("ground field table")
    }

    /// `K[x]/(x^height)` with `deg x = gen_degree`.
    pub fn truncated_polynomial(
        gen_degree: u32,
        height: usize,
        field: Field,
    ) -> Result<GradedAlgebra, AlgebraError> {
        GradedAlgebra::truncated_named("x", gen_degree, height, field)
    }

    pub fn truncated_named(
        name: &str,
        gen_degree: u32,
        height: usize,
        field: Field,
    ) -> Result<GradedAlgebra, AlgebraError> {
        if gen_degree == 0 {
            return Err(AlgebraError::InconsistentPresentation(
                "generator degree must be positive".into(),
            ));
        }
        if height < 2 {
            return Err(AlgebraError::InconsistentPresentation(
                "height must be at least 2".into(),
            ));
        }
        if gen_degree % 2 == 1 && field.characteristic() != 2 && height > 2 {
            return Err(AlgebraError::InconsistentPresentation(format!(
                "odd generator {name} of degree {gen_degree} squares to zero outside characteristic 2, \
                 so height {height} is impossible over {field}"
            )));
        }
        let basis = (0..height)
            .map(|k| BasisElement {
                degree: gen_degree * k as u32,
                label: power_label(name, k),
            })
            .collect();
        let mut table = Vec::with_capacity(height * height);
        for i in 0..height {
            for j in 0..height {
                table.push(if i + j < height {
                    vec![(i + j, field.one())]
                } else {
                    vec![]
                });
            }
        }
        GradedAlgebra::from_table(field, basis, table)
    }

    /// `H*(S^m; K) = K[x]/(x²)` with `deg x = m`.
    pub fn sphere(m: u32, field: Field) -> GradedAlgebra {
        GradedAlgebra::truncated_polynomial(m, 2, field).expect("sphere ring")
    }

    /// Exterior algebra on odd-degree generators named `x1, x2, …`.
    pub fn exterior(degrees: &[u32], field: Field) -> Result<GradedAlgebra, AlgebraError> {
        let gens: Vec<(String, u32)> = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let name = if degrees.len() == 1 {
                    "x".to_string()
                } else {
                    format!("x{}", i + 1)
                };
                (name, d)
            })
            .collect();
        GradedAlgebra::exterior_named(&gens, field)
    }

    pub fn exterior_named(
        generators: &[(String, u32)],
        field: Field,
    ) -> Result<GradedAlgebra, AlgebraError> {
        if let Some((name, d)) = generators.iter().find(|(_, d)| d % 2 == 0) {
            return Err(AlgebraError::InconsistentPresentation(format!(
                "exterior generator {name} has even degree {d}; use a truncated polynomial"
            )));
        }
        if generators.len() > 16 {
            return Err(AlgebraError::InconsistentPresentation(
                "too many exterior generators".into(),
            ));
        }
        let g = generators.len();
        let n = 1usize << g;
        let basis = (0..n)
            .map(|mask| {
                let names: Vec<&str> = (0..g)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| generators[b].0.as_str())
                    .collect();
                BasisElement {
                    degree: (0..g)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| generators[b].1)
                        .sum(),
                    label: if names.is_empty() {
                        "1".into()
                    } else {
                        names.join("")
                    },
                }
            })
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                if s & t != 0 {
                    table.push(vec![]);
                    continue;
                }
                // Moving each generator of t left past the larger-indexed
                // generators of s costs one sign apiece (all degrees odd).
                let swaps: u32 = (0..g)
                    .filter(|b| t >> b & 1 == 1)
                    .map(|b| (s >> (b + 1)).count_ones())
                    .sum();
                table.push(vec![(s | t, field.one().signed(swaps % 2 == 1))]);
            }
        }
        GradedAlgebra::from_table(field, basis, table)
    }

    /// `H*(T^k) = Λ(x₁,…,x_k)` with all generators in degree 1.
    pub fn torus(k: usize, field: Field) -> GradedAlgebra {
        GradedAlgebra::exterior(&vec![1; k], field).expect("torus ring")
    }

    /// Koszul-signed tensor product:
    /// `(u₁⊗v₁)(u₂⊗v₂) = (−1)^{deg v₁ · deg u₂} u₁u₂ ⊗ v₁v₂`.
    pub fn tensor_product(&self, other: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
        Ok(self.tensor_indexed(other)?.algebra)
    }

    pub fn tensor_indexed(&self, other: &GradedAlgebra) -> Result<Tensor, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        let (na, nb) = (self.dim(), other.dim());
        let pair = |i: usize, j: usize| i * nb + j;
        let basis: Vec<BasisElement> = (0..na)
            .flat_map(|i| (0..nb).map(move |j| (i, j)))
            .map(|(i, j)| BasisElement {
                degree: self.degree(i) + other.degree(j),
                label: format!("{}⊗{}", self.basis[i].label, other.basis[j].label),
            })
            .collect();
        let n = na * nb;
        let mut table: Vec<Vec<Term>> = Vec::with_capacity(n * n);
        for i1 in 0..na {
            for j1 in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        let negative = (other.degree(j1) * self.degree(i2)) % 2 == 1;
                        let mut terms = Vec::new();
                        for (ka, ca) in self.product_terms(i1, i2) {
                            for (kb, cb) in other.product_terms(j1, j2) {
                                terms.push((pair(*ka, *kb), ca.mul_unchecked(cb).signed(negative)));
                            }
                        }
                        table.push(terms);
                    }
                }
            }
        }
        let algebra = GradedAlgebra::from_table(self.field, basis, table)?;
        // from_table sorts stably by degree; recover positions by replaying it.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&p| self.degree(p / nb) + other.degree(p % nb));
        let mut pair_index = vec![0; n];
        for (new, old) in order.into_iter().enumerate() {
            pair_index[old] = new;
        }
        Ok(Tensor {
            algebra,
            left_dim: na,
            right_dim: nb,
            pair_index,
        })
    }

    /// Ring model of `X ∨ Y`: shared unit, reduced parts side by side, every
    /// mixed product zero.
    pub fn wedge_sum(&self, other: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        let (na, nb) = (self.dim(), other.dim());
        // New index: 0 = unit, 1..na = A⁺, na..na+nb-1 = B⁺.
        let n = na + nb - 1;
        let from_a = |i: usize| i;
        let from_b = |j: usize| if j == 0 { 0 } else { na + j - 1 };
        let mut basis = self.basis.clone();
        basis.extend(other.basis[1..].iter().cloned());
        let mut table: Vec<Vec<Term>> = vec![Vec::new(); n * n];
        for i in 0..na {
            for j in 0..na {
                table[from_a(i) * n + from_a(j)] = self
                    .product_terms(i, j)
                    .iter()
                    .map(|(k, c)| (from_a(*k), c.clone()))
                    .collect();
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                if i == 0 && j == 0 {
                    continue;
                }
                table[from_b(i) * n + from_b(j)] = other
                    .product_terms(i, j)
                    .iter()
                    .map(|(k, c)| (from_b(*k), c.clone()))
                    .collect();
            }
        }
        GradedAlgebra::from_table(self.field, basis, table)
    }

    /// Same ring over the same basis, relabelled. Used to keep factor names
    /// readable in tensor labels.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> GradedAlgebra {
        let mut out = self.clone();
        for b in &mut out.basis {
            if b.degree > 0 {
                b.label = f(&b.label);
            }
        }
        out
    }
}
