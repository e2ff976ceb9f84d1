//! Finite-dimensional graded-commutative algebras given by a homogeneous
//! basis and a full table of structure constants.
//!
//! Koszul signs are baked into the table when a ring is constructed;
//! [`GradedAlgebra::multiply`] only does bilinear expansion.

mod constructors;
mod presentation;

pub use constructors::Tensor;
pub use presentation::{parse_presentation, PresentationError};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::exact_linalg::{Field, LinalgError, Scalar};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("elements belong to different algebras")]
    ParentMismatch,
    #[error("malformed structure table: {0}")]
    Malformed(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub degree: u32,
    pub label: String,
}

/// One term `c * b_k` of a structure constant.
pub type Term = (usize, Scalar);

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    id: u64,
    field: Field,
    basis: Vec<BasisElement>,
    table: Vec<Vec<Term>>,
}

/// Failed invariant found by [`GradedAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DegreeNotAdditive { i: usize, j: usize },
    UnitLaw { i: usize },
    Commutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegreeNotAdditive { i, j } => {
                write!(f, "b{i}*b{j} is not homogeneous of the summed degree")
            }
            Violation::UnitLaw { i } => write!(f, "unit law fails on b{i}"),
            Violation::Commutativity { i, j } => {
                write!(f, "graded commutativity fails on pair (b{i}, b{j})")
            }
            Violation::Associativity { i, j, k } => {
                write!(f, "associativity fails on triple (b{i}, b{j}, b{k})")
            }
        }
    }
}

impl GradedAlgebra {
    /// Builds an algebra from a raw table, `table[i * n + j]` holding the
    /// terms of `b_i * b_j`. The basis is reordered by degree (stably), and
    /// exactly one basis element may sit in degree 0. No ring axioms are
    /// checked here; see [`GradedAlgebra::validate`].
    pub fn from_table(
        field: Field,
        basis: Vec<BasisElement>,
        table: Vec<Vec<Term>>,
    ) -> Result<Self, AlgebraError> {
        let n = basis.len();
        if table.len() != n * n {
            return Err(AlgebraError::Malformed(format!(
                "expected {} table entries, got {}",
                n * n,
                table.len()
            )));
        }
        if basis.iter().filter(|b| b.degree == 0).count() != 1 {
            return Err(AlgebraError::Malformed(
                "exactly one basis element must have degree 0".into(),
            ));
        }
        for terms in &table {
            for (k, c) in terms {
                if *k >= n {
                    return Err(AlgebraError::Malformed(format!("index {k} out of range")));
                }
                if c.field() != field {
                    return Err(AlgebraError::FieldMismatch(field, c.field()));
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| basis[i].degree);
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut new_table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut terms: Vec<Term> = table[i * n + j]
                    .iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (new_index[*k], c.clone()))
                    .collect();
                terms.sort_by_key(|t| t.0);
                new_table[new_index[i] * n + new_index[j]] = terms;
            }
        }
        let basis = order.iter().map(|&i| basis[i].clone()).collect();
        Ok(GradedAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field,
            basis,
            table: new_table,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    pub fn top_degree(&self) -> u32 {
        self.basis.last().map_or(0, |b| b.degree)
    }

    /// Index of the basis element with the given label.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    /// Terms of `b_i * b_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[Term] {
        &self.table[i * self.dim() + j]
    }

    pub fn unit(&self) -> Element {
        self.basis_element(0)
    }

    pub fn zero(&self) -> Element {
        Element {
            parent: self.id,
            field: self.field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        self.element(vec![(i, self.field.one())])
    }

    /// Element from (basis index, coefficient) pairs; repeated indices add.
    pub fn element(&self, terms: impl IntoIterator<Item = Term>) -> Element {
        let mut e = self.zero();
        for (k, c) in terms {
            assert!(k < self.dim(), "basis index out of range");
            e.add_term(k, &c);
        }
        e
    }

    pub fn from_dense(&self, v: &[Scalar]) -> Element {
        self.element(v.iter().cloned().enumerate())
    }

    fn owns(&self, e: &Element) -> bool {
        e.parent == self.id
    }

    /// Cup product: the bilinear extension of the structure table.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        if !self.owns(a) || !self.owns(b) {
            return Err(AlgebraError::ParentMismatch);
        }
        Ok(self.multiply_owned(a, b))
    }

    pub(crate) fn multiply_owned(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        for (i, ca) in &a.coeffs {
            for (j, cb) in &b.coeffs {
                let cab = ca.mul_unchecked(cb);
                for (k, c) in self.product_terms(*i, *j) {
                    out.add_term(*k, &cab.mul_unchecked(c));
                }
            }
        }
        out
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        if !self.owns(a) || !self.owns(b) {
            return Err(AlgebraError::ParentMismatch);
        }
        let mut out = a.clone();
        for (k, c) in &b.coeffs {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    /// Dimension of each graded piece, indexed by degree.
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![0; self.top_degree() as usize + 1];
        for e in &self.basis {
            b[e.degree as usize] += 1;
        }
        b
    }

    fn basis_product(&self, i: usize, j: usize) -> Element {
        self.element(self.product_terms(i, j).iter().cloned())
    }

    /// Checks every ring invariant on all basis pairs and triples.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            let b = self.basis_element(i);
            if self.basis_product(0, i) != b || self.basis_product(i, 0) != b {
                violations.push(Violation::UnitLaw { i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let sum = self.degree(i) + self.degree(j);
                if self
                    .product_terms(i, j)
                    .iter()
                    .any(|(k, _)| self.degree(*k) != sum)
                {
                    violations.push(Violation::DegreeNotAdditive { i, j });
                }
                if j > i {
                    continue;
                }
                let odd = (self.degree(i) * self.degree(j)) % 2 == 1;
                if self.basis_product(i, j) != self.basis_product(j, i).scaled_sign(odd) {
                    violations.push(Violation::Commutativity { i, j });
                }
            }
        }
        for i in 1..n {
            for j in 1..n {
                let ij = self.basis_product(i, j);
                for k in 1..n {
                    let left = self.multiply_owned(&ij, &self.basis_element(k));
                    let jk = self.basis_product(j, k);
                    let right = self.multiply_owned(&self.basis_element(i), &jk);
                    if left != right {
                        violations.push(Violation::Associativity { i, j, k });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// Human-readable rendering of an element, e.g. `x⊗1 - 1⊗x`.
    pub fn display(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (k, c)) in e.coeffs.iter().enumerate() {
            let label = &self.basis[*k].label;
            let neg = c.is_negative();
            let mag = c.signed(neg);
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(label);
            } else {
                out.push_str(&format!("{mag}·{label}"));
            }
        }
        out
    }
}

/// A finitely supported linear combination of basis elements. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    parent: u64,
    field: Field,
    coeffs: BTreeMap<usize, Scalar>,
}

impl Element {
    fn add_term(&mut self, k: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&k) {
            Some(existing) => {
                let s = existing.add_unchecked(c);
                if s.is_zero() {
                    self.coeffs.remove(&k);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.coeffs.insert(k, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn neg(&self) -> Element {
        Element {
            parent: self.parent,
            field: self.field,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        let mut out = Element {
            parent: self.parent,
            field: self.field,
            coeffs: BTreeMap::new(),
        };
        for (k, c) in &self.coeffs {
            out.add_term(*k, &c.mul_unchecked(s));
        }
        out
    }

    fn scaled_sign(self, negative: bool) -> Element {
        if negative {
            self.neg()
        } else {
            self
        }
    }

    /// Dense coefficient vector of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); dim];
        for (k, c) in &self.coeffs {
            v[*k] = c.clone();
        }
        v
    }
}
