use std::fmt;

use super::{Field, LinalgError, Scalar};

/// Dense matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows. All rows must have equal length and all
    /// entries must share one field. An empty row list needs `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::Ragged);
            }
            for s in row {
                if s.field() != field {
                    return Err(LinalgError::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular integer matrix")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "field mismatch in Matrix::set");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Ragged);
        }
        if let Some(bad) = v.iter().find(|s| s.field() != self.field) {
            return Err(LinalgError::FieldMismatch(self.field, bad.field()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| {
                        acc.add_unchecked(&a.mul_unchecked(b))
                    })
            })
            .collect())
    }

    /// Reduced row-echelon form and the strictly increasing pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).inverse().expect("nonzero pivot");
            for k in c..m.cols {
                let v = m.get(lead, k).mul_unchecked(&inv);
                m.data[lead * m.cols + k] = v;
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m
                        .get(r, k)
                        .sub_unchecked(&factor.mul_unchecked(m.get(lead, k)));
                    m.data[r * m.cols + k] = v;
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{v : m v = 0}`; empty iff `m` is injective.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).neg();
                }
                v
            })
            .collect()
    }
}

/// Rank of the matrix whose rows are `vectors`; zero for empty input.
pub fn span_dimension(vectors: &[Vec<Scalar>]) -> Result<usize, LinalgError> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let Some(field) = first.first().map(Scalar::field) else {
        return Ok(0);
    };
    let mut echelon = EchelonBasis::new(field, first.len());
    for v in vectors {
        echelon.insert(v.clone())?;
    }
    Ok(echelon.rank())
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `K^dim`.
///
/// Each stored row has a leading 1 at its pivot and zeros before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    // pivot column -> row
    rows: Vec<Option<Vec<Scalar>>>,
    rank: usize,
}

impl EchelonBasis {
    pub fn new(field: Field, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: vec![None; dim],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the basis; returns the residue.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.dim {
            return Err(LinalgError::Ragged);
        }
        if let Some(bad) = v.iter().find(|s| s.field() != self.field) {
            return Err(LinalgError::FieldMismatch(self.field, bad.field()));
        }
        for c in 0..self.dim {
            if v[c].is_zero() {
                continue;
            }
            if let Some(row) = &self.rows[c] {
                let factor = v[c].clone();
                for k in c..self.dim {
                    if !row[k].is_zero() {
                        v[k] = v[k].sub_unchecked(&factor.mul_unchecked(&row[k]));
                    }
                }
            }
        }
        Ok(v)
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> Result<bool, LinalgError> {
        let mut v = self.reduce(v)?;
        let Some(p) = v.iter().position(|s| !s.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].inverse().expect("nonzero");
        for s in v.iter_mut().skip(p) {
            *s = s.mul_unchecked(&inv);
        }
        self.rows[p] = Some(v);
        self.rank += 1;
        Ok(true)
    }

    pub fn contains(&self, v: Vec<Scalar>) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Stored basis rows, ordered by pivot.
    pub fn basis(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.rows.iter().flatten()
    }
}
