use std::fmt;

use crate::error::{Result, TropError};
use crate::linalg::vector::{Orientation, TropVector};
use crate::scalar::{Domain, TropScalar};

/// Dense row-major matrix over the completed semiring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<TropScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(TropError::shape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(TropError::shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(TropError::shape(format!(
                "row {} has {} entries, expected {c}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Rows separated by `;`, entries by whitespace: `"0 1; -inf 2"`.
    pub fn parse_rows(text: &str) -> Result<Self> {
        let rows = text
            .split(';')
            .map(crate::text::parse_entries)
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Stacks vectors as rows (their own orientation is ignored).
    pub fn from_row_vectors(vectors: &[TropVector]) -> Result<Self> {
        Self::from_rows(vectors.iter().map(|v| v.entries().to_vec()).collect())
    }

    /// Places vectors side by side as columns.
    pub fn from_column_vectors(vectors: &[TropVector]) -> Result<Self> {
        Ok(Self::from_row_vectors(vectors)?.transpose())
    }

    pub fn from_vector(v: &TropVector) -> TropMatrix {
        let data = v.entries().to_vec();
        match v.orientation() {
            Orientation::Row => TropMatrix {
                rows: 1,
                cols: data.len(),
                data,
            },
            Orientation::Column => TropMatrix {
                rows: data.len(),
                cols: 1,
                data,
            },
        }
    }

    /// Reads a `1 x n` or `n x 1` matrix as a vector.
    pub fn to_vector(&self) -> Result<TropVector> {
        if self.rows == 1 {
            Ok(TropVector::row(self.data.clone()))
        } else if self.cols == 1 {
            Ok(TropVector::column(self.data.clone()))
        } else {
            Err(TropError::shape(format!(
                "expected a 1xn or nx1 matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// `0` on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> TropMatrix {
        let mut m = Self::filled(n, n, TropScalar::NegInf);
        for i in 0..n {
            m.data[i * n + i] = TropScalar::one();
        }
        m
    }

    pub fn zero(rows: usize, cols: usize) -> TropMatrix {
        Self::filled(rows, cols, TropScalar::NegInf)
    }

    fn filled(rows: usize, cols: usize, value: TropScalar) -> TropMatrix {
        assert!(rows > 0 && cols > 0);
        TropMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: TropScalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> TropVector {
        TropVector::row(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> TropVector {
        TropVector::column((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<TropVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column_vectors(&self) -> Vec<TropVector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn domain(&self) -> Domain {
        self.data
            .iter()
            .fold(Domain::Finitary, |d, x| d.join(x.domain()))
    }

    pub fn map(&self, f: impl Fn(&TropScalar) -> TropScalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> TropMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        TropMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Max-plus product `(AB)_ij = max_k A_ik + B_kj`.
    pub fn mul(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.cols != other.rows {
            return Err(TropError::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = TropScalar::NegInf;
                for k in 0..self.cols {
                    let term = self.get(i, k).otimes(other.get(k, j));
                    if term > acc {
                        acc = term;
                    }
                }
                data.push(acc);
            }
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `A x` for a column vector `x`.
    pub fn mul_column(&self, x: &TropVector) -> Result<TropVector> {
        let x = TropMatrix::from_vector(&x.clone().with_orientation(Orientation::Column));
        Ok(self.mul(&x)?.col(0))
    }

    /// `x A` for a row vector `x`.
    pub fn row_mul(&self, x: &TropVector) -> Result<TropVector> {
        let x = TropMatrix::from_vector(&x.clone().with_orientation(Orientation::Row));
        Ok(x.mul(self)?.row(0))
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> TropMatrix {
        assert_eq!(perm.len(), self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            for (j, &p) in perm.iter().enumerate() {
                out.set(i, j, self.get(i, p).clone());
            }
        }
        out
    }
}

impl fmt::Display for TropMatrix {
    /// The shared text format: `rows cols`, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}
