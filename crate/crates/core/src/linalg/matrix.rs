use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use super::sparse::{Accumulator, SparseVec};
use crate::error::{AdoError, Result};

/// Sparse exact-rational matrix.
///
/// Stored row by row; every row is a canonical [`SparseVec`], so two matrices
/// are equal exactly when their row-major entry lists are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        Self {
            rows: n,
            cols: n,
            data: values
                .iter()
                .enumerate()
                .map(|(i, v)| SparseVec::from_pairs([(i, v.clone())]))
                .collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets. Duplicates are summed, zeros dropped.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(AdoError::DimensionMismatch(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            buckets[r].push((c, v));
        }
        Ok(Self {
            rows,
            cols,
            data: buckets.into_iter().map(SparseVec::from_pairs).collect(),
        })
    }

    /// Dense construction, convenient for small literals.
    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged dense matrix");
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::from_dense(&dense)
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.support_bound() <= cols));
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col.iter() {
                buckets[r].push((c, v.clone()));
            }
        }
        Self {
            rows,
            cols: columns.len(),
            data: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
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

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v)))
    }

    pub fn column(&self, c: usize) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let v = row.get(c);
                    (!v.is_zero()).then_some((r, v))
                })
                .collect(),
        )
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn transpose(&self) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.entries() {
            buckets[c].push((r, v.clone()));
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(AdoError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = Accumulator::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row.iter() {
                    acc.add_scaled(&other.data[k], a);
                }
                acc.take()
            })
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &SparseVec) -> Result<SparseVec> {
        if v.support_bound() > self.cols {
            return Err(AdoError::DimensionMismatch(format!(
                "vector does not fit a matrix with {} columns",
                self.cols
            )));
        }
        Ok(SparseVec::from_sorted_unchecked(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let x = row.dot(v);
                    (!x.is_zero()).then_some((r, x))
                })
                .collect(),
        ))
    }

    fn check_same_shape(&self, other: &RationalMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AdoError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, other: &RationalMatrix, c: &Rational) -> Result<RationalMatrix> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_scaled(b, c))
                .collect(),
        })
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> RationalMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &RationalMatrix) -> RationalMatrix {
        let (r0, c0) = (self.rows, self.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().map(|row| row.map_indices(|c| c + c0)));
        Self {
            rows: r0 + other.rows,
            cols: c0 + other.cols,
            data,
        }
    }

    /// Sub-block of rows `[r0, r0 + nr)` and columns `[c0, c0 + nc)`.
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> RationalMatrix {
        Self {
            rows: nr,
            cols: nc,
            data: self.data[r0..r0 + nr].iter().map(|row| row.window(c0, nc)).collect(),
        }
    }

    /// Stacks all entries into one vector indexed by `row * cols + col`.
    pub fn vectorize(&self) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            self.entries()
                .map(|(r, c, v)| (r * self.cols + c, v.clone()))
                .collect(),
        )
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix({}x{}", self.rows, self.cols)?;
        if self.rows * self.cols <= 64 {
            for row in &self.data {
                let dense: Vec<String> = row.to_dense(self.cols).iter().map(format_rational).collect();
                write!(f, "\n  [{}]", dense.join(", "))?;
            }
        } else {
            write!(f, ", nnz={}", self.nnz())?;
        }
        write!(f, ")")
    }
}
