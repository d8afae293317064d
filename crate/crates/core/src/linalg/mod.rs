//! Exact rational sparse linear algebra.

mod matrix;
pub mod rational;
mod sparse;
mod subspace;

pub use matrix::RationalMatrix;
pub use rational::Rational;
pub use sparse::SparseVec;
pub use subspace::Subspace;

pub(crate) use sparse::Accumulator;
pub(crate) use subspace::{kernel_from_rows, kernel_of_columns, reduced_rows};

use num_traits::Zero;

use crate::error::{AdoError, Result};

/// Reduced row-echelon form of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; zero rows sit at the bottom.
    pub matrix: RationalMatrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

pub fn rref(m: &RationalMatrix) -> Rref {
    let rows = reduced_rows(m.row_vecs().iter().cloned());
    let pivot_cols: Vec<usize> = rows.iter().map(|r| r.leading().expect("nonzero").0).collect();
    let rank = rows.len();
    let mut all = rows;
    all.resize(m.rows(), SparseVec::new());
    Rref {
        matrix: RationalMatrix::from_rows(m.cols(), all),
        pivot_cols,
        rank,
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    reduced_rows(m.row_vecs().iter().cloned()).len()
}

pub fn kernel_basis(m: &RationalMatrix) -> Subspace {
    kernel_from_rows(m.cols(), m.row_vecs().iter().cloned())
}

/// Column space of `m`.
pub fn image(m: &RationalMatrix) -> Subspace {
    Subspace::span(m.rows(), m.columns())
}

/// Some `x` with `a * x = b`, free variables set to zero; `None` if inconsistent.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if a.rows() != b.len() {
        return Err(AdoError::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    Ok(solve_sparse(a, &SparseVec::from_dense(b)).map(|x| x.to_dense(a.cols())))
}

pub(crate) fn solve_sparse(a: &RationalMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = a.cols();
    let augmented = a.row_vecs().iter().enumerate().map(|(r, row)| {
        let rhs = b.get(r);
        if rhs.is_zero() {
            row.clone()
        } else {
            row.add(&SparseVec::from_pairs([(n, rhs)]))
        }
    });
    let reduced = reduced_rows(augmented);
    let mut x = Vec::new();
    for row in &reduced {
        let p = row.leading().expect("nonzero").0;
        if p == n {
            return None;
        }
        let v = row.get(n);
        if !v.is_zero() {
            x.push((p, v));
        }
    }
    Some(SparseVec::from_pairs(x))
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &RationalMatrix) -> Option<RationalMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.cols();
    let augmented = m
        .row_vecs()
        .iter()
        .enumerate()
        .map(|(r, row)| row.add(&SparseVec::unit(n + r)));
    let reduced = reduced_rows(augmented);
    if reduced.len() < n || reduced.iter().enumerate().any(|(i, r)| r.leading().map(|l| l.0) != Some(i)) {
        return None;
    }
    Some(RationalMatrix::from_rows(
        n,
        reduced.into_iter().map(|r| r.window(n, n)).collect(),
    ))
}

/// Kronecker product: entry `(i*rB + k, j*cB + l)` is `A[i,j] * B[k,l]`.
pub fn kronecker(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let (rb, cb) = (b.rows(), b.cols());
    let mut rows = Vec::with_capacity(a.rows() * rb);
    for i in 0..a.rows() {
        let arow = a.row(i);
        for k in 0..rb {
            let brow = b.row(k);
            let mut entries = Vec::with_capacity(arow.nnz() * brow.nnz());
            for (j, x) in arow.iter() {
                for (l, y) in brow.iter() {
                    entries.push((j * cb + l, x * y));
                }
            }
            rows.push(SparseVec::from_sorted_unchecked(entries));
        }
    }
    RationalMatrix::from_rows(a.cols() * cb, rows)
}

/// Finds `h` with `h * f = g`, given `Ker f ⊆ Ker g`.
///
/// `h` sends `f(e_p)` to `g(e_p)` for the pivot columns `p` of `f` (a basis of
/// `Im f`) and kills the standard complement of `Im f`.
pub fn factor_through(f: &RationalMatrix, g: &RationalMatrix) -> Result<RationalMatrix> {
    if !f.is_square() || f.rows() != g.rows() || f.cols() != g.cols() {
        return Err(AdoError::DimensionMismatch(format!(
            "factor_through expects equal square matrices, got {}x{} and {}x{}",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols()
        )));
    }
    let n = f.rows();
    let ker_f = kernel_basis(f);
    for k in ker_f.basis() {
        if !g.mul_vec(k)?.is_zero() {
            return Err(AdoError::KernelNotContained);
        }
    }

    let f_cols = f.columns();
    let g_cols = g.columns();
    let pivots = rref(f).pivot_cols;
    let im_f = Subspace::span(n, pivots.iter().map(|&p| f_cols[p].clone()));
    let mut source: Vec<SparseVec> = pivots.iter().map(|&p| f_cols[p].clone()).collect();
    let mut target: Vec<SparseVec> = pivots.iter().map(|&p| g_cols[p].clone()).collect();
    for c in im_f.non_pivots() {
        source.push(SparseVec::unit(c));
        target.push(SparseVec::new());
    }
    let basis = RationalMatrix::from_columns(n, &source);
    let basis_inv = inverse(&basis).expect("image basis plus complement is invertible");
    let h = RationalMatrix::from_columns(n, &target).mul(&basis_inv)?;
    debug_assert_eq!(h.mul(f)?, *g);
    Ok(h)
}

/// Smallest `n >= 1` with `m^n = 0`.
pub fn nilpotency_index(m: &RationalMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(AdoError::DimensionMismatch(format!(
            "nilpotency index of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let mut power = m.clone();
    for n in 1..=m.rows().max(1) {
        if power.is_zero() {
            return Ok(n);
        }
        power = power.mul(m)?;
    }
    Err(AdoError::NotNilpotent("matrix power at its size is nonzero".into()))
}

/// Sum of `coeffs[i] * matrices[i]`.
pub(crate) fn linear_combination(
    rows: usize,
    cols: usize,
    coeffs: &SparseVec,
    matrices: &[RationalMatrix],
) -> RationalMatrix {
    let mut acc = Accumulator::new(cols);
    let data = (0..rows)
        .map(|r| {
            for (i, c) in coeffs.iter() {
                acc.add_scaled(matrices[i].row(r), c);
            }
            acc.take()
        })
        .collect();
    RationalMatrix::from_rows(cols, data)
}
