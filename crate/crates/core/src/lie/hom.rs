use crate::error::{AdoError, Result};
use crate::linalg::{self, RationalMatrix, SparseVec, Subspace};

use super::LieAlgebra;

/// Linear map between Lie algebras that preserves brackets, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieHom {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: RationalMatrix,
}

impl LieHom {
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: RationalMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(AdoError::DimensionMismatch(format!(
                "homomorphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let images = matrix.columns();
        for i in 0..source.dim() {
            for j in i + 1..source.dim() {
                let lhs = matrix.mul_vec(&source.bracket_basis(i, j))?;
                let rhs = target.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(AdoError::NotAHomomorphism(format!(
                        "image of [e{i}, e{j}] differs from the bracket of the images"
                    )));
                }
            }
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(algebra: &LieAlgebra) -> Self {
        Self {
            source: algebra.clone(),
            target: algebra.clone(),
            matrix: RationalMatrix::identity(algebra.dim()),
        }
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.matrix.mul_vec(x).expect("vector lives in the source")
    }

    pub fn kernel(&self) -> Subspace {
        linalg::kernel_basis(&self.matrix)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &LieHom) -> Result<LieHom> {
        if other.source != self.target {
            return Err(AdoError::AlgebraMismatch);
        }
        Ok(Self {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: other.matrix.mul(&self.matrix)?,
        })
    }
}
