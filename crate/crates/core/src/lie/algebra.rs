use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{AdoError, Result};
use crate::linalg::{Accumulator, RationalMatrix, SparseVec};

/// Positive integer degree for every basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    degrees: Vec<u32>,
}

impl Grading {
    pub fn new(degrees: Vec<u32>) -> Self {
        Self { degrees }
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

/// A Jacobi identity failure on the basis triple `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: SparseVec,
}

/// Finite-dimensional Lie algebra over the rationals given by structure constants.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the others follow from
/// antisymmetry. Omitted pairs bracket to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
    grading: Option<Grading>,
}

impl LieAlgebra {
    /// Builds an algebra from `[e_i, e_j]` values with `i < j`. Jacobi is not
    /// checked here; see [`LieAlgebra::validate`].
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        brackets: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j {
                return Err(AdoError::InvalidAlgebra(format!(
                    "bracket ({i}, {j}) must have left < right"
                )));
            }
            if j >= dim || v.support_bound() > dim {
                return Err(AdoError::InvalidAlgebra(format!(
                    "bracket ({i}, {j}) refers to a basis index outside dimension {dim}"
                )));
            }
            if table.contains_key(&(i, j)) {
                return Err(AdoError::InvalidAlgebra(format!("bracket ({i}, {j}) given twice")));
            }
            if !v.is_zero() {
                table.insert((i, j), v);
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
            brackets: table,
            grading: None,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(format!("abelian{dim}"), dim, []).expect("no brackets")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(AdoError::InvalidAlgebra(format!(
                "{} basis labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Attaches a grading after checking that brackets respect it.
    pub fn with_grading(mut self, degrees: Vec<u32>) -> Result<Self> {
        let grading = Grading::new(degrees);
        if !self.verify_grading(&grading) {
            return Err(AdoError::InvalidGrading(format!(
                "degrees {:?} are not additive on brackets of {}",
                grading.degrees(),
                self.name
            )));
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn without_grading(mut self) -> Self {
        self.grading = None;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    /// Stored nonzero brackets `((i, j), [e_i, e_j])` with `i < j`, in index order.
    pub fn structure_constants(&self) -> impl Iterator<Item = ((usize, usize), &SparseVec)> + '_ {
        self.brackets.iter().map(|(k, v)| (*k, v))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => SparseVec::new(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self.brackets.get(&(j, i)).map(SparseVec::neg).unwrap_or_default(),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(self.dim);
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                if i == j {
                    continue;
                }
                let c = a * b;
                if i < j {
                    if let Some(w) = self.brackets.get(&(i, j)) {
                        acc.add_scaled(w, &c);
                    }
                } else if let Some(w) = self.brackets.get(&(j, i)) {
                    acc.add_scaled(w, &-c);
                }
            }
        }
        acc.take()
    }

    /// Matrix of `ad x = [x, .]`.
    pub fn ad_matrix(&self, x: &SparseVec) -> RationalMatrix {
        let cols: Vec<SparseVec> = (0..self.dim)
            .map(|j| self.bracket(x, &SparseVec::unit(j)))
            .collect();
        RationalMatrix::from_columns(self.dim, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Every basis triple violating the Jacobi identity; empty for a Lie algebra.
    pub fn validate(&self) -> Vec<JacobiViolation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let r = self
                        .bracket(&ei, &self.bracket_basis(j, k))
                        .add(&self.bracket(&ej, &self.bracket_basis(k, i)))
                        .add(&self.bracket(&ek, &self.bracket_basis(i, j)));
                    if !r.is_zero() {
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: r,
                        });
                    }
                }
            }
        }
        out
    }

    /// True iff `[L_a, L_b] ⊆ L_{a+b}` on basis elements and every degree is positive.
    pub fn verify_grading(&self, grading: &Grading) -> bool {
        let deg = grading.degrees();
        if deg.len() != self.dim || deg.iter().any(|d| d.is_zero()) {
            return false;
        }
        self.brackets
            .iter()
            .all(|((i, j), v)| v.iter().all(|(k, _)| deg[k] == deg[*i] + deg[*j]))
    }
}
