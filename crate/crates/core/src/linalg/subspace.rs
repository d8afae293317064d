use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::rational::Rational;
use super::sparse::SparseVec;

/// Gauss-Jordan elimination to reduced row-echelon form.
///
/// Returns the nonzero rows, ordered by pivot column, each with a unit pivot
/// and zeros in every other pivot column. The result is the unique RREF of the
/// row space, so the order rows are visited in only affects speed.
pub(crate) fn reduced_rows(rows: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut buckets: BTreeMap<usize, Vec<SparseVec>> = BTreeMap::new();
    for row in rows {
        if let Some((c, _)) = row.leading() {
            buckets.entry(c).or_default().push(row);
        }
    }

    let mut echelon: Vec<SparseVec> = Vec::new();
    while let Some((_, mut group)) = buckets.pop_first() {
        // sparsest row as pivot, first one on ties
        let (idx, _) = group
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.nnz())
            .expect("bucket is never empty");
        let pivot = group.swap_remove(idx);
        let lead = pivot.leading().expect("nonzero row").1.clone();
        let pivot = if lead.is_one() { pivot } else { pivot.scale(&lead.recip()) };
        for row in group {
            let c = -row.leading().expect("nonzero row").1.clone();
            let reduced = row.add_scaled(&pivot, &c);
            if let Some((nc, _)) = reduced.leading() {
                buckets.entry(nc).or_default().push(reduced);
            }
        }
        echelon.push(pivot);
    }

    for i in (0..echelon.len()).rev() {
        let p = echelon[i].leading().expect("nonzero row").0;
        let (head, tail) = echelon.split_at_mut(i);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let c = row.get(p);
            if !c.is_zero() {
                *row = row.add_scaled(pivot_row, &-c);
            }
        }
    }
    echelon
}

/// A linear subspace of `Q^ambient`, held in canonical form: its basis vectors
/// are the rows of a reduced row-echelon matrix, so equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(SparseVec::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let basis = reduced_rows(vectors);
        debug_assert!(basis.iter().all(|v| v.support_bound() <= ambient));
        let pivots = basis.iter().map(|v| v.leading().expect("nonzero").0).collect();
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical (echelon) basis vectors.
    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; the matching unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient, &self.basis)
    }

    fn pivot_positions(&self) -> HashMap<usize, usize> {
        self.pivots.iter().enumerate().map(|(r, &p)| (p, r)).collect()
    }

    /// Splits `v` into its coordinates along the basis and a remainder that
    /// vanishes on every pivot coordinate.
    pub fn decompose(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let positions = self.pivot_positions();
        let mut coords = Vec::new();
        let mut rest = v.clone();
        for (i, c) in v.iter() {
            if let Some(&r) = positions.get(&i) {
                coords.push((r, c.clone()));
                rest = rest.add_scaled(&self.basis[r], &-c.clone());
            }
        }
        (SparseVec::from_pairs(coords), rest)
    }

    /// Remainder of `v` modulo the subspace (zero exactly when `v` lies in it).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.decompose(v).1
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let (coords, rest) = self.decompose(v);
        rest.is_zero().then_some(coords)
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (r, c) in coords.iter() {
            out = out.add_scaled(&self.basis[r], c);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    /// Intersection, computed from the linear relations between the two bases.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "intersection across ambient spaces");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let k = self.dim();
        let columns: Vec<SparseVec> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(SparseVec::neg))
            .collect();
        let relations = kernel_of_columns(k + other.dim(), &columns);
        Subspace::span(
            self.ambient,
            relations.basis.iter().map(|rel| {
                let head = rel.window(0, k);
                self.combine(&head)
            }),
        )
    }
}

/// Null space of the matrix whose columns are `columns` (row indices may be huge and sparse).
pub(crate) fn kernel_of_columns(ncols: usize, columns: &[SparseVec]) -> Subspace {
    let mut rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter() {
            rows.entry(r).or_default().push((c, v.clone()));
        }
    }
    let rows = rows.into_values().map(SparseVec::from_sorted_unchecked);
    kernel_from_rows(ncols, rows)
}

pub(crate) fn kernel_from_rows(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Subspace {
    let reduced = reduced_rows(rows);
    let mut is_pivot = vec![false; ncols];
    for r in &reduced {
        is_pivot[r.leading().expect("nonzero").0] = true;
    }
    // column f of the reduced rows, for every free f
    let mut free_cols: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for (f, free) in is_pivot.iter().enumerate() {
        if !free {
            free_cols.insert(f, Vec::new());
        }
    }
    for r in &reduced {
        let p = r.leading().expect("nonzero").0;
        for (c, v) in r.iter() {
            if let Some(col) = free_cols.get_mut(&c) {
                col.push((p, -v.clone()));
            }
        }
    }
    let vectors = free_cols.into_iter().map(|(f, mut entries)| {
        entries.push((f, Rational::one()));
        SparseVec::from_pairs(entries)
    });
    Subspace::span(ncols, vectors)
}
