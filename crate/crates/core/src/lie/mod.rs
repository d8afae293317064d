//! Structure-constant Lie algebras and the ideal machinery used by the induction.

mod algebra;
mod hom;

pub use algebra::{Grading, JacobiViolation, LieAlgebra};
pub use hom::LieHom;

use crate::error::{AdoError, Result};
use crate::linalg::{kernel_of_columns, RationalMatrix, SparseVec, Subspace};

/// `span{[a, b] : a ∈ A, b ∈ B}`
pub fn bracket_subspaces(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut vectors = Vec::with_capacity(a.dim() * b.dim());
    for x in a.basis() {
        for y in b.basis() {
            vectors.push(l.bracket(x, y));
        }
    }
    Subspace::span(l.dim(), vectors)
}

/// Centralizer of the whole algebra: kernel of `x ↦ ([x, e_0], …, [x, e_{n-1}])`.
pub fn center(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    // column a stacks [e_a, e_j] for all j into one long vector
    let columns: Vec<SparseVec> = (0..n)
        .map(|a| {
            let mut entries = Vec::new();
            for j in 0..n {
                for (k, v) in l.bracket_basis(a, j).iter() {
                    entries.push((j * n + k, v.clone()));
                }
            }
            SparseVec::from_pairs(entries)
        })
        .collect();
    kernel_of_columns(n, &columns)
}

pub fn is_central(l: &LieAlgebra, x: &SparseVec) -> bool {
    (0..l.dim()).all(|j| l.bracket(x, &SparseVec::unit(j)).is_zero())
}

/// `L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ …`, stopping at zero or when a term repeats.
pub fn lower_central_series(l: &LieAlgebra) -> Vec<Subspace> {
    let full = Subspace::full(l.dim());
    let mut series = vec![full.clone()];
    loop {
        let last = series.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = bracket_subspaces(l, &full, last);
        if next.dim() == last.dim() {
            break;
        }
        series.push(next);
    }
    series
}

/// Smallest `c` with the `(c+1)`-th lower central term zero.
pub fn nilpotency_class(l: &LieAlgebra) -> Result<usize> {
    let series = lower_central_series(l);
    let last = series.last().expect("nonempty");
    if !last.is_zero() {
        return Err(AdoError::NotNilpotent(format!(
            "lower central series of {} stabilizes in dimension {}",
            l.name(),
            last.dim()
        )));
    }
    Ok(series.len() - 1)
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    nilpotency_class(l).is_ok()
}

/// `[e_i, b] ∈ I` for every basis element `e_i` and every basis vector `b` of `I`.
pub fn is_ideal(l: &LieAlgebra, ideal: &Subspace) -> bool {
    ideal.ambient_dim() == l.dim()
        && ideal.basis().iter().all(|b| {
            (0..l.dim()).all(|i| ideal.contains(&l.bracket(&SparseVec::unit(i), b)))
        })
}

/// A quotient `L/I` on the complement spanned by the non-pivot coordinates of `I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub projection: LieHom,
    pub ideal: Subspace,
    /// Basis index in `L` of each quotient basis element.
    pub complement: Vec<usize>,
}

impl Quotient {
    /// Canonical preimage of a quotient element: same coordinates on the complement.
    pub fn lift(&self, x: &SparseVec) -> SparseVec {
        x.map_indices(|a| self.complement[a])
    }
}

pub fn quotient(l: &LieAlgebra, ideal: &Subspace) -> Result<Quotient> {
    if !is_ideal(l, ideal) {
        return Err(AdoError::NotAnIdeal(format!(
            "subspace of dimension {} in {}",
            ideal.dim(),
            l.name()
        )));
    }
    let complement = ideal.non_pivots();
    let mut position = vec![usize::MAX; l.dim()];
    for (a, &c) in complement.iter().enumerate() {
        position[c] = a;
    }
    // reduction modulo I leaves support on complement coordinates only
    let project = |v: &SparseVec| -> SparseVec { ideal.reduce(v).map_indices(|c| position[c]) };

    let q = complement.len();
    let mut brackets = Vec::new();
    for a in 0..q {
        for b in a + 1..q {
            let v = project(&l.bracket_basis(complement[a], complement[b]));
            if !v.is_zero() {
                brackets.push(((a, b), v));
            }
        }
    }
    let labels = complement.iter().map(|&c| l.labels()[c].clone()).collect();
    let algebra = LieAlgebra::new(format!("{}/I{}", l.name(), ideal.dim()), q, brackets)?
        .with_labels(labels)?;
    let columns: Vec<SparseVec> = (0..l.dim()).map(|j| project(&SparseVec::unit(j))).collect();
    let projection = LieHom::new(l.clone(), algebra.clone(), RationalMatrix::from_columns(q, &columns))?;
    Ok(Quotient {
        algebra,
        projection,
        ideal: ideal.clone(),
        complement,
    })
}

/// Ascending chain of ideals `0 = I_0 ⊂ I_1 ⊂ … ⊂ I_n = L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealChain {
    pub ideals: Vec<Subspace>,
}

impl IdealChain {
    /// Checks: every member an ideal, consecutive codimension 1, `[L, I_i] ⊆ I_{i-1}`.
    pub fn verify(&self, l: &LieAlgebra) -> bool {
        let full = Subspace::full(l.dim());
        self.ideals.first().is_some_and(Subspace::is_zero)
            && self.ideals.last().is_some_and(Subspace::is_full)
            && self.ideals.iter().all(|i| is_ideal(l, i))
            && self.ideals.windows(2).all(|w| {
                w[0].is_subspace_of(&w[1])
                    && w[1].dim() == w[0].dim() + 1
                    && bracket_subspaces(l, &full, &w[1]).is_subspace_of(&w[0])
            })
    }
}

/// Full central flag, refining the lower central series from the bottom up.
pub fn central_flag(l: &LieAlgebra) -> Result<IdealChain> {
    nilpotency_class(l)?;
    let series = lower_central_series(l);
    let mut current = Subspace::zero(l.dim());
    let mut ideals = vec![current.clone()];
    for term in series.iter().rev() {
        for v in term.basis() {
            if !current.contains(v) {
                current = current.sum(&Subspace::span(l.dim(), [v.clone()]));
                ideals.push(current.clone());
            }
        }
    }
    let chain = IdealChain { ideals };
    debug_assert!(chain.verify(l));
    Ok(chain)
}

/// An ideal `J ⊂ I` of codimension one with `[L, I] ⊆ J`: `J = I ∩ I_{k-1}` for
/// the least `k` with `I ⊆ I_k` in the central flag.
pub fn codim1_refinement(l: &LieAlgebra, ideal: &Subspace) -> Result<Subspace> {
    if !is_ideal(l, ideal) {
        return Err(AdoError::NotAnIdeal(format!("refinement input in {}", l.name())));
    }
    if ideal.is_zero() {
        return Err(AdoError::ZeroIdeal);
    }
    let flag = central_flag(l)?;
    let k = flag
        .ideals
        .iter()
        .position(|step| ideal.is_subspace_of(step))
        .expect("the last flag member is the whole algebra");
    let refined = ideal.intersection(&flag.ideals[k - 1]);
    debug_assert_eq!(refined.dim() + 1, ideal.dim());
    Ok(refined)
}
