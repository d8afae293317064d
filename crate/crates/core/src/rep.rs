//! Matrix representations of structure-constant Lie algebras and their combinators.

use std::collections::VecDeque;

use crate::error::{AdoError, Result};
use crate::lie::{self, LieAlgebra, LieHom};
use crate::linalg::{self, kernel_of_columns, RationalMatrix, SparseVec, Subspace};

/// One square matrix per basis element of `algebra`, all acting on `Q^space_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    space_dim: usize,
    matrices: Vec<RationalMatrix>,
}

impl Representation {
    /// Shape-checked constructor; the homomorphism property is checked separately
    /// by [`Representation::is_homomorphism`].
    pub fn new(algebra: LieAlgebra, space_dim: usize, matrices: Vec<RationalMatrix>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(AdoError::DimensionMismatch(format!(
                "{} matrices for an algebra of dimension {}",
                matrices.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = matrices.iter().find(|m| m.rows() != space_dim || m.cols() != space_dim) {
            return Err(AdoError::DimensionMismatch(format!(
                "{}x{} matrix in a representation on dimension {space_dim}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Self {
            algebra,
            space_dim,
            matrices,
        })
    }

    pub fn zero(algebra: &LieAlgebra, space_dim: usize) -> Self {
        Self {
            algebra: algebra.clone(),
            space_dim,
            matrices: vec![RationalMatrix::zeros(space_dim, space_dim); algebra.dim()],
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &RationalMatrix {
        &self.matrices[i]
    }

    fn same_algebra(&self, other: &Representation) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(AdoError::AlgebraMismatch);
        }
        Ok(())
    }
}

/// `Σ x_i ρ(e_i)`
pub fn element_action(rho: &Representation, x: &SparseVec) -> RationalMatrix {
    assert!(x.support_bound() <= rho.algebra.dim(), "element outside the algebra");
    linalg::linear_combination(rho.space_dim, rho.space_dim, x, &rho.matrices)
}

/// `ρ(e_i) = ad e_i` on the algebra itself.
pub fn adjoint(l: &LieAlgebra) -> Representation {
    let matrices = (0..l.dim()).map(|i| l.ad_matrix(&SparseVec::unit(i))).collect();
    Representation {
        algebra: l.clone(),
        space_dim: l.dim(),
        matrices,
    }
}

pub fn direct_sum(rho: &Representation, tau: &Representation) -> Result<Representation> {
    rho.same_algebra(tau)?;
    Ok(Representation {
        algebra: rho.algebra.clone(),
        space_dim: rho.space_dim + tau.space_dim,
        matrices: rho
            .matrices
            .iter()
            .zip(&tau.matrices)
            .map(|(a, b)| a.block_diag(b))
            .collect(),
    })
}

/// `(ρ ⊗ τ)(x) = ρ(x) ⊗ 1 + 1 ⊗ τ(x)`
pub fn tensor_product(rho: &Representation, tau: &Representation) -> Result<Representation> {
    rho.same_algebra(tau)?;
    let id_v = RationalMatrix::identity(rho.space_dim);
    let id_w = RationalMatrix::identity(tau.space_dim);
    let matrices = rho
        .matrices
        .iter()
        .zip(&tau.matrices)
        .map(|(a, b)| {
            linalg::kronecker(a, &id_w)
                .add(&linalg::kronecker(&id_v, b))
                .expect("kronecker shapes agree")
        })
        .collect();
    Ok(Representation {
        algebra: rho.algebra.clone(),
        space_dim: rho.space_dim * tau.space_dim,
        matrices,
    })
}

/// `ρ^{⊗k}` for `k >= 1`.
pub fn tensor_power(rho: &Representation, k: usize) -> Representation {
    assert!(k >= 1, "tensor power must be positive");
    let mut out = rho.clone();
    for _ in 1..k {
        out = tensor_product(&out, rho).expect("same algebra");
    }
    out
}

/// Pullback `x ↦ ρ(φ(x))` of a representation of `φ.target` to `φ.source`.
pub fn restrict_along(rho: &Representation, phi: &LieHom) -> Result<Representation> {
    if phi.target() != &rho.algebra {
        return Err(AdoError::AlgebraMismatch);
    }
    let matrices = phi
        .matrix()
        .columns()
        .iter()
        .map(|image| element_action(rho, image))
        .collect();
    Ok(Representation {
        algebra: phi.source().clone(),
        space_dim: rho.space_dim,
        matrices,
    })
}

/// `{x : ρ(x) = 0}`
pub fn rep_kernel(rho: &Representation) -> Subspace {
    let columns: Vec<SparseVec> = rho.matrices.iter().map(RationalMatrix::vectorize).collect();
    kernel_of_columns(rho.algebra.dim(), &columns)
}

pub fn is_faithful(rho: &Representation) -> bool {
    rep_kernel(rho).is_zero()
}

/// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on every basis pair.
pub fn is_homomorphism(rho: &Representation) -> bool {
    let n = rho.algebra.dim();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let lhs = element_action(rho, &rho.algebra.bracket_basis(i, j));
            let rhs = rho.matrices[i]
                .commutator(&rho.matrices[j])
                .expect("square matrices of equal size");
            lhs == rhs
        })
    })
}

/// True iff the associative algebra generated by `ρ(L)` is nilpotent.
///
/// Walks the chain `V ⊇ ρ(L)V ⊇ ρ(L)²V ⊇ …`: its `k`-th term is the image of
/// the span of all `k`-fold products, so it reaches zero exactly when those
/// products all vanish. A repeated nonzero term means it never will.
pub fn is_nilpotent_rep(rho: &Representation) -> bool {
    let mut current = Subspace::full(rho.space_dim);
    loop {
        if current.is_zero() {
            return true;
        }
        let mut images = Vec::new();
        for m in &rho.matrices {
            for b in current.basis() {
                images.push(m.mul_vec(b).expect("vector in the space"));
            }
        }
        let next = Subspace::span(rho.space_dim, images);
        if next.dim() == current.dim() {
            return false;
        }
        current = next;
    }
}

/// Length of the chain `V ⊋ ρ(L)V ⊋ …` down to zero, if the representation is nilpotent.
pub fn nilpotency_length(rho: &Representation) -> Option<usize> {
    let mut current = Subspace::full(rho.space_dim);
    let mut steps = 0;
    while !current.is_zero() {
        let images: Vec<SparseVec> = rho
            .matrices
            .iter()
            .flat_map(|m| current.basis().iter().map(move |b| m.mul_vec(b).expect("in space")))
            .collect();
        let next = Subspace::span(rho.space_dim, images);
        if next.dim() == current.dim() {
            return None;
        }
        current = next;
        steps += 1;
    }
    Some(steps)
}

/// Matrices of the restriction of `ρ` to an invariant subspace, in its canonical basis.
fn restrict_to_invariant(rho: &Representation, carrier: &Subspace) -> Option<Vec<RationalMatrix>> {
    let m = carrier.dim();
    rho.matrices
        .iter()
        .map(|a| {
            let columns: Option<Vec<SparseVec>> = carrier
                .basis()
                .iter()
                .map(|b| carrier.coordinates(&a.mul_vec(b).expect("in space")))
                .collect();
            columns.map(|cols| RationalMatrix::from_columns(m, &cols))
        })
        .collect()
}

/// For central `z`, the submodule `Ker ρ(z)` as a module over `S/⟨z⟩`.
///
/// Returns the carrier and the induced representation in the carrier's echelon
/// coordinates. The quotient algebra is [`lie::quotient`] of `S` by `span{z}`.
pub fn kernel_submodule(rho: &Representation, z: &SparseVec) -> Result<(Subspace, Representation)> {
    let s = &rho.algebra;
    if z.is_zero() {
        return Err(AdoError::NotCentral("zero element spans no ideal".into()));
    }
    if !lie::is_central(s, z) {
        return Err(AdoError::NotCentral(format!("element is not central in {}", s.name())));
    }
    let rz = element_action(rho, z);
    for (i, m) in rho.matrices.iter().enumerate() {
        if !rz.commutator(m)?.is_zero() {
            return Err(AdoError::NotCentral(format!("ρ(z) does not commute with ρ(e{i})")));
        }
    }
    let carrier = linalg::kernel_basis(&rz);
    let restricted = restrict_to_invariant(rho, &carrier)
        .ok_or_else(|| AdoError::NotCentral("kernel of ρ(z) is not invariant".into()))?;

    let q = lie::quotient(s, &Subspace::span(s.dim(), [z.clone()]))?;
    let matrices = q.complement.iter().map(|&c| restricted[c].clone()).collect();
    let induced = Representation {
        algebra: q.algebra,
        space_dim: carrier.dim(),
        matrices,
    };
    Ok((carrier, induced))
}

/// Smallest invariant subspace containing `v`, with `ρ` restricted to it.
pub fn cyclic_submodule(rho: &Representation, v: &SparseVec) -> (Subspace, Representation) {
    let mut span = Subspace::zero(rho.space_dim);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(w) = queue.pop_front() {
        if span.contains(&w) {
            continue;
        }
        span = span.sum(&Subspace::span(rho.space_dim, [w.clone()]));
        for m in &rho.matrices {
            queue.push_back(m.mul_vec(&w).expect("vector in the space"));
        }
    }
    let matrices = restrict_to_invariant(rho, &span).expect("closure is invariant");
    let sub = Representation {
        algebra: rho.algebra.clone(),
        space_dim: span.dim(),
        matrices,
    };
    (span, sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::rational::{int, one};

    fn unit_matrix(n: usize, r: usize, c: usize) -> RationalMatrix {
        RationalMatrix::from_entries(n, n, [(r, c, one())]).unwrap()
    }

    #[test]
    fn adjoint_examples() {
        let ad = adjoint(&LieAlgebra::abelian(3));
        assert!(ad.matrices().iter().all(RationalMatrix::is_zero));

        let h3 = fixtures::heisenberg3();
        let ad = adjoint(&h3);
        assert_eq!(ad.matrix(0), &unit_matrix(3, 2, 1));
        assert!(ad.matrix(2).is_zero());
        assert_eq!(rep_kernel(&ad), lie::center(&h3));
        assert!(is_homomorphism(&ad));
    }

    #[test]
    fn direct_sum_examples() {
        let std = fixtures::heisenberg3_standard();
        let ad = adjoint(std.algebra());
        let zero = Representation::zero(std.algebra(), 2);
        assert_eq!(rep_kernel(&direct_sum(&ad, &zero).unwrap()), rep_kernel(&ad));
        let sum = direct_sum(&std, &Representation::zero(std.algebra(), 2)).unwrap();
        assert_eq!(sum.space_dim(), 5);
        assert!(rep_kernel(&direct_sum(&ad, &std).unwrap()).is_zero());
        let other = Representation::zero(&LieAlgebra::abelian(3), 1);
        assert_eq!(direct_sum(&std, &other), Err(AdoError::AlgebraMismatch));
    }

    #[test]
    fn tensor_examples() {
        let std = fixtures::heisenberg3_standard();
        let trivial = Representation::zero(std.algebra(), 1);
        assert_eq!(tensor_product(&std, &trivial).unwrap().matrices(), std.matrices());
        let sq = tensor_product(&std, &std).unwrap();
        assert_eq!(sq.space_dim(), 9);
        assert!(is_homomorphism(&sq));
        assert!(is_nilpotent_rep(&sq));
        for i in 0..3 {
            let n = linalg::nilpotency_index(std.matrix(i)).unwrap();
            assert_eq!(linalg::nilpotency_index(sq.matrix(i)).unwrap(), 2 * n - 1);
        }
    }

    #[test]
    fn restriction_examples() {
        let std = fixtures::heisenberg3_standard();
        let id = LieHom::identity(std.algebra());
        assert_eq!(restrict_along(&std, &id).unwrap(), std);

        let a2 = LieAlgebra::abelian(2);
        let zero_map = LieHom::new(a2.clone(), std.algebra().clone(), RationalMatrix::zeros(3, 2)).unwrap();
        let r = restrict_along(&std, &zero_map).unwrap();
        assert!(r.matrices().iter().all(RationalMatrix::is_zero));
        assert_eq!(r.algebra(), &a2);
    }

    #[test]
    fn kernel_examples() {
        let h3 = fixtures::heisenberg3();
        assert_eq!(rep_kernel(&Representation::zero(&h3, 2)), Subspace::full(3));
        assert!(rep_kernel(&fixtures::heisenberg3_standard()).is_zero());
    }

    #[test]
    fn homomorphism_examples() {
        let std = fixtures::heisenberg3_standard();
        assert!(is_homomorphism(&std));
        let mut bad = std.matrices().to_vec();
        bad[2] = bad[2].scale(&int(2));
        let bad = Representation::new(std.algebra().clone(), 3, bad).unwrap();
        assert!(!is_homomorphism(&bad));
    }

    #[test]
    fn nilpotency_examples() {
        let h3 = fixtures::heisenberg3();
        assert!(is_nilpotent_rep(&Representation::zero(&h3, 4)));
        assert!(is_nilpotent_rep(&fixtures::heisenberg3_standard()));
        assert_eq!(nilpotency_length(&fixtures::heisenberg3_standard()), Some(3));
        let a1 = LieAlgebra::abelian(1);
        let id = Representation::new(a1, 1, vec![RationalMatrix::identity(1)]).unwrap();
        assert!(!is_nilpotent_rep(&id));
    }

    #[test]
    fn kernel_submodule_examples() {
        let h3 = fixtures::heisenberg3();
        let std = fixtures::heisenberg3_standard();
        let (carrier, induced) = kernel_submodule(&std, &SparseVec::unit(2)).unwrap();
        assert_eq!(
            carrier,
            Subspace::span(3, [SparseVec::unit(0), SparseVec::unit(1)])
        );
        assert_eq!(induced.space_dim(), 2);
        assert_eq!(induced.algebra().dim(), 2);
        assert!(induced.algebra().is_abelian());
        assert!(is_homomorphism(&induced));
        assert!(is_nilpotent_rep(&induced));
        // e0 acts as E12 on span{b1, b2}
        assert_eq!(induced.matrix(0), &unit_matrix(2, 0, 1));

        let zero = Representation::zero(&h3, 2);
        let (carrier, induced) = kernel_submodule(&zero, &SparseVec::unit(2)).unwrap();
        assert!(carrier.is_full());
        assert!(induced.matrices().iter().all(RationalMatrix::is_zero));

        assert!(matches!(
            kernel_submodule(&std, &SparseVec::unit(0)),
            Err(AdoError::NotCentral(_))
        ));
    }

    #[test]
    fn cyclic_examples() {
        let std = fixtures::heisenberg3_standard();
        let (span, sub) = cyclic_submodule(&std, &SparseVec::new());
        assert!(span.is_zero());
        assert_eq!(sub.space_dim(), 0);

        let (_, sub) = cyclic_submodule(&std, &SparseVec::unit(0));
        assert_eq!(sub.space_dim(), 1);
        assert!(sub.matrices().iter().all(RationalMatrix::is_zero));

        let (span, sub) = cyclic_submodule(&std, &SparseVec::unit(2));
        assert!(span.is_full());
        assert_eq!(sub, std);
    }

    #[test]
    fn element_action_examples() {
        let std = fixtures::heisenberg3_standard();
        assert_eq!(element_action(&std, &SparseVec::unit(1)), std.matrix(1).clone());
        assert!(element_action(&std, &SparseVec::new()).is_zero());
        let x = SparseVec::from_pairs([(0, int(1)), (1, int(1))]);
        assert_eq!(
            element_action(&std, &x),
            unit_matrix(3, 0, 1).add(&unit_matrix(3, 1, 2)).unwrap()
        );
    }
}
