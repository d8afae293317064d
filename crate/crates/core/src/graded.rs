//! Current algebras `L ⊗ tQ[t]/(t^n)`, 1-cocycles, and the graded construction of
//! faithful nilpotent representations.

use crate::error::{AdoError, Result};
use crate::lie::{LieAlgebra, LieHom};
use crate::linalg::{kernel_from_rows, rational::int, RationalMatrix, SparseVec};
use crate::rep::{self, Representation};

/// `L ⊗ tQ[t]/(t^n)` with basis `e_i ⊗ t^a` at index `(a-1)·dim L + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurrentAlgebra {
    pub base: LieAlgebra,
    pub truncation: usize,
    pub product: LieAlgebra,
}

impl CurrentAlgebra {
    pub fn index(&self, i: usize, power: usize) -> usize {
        debug_assert!(power >= 1 && power < self.truncation && i < self.base.dim());
        (power - 1) * self.base.dim() + i
    }

    /// The `t`-degree of a basis element of the product.
    pub fn power(&self, index: usize) -> usize {
        index / self.base.dim() + 1
    }
}

/// `[x ⊗ t^a, y ⊗ t^b] = [x, y] ⊗ t^{a+b}`, zero once `a + b >= n`.
pub fn current_algebra(l: &LieAlgebra, n: usize) -> CurrentAlgebra {
    assert!(n >= 2, "truncation must be at least 2");
    let d = l.dim();
    let mut brackets = Vec::new();
    for ((i, j), v) in l.structure_constants() {
        for a in 1..n {
            for b in 1..n - a {
                let shifted = v.map_indices(|k| (a + b - 1) * d + k);
                let (p, q) = ((a - 1) * d + i, (b - 1) * d + j);
                // [e_j t^a, e_i t^b] = -[e_i, e_j] t^{a+b} covers the swapped pairs
                let (p2, q2) = ((a - 1) * d + j, (b - 1) * d + i);
                if p < q {
                    brackets.push(((p, q), shifted.clone()));
                }
                if p2 < q2 {
                    brackets.push(((p2, q2), shifted.neg()));
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(d * (n - 1));
    let mut degrees = Vec::with_capacity(d * (n - 1));
    for a in 1..n {
        for label in l.labels() {
            labels.push(format!("{label}*t^{a}"));
            degrees.push(a as u32);
        }
    }
    let product = LieAlgebra::new(format!("{}*t[t]/t^{n}", l.name()), d * (n - 1), brackets)
        .and_then(|p| p.with_labels(labels))
        .and_then(|p| p.with_grading(degrees))
        .expect("current algebra of a Lie algebra is a graded Lie algebra");
    CurrentAlgebra {
        base: l.clone(),
        truncation: n,
        product,
    }
}

/// `x ↦ x ⊗ t^{deg x}` into the current algebra with `n = 1 + max degree`.
pub fn graded_embedding(l: &LieAlgebra) -> Result<(CurrentAlgebra, LieHom)> {
    let grading = l
        .grading()
        .ok_or_else(|| AdoError::InvalidGrading(format!("{} carries no grading", l.name())))?;
    if !l.verify_grading(grading) {
        return Err(AdoError::InvalidGrading(format!("grading of {} is not compatible", l.name())));
    }
    let n = 1 + grading.max_degree().max(1) as usize;
    let current = current_algebra(l, n);
    let columns: Vec<SparseVec> = (0..l.dim())
        .map(|i| SparseVec::unit(current.index(i, grading.degree(i) as usize)))
        .collect();
    let hom = LieHom::new(
        l.clone(),
        current.product.clone(),
        RationalMatrix::from_columns(current.product.dim(), &columns),
    )?;
    Ok((current, hom))
}

/// A linear map `φ: L → V` with `φ([x,y]) = ρ(x)φ(y) − ρ(y)φ(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    rep: Representation,
    map: RationalMatrix,
}

impl Cocycle {
    pub fn new(rep: Representation, map: RationalMatrix) -> Result<Self> {
        let n = rep.algebra().dim();
        if map.rows() != rep.space_dim() || map.cols() != n {
            return Err(AdoError::DimensionMismatch(format!(
                "cocycle matrix is {}x{}, expected {}x{n}",
                map.rows(),
                map.cols(),
                rep.space_dim()
            )));
        }
        let images = map.columns();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = map.mul_vec(&rep.algebra().bracket_basis(i, j))?;
                let rhs = rep
                    .matrix(i)
                    .mul_vec(&images[j])?
                    .sub(&rep.matrix(j).mul_vec(&images[i])?);
                if lhs != rhs {
                    return Err(AdoError::NotACocycle(i, j));
                }
            }
        }
        Ok(Self { rep, map })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    /// Column `i` is `φ(e_i)`.
    pub fn map(&self) -> &RationalMatrix {
        &self.map
    }
}

/// `x ⊗ t^a ↦ a · x ⊗ t^a`, a derivation of the current algebra.
pub fn euler_derivation(c: &CurrentAlgebra) -> Cocycle {
    let weights: Vec<_> = (0..c.product.dim()).map(|k| int(c.power(k) as i64)).collect();
    Cocycle::new(rep::adjoint(&c.product), RationalMatrix::diagonal(&weights))
        .expect("the Euler operator is a derivation")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSpace {
    pub rep: Representation,
    pub basis: Vec<Cocycle>,
}

impl CocycleSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All of `Z¹(L, V)`, from one linear system over the basis pairs `i < j`.
///
/// Unknown `k·dim V + v` is component `v` of `φ(e_k)`; the basis is the echelon
/// basis of the solution space.
pub fn cocycle_space(rho: &Representation) -> CocycleSpace {
    let l = rho.algebra();
    let (n, d) = (l.dim(), rho.space_dim());
    let mut equations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let bracket = l.bracket_basis(i, j);
            // rows of ρ_i and ρ_j give the coefficients of φ(e_j) and φ(e_i)
            for v in 0..d {
                let mut terms: Vec<_> = bracket.iter().map(|(k, c)| (k * d + v, c.clone())).collect();
                terms.extend(rho.matrix(i).row(v).iter().map(|(w, c)| (j * d + w, -c)));
                terms.extend(rho.matrix(j).row(v).iter().map(|(w, c)| (i * d + w, c.clone())));
                let row = SparseVec::from_pairs(terms);
                if !row.is_zero() {
                    equations.push(row);
                }
            }
        }
    }
    let solutions = kernel_from_rows(n * d, equations);
    let basis = solutions
        .basis()
        .iter()
        .map(|s| {
            let columns: Vec<SparseVec> = (0..n).map(|k| s.window(k * d, d)).collect();
            Cocycle {
                rep: rho.clone(),
                map: RationalMatrix::from_columns(d, &columns),
            }
        })
        .collect();
    CocycleSpace {
        rep: rho.clone(),
        basis,
    }
}

/// `ρ̂(x)(v, ψ) = (ρ(x)v + ψ(x), 0)` on `V ⊕ Z¹(L, V)`.
///
/// Faithful because `φ ∈ Z¹` has zero kernel; nilpotent when `ρ` is. Both are
/// re-checked on the result.
pub fn cocycle_extension_rep(rho: &Representation, phi: &RationalMatrix) -> Result<Representation> {
    let phi = Cocycle::new(rho.clone(), phi.clone())?;
    if !crate::linalg::kernel_basis(phi.map()).is_zero() {
        return Err(AdoError::DegenerateCocycle);
    }
    let space = cocycle_space(rho);
    Ok(extension_from_space(&space)?.0)
}

fn extension_from_space(space: &CocycleSpace) -> Result<(Representation, usize)> {
    let rho = &space.rep;
    let (d, m) = (rho.space_dim(), space.dim());
    let columns: Vec<Vec<SparseVec>> = space.basis.iter().map(|c| c.map().columns()).collect();
    let matrices = (0..rho.algebra().dim())
        .map(|i| {
            let mut rows: Vec<SparseVec> = rho.matrix(i).row_vecs().to_vec();
            for (s, psi) in columns.iter().enumerate() {
                for (v, c) in psi[i].iter() {
                    let entry = SparseVec::from_pairs([(d + s, c.clone())]);
                    rows[v] = rows[v].add(&entry);
                }
            }
            rows.resize(d + m, SparseVec::new());
            RationalMatrix::from_rows(d + m, rows)
        })
        .collect();
    let ext = Representation::new(rho.algebra().clone(), d + m, matrices)?;
    if !rep::is_homomorphism(&ext) {
        return Err(AdoError::VerificationFailed("cocycle extension is not a homomorphism".into()));
    }
    if !rep::is_faithful(&ext) {
        return Err(AdoError::VerificationFailed("cocycle extension is not faithful".into()));
    }
    if rep::is_nilpotent_rep(rho) && !rep::is_nilpotent_rep(&ext) {
        return Err(AdoError::VerificationFailed("cocycle extension is not nilpotent".into()));
    }
    Ok((ext, m))
}

/// Output of the graded construction.
#[derive(Debug, Clone)]
pub struct GradedRep {
    pub rep: Representation,
    pub current_dim: usize,
    pub cocycle_dim: usize,
}

/// Embeds `L` into its current algebra `C`, extends `ad C` by the Euler cocycle,
/// and restricts back to `L`.
pub fn graded_faithful_rep(l: &LieAlgebra) -> Result<GradedRep> {
    let (current, embedding) = graded_embedding(l)?;
    let euler = euler_derivation(&current);
    debug_assert!(crate::linalg::kernel_basis(euler.map()).is_zero());
    let space = cocycle_space(euler.rep());
    let (ext, cocycle_dim) = extension_from_space(&space)?;
    let rep = rep::restrict_along(&ext, &embedding)?;
    if !rep::is_faithful(&rep) || !rep::is_nilpotent_rep(&rep) {
        return Err(AdoError::VerificationFailed(format!(
            "graded construction failed on {}",
            l.name()
        )));
    }
    Ok(GradedRep {
        rep,
        current_dim: current.product.dim(),
        cocycle_dim,
    })
}

/// Free nilpotent algebras carry their word-degree grading, so the graded
/// construction applies directly.
pub fn free_nilpotent_faithful_rep(f: &LieAlgebra) -> Result<GradedRep> {
    graded_faithful_rep(f)
}
