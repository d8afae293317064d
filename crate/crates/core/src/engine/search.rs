use crate::error::{AdoError, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{self, SparseVec, Subspace};
use crate::rep::{self, Representation};

use super::EngineConfig;

/// A tensor power of the input representation together with a witness vector
/// `v` with `ρ(z)v = 0` and `ρ(x)v ≠ 0`.
#[derive(Debug, Clone)]
pub struct Distinguished {
    pub rep: Representation,
    pub power: usize,
    pub witness: SparseVec,
}

/// Searches `ρ0, ρ0^{⊗2}, …` for a power in which `Ker ρ(z) ⊄ Ker ρ(x)`.
///
/// Such a power exists whenever `ρ0` is faithful and nilpotent and `z` is
/// central; the search is cut off by `max_tensor_power` and `rep_budget`.
pub fn distinguish_by_kernels(
    rho0: &Representation,
    z: &SparseVec,
    x: &SparseVec,
    cfg: &EngineConfig,
) -> Result<Distinguished> {
    let n = rho0.algebra().dim();
    if Subspace::span(n, [z.clone(), x.clone()]).dim() < 2 {
        return Err(AdoError::NotLinearlyIndependent);
    }
    let exceeded = || AdoError::TensorBudgetExceeded {
        max_power: cfg.max_tensor_power,
        budget: cfg.rep_budget,
    };
    let mut rho = rho0.clone();
    for power in 1..=cfg.max_tensor_power {
        if power > 1 {
            let dim = rho.space_dim().checked_mul(rho0.space_dim()).ok_or_else(exceeded)?;
            if dim > cfg.rep_budget {
                return Err(exceeded());
            }
            rho = rep::tensor_product(&rho, rho0)?;
        }
        let kz = linalg::kernel_basis(&rep::element_action(&rho, z));
        let rx = rep::element_action(&rho, x);
        let witness = kz
            .basis()
            .iter()
            .find(|v| !rx.mul_vec(v).expect("vector in the space").is_zero());
        if let Some(v) = witness {
            return Ok(Distinguished {
                witness: v.clone(),
                rep: rho,
                power,
            });
        }
    }
    Err(exceeded())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GlueTrace {
    pub summand_dims: Vec<usize>,
    /// Dimension of the kernel of the running direct sum after each summand.
    pub kernel_dims: Vec<usize>,
}

/// Direct sum of local representations `ρ_x`, each nonzero on `x`, until the kernel vanishes.
///
/// Starts at `e_0`; each further `x` is the first echelon basis vector of the
/// current kernel, so kernels strictly decrease and at most `dim L` summands occur.
pub fn glue_local<F>(l: &LieAlgebra, mut separator: F) -> Result<(Representation, GlueTrace)>
where
    F: FnMut(&SparseVec) -> Result<Representation>,
{
    let mut trace = GlueTrace::default();
    if l.dim() == 0 {
        return Ok((Representation::zero(l, 0), trace));
    }
    let mut x = SparseVec::unit(0);
    let mut acc: Option<Representation> = None;
    let mut kernel_dim = l.dim();
    loop {
        let local = separator(&x)?;
        if local.algebra() != l {
            return Err(AdoError::AlgebraMismatch);
        }
        if rep::element_action(&local, &x).is_zero() {
            return Err(AdoError::SeparatorFailed);
        }
        trace.summand_dims.push(local.space_dim());
        let sum = match acc {
            None => local,
            Some(prev) => rep::direct_sum(&prev, &local)?,
        };
        let kernel = rep::rep_kernel(&sum);
        assert!(kernel.dim() < kernel_dim, "kernel must strictly decrease");
        kernel_dim = kernel.dim();
        trace.kernel_dims.push(kernel_dim);
        assert!(trace.kernel_dims.len() <= l.dim());
        if kernel.is_zero() {
            return Ok((sum, trace));
        }
        x = kernel.basis()[0].clone();
        acc = Some(sum);
    }
}
