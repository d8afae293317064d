//! End-to-end construction of faithful nilpotent representations.
//!
//! Graded algebras go through [`crate::graded`] directly. Otherwise `L` is
//! presented as `F/I`, the graded representation of `F` is pushed down a flag
//! `0 = J_0 ⊂ … ⊂ J_m = I` one central quotient at a time, and the result is
//! transported to `L`.

mod certificate;
mod search;

pub use certificate::{sha256_hex, Certificate, Step};
pub use search::{distinguish_by_kernels, glue_local, Distinguished, GlueTrace};

use serde::{Deserialize, Serialize};

use crate::error::{AdoError, Result};
use crate::free;
use crate::graded;
use crate::json;
use crate::lie::{self, LieAlgebra, LieHom};
use crate::linalg::{self, RationalMatrix, SparseVec, Subspace};
use crate::rep::{self, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Graded construction when a grading is declared, induction otherwise.
    #[default]
    Auto,
    Graded,
    Induction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub max_tensor_power: usize,
    /// Largest free nilpotent algebra a presentation may use.
    pub free_budget: usize,
    /// Largest representation space built along the way.
    pub rep_budget: usize,
    pub compress: bool,
    pub method: Method,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            max_tensor_power: 6,
            free_budget: free::DEFAULT_FREE_BUDGET,
            rep_budget: 20_000,
            compress: true,
            method: Method::Auto,
        }
    }
}

/// The three properties a constructed representation must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub homomorphism: bool,
    pub faithful: bool,
    pub nilpotent: bool,
}

impl VerificationReport {
    pub fn accepted(&self) -> bool {
        self.homomorphism && self.faithful && self.nilpotent
    }

    /// Name of the first property that fails.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.homomorphism {
            Some("not a homomorphism")
        } else if !self.faithful {
            Some("not faithful")
        } else if !self.nilpotent {
            Some("not nilpotent")
        } else {
            None
        }
    }
}

pub fn verify_output(l: &LieAlgebra, rho: &Representation) -> VerificationReport {
    if rho.algebra().dim() != l.dim() || !rho.algebra().structure_constants().eq(l.structure_constants()) {
        return VerificationReport {
            homomorphism: false,
            faithful: false,
            nilpotent: false,
        };
    }
    VerificationReport {
        homomorphism: rep::is_homomorphism(rho),
        faithful: rep::is_faithful(rho),
        nilpotent: rep::is_nilpotent_rep(rho),
    }
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub rep: Representation,
    pub certificate: Certificate,
}

fn check_budget(what: &str, dim: usize, budget: usize) -> Result<()> {
    if dim > budget {
        return Err(AdoError::BudgetExceeded {
            what: what.to_string(),
            dim,
            budget,
        });
    }
    Ok(())
}

pub fn construct_faithful_nilpotent(l: &LieAlgebra, cfg: &EngineConfig) -> Result<Construction> {
    if cfg.max_tensor_power == 0 || cfg.free_budget == 0 || cfg.rep_budget == 0 {
        return Err(AdoError::Parse("engine budgets must be positive".into()));
    }
    if let Some(v) = l.validate().first() {
        return Err(AdoError::InvalidAlgebra(format!(
            "Jacobi identity fails on basis triple {:?}",
            v.triple
        )));
    }
    lie::nilpotency_class(l)?;

    let mut steps = Vec::new();
    let rep = if l.dim() == 0 {
        Representation::zero(l, 0)
    } else {
        let graded = match cfg.method {
            Method::Auto => l.grading().is_some(),
            Method::Graded => true,
            Method::Induction => false,
        };
        if graded {
            graded_step(l, cfg, &mut steps)?
        } else {
            induction(l, cfg, &mut steps)?
        }
    };

    let report = verify_output(l, &rep);
    steps.push(Step::Verified {
        homomorphism: report.homomorphism,
        faithful: report.faithful,
        nilpotent: report.nilpotent,
    });
    if let Some(failure) = report.first_failure() {
        return Err(AdoError::VerificationFailed(format!("constructed representation is {failure}")));
    }
    let certificate = Certificate {
        algebra: l.name().to_string(),
        config: cfg.clone(),
        steps,
        rep_dim: rep.space_dim(),
        output_digest: sha256_hex(json::rep_to_json(&rep).as_bytes()),
    };
    Ok(Construction { rep, certificate })
}

fn graded_step(l: &LieAlgebra, cfg: &EngineConfig, steps: &mut Vec<Step>) -> Result<Representation> {
    let g = graded::graded_faithful_rep(l)?;
    check_budget("graded representation", g.rep.space_dim(), cfg.rep_budget)?;
    steps.push(Step::GradedPipeline {
        algebra: l.name().to_string(),
        current_dim: g.current_dim,
        cocycle_dim: g.cocycle_dim,
        rep_dim: g.rep.space_dim(),
    });
    Ok(g.rep)
}

/// `0 = J_0 ⊂ J_1 ⊂ … ⊂ J_m = I` with `[F, J_{k+1}] ⊆ J_k`.
fn flag_below(f: &LieAlgebra, ideal: &Subspace) -> Result<Vec<Subspace>> {
    let mut chain = vec![ideal.clone()];
    while let Some(last) = chain.last().filter(|j| !j.is_zero()) {
        let next = lie::codim1_refinement(f, last)?;
        chain.push(next);
    }
    chain.reverse();
    Ok(chain)
}

fn induction(l: &LieAlgebra, cfg: &EngineConfig, steps: &mut Vec<Step>) -> Result<Representation> {
    let p = free::present(l, cfg.free_budget)?;
    steps.push(Step::Presented {
        free: p.free.name().to_string(),
        free_dim: p.free.dim(),
        rank: p.rank,
        class: p.class,
        ideal_dim: p.ideal.dim(),
    });
    let mut rho = graded_step(&p.free, cfg, steps)?;
    let flag = flag_below(&p.free, &p.ideal)?;

    // S_k = F/J_k, with `to_s` the projection F → S_k
    let mut s = p.free.clone();
    let mut to_s = RationalMatrix::identity(p.free.dim());
    for (k, pair) in flag.windows(2).enumerate() {
        let z_free = pair[1]
            .basis()
            .iter()
            .find(|b| !pair[0].contains(b))
            .expect("consecutive flag members differ in dimension");
        let z = to_s.mul_vec(z_free)?;
        if !lie::is_central(&s, &z) {
            return Err(AdoError::NotCentral(format!("flag step {k} of {}", p.free.name())));
        }
        let q = lie::quotient(&s, &Subspace::span(s.dim(), [z.clone()]))?;
        steps.push(Step::FlagStep {
            k,
            element: z.clone(),
            quotient_dim: q.algebra.dim(),
        });

        let adjoint = rep::adjoint(&q.algebra);
        let (next, trace) = glue_local(&q.algebra, |x| {
            if !lie::is_central(&q.algebra, x) {
                return Ok(adjoint.clone());
            }
            separate_central(&rho, &z, &q.lift(x), cfg, steps)
        })?;
        steps.push(Step::Glue {
            algebra: q.algebra.name().to_string(),
            summand_dims: trace.summand_dims,
            kernel_dims: trace.kernel_dims,
        });
        check_budget("glued representation", next.space_dim(), cfg.rep_budget)?;

        to_s = q.projection.matrix().mul(&to_s)?;
        s = q.algebra;
        rho = next;
    }

    // L ≅ F/I = S_m: send e_j to the image of any preimage under F → L
    let pi = p.projection.matrix();
    let columns = (0..l.dim())
        .map(|j| {
            let pre = linalg::solve_sparse(pi, &SparseVec::unit(j)).expect("presentation is surjective");
            to_s.mul_vec(&pre)
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = LieHom::new(l.clone(), s.clone(), RationalMatrix::from_columns(s.dim(), &columns))?;
    rep::restrict_along(&rho, &iso)
}

/// A representation of `S/⟨z⟩` on which the image of `x_lift` acts nonzero.
fn separate_central(
    rho: &Representation,
    z: &SparseVec,
    x_lift: &SparseVec,
    cfg: &EngineConfig,
    steps: &mut Vec<Step>,
) -> Result<Representation> {
    let found = distinguish_by_kernels(rho, z, x_lift, cfg)?;
    steps.push(Step::KernelSearch {
        element: x_lift.clone(),
        power: found.power,
        rep_dim: found.rep.space_dim(),
    });
    let (carrier, induced) = rep::kernel_submodule(&found.rep, z)?;
    let local = if cfg.compress {
        let w = carrier.coordinates(&found.witness).expect("witness lies in Ker ρ(z)");
        rep::cyclic_submodule(&induced, &w).1
    } else {
        induced
    };
    steps.push(Step::KernelSubmodule {
        carrier_dim: carrier.dim(),
        compressed_dim: local.space_dim(),
    });
    Ok(local)
}

/// Re-runs the construction recorded in `cert` and checks that it reproduces
/// the same steps and the same representation bytes.
pub fn replay(l: &LieAlgebra, cert: &Certificate) -> Result<Representation> {
    if cert.algebra != l.name() {
        return Err(AdoError::AlgebraMismatch);
    }
    let again = construct_faithful_nilpotent(l, &cert.config)?;
    if again.certificate.steps != cert.steps {
        return Err(AdoError::VerificationFailed("replayed steps differ from the certificate".into()));
    }
    if again.certificate.output_digest != cert.output_digest {
        return Err(AdoError::VerificationFailed("replayed representation differs from the certificate".into()));
    }
    Ok(again.rep)
}
