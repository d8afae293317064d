use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::json::sparse_coords;
use crate::linalg::SparseVec;

use super::EngineConfig;

/// One recorded stage of a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Step {
    /// `L = F/I` with `F` free nilpotent of the given rank and class.
    Presented {
        free: String,
        free_dim: usize,
        rank: usize,
        class: usize,
        ideal_dim: usize,
    },
    /// Passage from `S_k` to `S_{k+1} = S_k/⟨z⟩`; `element` is `z` in the basis of `S_k`.
    FlagStep {
        k: usize,
        #[serde(with = "sparse_coords")]
        element: SparseVec,
        quotient_dim: usize,
    },
    GradedPipeline {
        algebra: String,
        current_dim: usize,
        cocycle_dim: usize,
        rep_dim: usize,
    },
    /// `ρ0^{⊗power}` separates the kernels of `z` and `element`.
    KernelSearch {
        #[serde(with = "sparse_coords")]
        element: SparseVec,
        power: usize,
        rep_dim: usize,
    },
    KernelSubmodule { carrier_dim: usize, compressed_dim: usize },
    /// Dimensions of the summands and of the kernel after each summand.
    Glue {
        algebra: String,
        summand_dims: Vec<usize>,
        kernel_dims: Vec<usize>,
    },
    Verified {
        homomorphism: bool,
        faithful: bool,
        nilpotent: bool,
    },
}

/// Replayable record of a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub algebra: String,
    pub config: EngineConfig,
    pub steps: Vec<Step>,
    pub rep_dim: usize,
    /// SHA-256 of the representation JSON.
    pub output_digest: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
