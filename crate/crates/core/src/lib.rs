//! Exact cohomology of irreducible equivariant vector bundles on isotropic
//! Grassmannians of classical groups, and multiplicity bounds on the
//! Hochschild cohomology assembled from exterior powers of the tangent
//! bundle.
//!
//! Conventions used throughout:
//!
//! * Partitions are weakly decreasing with positive parts; trailing zeros
//!   are normalized away.
//! * Ambient torus weights are stored as *doubled* integer coordinates, so
//!   that half-integral spinor-adjacent vectors (notably rho in types B and
//!   D) stay exact in `i64` arithmetic.
//! * Groups are classical of types B, C, D; isotropic Grassmannians are
//!   named OGr(k, 2n+1), IGr(k, 2n) and OGr(k, 2n).
//!
//! All multiplicities are exact non-negative integers; there is no floating
//! point anywhere in this crate.

pub mod bbw;
pub mod branching;
pub mod diagrams;
pub mod oracle;
pub mod schur;
pub mod spectral;
pub mod weights;

use thiserror::Error as ThisError;

use weights::Family;

#[derive(Clone, PartialEq, Eq, Debug, ThisError)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("invalid hook form: {0}")]
    BadHookForm(String),
    #[error("balance offset must be 1 or -1, got {0}")]
    UnsupportedBalance(i64),
    #[error("balanced diagrams have even size, got {0}")]
    OddBalancedSize(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rank {rank} is not supported for family {family}")]
    BadRank { family: Family, rank: usize },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not in the weight lattice: {0}")]
    NotInLattice(String),
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("diagram height {height} exceeds the bound {cap}")]
    HeightViolation { height: usize, cap: usize },
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("isotropic dimension k={k} is invalid for rank {n}")]
    BadIsotropicK { k: usize, n: usize },
    #[error("diagram height {height} exceeds the stable range of rank {rank}")]
    OutOfStableRange { height: usize, rank: usize },
    #[error("out of scope: {0}")]
    OutOfScope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
