//! Exact spectrum and eigenstates of the gauge-transformed Calogero–Sutherland
//! Hamiltonian with anti-periodic boundary condition,
//! `H̃ = Σ (ωⱼ∂ⱼ)² + A Σ_{j<k} (ωⱼ+ω_k)/(ωⱼ−ω_k) (ωⱼ∂ⱼ − ω_k∂_k)`.
//!
//! Modules, bottom up:
//!
//! - [`scalars`]: exact rationals and rational functions of `A`.
//! - [`partitions`]: dominance order, conjugation, hooks and hook-product norms.
//! - [`states`]: sector bases, squeezing graph, levels and weights.
//! - [`oracle`]: Laurent polynomials; the differential operators applied literally.
//! - [`operator`]: the upper-triangular Hamiltonian matrix on a sector.
//! - [`spectrum`]: eigenvalues, back-substitution eigenvectors, pseudo-momenta.
//! - [`symfunc`]: power sums, the `1/A` scalar product and Jack polynomials.
//! - [`cli`]: the commands behind the `csm` binary, plus the result cache.

pub mod cli;
pub mod error;
pub mod operator;
pub mod oracle;
pub mod partitions;
pub mod scalars;
pub mod spectrum;
pub mod states;
pub mod symfunc;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use scalars::{Branch, Coupling, Rational, Scalar};
pub use states::SectorState;
