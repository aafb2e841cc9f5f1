//! Gamma-type moment functions and the decision procedures built on them.
//!
//! The crate evaluates one/two/three-parametric Mittag-Leffler functions and
//! the Wright function on the real line, represents Mellin transforms of
//! Gamma type algebraically, and implements the existence / non-negativity /
//! infinite-divisibility / moment-sequence classifiers for those families,
//! each cross-checked by an independent numerical oracle.
//!
//! Modules:
//! * [`gamma_kernel`] — scalar kernels (log-gamma, digamma, reflection,
//!   Gauss multiplication);
//! * [`moment_spec`] — the algebraic `GammaTypeSpec` representation with
//!   evaluation, γ/δ indices and composition;
//! * [`catalog`] — named families (Gamma, Beta, X_{a,b,c,d}, …) and the
//!   eight factorial-ratio presets;
//! * [`mittag_leffler`] — series/asymptotic evaluation of E^γ_{ρ,μ} and φ;
//! * [`classifier`] — parameter-domain decision procedures with verdicts;
//! * [`divisibility`] — Malmsten kernel test and Hausdorff moment oracles;
//! * [`numerics`] — Mellin quadrature, density reconstruction, scans and
//!   empirical boundary bracketing.

pub mod catalog;
pub mod classifier;
pub mod divisibility;
pub mod error;
pub mod gamma_kernel;
pub mod kahan;
pub mod mittag_leffler;
pub mod moment_spec;
pub mod numerics;
pub mod real;

pub use error::{Error, Result};
pub use real::Real;
