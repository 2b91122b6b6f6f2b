//! Discrete weighted Hardy inequalities on the half-line.
//!
//! For finitely supported `u` on `{0, 1, 2, …}` with `u(0) = 0`,
//!
//! ```text
//! Σ_{n≥1} |u(n) − u(n−1)|² n^α  ≥  Σ_{n≥1} w_{α,β}(n) |u(n)|²
//! ```
//!
//! holds for every real `α, β`, where `w_{α,β}` is produced by the power
//! supersolution `φ(n) = n^β`. This crate evaluates the weights without
//! cancellation, checks the supersolution criterion, estimates sharp
//! constants from finite sections, and scans the sign of the Taylor
//! coefficients and remainders that decide when `w_{α,β}` dominates
//! `((α−1)²/4)·n^{α−2}`.
//!
//! Everything is generic over [`Scalar`]; the `*64` aliases fix `f64`.

pub mod analysis;
pub mod error;
pub mod lattice;
pub mod numerics;
pub mod scalar;
pub mod sharpness;
pub mod spectral;
pub mod sum;
pub mod supersolution;
pub mod weights;

pub use analysis::{
    boundary_weight_margin, coefficient_signs, conjecture_scan, remainder, remainder_scan,
    ConjectureFinding, ScanReport,
};
pub use error::{HardyError, Result};
pub use lattice::LatticeFunction;
pub use numerics::{
    b4_closed, b6_closed, b_k, g_value, gen_binomial, stable_pow1p, CoefficientEntry,
    CoefficientTable, SignClass,
};
pub use scalar::Scalar;
pub use sharpness::{sweep, test_function, SharpnessSweepResult, SweepRow};
pub use spectral::{build_pencil, min_eigenvalue, sharp_constant_estimate, TridiagonalPencil};
pub use sum::CompensatedSum;
pub use supersolution::{
    combinatorial_laplacian, criterion_margin, derived_weight, lhs_form, power_triplet, rhs_form,
    verify_inequality, InequalityCheck, LatticeFn, PowerFn, SupersolutionTriplet,
};
pub use weights::{hardy_constant, lower_bound_margin, weight_w, WeightParams};

pub type WeightParams64 = WeightParams<f64>;
pub type WeightParams32 = WeightParams<f32>;
pub type LatticeFunction64 = LatticeFunction<f64>;
pub type TridiagonalPencil64 = TridiagonalPencil<f64>;
pub type CoefficientTable64 = CoefficientTable<f64>;
pub type ScanReport64 = ScanReport<f64>;
pub type SharpnessSweepResult64 = SharpnessSweepResult<f64>;
pub type InequalityCheck64 = InequalityCheck<f64>;
