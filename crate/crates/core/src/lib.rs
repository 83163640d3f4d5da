//! Scaling analysis for quantum versus classical sparse linear solvers on
//! finite-element problems.
//!
//! The crate answers one question quantitatively: at what problem size — if
//! any — does a quantum linear-system solver overtake a classical
//! conjugate-gradient solver, once both runtimes are written in the same
//! asymptotic currency? It provides:
//!
//! - [`cost`] — the classical and quantum runtime cost models, condition
//!   number scaling laws, and the radar-cross-section functional used as the
//!   scalar observable;
//! - [`lambert`] — a careful Lambert W implementation (both real branches),
//!   the special function in which the crossover condition is solved;
//! - [`crossover`] — the crossover parameter, its regime classification, the
//!   exact / logarithmic / coarse crossover sizes, and runtime curve
//!   sampling;
//! - [`mesh`] — regular 2D/3D mesh constructions and the sparsity parameter
//!   `d` that the cost models consume, with closed-form edge counts;
//! - [`resource`] — a prefactor fit to a published end-to-end gate-count
//!   estimate, wall-clock conversion, per-call resource accounting, and
//!   hypothetical-improvement scenarios;
//! - [`precision`] — accuracy-requirement conversions between relative
//!   error, additive dB error, and range error, plus the precision
//!   dependence of the crossover;
//! - [`caveats`] — the fixed honesty annotations reports must carry.
//!
//! Everything numeric is generic over the scalar type via [`Scalar`]
//! (implemented for `f32` and `f64`); the `*32`/`*64` aliases below pick a
//! concrete precision. All fallible operations return [`Result`] with a
//! structured [`Error`] naming the offending field or domain.

// Validation deliberately writes `if !(value > bound)` rather than
// `if value <= bound`: the negated form also rejects NaN, which satisfies
// neither comparison, so every domain check is NaN-safe by construction.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod caveats;
pub mod cost;
pub mod crossover;
pub mod error;
pub mod lambert;
pub mod mesh;
pub mod precision;
pub mod resource;
pub mod scalar;

pub use caveats::Caveat;
pub use cost::{
    cg_runtime, cjs_cks_runtime, cjs_runtime, kappa_scaling, rcs_from_solution, CostParams,
    KappaScalingLaw, ModelVariant,
};
pub use crossover::{
    classify_regime, crossover_exact, crossover_parameter, runtime_curves, CrossoverParameter,
    CrossoverResult, Regime, RuntimeSeries, Scale,
};
pub use error::{Error, Result};
pub use lambert::{lambert_w, Branch};
pub use mesh::{
    build_mesh, build_square_strip, edge_count, row_nonzero_counts, sparsity_parameter, Mesh,
    MeshTopology, NonzeroPattern, SparsityReport, TopologyKind,
};
pub use precision::{
    crossover_vs_precision, delta_db, range_error_pct, regime_table, DbConvention,
    PrecisionRegime, PrecisionSweepPoint,
};
pub use resource::{
    anchor_denominator, extrapolate, fit_prefactor, hamiltonian_accounting, improvement_scenario,
    per_call_scaling, wall_clock, AnchorEstimate, HamiltonianAccounting, HamiltonianCalibration,
    HardwareProfile, ImprovementScenario, ResourceCounts, WallClock,
};
pub use scalar::Scalar;

/// Double-precision cost parameters.
pub type CostParams64 = cost::CostParams<f64>;
/// Single-precision cost parameters.
pub type CostParams32 = cost::CostParams<f32>;
/// Double-precision condition-number scaling law.
pub type KappaScalingLaw64 = cost::KappaScalingLaw<f64>;
/// Double-precision crossover summary.
pub type CrossoverResult64 = crossover::CrossoverResult<f64>;
/// Double-precision runtime curve samples.
pub type RuntimeSeries64 = crossover::RuntimeSeries<f64>;
/// Double-precision published anchor estimate.
pub type AnchorEstimate64 = resource::AnchorEstimate<f64>;
/// Double-precision hardware profile.
pub type HardwareProfile64 = resource::HardwareProfile<f64>;
/// Double-precision wall-clock breakdown.
pub type WallClock64 = resource::WallClock<f64>;
/// Double-precision per-call resource accounting.
pub type HamiltonianAccounting64 = resource::HamiltonianAccounting<f64>;
/// Double-precision error-regime table row.
pub type PrecisionRegime64 = precision::PrecisionRegime<f64>;
