//! Verification toolkit for reverse mean/norm inequalities on functions of
//! bounded variation and the Landau-type derivative bounds they imply.
//!
//! The crate has three layers:
//!
//! * [`piecewise`] — an exact model of BV functions on a compact interval
//!   (cubic polynomial pieces plus point atoms) with total variation,
//!   sup-norm, integral and Lp-norm computation, and a seeded random
//!   corpus generator ([`corpus`]).
//! * [`inequalities`] — evaluators that compute both sides of the
//!   mean-vs-norm inequalities (forward and reverse, pointwise Ostrowski
//!   kernel and its p-norm) and report gaps and ratios.
//! * [`landau`], [`registry`], [`sharpness`] — closed-form minimization of
//!   `C/λ^u + Dλ^r` with a grid-search oracle, derivative-norm bound
//!   calculators checked against a registry of analytic test functions, and
//!   the extremal families that certify the best constants.
//!
//! All numerical core code is generic over the scalar type via [`Real`]
//! (`f32` or `f64`); the concrete aliases below fix `f64`, which is what the
//! command-line harness and the acceptance suites use.

pub mod corpus;
pub mod error;
pub mod inequalities;
pub mod landau;
pub mod piecewise;
pub mod poly;
pub mod quadrature;
pub mod registry;
pub mod report;
pub mod scalar;
pub mod sharpness;

pub use error::{Error, Result};
pub use scalar::Real;

pub use corpus::{corpus_seed, random_bv, GeneratorProfile, ProfileKind};
pub use inequalities::{
    baseline_mean_lp, baseline_mean_sup, midpoint_kernel_pnorm, ostrowski_pointwise,
    ostrowski_sweep, reverse_lp, reverse_sup,
};
pub use landau::{
    corollary_32_case_i, corollary_constant, grid_search_minimum, growth_from_second_derivative,
    landau_l1_bound, landau_lalpha_bound, landau_objective, landau_sup_bound,
    minimize_landau_objective, CorollaryFamily, GridSearch, MinimizationResult,
    SecondDerivativeNorm, VariationGrowth, LANDAU_BEST_CONSTANT_HALF_LINE,
    LANDAU_BEST_CONSTANT_REAL_LINE,
};
pub use piecewise::{Interval, Norms, PiecewiseFunction};
pub use poly::Polynomial;
pub use registry::{
    builtin_registry, landau_check, registry_from_json, registry_to_json,
    verify_growth_certificate, AnalyticTestFunction, BoundKind, IntervalKind,
};
pub use report::BoundReport;
pub use sharpness::{
    empirical_constant_search, q_limit_check, spike_extremal, step_extremal,
    thm2_constant_lower_bound, SearchInequality, SharpnessEstimate,
};

/// `f64` concrete aliases for the generic core types.
pub type Interval64 = Interval<f64>;
pub type PiecewiseFunction64 = PiecewiseFunction<f64>;
pub type Polynomial64 = Polynomial<f64>;
pub type BoundReport64 = BoundReport<f64>;
pub type MinimizationResult64 = MinimizationResult<f64>;
pub type VariationGrowth64 = VariationGrowth<f64>;
pub type SharpnessEstimate64 = SharpnessEstimate<f64>;

/// `f32` aliases; the algorithms run unchanged, tolerances permitting.
pub type Interval32 = Interval<f32>;
pub type PiecewiseFunction32 = PiecewiseFunction<f32>;
pub type Polynomial32 = Polynomial<f32>;
