//! Crossover analysis: the problem size `N*` at which the quantum (CJS)
//! runtime curve permanently drops below the classical (CG) curve.
//!
//! Setting the two runtimes equal and dividing out the shared factors
//! collapses everything into one dimensionless parameter
//!
//! ```text
//! x = −(C_CG / C_CJS) · ε² · ln(1/ε) / d⁶        (always < 0)
//! ```
//!
//! and the crossover condition becomes `ln N = −x·N`, solved exactly by the
//! nonprincipal Lambert W branch:
//!
//! ```text
//! N* = W₋₁(x) / x
//! ```
//!
//! Because `N/ln N ≥ e` for all `N > 1`, a solution exists only while
//! `x ≥ −1/e`. The three regimes:
//!
//! * `x > −1/e`: two intersections; the upper one (≥ e) is the reported
//!   crossover, the lower one at `N < e` sits below any meaningful problem
//!   size and is not solved for.
//! * `x = −1/e` (to 1e-12 absolute): the curves are tangent at `N = e`.
//! * `x < −1/e`: the curves never meet; the quantum curve is below the
//!   classical one for every `N`.
//!
//! Two closed-form approximations accompany the exact value: the
//! logarithmic form `ln(−x)/x`, good as `x → 0⁻`, and the coarse
//! reciprocal `−1/x` (equivalently `(C_CJS/C_CG)·d⁶/(ε²·ln(1/ε))`), which
//! drops the `ln N` factor entirely and undershoots by roughly `ln N*`.

use serde::{Deserialize, Serialize};

use crate::cost::{cg_runtime, cjs_runtime, CostParams};
use crate::error::{Error, Result};
use crate::lambert::{lambert_w, neg_inv_e, Branch};
use crate::scalar::Scalar;

/// The dimensionless parameter controlling where (and whether) the runtime
/// curves cross. Strictly negative for every valid [`CostParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossoverParameter<T> {
    /// The value of `−(C_CG/C_CJS)·ε²·ln(1/ε)/d⁶`.
    pub x: T,
}

/// How the two runtime curves relate over `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `x > −1/e`: the curves cross twice; the upper crossing is `N*`.
    TwoIntersections,
    /// `x = −1/e` within 1e-12: the curves touch at `N = e`.
    Tangent,
    /// `x < −1/e`: the quantum curve is below the classical one everywhere.
    QuantumDominatesAsymptotically,
}

impl core::fmt::Display for Regime {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Regime::TwoIntersections => "two_intersections",
            Regime::Tangent => "tangent",
            Regime::QuantumDominatesAsymptotically => "quantum_dominates_asymptotically",
        })
    }
}

/// The crossover solution together with both closed-form approximations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossoverResult<T> {
    /// The dimensionless crossover parameter the solution derives from.
    pub x: CrossoverParameter<T>,
    /// Which intersection regime `x` falls in.
    pub regime: Regime,
    /// `W₋₁(x)/x`: the upper intersection. Absent when the curves never
    /// meet ([`Regime::QuantumDominatesAsymptotically`]).
    #[serde(default = "Option::default", skip_serializing_if = "Option::is_none")]
    pub n_star_exact: Option<T>,
    /// `ln(−x)/x`: the logarithmic approximation, asymptotically exact as
    /// `x → 0⁻`.
    pub n_star_log_approx: T,
    /// `−1/x`: the coarse reciprocal approximation.
    pub n_star_coarse: T,
}

/// Sampling grid layout for [`runtime_curves`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    /// Uniform spacing in `N`.
    Linear,
    /// Uniform spacing in `ln N`.
    LogLog,
}

impl core::str::FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Scale::Linear),
            "loglog" => Ok(Scale::LogLog),
            other => Err(Error::invalid(
                "scale",
                format!("unknown scale `{other}`; expected linear or loglog"),
            )),
        }
    }
}

impl core::fmt::Display for Scale {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Scale::Linear => "linear",
            Scale::LogLog => "loglog",
        })
    }
}

/// Matched samples of both runtime curves over a grid of problem sizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuntimeSeries<T> {
    /// Strictly increasing problem sizes.
    pub n_values: Vec<T>,
    /// Classical (CG) runtime at each problem size.
    pub t_cg: Vec<T>,
    /// Quantum (CJS) runtime at each problem size.
    pub t_cjs: Vec<T>,
    /// The grid layout the samples were drawn on.
    pub scale: Scale,
}

/// Collapses cost parameters into the dimensionless crossover parameter
/// `x = −(C_CG/C_CJS)·ε²·ln(1/ε)/d⁶`.
#[must_use]
pub fn crossover_parameter<T: Scalar>(p: &CostParams<T>) -> CrossoverParameter<T> {
    let ln_inv_eps = -p.epsilon().ln();
    let x = -(p.c_cg() / p.c_cjs()) * p.epsilon().powi(2) * ln_inv_eps / p.d_scalar().powi(6);
    CrossoverParameter { x }
}

/// Classifies `x` against the tangency threshold `−1/e`, with a 1e-12
/// absolute tolerance band counted as [`Regime::Tangent`].
///
/// Returns a domain error for `x ≥ 0` (or NaN), which no valid
/// [`CostParams`] can produce.
pub fn classify_regime<T: Scalar>(x: CrossoverParameter<T>) -> Result<Regime> {
    let v = x.x;
    if !(v < T::zero()) {
        return Err(Error::domain(
            "classify_regime",
            format!("crossover parameter must be strictly negative, got {v}"),
        ));
    }
    let branch_point = neg_inv_e::<T>();
    if (v - branch_point).abs() <= T::lit(1e-12) {
        Ok(Regime::Tangent)
    } else if v > branch_point {
        Ok(Regime::TwoIntersections)
    } else {
        Ok(Regime::QuantumDominatesAsymptotically)
    }
}

/// Solves for the crossover problem size and evaluates both approximations.
///
/// `n_star_exact` is populated for the two-intersection and tangent
/// regimes; when the quantum curve dominates everywhere it is reported as
/// absent, not as an error. The approximations are always populated.
pub fn crossover_exact<T: Scalar>(p: &CostParams<T>) -> Result<CrossoverResult<T>> {
    let x = crossover_parameter(p);
    let regime = classify_regime(x)?;
    let n_star_exact = match regime {
        Regime::QuantumDominatesAsymptotically => None,
        Regime::TwoIntersections => Some(lambert_w(Branch::Nonprincipal, x.x)? / x.x),
        // Within the tangency band x may sit a hair below −1/e, outside the
        // Lambert domain; evaluate at the branch point itself, where
        // W₋₁ = −1 and the intersections coincide at N = e.
        Regime::Tangent => Some(lambert_w(Branch::Nonprincipal, neg_inv_e::<T>())? / x.x),
    };
    Ok(CrossoverResult {
        x,
        regime,
        n_star_exact,
        n_star_log_approx: (-x.x).ln() / x.x,
        n_star_coarse: -T::one() / x.x,
    })
}

/// Samples both runtime curves over `[n_min, n_max]` on a grid of `points`
/// values, uniformly in `N` or in `ln N` according to `scale`.
///
/// Requires `2 ≤ n_min < n_max` and `points ≥ 2`; the final grid point is
/// pinned to `n_max` exactly. A range too narrow for the requested point
/// count to remain strictly increasing in floating point is rejected.
pub fn runtime_curves<T: Scalar>(
    p: &CostParams<T>,
    n_min: T,
    n_max: T,
    points: usize,
    scale: Scale,
) -> Result<RuntimeSeries<T>> {
    if !(n_min >= T::lit(2.0) && n_min < n_max) {
        return Err(Error::DegenerateRange {
            message: format!("need 2 ≤ n_min < n_max, got [{n_min}, {n_max}]"),
        });
    }
    if points < 2 {
        return Err(Error::DegenerateRange {
            message: format!("need at least 2 sample points, got {points}"),
        });
    }

    let span = T::from_usize(points - 1).expect("point count representable in scalar type");
    let mut n_values = Vec::with_capacity(points);
    for i in 0..points {
        let n = if i == points - 1 {
            n_max
        } else {
            let t = T::from_usize(i).expect("point index representable in scalar type");
            match scale {
                Scale::Linear => n_min + (n_max - n_min) / span * t,
                Scale::LogLog => (n_min.ln() + (n_max.ln() - n_min.ln()) / span * t).exp(),
            }
        };
        n_values.push(n);
    }
    if n_values.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::DegenerateRange {
            message: format!(
                "{points} points over [{n_min}, {n_max}] collapse below floating-point resolution"
            ),
        });
    }

    let mut t_cg = Vec::with_capacity(points);
    let mut t_cjs = Vec::with_capacity(points);
    for &n in &n_values {
        let at_n = p.with_n(n)?;
        t_cg.push(cg_runtime(&at_n));
        t_cjs.push(cjs_runtime(&at_n, false)?);
    }
    Ok(RuntimeSeries {
        n_values,
        t_cg,
        t_cjs,
        scale,
    })
}
