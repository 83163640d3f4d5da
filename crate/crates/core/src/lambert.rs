//! Lambert W function: the inverse of `w ↦ w·e^w`.
//!
//! Only the real slice matters here. For argument `x ∈ (−1/e, 0)` the
//! defining equation has two real solutions; the crossover analysis needs
//! the nonprincipal branch `W₋₁` (values ≤ −1), while the principal branch
//! `W₀` (values ≥ −1) is provided for completeness and round-trip testing.
//!
//! ```text
//! W₀:  [−1/e, ∞) → [−1, ∞)      principal
//! W₋₁: [−1/e, 0) → (−∞, −1]     nonprincipal
//! ```
//!
//! Evaluation is Halley iteration on `f(w) = w·e^w − x` from a
//! branch-appropriate starting point:
//!
//! * nonprincipal, away from the branch point: the asymptotic guess
//!   `w₀ = L₁ − L₂ + L₂/L₁` with `L₁ = ln(−x)`, `L₂ = ln(−L₁)`;
//! * near the branch point `x = −1/e`: the series in
//!   `p = √(2(e·x + 1))`, signed by branch, `w = −1 ± p − p²/3 ± 11p³/72`;
//! * principal: a rational guess for moderate `x`, the log-asymptotic for
//!   large `x`, the branch-point series near `−1/e`.
//!
//! Convergence is 1e-13 relative on `w` (loosened to a few machine epsilons
//! for scalar types coarser than `f64`) within at most 100 iterations, and
//! every returned value is verified against the residual contract
//! `|w·e^w − x| ≤ 1e-12 · max(|x|, 1e-300)`. Non-convergence is unreachable
//! on the documented domain and reported as an error rather than a panic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which real branch of the Lambert W function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `W₀`, values in `[−1, ∞)`, defined for `x ≥ −1/e`.
    Principal,
    /// `W₋₁`, values in `(−∞, −1]`, defined for `x ∈ [−1/e, 0)`.
    Nonprincipal,
}

const MAX_ITERATIONS: usize = 100;

/// The branch point abscissa `−1/e`, computed as `−e⁻¹` so that the
/// round trip `w·e^w` at `w = −1` reproduces it bit-for-bit.
pub(crate) fn neg_inv_e<T: Scalar>() -> T {
    -(-T::one()).exp()
}

/// Evaluates the requested branch of the Lambert W function at `x`.
///
/// Returns a domain error naming the branch when `x` lies outside it
/// (principal: `x ≥ −1/e`; nonprincipal: `−1/e ≤ x < 0`). A half-ulp slack
/// below `−1/e` is tolerated and treated as the branch point, so values of
/// `w·e^w` that round across the boundary still evaluate.
pub fn lambert_w<T: Scalar>(branch: Branch, x: T) -> Result<T> {
    let floor = neg_inv_e::<T>();
    let slack = T::epsilon();
    match branch {
        Branch::Principal => {
            if !(x >= floor - slack) {
                return Err(Error::domain(
                    "lambert_w",
                    format!("principal branch requires x ≥ −1/e ≈ {floor}, got {x}"),
                ));
            }
        }
        Branch::Nonprincipal => {
            if !(x >= floor - slack) || !(x < T::zero()) {
                return Err(Error::domain(
                    "lambert_w",
                    format!("nonprincipal branch requires −1/e ≤ x < 0, got {x}"),
                ));
            }
        }
    }
    if x == T::zero() {
        return Ok(T::zero()); // principal only; nonprincipal excludes 0
    }

    // Distance from the branch point, as the series variable p = √(2(e·x+1)).
    // The radicand is clamped at zero to absorb the half-ulp slack.
    let radicand = (T::lit(2.0) * (T::E() * x + T::one())).max(T::zero());
    let p = radicand.sqrt();
    let near_branch_point = (x - floor).abs() < T::lit(1e-2);

    let series = |signed_p: T| {
        -T::one()
            + signed_p * (T::one() + signed_p * (T::lit(-1.0 / 3.0) + signed_p * T::lit(11.0 / 72.0)))
    };
    let signed_p = match branch {
        Branch::Principal => p,
        Branch::Nonprincipal => -p,
    };
    if near_branch_point && p < T::lit(1e-4) {
        // So close to −1/e that the truncated series is already far inside
        // the residual contract, while Halley's denominator e^w·(1+w)
        // degenerates; return the series value directly.
        return Ok(series(signed_p));
    }

    let w0 = if near_branch_point {
        series(signed_p)
    } else {
        match branch {
            Branch::Nonprincipal => {
                let l1 = (-x).ln();
                let l2 = (-l1).ln();
                l1 - l2 + l2 / l1
            }
            Branch::Principal => {
                if x <= T::E() {
                    x / (T::one() + x)
                } else {
                    let l1 = x.ln();
                    let l2 = l1.ln();
                    l1 - l2 + l2 / l1
                }
            }
        }
    };

    let tol = T::lit(1e-13).max(T::epsilon() * T::lit(4.0));
    let mut w = w0;
    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - x;
        if f == T::zero() {
            converged = true;
            break;
        }
        let wp1 = w + T::one();
        let denom = ew * wp1 - f * (w + T::lit(2.0)) / (T::lit(2.0) * wp1);
        let next = w - f / denom;
        // Keep iterates on the requested branch's half of the w axis.
        let next = match branch {
            Branch::Principal => next.max(-T::one()),
            Branch::Nonprincipal => next.min(-T::one()),
        };
        if !next.is_finite() {
            return Err(Error::NoConvergence {
                context: "lambert_w",
                iterations: MAX_ITERATIONS,
            });
        }
        let delta = (next - w).abs();
        w = next;
        if delta <= tol * w.abs() {
            converged = true;
            break;
        }
    }

    // Enforce the residual contract regardless of how the loop exited; a
    // violation means the iteration stalled (converged flag merely records
    // that the loop believed itself done).
    let residual = (w * w.exp() - x).abs();
    let residual_tol = T::lit(1e-12).max(T::epsilon() * T::lit(8.0));
    let bound = residual_tol * x.abs().max(T::lit(1e-300));
    if !converged || !(residual <= bound) {
        return Err(Error::NoConvergence {
            context: "lambert_w",
            iterations: MAX_ITERATIONS,
        });
    }
    Ok(w)
}
