//! Floating-point abstraction shared by every numeric module.
//!
//! All cost-model, crossover, resource, and precision arithmetic is generic
//! over [`Scalar`] so the same formulas run in `f32` or `f64`. The crate root
//! exports `f64` aliases for the common types; `f64` is the precision the
//! stated tolerances (e.g. the Lambert W residual bound) are calibrated for,
//! and the precision the command-line tool uses.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar usable in every formula of this crate.
///
/// The supertraits provide IEEE arithmetic ([`Float`]), mathematical
/// constants like π and e ([`FloatConst`]), and conversion from literal
/// values ([`FromPrimitive`]).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + core::fmt::Debug + core::fmt::Display + 'static
{
    /// Converts an `f64` literal into this scalar type.
    ///
    /// Every constant in this crate (coefficients, tolerances, anchor
    /// values) is within `f32` range, so the conversion cannot fail for the
    /// supported types; a type whose range cannot hold the literal would be
    /// unusable for these models anyway.
    #[must_use]
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal representable in scalar type")
    }

    /// Converts a small unsigned integer (mesh sparsity, dimension counts).
    #[must_use]
    fn from_count(value: u32) -> Self {
        Self::from_u32(value).expect("count representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lit_round_trips_exact_values() {
        assert_eq!(f64::lit(2.5e4), 2.5e4);
        assert_eq!(f32::lit(1.5), 1.5f32);
    }

    #[test]
    fn from_count_matches_integer_value() {
        assert_eq!(f64::from_count(33), 33.0);
        assert_eq!(f32::from_count(7), 7.0f32);
    }
}
