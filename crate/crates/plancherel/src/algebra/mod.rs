//! Exact arithmetic substrate: arbitrary-precision rationals, multivariate
//! Laurent polynomials, and rational functions with canonical forms.
//!
//! Everything is immutable after construction and free of interior
//! mutation, so values can be shared and sent across threads.

mod laurent;
mod ratfunc;

pub use laurent::{rat, rat_int, rational_pow, rational_to_f64, LaurentPoly, Var};
pub use ratfunc::{one_minus_monomial, zeta_symbolic, RationalFunction};

/// Rationals are arbitrary-precision and always stored reduced with a
/// positive denominator (guaranteed by the `num` representation).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleEvaluation,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("odd power of u cannot be evaluated at a rational q")]
    OddHalfPower,
}
