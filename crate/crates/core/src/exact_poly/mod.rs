//! Exact polynomial arithmetic over the rationals.
//!
//! [`RationalPoly`] is a dense coefficient vector of [`BigRational`]s.
//! [`RationalFunction`] pairs two of them without reducing to lowest terms.
//! Together with [`substitute_rational`] (evaluate `p` at a rational function
//! and clear denominators) and Sturm-sequence root counting, this is all the
//! machinery the positivity certificates need.

mod poly;
mod rational_function;
mod sturm;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use poly::{poly_arith, poly_pow, rational, PolyOp, RationalPoly};
pub use rational_function::{substitute_rational, RationalFunction};
pub use sturm::{sturm_roots_in_interval, sturm_sequence, verify_sign_on_interval, Sign};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a remainder of degree {remainder_degree}")]
    InexactDivision { remainder_degree: usize },
    #[error("denominator is the zero polynomial or vanishes at the evaluation point")]
    ZeroDenominator,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial vanishes at interval endpoint {point}")]
    EndpointRoot { point: Box<BigRational> },
    #[error("empty interval ({lo}, {hi})")]
    InvalidInterval { lo: Box<BigRational>, hi: Box<BigRational> },
}
