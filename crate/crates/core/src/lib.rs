//! Extreme values of Gamma-distribution probability functions.
//!
//! The crate covers four pieces of work that belong together:
//!
//! * [`specfun`]: log-gamma, the regularized incomplete gamma functions and
//!   the standard normal band, all written from scratch;
//! * [`gamma_prob`] and [`optimize`]: the probabilities `P{X ≤ κ E X}` and
//!   `P{|X − E X| ≤ κ √Var X}` of a Gamma variable, and a one-dimensional
//!   minimizer that locates the shape where the first one bottoms out;
//! * [`exact_poly`] and [`certificates`]: an exact rational polynomial
//!   engine and the positivity certificates it re-derives and checks;
//! * [`iddist`]: band probabilities for other infinitely divisible laws
//!   and a grid scanner comparing them with the normal one-sigma band.
//!
//! A guide with worked examples lives in the `book/` directory at the
//! repository root; its code blocks run as doc-tests of this crate.

pub mod certificates;
pub mod exact_poly;
pub mod gamma_prob;
pub mod iddist;
pub mod optimize;
mod quad;
pub mod specfun;

pub use quad::QuadError;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/special-functions.md")]
    mod special_functions {}
    #[doc = include_str!("../../../book/src/band-probabilities.md")]
    mod band_probabilities {}
    #[doc = include_str!("../../../book/src/minimization.md")]
    mod minimization {}
    #[doc = include_str!("../../../book/src/exact-polynomials.md")]
    mod exact_polynomials {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/infinitely-divisible.md")]
    mod infinitely_divisible {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
