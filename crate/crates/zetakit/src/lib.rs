//! Numerical zeta and L-functions.
//!
//! The crate evaluates the Riemann zeta function, Hurwitz zeta functions and
//! Dirichlet L-functions on the complex plane by the theta-series / Mellin
//! transform route, cross-checked against Euler–Maclaurin summation, Euler
//! products and exact Bernoulli special values.  Supporting machinery:
//!
//! - [`bernoulli`]: exact rational Bernoulli numbers, polynomials, the
//!   periodized Bernoulli function and its Fourier coefficients;
//! - [`characters`]: Dirichlet characters mod N with exact root-of-unity
//!   values, orthogonality in exact cyclotomic arithmetic, Gauss sums;
//! - [`theta`]: Jacobi theta functions, the transformation law, and a
//!   Gaussian Poisson-summation checker;
//! - [`fepair`]: meromorphic continuation of Mellin transforms for pairs of
//!   functions satisfying f(1/x) = eps x^k g(x);
//! - [`lfunc`]: zeta and L-function evaluation, special values, boundary
//!   non-vanishing scans and critical-line zero location;
//! - [`primes`]: sieve tables (von Mangoldt, Moebius), residue-class
//!   L-series identities and primes-in-progressions demonstrators.

pub mod bernoulli;
pub mod characters;
pub mod error;
pub mod eval;
pub mod fepair;
pub mod lfunc;
pub mod primes;
pub mod quad;
pub mod special;
pub mod theta;

pub use error::Error;
pub use eval::{EvalResult, Method};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
