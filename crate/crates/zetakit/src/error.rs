use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A truncated series would need more terms than the configured cap,
    /// typically because Im(tau) is too small for the requested tolerance.
    #[error("series truncation cap exceeded: need ~{needed} terms, cap is {cap}")]
    TruncationCap { needed: u64, cap: u64 },

    /// Evaluation requested within the guard radius of a pole.
    #[error("evaluation within {guard:e} of the pole at {pole_re}+{pole_im}i")]
    NearPole {
        pole_re: f64,
        pole_im: f64,
        guard: f64,
    },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature failed to converge: estimated error {err:e} > tol {tol:e}")]
    QuadratureNonConvergence { err: f64, tol: f64 },

    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// Sieve or search size above the configured limit.
    #[error("size cap exceeded: requested {requested}, cap is {cap}")]
    SizeCap { requested: u64, cap: u64 },

    /// Witness search exhausted its window cap (desk-scale limit, not disproof).
    #[error("prime search cap {cap} exceeded for class {a} mod {q}")]
    SearchCap { q: u64, a: u64, cap: u64 },

    /// FE-pair compatibility check f(1/x) = eps x^k g(x) failed at a sample point.
    #[error("FE-pair relation residual {residual:e} at x = {x} exceeds {tol:e}")]
    PairRelation { x: f64, residual: f64, tol: f64 },
}
