//! Zeta and L-function evaluation.
//!
//! The Riemann zeta function is built by the three-step theta-Mellin
//! construction (entire integral, completed zeta with its two pole terms,
//! gamma-factor division), cross-checked against Euler–Maclaurin
//! summation and the Euler product.  Hurwitz zeta functions are continued
//! through the even/odd theta FE-pairs, and Dirichlet L-functions are
//! assembled from them as weighted Hurwitz sums.

mod dirichlet;
mod hurwitz;
mod scan;
mod zeta;

pub use dirichlet::{dirichlet_l, dirichlet_l_direct};
pub use hurwitz::{
    hurwitz, hurwitz_direct_em, hurwitz_even, hurwitz_neg_int, hurwitz_odd,
};
pub use scan::{critical_line_zeros, nonvanishing_scan, trig_poly, CriticalLineScan, ScanMinimum};
pub use zeta::{
    completed_zeta, euler_product_zeta, lambda0, mellin_of_theta_quad, riemann_zeta,
    zeta_euler_maclaurin, zeta_even_value,
};

use num::complex::Complex64;

use crate::eval::{EvalResult, Method};

/// Coefficients of an L-series; the value at 0 is never consulted.
pub struct LSeriesCoefficients<'a> {
    a: &'a (dyn Fn(u64) -> Complex64 + Sync),
}

impl<'a> LSeriesCoefficients<'a> {
    pub fn new(a: &'a (dyn Fn(u64) -> Complex64 + Sync)) -> Self {
        LSeriesCoefficients { a }
    }
}

/// Partial sum sum_{n=1}^{N} a(n) n^{-s} with a heuristic tail estimate.
///
/// When Re(s) <= 1 the series may diverge; the partial sum is still
/// returned, flagged with an infinite error.
pub fn lseries(coeffs: &LSeriesCoefficients<'_>, s: Complex64, n_terms: u64) -> EvalResult {
    assert!(n_terms >= 1);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut max_coeff = 0.0f64;
    let real_s = s.im == 0.0;
    for n in 1..=n_terms {
        let an = (coeffs.a)(n);
        if an.norm_sqr() == 0.0 {
            continue;
        }
        max_coeff = max_coeff.max(an.norm());
        let nf = n as f64;
        let pow = if real_s {
            Complex64::new(nf.powf(-s.re), 0.0)
        } else {
            (-s * nf.ln()).exp()
        };
        acc += an * pow;
    }
    let sigma = s.re;
    let err = if sigma > 1.0 {
        // integral bound for a tail with |a(n)| <= max observed coefficient
        max_coeff * (n_terms as f64).powf(1.0 - sigma) / (sigma - 1.0)
    } else {
        f64::INFINITY
    };
    EvalResult::heuristic(acc, err, Method::DirectSeries)
}
