//! The Riemann zeta function by several routes.
//!
//! The primary route is the theta-Mellin construction:
//!
//!   Lambda_0(s) = integral_1^inf (t^{s/2-1} + t^{(1-s)/2-1}) omega(t) dt,
//!       omega(t) = (theta(it) - 1)/2,
//!   Lambda(s)   = Lambda_0(s) - 1/s - 1/(1-s),
//!   zeta(s)     = pi^{s/2} Lambda(s) / Gamma(s/2).
//!
//! Lambda_0 is entire and is computed termwise: integrating e^{-pi n^2 t}
//! against t^{a-1} over (1, inf) gives (pi n^2)^{-a} Gamma(a, pi n^2), so
//!
//!   Lambda_0(s) = sum_{n >= 1} (pi n^2)^{-a} Gamma(a, pi n^2)
//!                            + (pi n^2)^{-b} Gamma(b, pi n^2),
//!
//! with a = s/2, b = (1-s)/2, converging like e^{-pi n^2}.  Division by
//! Gamma is arranged through 1/Gamma so that the result is a total
//! function of s: trivial zeros come out as exact zeros of 1/Gamma, the
//! value at s = 0 is -1/2, and s = 1 lands on a junk-value branch.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::eval::{EvalResult, Method};
use crate::special::{gamma, rgamma, upper_gamma};
use crate::{bernoulli, quad, theta, Error, Result};

/// Guard radius for the poles of the completed zeta function.
const POLE_GUARD: f64 = 1e-8;

/// Cap on the number of theta terms in the entire integral.
const LAMBDA0_TERM_CAP: u64 = 64;

/// Bound for |integral_1^inf t^{c-1} e^{-x t} dt| with c = Re(a).
fn lambda0_term_bound(c: f64, x: f64) -> f64 {
    if c <= 1.0 {
        (-x).exp() / x
    } else {
        // (1+v)^{c-1} <= 2^{c-1} (1 + v^{c-1}) for v >= 0
        let g = gamma(Complex64::new(c, 0.0)).re.max(1.0);
        (-x).exp() * 2f64.powf(c - 1.0) * (1.0 / x + g / x.powf(c))
    }
}

/// The entire integral Lambda_0(s), with a bound on the truncation tail.
pub fn lambda0(s: Complex64) -> Result<(Complex64, f64)> {
    let a = 0.5 * s;
    let b = 0.5 * (1.0 - s);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=LAMBDA0_TERM_CAP {
        let x = PI * (n * n) as f64;
        let log_x = x.ln();
        let term = (-a * log_x).exp() * upper_gamma(a, x)?
            + (-b * log_x).exp() * upper_gamma(b, x)?;
        acc += term;
        let bound = lambda0_term_bound(a.re, x) + lambda0_term_bound(b.re, x);
        if bound < 1e-18 * (1.0 + acc.norm()) {
            // remaining terms shrink at least geometrically (ratio e^{-3 pi})
            return Ok((acc, 2.0 * bound + 1e-14 * (1.0 + acc.norm())));
        }
    }
    Err(Error::TruncationCap {
        needed: LAMBDA0_TERM_CAP + 1,
        cap: LAMBDA0_TERM_CAP,
    })
}

/// Completed zeta Lambda(s) = Lambda_0(s) - 1/s - 1/(1-s).
///
/// Satisfies Lambda(s) = Lambda(1-s); simple poles at s = 0 and s = 1
/// (guarded).  Real on the critical line by conjugate symmetry of the
/// construction.
pub fn completed_zeta(s: Complex64) -> Result<EvalResult> {
    if s.norm() < POLE_GUARD {
        return Err(Error::NearPole {
            pole_re: 0.0,
            pole_im: 0.0,
            guard: POLE_GUARD,
        });
    }
    if (s - 1.0).norm() < POLE_GUARD {
        return Err(Error::NearPole {
            pole_re: 1.0,
            pole_im: 0.0,
            guard: POLE_GUARD,
        });
    }
    let (l0, tail) = lambda0(s)?;
    let value = l0 - 1.0 / s - 1.0 / (1.0 - s);
    Ok(EvalResult::heuristic(value, tail, Method::ThetaMellin))
}

/// zeta(s) by the theta-Mellin route, rearranged into a total function:
///
///   zeta(s) = pi^{s/2} [ (Lambda_0(s) - 1/(1-s)) / Gamma(s/2)
///                        - (1/2) / Gamma(s/2 + 1) ],
///
/// using 1/(s Gamma(s/2)) = (1/2) / Gamma(s/2 + 1).  Every factor is
/// entire, so no pole guard is needed: zeta(0) = -1/2 falls out of the
/// second term, and the trivial zeros are exact zeros of 1/Gamma.  At
/// s = 1 the 1/(1-s) term is dropped (the "1/0 = 0" junk-value branch),
/// producing Lambda_0(1) - 1 = (gamma - log 4 pi)/2 and a method tag of
/// [`Method::ThetaMellinJunk`].
pub fn riemann_zeta(s: Complex64) -> Result<EvalResult> {
    let (l0, tail) = lambda0(s)?;
    let junk = s == Complex64::new(1.0, 0.0);
    let inv_one_minus_s = if junk {
        Complex64::new(0.0, 0.0)
    } else {
        1.0 / (1.0 - s)
    };
    let half_s = 0.5 * s;
    let pref = (half_s * PI.ln()).exp();
    let value = pref * ((l0 - inv_one_minus_s) * rgamma(half_s) - 0.5 * rgamma(half_s + 1.0));
    let err = pref.norm() * (tail * rgamma(half_s).norm() + 1e-13 * (1.0 + value.norm()));
    let method = if junk {
        Method::ThetaMellinJunk
    } else {
        Method::ThetaMellin
    };
    Ok(EvalResult::heuristic(value, err, method))
}

/// zeta(s) by Euler–Maclaurin summation with `m` correction terms:
///
///   zeta(s) = sum_{n < N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
///             + sum_{j=1}^{m} B_{2j}/(2j)! (s)(s+1)...(s+2j-2) N^{1-s-2j}.
///
/// Valid (with the stated error estimate) for Re(s) > 1 - 2m; the cutoff
/// N grows with |Im(s)|.
pub fn zeta_euler_maclaurin(s: Complex64) -> Result<EvalResult> {
    let m = 10usize;
    if (s - 1.0).norm() < POLE_GUARD {
        return Err(Error::NearPole {
            pole_re: 1.0,
            pole_im: 0.0,
            guard: POLE_GUARD,
        });
    }
    if s.re <= 1.0 - 2.0 * m as f64 {
        return Err(Error::Domain(
            "Euler-Maclaurin with m = 10 requires Re(s) > -19",
        ));
    }
    let n_cut = 50.max((3.0 * s.im.abs()).ceil() as u64);
    let real_s = s.im == 0.0;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..n_cut {
        let nf = n as f64;
        acc += if real_s {
            Complex64::new(nf.powf(-s.re), 0.0)
        } else {
            (-s * nf.ln()).exp()
        };
    }
    let nf = n_cut as f64;
    let n_pow_ms = (-s * nf.ln()).exp(); // N^{-s}
    acc += n_pow_ms * nf / (s - 1.0);
    acc += 0.5 * n_pow_ms;

    // correction terms; poch = (s)(s+1)...(s+2j-2), n_fac = N^{1-s-2j}
    let mut poch = s;
    let mut n_fac = n_pow_ms * nf; // N^{1-s-2j}, starting at j = 0
    let mut fact = 2.0f64; // (2j)!
    let mut last_mag = 0.0f64;
    for j in 1..=m {
        n_fac /= nf * nf;
        let b2j = bernoulli::bernoulli_number_f64(2 * j);
        let term = (b2j / fact) * poch * n_fac;
        acc += term;
        last_mag = term.norm();
        poch *= (s + (2 * j - 1) as f64) * (s + 2.0 * j as f64);
        fact *= (2.0 * j as f64 + 1.0) * (2.0 * j as f64 + 2.0);
    }
    // the remainder is bounded by the first omitted term times
    // |s + 2m + 1| / (Re(s) + 2m + 1)
    let sigma_shift = s.re + 2.0 * m as f64 + 1.0;
    let next = (bernoulli::bernoulli_number_f64(2 * m + 2) / fact) * poch * n_fac
        / (nf * nf);
    let err = next.norm() * (s + 2.0 * m as f64 + 1.0).norm() / sigma_shift
        + 1e-15 * (1.0 + acc.norm())
        + 1e-16 * last_mag;
    Ok(EvalResult::rigorous(acc, err, Method::EulerMaclaurin))
}

/// zeta(s) by the truncated Euler product over primes <= `p_limit`.
/// Requires Re(s) > 1; the tail estimate is heuristic.
pub fn euler_product_zeta(s: Complex64, p_limit: u64) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(Error::Domain("Euler product requires Re(s) > 1"));
    }
    let sieve = crate::primes::sieve(p_limit)?;
    let mut acc = Complex64::new(1.0, 0.0);
    for p in sieve.primes_up_to(p_limit) {
        let p_ms = (-s * (p as f64).ln()).exp();
        acc /= 1.0 - p_ms;
    }
    let sigma = s.re;
    let tail = acc.norm() * 2.0 * (p_limit as f64).powf(1.0 - sigma) / (sigma - 1.0);
    Ok(EvalResult::heuristic(acc, tail, Method::EulerProduct))
}

/// zeta(2k) = (-1)^{k+1} (2 pi)^{2k} B_{2k} / (2 (2k)!), exact up to
/// rounding in the final float arithmetic.
pub fn zeta_even_value(k: u32) -> Result<EvalResult> {
    if k == 0 {
        return Err(Error::Domain("zeta_even_value requires k >= 1"));
    }
    // (2 pi)^{2k} / (2k)! as an incremental product to avoid overflow
    let mut c = 1.0f64;
    for j in 1..=(2 * k) {
        c *= 2.0 * PI / j as f64;
    }
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    let v = sign * c * bernoulli::bernoulli_number_f64(2 * k as usize) / 2.0;
    Ok(EvalResult::rigorous(
        Complex64::new(v, 0.0),
        1e-14 * v.abs(),
        Method::BernoulliFormula,
    ))
}

/// Mellin transform of omega(t) = (theta(it) - 1)/2 by direct quadrature,
/// with the (0, 1) part folded to (1, inf) through the theta
/// transformation law:
///
///   integral_0^inf t^{s-1} omega(t) dt
///     = integral_1^inf (t^{s-1} + t^{-s-1/2}) omega(t) dt
///       + 1/(2s-1) - 1/(2s)
///     = pi^{-s} Gamma(s) zeta(2s).
///
/// Poles at s = 0 and s = 1/2 are guarded.
pub fn mellin_of_theta_quad(s: Complex64, tol: f64) -> Result<EvalResult> {
    if s.norm() < POLE_GUARD || (s - 0.5).norm() < POLE_GUARD {
        return Err(Error::NearPole {
            pole_re: if s.norm() < POLE_GUARD { 0.0 } else { 0.5 },
            pole_im: 0.0,
            guard: POLE_GUARD,
        });
    }
    let omega = |t: f64| {
        let tau = theta::UpperHalfPoint::new(Complex64::new(0.0, t)).unwrap();
        let v = theta::jacobi_theta(tau, 1e-15).unwrap();
        0.5 * (v.value - 1.0)
    };
    // |omega(t)| <= 1.05 e^{-pi t} for t >= 1
    let tail_piece = |exponent: Complex64| -> Result<(Complex64, f64)> {
        let c = exponent.re;
        let mut t_end = (2.0 * (c - 1.0).max(0.5) / PI).max(2.0);
        let tail_at = |t: f64| 1.05 * t.powf((c - 1.0).max(0.0)) * (-PI * t).exp() * 2.0 / PI;
        while tail_at(t_end) > 0.25 * tol {
            t_end *= 1.5;
        }
        let f = move |t: f64| ((exponent - 1.0) * t.ln()).exp() * omega(t);
        let (v, e) = quad::integrate(&f, 1.0, t_end, 0.5 * tol)?;
        Ok((v, e + tail_at(t_end)))
    };
    let (v1, e1) = tail_piece(s)?;
    let (v2, e2) = tail_piece(0.5 - s)?;
    let value = v1 + v2 + 1.0 / (2.0 * s - 1.0) - 0.5 / s;
    Ok(EvalResult::rigorous(value, e1 + e2, Method::ThetaMellin))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn em_matches_classical_values() {
        let z2 = zeta_euler_maclaurin(c(2.0, 0.0)).unwrap();
        assert!((z2.value.re - PI * PI / 6.0).abs() < 1e-13);
        let z3 = zeta_euler_maclaurin(c(3.0, 0.0)).unwrap();
        assert!((z3.value.re - 1.202_056_903_159_594_2).abs() < 1e-13);
        let z0 = zeta_euler_maclaurin(c(0.0, 0.0)).unwrap();
        assert!((z0.value.re + 0.5).abs() < 1e-13);
        // cancellation against the partial sum (~N^2/2) costs a few digits
        let zm1 = zeta_euler_maclaurin(c(-1.0, 0.0)).unwrap();
        assert!((zm1.value.re + 1.0 / 12.0).abs() < 1e-11);
        assert!(zeta_euler_maclaurin(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn em_complex_point() {
        // zeta(1/2 + 14.134725 i) is nearly zero
        let z = zeta_euler_maclaurin(c(0.5, 14.134_725)).unwrap();
        assert!(z.value.norm() < 1e-5, "{}", z.value);
    }

    #[test]
    fn lambda0_is_symmetric() {
        // Lambda_0(s) = Lambda_0(1-s) by construction
        for &(re, im) in &[(0.3, 0.0), (2.0, 1.5), (-1.0, 3.0)] {
            let s = c(re, im);
            let (a, _) = lambda0(s).unwrap();
            let (b, _) = lambda0(1.0 - s).unwrap();
            assert!((a - b).norm() < 1e-13, "s = {s}");
        }
    }

    #[test]
    fn lambda0_against_quadrature() {
        // independent check of the termwise incomplete-gamma evaluation
        for &(re, im) in &[(1.0, 0.0), (0.5, 2.0), (3.0, -1.0)] {
            let s = c(re, im);
            let (l0, _) = lambda0(s).unwrap();
            let f = |t: f64| {
                let tau = theta::UpperHalfPoint::new(c(0.0, t)).unwrap();
                let om = 0.5 * (theta::jacobi_theta(tau, 1e-15).unwrap().value - 1.0);
                (((0.5 * s - 1.0) * t.ln()).exp() + ((0.5 * (1.0 - s) - 1.0) * t.ln()).exp()) * om
            };
            let (q, _) = quad::integrate(&f, 1.0, 40.0, 1e-13).unwrap();
            assert!((l0 - q).norm() < 1e-10, "s = {s}: {l0} vs {q}");
        }
    }

    #[test]
    fn completed_zeta_functional_equation() {
        for &(re, im) in &[(0.3, 0.7), (2.0, 0.0), (-0.7, 2.2)] {
            let s = c(re, im);
            let a = completed_zeta(s).unwrap();
            let b = completed_zeta(1.0 - s).unwrap();
            assert!((a.value - b.value).norm() < 1e-12, "s = {s}");
        }
        assert!(completed_zeta(c(0.0, 0.0)).is_err());
        assert!(completed_zeta(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn zeta_total_function_values() {
        let z0 = riemann_zeta(c(0.0, 0.0)).unwrap();
        assert!((z0.value.re + 0.5).abs() < 1e-12);
        assert_eq!(z0.method, Method::ThetaMellin);
        // trivial zeros
        for k in 1..=4 {
            let z = riemann_zeta(c(-2.0 * k as f64, 0.0)).unwrap();
            assert!(z.value.norm() < 1e-11, "s = {}", -2 * k);
        }
    }

    #[test]
    fn zeta_junk_value_at_one() {
        let z = riemann_zeta(c(1.0, 0.0)).unwrap();
        assert_eq!(z.method, Method::ThetaMellinJunk);
        let expect = 0.5 * (crate::special::euler_gamma() - (4.0 * PI).ln());
        assert!((z.value.re - expect).abs() < 1e-10, "{}", z.value.re);
        // and a point merely *near* 1 goes through the ordinary branch
        let near = riemann_zeta(c(1.0 + 1e-6, 0.0)).unwrap();
        assert_eq!(near.method, Method::ThetaMellin);
        assert!(near.value.re > 9.9e5);
    }

    #[test]
    fn routes_agree() {
        for &(re, im) in &[(2.0, 0.0), (1.5, 3.0), (0.5, 6.0), (-1.5, 1.0), (3.0, -2.0)] {
            let s = c(re, im);
            let a = riemann_zeta(s).unwrap();
            let b = zeta_euler_maclaurin(s).unwrap();
            assert!(
                (a.value - b.value).norm() < 1e-10,
                "s = {s}: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn euler_product_converges_from_above() {
        let s = c(2.0, 0.0);
        let target = PI * PI / 6.0;
        let mut prev_gap = f64::INFINITY;
        for &p in &[10u64, 100, 1000, 10_000] {
            let v = euler_product_zeta(s, p).unwrap();
            let gap = (v.value.re - target).abs();
            assert!(gap < prev_gap);
            assert!(gap <= v.err, "gap {gap:e} exceeds estimate {:e}", v.err);
            prev_gap = gap;
        }
        // tail over primes > 10^4 is ~1/(P log P)
        assert!(prev_gap < 2e-5);
        assert!(euler_product_zeta(c(1.0, 0.0), 100).is_err());
    }

    #[test]
    fn even_values_formula() {
        assert!((zeta_even_value(1).unwrap().value.re - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_even_value(2).unwrap().value.re - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta_even_value(3).unwrap().value.re - PI.powi(6) / 945.0).abs() < 1e-13);
        assert!(zeta_even_value(0).is_err());
    }

    #[test]
    fn mellin_of_theta_identity() {
        // integral = pi^{-s} Gamma(s) zeta(2s)
        for &sre in &[1.0, 1.5, 2.0] {
            let s = c(sre, 0.0);
            let lhs = mellin_of_theta_quad(s, 1e-11).unwrap();
            let rhs = (-s * PI.ln()).exp()
                * gamma(s)
                * zeta_euler_maclaurin(2.0 * s).unwrap().value;
            assert!((lhs.value - rhs).norm() < 1e-9, "s = {s}");
        }
        assert!(mellin_of_theta_quad(c(0.5, 0.0), 1e-10).is_err());
    }

    #[test]
    fn critical_line_is_real() {
        for &t in &[0.5, 3.0, 10.0, 14.0] {
            let v = completed_zeta(c(0.5, t)).unwrap();
            assert!(v.value.im.abs() < 1e-12, "t = {t}: im = {}", v.value.im);
        }
    }
}
