//! Jacobi theta functions: theta(tau), the two-variable theta(z, tau), its
//! z-derivative, the transformation law, and a Gaussian Poisson-summation
//! checker.
//!
//! All series are truncated symmetrically with a rigorous geometric tail
//! bound derived from |e^{pi i n^2 tau}| = e^{-pi n^2 Im(tau)}, carried in
//! [`ThetaValue::tail_bound`].

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::{Error, Result};

/// Largest admissible series truncation half-width.
const N_CAP: u64 = 100_000;

/// Below this Im(tau), evaluation first moves tau to a larger imaginary
/// part using tau -> tau + 2 and tau -> -1/tau.
const REDUCE_THRESHOLD: f64 = 0.05;

/// A point tau in the upper half-plane (constructor-enforced Im > 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    tau: Complex64,
}

impl UpperHalfPoint {
    pub fn new(tau: Complex64) -> Result<Self> {
        if tau.im > 0.0 && tau.im.is_finite() && tau.re.is_finite() {
            Ok(UpperHalfPoint { tau })
        } else {
            Err(Error::Domain("tau must satisfy Im(tau) > 0"))
        }
    }

    pub fn value(self) -> Complex64 {
        self.tau
    }
}

/// A truncated theta series value with its truncation point and a rigorous
/// bound on the discarded tail.
#[derive(Debug, Clone, Copy)]
pub struct ThetaValue {
    pub value: Complex64,
    pub truncation_n: u64,
    pub tail_bound: f64,
}

/// Smallest N with tail bound <= tol for terms |t_n| <= m(n), where m is
/// log-concave beyond n0 with ratio m(n+1)/m(n) <= rho(n).
fn choose_truncation(tol: f64, magnitude: impl Fn(u64) -> f64, ratio: impl Fn(u64) -> f64) -> Result<(u64, f64)> {
    let mut n = 1u64;
    loop {
        let rho = ratio(n + 1);
        if rho < 0.5 {
            // tail over both signs: 2 * m(N+1) / (1 - rho)
            let bound = 2.0 * magnitude(n + 1) / (1.0 - rho);
            if bound <= tol {
                return Ok((n, bound));
            }
        }
        n += 1;
        if n > N_CAP {
            return Err(Error::TruncationCap {
                needed: n,
                cap: N_CAP,
            });
        }
    }
}

/// theta(tau) = sum_{n in Z} e^{pi i n^2 tau}, with |value - theta(tau)|
/// <= tail_bound <= tol.
pub fn jacobi_theta(tau: UpperHalfPoint, tol: f64) -> Result<ThetaValue> {
    assert!(tol > 0.0);
    let (tau_red, factor) = reduce(tau.value());
    let scale = factor.norm();
    let raw = theta_series(tau_red, tol / scale.max(1e-3))?;
    Ok(ThetaValue {
        value: factor * raw.value,
        truncation_n: raw.truncation_n,
        tail_bound: raw.tail_bound * scale,
    })
}

/// Repeatedly apply tau -> tau + 2 and tau -> -1/tau until Im(tau) is
/// workable; returns (reduced tau, factor) with theta(tau) = factor *
/// theta(reduced).
fn reduce(mut tau: Complex64) -> (Complex64, Complex64) {
    let mut factor = Complex64::new(1.0, 0.0);
    for _ in 0..200 {
        if tau.im >= REDUCE_THRESHOLD {
            break;
        }
        // translate Re into (-1, 1]
        let shift = ((tau.re + 1.0) / 2.0).floor() * 2.0;
        tau.re -= shift;
        if tau.norm_sqr() < 1.0 {
            // theta(tau) = theta(-1/tau) / sqrt(-i tau)
            factor /= (-Complex64::i() * tau).sqrt();
            tau = -1.0 / tau;
        } else {
            break;
        }
    }
    (tau, factor)
}

fn theta_series(tau: Complex64, tol: f64) -> Result<ThetaValue> {
    let y = tau.im;
    let magnitude = |n: u64| (-PI * y * (n as f64) * (n as f64)).exp();
    let ratio = |n: u64| (-PI * y * (2.0 * n as f64 - 1.0)).exp();
    let (n_max, tail) = choose_truncation(tol, magnitude, ratio)?;
    let mut sum = Complex64::new(1.0, 0.0);
    for n in 1..=n_max {
        let nf = n as f64;
        sum += 2.0 * (Complex64::i() * PI * nf * nf * tau).exp();
    }
    Ok(ThetaValue {
        value: sum,
        truncation_n: n_max,
        tail_bound: tail,
    })
}

/// theta(z, tau) = sum_{n in Z} e^{2 pi i n z + pi i n^2 tau}.
///
/// The tail bound accounts for the e^{2 pi |Im z| |n|} growth factor;
/// fails if |Im z| is too large relative to Im(tau) for the bound to close
/// within the truncation cap.
pub fn jacobi_theta_two_var(z: Complex64, tau: UpperHalfPoint, tol: f64) -> Result<ThetaValue> {
    assert!(tol > 0.0);
    let t = tau.value();
    let y = t.im;
    let b = 2.0 * PI * z.im.abs();
    let magnitude = |n: u64| (b * n as f64 - PI * y * (n as f64) * (n as f64)).exp();
    let ratio = |n: u64| (b - PI * y * (2.0 * n as f64 - 1.0)).exp();
    let (n_max, tail) = choose_truncation(tol, magnitude, ratio)?;
    let mut sum = Complex64::new(1.0, 0.0);
    for n in 1..=n_max {
        let nf = n as f64;
        let quad = Complex64::i() * PI * nf * nf * t;
        let lin = Complex64::i() * 2.0 * PI * nf * z;
        sum += (lin + quad).exp() + (-lin + quad).exp();
    }
    Ok(ThetaValue {
        value: sum,
        truncation_n: n_max,
        tail_bound: tail,
    })
}

/// theta'(z, tau) = d/dz theta(z, tau) = sum_n 2 pi i n e^{2 pi i n z + pi i n^2 tau}.
pub fn jacobi_theta_deriv(z: Complex64, tau: UpperHalfPoint, tol: f64) -> Result<ThetaValue> {
    assert!(tol > 0.0);
    let t = tau.value();
    let y = t.im;
    let b = 2.0 * PI * z.im.abs();
    let magnitude = |n: u64| 2.0 * PI * n as f64 * (b * n as f64 - PI * y * (n as f64) * (n as f64)).exp();
    // extra factor (n+1)/n <= 2 folded into the ratio
    let ratio = |n: u64| 2.0 * (b - PI * y * (2.0 * n as f64 - 1.0)).exp();
    let (n_max, tail) = choose_truncation(tol, magnitude, ratio)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..=n_max {
        let nf = n as f64;
        let quad = Complex64::i() * PI * nf * nf * t;
        let lin = Complex64::i() * 2.0 * PI * nf * z;
        sum += Complex64::i() * 2.0 * PI * nf * ((lin + quad).exp() - (-lin + quad).exp());
    }
    Ok(ThetaValue {
        value: sum,
        truncation_n: n_max,
        tail_bound: tail,
    })
}

/// |theta(-1/tau) - sqrt(-i tau) theta(tau)|, both sides by series.
///
/// -i tau has positive real part on the upper half-plane, so the principal
/// square root is the right branch.
pub fn theta_transformation_residual(tau: UpperHalfPoint) -> Result<f64> {
    let t = tau.value();
    let lhs = jacobi_theta(UpperHalfPoint::new(-1.0 / t)?, 1e-14)?;
    let rhs = jacobi_theta(tau, 1e-14)?;
    Ok((lhs.value - (-Complex64::i() * t).sqrt() * rhs.value).norm())
}

/// Poisson summation check for the Gaussian f(x) = e^{-pi sigma (x+shift)^2}:
/// returns (sum_n f(n), sum_n fhat(n)), both truncated with tail bounds
/// below 1e-13.
pub fn poisson_check_gaussian(sigma: f64, shift: f64) -> (f64, f64) {
    assert!(sigma > 0.0);
    // lhs: direct lattice sum
    let mut lhs = 0.0f64;
    let mut n = 0i64;
    loop {
        let term_pos = (-PI * sigma * (n as f64 + shift).powi(2)).exp();
        let term_neg = if n > 0 {
            (-PI * sigma * (-n as f64 + shift).powi(2)).exp()
        } else {
            0.0
        };
        lhs += term_pos + term_neg;
        if n as f64 > shift.abs() + 1.0 && term_pos.max(term_neg) < 1e-18 {
            break;
        }
        n += 1;
    }
    // fhat(xi) = sigma^{-1/2} e^{2 pi i shift xi} e^{-pi xi^2 / sigma};
    // lattice sum collapses to a cosine series by the n <-> -n pairing
    let mut rhs = 1.0f64;
    let mut m = 1u64;
    loop {
        let term = (-PI * (m as f64) * (m as f64) / sigma).exp();
        rhs += 2.0 * term * (2.0 * PI * m as f64 * shift).cos();
        if term < 1e-18 {
            break;
        }
        m += 1;
    }
    (lhs, rhs / sigma.sqrt())
}
