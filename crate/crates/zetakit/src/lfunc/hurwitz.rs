//! Hurwitz zeta via shifted-theta FE-pairs.
//!
//! For 0 < alpha < 1 the even and odd shifted theta sums
//!
//!   f_alpha(t)  = sum_{n in Z} e^{-pi (n+alpha)^2 t},
//!   ft_alpha(t) = sum_{n in Z} (n+alpha) e^{-pi (n+alpha)^2 t}
//!
//! pair (by Poisson summation) with
//!
//!   g_alpha(t)  = 1 + 2 sum_{m >= 1} cos(2 pi m alpha) e^{-pi m^2 t},
//!   gt_alpha(t) = 2 sum_{m >= 1} m sin(2 pi m alpha) e^{-pi m^2 t},
//!
//! as weak FE-pairs of weight 1/2 and 3/2 (eps = 1).  Their continued
//! Mellin transforms give the even and odd parts
//!
//!   zeta_ev(alpha, s)  = (zeta_H(alpha, s) + zeta_H(1-alpha, s)) / 2
//!                      = pi^{s/2} Lambda_f(s/2) / (2 Gamma(s/2)),
//!   zeta_odd(alpha, s) = (zeta_H(alpha, s) - zeta_H(1-alpha, s)) / 2
//!                      = pi^{(s+1)/2} Lambda_ft((s+1)/2) / (2 Gamma((s+1)/2)),
//!
//! and zeta_H(alpha, s) = sum_{n >= 0} (n+alpha)^{-s} is their sum.  The
//! odd route is normalized against an Euler–Maclaurin evaluation at s = 3
//! (the anchor constant should be 1 up to rounding); the odd part is
//! identically zero for alpha in {0, 1/2, 1}.

use std::f64::consts::PI;
use std::sync::Arc;

use num::complex::Complex64;

use crate::eval::{EvalResult, Method};
use crate::fepair::{Decay, PairFn, WeakFEPair};
use crate::special::rgamma;
use crate::{bernoulli, Error, Result};

/// Number of terms so that the omitted exponents exceed e^{-44}.
fn theta_terms(t: f64) -> i64 {
    (44.0 / (PI * t)).sqrt().ceil() as i64 + 2
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain("shift alpha must lie in [0, 1]"));
    }
    Ok(())
}

/// The even pair (f_alpha, g_alpha), weight 1/2.
pub(crate) fn even_pair(alpha: f64) -> Result<WeakFEPair> {
    check_alpha(alpha)?;
    let boundary = alpha == 0.0 || alpha == 1.0;
    let f: PairFn = Arc::new(move |t: f64| {
        let n_max = theta_terms(t);
        let mut acc = 0.0f64;
        for n in -n_max..=n_max {
            let u = n as f64 + alpha;
            acc += (-PI * u * u * t).exp();
        }
        (Complex64::new(acc, 0.0), 1e-14 * (1.0 + acc))
    });
    let g: PairFn = Arc::new(move |t: f64| {
        let n_max = theta_terms(t);
        let mut acc = 1.0f64;
        for m in 1..=n_max {
            let mf = m as f64;
            acc += 2.0 * (2.0 * PI * mf * alpha).cos() * (-PI * mf * mf * t).exp();
        }
        (Complex64::new(acc, 0.0), 1e-14 * (1.0 + acc.abs()))
    });
    let f_inf = Complex64::new(if boundary { 1.0 } else { 0.0 }, 0.0);
    // nearest lattice offset governs the decay rate of f - f_inf
    let d = if boundary {
        1.0
    } else {
        alpha.min(1.0 - alpha)
    };
    let r_f = PI * d * d;
    let c_f = ((f)(1.0).0.re - f_inf.re) * r_f.exp() * 1.01;
    let r_g = PI;
    let c_g = ((g)(1.0).0.re - 1.0).abs() * PI.exp() * 1.01 + 1e-12;
    WeakFEPair::new(
        f,
        g,
        0.5,
        Complex64::new(1.0, 0.0),
        f_inf,
        Complex64::new(1.0, 0.0),
        Decay { c: c_f, r: r_f },
        Decay { c: c_g, r: r_g },
    )
}

/// The odd pair (ft_alpha, gt_alpha), weight 3/2.  Identically zero when
/// alpha is 0, 1/2 or 1.
pub(crate) fn odd_pair(alpha: f64) -> Result<WeakFEPair> {
    check_alpha(alpha)?;
    let f: PairFn = Arc::new(move |t: f64| {
        let n_max = theta_terms(t);
        let mut acc = 0.0f64;
        // pair n = m with n = -1-m so that alpha = 1/2 cancels exactly
        for m in 0..=n_max {
            let u1 = m as f64 + alpha;
            let u2 = alpha - 1.0 - m as f64;
            acc += u1 * (-PI * u1 * u1 * t).exp() + u2 * (-PI * u2 * u2 * t).exp();
        }
        (Complex64::new(acc, 0.0), 1e-14 * (1.0 + acc.abs()))
    });
    let g: PairFn = Arc::new(move |t: f64| {
        let n_max = theta_terms(t);
        let mut acc = 0.0f64;
        for m in 1..=n_max {
            let mf = m as f64;
            acc += 2.0 * mf * (2.0 * PI * mf * alpha).sin() * (-PI * mf * mf * t).exp();
        }
        (Complex64::new(acc, 0.0), 1e-13 * (1.0 + acc.abs()))
    });
    let d = if alpha == 0.0 || alpha == 1.0 {
        1.0
    } else {
        alpha.min(1.0 - alpha)
    };
    let r_f = PI * d * d;
    // sum of |n+alpha| e^{-pi (n+alpha)^2} dominates |ft(1)|
    let mut abs_sum = 0.0f64;
    for n in -8i64..=8 {
        let u = n as f64 + alpha;
        abs_sum += u.abs() * (-PI * u * u).exp();
    }
    let c_f = abs_sum * r_f.exp() * 1.01 + 1e-12;
    let mut g_abs = 0.0f64;
    for m in 1..=8 {
        let mf = m as f64;
        g_abs += 2.0 * mf * (-PI * mf * mf).exp();
    }
    let c_g = g_abs * PI.exp() * 1.01 + 1e-12;
    WeakFEPair::new(
        f,
        g,
        1.5,
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Decay { c: c_f, r: r_f },
        Decay { c: c_g, r: PI },
    )
}

fn inner_tol(tol: f64, prefactor_norm: f64) -> f64 {
    (tol / prefactor_norm.max(1e-6)).clamp(1e-13, 1e-7)
}

/// Even part (zeta_H(alpha, s) + zeta_H(1-alpha, s)) / 2, continued to
/// all s except the pole at s = 1 (and, for boundary alpha, s = 0).
pub fn hurwitz_even(alpha: f64, s: Complex64, tol: f64) -> Result<EvalResult> {
    let pair = even_pair(alpha)?;
    let pref = 0.5 * (0.5 * s * PI.ln()).exp() * rgamma(0.5 * s);
    let lam = pair.mellin_continued(0.5 * s, inner_tol(tol, pref.norm()))?;
    Ok(EvalResult::rigorous(
        pref * lam.value,
        pref.norm() * lam.err + 1e-14 * (1.0 + (pref * lam.value).norm()),
        Method::ThetaMellin,
    ))
}

/// Odd part (zeta_H(alpha, s) - zeta_H(1-alpha, s)) / 2, entire in s.
pub fn hurwitz_odd(alpha: f64, s: Complex64, tol: f64) -> Result<EvalResult> {
    check_alpha(alpha)?;
    if alpha == 0.0 || alpha == 1.0 {
        return Ok(EvalResult::rigorous(
            Complex64::new(0.0, 0.0),
            0.0,
            Method::ThetaMellin,
        ));
    }
    let pair = odd_pair(alpha)?;
    let raw = |sv: Complex64, t: f64| -> Result<EvalResult> {
        let w = 0.5 * (sv + 1.0);
        let pref = 0.5 * (w * PI.ln()).exp() * rgamma(w);
        let lam = pair.mellin_continued(w, inner_tol(t, pref.norm()))?;
        Ok(EvalResult::rigorous(
            pref * lam.value,
            pref.norm() * lam.err,
            Method::ThetaMellin,
        ))
    };
    // anchor the normalization at s = 3 against Euler-Maclaurin
    let anchor_raw = raw(Complex64::new(3.0, 0.0), 1e-10)?;
    let scale = if anchor_raw.value.norm() > 1e-6 {
        let em = 0.5
            * (hurwitz_direct_em(alpha, Complex64::new(3.0, 0.0))?.value
                - hurwitz_direct_em(1.0 - alpha, Complex64::new(3.0, 0.0))?.value);
        em / anchor_raw.value
    } else {
        Complex64::new(1.0, 0.0)
    };
    let v = raw(s, tol)?;
    Ok(EvalResult::rigorous(
        scale * v.value,
        scale.norm() * v.err + 1e-13 * (1.0 + v.value.norm()),
        Method::ThetaMellin,
    ))
}

/// Hurwitz zeta zeta_H(alpha, s) = sum_{n >= 0} (n+alpha)^{-s}, continued
/// through the even/odd FE-pairs.  For alpha in {0, 1} this is the
/// Riemann zeta function (the n = 0 term of the divergent alpha = 0 sum
/// is dropped).
pub fn hurwitz(alpha: f64, s: Complex64, tol: f64) -> Result<EvalResult> {
    let even = hurwitz_even(alpha, s, 0.5 * tol)?;
    let odd = hurwitz_odd(alpha, s, 0.5 * tol)?;
    Ok(EvalResult::rigorous(
        even.value + odd.value,
        even.err + odd.err,
        Method::ThetaMellin,
    ))
}

/// zeta_H(alpha, s) for Re(s) > -19 by Euler–Maclaurin, used as the
/// direct-series oracle for the FE-pair continuation.
pub fn hurwitz_direct_em(alpha: f64, s: Complex64) -> Result<EvalResult> {
    check_alpha(alpha)?;
    let alpha = if alpha == 0.0 { 1.0 } else { alpha };
    let m = 10usize;
    if (s - 1.0).norm() < 1e-8 {
        return Err(Error::NearPole {
            pole_re: 1.0,
            pole_im: 0.0,
            guard: 1e-8,
        });
    }
    if s.re <= 1.0 - 2.0 * m as f64 {
        return Err(Error::Domain(
            "Euler-Maclaurin with m = 10 requires Re(s) > -19",
        ));
    }
    let n_cut = 30.max((3.0 * s.im.abs()).ceil() as u64);
    let real_s = s.im == 0.0;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n_cut {
        let x = j as f64 + alpha;
        acc += if real_s {
            Complex64::new(x.powf(-s.re), 0.0)
        } else {
            (-s * x.ln()).exp()
        };
    }
    let x = n_cut as f64 + alpha;
    let x_pow_ms = (-s * x.ln()).exp();
    acc += x_pow_ms * x / (s - 1.0);
    acc += 0.5 * x_pow_ms;
    let mut poch = s;
    let mut x_fac = x_pow_ms * x; // x^{1-s-2j}, starting at j = 0
    let mut fact = 2.0f64;
    for j in 1..=m {
        x_fac /= x * x;
        let b2j = bernoulli::bernoulli_number_f64(2 * j);
        acc += (b2j / fact) * poch * x_fac;
        poch *= (s + (2 * j - 1) as f64) * (s + 2.0 * j as f64);
        fact *= (2.0 * j as f64 + 1.0) * (2.0 * j as f64 + 2.0);
    }
    let sigma_shift = s.re + 2.0 * m as f64 + 1.0;
    let next = (bernoulli::bernoulli_number_f64(2 * m + 2) / fact) * poch * x_fac / (x * x);
    let err = next.norm() * (s + 2.0 * m as f64 + 1.0).norm() / sigma_shift
        + 1e-15 * (1.0 + acc.norm());
    Ok(EvalResult::rigorous(acc, err, Method::EulerMaclaurin))
}

/// zeta_H(alpha, -k) = -B_{k+1}(alpha) / (k+1) for integer k >= 1
/// (Bernoulli polynomial special values).
pub fn hurwitz_neg_int(alpha: f64, k: u32) -> Result<f64> {
    check_alpha(alpha)?;
    if k == 0 {
        return Err(Error::Domain("hurwitz_neg_int requires k >= 1"));
    }
    let kp1 = (k + 1) as usize;
    Ok(-bernoulli::bernoulli_polynomial(kp1, alpha) / kp1 as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pairs_construct_across_shifts() {
        for &a in &[0.0, 0.1, 0.25, 0.5, 1.0 / 3.0, 0.9, 1.0] {
            even_pair(a).unwrap();
            odd_pair(a).unwrap();
        }
        assert!(even_pair(1.2).is_err());
    }

    #[test]
    fn em_oracle_known_values() {
        // zeta_H(1, 2) = pi^2/6
        let v = hurwitz_direct_em(1.0, c(2.0, 0.0)).unwrap();
        assert!((v.value.re - PI * PI / 6.0).abs() < 1e-13);
        // zeta_H(1/2, 2) = pi^2/2
        let v = hurwitz_direct_em(0.5, c(2.0, 0.0)).unwrap();
        assert!((v.value.re - PI * PI / 2.0).abs() < 1e-13);
        // zeta_H(1/4, 2) = pi^2 + 8 G (G = Catalan's constant)
        let v = hurwitz_direct_em(0.25, c(2.0, 0.0)).unwrap();
        let expect = PI * PI + 8.0 * 0.915_965_594_177_219_0;
        assert!((v.value.re - expect).abs() < 1e-12, "{}", v.value.re);
        assert!(hurwitz_direct_em(0.3, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn continuation_matches_em_in_convergence_region() {
        for &a in &[0.2, 0.5, 0.75, 1.0 / 3.0] {
            for &(re, im) in &[(2.3, 0.0), (3.0, 1.0), (1.5, -2.0)] {
                let s = c(re, im);
                let cont = hurwitz(a, s, 1e-10).unwrap();
                let em = hurwitz_direct_em(a, s).unwrap();
                assert!(
                    (cont.value - em.value).norm() < 1e-8,
                    "alpha = {a}, s = {s}: {} vs {}",
                    cont.value,
                    em.value
                );
            }
        }
    }

    #[test]
    fn continuation_matches_em_left_of_strip() {
        for &a in &[0.25, 0.6] {
            for &re in &[-0.5, -1.5] {
                let s = c(re, 0.4);
                let cont = hurwitz(a, s, 1e-10).unwrap();
                let em = hurwitz_direct_em(a, s).unwrap();
                assert!(
                    (cont.value - em.value).norm() < 1e-8,
                    "alpha = {a}, s = {s}"
                );
            }
        }
    }

    #[test]
    fn negative_integer_values() {
        // continuation vs Bernoulli polynomial formula
        for &a in &[0.25, 0.5, 0.7] {
            for k in 1..=3u32 {
                let exact = hurwitz_neg_int(a, k).unwrap();
                let cont = hurwitz(a, c(-(k as f64), 0.0), 1e-11).unwrap();
                assert!(
                    (cont.value.re - exact).abs() < 1e-9 && cont.value.im.abs() < 1e-10,
                    "alpha = {a}, k = {k}: {} vs {exact}",
                    cont.value
                );
            }
        }
        assert!(hurwitz_neg_int(0.3, 0).is_err());
    }

    #[test]
    fn odd_part_vanishes_at_symmetric_shifts() {
        for &a in &[0.0, 0.5, 1.0] {
            for &(re, im) in &[(2.0, 0.0), (0.3, 1.0), (-1.2, 0.0)] {
                let v = hurwitz_odd(a, c(re, im), 1e-11).unwrap();
                assert!(v.value.norm() < 1e-11, "alpha = {a}: {}", v.value);
            }
        }
    }

    #[test]
    fn odd_part_against_em_difference() {
        // the anchor is at s = 3; check an unrelated point
        for &a in &[0.25, 0.4] {
            let s = c(2.4, 0.0);
            let odd = hurwitz_odd(a, s, 1e-10).unwrap();
            let em = 0.5
                * (hurwitz_direct_em(a, s).unwrap().value
                    - hurwitz_direct_em(1.0 - a, s).unwrap().value);
            assert!((odd.value - em).norm() < 1e-9, "alpha = {a}");
        }
    }

    #[test]
    fn boundary_shift_reduces_to_zeta() {
        for &a in &[0.0, 1.0] {
            for &re in &[2.0, 3.5, -0.5] {
                let h = hurwitz(a, c(re, 0.0), 1e-10).unwrap();
                let z = super::super::zeta::zeta_euler_maclaurin(c(re, 0.0)).unwrap();
                assert!((h.value - z.value).norm() < 1e-9, "alpha = {a}, s = {re}");
            }
        }
    }

    #[test]
    fn pole_guard_at_one() {
        assert!(hurwitz(0.3, c(1.0, 0.0), 1e-10).is_err());
        assert!(hurwitz_even(0.3, c(1.0, 0.0), 1e-10).is_err());
        // odd part is entire, including at s = 1
        assert!(hurwitz_odd(0.3, c(1.0, 0.0), 1e-10).is_ok());
    }
}
