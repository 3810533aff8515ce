//! Dirichlet L-functions assembled from Hurwitz parts.
//!
//! Writing L(chi, s) = N^{-s} sum_k chi(k) zeta_H(k/N, s) over the units
//! k mod N and splitting zeta_H into even and odd parts, only the part
//! matching the parity of chi survives (chi(k) and chi(N-k) combine).
//! Even characters go through the weight-1/2 pairs, where the pole term
//! of each zeta_ev at s = 1 is independent of the shift, so it enters
//! multiplied by sum_k chi(k): zero for nonprincipal chi (making L
//! entire), phi(N) for the principal character (the expected pole).  Odd
//! characters go through the entire weight-3/2 route.

use std::f64::consts::PI;

use num::complex::Complex64;
use num::integer::gcd;

use crate::characters::{euler_phi, CharValue, DirichletCharacter};
use crate::eval::{EvalResult, Method};
use crate::special::rgamma;
use crate::{Error, Result};

use super::hurwitz::{even_pair, hurwitz_direct_em, hurwitz_odd};
use super::zeta::riemann_zeta;

/// L(chi, s) by analytic continuation, valid in the whole plane; errors
/// near s = 1 only for the principal character (and for the modulus-1
/// character, where it is the Riemann zeta pole — s = 1 exactly gives
/// zeta's junk-value branch instead).
pub fn dirichlet_l(chi: &DirichletCharacter, s: Complex64, tol: f64) -> Result<EvalResult> {
    let n = chi.modulus();
    if n == 1 {
        return riemann_zeta(s);
    }
    if chi.is_principal() && (s - 1.0).norm() < 1e-8 {
        return Err(Error::NearPole {
            pole_re: 1.0,
            pole_im: 0.0,
            guard: 1e-8,
        });
    }
    let units: Vec<u64> = (1..n).filter(|&k| gcd(k, n) == 1).collect();
    let n_pow = (-s * (n as f64).ln()).exp();
    let per_term_tol = tol / units.len() as f64;
    if chi.is_even() {
        let pref = 0.5 * (0.5 * s * PI.ln()).exp() * rgamma(0.5 * s);
        let inner = (per_term_tol / pref.norm().max(1e-6)).clamp(1e-13, 1e-7);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut err = 0.0f64;
        for &k in &units {
            let cv = chi.eval(k as i64);
            debug_assert!(cv != CharValue::Zero);
            let pair = even_pair(k as f64 / n as f64)?;
            let (reg, e) = pair.mellin_regular(0.5 * s, inner)?;
            acc += cv.to_complex() * reg;
            err += e;
        }
        // shift-independent pole term -1/(1/2 - s/2) = 2/(s-1), weighted
        // by sum_k chi(k)
        let char_sum = if chi.is_principal() {
            euler_phi(n) as f64
        } else {
            0.0
        };
        if char_sum != 0.0 {
            acc += char_sum * 2.0 / (s - 1.0);
        }
        let value = n_pow * pref * acc;
        Ok(EvalResult::rigorous(
            value,
            n_pow.norm() * pref.norm() * err + 1e-14 * (1.0 + value.norm()),
            Method::ThetaMellin,
        ))
    } else {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut err = 0.0f64;
        for &k in &units {
            let cv = chi.eval(k as i64);
            debug_assert!(cv != CharValue::Zero);
            let h = hurwitz_odd(k as f64 / n as f64, s, per_term_tol)?;
            acc += cv.to_complex() * h.value;
            err += h.err;
        }
        let value = n_pow * acc;
        Ok(EvalResult::rigorous(
            value,
            n_pow.norm() * err + 1e-14 * (1.0 + value.norm()),
            Method::ThetaMellin,
        ))
    }
}

/// L(chi, s) for Re(s) > 1 as the Euler–Maclaurin-accelerated Dirichlet
/// series N^{-s} sum_k chi(k) zeta_H(k/N, s); the independent oracle for
/// [`dirichlet_l`].
pub fn dirichlet_l_direct(chi: &DirichletCharacter, s: Complex64) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(Error::Domain(
            "the Dirichlet series oracle requires Re(s) > 1",
        ));
    }
    let n = chi.modulus();
    if n == 1 {
        return hurwitz_direct_em(1.0, s);
    }
    let n_pow = (-s * (n as f64).ln()).exp();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0f64;
    for k in 1..n {
        if gcd(k, n) != 1 {
            continue;
        }
        let h = hurwitz_direct_em(k as f64 / n as f64, s)?;
        acc += chi.eval(k as i64).to_complex() * h.value;
        err += h.err;
    }
    Ok(EvalResult::rigorous(
        n_pow * acc,
        n_pow.norm() * err,
        Method::EulerMaclaurin,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn chi4() -> DirichletCharacter {
        enumerate_characters(4)
            .into_iter()
            .find(|c| !c.is_principal())
            .unwrap()
    }

    #[test]
    fn chi4_special_values() {
        let chi = chi4();
        assert!(!chi.is_even());
        // L(chi_4, 1) = pi/4 (Leibniz)
        let l1 = dirichlet_l(&chi, c(1.0, 0.0), 1e-11).unwrap();
        assert!((l1.value.re - PI / 4.0).abs() < 1e-9, "{}", l1.value);
        assert!(l1.value.im.abs() < 1e-10);
        // L(chi_4, 2) = Catalan's constant
        let l2 = dirichlet_l(&chi, c(2.0, 0.0), 1e-11).unwrap();
        assert!((l2.value.re - 0.915_965_594_177_219_0).abs() < 1e-9);
        // L(chi_4, 0) = 1/2 and the trivial zero at s = -1
        let l0 = dirichlet_l(&chi, c(0.0, 0.0), 1e-11).unwrap();
        assert!((l0.value.re - 0.5).abs() < 1e-8, "{}", l0.value);
        let lm1 = dirichlet_l(&chi, c(-1.0, 0.0), 1e-11).unwrap();
        assert!(lm1.value.norm() < 1e-8);
    }

    #[test]
    fn principal_character_euler_factors() {
        // L(chi_0 mod 4, 2) = zeta(2) (1 - 2^{-2}) = pi^2 / 8
        let chi0 = enumerate_characters(4).into_iter().next().unwrap();
        assert!(chi0.is_principal());
        let v = dirichlet_l(&chi0, c(2.0, 0.0), 1e-11).unwrap();
        assert!((v.value.re - PI * PI / 8.0).abs() < 1e-9, "{}", v.value);
        // pole guard near s = 1
        assert!(dirichlet_l(&chi0, c(1.0, 0.0), 1e-10).is_err());
        assert!(dirichlet_l(&chi0, c(1.0 + 1e-9, 0.0), 1e-10).is_err());
    }

    #[test]
    fn nonprincipal_characters_entire_at_one() {
        for q in [3u64, 5, 8] {
            for chi in enumerate_characters(q) {
                if chi.is_principal() {
                    continue;
                }
                let v = dirichlet_l(&chi, c(1.0, 0.0), 1e-10).unwrap();
                assert!(v.value.norm() > 1e-3, "q = {q}: L(1) = {}", v.value);
            }
        }
    }

    #[test]
    fn continuation_agrees_with_direct_series() {
        for q in [3u64, 4, 5, 8] {
            for chi in enumerate_characters(q) {
                for &s in &[c(2.0, 0.0), c(2.0, 1.0)] {
                    let a = dirichlet_l(&chi, s, 1e-10).unwrap();
                    let b = dirichlet_l_direct(&chi, s).unwrap();
                    assert!(
                        (a.value - b.value).norm() < 1e-8,
                        "q = {q}, s = {s}: {} vs {}",
                        a.value,
                        b.value
                    );
                }
            }
        }
    }

    #[test]
    fn modulus_one_is_zeta() {
        let triv = enumerate_characters(1).into_iter().next().unwrap();
        let v = dirichlet_l(&triv, c(2.0, 0.0), 1e-11).unwrap();
        assert!((v.value.re - PI * PI / 6.0).abs() < 1e-10);
        // s = 1 goes through zeta's junk-value branch, not an error
        let j = dirichlet_l(&triv, c(1.0, 0.0), 1e-11).unwrap();
        assert_eq!(j.method, Method::ThetaMellinJunk);
    }

    #[test]
    fn direct_series_requires_convergence() {
        assert!(dirichlet_l_direct(&chi4(), c(0.9, 0.0)).is_err());
    }
}
