//! Cross-route consistency sweeps: independent evaluation strategies must
//! agree wherever their domains overlap.

use num::complex::Complex64;
use rand::{Rng, SeedableRng};

use zetakit::characters::enumerate_characters;
use zetakit::lfunc;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn zeta_theta_mellin_vs_euler_maclaurin_sweep() {
    // 100 quasi-random points with Re in [-3, 4], |Im| <= 8
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let s = c(rng.gen_range(-3.0..4.0), rng.gen_range(-8.0..8.0));
        if (s - 1.0).norm() < 0.05 {
            continue;
        }
        let a = lfunc::riemann_zeta(s).unwrap();
        let b = lfunc::zeta_euler_maclaurin(s).unwrap();
        assert!(
            (a.value - b.value).norm() < 1e-8,
            "s = {s}: {} vs {}",
            a.value,
            b.value
        );
        checked += 1;
    }
}

#[test]
fn zeta_respects_conjugation() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let s = c(rng.gen_range(-2.0..3.0), rng.gen_range(0.2..6.0));
        let a = lfunc::riemann_zeta(s).unwrap();
        let b = lfunc::riemann_zeta(s.conj()).unwrap();
        assert!((a.value.conj() - b.value).norm() < 1e-10, "s = {s}");
    }
}

#[test]
fn hurwitz_parity_decomposition_sweep() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
    for _ in 0..12 {
        let alpha = rng.gen_range(0.05..0.95);
        let s = c(rng.gen_range(1.5..3.5), rng.gen_range(-2.0..2.0));
        let whole = lfunc::hurwitz(alpha, s, 1e-10).unwrap();
        let em = lfunc::hurwitz_direct_em(alpha, s).unwrap();
        assert!(
            (whole.value - em.value).norm() < 1e-8,
            "alpha = {alpha}, s = {s}"
        );
        // even/odd split reassembles the complementary shift too
        let even = lfunc::hurwitz_even(alpha, s, 1e-10).unwrap();
        let odd = lfunc::hurwitz_odd(alpha, s, 1e-10).unwrap();
        let em_comp = lfunc::hurwitz_direct_em(1.0 - alpha, s).unwrap();
        assert!(
            ((even.value - odd.value) - em_comp.value).norm() < 1e-8,
            "complement at alpha = {alpha}, s = {s}"
        );
    }
}

#[test]
fn dirichlet_l_respects_conjugation() {
    // L(conj chi, conj s) = conj L(chi, s)
    for q in [5u64, 7, 12] {
        let chars = enumerate_characters(q);
        for chi in &chars {
            let conj_chi = chars
                .iter()
                .find(|other| {
                    (1..=q).all(|k| {
                        other.eval(k as i64) == chi.eval(k as i64).conj()
                    })
                })
                .expect("conjugate character exists");
            let s = c(1.7, 1.3);
            let a = lfunc::dirichlet_l(chi, s, 1e-10).unwrap();
            let b = lfunc::dirichlet_l(conj_chi, s.conj(), 1e-10).unwrap();
            assert!(
                (a.value.conj() - b.value).norm() < 1e-8,
                "q = {q}"
            );
        }
    }
}

#[test]
fn dirichlet_l_euler_factor_identity() {
    // principal chi mod q: L(chi_0, s) = zeta(s) prod_{p | q} (1 - p^{-s})
    for q in [4u64, 6, 9, 10] {
        let chi0 = enumerate_characters(q).into_iter().next().unwrap();
        assert!(chi0.is_principal());
        for &sre in &[1.5, 2.0, 3.0] {
            let s = c(sre, 0.5);
            let l = lfunc::dirichlet_l(&chi0, s, 1e-10).unwrap();
            let mut expect = lfunc::riemann_zeta(s).unwrap().value;
            for p in [2u64, 3, 5, 7] {
                if q % p == 0 {
                    expect *= 1.0 - (-s * (p as f64).ln()).exp();
                }
            }
            assert!(
                (l.value - expect).norm() < 1e-8,
                "q = {q}, s = {s}: {} vs {expect}",
                l.value
            );
        }
    }
}
