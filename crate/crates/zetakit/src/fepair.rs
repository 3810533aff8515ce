//! Meromorphic continuation of Mellin transforms for "functional equation
//! pairs": functions f, g on (0, inf) with f(1/x) = eps x^k g(x) and
//! constant-plus-rapid-decay behaviour at infinity.
//!
//! For such a pair, Lambda_f(s) = integral_0^inf t^{s-1} (f(t) - f_inf) dt
//! continues to all of C except simple poles at s = 0 and s = k, via
//!
//!   Lambda_f(s) = I_f(s) + eps I_g(k-s) - f_inf/s - eps g_inf/(k-s),
//!
//! where I_h(s) = integral_1^inf t^{s-1} (h(t) - h_inf) dt is entire.

use std::sync::Arc;

use num::complex::Complex64;

use crate::eval::{EvalResult, Method};
use crate::{quad, Error, Result};

/// A function handle returning (value, evaluation error bound) at t > 0.
pub type PairFn = Arc<dyn Fn(f64) -> (Complex64, f64) + Send + Sync>;

/// Exponential decay certificate: |h(x) - h_inf| <= c * e^{-r x} for x >= 1.
#[derive(Debug, Clone, Copy)]
pub struct Decay {
    pub c: f64,
    pub r: f64,
}

/// A weak FE-pair (f, g, k, eps, f_inf, g_inf) with decay certificates.
#[derive(Clone)]
pub struct WeakFEPair {
    f: PairFn,
    g: PairFn,
    k: f64,
    eps: Complex64,
    f_inf: Complex64,
    g_inf: Complex64,
    decay_f: Decay,
    decay_g: Decay,
}

/// Default guard radius around the poles at s = 0 and s = k.
pub const POLE_GUARD: f64 = 1e-8;

impl WeakFEPair {
    /// Builds the pair after verifying the defining relation
    /// f(1/x) = eps x^k g(x) on sample points x in [1, 10] and the decay
    /// certificates at x in {1, 2, 5, 10}.
    pub fn new(
        f: PairFn,
        g: PairFn,
        k: f64,
        eps: Complex64,
        f_inf: Complex64,
        g_inf: Complex64,
        decay_f: Decay,
        decay_g: Decay,
    ) -> Result<Self> {
        assert!(k > 0.0, "weight k must be positive");
        let pair = WeakFEPair {
            f,
            g,
            k,
            eps,
            f_inf,
            g_inf,
            decay_f,
            decay_g,
        };
        for i in 0..=18 {
            let x = 1.0 + 0.5 * i as f64;
            let (fv, fe) = (pair.f)(1.0 / x);
            let (gv, ge) = (pair.g)(x);
            let residual = (fv - pair.eps * x.powf(pair.k) * gv).norm();
            let slack = 1e-8 + fe + ge * x.powf(pair.k);
            if residual > slack {
                return Err(Error::PairRelation {
                    x,
                    residual,
                    tol: slack,
                });
            }
        }
        for &x in &[1.0, 2.0, 5.0, 10.0] {
            let (fv, fe) = (pair.f)(x);
            if (fv - pair.f_inf).norm() > pair.decay_f.c * (-pair.decay_f.r * x).exp() + fe + 1e-14
            {
                return Err(Error::Domain("decay certificate violated for f"));
            }
            let (gv, ge) = (pair.g)(x);
            if (gv - pair.g_inf).norm() > pair.decay_g.c * (-pair.decay_g.r * x).exp() + ge + 1e-14
            {
                return Err(Error::Domain("decay certificate violated for g"));
            }
        }
        Ok(pair)
    }

    pub fn weight(&self) -> f64 {
        self.k
    }

    pub fn root_number(&self) -> Complex64 {
        self.eps
    }

    /// The pair with f and g exchanged.  Substituting x -> 1/x in the
    /// defining relation forces the reciprocal root number.
    pub fn swapped(&self) -> Result<Self> {
        WeakFEPair::new(
            Arc::clone(&self.g),
            Arc::clone(&self.f),
            self.k,
            1.0 / self.eps,
            self.g_inf,
            self.f_inf,
            self.decay_g,
            self.decay_f,
        )
    }

    /// I_h = integral_1^inf t^{s-1} (h(t) - h_inf) dt with the tail beyond
    /// T bounded through the decay certificate.
    fn half_line_integral(
        h: &PairFn,
        h_inf: Complex64,
        decay: Decay,
        s: Complex64,
        tol: f64,
    ) -> Result<(Complex64, f64)> {
        let a = s.re;
        // choose T so that C T^{max(a-1,0)} e^{-rT} * 2/r <= tol/4, with T
        // past the maximum of t^{a-1} e^{-rt}
        let mut t_end = (2.0 * (a - 1.0).max(0.5) / decay.r).max(2.0);
        loop {
            let tail = decay.c * t_end.powf((a - 1.0).max(0.0)) * (-decay.r * t_end).exp() * 2.0
                / decay.r;
            if tail <= 0.25 * tol {
                let integrand =
                    |t: f64| ((s - 1.0) * t.ln()).exp() * ((h)(t).0 - h_inf);
                let (v, e) = quad::integrate(&integrand, 1.0, t_end, 0.5 * tol)?;
                return Ok((v, e + tail));
            }
            t_end *= 1.5;
            if t_end > 1e7 {
                return Err(Error::QuadratureNonConvergence { err: tail, tol });
            }
        }
    }

    /// Entire part I_f(s) + eps I_g(k-s) of the continuation.
    pub fn mellin_regular(&self, s: Complex64, tol: f64) -> Result<(Complex64, f64)> {
        let (vf, ef) =
            Self::half_line_integral(&self.f, self.f_inf, self.decay_f, s, 0.5 * tol)?;
        let (vg, eg) = Self::half_line_integral(
            &self.g,
            self.g_inf,
            self.decay_g,
            Complex64::new(self.k, 0.0) - s,
            0.5 * tol,
        )?;
        Ok((vf + self.eps * vg, ef + eg * self.eps.norm()))
    }

    /// Coefficients of the pole terms: Lambda_f(s) = regular(s)
    /// + pole_at_zero/s + pole_at_k/(k-s).
    pub fn pole_coefficients(&self) -> (Complex64, Complex64) {
        (-self.f_inf, -self.eps * self.g_inf)
    }

    /// The continued Mellin transform Lambda_f(s).
    ///
    /// For Re(s) > k this equals integral_0^inf t^{s-1} (f(t) - f_inf) dt;
    /// elsewhere it is the meromorphic continuation.  Errors within
    /// [`POLE_GUARD`] of the poles at 0 and k.
    pub fn mellin_continued(&self, s: Complex64, tol: f64) -> Result<EvalResult> {
        assert!(tol > 0.0);
        if self.f_inf.norm() > 0.0 && s.norm() < POLE_GUARD {
            return Err(Error::NearPole {
                pole_re: 0.0,
                pole_im: 0.0,
                guard: POLE_GUARD,
            });
        }
        if self.g_inf.norm() > 0.0 && (s - self.k).norm() < POLE_GUARD {
            return Err(Error::NearPole {
                pole_re: self.k,
                pole_im: 0.0,
                guard: POLE_GUARD,
            });
        }
        let (reg, err) = self.mellin_regular(s, tol)?;
        let mut value = reg;
        if self.f_inf.norm() > 0.0 {
            value -= self.f_inf / s;
        }
        if self.g_inf.norm() > 0.0 {
            value -= self.eps * self.g_inf / (self.k - s);
        }
        Ok(EvalResult::rigorous(value, err, Method::ThetaMellin))
    }

    /// |Lambda_f(s) - eps Lambda_g(k-s)|, with Lambda_g built from the
    /// swapped pair.
    pub fn functional_equation_residual(&self, s: Complex64) -> Result<f64> {
        let lhs = self.mellin_continued(s, 1e-11)?;
        let swapped = self.swapped()?;
        let rhs = swapped.mellin_continued(Complex64::new(self.k, 0.0) - s, 1e-11)?;
        Ok((lhs.value - self.eps * rhs.value).norm())
    }

    /// Residues of Lambda_f at its poles: (-f_inf at s = 0, eps g_inf at s = k).
    pub fn residue_at_poles(&self) -> (Complex64, Complex64) {
        (-self.f_inf, self.eps * self.g_inf)
    }
}

/// The basic example: f = g = theta(i x) with k = 1/2, eps = 1,
/// f_inf = g_inf = 1.
pub fn theta_pair() -> Result<WeakFEPair> {
    let f: PairFn = Arc::new(|t: f64| {
        let tau = crate::theta::UpperHalfPoint::new(Complex64::new(0.0, t)).unwrap();
        let v = crate::theta::jacobi_theta(tau, 1e-14).unwrap();
        (v.value, v.tail_bound)
    });
    let g = Arc::clone(&f);
    // |theta(it) - 1| <= 2.1 e^{-pi t} for t >= 1
    let decay = Decay {
        c: 2.1,
        r: std::f64::consts::PI,
    };
    WeakFEPair::new(
        f,
        g,
        0.5,
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        decay,
        decay,
    )
}
