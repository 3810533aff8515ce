//! Boundary and critical-line scans: non-vanishing of zeta on Re(s) = 1
//! and sign-change zero finding for the completed zeta function.

use num::complex::Complex64;

use crate::{Error, Result};

use super::zeta::{completed_zeta, zeta_euler_maclaurin};

/// Minimum of |zeta(1 + it)| over a grid.
#[derive(Debug, Clone, Copy)]
pub struct ScanMinimum {
    pub min_abs: f64,
    pub at_t: f64,
}

/// Result of a critical-line sweep: zero ordinates found by bisection on
/// sign changes of Lambda(1/2 + it), plus the largest imaginary part of
/// Lambda seen on the grid (which should be at rounding level, since the
/// construction is conjugate-symmetric).
#[derive(Debug, Clone)]
pub struct CriticalLineScan {
    pub zeros: Vec<f64>,
    pub max_im_lambda: f64,
}

/// The trigonometric polynomial 3 + 4 cos(t) + cos(2t) together with its
/// factored form 2 (1 + cos t)^2; the two are equal, so the polynomial is
/// nonnegative (the classical ingredient in the boundary non-vanishing
/// argument).
pub fn trig_poly(t: f64) -> (f64, f64) {
    let direct = 3.0 + 4.0 * t.cos() + (2.0 * t).cos();
    let half = 1.0 + t.cos();
    (direct, 2.0 * half * half)
}

/// Scan |zeta(1 + it)| for t on [t_lo, t_hi] with the given step and
/// report the grid minimum.
pub fn nonvanishing_scan(t_lo: f64, t_hi: f64, step: f64) -> Result<ScanMinimum> {
    if !(step > 0.0) || t_hi < t_lo {
        return Err(Error::Domain("scan needs t_lo <= t_hi and step > 0"));
    }
    let mut best = ScanMinimum {
        min_abs: f64::INFINITY,
        at_t: t_lo,
    };
    let steps = ((t_hi - t_lo) / step).round() as u64;
    for i in 0..=steps {
        let t = t_lo + i as f64 * step;
        let z = zeta_euler_maclaurin(Complex64::new(1.0, t))?;
        let a = z.value.norm();
        if a < best.min_abs {
            best = ScanMinimum { min_abs: a, at_t: t };
        }
    }
    Ok(best)
}

/// Sweep Lambda(1/2 + it) for t in [0, t_max] on a 0.05-step grid and
/// bisect every sign change of the (real) values down to ~1e-10.
pub fn critical_line_zeros(t_max: f64) -> Result<CriticalLineScan> {
    if !(t_max > 0.0) {
        return Err(Error::Domain("critical-line scan needs t_max > 0"));
    }
    let step = 0.05;
    let lambda = |t: f64| -> Result<Complex64> {
        Ok(completed_zeta(Complex64::new(0.5, t))?.value)
    };
    let mut zeros = Vec::new();
    let mut max_im = 0.0f64;
    let steps = (t_max / step).ceil() as u64;
    let mut prev_t = 0.0;
    let mut prev = lambda(0.0)?;
    max_im = max_im.max(prev.im.abs());
    for i in 1..=steps {
        let t = (i as f64 * step).min(t_max);
        let cur = lambda(t)?;
        max_im = max_im.max(cur.im.abs());
        if prev.re == 0.0 {
            zeros.push(prev_t);
        } else if cur.re != 0.0 && prev.re.signum() != cur.re.signum() {
            // bisection
            let (mut lo, mut hi) = (prev_t, t);
            let mut f_lo = prev.re;
            for _ in 0..60 {
                if hi - lo < 1e-10 {
                    break;
                }
                let mid = 0.5 * (lo + hi);
                let f_mid = lambda(mid)?.re;
                if f_mid == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if f_lo.signum() == f_mid.signum() {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            zeros.push(0.5 * (lo + hi));
        }
        prev = cur;
        prev_t = t;
    }
    Ok(CriticalLineScan {
        zeros,
        max_im_lambda: max_im,
    })
}
