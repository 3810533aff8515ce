//! Exact Bernoulli numbers and polynomials, the periodized Bernoulli
//! function on R/Z, and its Fourier coefficients.
//!
//! Sign convention: B_1 = -1/2, i.e. B_k = B_k(0) for the polynomial
//! family used throughout the crate.

use std::sync::Mutex;

use num::complex::Complex64;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational Bernoulli numbers B_0..B_max, extended lazily.
///
/// Immutable from the caller's point of view; extension is synchronized
/// internally, so a shared table is safe for concurrent use.
pub struct BernoulliTable {
    values: Mutex<Vec<BigRational>>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: Mutex::new(vec![BigRational::one()]),
        }
    }

    /// B_k by the defining recurrence sum_{j=0}^{k} C(k+1,j) B_j = 0.
    pub fn number(&self, k: usize) -> BigRational {
        let mut values = self.values.lock().unwrap();
        while values.len() <= k {
            let m = values.len(); // computing B_m
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(m+1, j), starting at j = 0
            for (j, b) in values.iter().enumerate() {
                acc += b * binom.clone();
                binom = binom * (m as i64 + 1 - j as i64) / (j as i64 + 1);
            }
            // binom is now C(m+1, m) = m+1
            let bm = -acc / BigRational::from(binom);
            values.push(bm);
        }
        values[k].clone()
    }

    /// Coefficients of B_k(x) = sum_j C(k,j) B_j x^{k-j}, exact, listed by
    /// ascending power of x.
    pub fn polynomial_coeffs(&self, k: usize) -> Vec<BigRational> {
        self.number(k); // ensure table depth
        let values = self.values.lock().unwrap();
        let mut coeffs = vec![BigRational::zero(); k + 1];
        let mut binom = BigInt::one();
        for j in 0..=k {
            coeffs[k - j] = &values[j] * BigRational::from(binom.clone());
            if j < k {
                binom = binom * (k as i64 - j as i64) / (j as i64 + 1);
            }
        }
        coeffs
    }
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

fn table() -> &'static BernoulliTable {
    static TABLE: std::sync::OnceLock<BernoulliTable> = std::sync::OnceLock::new();
    TABLE.get_or_init(BernoulliTable::new)
}

/// The k-th Bernoulli number as an exact rational.
pub fn bernoulli_number(k: usize) -> BigRational {
    table().number(k)
}

/// The k-th Bernoulli number rounded to f64.
pub fn bernoulli_number_f64(k: usize) -> f64 {
    ratio_to_f64(&bernoulli_number(k))
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or_else(|| {
        // fall back to a quotient of big floats via string-free scaling
        let bits = r.numer().bits().max(r.denom().bits()) as i64 - 900;
        if bits > 0 {
            let scaled = r.numer() >> bits;
            let den = r.denom() >> bits;
            scaled.to_f64().unwrap() / den.to_f64().unwrap()
        } else {
            f64::NAN
        }
    }) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// B_k(x), evaluated in floating point from exact rational coefficients
/// (Horner on ascending powers).
pub fn bernoulli_polynomial(k: usize, x: f64) -> f64 {
    let coeffs = table().polynomial_coeffs(k);
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * x + ratio_to_f64(c);
    }
    acc
}

/// B_k(x) at an exact rational argument.
pub fn bernoulli_polynomial_rational(k: usize, x: &BigRational) -> BigRational {
    let coeffs = table().polynomial_coeffs(k);
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// The period-1 function equal to B_k(x) on [0, 1).
///
/// frac(x) is computed as x - floor(x), so negative inputs land in [0, 1).
pub fn periodized_bernoulli(k: usize, x: f64) -> f64 {
    assert!(k >= 1, "periodized Bernoulli requires k >= 1");
    bernoulli_polynomial(k, x - x.floor())
}

/// n-th Fourier coefficient of the periodized Bernoulli function:
/// -k!/(2 pi i n)^k.  Rejects n = 0.
pub fn periodized_bernoulli_fourier_coeff(k: usize, n: i64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::Domain("Fourier coefficient index n must be nonzero"));
    }
    if k == 0 {
        return Err(Error::Domain("Fourier coefficient requires k >= 1"));
    }
    let mut fact = 1.0f64;
    for j in 2..=k {
        fact *= j as f64;
    }
    let base = Complex64::new(0.0, 2.0 * std::f64::consts::PI * n as f64);
    Ok(-fact / base.powu(k as u32))
}
