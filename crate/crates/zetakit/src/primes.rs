//! Sieve tables (smallest prime factor, Moebius, von Mangoldt) and the
//! analytic machinery behind primes in arithmetic progressions:
//! residue-class von Mangoldt L-series, the character decomposition
//! identity, divisor-convolution positivity, and prime-counting
//! demonstrators.

use num::complex::Complex64;
use num::integer::gcd;

use crate::characters::{CharValue, DirichletCharacter};
use crate::eval::{EvalResult, Method};
use crate::{Error, Result};

/// Hard cap on sieve size (memory guard).
const SIEVE_CAP: u64 = 200_000_000;

/// Smallest-prime-factor sieve up to `limit`, with Moebius and von
/// Mangoldt tables derived on demand.  Immutable after construction.
pub struct SieveData {
    limit: u64,
    spf: Vec<u32>,
}

/// Build the sieve (linear sieve on the smallest-prime-factor table).
pub fn sieve(limit: u64) -> Result<SieveData> {
    if limit < 2 {
        return Err(Error::Domain("sieve limit must be >= 2"));
    }
    if limit > SIEVE_CAP {
        return Err(Error::SizeCap {
            requested: limit,
            cap: SIEVE_CAP,
        });
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        for &p in &primes {
            let ip = i * p as usize;
            if p > spf[i] || ip > n {
                break;
            }
            spf[ip] = p;
        }
    }
    Ok(SieveData { limit, spf })
}

impl SieveData {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf[n as usize] == n as u32
    }

    /// Moebius mu(n).
    pub fn mobius(&self, n: u64) -> i32 {
        assert!(n >= 1 && n <= self.limit);
        let mut m = n as usize;
        let mut mu = 1i32;
        while m > 1 {
            let p = self.spf[m] as usize;
            m /= p;
            if m % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        mu
    }

    /// von Mangoldt Lambda(n): log p when n = p^k, else 0.
    pub fn von_mangoldt(&self, n: u64) -> f64 {
        if n < 2 || n > self.limit {
            return 0.0;
        }
        let p = self.spf[n as usize] as u64;
        let mut m = n;
        while m % p == 0 {
            m /= p;
        }
        if m == 1 {
            (p as f64).ln()
        } else {
            0.0
        }
    }

    /// Iterator over primes <= min(x, limit).
    pub fn primes_up_to(&self, x: u64) -> impl Iterator<Item = u64> + '_ {
        let hi = x.min(self.limit);
        (2..=hi).filter(move |&n| self.is_prime(n))
    }

    /// #{p prime <= x : p = a mod q}.
    pub fn count_primes_mod(&self, x: u64, q: u64, a: u64) -> u64 {
        self.primes_up_to(x).filter(|&p| p % q == a % q).count() as u64
    }

    /// sum_{n <= x, n = a mod q} Lambda(n)/n.
    pub fn chebyshev_progression_partial(&self, q: u64, a: u64, x: u64) -> f64 {
        let hi = x.min(self.limit);
        let mut acc = 0.0f64;
        let mut n = a % q;
        if n == 0 {
            n = q;
        }
        while n <= hi {
            let l = self.von_mangoldt(n);
            if l != 0.0 {
                acc += l / n as f64;
            }
            n += q;
        }
        acc
    }
}

/// -L'/L(chi, s) = sum_{n <= N} Lambda(n) chi(n) n^{-s} plus a heuristic
/// tail estimate.  Requires Re(s) > 1.
pub fn neg_log_deriv_l(
    chi: &DirichletCharacter,
    s: Complex64,
    n_terms: u64,
    sieve: &SieveData,
) -> Result<EvalResult> {
    if s.re <= 1.0 {
        return Err(Error::Domain("-L'/L series requires Re(s) > 1"));
    }
    let hi = n_terms.min(sieve.limit);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 2..=hi {
        let lam = sieve.von_mangoldt(n);
        if lam == 0.0 {
            continue;
        }
        let cv = chi.eval(n as i64);
        if cv == CharValue::Zero {
            continue;
        }
        acc += lam * cv.to_complex() * (-s * (n as f64).ln()).exp();
    }
    // tail ~ integral_N^inf log(t) t^{-sigma} dt
    let sigma = s.re;
    let nf = hi as f64;
    let tail = nf.powf(1.0 - sigma) * (nf.ln() / (sigma - 1.0) + 1.0 / (sigma - 1.0).powi(2));
    Ok(EvalResult::heuristic(acc, tail, Method::DirectSeries))
}

/// The residue-class von Mangoldt L-series both ways: directly as
/// sum_{n = a mod q} Lambda(n) n^{-s}, and as
/// (1/phi(q)) sum_chi conj(chi(a)) (-L'/L)(chi, s).
///
/// Agreement of the two exercises the orthogonality relations.
pub fn residue_class_lseries(
    q: u64,
    a: u64,
    s: Complex64,
    n_terms: u64,
    sieve: &SieveData,
) -> Result<(EvalResult, EvalResult)> {
    if gcd(a, q) != 1 {
        return Err(Error::Domain(
            "residue_class_lseries requires gcd(a, q) = 1",
        ));
    }
    if s.re <= 1.0 {
        return Err(Error::Domain("residue-class L-series requires Re(s) > 1"));
    }
    let hi = n_terms.min(sieve.limit);
    // one pass: accumulate per-class sums
    let mut class_sums = vec![Complex64::new(0.0, 0.0); q as usize];
    let real_s = s.im == 0.0;
    for n in 2..=hi {
        let lam = sieve.von_mangoldt(n);
        if lam == 0.0 {
            continue;
        }
        let pow = if real_s {
            Complex64::new(lam * (n as f64).powf(-s.re), 0.0)
        } else {
            lam * (-s * (n as f64).ln()).exp()
        };
        class_sums[(n % q) as usize] += pow;
    }
    let sigma = s.re;
    let nf = hi as f64;
    let tail = nf.powf(1.0 - sigma) * (nf.ln() / (sigma - 1.0) + 1.0 / (sigma - 1.0).powi(2));

    let direct = EvalResult::heuristic(class_sums[(a % q) as usize], tail, Method::DirectSeries);

    let chars = crate::characters::enumerate_characters(q);
    let phi = chars.len() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for chi in &chars {
        let weight = chi.eval(a as i64).conj().to_complex();
        let mut l_sum = Complex64::new(0.0, 0.0);
        for (c, cs) in class_sums.iter().enumerate() {
            let cv = chi.eval(c as i64);
            if cv != CharValue::Zero {
                l_sum += cv.to_complex() * cs;
            }
        }
        acc += weight * l_sum;
    }
    let via = EvalResult::heuristic(acc / phi, tail, Method::DirectSeries);
    Ok((direct, via))
}

/// Divisor convolution (1 * chi)(n) = sum_{d | n} chi(d) for all n <= x:
/// returns (minimum value, argmin).  Requires chi quadratic (values in
/// {-1, 0, 1}), so the sums are exact integers.
pub fn divisor_convolution_nonneg(
    chi: &DirichletCharacter,
    x: u64,
) -> Result<(i64, u64)> {
    if !chi.is_quadratic() && !(chi.is_principal() && chi.modulus() == 1) {
        return Err(Error::Domain(
            "divisor convolution positivity requires a quadratic character",
        ));
    }
    if x < 1 {
        return Err(Error::Domain("x must be >= 1"));
    }
    let n = x as usize;
    let q = chi.modulus();
    let chi_table: Vec<i64> = (0..q)
        .map(|r| {
            chi.eval(r as i64)
                .as_int()
                .expect("quadratic character value must be 0 or +-1")
        })
        .collect();
    let mut conv = vec![0i64; n + 1];
    for d in 1..=n {
        let v = chi_table[d % q as usize];
        if v != 0 {
            for multiple in (d..=n).step_by(d) {
                conv[multiple] += v;
            }
        }
    }
    let mut min = i64::MAX;
    let mut argmin = 1u64;
    for (i, &v) in conv[1..].iter().enumerate() {
        if v < min {
            min = v;
            argmin = i as u64 + 1;
        }
    }
    Ok((min, argmin))
}

/// Smallest prime p > n with p = a mod q, found by doubling sieve windows.
pub fn infinitude_witness(q: u64, a: u64, n: u64) -> Result<u64> {
    if gcd(a, q) != 1 {
        return Err(Error::Domain("infinitude_witness requires gcd(a, q) = 1"));
    }
    let mut hi = (2 * (n + 2)).max(64);
    loop {
        let data = sieve(hi)?;
        if let Some(p) = ((n + 1)..=hi).find(|&p| data.is_prime(p) && p % q == a % q) {
            return Ok(p);
        }
        if hi >= SIEVE_CAP {
            return Err(Error::SearchCap {
                q,
                a,
                cap: SIEVE_CAP,
            });
        }
        hi = (hi * 2).min(SIEVE_CAP);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;

    #[test]
    fn sieve_small() {
        let s = sieve(10).unwrap();
        let primes: Vec<u64> = s.primes_up_to(10).collect();
        assert_eq!(primes, vec![2, 3, 5, 7]);
        assert!((s.von_mangoldt(8) - 2.0f64.ln()).abs() < 1e-15);
        assert_eq!(s.von_mangoldt(6), 0.0);
        assert!(sieve(1).is_err());
    }

    #[test]
    fn chebyshev_identity() {
        // sum_{d | n} Lambda(d) = log n
        let s = sieve(10_000).unwrap();
        for n in 1..=10_000u64 {
            let mut acc = 0.0;
            let mut d = 1;
            while d * d <= n {
                if n % d == 0 {
                    acc += s.von_mangoldt(d);
                    if d != n / d {
                        acc += s.von_mangoldt(n / d);
                    }
                }
                d += 1;
            }
            assert!(
                (acc - (n as f64).ln()).abs() < 1e-12 * (1.0 + (n as f64).ln()),
                "n = {n}"
            );
        }
    }

    #[test]
    fn mobius_identity() {
        // sum_{d | n} mu(d) = [n = 1]
        let s = sieve(10_000).unwrap();
        for n in 1..=10_000u64 {
            let mut acc = 0i64;
            let mut d = 1;
            while d * d <= n {
                if n % d == 0 {
                    acc += s.mobius(d) as i64;
                    if d != n / d {
                        acc += s.mobius(n / d) as i64;
                    }
                }
                d += 1;
            }
            assert_eq!(acc, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn prime_counts_mod_4() {
        let s = sieve(100).unwrap();
        assert_eq!(s.count_primes_mod(100, 4, 1), 11);
        assert_eq!(s.count_primes_mod(100, 4, 3), 13);
        assert_eq!(s.count_primes_mod(100, 4, 0), 0);
    }

    #[test]
    fn partition_check() {
        // counts over coprime classes partition pi(X) minus the primes dividing q
        let x = 100_000u64;
        let s = sieve(x).unwrap();
        let pi_x = s.primes_up_to(x).count() as u64;
        for q in [3u64, 4, 5, 8] {
            let coprime_total: u64 = (1..q)
                .filter(|&a| gcd(a, q) == 1)
                .map(|a| s.count_primes_mod(x, q, a))
                .sum();
            let dividing = s.primes_up_to(x).filter(|&p| q % p == 0).count() as u64;
            assert_eq!(coprime_total, pi_x - dividing, "q = {q}");
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(infinitude_witness(4, 1, 10).unwrap(), 13);
        assert_eq!(infinitude_witness(4, 3, 7).unwrap(), 11);
        assert_eq!(infinitude_witness(5, 2, 0).unwrap(), 2);
        assert!(infinitude_witness(4, 2, 5).is_err());
    }

    #[test]
    fn divisor_convolution_chi4() {
        let chi4 = &enumerate_characters(4)[1];
        let (min, _) = divisor_convolution_nonneg(chi4, 10_000).unwrap();
        assert!(min >= 0);
        let (v1, arg1) = divisor_convolution_nonneg(chi4, 1).unwrap();
        assert_eq!((v1, arg1), (1, 1));
        // (1*chi4)(9) = chi(1) + chi(3) + chi(9) = 1 - 1 + 1 = 1
        let chi_vals: i64 = [1i64, 3, 9]
            .iter()
            .map(|&d| chi4.eval(d).as_int().unwrap())
            .sum();
        assert_eq!(chi_vals, 1);
        // non-quadratic rejected
        let chi5 = enumerate_characters(5)
            .into_iter()
            .find(|c| !c.is_principal() && !c.is_quadratic())
            .unwrap();
        assert!(divisor_convolution_nonneg(&chi5, 100).is_err());
    }

    #[test]
    fn neg_log_deriv_trivial_modulus() {
        // -zeta'/zeta(2) = sum Lambda(n) n^{-2} ~ 0.569961
        let s = sieve(2_000_000).unwrap();
        let triv = &enumerate_characters(1)[0];
        let v = neg_log_deriv_l(triv, Complex64::new(2.0, 0.0), 2_000_000, &s).unwrap();
        assert!((v.value.re - 0.569_960_99).abs() < 1e-5, "{}", v.value.re);
        assert!(v.value.im.abs() < 1e-12);
        assert!(neg_log_deriv_l(triv, Complex64::new(0.9, 0.0), 100, &s).is_err());
    }

    #[test]
    fn residue_class_identity_small() {
        let s = sieve(1_000_000).unwrap();
        for (q, a) in [(4u64, 1u64), (4, 3), (3, 2)] {
            let (direct, via) =
                residue_class_lseries(q, a, Complex64::new(2.0, 0.0), 1_000_000, &s).unwrap();
            assert!(
                (direct.value - via.value).norm() < 1e-6,
                "q={q} a={a}: {} vs {}",
                direct.value,
                via.value
            );
        }
        assert!(residue_class_lseries(4, 2, Complex64::new(2.0, 0.0), 100, &s).is_err());
    }

    #[test]
    fn chebyshev_divergence_trend() {
        let s = sieve(1_000_000).unwrap();
        for q in [1u64, 4] {
            for a in 1..=q {
                if gcd(a, q) != 1 {
                    continue;
                }
                let phi = crate::characters::euler_phi(q) as f64;
                for x in [1_000u64, 10_000, 100_000, 1_000_000] {
                    let v = s.chebyshev_progression_partial(q, a, x);
                    let drift = v - (x as f64).ln() / phi;
                    assert!(drift.abs() <= 4.0, "q={q} a={a} x={x}: drift {drift}");
                }
            }
        }
    }
}
