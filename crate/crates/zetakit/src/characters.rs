//! Dirichlet characters mod N with exact root-of-unity values.
//!
//! Characters are stored as exponent vectors against a fixed cyclic
//! decomposition of (Z/NZ)^x, so multiplicativity and the orthogonality
//! relations hold exactly (verified in cyclotomic integer arithmetic, not
//! within a floating tolerance).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Arc;

use num::complex::Complex64;
use num::integer::{gcd, lcm};

use crate::{Error, Result};

/// Cyclic decomposition of (Z/NZ)^x.
///
/// The 2^k factor is split as <-1> x <5> for k >= 3, <-1> for k = 2, and
/// is trivial for k <= 1; odd prime powers contribute one generator each
/// (a lifted primitive root), CRT-combined to a residue mod N.
#[derive(Debug)]
pub struct UnitGroupStructure {
    modulus: u64,
    generators: Vec<u64>,
    orders: Vec<u64>,
    /// lcm of the orders; character values live in the m-th roots of unity
    group_exponent: u64,
    /// unit -> exponent vector against `generators`
    dlog: HashMap<u64, Vec<u64>>,
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product::<u64>()
        .max(1)
}

/// Smallest primitive root mod the odd prime p.
fn primitive_root_mod_p(p: u64) -> u64 {
    let phi = p - 1;
    let prime_factors: Vec<u64> = factorize(phi).iter().map(|&(q, _)| q).collect();
    'g: for g in 2..p {
        for &q in &prime_factors {
            if pow_mod(g, phi / q, p) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("no primitive root mod prime {p}");
}

/// Primitive root mod p^e for odd prime p: a primitive root mod p that
/// stays primitive mod p^2 lifts to all higher powers.
fn primitive_root_mod_pe(p: u64, e: u32) -> u64 {
    let g = primitive_root_mod_p(p);
    if e == 1 {
        return g;
    }
    if pow_mod(g, p - 1, p * p) == 1 {
        g + p
    } else {
        g
    }
}

/// CRT: the residue mod n that is `a` mod q and 1 mod (n/q).
fn crt_lift(a: u64, q: u64, n: u64) -> u64 {
    let rest = n / q;
    if rest == 1 {
        return a % n;
    }
    // x = a + q*t with x = 1 mod rest  =>  t = (1-a) * q^{-1} mod rest
    let qinv = inverse_mod(q % rest, rest);
    let diff = ((1 + rest as i64 - (a % rest) as i64) % rest as i64) as u64 % rest;
    let t = diff * qinv % rest;
    (a + q * t) % n
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    // extended Euclid
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of non-unit {a} mod {m}");
    old_s.rem_euclid(m as i64) as u64
}

/// Build the CRT decomposition of (Z/NZ)^x with a full discrete-log table.
pub fn unit_group_structure(n: u64) -> Arc<UnitGroupStructure> {
    assert!(n >= 1);
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for &(p, e) in &factorize(n) {
        let q = p.pow(e);
        if p == 2 {
            if e == 2 {
                generators.push(crt_lift(3, q, n));
                orders.push(2);
            } else if e >= 3 {
                generators.push(crt_lift(q - 1, q, n));
                orders.push(2);
                generators.push(crt_lift(5, q, n));
                orders.push(q / 4);
            }
        } else {
            generators.push(crt_lift(primitive_root_mod_pe(p, e), q, n));
            orders.push((p - 1) * p.pow(e - 1));
        }
    }
    let group_exponent = orders.iter().copied().fold(1, lcm);

    // enumerate all exponent vectors to fill the dlog table
    let phi: u64 = orders.iter().product::<u64>().max(1);
    let mut dlog = HashMap::with_capacity(phi as usize);
    let mut exps = vec![0u64; orders.len()];
    let mut unit = 1u64 % n;
    loop {
        dlog.insert(unit, exps.clone());
        // mixed-radix increment, updating the running product
        let mut i = 0;
        loop {
            if i == orders.len() {
                debug_assert_eq!(dlog.len() as u64, phi);
                let s = UnitGroupStructure {
                    modulus: n,
                    generators,
                    orders,
                    group_exponent,
                    dlog,
                };
                return Arc::new(s);
            }
            exps[i] += 1;
            unit = unit * generators[i] % n;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

impl UnitGroupStructure {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn phi(&self) -> u64 {
        self.orders.iter().product::<u64>().max(1)
    }

    /// Exponent vector of a unit, or None for non-units.
    pub fn discrete_log(&self, n: u64) -> Option<&Vec<u64>> {
        self.dlog.get(&(n % self.modulus.max(1)))
    }
}

/// An exact character value: zero, or the root of unity e^{2 pi i num/den}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharValue {
    Zero,
    Root { num: u64, den: u64 },
}

impl CharValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            CharValue::Zero => Complex64::new(0.0, 0.0),
            CharValue::Root { num, den } => {
                Complex64::from_polar(1.0, 2.0 * PI * num as f64 / den as f64)
            }
        }
    }

    pub fn conj(self) -> CharValue {
        match self {
            CharValue::Zero => CharValue::Zero,
            CharValue::Root { num, den } => CharValue::Root {
                num: (den - num) % den,
                den,
            },
        }
    }

    pub fn is_one(self) -> bool {
        matches!(self, CharValue::Root { num: 0, .. })
    }

    /// Exact value as a small integer when the root is +-1.
    pub fn as_int(self) -> Option<i64> {
        match self {
            CharValue::Zero => Some(0),
            CharValue::Root { num: 0, .. } => Some(1),
            CharValue::Root { num, den } if 2 * num == den => Some(-1),
            _ => None,
        }
    }
}

/// A Dirichlet character mod N, stored as one exponent per unit-group
/// generator.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    structure: Arc<UnitGroupStructure>,
    exponents: Vec<u64>,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.structure.modulus()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn structure(&self) -> &Arc<UnitGroupStructure> {
        &self.structure
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// chi(n), exactly.
    pub fn eval(&self, n: i64) -> CharValue {
        let modulus = self.structure.modulus();
        let r = n.rem_euclid(modulus.max(1) as i64) as u64;
        let m = self.structure.group_exponent;
        match self.structure.discrete_log(r) {
            None => CharValue::Zero,
            Some(v) => {
                let mut num = 0u64;
                for ((&e, &x), &ord) in self
                    .exponents
                    .iter()
                    .zip(v.iter())
                    .zip(self.structure.orders())
                {
                    num = (num + e * x % ord * (m / ord)) % m;
                }
                CharValue::Root { num, den: m }
            }
        }
    }

    /// chi(n) as a floating complex number.
    pub fn eval_complex(&self, n: i64) -> Complex64 {
        self.eval(n).to_complex()
    }

    /// chi(-1) = 1?
    pub fn is_even(&self) -> bool {
        self.eval(-1).is_one()
    }

    /// chi^2 principal and chi not principal?
    pub fn is_quadratic(&self) -> bool {
        !self.is_principal()
            && self
                .exponents
                .iter()
                .zip(self.structure.orders())
                .all(|(&e, &ord)| 2 * e % ord == 0)
    }

    /// Brute-force primitivity test: chi is imprimitive iff it takes equal
    /// values on units congruent mod some proper divisor d | N (with the
    /// divisor's units all represented).  Test helper, not a conductor API.
    pub fn is_primitive(&self) -> bool {
        let n = self.modulus();
        if n == 1 {
            return true;
        }
        'd: for d in 1..n {
            if n % d != 0 {
                continue;
            }
            // does chi factor through mod d?
            for a in 1..n {
                if gcd(a, n) != 1 {
                    continue;
                }
                for b in (a + 1)..n {
                    if gcd(b, n) != 1 || (a % d) != (b % d) {
                        continue;
                    }
                    if self.eval(a as i64) != self.eval(b as i64) {
                        continue 'd;
                    }
                }
            }
            return false; // factors through a proper divisor
        }
        true
    }
}

/// All phi(N) characters mod N; the principal character comes first.
pub fn enumerate_characters(n: u64) -> Vec<DirichletCharacter> {
    let structure = unit_group_structure(n);
    let phi = structure.phi();
    let mut out = Vec::with_capacity(phi as usize);
    let orders: Vec<u64> = structure.orders().to_vec();
    let mut exps = vec![0u64; orders.len()];
    loop {
        out.push(DirichletCharacter {
            structure: Arc::clone(&structure),
            exponents: exps.clone(),
        });
        let mut i = 0;
        loop {
            if i == orders.len() {
                debug_assert_eq!(out.len() as u64, phi);
                return out;
            }
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// An exact element of Z[zeta_m], stored as integer multiplicities of the
/// powers of zeta_m; canonicalized modulo the m-th cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCyclotomic {
    m: u64,
    counts: Vec<i64>,
}

/// Coefficients of the m-th cyclotomic polynomial (ascending), memoized.
fn cyclotomic_poly(m: u64) -> Arc<Vec<i64>> {
    use std::sync::Mutex;
    static CACHE: std::sync::OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> =
        std::sync::OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return Arc::clone(p);
    }
    let poly = Arc::new(cyclotomic_poly_compute(m));
    cache
        .lock()
        .unwrap()
        .entry(m)
        .or_insert_with(|| Arc::clone(&poly));
    poly
}

/// Repeated exact division of x^m - 1 by Phi_d for proper divisors d.
fn cyclotomic_poly_compute(m: u64) -> Vec<i64> {
    fn divide_exact(num: &mut Vec<i64>, den: &[i64]) {
        // monic divisor, exact division over Z
        let dn = den.len() - 1;
        let mut quot = vec![0i64; num.len() - dn];
        for i in (0..quot.len()).rev() {
            let c = num[i + dn];
            quot[i] = c;
            if c != 0 {
                for (j, &d) in den.iter().enumerate() {
                    num[i + j] -= c * d;
                }
            }
        }
        debug_assert!(num.iter().all(|&c| c == 0));
        *num = quot;
    }
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_poly(d);
            divide_exact(&mut poly, &phi_d);
        }
    }
    poly
}

impl ExactCyclotomic {
    pub fn zero(m: u64) -> Self {
        ExactCyclotomic {
            m,
            counts: vec![0; m as usize],
        }
    }

    /// Add the root zeta_m^t.
    pub fn add_root(&mut self, t: u64) {
        let idx = (t % self.m) as usize;
        self.counts[idx] += 1;
    }

    /// Canonical representative: remainder modulo Phi_m, degree < phi(m).
    pub fn reduced(&self) -> Vec<i64> {
        let phi_m = cyclotomic_poly(self.m);
        let deg = phi_m.len() - 1;
        let mut rem = self.counts.clone();
        for i in (deg..rem.len()).rev() {
            let c = rem[i];
            if c != 0 {
                for (j, &d) in phi_m.iter().enumerate() {
                    rem[i - deg + j] -= c * d;
                }
            }
        }
        rem.truncate(deg);
        rem
    }

    /// The exact integer this element equals, if it is rational.
    pub fn as_integer(&self) -> Option<i64> {
        let rem = self.reduced();
        if rem.iter().skip(1).all(|&c| c == 0) {
            Some(rem.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, &c) in self.counts.iter().enumerate() {
            if c != 0 {
                acc += c as f64 * Complex64::from_polar(1.0, 2.0 * PI * t as f64 / self.m as f64);
            }
        }
        acc
    }
}

/// sum over all characters mod q of chi(a) conj(chi(b)), in exact
/// root-of-unity arithmetic.  Equals phi(q) when a = b, else 0; the caller
/// checks that via [`ExactCyclotomic::as_integer`].
pub fn orthogonality_sum(q: u64, a: u64, b: u64) -> Result<ExactCyclotomic> {
    if gcd(a, q) != 1 || gcd(b, q) != 1 {
        return Err(Error::Domain("orthogonality_sum requires units a, b mod q"));
    }
    let chars = enumerate_characters(q);
    let m = chars[0].structure.group_exponent;
    let mut acc = ExactCyclotomic::zero(m.max(1));
    for chi in &chars {
        match (chi.eval(a as i64), chi.eval(b as i64).conj()) {
            (CharValue::Root { num: x, den }, CharValue::Root { num: y, .. }) => {
                acc.add_root((x + y) % den)
            }
            _ => unreachable!("character value zero on a unit"),
        }
    }
    Ok(acc)
}

/// Gauss sum sum_{k mod N} chi(k) e^{2 pi i k / N}, floating point.
pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    let n = chi.modulus();
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let v = chi.eval(k as i64);
        if v != CharValue::Zero {
            acc += v.to_complex() * Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
        }
    }
    if n == 1 {
        Complex64::new(1.0, 0.0)
    } else {
        acc
    }
}
