//! q-integers, q-factorials, q-binomials and exact ratios of q-factorials.
//!
//! Ratios are evaluated without polynomial division: every `[k]_q` is split
//! into cyclotomic factors `Φ_d(q)` (`d | k`, `d > 1`), exponents are
//! cancelled, and only the surviving factors are multiplied out. A negative
//! surviving exponent means the ratio is not a polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MPoly, Monomial};
use crate::error::{Error, Result};

/// `[k]_q = 1 + q + ... + q^{k-1}`; `[0]_q = 0`.
pub fn q_int(k: i64) -> Result<MPoly> {
    if k < 0 {
        return Err(Error::InvalidInput(format!("q_int of negative k = {k}")));
    }
    Ok(MPoly::from_q_coeffs((0..k).map(|_| 1i64)))
}

/// `[k]_q! = [k]_q [k-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(k: i64) -> Result<MPoly> {
    if k < 0 {
        return Err(Error::InvalidInput(format!("q_factorial of negative k = {k}")));
    }
    let mut acc = vec![BigInt::one()];
    for i in 1..=k as usize {
        acc = dense_mul(&acc, &vec![BigInt::one(); i]);
    }
    Ok(MPoly::from_q_coeffs(acc))
}

/// Gaussian binomial `[n choose k]_q`, zero unless `n >= k >= 0`.
///
/// Built row by row from `[n, k] = [n-1, k] + q^{n-k} [n-1, k-1]`.
pub fn q_binomial(n: i64, k: i64) -> MPoly {
    MPoly::from_q_coeffs(q_binomial_dense(n, k))
}

pub(crate) fn q_binomial_dense(n: i64, k: i64) -> Vec<BigInt> {
    if k < 0 || n < k {
        return Vec::new();
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] = [i choose j]_q for the current i, j = 0..=min(i, k)
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let top = i.min(k);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for j in 0..=top {
            let mut c = if j < row.len() { row[j].clone() } else { Vec::new() };
            if j >= 1 {
                let shift = i - j;
                let prev = &row[j - 1];
                if c.len() < prev.len() + shift {
                    c.resize(prev.len() + shift, BigInt::zero());
                }
                for (e, v) in prev.iter().enumerate() {
                    c[e + shift] += v;
                }
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(k)
}

pub(crate) fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn divisors(k: u64) -> Vec<u64> {
    (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
}

fn mobius(mut n: u64) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
}

/// Dense coefficients of the cyclotomic polynomial `Φ_d`, `d > 1`, from
/// `Φ_d = Π_{e | d} (1 - q^e)^{μ(d/e)}` as a power series truncated at
/// degree `φ(d)`.
pub(crate) fn cyclotomic(d: u64) -> Vec<BigInt> {
    assert!(d > 1);
    let deg = totient(d) as usize;
    let mut c = vec![BigInt::zero(); deg + 1];
    c[0] = BigInt::one();
    for e in divisors(d) {
        let e_us = e as usize;
        match mobius(d / e) {
            1 => {
                for i in (e_us..=deg).rev() {
                    let v = c[i - e_us].clone();
                    c[i] -= v;
                }
            }
            -1 => {
                for i in e_us..=deg {
                    let v = c[i - e_us].clone();
                    c[i] += v;
                }
            }
            _ => {}
        }
    }
    c
}

/// A formal product `q^shift · Π [k]_q^{e_k}` with integer exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QRatio {
    shift: i64,
    factors: BTreeMap<u64, i64>,
    zero: bool,
}

impl QRatio {
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiplies by `[k]_q^e`. `[0]_q` in the numerator zeroes the ratio;
    /// in the denominator it is an error at evaluation time.
    pub fn qint(&mut self, k: i64, e: i64) -> &mut Self {
        self.scaled_qint(k, 1, e)
    }

    /// Multiplies by `[k]_{q^s}^e = ([sk]_q / [s]_q)^e`.
    pub fn scaled_qint(&mut self, k: i64, s: u32, e: i64) -> &mut Self {
        assert!(s >= 1);
        if e == 0 {
            return self;
        }
        if k <= 0 {
            if k == 0 && e > 0 {
                self.zero = true;
            } else {
                // recorded as an impossible factor; surfaced by `to_mpoly`
                *self.factors.entry(0).or_default() += e;
            }
            return self;
        }
        let s = s as u64;
        *self.factors.entry(k as u64 * s).or_default() += e;
        if s > 1 {
            *self.factors.entry(s).or_default() -= e;
        }
        self
    }

    /// Multiplies by `([k]_q!)^e`; `k` must be non-negative.
    pub fn qfact(&mut self, k: i64, e: i64) -> &mut Self {
        self.scaled_qfact(k, 1, e)
    }

    /// Multiplies by `([k]_{q^s}!)^e`.
    pub fn scaled_qfact(&mut self, k: i64, s: u32, e: i64) -> &mut Self {
        if k < 0 {
            *self.factors.entry(0).or_default() += e.signum();
            return self;
        }
        for i in 1..=k {
            self.scaled_qint(i, s, e);
        }
        self
    }

    pub fn q_shift(&mut self, e: i64) -> &mut Self {
        self.shift += e;
        self
    }

    /// Net cyclotomic exponents `d -> e_d`.
    fn cyclotomic_exponents(&self) -> Result<BTreeMap<u64, i64>> {
        let mut cyc: BTreeMap<u64, i64> = BTreeMap::new();
        for (&k, &e) in &self.factors {
            if e == 0 {
                continue;
            }
            if k == 0 {
                return Err(Error::Internal(
                    "q-factor ratio contains [k]_q with k <= 0 in a non-cancelling position".into(),
                ));
            }
            for d in divisors(k).into_iter().filter(|&d| d > 1) {
                *cyc.entry(d).or_default() += e;
            }
        }
        cyc.retain(|_, e| *e != 0);
        Ok(cyc)
    }

    /// Evaluates the ratio as a polynomial in `q`.
    pub fn to_mpoly(&self) -> Result<MPoly> {
        if self.zero {
            return Ok(MPoly::zero());
        }
        let cyc = self.cyclotomic_exponents()?;
        if let Some((d, e)) = cyc.iter().find(|(_, &e)| e < 0) {
            return Err(Error::Internal(format!(
                "q-factor ratio is not a polynomial: cyclotomic factor Φ_{d} has exponent {e}"
            )));
        }
        if self.shift < 0 {
            return Err(Error::Internal(format!("negative q-power {}", self.shift)));
        }
        let mut acc = vec![BigInt::one()];
        for (&d, &e) in &cyc {
            let phi = cyclotomic(d);
            for _ in 0..e {
                acc = dense_mul(&acc, &phi);
            }
        }
        Ok(MPoly::from_q_coeffs(acc).mul_monomial(&Monomial::q_pow(self.shift as u32)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn q_int_and_factorial() {
        assert_eq!(q_int(3).unwrap(), qp("1 + q + q^2"));
        assert_eq!(q_int(0).unwrap(), MPoly::zero());
        assert_eq!(q_factorial(0).unwrap(), MPoly::one());
        assert_eq!(q_factorial(3).unwrap(), qp("1 + 2*q + 2*q^2 + q^3"));
        assert!(q_factorial(-1).is_err());
        assert!(q_int(-2).is_err());
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(3, 1), qp("1 + q + q^2"));
        assert_eq!(q_binomial(4, 2), qp("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(q_binomial(2, 3), MPoly::zero());
        assert_eq!(q_binomial(-1, 0), MPoly::zero());
        assert_eq!(q_binomial(5, -1), MPoly::zero());
        assert_eq!(q_binomial(0, 0), MPoly::one());
    }

    #[test]
    fn cyclotomic_small() {
        let c = |d| MPoly::from_q_coeffs(cyclotomic(d));
        assert_eq!(c(2), qp("1 + q"));
        assert_eq!(c(4), qp("1 + q^2"));
        assert_eq!(c(6), qp("1 - q + q^2"));
        assert_eq!(c(12), qp("1 - q^2 + q^4"));
        // x^n - 1 = Π_{d|n} Φ_d, so [n]_q = Π_{d|n, d>1} Φ_d
        for n in 2..=30u64 {
            let prod: MPoly = divisors(n).into_iter().filter(|&d| d > 1).map(c).product();
            assert_eq!(prod, q_int(n as i64).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn ratio_cancellation() {
        // [4]_q / [2]_q = 1 + q^2 does not cancel factor-by-factor
        let mut r = QRatio::new();
        r.qint(4, 1).qint(2, -1);
        assert_eq!(r.to_mpoly().unwrap(), qp("1 + q^2"));

        let mut r = QRatio::new();
        r.qint(2, 1).qint(3, -1);
        assert!(matches!(r.to_mpoly(), Err(Error::Internal(_))));

        // [2]_{q^2} = 1 + q^2
        let mut r = QRatio::new();
        r.scaled_qint(2, 2, 1).q_shift(1);
        assert_eq!(r.to_mpoly().unwrap(), qp("q + q^3"));

        let mut r = QRatio::new();
        r.qint(0, 1).qint(5, -1);
        assert!(r.to_mpoly().unwrap().is_zero());
    }

    #[test]
    fn q_binomial_matches_factorial_ratio() {
        for n in 0..=9 {
            for k in 0..=n {
                let mut r = QRatio::new();
                r.qfact(n, 1).qfact(k, -1).qfact(n - k, -1);
                assert_eq!(r.to_mpoly().unwrap(), q_binomial(n, k));
            }
        }
    }
}
