use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Monomial;
use crate::error::{Error, Result};

/// Sparse polynomial in `q`, `t`, `x_1, x_2, ...` with integer coefficients.
///
/// No stored coefficient is zero, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_term(BigInt::one(), Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_term(c.into(), Monomial::one())
    }

    pub fn from_term(coeff: BigInt, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MPoly { terms }
    }

    pub fn monomial(mono: Monomial) -> Self {
        Self::from_term(BigInt::one(), mono)
    }

    pub fn q() -> Self {
        Self::monomial(Monomial::q_pow(1))
    }

    pub fn t() -> Self {
        Self::monomial(Monomial::t_pow(1))
    }

    /// The variable `x_index` (1-based).
    pub fn x(index: usize) -> Self {
        Self::monomial(Monomial::x_pow(index, 1))
    }

    /// `c_0 + c_1 q + c_2 q^2 + ...` from dense coefficients.
    pub fn from_q_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = MPoly::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(Monomial::q_pow(e as u32), c.into());
        }
        p
    }

    /// Collects `(monomial, count)` pairs, merging duplicates.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let mut p = MPoly::zero();
        for (m, c) in counts {
            p.add_term(m, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.leading_term().map(|(m, _)| m.total_degree())
    }

    /// True when every term has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u64) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    /// Largest x-index appearing in any term.
    pub fn max_x_index(&self) -> usize {
        self.terms.keys().map(Monomial::x_len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Applies a monomial-to-monomial substitution and collects.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Replaces every `x_k` by `q^{k-1} t`.
    pub fn substitute_qt(&self) -> MPoly {
        self.map_monomials(Monomial::substitute_qt)
    }

    /// Replaces `q` by `q^s`.
    pub fn q_to_power(&self, s: u32) -> MPoly {
        self.map_monomials(|m| m.with_q(m.q_exp() * s))
    }

    /// Replaces `t` by `q`.
    pub fn t_to_q(&self) -> MPoly {
        self.map_monomials(|m| m.with_q(m.q_exp() + m.t_exp()).with_t(0))
    }

    /// Sets `q = 1`.
    pub fn q_to_one(&self) -> MPoly {
        self.map_monomials(|m| m.with_q(0))
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_x(&self, i: usize, j: usize) -> MPoly {
        self.map_monomials(|m| m.swap_x(i, j))
    }

    /// Value at `q = t = x_k = 1`, i.e. the sum of coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `q`, `t` and each `x_k` by arbitrary polynomials.
    pub fn substitute(&self, q: &MPoly, t: &MPoly, x: impl Fn(usize) -> MPoly) -> MPoly {
        let mut out = MPoly::zero();
        let xs: Vec<MPoly> = (1..=self.max_x_index()).map(&x).collect();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            term = &term * &q.pow(m.q_exp());
            term = &term * &t.pow(m.t_exp());
            for (i, &e) in m.x_exps().iter().enumerate() {
                if e > 0 {
                    term = &term * &xs[i].pow(e);
                }
            }
            out += &term;
        }
        out
    }

    /// Exact division. Any remainder means the caller's ring identity failed,
    /// which is reported as an internal error.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        let (dm, dc) = divisor
            .leading_term()
            .ok_or_else(|| Error::Internal("division by the zero polynomial".into()))?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.checked_div(&dm).ok_or_else(|| {
                Error::Internal("inexact polynomial division (monomial)".into())
            })?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(Error::Internal("inexact polynomial division (coefficient)".into()));
            }
            let step = divisor.mul_monomial(&qm).scale(&qc);
            rem -= &step;
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Dense coefficient list of a polynomial in `q` alone.
    pub fn q_coeffs(&self) -> Option<Vec<BigInt>> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            if m.t_exp() != 0 || m.x_len() != 0 {
                return None;
            }
            let e = m.q_exp() as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] = c.clone();
        }
        Some(out)
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(Signed::is_negative)
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl AddAssign for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        *self += &rhs;
    }
}

impl SubAssign for MPoly {
    fn sub_assign(&mut self, rhs: MPoly) {
        *self -= &rhs;
    }
}

impl MulAssign<&MPoly> for MPoly {
    fn mul_assign(&mut self, rhs: &MPoly) {
        *self = &*self * rhs;
    }
}

impl Add<&MPoly> for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: &MPoly) -> MPoly {
        self += rhs;
        self
    }
}

impl Sub<&MPoly> for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: &MPoly) -> MPoly {
        self -= rhs;
        self
    }
}

impl Mul<&MPoly> for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        &self * rhs
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        let mut acc = MPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_expansions() {
        let one = MPoly::one();
        let (q, t) = (MPoly::q(), MPoly::t());
        let lhs = &(&one + &t) * &(&one + &(&q * &t));
        let expect = &(&(&one + &t) + &(&q * &t)) + &(&q * &t.pow(2));
        assert_eq!(lhs, expect);

        let p = &one + &q;
        assert_eq!(&p + &MPoly::zero(), p);

        let diff = &(&one + &q) * &(&one - &q);
        assert_eq!(diff, &one - &q.pow(2));
    }

    #[test]
    fn substitution_to_qt() {
        assert_eq!(MPoly::x(1).substitute_qt(), MPoly::t());
        assert_eq!(MPoly::x(3).substitute_qt(), &MPoly::q().pow(2) * &MPoly::t());
        let p = &(&MPoly::x(1) * &MPoly::x(2)) + &MPoly::x(2);
        let expect = &(&MPoly::q() * &MPoly::t().pow(2)) + &(&MPoly::q() * &MPoly::t());
        assert_eq!(p.substitute_qt(), expect);
    }

    #[test]
    fn exact_division_roundtrip_and_failure() {
        let a = &(MPoly::one() + MPoly::q()) * &(MPoly::t() - MPoly::x(2));
        let b = MPoly::one() + MPoly::q();
        assert_eq!(a.exact_div(&b).unwrap(), MPoly::t() - MPoly::x(2));
        let c = MPoly::one() + MPoly::t();
        assert!(matches!(a.exact_div(&c), Err(Error::Internal(_))));
        assert!(a.exact_div(&MPoly::zero()).is_err());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = MPoly::q() - MPoly::q();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }
}
