//! Closed-form product formulas.
//!
//! Every q-factorial ratio goes through [`QRatio`], so a ratio that fails to
//! be a polynomial is reported as an internal error instead of being
//! silently truncated. Integer ratios are checked for exact divisibility.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Monomial, QRatio};
use crate::regions::{p_min, p_prime_max, TrapezoidRegion};
use crate::shapes::BlockProfile;
use crate::tilings::{weighted_region_sum, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: u64,
    pub beta: u64,
}

impl AlphaBeta {
    /// `α = Σ C(S_n - S_i, 2)`, `β = Σ (S_n - S_i)`.
    pub fn of(profile: &BlockProfile) -> Self {
        let total = profile.total() as u64;
        let mut alpha = 0;
        let mut beta = 0;
        for i in 1..=profile.n() {
            let d = total - profile.s(i) as u64;
            alpha += d * d.saturating_sub(1) / 2;
            beta += d;
        }
        AlphaBeta { alpha, beta }
    }
}

/// `Π_{i<j} [S_j - S_i + j - i] · Π_i [S_n + i - 1]! / Π_i [S_i + i - 1]! [S_n - S_i + n - i]!`
/// with `q` replaced by `q^s`.
fn block_ratio(profile: &BlockProfile, s: u32) -> QRatio {
    let n = profile.n() as i64;
    let sv = |k: usize| profile.s(k) as i64;
    let sn = sv(profile.n());
    let mut ratio = QRatio::new();
    for i in 1..=profile.n() {
        for j in i + 1..=profile.n() {
            ratio.scaled_qint(sv(j) - sv(i) + (j - i) as i64, s, 1);
        }
        let ii = i as i64;
        ratio
            .scaled_qfact(sn + ii - 1, s, 1)
            .scaled_qfact(sv(i) + ii - 1, s, -1)
            .scaled_qfact(sn - sv(i) + n - ii, s, -1);
    }
    ratio
}

/// `Π_{i=1}^{m} (1 + q^{step·(i-1) + offset} t^{t_exp})`.
fn one_plus_product(m: u32, step: u32, offset: u32, t_exp: u32) -> MPoly {
    (1..=m)
        .map(|i| MPoly::one() + MPoly::monomial(Monomial::qt(step * (i - 1) + offset, t_exp)))
        .product()
}

/// The (q,t)-generating function of r-block diagonally symmetric tilings of `H(m, m, n)`.
pub fn thm1_rhs(profile: &BlockProfile) -> Result<MPoly> {
    let AlphaBeta { alpha, beta } = AlphaBeta::of(profile);
    let mut ratio = block_ratio(profile, 1);
    ratio.q_shift(alpha as i64);
    let front = one_plus_product(profile.total(), 1, 0, 1);
    Ok(front * &ratio.to_mpoly()?.mul_monomial(&Monomial::t_pow(beta as u32)))
}

/// `q ↦ q²` in the ratio, `q^{2α} t^β Π (1 + q^{2i-2} t)`.
pub fn thm15_rhs(profile: &BlockProfile) -> Result<MPoly> {
    let AlphaBeta { alpha, beta } = AlphaBeta::of(profile);
    let mut ratio = block_ratio(profile, 2);
    ratio.q_shift(2 * alpha as i64);
    let front = one_plus_product(profile.total(), 2, 0, 1);
    Ok(front * &ratio.to_mpoly()?.mul_monomial(&Monomial::t_pow(beta as u32)))
}

/// Volume generating function: `Π (1 + q^{2i-1}) q^{2α+β}` times the `q²` ratio.
pub fn cor3_rhs(profile: &BlockProfile) -> Result<MPoly> {
    let AlphaBeta { alpha, beta } = AlphaBeta::of(profile);
    let mut ratio = block_ratio(profile, 2);
    ratio.q_shift((2 * alpha + beta) as i64);
    Ok(one_plus_product(profile.total(), 2, 1, 0) * &ratio.to_mpoly()?)
}

fn factorial(k: i64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn exact_quotient(num: BigInt, den: BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(q)
}

/// Number of r-block diagonally symmetric tilings of `H(m, m, n)`.
pub fn cor1_count(profile: &BlockProfile) -> Result<BigInt> {
    let n = profile.n() as i64;
    let sv = |k: usize| profile.s(k) as i64;
    let sn = sv(profile.n());
    let mut num = BigInt::from(2u32).pow(profile.total());
    let mut den = BigInt::one();
    for i in 1..=profile.n() {
        for j in i + 1..=profile.n() {
            num *= sv(j) - sv(i) + (j - i) as i64;
        }
        let ii = i as i64;
        num *= factorial(sn + ii - 1);
        den *= factorial(sv(i) + ii - 1) * factorial(sn - sv(i) + n - ii);
    }
    exact_quotient(num, den, "block-symmetric count")
}

/// `Π(1 + x_i) · M_x(T(n + l, m; P_min, P′_max))` for `r′ = (1^l, 0^{n-l})`.
pub fn thm2_rhs(
    profile: &BlockProfile,
    profile_prime: &BlockProfile,
    m: u32,
    n: u32,
    l: u32,
    limit: u64,
) -> Result<MPoly> {
    if l > n {
        return Err(Error::InvalidProfile(format!("l = {l} exceeds n = {n}")));
    }
    if *profile_prime != BlockProfile::staircase(l as usize, n as usize)? {
        return Err(Error::InvalidProfile(format!(
            "r′ = {profile_prime} must be (1^{l}, 0^{})",
            n - l
        )));
    }
    if profile.n() != n as usize || profile.total() != m + l {
        return Err(Error::InvalidProfile(format!(
            "r = {profile} must have {n} blocks summing to {}",
            m + l
        )));
    }
    let region = TrapezoidRegion::new(n + l, m, p_min(profile), p_prime_max(profile_prime))?;
    let front: MPoly = (1..=m as usize).map(|i| MPoly::one() + MPoly::x(i)).product();
    Ok(front * &weighted_region_sum(&region.into(), Weight::X, limit)?)
}

fn check_sides(sides: &[u32]) -> Result<()> {
    if sides.contains(&0) {
        return Err(Error::InvalidInput(format!("side lengths must be positive, got {sides:?}")));
    }
    Ok(())
}

/// Number of plane partitions in an `a × b × c` box.
pub fn macmahon_count(a: u32, b: u32, c: u32) -> Result<BigInt> {
    check_sides(&[a, b, c])?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=a {
        for j in 1..=b {
            num *= i + j + c - 1;
            den *= i + j - 1;
        }
    }
    exact_quotient(num, den, "MacMahon count")
}

/// `Π_{i,j,k} [i+j+k-1]_q / [i+j+k-2]_q = Π_{i,j} [i+j+c-1]_q / [i+j-1]_q`.
pub fn macmahon_q(a: u32, b: u32, c: u32) -> Result<MPoly> {
    check_sides(&[a, b, c])?;
    let mut ratio = QRatio::new();
    for i in 1..=a as i64 {
        for j in 1..=b as i64 {
            ratio.qint(i + j + c as i64 - 1, 1).qint(i + j - 1, -1);
        }
    }
    ratio.to_mpoly()
}

/// `Π_{1 <= i <= j <= m} [n+i+j-1]_q / [i+j-1]_q`, counting symmetric plane
/// partitions by half-size.
pub fn sym_pp_q(m: u32, n: u32) -> Result<MPoly> {
    check_sides(&[m, n])?;
    let mut ratio = QRatio::new();
    for i in 1..=m as i64 {
        for j in i..=m as i64 {
            ratio.qint(n as i64 + i + j - 1, 1).qint(i + j - 1, -1);
        }
    }
    ratio.to_mpoly()
}

pub fn sym_pp_count(m: u32, n: u32) -> Result<BigInt> {
    check_sides(&[m, n])?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=m {
        for j in i..=m {
            num *= n + i + j - 1;
            den *= i + j - 1;
        }
    }
    exact_quotient(num, den, "symmetric plane partition count")
}

/// `Π_{k=0}^{n-1} (3k+1)! / (n+k)!`.
pub fn asm_count(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let n = n as i64;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..n {
        num *= factorial(3 * k + 1);
        den *= factorial(n + k);
    }
    exact_quotient(num, den, "ASM count")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(v: &[u32]) -> BlockProfile {
        BlockProfile::new(v.to_vec()).unwrap()
    }

    fn poly(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_beta() {
        assert_eq!(AlphaBeta::of(&prof(&[1, 1])), AlphaBeta { alpha: 0, beta: 1 });
        assert_eq!(AlphaBeta::of(&prof(&[3, 0])), AlphaBeta { alpha: 0, beta: 0 });
        assert_eq!(AlphaBeta::of(&prof(&[1, 2, 1])), AlphaBeta { alpha: 3, beta: 4 });
    }

    #[test]
    fn thm1_examples() {
        let want: MPoly = ["1 + t", "1 + q*t", "t", "1 + q"].iter().map(|s| poly(s)).product();
        assert_eq!(thm1_rhs(&prof(&[1, 1])).unwrap(), want);
        let single = thm1_rhs(&prof(&[3])).unwrap();
        assert_eq!(single, one_plus_product(3, 1, 0, 1));
        assert_eq!(thm1_rhs(&prof(&[1, 1, 1])).unwrap().eval_at_one(), BigInt::from(64));
    }

    #[test]
    fn counts() {
        for n in 1..=6 {
            let want = BigInt::from(2u32).pow((n * (n + 1) / 2) as u32);
            assert_eq!(cor1_count(&BlockProfile::ones(n)).unwrap(), want);
        }
        assert_eq!(cor1_count(&prof(&[2, 2])).unwrap(), BigInt::from(96));
        assert_eq!(cor1_count(&prof(&[2, 2, 2])).unwrap(), BigInt::from(12096));
        assert_eq!(asm_count(1).unwrap(), BigInt::from(1));
        assert_eq!(asm_count(3).unwrap(), BigInt::from(7));
        assert_eq!(asm_count(4).unwrap(), BigInt::from(42));
        assert!(asm_count(0).is_err());
    }

    #[test]
    fn plane_partition_products() {
        assert_eq!(macmahon_count(1, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(macmahon_count(2, 2, 2).unwrap(), BigInt::from(20));
        assert_eq!(macmahon_q(1, 1, 1).unwrap(), poly("1 + q"));
        assert!(macmahon_count(2, 2, 0).is_err());
        assert_eq!(sym_pp_q(1, 1).unwrap(), poly("1 + q"));
        assert_eq!(sym_pp_count(1, 1).unwrap(), BigInt::from(2));
        assert_eq!(sym_pp_count(2, 1).unwrap(), BigInt::from(4));
        assert_eq!(sym_pp_count(2, 2).unwrap(), BigInt::from(10));
    }

    #[test]
    fn plane_partition_specializations() {
        assert_eq!(thm15_rhs(&prof(&[1])).unwrap(), poly("1 + t"));
        assert_eq!(cor3_rhs(&prof(&[1])).unwrap(), poly("1 + q"));
        assert_eq!(thm15_rhs(&prof(&[1, 1])).unwrap().eval_at_one(), BigInt::from(8));
        assert_eq!(cor3_rhs(&prof(&[2])).unwrap(), poly("1 + q") * poly("1 + q^3"));
    }

    #[test]
    fn thm2_instances() {
        let rhs = thm2_rhs(&prof(&[2]), &prof(&[1]), 1, 1, 1, 1000).unwrap();
        assert!(rhs.is_zero());
        assert!(thm2_rhs(&prof(&[2]), &prof(&[0]), 1, 1, 1, 1000).is_err());
    }
}
