//! Skew Schur polynomials from semistandard tableaux, principal
//! specialization, elementary symmetric polynomials and the (skew) dual Pieri
//! rule.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::exactalg::{q_int, MPoly, Monomial, QRatio};
use crate::shapes::{
    horizontal_strip_predecessors, vertical_strip_successors, Partition, SkewShape,
};

/// A semistandard filling of a skew shape, stored row by row (only the cells
/// of the skew shape).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return invalid("filling is not a semistandard tableau of its shape");
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at row `i`, absolute column `j`, if that cell belongs to the shape.
    pub fn entry(&self, i: usize, j: u32) -> Option<u32> {
        let start = self.shape.inner().part(i);
        if j < start {
            return None;
        }
        self.rows.get(i)?.get((j - start) as usize).copied()
    }

    pub fn is_semistandard(&self) -> bool {
        let (outer, inner) = (self.shape.outer(), self.shape.inner());
        if self.rows.len() != outer.len() {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() as u32 != outer.part(i) - inner.part(i) || row.contains(&0) {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i > 0 {
                for j in inner.part(i)..outer.part(i) {
                    if let (Some(above), Some(here)) = (self.entry(i - 1, j), self.entry(i, j)) {
                        if above >= here {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `(c_1, c_2, ...)` where `c_k` counts entries equal to `k`.
    pub fn content(&self) -> Vec<u32> {
        let mut c = Vec::new();
        for &v in self.rows.iter().flatten() {
            if c.len() < v as usize {
                c.resize(v as usize, 0);
            }
            c[v as usize - 1] += 1;
        }
        c
    }
}

/// Calls `visit` with each semistandard filling (row-major cell values) of
/// `outer / inner` with entries in `1..=m`.
fn for_each_filling(outer: &Partition, inner: &Partition, m: u32, mut visit: impl FnMut(&[u32])) {
    let cells: Vec<(usize, u32)> = (0..outer.len())
        .flat_map(|i| (inner.part(i)..outer.part(i)).map(move |j| (i, j)))
        .collect();
    let index: HashMap<(usize, u32), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    // for each cell, the indices of its left and upper neighbours inside the shape
    let deps: Vec<(Option<usize>, Option<usize>)> = cells
        .iter()
        .map(|&(i, j)| {
            let left = if j > 0 { index.get(&(i, j - 1)).copied() } else { None };
            let up = if i > 0 { index.get(&(i - 1, j)).copied() } else { None };
            (left, up)
        })
        .collect();
    let mut vals = vec![0u32; cells.len()];
    fn rec(
        k: usize,
        m: u32,
        deps: &[(Option<usize>, Option<usize>)],
        vals: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32]),
    ) {
        if k == vals.len() {
            visit(vals);
            return;
        }
        let (left, up) = deps[k];
        let lo = left.map_or(1, |l| vals[l]).max(up.map_or(1, |u| vals[u] + 1));
        for v in lo..=m {
            vals[k] = v;
            rec(k + 1, m, deps, vals, visit);
        }
    }
    rec(0, m, &deps, &mut vals, &mut visit);
}

/// All semistandard tableaux of `shape` with entries at most `m`.
pub fn ssyt(shape: &SkewShape, m: u32) -> Vec<Tableau> {
    let (outer, inner) = (shape.outer(), shape.inner());
    let mut out = Vec::new();
    for_each_filling(outer, inner, m, |vals| {
        let mut rows = Vec::with_capacity(outer.len());
        let mut k = 0;
        for i in 0..outer.len() {
            let w = (outer.part(i) - inner.part(i)) as usize;
            rows.push(vals[k..k + w].to_vec());
            k += w;
        }
        out.push(Tableau { shape: shape.clone(), rows });
    });
    out
}

/// `s_{outer/inner}(x_1, ..., x_m)`.
pub fn skew_schur(outer: &Partition, inner: &Partition, m: u32) -> Result<MPoly> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_filling(shape.outer(), shape.inner(), m, |vals| {
        let mut content = vec![0u32; m as usize];
        for &v in vals {
            content[v as usize - 1] += 1;
        }
        *counts.entry(content).or_default() += 1;
    });
    Ok(MPoly::from_counts(counts.into_iter().map(|(c, n)| (Monomial::from_content(&c), n))))
}

pub fn schur(lambda: &Partition, m: u32) -> MPoly {
    skew_schur(lambda, &Partition::empty(), m).expect("empty partition is contained in every shape")
}

/// Kostka number: tableaux of shape `lambda` with content `content`, computed
/// by peeling horizontal strips from the largest entry down.
pub fn kostka(lambda: &Partition, content: &[u32]) -> BigInt {
    fn rec(
        lambda: &Partition,
        content: &[u32],
        memo: &mut HashMap<(Partition, usize), BigInt>,
    ) -> BigInt {
        let Some((&last, rest)) = content.split_last() else {
            return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
        };
        if lambda.size() != content.iter().map(|&c| c as u64).sum::<u64>() {
            return BigInt::zero();
        }
        let key = (lambda.clone(), content.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let total: BigInt = horizontal_strip_predecessors(lambda, last)
            .iter()
            .filter(|mu| mu.len() <= rest.len())
            .map(|mu| rec(mu, rest, memo))
            .sum();
        memo.insert(key, total.clone());
        total
    }
    rec(lambda, content, &mut HashMap::new())
}

/// `s_λ(1, q, ..., q^{m-1}) = q^{Σ(i-1)λ_i} Π_{i<j} [λ_i - λ_j + j - i]_q / [j - i]_q`.
pub fn principal_spec(lambda: &Partition, m: u32) -> Result<MPoly> {
    if lambda.len() > m as usize {
        return invalid(format!("{lambda} has more than m = {m} parts"));
    }
    let m = m as usize;
    let mut ratio = QRatio::new();
    let shift: u64 = (0..m).map(|i| i as u64 * lambda.part(i) as u64).sum();
    ratio.q_shift(shift as i64);
    for i in 0..m {
        for j in i + 1..m {
            let top = lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64;
            ratio.qint(top, 1).qint((j - i) as i64, -1);
        }
    }
    ratio.to_mpoly()
}

/// `e_i(x_1, ..., x_m)`; zero for `i < 0` or `i > m`.
pub fn elementary_sym(i: i64, m: u32) -> MPoly {
    if i < 0 || i > m as i64 {
        return MPoly::zero();
    }
    let mut out = MPoly::zero();
    let mut pick = vec![0u32; m as usize];
    fn rec(start: usize, left: usize, pick: &mut Vec<u32>, out: &mut MPoly) {
        if left == 0 {
            out.add_term(Monomial::from_content(pick), BigInt::one());
            return;
        }
        for k in start..=pick.len() - left {
            pick[k] = 1;
            rec(k + 1, left - 1, pick, out);
            pick[k] = 0;
        }
    }
    rec(0, i as usize, &mut pick, &mut out);
    out
}

/// Shapes `λ⁺` in `s_λ e_i = Σ s_{λ⁺}` restricted to at most `m` rows.
pub fn dual_pieri_expand(lambda: &Partition, i: u32, m: u32) -> Vec<Partition> {
    vertical_strip_successors(lambda, i, m as usize)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSkew {
    pub sign: i8,
    pub outer: Partition,
    pub inner: Partition,
}

/// Terms of `s_{λ/μ} e_i = Σ_k (-1)^k Σ s_{λ⁺/μ⁻}` with `λ⁺/λ` an
/// `(i-k)`-vertical strip and `μ/μ⁻` a `k`-horizontal strip.
///
/// `λ⁺` is capped at `m + len(μ)` rows; longer shapes vanish in `m` variables.
pub fn skew_dual_pieri_expand(
    lambda: &Partition,
    mu: &Partition,
    i: u32,
    m: u32,
) -> Result<Vec<SignedSkew>> {
    SkewShape::new(lambda.clone(), mu.clone())?;
    let cap = m as usize + mu.len();
    let mut out = Vec::new();
    for k in 0..=i {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let minus = horizontal_strip_predecessors(mu, k);
        for plus in vertical_strip_successors(lambda, i - k, cap) {
            for inner in &minus {
                out.push(SignedSkew { sign, outer: plus.clone(), inner: inner.clone() });
            }
        }
    }
    Ok(out)
}

/// Both sides of `Π_{i₁<i₂ ∈ I} [i₂-i₁]_q = Π_{j₁<j₂ ∈ J} [j₂-j₁]_q ·
/// Π_{i=1}^{N-1} [i]_q! / Π_{j∈J} [j-1]_q! [N-j]_q!`.
pub fn split_product_sides(i_set: &[u32], j_set: &[u32], n: u32) -> Result<(MPoly, MPoly)> {
    let mut seen = vec![false; n as usize + 1];
    for &x in i_set.iter().chain(j_set) {
        if x == 0 || x > n || seen[x as usize] {
            return invalid(format!("I and J must partition [{n}]"));
        }
        seen[x as usize] = true;
    }
    if seen[1..].iter().any(|s| !s) {
        return invalid(format!("I and J must partition [{n}]"));
    }
    let mut lhs = MPoly::one();
    for (a, &x) in i_set.iter().enumerate() {
        for &y in &i_set[a + 1..] {
            lhs *= &q_int((x as i64 - y as i64).abs())?;
        }
    }
    let mut rhs = QRatio::new();
    for (a, &x) in j_set.iter().enumerate() {
        for &y in &j_set[a + 1..] {
            rhs.qint((x as i64 - y as i64).abs(), 1);
        }
    }
    for i in 1..n as i64 {
        rhs.qfact(i, 1);
    }
    for &j in j_set {
        rhs.qfact(j as i64 - 1, -1).qfact(n as i64 - j as i64, -1);
    }
    Ok((lhs, rhs.to_mpoly()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn skew_schur_examples() {
        assert_eq!(schur(&p("1"), 2), poly("x1 + x2"));
        assert_eq!(skew_schur(&p("2,1"), &p("1"), 2).unwrap(), poly("x1 + x2").pow(2));
        assert_eq!(schur(&p("2,1"), 2), poly("x1^2*x2 + x1*x2^2"));
        assert!(schur(&p("1,1,1"), 2).is_zero());
        assert!(matches!(skew_schur(&p("1"), &p("2"), 2), Err(Error::Containment { .. })));
    }

    #[test]
    fn tableau_checks() {
        let shape = SkewShape::new(p("2,1"), Partition::empty()).unwrap();
        assert_eq!(ssyt(&shape, 2).len(), 2);
        assert!(Tableau::new(shape.clone(), vec![vec![1, 1], vec![2]]).is_ok());
        assert!(Tableau::new(shape.clone(), vec![vec![1, 1], vec![1]]).is_err());
        let t = Tableau::new(shape, vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(t.content(), vec![1, 2]);
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka(&p("2,1"), &[1, 1, 1]), BigInt::from(2));
        assert_eq!(kostka(&p("3,2,1"), &[1, 1, 1, 1, 1, 1]), BigInt::from(16));
        assert_eq!(kostka(&p("2,2"), &[3, 1]), BigInt::zero());
        // agrees with the tableau expansion
        let s = schur(&p("3,1"), 3);
        assert_eq!(s.coeff(&Monomial::from_content(&[2, 1, 1])), kostka(&p("3,1"), &[2, 1, 1]));
    }

    #[test]
    fn principal_specialization() {
        assert_eq!(principal_spec(&p("1"), 2).unwrap(), poly("1 + q"));
        assert_eq!(principal_spec(&p("2,1"), 3).unwrap(), poly("q + 2*q^2 + 2*q^3 + 2*q^4 + q^5"));
        assert_eq!(principal_spec(&Partition::empty(), 4).unwrap(), MPoly::one());
        assert!(principal_spec(&p("1,1,1"), 2).is_err());
    }

    #[test]
    fn elementary() {
        assert_eq!(elementary_sym(1, 2), poly("x1 + x2"));
        assert_eq!(elementary_sym(2, 2), poly("x1*x2"));
        assert_eq!(elementary_sym(0, 3), MPoly::one());
        assert!(elementary_sym(4, 3).is_zero());
        let sum: MPoly = (0..=3).map(|i| elementary_sym(i, 3)).sum();
        let prod: MPoly = (1..=3).map(|k| MPoly::one() + MPoly::x(k)).product();
        assert_eq!(sum, prod);
    }

    #[test]
    fn pieri_expansions() {
        assert_eq!(dual_pieri_expand(&p("1"), 1, 2), vec![p("2"), p("1,1")]);
        assert_eq!(dual_pieri_expand(&Partition::empty(), 3, 3), vec![p("1,1,1")]);
        assert_eq!(dual_pieri_expand(&p("1,1"), 2, 2), vec![p("2,2")]);
        let terms = skew_dual_pieri_expand(&p("1"), &p("1"), 1, 2).unwrap();
        let want = vec![
            SignedSkew { sign: 1, outer: p("2"), inner: p("1") },
            SignedSkew { sign: 1, outer: p("1,1"), inner: p("1") },
            SignedSkew { sign: -1, outer: p("1"), inner: Partition::empty() },
        ];
        assert_eq!(terms, want);
        let zero = skew_dual_pieri_expand(&p("2,1"), &p("1"), 0, 3).unwrap();
        assert_eq!(zero, vec![SignedSkew { sign: 1, outer: p("2,1"), inner: p("1") }]);
    }

    #[test]
    fn split_products() {
        let (l, r) = split_product_sides(&[1, 2, 3, 4], &[], 4).unwrap();
        assert_eq!(l, r);
        let (l, r) = split_product_sides(&[1, 3], &[2], 3).unwrap();
        assert_eq!((l.clone(), r), (poly("1 + q"), l));
        let (l, r) = split_product_sides(&[], &[1, 2], 2).unwrap();
        assert_eq!((l, r), (MPoly::one(), MPoly::one()));
        assert!(split_product_sides(&[1], &[1, 2], 2).is_err());
    }
}
