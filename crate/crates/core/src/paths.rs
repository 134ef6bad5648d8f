//! Weighted lattice paths with east and south steps, the path matrix whose
//! determinant counts block-symmetric tilings, and exact polynomial
//! determinants.
//!
//! A south step leaving `(x, y)` carries weight `q^{y-x-1} t`; east steps
//! carry weight 1. The weight therefore only depends on `y - x` and is
//! invariant under diagonal translation.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactalg::{q_binomial, MPoly, Monomial, QRatio};
use crate::shapes::BlockProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

fn qt(q: i64, t: i64) -> MPoly {
    MPoly::monomial(Monomial::qt(q as u32, t as u32))
}

/// Total weight of paths from `(a, b)` to the origin:
/// `q^{b(b-1)/2} t^b [b - a choose b]_q`, zero outside `a <= 0 <= b`.
pub fn path_weight_closed(a: i64, b: i64) -> MPoly {
    if a > 0 || b < 0 || b < a {
        return MPoly::zero();
    }
    q_binomial(b - a, b) * &qt(b * (b - 1) / 2, b)
}

/// The same weight from `wt(a, b) = wt(a+1, b) + q^{b-a-1} t wt(a, b-1)`.
pub fn path_weight_recursive(a: i64, b: i64) -> MPoly {
    let mut memo = HashMap::new();
    path_weight_between_memo(LatticePoint::new(a, b), LatticePoint::new(0, 0), &mut memo)
}

fn path_weight_between_memo(
    from: LatticePoint,
    to: LatticePoint,
    memo: &mut HashMap<LatticePoint, MPoly>,
) -> MPoly {
    if from.x > to.x || from.y < to.y {
        return MPoly::zero();
    }
    if from == to {
        return MPoly::one();
    }
    if let Some(w) = memo.get(&from) {
        return w.clone();
    }
    let east = path_weight_between_memo(LatticePoint::new(from.x + 1, from.y), to, memo);
    let south = path_weight_between_memo(LatticePoint::new(from.x, from.y - 1), to, memo);
    let w = if south.is_zero() {
        east
    } else {
        east + south.mul_monomial(&Monomial::qt((from.y - from.x - 1) as u32, 1))
    };
    memo.insert(from, w.clone());
    w
}

/// Total weight of east/south paths from `from` to `to`, by the recurrence.
/// Requires `to.y >= to.x` so that every south step has a non-negative q-power.
pub fn path_weight_between(from: LatticePoint, to: LatticePoint) -> Result<MPoly> {
    if to.y < to.x {
        return invalid(format!("target ({}, {}) lies below the diagonal", to.x, to.y));
    }
    Ok(path_weight_between_memo(from, to, &mut HashMap::new()))
}

/// A square matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<MPoly>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return invalid("matrix must be square with dimension at least 1");
        }
        Ok(PolyMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> MPoly) -> Self {
        assert!(dim > 0);
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        PolyMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { MPoly::one() } else { MPoly::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.dim + j]
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let d = self.dim - 1;
        PolyMatrix::from_fn(d, |i, j| {
            let r = if i < skip_row { i } else { i + 1 };
            let c = if j < skip_col { j } else { j + 1 };
            self.get(r, c).clone()
        })
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &PolyMatrix) -> MPoly {
    if m.dim == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = MPoly::zero();
    for j in 0..m.dim {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let term = a * &det_cofactor(&m.minor(0, j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Fraction-free elimination; every division is exact by Sylvester's identity.
pub fn det_bareiss(m: &PolyMatrix) -> Result<MPoly> {
    let n = m.dim;
    let mut a: Vec<Vec<MPoly>> =
        (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).map_err(|e| {
                    Error::Internal(format!("Bareiss step {k} at ({i},{j}): {e}"))
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

pub fn det_polymatrix(m: &PolyMatrix) -> Result<MPoly> {
    if m.dim <= 4 {
        Ok(det_cofactor(m))
    } else {
        det_bareiss(m)
    }
}

/// Starting point `u_i = (i, m + i)`.
pub fn lgv_start(i: usize, m: u32) -> LatticePoint {
    LatticePoint::new(i as i64, (m as usize + i) as i64)
}

/// Diagonal endpoints `(c, c)` of block `j`, `c = S_{j-1} + j + k` for `0 <= k <= r_j`.
pub fn lgv_targets(profile: &BlockProfile, j: usize) -> Vec<LatticePoint> {
    let base = profile.s(j - 1) as i64 + j as i64;
    (0..=profile.r_k(j) as i64).map(|k| LatticePoint::new(base + k, base + k)).collect()
}

/// `a_{ij} = Σ_k wt(u_i → (c, c))`, each weight translated to end at the origin.
pub fn lgv_matrix(profile: &BlockProfile, m: u32, n: u32) -> Result<PolyMatrix> {
    if profile.n() != n as usize || profile.total() != m {
        return Err(Error::InvalidProfile(format!(
            "r = {profile} must have {n} blocks summing to {m}"
        )));
    }
    Ok(PolyMatrix::from_fn(n as usize, |i, j| {
        let u = lgv_start(i + 1, m);
        lgv_targets(profile, j + 1)
            .into_iter()
            .map(|v| path_weight_closed(u.x - v.x, u.y - v.x))
            .sum()
    }))
}

/// Both sides of `det(q^{j L_i} [M choose L_i + j]_q) = q^{Σ i L_i}
/// Π_{i<j} [L_i - L_j]_q / Π [L_i + n]_q! · Π [M + i - 1]_q! / Π [M - L_i - 1]_q!`
/// at integer values of `L_i` and `M`.
pub fn krattenthaler_sides(l: &[i64], big_m: i64, n: usize) -> Result<(MPoly, MPoly)> {
    if l.len() != n || n == 0 {
        return invalid(format!("expected {n} values of L, got {}", l.len()));
    }
    if let Some(&bad) = l.iter().find(|&&li| li < 0 || big_m - li - 1 < 0) {
        return invalid(format!("L = {bad} out of range for M = {big_m}"));
    }
    if l.windows(2).any(|w| w[0] < w[1]) {
        return invalid("L must be weakly decreasing");
    }
    let lhs = det_polymatrix(&PolyMatrix::from_fn(n, |i, j| {
        let jj = j as i64 + 1;
        q_binomial(big_m, l[i] + jj).mul_monomial(&Monomial::q_pow((jj * l[i]) as u32))
    }))?;
    let mut rhs = QRatio::new();
    rhs.q_shift(l.iter().enumerate().map(|(i, &li)| (i as i64 + 1) * li).sum());
    for i in 0..n {
        for j in i + 1..n {
            rhs.qint(l[i] - l[j], 1);
        }
        rhs.qfact(l[i] + n as i64, -1)
            .qfact(big_m + i as i64, 1)
            .qfact(big_m - l[i] - 1, -1);
    }
    Ok((lhs, rhs.to_mpoly()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(path_weight_closed(0, 0), MPoly::one());
        assert_eq!(path_weight_closed(0, 2), poly("q*t^2"));
        assert_eq!(path_weight_closed(-1, 1), poly("q*t + t"));
        assert!(path_weight_closed(1, 1).is_zero());
        assert!(path_weight_closed(-1, -1).is_zero());
        for (a, b) in [(0, 0), (0, 2), (-1, 1), (-3, 2), (2, 1)] {
            assert_eq!(path_weight_recursive(a, b), path_weight_closed(a, b));
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(det_polymatrix(&PolyMatrix::identity(3)).unwrap(), MPoly::one());
        let m = PolyMatrix::new(vec![
            vec![MPoly::one(), MPoly::q()],
            vec![MPoly::t(), poly("q*t")],
        ])
        .unwrap();
        assert!(det_polymatrix(&m).unwrap().is_zero());
        let v = PolyMatrix::from_fn(5, |i, j| (MPoly::q() + MPoly::constant(i as i64)).pow(j as u32));
        assert_eq!(det_bareiss(&v).unwrap(), det_cofactor(&v));
        let swap = PolyMatrix::new(vec![
            vec![MPoly::zero(), MPoly::one()],
            vec![MPoly::one(), MPoly::t()],
        ])
        .unwrap();
        assert_eq!(det_bareiss(&swap).unwrap(), MPoly::constant(-1));
    }

    #[test]
    fn lgv_examples() {
        let r = BlockProfile::new(vec![1, 1]).unwrap();
        let det = det_polymatrix(&lgv_matrix(&r, 2, 2).unwrap()).unwrap();
        let want: MPoly = ["1 + t", "1 + q*t", "1 + q", "t"].iter().map(|s| poly(s)).product();
        assert_eq!(det, want);
        let r = BlockProfile::new(vec![3]).unwrap();
        let a = lgv_matrix(&r, 3, 1).unwrap();
        let want: MPoly = (0..3).map(|i| MPoly::one() + qt(i, 1)).product();
        assert_eq!(a.get(0, 0), &want);
    }

    #[test]
    fn krattenthaler_examples() {
        assert_eq!(krattenthaler_sides(&[0], 2, 1).unwrap(), (poly("1 + q"), poly("1 + q")));
        let (l, r) = krattenthaler_sides(&[1], 3, 1).unwrap();
        assert_eq!(l, poly("q + q^2 + q^3"));
        assert_eq!(l, r);
        let (l, r) = krattenthaler_sides(&[2, 0], 3, 2).unwrap();
        assert_eq!(l, r);
        assert!(krattenthaler_sides(&[3], 3, 1).is_err());
    }
}
