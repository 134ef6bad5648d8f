//! Brute-force lozenge tilings and the generating functions built from them.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Monomial};
use crate::lattice::{Lozenge, Orientation, Triangle};
use crate::regions::{
    dent_distance, dent_windows, left_dent_sets, p_prime_max, right_dent_sets, Direction,
    HexagonRegion, Region, TrapezoidRegion,
};
use crate::shapes::{BlockProfile, DentSet};

/// Default cap on the number of tilings a single enumeration may visit.
pub const DEFAULT_TILING_LIMIT: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tiling {
    lozenges: Vec<Lozenge>,
}

impl Tiling {
    pub fn new(mut lozenges: Vec<Lozenge>) -> Self {
        lozenges.sort();
        Tiling { lozenges }
    }

    pub fn lozenges(&self) -> &[Lozenge] {
        &self.lozenges
    }

    pub fn len(&self) -> usize {
        self.lozenges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lozenges.is_empty()
    }

    pub fn count(&self, orientation: Orientation) -> usize {
        self.lozenges.iter().filter(|l| l.orientation == orientation).count()
    }

    /// True iff the lozenges cover `triangles` exactly once each.
    pub fn partitions(&self, triangles: &[Triangle]) -> bool {
        let mut seen: Vec<Triangle> =
            self.lozenges.iter().flat_map(|l| [l.left, l.right]).collect();
        seen.sort();
        let mut want = triangles.to_vec();
        want.sort();
        seen == want
    }
}

/// Precomputed adjacency for backtracking over one region.
struct Board {
    triangles: Vec<Triangle>,
    /// Candidate partners of each triangle with larger index.
    forward: Vec<Vec<(usize, Orientation)>>,
}

impl Board {
    fn new(mut triangles: Vec<Triangle>) -> Self {
        triangles.sort();
        let index: HashMap<Triangle, usize> =
            triangles.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let forward = triangles
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut v: Vec<(usize, Orientation)> = t
                    .neighbors()
                    .iter()
                    .filter_map(|(nb, o)| index.get(nb).map(|&j| (j, *o)))
                    .filter(|&(j, _)| j > i)
                    .collect();
                v.sort();
                v
            })
            .collect();
        Board { triangles, forward }
    }

    fn lozenge(&self, i: usize, j: usize) -> Lozenge {
        Lozenge::new(self.triangles[i], self.triangles[j]).expect("neighbors share an edge")
    }

    fn run<F: FnMut(&[Lozenge]) -> Result<()>>(&self, visit: &mut F) -> Result<()> {
        if self.triangles.len() % 2 == 1 {
            return Ok(());
        }
        let mut covered = vec![false; self.triangles.len()];
        let mut stack = Vec::with_capacity(self.triangles.len() / 2);
        self.search(0, &mut covered, &mut stack, visit)
    }

    fn search<F: FnMut(&[Lozenge]) -> Result<()>>(
        &self,
        from: usize,
        covered: &mut [bool],
        stack: &mut Vec<Lozenge>,
        visit: &mut F,
    ) -> Result<()> {
        let Some(i) = (from..covered.len()).find(|&i| !covered[i]) else {
            return visit(stack);
        };
        covered[i] = true;
        for &(j, _) in &self.forward[i] {
            if covered[j] {
                continue;
            }
            covered[j] = true;
            stack.push(self.lozenge(i, j));
            let res = self.search(i + 1, covered, stack, visit);
            stack.pop();
            covered[j] = false;
            res?;
        }
        covered[i] = false;
        Ok(())
    }
}

/// Calls `visit` on every tiling of `triangles` (lozenges in placement order).
/// Returns the number of tilings, or a size-limit error once `limit` is exceeded.
pub fn for_each_tiling_of(
    triangles: Vec<Triangle>,
    limit: u64,
    mut visit: impl FnMut(&[Lozenge]),
) -> Result<u64> {
    let board = Board::new(triangles);
    let mut count = 0u64;
    board.run(&mut |loz: &[Lozenge]| {
        count += 1;
        if count > limit {
            return Err(Error::SizeLimit { what: "lozenge tilings".into(), limit });
        }
        visit(loz);
        Ok(())
    })?;
    Ok(count)
}

pub fn for_each_tiling(region: &Region, limit: u64, visit: impl FnMut(&[Lozenge])) -> Result<u64> {
    for_each_tiling_of(region.triangles(), limit, visit)
}

pub fn count_tilings(region: &Region, limit: u64) -> Result<u64> {
    for_each_tiling(region, limit, |_| {})
}

/// All tilings in backtracking order.
pub fn enumerate_tilings(region: &Region, limit: u64) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for_each_tiling(region, limit, |l| out.push(Tiling::new(l.to_vec())))?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// `x_{k+1}` per negative lozenge `k` columns from the right boundary.
    X,
    /// The same with `x_k := q^{k-1} t`.
    Qt,
}

fn x_exponents(lozenges: &[Lozenge], right_boundary: i32, width: usize) -> Vec<u32> {
    let mut exps = vec![0u32; width];
    for l in lozenges.iter().filter(|l| l.orientation == Orientation::Negative) {
        exps[l.column_from_right(right_boundary) as usize] += 1;
    }
    exps
}

fn monomial_of(lozenges: &[Lozenge], region: &Region, weight: Weight) -> Monomial {
    let exps = x_exponents(lozenges, region.right_boundary(), region.num_columns());
    let m = Monomial::from_content(&exps);
    match weight {
        Weight::X => m,
        Weight::Qt => m.substitute_qt(),
    }
}

pub fn tiling_weight_x(tiling: &Tiling, region: &Region) -> MPoly {
    MPoly::monomial(monomial_of(tiling.lozenges(), region, Weight::X))
}

pub fn weighted_region_sum(region: &Region, weight: Weight, limit: u64) -> Result<MPoly> {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for_each_tiling(region, limit, |l| {
        *counts.entry(monomial_of(l, region, weight)).or_default() += 1;
    })?;
    Ok(MPoly::from_counts(counts))
}

fn check_profile(profile: &BlockProfile, total: u32, n: u32, what: &str) -> Result<()> {
    if profile.n() != n as usize || profile.total() != total {
        return Err(Error::InvalidProfile(format!(
            "{what} = {profile} must have {n} blocks summing to {total}"
        )));
    }
    Ok(())
}

/// `Σ_P M(T(n, m; P))` over the admissible right dent sets of `r`.
pub fn block_symmetric_sum(
    profile: &BlockProfile,
    m: u32,
    n: u32,
    weight: Weight,
    limit: u64,
) -> Result<MPoly> {
    check_profile(profile, m, n, "r")?;
    let mut total = MPoly::zero();
    for p in right_dent_sets(profile, m + n)? {
        let region = TrapezoidRegion::with_right_dents(n, m, p)?.into();
        total += weighted_region_sum(&region, weight, limit)?;
    }
    Ok(total)
}

/// `Σ_{P, P′} (-1)^{d′(P′)} M_x(T(n + l, m; P, P′))`.
pub fn signed_block_sum(
    profile: &BlockProfile,
    profile_prime: &BlockProfile,
    m: u32,
    n: u32,
    l: u32,
    limit: u64,
) -> Result<MPoly> {
    check_profile(profile, m + l, n, "r")?;
    check_profile(profile_prime, l, n, "r′")?;
    let rights = right_dent_sets(profile, m + n + l)?;
    let lefts = left_dent_sets(profile_prime, n + l)?;
    let top = p_prime_max(profile_prime);
    let mut total = MPoly::zero();
    for pp in &lefts {
        let d = dent_distance(pp, &top, Direction::BelowMax)?;
        let mut part = MPoly::zero();
        for p in &rights {
            let region = TrapezoidRegion::new(n + l, m, p.clone(), pp.clone())?.into();
            part += weighted_region_sum(&region, Weight::X, limit)?;
        }
        if d % 2 == 0 {
            total += part;
        } else {
            total -= part;
        }
    }
    Ok(total)
}

/// A mirror-symmetric tiling of `H(m, m, n)`: the labels of its axis-crossing
/// horizontal lozenges and its (q,t)-weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricTiling {
    pub crossings: DentSet,
    pub weight: Monomial,
}

/// Every tiling of `H(m, m, n)` that is symmetric about the vertical axis.
pub fn symmetric_hexagon_tilings(m: u32, n: u32, limit: u64) -> Result<Vec<SymmetricTiling>> {
    let hex = HexagonRegion::new(m, m, n)?;
    let axis = m as i32;
    let mut out = Vec::new();
    for_each_tiling(&Region::Hexagon(hex), limit, |lozenges| {
        let placed: std::collections::HashSet<&Lozenge> = lozenges.iter().collect();
        if !lozenges.iter().all(|l| placed.contains(&l.mirror(axis))) {
            return;
        }
        let mut crossings = Vec::new();
        let mut q = 0u32;
        let mut t = 0u32;
        for l in lozenges {
            match l.orientation {
                Orientation::Horizontal if l.left.col == axis - 1 => {
                    crossings.push((l.left.y / 2 + 1) as u32)
                }
                Orientation::Negative if l.left.col < axis => {
                    q += (axis - 1 - l.left.col) as u32;
                    t += 1;
                }
                _ => {}
            }
        }
        crossings.sort_unstable();
        out.push(SymmetricTiling {
            crossings: DentSet::from_sorted(crossings),
            weight: Monomial::qt(q, t),
        });
    })?;
    Ok(out)
}

/// Whether the axis crossings fill the `k`-th cell with exactly `r_k` lozenges.
pub fn satisfies_cells(crossings: &DentSet, profile: &BlockProfile) -> bool {
    dent_windows(profile).iter().zip(profile.r()).all(|(&(lo, hi), &r)| {
        crossings.labels().iter().filter(|&&x| (lo..=hi).contains(&x)).count() == r as usize
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricCount {
    pub count: u64,
    pub genfun: MPoly,
}

/// The r-block diagonally symmetric tilings of `H(m, m, n)`, found by filtering
/// all tilings of the hexagon.
pub fn enumerate_symmetric_hexagon(
    profile: &BlockProfile,
    m: u32,
    n: u32,
    limit: u64,
) -> Result<SymmetricCount> {
    check_profile(profile, m, n, "r")?;
    let all = symmetric_hexagon_tilings(m, n, limit)?;
    Ok(tally_symmetric(&all, profile))
}

/// Restricts a precomputed list of symmetric tilings to one profile.
pub fn tally_symmetric(all: &[SymmetricTiling], profile: &BlockProfile) -> SymmetricCount {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    let mut count = 0;
    for s in all.iter().filter(|s| satisfies_cells(&s.crossings, profile)) {
        count += 1;
        *counts.entry(s.weight.clone()).or_default() += 1;
    }
    SymmetricCount { count, genfun: MPoly::from_counts(counts) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[u32]) -> DentSet {
        DentSet::new(v.to_vec()).unwrap()
    }

    fn trap(h: u32, m: u32, p: &[u32]) -> Region {
        TrapezoidRegion::with_right_dents(h, m, ds(p)).unwrap().into()
    }

    fn hex(a: u32, b: u32, c: u32) -> Region {
        HexagonRegion::new(a, b, c).unwrap().into()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_tilings(&hex(1, 1, 1), 100).unwrap(), 2);
        assert_eq!(count_tilings(&hex(2, 2, 2), 100).unwrap(), 20);
        assert_eq!(count_tilings(&trap(1, 1, &[2]), 100).unwrap(), 1);
        assert_eq!(count_tilings(&hex(3, 3, 3), 10_000).unwrap(), 980);
    }

    #[test]
    fn tilings_partition_the_region() {
        let r = hex(2, 3, 2);
        let tris = r.triangles();
        let all = enumerate_tilings(&r, 10_000).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|t| t.partitions(&tris)));
    }

    #[test]
    fn size_limit_is_enforced() {
        let err = count_tilings(&hex(2, 2, 2), 19).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { limit: 19, .. }));
    }

    #[test]
    fn trapezoid_weights() {
        let one = weighted_region_sum(&trap(1, 1, &[1]), Weight::X, 10).unwrap();
        assert_eq!(one, MPoly::one());
        let x1 = weighted_region_sum(&trap(1, 1, &[2]), Weight::X, 10).unwrap();
        assert_eq!(x1, MPoly::x(1));
        let qt = weighted_region_sum(&trap(2, 2, &[2, 4]), Weight::Qt, 100).unwrap();
        assert_eq!(qt, "q^2*t^3 + q*t^3".parse().unwrap());
    }

    #[test]
    fn block_sums() {
        let r = BlockProfile::new(vec![1, 1]).unwrap();
        let got = block_symmetric_sum(&r, 2, 2, Weight::Qt, 1000).unwrap();
        let t = MPoly::t();
        let q = MPoly::q();
        let want = (MPoly::one() + &t) * (MPoly::one() + &q * &t) * (MPoly::one() + &q) * t;
        assert_eq!(got, want);
        let r = BlockProfile::ones(3);
        let all = block_symmetric_sum(&r, 3, 3, Weight::X, 1000).unwrap();
        assert_eq!(all.eval_at_one(), 64.into());
    }

    #[test]
    fn symmetric_hexagon_counts() {
        let c = |r: &[u32], m, n| {
            enumerate_symmetric_hexagon(&BlockProfile::new(r.to_vec()).unwrap(), m, n, 100_000)
                .unwrap()
                .count
        };
        assert_eq!(c(&[1, 1], 2, 2), 8);
        assert_eq!(c(&[2], 2, 1), 4);
        assert_eq!(c(&[1, 1, 1], 3, 3), 64);
    }
}
