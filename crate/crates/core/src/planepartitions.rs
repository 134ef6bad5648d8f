//! Boxed plane partitions, enumerated straight from the matrix definition.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactalg::{MPoly, Monomial};
use crate::shapes::BlockProfile;

/// Default size guard for full box enumeration: `a·b <= 9` and `c <= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PpLimits {
    pub max_cells: u32,
    pub max_height: u32,
    /// Cap on visited plane partitions for the symmetric enumerators.
    pub max_visits: u64,
}

impl Default for PpLimits {
    fn default() -> Self {
        PpLimits { max_cells: 9, max_height: 4, max_visits: 5_000_000 }
    }
}

impl PpLimits {
    pub fn unlimited() -> Self {
        PpLimits { max_cells: u32::MAX, max_height: u32::MAX, max_visits: u64::MAX }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PlanePartition {
    entries: Vec<Vec<u32>>,
    #[serde(skip)]
    bound: u32,
}

impl PlanePartition {
    pub fn new(entries: Vec<Vec<u32>>, bound: u32) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return invalid("rows of a plane partition must have equal length");
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let up = if i > 0 { entries[i - 1][j] } else { bound };
                let left = if j > 0 { row[j - 1] } else { bound };
                if v > up.min(left) {
                    return invalid(format!("entry {v} at ({}, {}) breaks monotonicity or bound {bound}", i + 1, j + 1));
                }
            }
        }
        Ok(PlanePartition { entries, bound })
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rows();
        n == self.cols() && (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `Σ_{i <= j} π_{ij}`.
    pub fn half_size(&self) -> u64 {
        (0..self.rows())
            .flat_map(|i| (i..self.cols()).map(move |j| (i, j)))
            .map(|(i, j)| self.entries[i][j] as u64)
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PpWeights {
    pub total: u64,
    pub diagonal: u64,
    pub off_diagonal: u64,
}

/// `(|π|, |π|_d, |π|_n)`.
pub fn pp_weights(pi: &PlanePartition) -> PpWeights {
    let mut total = 0;
    let mut diagonal = 0;
    for (i, row) in pi.entries.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            total += v as u64;
            if i == j {
                diagonal += v as u64;
            }
        }
    }
    PpWeights { total, diagonal, off_diagonal: total - diagonal }
}

/// All plane partitions in an `a × b × c` box, in lex order of their entries.
pub fn enumerate_pp(a: u32, b: u32, c: u32, limits: &PpLimits) -> Result<Vec<PlanePartition>> {
    if a * b > limits.max_cells || c > limits.max_height {
        return Err(Error::SizeLimit {
            what: format!("plane partitions in a {a}x{b}x{c} box"),
            limit: limits.max_cells as u64,
        });
    }
    let (a, b) = (a as usize, b as usize);
    let mut out = Vec::new();
    let mut grid = vec![vec![0u32; b]; a];
    fn rec(k: usize, c: u32, grid: &mut Vec<Vec<u32>>, out: &mut Vec<PlanePartition>) {
        let b = grid[0].len();
        if k == grid.len() * b {
            out.push(PlanePartition { entries: grid.clone(), bound: c });
            return;
        }
        let (i, j) = (k / b, k % b);
        let up = if i > 0 { grid[i - 1][j] } else { c };
        let left = if j > 0 { grid[i][j - 1] } else { c };
        for v in 0..=up.min(left) {
            grid[i][j] = v;
            rec(k + 1, c, grid, out);
        }
        grid[i][j] = 0;
    }
    if a == 0 || b == 0 {
        out.push(PlanePartition { entries: vec![vec![0; b]; a], bound: c });
    } else {
        rec(0, c, &mut grid, &mut out);
    }
    Ok(out)
}

/// `Σ q^{|π|}` over the `a × b × c` box.
pub fn volume_genfun(a: u32, b: u32, c: u32, limits: &PpLimits) -> Result<MPoly> {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for pi in enumerate_pp(a, b, c, limits)? {
        *counts.entry(Monomial::q_pow(pp_weights(&pi).total as u32)).or_default() += 1;
    }
    Ok(MPoly::from_counts(counts))
}

/// Allowed values of `π_{ii}` (1-based `i`) under profile `r`: `{k-1, k}`
/// when `S_n - S_k < i <= S_n - S_{k-1}`.
pub fn diagonal_window(profile: &BlockProfile, i: u32) -> Option<(u32, u32)> {
    let sn = profile.total();
    (1..=profile.n())
        .find(|&k| sn - profile.s(k) < i && i <= sn - profile.s(k - 1))
        .map(|k| (k as u32 - 1, k as u32))
}

pub fn is_r_block_symmetric(pi: &PlanePartition, profile: &BlockProfile, n: u32) -> Result<bool> {
    let m = profile.total() as usize;
    if pi.rows() != m || pi.cols() != m {
        return invalid(format!(
            "expected a {m}x{m} plane partition for r = {profile}, got {}x{}",
            pi.rows(),
            pi.cols()
        ));
    }
    if profile.n() != n as usize {
        return Err(Error::InvalidProfile(format!("r = {profile} must have {n} blocks")));
    }
    if pi.entries.iter().flatten().any(|&v| v > n) || !pi.is_symmetric() {
        return Ok(false);
    }
    Ok((0..m).all(|i| {
        let v = pi.entries[i][i];
        matches!(diagonal_window(profile, i as u32 + 1), Some((lo, hi)) if lo <= v && v <= hi)
    }))
}

/// Walks the upper triangle of every symmetric `m × m` plane partition with
/// entries at most `n` whose diagonal passes `diag_ok(i, value)`, reporting
/// `(Σ_{i<j} π_{ij}, Σ_i π_{ii})`.
fn for_each_symmetric(
    m: usize,
    n: u32,
    diag_ok: impl Fn(usize, u32) -> bool,
    max_visits: u64,
    mut visit: impl FnMut(u64, u64),
) -> Result<()> {
    let cells: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let mut grid = vec![vec![0u32; m]; m];
    let mut visits = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        n: u32,
        diag_ok: &dyn Fn(usize, u32) -> bool,
        grid: &mut Vec<Vec<u32>>,
        sums: (u64, u64),
        visits: &mut u64,
        max_visits: u64,
        visit: &mut dyn FnMut(u64, u64),
    ) -> Result<()> {
        if k == cells.len() {
            *visits += 1;
            if *visits > max_visits {
                return Err(Error::SizeLimit {
                    what: "symmetric plane partitions".into(),
                    limit: max_visits,
                });
            }
            visit(sums.0, sums.1);
            return Ok(());
        }
        let (i, j) = cells[k];
        let up = if i > 0 { grid[i - 1][j] } else { n };
        let left = if j > i { grid[i][j - 1] } else { n };
        for v in 0..=up.min(left) {
            if i == j && !diag_ok(i, v) {
                continue;
            }
            grid[i][j] = v;
            let sums = if i == j { (sums.0, sums.1 + v as u64) } else { (sums.0 + v as u64, sums.1) };
            rec(k + 1, cells, n, diag_ok, grid, sums, visits, max_visits, visit)?;
        }
        grid[i][j] = 0;
        Ok(())
    }
    rec(0, &cells, n, &diag_ok, &mut grid, (0, 0), &mut visits, max_visits, &mut visit)
}

/// `Σ q^{|π|_n} t^{|π|_d}` over r-block symmetric plane partitions in `PP^n(m × m)`.
pub fn r_block_pp_genfun(m: u32, n: u32, profile: &BlockProfile, limits: &PpLimits) -> Result<MPoly> {
    if profile.total() != m || profile.n() != n as usize {
        return Err(Error::InvalidProfile(format!(
            "r = {profile} must have {n} blocks summing to {m}"
        )));
    }
    let windows: Vec<(u32, u32)> = (1..=m)
        .map(|i| diagonal_window(profile, i).expect("every diagonal index lies in a window"))
        .collect();
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for_each_symmetric(
        m as usize,
        n,
        |i, v| windows[i].0 <= v && v <= windows[i].1,
        limits.max_visits,
        |upper, diag| {
            *counts.entry(Monomial::qt(2 * upper as u32, diag as u32)).or_default() += 1;
        },
    )?;
    Ok(MPoly::from_counts(counts))
}

/// `Σ q^{|π|′}` over symmetric plane partitions in `PP^n(m × m)`.
pub fn symmetric_half_genfun(m: u32, n: u32, limits: &PpLimits) -> Result<MPoly> {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for_each_symmetric(m as usize, n, |_, _| true, limits.max_visits, |upper, diag| {
        *counts.entry(Monomial::q_pow((upper + diag) as u32)).or_default() += 1;
    })?;
    Ok(MPoly::from_counts(counts))
}
