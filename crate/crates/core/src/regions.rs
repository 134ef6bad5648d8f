//! Hexagons, dented trapezoids and admissible dent sets.
//!
//! Coordinates follow [`crate::lattice`]. A hexagon `H(a, b, c)` occupies
//! lines `0..=a+b` with vertical sides of length `c`. A trapezoid
//! `T(h, m; P, P′)` occupies lines `0..=m`, has `h` unit segments on its left
//! side and `m + h` on its right side, labelled from the bottom starting at 1.
//! Right label `j` is the left-pointing triangle `L(m-1, 2j-2)`, left label
//! `j` is the right-pointing triangle `R(0, m+2j-2)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Pointing, Triangle};
use crate::shapes::{BlockProfile, DentSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HexagonRegion {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl HexagonRegion {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidInput(format!("hexagon sides must be positive, got {a},{b},{c}")));
        }
        Ok(HexagonRegion { a, b, c })
    }

    fn contains_vertex(&self, (x, y): (i32, i32)) -> bool {
        let (a, b, c) = (self.a as i32, self.b as i32, self.c as i32);
        (0..=a + b).contains(&x) && y >= (x - b).abs() && y <= a + b + 2 * c - (x - a).abs()
    }

    pub fn triangles(&self) -> Vec<Triangle> {
        let width = (self.a + self.b) as i32;
        let top = (self.a + self.b + 2 * self.c) as i32;
        let parity = self.b as i32;
        collect_triangles(width, top, parity, |v| self.contains_vertex(v))
    }

    /// Line `x` of the right side.
    pub fn right_boundary(&self) -> i32 {
        (self.a + self.b) as i32
    }
}

impl fmt::Display for HexagonRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{})", self.a, self.b, self.c)
    }
}

/// `T(height, m; P, P′)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrapezoidRegion {
    height: u32,
    m: u32,
    right_dents: DentSet,
    left_dents: DentSet,
}

impl TrapezoidRegion {
    pub fn new(height: u32, m: u32, right_dents: DentSet, left_dents: DentSet) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("trapezoid width m must be positive".into()));
        }
        if let Some(&top) = right_dents.labels().last() {
            if top > m + height {
                return Err(Error::InvalidDentSet(format!(
                    "right dent {top} exceeds m + height = {}",
                    m + height
                )));
            }
        }
        if let Some(&top) = left_dents.labels().last() {
            if top > height {
                return Err(Error::InvalidDentSet(format!("left dent {top} exceeds height = {height}")));
            }
        }
        if right_dents.len() != left_dents.len() + m as usize {
            return Err(Error::InvalidDentSet(format!(
                "|P| - |P′| must equal m = {m}, got |P| = {}, |P′| = {}",
                right_dents.len(),
                left_dents.len()
            )));
        }
        Ok(TrapezoidRegion { height, m, right_dents, left_dents })
    }

    /// `T(height, m; P)` with no left dents.
    pub fn with_right_dents(height: u32, m: u32, right_dents: DentSet) -> Result<Self> {
        Self::new(height, m, right_dents, DentSet::empty())
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn right_dents(&self) -> &DentSet {
        &self.right_dents
    }

    pub fn left_dents(&self) -> &DentSet {
        &self.left_dents
    }

    pub fn right_label_triangle(m: u32, label: u32) -> Triangle {
        Triangle::left(m as i32 - 1, 2 * (label as i32 - 1))
    }

    pub fn left_label_triangle(m: u32, label: u32) -> Triangle {
        Triangle::right(0, m as i32 + 2 * (label as i32 - 1))
    }

    fn contains_vertex(&self, (x, y): (i32, i32)) -> bool {
        let (m, h) = (self.m as i32, self.height as i32);
        (0..=m).contains(&x) && y >= m - x && y <= m + 2 * h + x
    }

    /// The undented trapezoid.
    pub fn full_triangles(&self) -> Vec<Triangle> {
        let m = self.m as i32;
        collect_triangles(m, 2 * m + 2 * self.height as i32, m, |v| self.contains_vertex(v))
    }

    /// Triangles removed by the dents.
    pub fn dent_triangles(&self) -> Vec<Triangle> {
        let mut out: Vec<Triangle> = self
            .right_dents
            .labels()
            .iter()
            .map(|&j| Self::right_label_triangle(self.m, j))
            .chain(self.left_dents.labels().iter().map(|&j| Self::left_label_triangle(self.m, j)))
            .collect();
        out.sort();
        out
    }

    pub fn triangles(&self) -> Vec<Triangle> {
        let dents = self.dent_triangles();
        self.full_triangles().into_iter().filter(|t| dents.binary_search(t).is_err()).collect()
    }
}

impl fmt::Display for TrapezoidRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{};{}", self.height, self.m, self.right_dents)?;
        if !self.left_dents.is_empty() {
            write!(f, ",{}", self.left_dents)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Region {
    Hexagon(HexagonRegion),
    Trapezoid(TrapezoidRegion),
}

impl Region {
    pub fn triangles(&self) -> Vec<Triangle> {
        match self {
            Region::Hexagon(h) => h.triangles(),
            Region::Trapezoid(t) => t.triangles(),
        }
    }

    /// Line against which lozenge columns are measured for x-weights.
    pub fn right_boundary(&self) -> i32 {
        match self {
            Region::Hexagon(h) => h.right_boundary(),
            Region::Trapezoid(t) => t.m as i32,
        }
    }

    /// Number of x-variables carried by weights on this region.
    pub fn num_columns(&self) -> usize {
        self.right_boundary() as usize
    }

    pub fn dent_triangles(&self) -> Vec<Triangle> {
        match self {
            Region::Hexagon(_) => Vec::new(),
            Region::Trapezoid(t) => t.dent_triangles(),
        }
    }
}

impl From<HexagonRegion> for Region {
    fn from(h: HexagonRegion) -> Self {
        Region::Hexagon(h)
    }
}

impl From<TrapezoidRegion> for Region {
    fn from(t: TrapezoidRegion) -> Self {
        Region::Trapezoid(t)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Hexagon(h) => h.fmt(f),
            Region::Trapezoid(t) => t.fmt(f),
        }
    }
}

/// Unit triangles of a convex region given by a vertex predicate, over strips
/// `0..width` and doubled heights `0..top`. Lattice points on line `x` have
/// `y ≡ x + parity (mod 2)`.
fn collect_triangles(
    width: i32,
    top: i32,
    parity: i32,
    inside: impl Fn((i32, i32)) -> bool,
) -> Vec<Triangle> {
    let mut out = Vec::new();
    for col in 0..width {
        for y in 0..top {
            // R(col, y) has a corner on line col, L(col, y) on line col + 1
            let pointing = if (y - col - parity).rem_euclid(2) == 0 {
                Pointing::Right
            } else {
                Pointing::Left
            };
            let t = Triangle { col, y, pointing };
            if t.vertices().iter().all(|&v| inside(v)) {
                out.push(t);
            }
        }
    }
    out
}

pub fn region_triangles(region: &Region) -> Vec<Triangle> {
    region.triangles()
}

/// Label windows `[S_{k-1} + k, S_k + k]`, one per block.
pub fn dent_windows(profile: &BlockProfile) -> Vec<(u32, u32)> {
    (1..=profile.n())
        .map(|k| (profile.s(k - 1) + k as u32, profile.s(k) + k as u32))
        .collect()
}

/// All `P ⊆ [ground]` meeting window `k` in exactly `r_k` labels, in lex order.
fn admissible_dent_sets(profile: &BlockProfile, ground: u32) -> Result<Vec<DentSet>> {
    let n = profile.n() as u32;
    if profile.total() + n != ground {
        return Err(Error::InvalidProfile(format!(
            "profile {profile} has |r| + n = {}, expected {ground}",
            profile.total() + n
        )));
    }
    // each window has r_k + 1 labels and keeps all but one
    let mut sets: Vec<Vec<u32>> = vec![Vec::new()];
    for (lo, hi) in dent_windows(profile) {
        let mut next = Vec::with_capacity(sets.len() * (hi - lo + 1) as usize);
        for base in &sets {
            for skip in lo..=hi {
                let mut s = base.clone();
                s.extend((lo..=hi).filter(|&x| x != skip));
                next.push(s);
            }
        }
        sets = next;
    }
    let mut out: Vec<DentSet> = sets.into_iter().map(DentSet::from_sorted).collect();
    out.sort();
    Ok(out)
}

/// Right dent sets `P ⊆ [m + n]` for profile `r`.
pub fn right_dent_sets(profile: &BlockProfile, m_plus_n: u32) -> Result<Vec<DentSet>> {
    admissible_dent_sets(profile, m_plus_n)
}

/// Left dent sets `P′ ⊆ [n + l]` for profile `r′`.
pub fn left_dent_sets(profile: &BlockProfile, n_plus_l: u32) -> Result<Vec<DentSet>> {
    admissible_dent_sets(profile, n_plus_l)
}

/// `P_min = [S_n + n] \ {S_k + k}`.
pub fn p_min(profile: &BlockProfile) -> DentSet {
    let n = profile.n();
    let holes: Vec<u32> = (1..=n).map(|k| profile.s(k) + k as u32).collect();
    let ground = profile.total() + n as u32;
    DentSet::from_sorted((1..=ground).filter(|x| !holes.contains(x)).collect())
}

/// `P′_max = [S′_n + n] \ {S′_{k-1} + k}`.
pub fn p_prime_max(profile: &BlockProfile) -> DentSet {
    let n = profile.n();
    let holes: Vec<u32> = (1..=n).map(|k| profile.s(k - 1) + k as u32).collect();
    let ground = profile.total() + n as u32;
    DentSet::from_sorted((1..=ground).filter(|x| !holes.contains(x)).collect())
}

pub fn extremal_dents(profile: &BlockProfile, profile_prime: &BlockProfile) -> (DentSet, DentSet) {
    (p_min(profile), p_prime_max(profile_prime))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `d(P) = ΣP − ΣP_min`
    AboveMin,
    /// `d′(P′) = ΣP′_max − ΣP′`
    BelowMax,
}

pub fn dent_distance(p: &DentSet, reference: &DentSet, direction: Direction) -> Result<i64> {
    if p.len() != reference.len() {
        return Err(Error::InvalidDentSet(format!(
            "{p} and {reference} have different sizes"
        )));
    }
    let (a, b) = (p.sum() as i64, reference.sum() as i64);
    Ok(match direction {
        Direction::AboveMin => a - b,
        Direction::BelowMax => b - a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[u32]) -> DentSet {
        DentSet::new(v.to_vec()).unwrap()
    }

    fn prof(v: &[u32]) -> BlockProfile {
        BlockProfile::new(v.to_vec()).unwrap()
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(HexagonRegion::new(1, 1, 1).unwrap().triangles().len(), 6);
        assert_eq!(HexagonRegion::new(2, 3, 4).unwrap().triangles().len(), 2 * (6 + 12 + 8));
        let t = TrapezoidRegion::with_right_dents(1, 1, ds(&[1])).unwrap();
        assert_eq!(t.full_triangles().len(), 3);
        assert_eq!(t.triangles().len(), 2);
        let t = TrapezoidRegion::with_right_dents(2, 2, ds(&[1, 3])).unwrap();
        assert_eq!(t.full_triangles().len(), 12);
        assert_eq!(t.triangles().len(), 10);
        assert!(t.dent_triangles().iter().all(|d| t.full_triangles().contains(d)));
    }

    #[test]
    fn trapezoid_validation() {
        assert!(TrapezoidRegion::with_right_dents(1, 1, ds(&[3])).is_err());
        assert!(TrapezoidRegion::with_right_dents(2, 2, ds(&[1])).is_err());
        assert!(TrapezoidRegion::new(2, 1, ds(&[1, 2]), ds(&[3])).is_err());
    }

    #[test]
    fn dent_set_generation() {
        let sets = right_dent_sets(&prof(&[1, 1]), 4).unwrap();
        let want: Vec<DentSet> = [[1, 3], [1, 4], [2, 3], [2, 4]].iter().map(|v| ds(v)).collect();
        assert_eq!(sets, want);
        assert_eq!(right_dent_sets(&prof(&[3]), 4).unwrap().len(), 4);
        assert_eq!(right_dent_sets(&prof(&[2, 0, 2, 1, 3]), 13).unwrap().len(), 72);
        assert_eq!(left_dent_sets(&prof(&[1]), 2).unwrap(), vec![ds(&[1]), ds(&[2])]);
        assert_eq!(left_dent_sets(&prof(&[0, 0, 0]), 3).unwrap(), vec![DentSet::empty()]);
        assert_eq!(left_dent_sets(&prof(&[1, 0]), 3).unwrap(), vec![ds(&[1]), ds(&[2])]);
        assert!(matches!(right_dent_sets(&prof(&[1, 1]), 5), Err(Error::InvalidProfile(_))));
    }

    #[test]
    fn extremal_sets_and_distances() {
        assert_eq!(p_min(&prof(&[2, 0, 2, 1, 3])), ds(&[1, 2, 5, 6, 8, 10, 11, 12]));
        assert_eq!(p_prime_max(&prof(&[1, 1, 1])), ds(&[2, 4, 6]));
        assert_eq!(p_min(&prof(&[4])), ds(&[1, 2, 3, 4]));
        let d = dent_distance(
            &ds(&[1, 3, 5, 7, 8, 10, 12, 13]),
            &ds(&[1, 2, 5, 6, 8, 10, 11, 12]),
            Direction::AboveMin,
        )
        .unwrap();
        assert_eq!(d, 4);
        assert_eq!(dent_distance(&ds(&[1]), &ds(&[2]), Direction::BelowMax).unwrap(), 1);
    }
}
