//! Partitions, skew shapes, block profiles and dent sets.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// An integer partition, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing parts; zeros are allowed and trimmed.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts {parts:?} are not weakly decreasing"));
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `self ⊆ outer` as Young diagrams.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        contains(self, outer)
    }

    /// All partitions of `n` with at most `max_rows` rows and parts at most `max_part`,
    /// in descending lex order.
    pub fn all_of_size(n: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
        fn rec(left: u32, cap: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=cap.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1`, `(2,1)`, `()` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = parse_list(inner)?;
        Partition::new(parts)
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a non-negative integer")))
        })
        .collect()
}

/// `inner ⊆ outer`, comparing parts with zero padding.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    Vertical(u64),
    Horizontal(u64),
    Both(u64),
    Neither,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::Containment { inner: inner.to_string(), outer: outer.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// At most one box in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        // λ_{i+1} ≤ μ_i for every row i
        (0..self.outer.len()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }

    /// At most one box in each row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }

    pub fn strip_kind(&self) -> StripKind {
        strip_check(self)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

pub fn strip_check(shape: &SkewShape) -> StripKind {
    let k = shape.size();
    match (shape.is_vertical_strip(), shape.is_horizontal_strip()) {
        (true, true) => StripKind::Both(k),
        (true, false) => StripKind::Vertical(k),
        (false, true) => StripKind::Horizontal(k),
        (false, false) => StripKind::Neither,
    }
}

/// A block profile `r = (r_1, ..., r_n)` with partial sums `S_0 = 0, S_k = r_1 + ... + r_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockProfile {
    r: Vec<u32>,
}

impl BlockProfile {
    pub fn new(r: Vec<u32>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidProfile("profile must have at least one block".into()));
        }
        Ok(BlockProfile { r })
    }

    /// `(1, 1, ..., 1)` with `n` entries.
    pub fn ones(n: usize) -> Self {
        BlockProfile { r: vec![1; n] }
    }

    /// `(1^l, 0^(n-l))`.
    pub fn staircase(l: usize, n: usize) -> Result<Self> {
        if l > n {
            return Err(Error::InvalidProfile(format!("l = {l} exceeds n = {n}")));
        }
        let mut r = vec![1; l];
        r.resize(n, 0);
        BlockProfile::new(r)
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// `r_k`, 1-based.
    pub fn r_k(&self, k: usize) -> u32 {
        self.r[k - 1]
    }

    /// `S_k` for `0 <= k <= n`.
    pub fn s(&self, k: usize) -> u32 {
        self.r[..k].iter().sum()
    }

    pub fn total(&self) -> u32 {
        self.s(self.n())
    }

    /// All profiles with `n` blocks summing to `total`, in lex order.
    pub fn compositions(total: u32, n: usize) -> Vec<BlockProfile> {
        fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<BlockProfile>) {
            if slots == 1 {
                cur.push(left);
                out.push(BlockProfile { r: cur.clone() });
                cur.pop();
                return;
            }
            for v in 0..=left {
                cur.push(v);
                rec(left - v, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(total, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for BlockProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.r.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for BlockProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        BlockProfile::new(parse_list(inner)?)
    }
}

/// A set of boundary labels, kept strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DentSet(Vec<u32>);

impl DentSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Sorts and validates: labels must be positive and distinct.
    pub fn new(mut labels: Vec<u32>) -> Result<Self> {
        labels.sort_unstable();
        if labels.first() == Some(&0) {
            return Err(Error::InvalidDentSet("labels are 1-based".into()));
        }
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDentSet(format!("repeated label in {labels:?}")));
        }
        Ok(DentSet(labels))
    }

    pub(crate) fn from_sorted(labels: Vec<u32>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        DentSet(labels)
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }
}

impl fmt::Display for DentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

impl FromStr for DentSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        DentSet::new(parse_list(inner)?)
    }
}

/// `λ(P) = (p_len - len, ..., p_2 - 2, p_1 - 1)`; the same map gives `μ(P′)`.
pub fn lambda_of_dents(p: &DentSet, expected_len: usize) -> Result<Partition> {
    let labels = p.labels();
    if labels.len() != expected_len {
        return Err(Error::InvalidDentSet(format!(
            "{p} has {} labels, expected {expected_len}",
            labels.len()
        )));
    }
    let mut parts = Vec::with_capacity(labels.len());
    for (i, &label) in labels.iter().enumerate().rev() {
        let idx = i as u32 + 1;
        if label < idx {
            return Err(Error::InvalidDentSet(format!("label {label} at position {idx} in {p}")));
        }
        parts.push(label - idx);
    }
    Ok(Partition::from_sorted(parts))
}

/// `(λ(P_min), λ(P_max)) = ((n-1)^{r_n} ... 0^{r_1}, n^{r_n} ... 1^{r_1})`.
pub fn lambda_min_max(profile: &BlockProfile) -> (Partition, Partition) {
    let n = profile.n();
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for k in (1..=n).rev() {
        for _ in 0..profile.r_k(k) {
            lo.push(k as u32 - 1);
            hi.push(k as u32);
        }
    }
    (Partition::from_sorted(lo), Partition::from_sorted(hi))
}

/// Every `λ⁺ ⊇ base` with `λ⁺/base` a vertical strip of `size` boxes and at most
/// `max_rows` rows, in descending lex order.
pub fn vertical_strip_successors(base: &Partition, size: u32, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if base.len() > max_rows {
        return out;
    }
    let mut cur: Vec<u32> = (0..max_rows).map(|i| base.part(i)).collect();
    fn rec(i: usize, left: u32, base: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if i == cur.len() || (cur.len() - i) < left as usize {
            return;
        }
        let fits = i == 0 || cur[i - 1] > base.part(i);
        if fits {
            cur[i] += 1;
            rec(i + 1, left - 1, base, cur, out);
            cur[i] -= 1;
        }
        rec(i + 1, left, base, cur, out);
    }
    rec(0, size, base, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Every `μ⁻ ⊆ mu` with `mu/μ⁻` a horizontal strip of `size` boxes, in descending lex order.
pub fn horizontal_strip_predecessors(mu: &Partition, size: u32) -> Vec<Partition> {
    let rows = mu.len();
    let mut out = Vec::new();
    let mut cur = mu.parts().to_vec();
    fn rec(i: usize, left: u32, mu: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        // row i may shrink down to μ_{i+1}
        let room = mu.part(i) - mu.part(i + 1);
        for take in 0..=room.min(left) {
            cur[i] = mu.part(i) - take;
            rec(i + 1, left - take, mu, cur, out);
        }
        cur[i] = mu.part(i);
    }
    if rows > 0 || size == 0 {
        rec(0, size, mu, &mut cur, &mut out);
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn containment() {
        assert!(contains(&p("1"), &p("2,1")));
        assert!(contains(&Partition::empty(), &p("3,1")));
        assert!(!contains(&p("2"), &p("1,1")));
        assert!(SkewShape::new(p("1,1"), p("2")).is_err());
    }

    #[test]
    fn strips() {
        let sk = |o: &str, i: &str| strip_check(&SkewShape::new(p(o), p(i)).unwrap());
        assert_eq!(sk("2,1", "1"), StripKind::Both(2));
        assert_eq!(sk("1,1", ""), StripKind::Vertical(2));
        assert_eq!(sk("2,2", ""), StripKind::Neither);
        assert_eq!(sk("3", ""), StripKind::Horizontal(3));
    }

    #[test]
    fn dents_to_partitions() {
        let d: DentSet = "{1,3,5,7,8,10,12,13}".parse().unwrap();
        assert_eq!(lambda_of_dents(&d, 8).unwrap(), p("5,5,4,3,3,2,1"));
        let d: DentSet = "1,2,5,6,8,10,11,12".parse().unwrap();
        assert_eq!(lambda_of_dents(&d, 8).unwrap(), p("4,4,4,3,2,2"));
        let d = DentSet::new(vec![1, 2, 3]).unwrap();
        assert!(lambda_of_dents(&d, 3).unwrap().is_empty());
        assert!(lambda_of_dents(&d, 2).is_err());
        assert!(DentSet::new(vec![2, 2]).is_err());
    }

    #[test]
    fn min_max_partitions() {
        let r: BlockProfile = "1,1,1".parse().unwrap();
        assert_eq!(lambda_min_max(&r), (p("2,1"), p("3,2,1")));
        let r = BlockProfile::new(vec![4]).unwrap();
        assert_eq!(lambda_min_max(&r), (Partition::empty(), p("1,1,1,1")));
        let r: BlockProfile = "2,0,2,1,3".parse().unwrap();
        assert_eq!(lambda_min_max(&r), (p("4,4,4,3,2,2"), p("5,5,5,4,3,3,1,1")));
    }

    #[test]
    fn strip_successors() {
        assert_eq!(vertical_strip_successors(&p("1"), 1, 2), vec![p("2"), p("1,1")]);
        assert_eq!(vertical_strip_successors(&Partition::empty(), 0, 3), vec![Partition::empty()]);
        assert_eq!(vertical_strip_successors(&p("1,1"), 2, 2), vec![p("2,2")]);
        assert_eq!(horizontal_strip_predecessors(&p("2,1"), 1), vec![p("2"), p("1,1")]);
        assert_eq!(horizontal_strip_predecessors(&p("1"), 1), vec![Partition::empty()]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p("4,4,4,3,2,2").to_string(), "(4,4,4,3,2,2)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(DentSet::new(vec![5, 1, 2]).unwrap().to_string(), "{1,2,5}");
        assert_eq!(p("(3,1,0)"), p("3,1"));
        assert!("1,2".parse::<Partition>().is_err());
    }
}
