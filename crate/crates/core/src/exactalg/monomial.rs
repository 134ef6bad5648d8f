use std::cmp::Ordering;

/// A monomial `q^a t^b x_1^{e_1} x_2^{e_2} ...`.
///
/// The x-exponents are stored densely by index (`x[0]` is the exponent of
/// `x_1`) with trailing zeros trimmed, so equal monomials have equal
/// representations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    q: u32,
    t: u32,
    x: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(q: u32, t: u32, x: Vec<u32>) -> Self {
        let mut m = Monomial { q, t, x };
        m.trim();
        m
    }

    pub fn q_pow(e: u32) -> Self {
        Monomial { q: e, ..Self::default() }
    }

    pub fn t_pow(e: u32) -> Self {
        Monomial { t: e, ..Self::default() }
    }

    pub fn qt(q: u32, t: u32) -> Self {
        Monomial { q, t, x: Vec::new() }
    }

    /// `x_index^exp`, with `index` 1-based.
    pub fn x_pow(index: usize, exp: u32) -> Self {
        assert!(index >= 1, "x-variables are 1-based");
        let mut x = vec![0; index];
        x[index - 1] = exp;
        Self::new(0, 0, x)
    }

    /// Builds a monomial from a content vector `(c_1, ..., c_m)` meaning
    /// `x_1^{c_1} ... x_m^{c_m}`.
    pub fn from_content(content: &[u32]) -> Self {
        Self::new(0, 0, content.to_vec())
    }

    fn trim(&mut self) {
        while self.x.last() == Some(&0) {
            self.x.pop();
        }
    }

    pub fn q_exp(&self) -> u32 {
        self.q
    }

    pub fn t_exp(&self) -> u32 {
        self.t
    }

    /// Exponent of `x_index` (1-based); zero when absent.
    pub fn x_exp(&self, index: usize) -> u32 {
        if index == 0 {
            return 0;
        }
        self.x.get(index - 1).copied().unwrap_or(0)
    }

    /// Dense x-exponents, trailing zeros trimmed.
    pub fn x_exps(&self) -> &[u32] {
        &self.x
    }

    /// Highest x-index with a nonzero exponent, or 0.
    pub fn x_len(&self) -> usize {
        self.x.len()
    }

    pub fn is_one(&self) -> bool {
        self.q == 0 && self.t == 0 && self.x.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.q as u64 + self.t as u64 + self.x.iter().map(|&e| e as u64).sum::<u64>()
    }

    pub fn x_degree(&self) -> u64 {
        self.x.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.x.len().max(other.x.len());
        let mut x = vec![0u32; len];
        for (i, e) in x.iter_mut().enumerate() {
            *e = self.x.get(i).copied().unwrap_or(0) + other.x.get(i).copied().unwrap_or(0);
        }
        // sum of two trimmed vectors is trimmed
        Monomial { q: self.q + other.q, t: self.t + other.t, x }
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.q > self.q || other.t > self.t || other.x.len() > self.x.len() {
            return None;
        }
        let mut x = self.x.clone();
        for (i, &e) in other.x.iter().enumerate() {
            if e > x[i] {
                return None;
            }
            x[i] -= e;
        }
        Some(Monomial::new(self.q - other.q, self.t - other.t, x))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            q: self.q * k,
            t: self.t * k,
            x: self.x.iter().map(|&e| e * k).collect(),
        }
    }

    /// Applies `x_k -> q^{k-1} t` to every x-factor.
    pub fn substitute_qt(&self) -> Monomial {
        let mut q = self.q;
        let mut t = self.t;
        for (i, &e) in self.x.iter().enumerate() {
            q += i as u32 * e;
            t += e;
        }
        Monomial::qt(q, t)
    }

    pub fn with_q(&self, q: u32) -> Monomial {
        Monomial { q, ..self.clone() }
    }

    pub fn with_t(&self, t: u32) -> Monomial {
        Monomial { t, ..self.clone() }
    }

    /// Exchanges the exponents of `x_i` and `x_j` (1-based).
    pub fn swap_x(&self, i: usize, j: usize) -> Monomial {
        let len = self.x.len().max(i).max(j);
        let mut x = self.x.clone();
        x.resize(len, 0);
        x.swap(i - 1, j - 1);
        Monomial::new(self.q, self.t, x)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order on `(total degree, q, t, x_1, x_2, ...)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.q.cmp(&other.q))
            .then(self.t.cmp(&other.t))
            .then_with(|| {
                let len = self.x.len().max(other.x.len());
                for i in 0..len {
                    let a = self.x.get(i).copied().unwrap_or(0);
                    let b = other.x.get(i).copied().unwrap_or(0);
                    match a.cmp(&b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zero_exponents_are_trimmed() {
        assert_eq!(Monomial::new(0, 0, vec![1, 0, 0]), Monomial::x_pow(1, 1));
        assert!(Monomial::new(0, 0, vec![0, 0]).is_one());
    }

    #[test]
    fn graded_lex_order() {
        let qt2 = Monomial::qt(1, 2);
        let qt = Monomial::qt(1, 1);
        let t2 = Monomial::qt(0, 2);
        let t = Monomial::qt(0, 1);
        assert!(qt2 > qt);
        assert!(qt > t2);
        assert!(t2 > t);
        assert!(t > Monomial::one());
        assert!(Monomial::x_pow(1, 1) > Monomial::x_pow(2, 1));
        assert!(Monomial::t_pow(1) > Monomial::x_pow(1, 1));
    }

    #[test]
    fn division_and_substitution() {
        let a = Monomial::new(2, 1, vec![1, 3]);
        let b = Monomial::new(1, 1, vec![0, 2]);
        assert_eq!(a.checked_div(&b), Some(Monomial::new(1, 0, vec![1, 1])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(Monomial::x_pow(3, 1).substitute_qt(), Monomial::qt(2, 1));
    }
}
