//! Exponent vectors with the graded reverse lexicographic order.

use std::cmp::Ordering;

/// Exponent vector of one monomial; entry `i` is the power of variable `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        assert!(index < num_vars, "variable index out of range");
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Componentwise divisibility: does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    /// Replace the exponent of one variable.
    pub fn with_exponent(&self, var: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[var] = e;
        Monomial(v)
    }
}

/// Graded reverse lexicographic: compare total degree first; on ties the
/// monomial whose rightmost differing exponent is smaller is the larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                // smaller rightmost exponent wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given total degree in grevlex-descending order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fill(&mut out, &mut current, 0, degree);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_degree_two_in_three_vars() {
        // x^2 > xy > y^2 > xz > yz > z^2
        let order = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in order.windows(2) {
            assert!(w[0] > w[1], "{:?} should exceed {:?}", w[0], w[1]);
        }
        assert_eq!(monomials_of_degree(3, 2), order.to_vec());
    }

    #[test]
    fn degree_dominates() {
        assert!(m(&[0, 0, 3]) > m(&[1, 1, 0]));
    }

    #[test]
    fn count_of_degree_d() {
        // C(d+2, 2) monomials of degree d in 3 variables
        assert_eq!(monomials_of_degree(3, 10).len(), 66);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
    }
}
