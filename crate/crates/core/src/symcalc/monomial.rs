use std::cmp::Ordering;

/// Exponent vector of a monomial. Ordered graded-lexicographically: lower
/// total degree first, then larger exponents on earlier variables first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree counted over the first `k` variables only.
    pub fn partial_degree(&self, k: usize) -> u32 {
        self.0[..k].iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `∂/∂x_i`: the multiplicity and the lowered monomial, or `None` if the
    /// variable is absent.
    pub fn derive(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.0[i];
        (e > 0).then(|| {
            let mut lowered = self.0.clone();
            lowered[i] -= 1;
            (e, Monomial(lowered))
        })
    }

    pub fn with(&self, i: usize, exp: u32) -> Monomial {
        let mut e = self.0.clone();
        e[i] = exp;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
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
    fn graded_lex_order() {
        let mut v = vec![
            Monomial(vec![0, 2]),
            Monomial(vec![1, 0]),
            Monomial(vec![0, 0]),
            Monomial(vec![2, 0]),
            Monomial(vec![1, 1]),
            Monomial(vec![0, 1]),
        ];
        v.sort();
        let e: Vec<_> = v.into_iter().map(|m| m.0).collect();
        assert_eq!(e, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn derivative() {
        assert_eq!(Monomial(vec![3, 1]).derive(0), Some((3, Monomial(vec![2, 1]))));
        assert_eq!(Monomial(vec![0, 1]).derive(0), None);
    }
}
