//! Fueter (Delanghe) polynomials `P_{j₂…j_n}`.
//!
//! With `z_k = x_k − x₁ e₁^{-1} e_k = x_k + x₁ e₁ e_k`,
//! `P_j = (1/|j|!) Σ_σ z_{σ(1)} ⋯ z_{σ(|j|)}` summed over all orderings of the
//! multiset containing `k` exactly `j_k` times. Equal words are grouped:
//! `P_j = (∏ j_k! / |j|!) W_j` with `W_j` the sum over distinct words, built
//! by recursion on the first letter.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::One;

use crate::algebra::{RMv, Rational};
use crate::error::{Error, Result};
use crate::symcalc::{CliffordPolynomial, VariableKind};

/// Exponents `(j₂, …, j_n)` of a Fueter polynomial in `R^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n.saturating_sub(1)])
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.0.len() + 1
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn factorial(&self) -> Rational {
        self.0.iter().map(|j| factorial(*j)).product()
    }

    /// All indices of total degree `j` in `R^n`, in graded-lex order. There
    /// are `C(j + n − 2, n − 2)` of them.
    pub fn all_of_degree(n: usize, j: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n - 1];
        fill(&mut cur, 0, j, &mut out);
        out
    }

    /// All indices with degree ≤ `order`.
    pub fn up_to(n: usize, order: u32) -> Vec<MultiIndex> {
        (0..=order).flat_map(|j| Self::all_of_degree(n, j)).collect()
    }
}

fn fill(cur: &mut Vec<u32>, slot: usize, left: u32, out: &mut Vec<MultiIndex>) {
    if slot + 1 == cur.len() {
        cur[slot] = left;
        out.push(MultiIndex(cur.clone()));
        return;
    }
    if cur.is_empty() {
        if left == 0 {
            out.push(MultiIndex(vec![]));
        }
        return;
    }
    for v in (0..=left).rev() {
        cur[slot] = v;
        fill(cur, slot + 1, left - v, out);
    }
    cur[slot] = 0;
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn factorial(k: u32) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, v| acc * Rational::from_integer(v.into()))
}

/// `z_k = x_k + x₁ e₁ e_k` for `k ≥ 2`.
pub fn fueter_variable(n: usize, k: usize) -> CliffordPolynomial {
    let e1ek = &RMv::basis(n, 1) * &RMv::basis(n, k);
    let xk = CliffordPolynomial::var(n, VariableKind::Vector, k);
    let x1 = CliffordPolynomial::var(n, VariableKind::Vector, 1);
    &xk + &x1.right_mul_mv(&e1ek)
}

pub fn fueter_polynomial(idx: &MultiIndex) -> Result<CliffordPolynomial> {
    let n = idx.dim();
    if n < 2 {
        return Err(Error::InvalidParameter("Fueter polynomials need n ≥ 2".into()));
    }
    crate::algebra::multivector::check_dim(n)?;
    let z: Vec<CliffordPolynomial> = (2..=n).map(|k| fueter_variable(n, k)).collect();
    let mut memo = HashMap::new();
    let words = distinct_words(&idx.0, &z, &mut memo);
    let scale = idx.factorial() / factorial(idx.degree());
    Ok(words.scale(&scale))
}

fn distinct_words(
    j: &[u32],
    z: &[CliffordPolynomial],
    memo: &mut HashMap<Vec<u32>, CliffordPolynomial>,
) -> CliffordPolynomial {
    if let Some(p) = memo.get(j) {
        return p.clone();
    }
    let n = z[0].dim();
    let mut acc = CliffordPolynomial::zero(n, VariableKind::Vector);
    if j.iter().all(|v| *v == 0) {
        acc = CliffordPolynomial::one(n, VariableKind::Vector);
    } else {
        for k in 0..j.len() {
            if j[k] == 0 {
                continue;
            }
            let mut rest = j.to_vec();
            rest[k] -= 1;
            let tail = distinct_words(&rest, z, memo);
            acc = &acc + &(&z[k] * &tail);
        }
    }
    memo.insert(j.to_vec(), acc.clone());
    acc
}
