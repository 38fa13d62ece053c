//! Cauchy–Kowalewska extension off the hyperplane `x₁ = 0`.
//!
//! `CK[f'] = Σ_k (x₁^k / k!) (e₁ D')^k f'` with `D' = Σ_{j≥2} e_j ∂_j`. The
//! generator `e₁D' = −e₁^{-1}D'` is the sign for which `D CK[f'] = 0` holds
//! with `D = Σ e_j ∂_j`; the series stops once `(e₁D')^k f'` vanishes.

use crate::algebra::RMv;
use crate::error::{Error, Result};
use crate::symcalc::{CliffordPolynomial, VariableKind};

use super::fueter::factorial;

/// `D' f = Σ_{j=2}^n e_j ∂_j f`.
pub fn tangential_dirac(f: &CliffordPolynomial) -> CliffordPolynomial {
    let n = f.dim();
    let mut out = f.zero_like();
    for j in 1..n {
        out = &out + &f.partial(j).left_mul_mv(&RMv::basis(n, j + 1));
    }
    out
}

/// Monogenic extension of `f'(x₂, …, x_n)`, given as a polynomial in vector
/// variables that does not involve `x₁`.
pub fn ck_extension(f_prime: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    if f_prime.kind() != VariableKind::Vector {
        return Err(Error::Unsupported("CK extension needs vector variables".into()));
    }
    if !f_prime.independent_of(0) {
        return Err(Error::Precondition("boundary data must not depend on x1".into()));
    }
    let n = f_prime.dim();
    let e1 = RMv::basis(n, 1);
    let mut exps = vec![0u32; f_prime.total_vars()];
    exps[0] = 1;
    let x1 = CliffordPolynomial::from_terms(n, VariableKind::Vector, f_prime.nparams(), vec![(exps, RMv::one(n))])?;
    let mut out = f_prime.clone();
    let mut term = f_prime.clone();
    let mut x1_power = f_prime.constant_like(RMv::one(n));
    let mut k = 0u32;
    loop {
        term = tangential_dirac(&term).left_mul_mv(&e1);
        if term.is_zero() {
            return Ok(out);
        }
        k += 1;
        x1_power = &x1_power * &x1;
        let coeff = factorial(k).recip();
        out = &out + &(&x1_power * &term).scale(&coeff);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{fueter_polynomial, MultiIndex};
    use rand::{Rng, SeedableRng};

    const V: VariableKind = VariableKind::Vector;

    #[test]
    fn examples() {
        let one = CliffordPolynomial::one(3, V);
        assert_eq!(ck_extension(&one).unwrap(), one);
        let x2 = CliffordPolynomial::var(3, V, 2);
        let ext = ck_extension(&x2).unwrap();
        assert_eq!(ext, fueter_polynomial(&MultiIndex(vec![1, 0])).unwrap());
        let sq = ck_extension(&(&x2 * &x2)).unwrap();
        let expected = CliffordPolynomial::parse(3, V, 0, "(-1*1) * x1^2 + (2*e12) * x1 x2 + (1*1) * x2^2").unwrap();
        assert_eq!(sq, expected);
        assert!(sq.dirac_left().unwrap().is_zero());
    }

    #[test]
    fn random_data_extends_monogenically() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for n in 3..=5usize {
            for _ in 0..6 {
                let mut terms = Vec::new();
                for _ in 0..5 {
                    let mut e = vec![0u32; n];
                    for slot in e.iter_mut().skip(1) {
                        *slot = rng.gen_range(0..3);
                    }
                    if e.iter().sum::<u32>() > 4 {
                        continue;
                    }
                    let blade = rng.gen_range(0..1u32 << n);
                    let c = RMv::from_terms(n, vec![(blade, crate::algebra::rational(rng.gen_range(-5..6), rng.gen_range(1..4)))]);
                    terms.push((e, c));
                }
                let f = CliffordPolynomial::from_terms(n, V, 0, terms).unwrap();
                let ext = ck_extension(&f).unwrap();
                assert!(ext.dirac_left().unwrap().is_zero());
                assert_eq!(ext.restrict_zero(0), f);
                assert_eq!(ext.degree(), f.degree());
            }
        }
    }

    #[test]
    fn rejects_x1_dependence() {
        let x1 = CliffordPolynomial::var(3, V, 1);
        assert!(ck_extension(&x1).is_err());
    }
}
