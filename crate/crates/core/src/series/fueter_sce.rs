//! The Fueter–Sce construction for even `n`.
//!
//! A holomorphic `f = u + iv` with `f(z̄) = \overline{f(z)}` gives
//! `F(x) = u(x₁, ‖x'‖) + e₁^{-1} (x'/‖x'‖) v(x₁, ‖x'‖)`, `x' = Σ_{j≥2} x_j e_j`,
//! which satisfies `D^{n−1} F = 0`. The symmetry makes `u` even and `v` odd
//! in the second variable, so `F` is a polynomial in `x₁` and `‖x'‖²` whenever
//! `f` is, and the equation can be checked exactly.
//!
//! `F` is `f` evaluated at `e₁^{-1}x = x₁ − e₁x'`, whose square root of `−1`
//! is `e₁^{-1}x'/‖x'‖`. The power family behind the theorem is therefore
//! `(e₁^{-1}x)^k e₁`; literal vector powers `x^k e₁` are not `(n−1)`-monogenic
//! for `k ≥ 3`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{ComplexRational, FMv, RMv, Rational};
use crate::error::{Error, Result};
use crate::symcalc::{CliffordPolynomial, VariableKind};

/// Real polynomial in `(s, t)`, stored as `(i, j) ↦ coefficient of s^i t^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePoly(pub BTreeMap<(u32, u32), Rational>);

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    fn add(&mut self, key: (u32, u32), c: Rational) {
        let e = self.0.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn partial_s(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.0 {
            if i > 0 {
                out.add((i - 1, j), c * Rational::from_integer(i.into()));
            }
        }
        out
    }

    pub fn partial_t(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.0 {
            if j > 0 {
                out.add((i, j - 1), c * Rational::from_integer(j.into()));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        BivariatePoly(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }

    pub fn eval(&self, s: f64, t: f64) -> f64 {
        self.0
            .iter()
            .map(|(&(i, j), c)| crate::algebra::rational_to_f64(c) * s.powi(i as i32) * t.powi(j as i32))
            .sum()
    }

    fn parity_in_t(&self, odd: bool) -> bool {
        self.0.keys().all(|(_, j)| (j % 2 == 1) == odd)
    }

    /// `(u, v)` with `u + iv = Σ c_k (s + it)^k`.
    pub fn from_holomorphic(coeffs: &[ComplexRational]) -> (Self, Self) {
        let (mut u, mut v) = (Self::zero(), Self::zero());
        for (k, c) in coeffs.iter().enumerate() {
            let k = k as u32;
            // (s + it)^k = Σ_m C(k,m) s^{k−m} (it)^m
            let mut binom = Rational::one();
            for m in 0..=k {
                let unit = match m % 4 {
                    0 => ComplexRational::new(Rational::one(), Rational::zero()),
                    1 => ComplexRational::new(Rational::zero(), Rational::one()),
                    2 => ComplexRational::new(-Rational::one(), Rational::zero()),
                    _ => ComplexRational::new(Rational::zero(), -Rational::one()),
                };
                let term = c * unit * ComplexRational::new(binom.clone(), Rational::zero());
                u.add((k - m, m), term.re.clone());
                v.add((k - m, m), term.im.clone());
                binom = binom * Rational::from_integer((k - m).into()) / Rational::from_integer((m + 1).into());
            }
        }
        (u, v)
    }
}

/// The Fueter–Sce lift of `u + iv` to `R^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct FueterSce {
    n: usize,
    u: BivariatePoly,
    v: BivariatePoly,
}

pub fn fueter_sce(u: &BivariatePoly, v: &BivariatePoly, n: usize) -> Result<FueterSce> {
    FueterSce::new(u, v, n)
}

impl FueterSce {
    pub fn new(u: &BivariatePoly, v: &BivariatePoly, n: usize) -> Result<Self> {
        if n % 2 == 1 || n < 2 {
            return Err(Error::Unsupported(format!("the construction needs even n ≥ 2, got {n}")));
        }
        crate::algebra::multivector::check_dim(n)?;
        if u.partial_s() != v.partial_t() || u.partial_t() != v.partial_s().neg() {
            return Err(Error::Precondition("u + iv violates the Cauchy–Riemann equations".into()));
        }
        if !u.parity_in_t(false) || !v.parity_in_t(true) {
            return Err(Error::Precondition("f(z̄) = conj f(z) fails: u must be even and v odd in t".into()));
        }
        Ok(FueterSce {
            n,
            u: u.clone(),
            v: v.clone(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `F(x)`; at `x' = 0` the oddness of `v` removes the singular factor.
    pub fn eval(&self, x: &[f64]) -> Result<FMv> {
        let n = self.n;
        if x.len() != n {
            return Err(Error::InvalidParameter(format!("point must have {n} coordinates")));
        }
        let t = x[1..].iter().map(|a| a * a).sum::<f64>().sqrt();
        let mut out = FMv::scalar(n, self.u.eval(x[0], t));
        if t > 0.0 {
            let mut xp = x.to_vec();
            xp[0] = 0.0;
            let unit = FMv::vector(n, &xp).scale(&(1.0 / t));
            // e₁^{-1} = −e₁
            let dir = -&(&FMv::basis(n, 1) * &unit);
            out += &dir.scale(&self.v.eval(x[0], t));
        }
        Ok(out)
    }

    /// `F` as an exact polynomial: `U(x₁, ‖x'‖²) − e₁ x' V(x₁, ‖x'‖²)` with
    /// `u = U(s, t²)` and `v = t V(s, t²)`.
    pub fn polynomial(&self) -> CliffordPolynomial {
        let n = self.n;
        let x1 = CliffordPolynomial::var(n, VariableKind::Vector, 1);
        let mut rho = CliffordPolynomial::zero(n, VariableKind::Vector);
        let mut xp = CliffordPolynomial::zero(n, VariableKind::Vector);
        for j in 1..n {
            let xj = CliffordPolynomial::var(n, VariableKind::Vector, j + 1);
            rho = &rho + &(&xj * &xj);
            xp = &xp + &xj.right_mul_mv(&RMv::basis(n, j + 1));
        }
        let lift = |p: &BivariatePoly, shift: u32| {
            let mut acc = CliffordPolynomial::zero(n, VariableKind::Vector);
            for (&(i, j), c) in &p.0 {
                let term = (&x1.pow(i) * &rho.pow((j - shift) / 2)).scale(c);
                acc = &acc + &term;
            }
            acc
        };
        let big_u = lift(&self.u, 0);
        let big_v = lift(&self.v, 1);
        let e1 = RMv::basis(n, 1);
        &big_u - &(&xp.left_mul_mv(&e1) * &big_v)
    }
}

/// `(e₁^{-1} x)^k e₁` in `R^n`, exact.
pub fn fueter_sce_power(n: usize, k: u32) -> CliffordPolynomial {
    let e1 = RMv::basis(n, 1);
    let base = CliffordPolynomial::x_vector(n).left_mul_mv(&-&e1);
    base.pow(k).right_mul_mv(&e1)
}
