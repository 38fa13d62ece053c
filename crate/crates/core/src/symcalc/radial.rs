use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use super::numeric::NumericRadial;
use super::poly::{CliffordPolynomial, VariableKind};
use crate::algebra::{Multivector, RMv, Rational};
use crate::error::{Error, Result};

/// `Σ P_i(x) ‖x‖^{−m_i} (log‖x‖)^{s_i}` with polynomial `P_i` in vector
/// variables. Negative `m` encodes positive powers of `‖x‖`.
///
/// Stored in a canonical form: one polynomial per `(m mod 2, s)` class, with
/// the smallest `m` reachable by exact division by `‖x‖²`. Two expressions
/// are equal as functions iff their canonical forms agree.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialExpr {
    shape: CliffordPolynomial,
    terms: BTreeMap<(i32, u32), CliffordPolynomial>,
}

impl RadialExpr {
    pub fn zero(dim: usize) -> Self {
        RadialExpr {
            shape: CliffordPolynomial::zero(dim, VariableKind::Vector),
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_like(&self) -> Self {
        RadialExpr {
            shape: self.shape.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `p · ‖x‖^{−m} · (log‖x‖)^s`.
    pub fn term(p: CliffordPolynomial, m: i32, s: u32) -> Result<Self> {
        if p.kind() != VariableKind::Vector {
            return Err(Error::Unsupported("a polynomial in vector variables".into()));
        }
        let mut r = RadialExpr {
            shape: p.zero_like(),
            terms: BTreeMap::new(),
        };
        r.insert_raw(p, m, s);
        r.canonicalize();
        Ok(r)
    }

    pub fn from_poly(p: CliffordPolynomial) -> Result<Self> {
        Self::term(p, 0, 0)
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    /// Terms as `(P, m, s)`.
    pub fn terms(&self) -> impl Iterator<Item = (&CliffordPolynomial, i32, u32)> {
        self.terms.iter().map(|((m, s), p)| (p, *m, *s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_raw(&mut self, p: CliffordPolynomial, m: i32, s: u32) {
        if p.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry((m, s))
            .or_insert_with(|| p.zero_like());
        *slot = &*slot + &p;
    }

    fn canonicalize(&mut self) {
        let mut classes: BTreeMap<(i32, u32), Vec<(i32, CliffordPolynomial)>> = BTreeMap::new();
        for ((m, s), p) in std::mem::take(&mut self.terms) {
            classes.entry((m.rem_euclid(2), s)).or_default().push((m, p));
        }
        for ((_, s), group) in classes {
            let top = group.iter().map(|g| g.0).max().expect("nonempty class");
            let r2 = self.shape.r_squared_like();
            let mut sum = self.shape.zero_like();
            for (m, p) in group {
                sum = &sum + &(&p * &r2.pow(((top - m) / 2) as u32));
            }
            let mut m = top;
            while !sum.is_zero() {
                match sum.div_r_squared() {
                    Some(q) => {
                        sum = q;
                        m -= 2;
                    }
                    None => break,
                }
            }
            if !sum.is_zero() {
                self.terms.insert((m, s), sum);
            }
        }
    }

    fn map_polys(&self, f: impl Fn(&CliffordPolynomial) -> CliffordPolynomial) -> Self {
        let mut out = self.zero_like();
        for ((m, s), p) in &self.terms {
            out.insert_raw(f(p), *m, *s);
        }
        out.canonicalize();
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_polys(|p| p.scale(c))
    }

    pub fn left_mul_mv(&self, a: &RMv) -> Self {
        self.map_polys(|p| p.left_mul_mv(a))
    }

    pub fn right_mul_mv(&self, a: &RMv) -> Self {
        self.map_polys(|p| p.right_mul_mv(a))
    }

    /// `q · self`.
    pub fn left_mul_poly(&self, q: &CliffordPolynomial) -> Self {
        self.map_polys(|p| q * p)
    }

    /// `self · q`.
    pub fn right_mul_poly(&self, q: &CliffordPolynomial) -> Self {
        self.map_polys(|p| p * q)
    }

    pub fn conjugation(&self) -> Self {
        self.map_polys(|p| p.conjugation())
    }

    pub fn reversion(&self) -> Self {
        self.map_polys(|p| p.reversion())
    }

    /// `∂/∂x_j`, with `j` a 0-based spatial slot. Uses
    /// `∂_j ‖x‖^{−m} = −m x_j ‖x‖^{−m−2}` and `∂_j log‖x‖ = x_j ‖x‖^{−2}`.
    pub fn partial(&self, j: usize) -> Self {
        let xj = CliffordPolynomial::from_terms(
            self.dim(),
            VariableKind::Vector,
            self.shape.nparams(),
            [(unit_exp(self.shape.total_vars(), j), RMv::one(self.dim()))],
        )
        .expect("well-formed monomial");
        let mut out = self.zero_like();
        for ((m, s), p) in &self.terms {
            out.insert_raw(p.partial(j), *m, *s);
            if *m != 0 {
                out.insert_raw((&xj * p).scale(&Rational::from_integer((-*m).into())), m + 2, *s);
            }
            if *s > 0 {
                out.insert_raw((&xj * p).scale(&Rational::from_integer((*s).into())), m + 2, s - 1);
            }
        }
        out.canonicalize();
        out
    }

    /// `D f = Σ e_j ∂_j f`.
    pub fn dirac_left(&self) -> Self {
        let mut out = self.zero_like();
        for j in 0..self.dim() {
            out = &out + &self.partial(j).left_mul_mv(&RMv::basis(self.dim(), j + 1));
        }
        out
    }

    /// `f D = Σ ∂_j f e_j`.
    pub fn dirac_right(&self) -> Self {
        let mut out = self.zero_like();
        for j in 0..self.dim() {
            out = &out + &self.partial(j).right_mul_mv(&RMv::basis(self.dim(), j + 1));
        }
        out
    }

    pub fn dirac_power(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |acc, _| acc.dirac_left())
    }

    pub fn laplacian(&self) -> Self {
        let mut out = self.zero_like();
        for j in 0..self.dim() {
            out = &out + &self.partial(j).partial(j);
        }
        out
    }

    /// Partial derivative with multiplicity `orders[j]` in slot `j`.
    pub fn partial_multi(&self, orders: &[u32]) -> Self {
        let mut out = self.clone();
        for (j, &k) in orders.iter().enumerate() {
            for _ in 0..k {
                out = out.partial(j);
            }
        }
        out
    }

    pub fn compile(&self) -> NumericRadial {
        NumericRadial::new(self)
    }

    pub fn evaluate_f64(&self, x: &[f64]) -> Result<Multivector<f64>> {
        let r2: f64 = x.iter().take(self.dim()).map(|v| v * v).sum();
        if r2 == 0.0 && self.terms.keys().any(|(m, s)| *m > 0 || *s > 0) {
            return Err(Error::Singular("the origin".into()));
        }
        Ok(self.compile().eval(x))
    }

    /// Exact value at a rational point. Fails when the value is irrational,
    /// i.e. a logarithm is present or an odd power of `‖x‖` meets an
    /// irrational norm.
    pub fn evaluate(&self, x: &[Rational]) -> Result<RMv> {
        let r2: Rational = x.iter().take(self.dim()).map(|v| v * v).sum();
        if r2.is_zero() && self.terms.keys().any(|(m, s)| *m > 0 || *s > 0) {
            return Err(Error::Singular("the origin".into()));
        }
        let mut out = RMv::zero(self.dim());
        for ((m, s), p) in &self.terms {
            if *s > 0 && !r2.is_zero() {
                let log_zero = r2 == Rational::from_integer(1.into());
                if !log_zero {
                    return Err(Error::Unsupported("a point where the value is rational".into()));
                }
                continue;
            }
            let factor = if m % 2 == 0 {
                rational_pow(&r2, -m / 2)
            } else {
                let r = rational_sqrt(&r2).ok_or_else(|| {
                    Error::Unsupported("a point with rational norm".into())
                })?;
                rational_pow(&r, -m)
            };
            out += &p.evaluate(x).scale(&factor);
        }
        Ok(out)
    }
}

fn unit_exp(n: usize, j: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[j] = 1;
    e
}

fn rational_pow(base: &Rational, e: i32) -> Rational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

impl Add for &RadialExpr {
    type Output = RadialExpr;
    fn add(self, rhs: Self) -> RadialExpr {
        let mut out = self.clone();
        for ((m, s), p) in &rhs.terms {
            out.insert_raw(p.clone(), *m, *s);
        }
        out.canonicalize();
        out
    }
}

impl Sub for &RadialExpr {
    type Output = RadialExpr;
    fn sub(self, rhs: Self) -> RadialExpr {
        self + &(-rhs)
    }
}

impl Neg for &RadialExpr {
    type Output = RadialExpr;
    fn neg(self) -> RadialExpr {
        self.map_polys(|p| -p)
    }
}

impl fmt::Display for RadialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((m, s), p)| {
                let mut t = format!("[{}]", p.to_text());
                if *m != 0 {
                    t.push_str(&format!(" * r^{}", -m));
                }
                if *s == 1 {
                    t.push_str(" * log(r)");
                } else if *s > 1 {
                    t.push_str(&format!(" * log(r)^{s}"));
                }
                t
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
