//! Reference arithmetic for the acceptance harness, written from the
//! definitions and sharing no code with the library beyond data types.
//!
//! Blades are bitmasks with bit `i` standing for `e_{i+1}`, and
//! `e_i² = −1`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cliffan::algebra::{FMv, RMv, Rational};
use cliffan::symcalc::{CliffordPolynomial, RadialExpr, VariableKind};
use num_traits::{One, Signed, Zero};

pub type Q = Rational;

pub fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

/// Sign and blade of `e_A e_B`.
pub fn blade_mul(a: u32, b: u32) -> (i32, u32) {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    swaps += (a & b).count_ones();
    (if swaps % 2 == 0 { 1 } else { -1 }, a ^ b)
}

fn blade_conj_sign(a: u32) -> i32 {
    // Clifford conjugation: (−1)^{k(k+1)/2} on grade k.
    let k = a.count_ones();
    if (k * (k + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn blade_rev_sign(a: u32) -> i32 {
    let k = a.count_ones();
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exact Clifford-valued polynomial in `x_1 … x_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub n: usize,
    pub terms: BTreeMap<(Vec<u32>, u32), Q>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, exps: Vec<u32>, blade: u32, c: Q) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(exps, blade, c);
        p
    }

    pub fn one(n: usize) -> Self {
        Poly::monomial(n, vec![0; n], 0, Q::one())
    }

    /// `x = Σ x_j e_j`.
    pub fn x(n: usize) -> Self {
        let mut p = Poly::zero(n);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            p.add_term(e, 1 << j, Q::one());
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, blade: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        let key = (exps, blade);
        let v = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for ((e, b), c) in &o.terms {
            r.add_term(e.clone(), *b, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Poly {
        let mut r = Poly::zero(self.n);
        for ((e, b), c) in &self.terms {
            r.add_term(e.clone(), *b, c * s);
        }
        r
    }

    /// Full product of two polynomials.
    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero(self.n);
        for ((e1, b1), c1) in &self.terms {
            for ((e2, b2), c2) in &o.terms {
                let (s, b) = blade_mul(*b1, *b2);
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1 * c2;
                r.add_term(e, b, if s > 0 { c } else { -c });
            }
        }
        r
    }

    /// `e_{j+1} · self`.
    pub fn left_e(&self, j: usize) -> Poly {
        Poly::monomial(self.n, vec![0; self.n], 1 << j, Q::one()).mul(self)
    }

    /// `self · e_{j+1}`.
    pub fn right_e(&self, j: usize) -> Poly {
        self.mul(&Poly::monomial(self.n, vec![0; self.n], 1 << j, Q::one()))
    }

    pub fn times_r2(&self) -> Poly {
        let mut r2 = Poly::zero(self.n);
        for j in 0..self.n {
            let mut e = vec![0; self.n];
            e[j] = 2;
            r2.add_term(e, 0, Q::one());
        }
        r2.mul(self)
    }

    pub fn partial(&self, j: usize) -> Poly {
        let mut r = Poly::zero(self.n);
        for ((e, b), c) in &self.terms {
            if e[j] > 0 {
                let mut e2 = e.clone();
                e2[j] -= 1;
                r.add_term(e2, *b, c * Q::from_integer(e[j].into()));
            }
        }
        r
    }

    /// `D = Σ e_j ∂_j` from the left.
    pub fn dirac(&self) -> Poly {
        (0..self.n).fold(Poly::zero(self.n), |acc, j| acc.add(&self.partial(j).left_e(j)))
    }

    pub fn dirac_pow(&self, k: u32) -> Poly {
        (0..k).fold(self.clone(), |p, _| p.dirac())
    }

    /// `Λ = Σ_{i<j} e_i e_j (x_i ∂_j − x_j ∂_i)`.
    pub fn angular(&self) -> Poly {
        let mut r = Poly::zero(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                let xi = Poly::monomial(self.n, unit(self.n, i), 0, Q::one());
                let xj = Poly::monomial(self.n, unit(self.n, j), 0, Q::one());
                let rot = xi.mul(&self.partial(j)).sub(&xj.mul(&self.partial(i)));
                r = r.add(&rot.left_e(j).left_e(i));
            }
        }
        r
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(e, _)| e.iter().sum()).max().unwrap_or(0)
    }

    /// Sets `x_{j+1} = 0`.
    pub fn restrict_zero(&self, j: usize) -> Poly {
        let mut r = Poly::zero(self.n);
        for ((e, b), c) in &self.terms {
            if e[j] == 0 {
                r.add_term(e.clone(), *b, c.clone());
            }
        }
        r
    }

    pub fn eval(&self, x: &[f64]) -> Mv {
        let mut m = Mv::zero();
        for ((e, b), c) in &self.terms {
            let mono: f64 = e.iter().zip(x).map(|(k, v)| v.powi(*k as i32)).product();
            m.add(*b, mono * f(c));
        }
        m
    }

    pub fn from_lib(p: &CliffordPolynomial) -> Poly {
        assert_eq!(p.kind(), VariableKind::Vector);
        assert_eq!(p.nparams(), 0);
        let mut r = Poly::zero(p.dim());
        for (m, c) in p.terms() {
            for (b, v) in c.terms() {
                r.add_term(m.0.clone(), *b, v.clone());
            }
        }
        r
    }

    pub fn to_lib(&self) -> CliffordPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|((e, b), c)| (e.clone(), RMv::from_terms(self.n, [(*b, c.clone())])));
        CliffordPolynomial::from_terms(self.n, VariableKind::Vector, 0, terms.collect::<Vec<_>>()).unwrap()
    }
}

pub fn unit(n: usize, j: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[j] = 1;
    e
}

pub fn f(c: &Q) -> f64 {
    let (n, d) = (c.numer().to_string().parse::<f64>().unwrap(), c.denom().to_string().parse::<f64>().unwrap());
    n / d
}

/// `Σ P_i ‖x‖^{−m_i} (log‖x‖)^{l_i}`.
#[derive(Clone, Debug)]
pub struct Radial {
    pub n: usize,
    pub terms: Vec<(Poly, i32, u32)>,
}

impl Radial {
    pub fn term(p: Poly, m: i32, l: u32) -> Radial {
        Radial { n: p.n, terms: vec![(p, m, l)] }
    }

    pub fn zero(n: usize) -> Radial {
        Radial { n, terms: vec![] }
    }

    pub fn add(&self, o: &Radial) -> Radial {
        let mut t = self.terms.clone();
        t.extend(o.terms.iter().cloned());
        Radial { n: self.n, terms: t }
    }

    pub fn scale(&self, s: &Q) -> Radial {
        Radial {
            n: self.n,
            terms: self.terms.iter().map(|(p, m, l)| (p.scale(s), *m, *l)).collect(),
        }
    }

    pub fn sub(&self, o: &Radial) -> Radial {
        self.add(&o.scale(&-Q::one()))
    }

    /// `D(P r^{−m} L^l) = (DP) r^{−m} L^l − m x P r^{−m−2} L^l + l x P r^{−m−2} L^{l−1}`.
    pub fn dirac(&self) -> Radial {
        let x = Poly::x(self.n);
        let mut out = Vec::new();
        for (p, m, l) in &self.terms {
            out.push((p.dirac(), *m, *l));
            let xp = x.mul(p);
            if *m != 0 {
                out.push((xp.scale(&Q::from_integer((-m).into())), m + 2, *l));
            }
            if *l > 0 {
                out.push((xp.scale(&Q::from_integer((*l).into())), m + 2, l - 1));
            }
        }
        Radial { n: self.n, terms: out }
    }

    /// Exact zero test. Terms split by log power and by the parity of the
    /// radial exponent, since `log‖x‖` and odd powers of `‖x‖` are
    /// algebraically independent of polynomials.
    pub fn is_zero(&self) -> bool {
        let mut classes: BTreeMap<(i32, u32), Vec<(&Poly, i32)>> = BTreeMap::new();
        for (p, m, l) in &self.terms {
            classes.entry((m.rem_euclid(2), *l)).or_default().push((p, *m));
        }
        classes.values().all(|items| {
            let top = items.iter().map(|(_, m)| *m).max().unwrap();
            let mut acc = Poly::zero(self.n);
            for (p, m) in items {
                let mut lifted = (*p).clone();
                for _ in 0..(top - m) / 2 {
                    lifted = lifted.times_r2();
                }
                acc = acc.add(&lifted);
            }
            acc.is_zero()
        })
    }

    pub fn from_lib(e: &RadialExpr) -> Radial {
        Radial {
            n: e.dim(),
            terms: e.terms().map(|(p, m, l)| (Poly::from_lib(p), m, l)).collect(),
        }
    }
}

/// `x^p` for the vector variable: `x^{2q} = (−1)^q r^{2q}`, `x^{2q+1} = (−1)^q x r^{2q}`.
pub fn x_power(n: usize, p: u32, log: u32) -> Radial {
    let q = p / 2;
    let sign = if q % 2 == 0 { Q::one() } else { -Q::one() };
    let base = if p % 2 == 0 { Poly::one(n) } else { Poly::x(n) };
    Radial::term(base.scale(&sign), -2 * q as i32, log)
}

/// `G_k` from its constants, following the published shapes.
pub fn kernel(n: usize, k: usize, c: &Q, a: Option<&Q>) -> Radial {
    if n % 2 == 0 && k >= n {
        let p = (k - n) as u32;
        let a = a.expect("log case carries A(n,k)");
        x_power(n, p, 1).add(&x_power(n, p, 0).scale(a)).scale(c)
    } else if k % 2 == 1 {
        Radial::term(Poly::x(n).scale(c), n as i32 - k as i32 + 1, 0)
    } else {
        Radial::term(Poly::one(n).scale(c), n as i32 - k as i32, 0)
    }
}

/// Sparse floating multivector.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Mv(pub BTreeMap<u32, f64>);

impl Mv {
    pub fn zero() -> Self {
        Mv(BTreeMap::new())
    }

    pub fn scalar(s: f64) -> Self {
        let mut m = Mv::zero();
        m.add(0, s);
        m
    }

    pub fn vector(v: &[f64]) -> Self {
        let mut m = Mv::zero();
        for (j, a) in v.iter().enumerate() {
            m.add(1 << j, *a);
        }
        m
    }

    pub fn add(&mut self, b: u32, v: f64) {
        *self.0.entry(b).or_insert(0.0) += v;
    }

    pub fn plus(&self, o: &Mv) -> Mv {
        let mut r = self.clone();
        for (b, v) in &o.0 {
            r.add(*b, *v);
        }
        r
    }

    pub fn minus(&self, o: &Mv) -> Mv {
        self.plus(&o.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Mv {
        Mv(self.0.iter().map(|(b, v)| (*b, v * s)).collect())
    }

    pub fn mul(&self, o: &Mv) -> Mv {
        let mut r = Mv::zero();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                let (s, c) = blade_mul(*a, *b);
                r.add(c, s as f64 * x * y);
            }
        }
        r
    }

    pub fn conj(&self) -> Mv {
        Mv(self.0.iter().map(|(b, v)| (*b, blade_conj_sign(*b) as f64 * v)).collect())
    }

    pub fn rev(&self) -> Mv {
        Mv(self.0.iter().map(|(b, v)| (*b, blade_rev_sign(*b) as f64 * v)).collect())
    }

    pub fn scalar_part(&self) -> f64 {
        self.0.get(&0).copied().unwrap_or(0.0)
    }

    pub fn norm(&self) -> f64 {
        self.0.values().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn dist(&self, o: &Mv) -> f64 {
        self.minus(o).norm()
    }

    /// Inverse of a Clifford number whose product with its conjugate is scalar.
    pub fn inv(&self) -> Mv {
        let c = self.conj();
        let s = self.mul(&c);
        let s0 = s.scalar_part();
        assert!(s.minus(&Mv::scalar(s0)).norm() <= 1e-9 * s0.abs().max(1e-300), "not invertible as a versor: {self:?}");
        c.scale(1.0 / s0)
    }

    pub fn from_lib(m: &FMv) -> Mv {
        let mut r = Mv::zero();
        for (b, v) in m.terms() {
            r.add(*b, *v);
        }
        r
    }
}

/// Relative distance, normalised by `max(1, ‖b‖)`.
pub fn rel(a: &Mv, b: &Mv) -> f64 {
    a.dist(b) / b.norm().max(1.0)
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Cauchy kernel `x / ‖x‖^n`.
pub fn cauchy(x: &[f64]) -> Mv {
    Mv::vector(x).scale(norm(x).powi(-(x.len() as i32)))
}

/// Central-difference `D f` at `x`, step `h`.
pub fn fd_dirac(f: &dyn Fn(&[f64]) -> Mv, x: &[f64], h: f64) -> Mv {
    let mut acc = Mv::zero();
    for j in 0..x.len() {
        let (mut p, mut m) = (x.to_vec(), x.to_vec());
        p[j] += h;
        m[j] -= h;
        let d = f(&p).minus(&f(&m)).scale(0.5 / h);
        acc = acc.plus(&Mv::vector(&unit_f(x.len(), j)).mul(&d));
    }
    acc
}

pub fn unit_f(n: usize, j: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[j] = 1.0;
    e
}

/// Random rational coefficient on a random blade.
pub fn random_blade_coeff(rng: &mut impl rand::Rng, n: usize) -> (u32, Q) {
    let b = rng.gen_range(0..(1u32 << n));
    let mut c = q(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    if c.is_zero() {
        c = Q::one();
    }
    (b, c)
}

/// `Σ_i P_i c_i` with random rational multivector constants on the right.
pub fn combine_right(parts: &[Poly], rng: &mut impl rand::Rng) -> Poly {
    let n = parts[0].n;
    let mut acc = Poly::zero(n);
    for p in parts {
        let (b, c) = random_blade_coeff(rng, n);
        acc = acc.add(&p.mul(&Poly::monomial(n, vec![0; n], b, c)));
    }
    acc
}

pub fn is_negative(c: &Q) -> bool {
    c.is_negative()
}
