use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::algebra::{Blade, Complex64, Multivector, RMv, Rational};
use crate::error::{Error, Result};

/// Which coordinates a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariableKind {
    /// `x₁…x_n` paired with `e₁…e_n` in `Cl_n`.
    Vector,
    /// `x₀, x₁…x_n` over `Cl_n`, where `x₀` is the identity direction.
    Unital,
}

/// Polynomial in real variables with exact `Cl_n` coefficients.
///
/// Besides the spatial variables it may carry `nparams` parameter variables
/// `y1, y2, …` that the differential operators treat as constants.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordPolynomial {
    dim: usize,
    kind: VariableKind,
    nparams: usize,
    terms: BTreeMap<Monomial, RMv>,
}

pub type Poly = CliffordPolynomial;

/// Upper bound on parameter variables.
pub const MAX_PARAMS: usize = 16;

pub(crate) fn check_params(nparams: usize) -> Result<()> {
    if nparams > MAX_PARAMS {
        return Err(Error::InvalidParameter(format!(
            "{nparams} parameter variables exceed the limit of {MAX_PARAMS}"
        )));
    }
    Ok(())
}

impl CliffordPolynomial {
    pub fn zero(dim: usize, kind: VariableKind) -> Self {
        Self::zero_with_params(dim, kind, 0)
    }

    pub fn zero_with_params(dim: usize, kind: VariableKind, nparams: usize) -> Self {
        RMv::zero(dim);
        CliffordPolynomial {
            dim,
            kind,
            nparams,
            terms: BTreeMap::new(),
        }
    }

    /// Same shape (dimension, kind, parameters) as `self`, no terms.
    pub fn zero_like(&self) -> Self {
        Self::zero_with_params(self.dim, self.kind, self.nparams)
    }

    pub fn constant(dim: usize, kind: VariableKind, c: RMv) -> Self {
        let mut p = Self::zero(dim, kind);
        p.add_term(Monomial::one(p.total_vars()), c);
        p
    }

    pub fn constant_like(&self, c: RMv) -> Self {
        let mut p = self.zero_like();
        p.add_term(Monomial::one(p.total_vars()), c);
        p
    }

    pub fn one(dim: usize, kind: VariableKind) -> Self {
        Self::constant(dim, kind, RMv::one(dim))
    }

    /// Builds from `(exponents, coefficient)` pairs; exponent vectors must have
    /// one entry per spatial and parameter variable.
    pub fn from_terms(
        dim: usize,
        kind: VariableKind,
        nparams: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, RMv)>,
    ) -> Result<Self> {
        crate::algebra::multivector::check_dim(dim)?;
        check_params(nparams)?;
        let mut p = Self::zero_with_params(dim, kind, nparams);
        for (e, c) in terms {
            if e.len() != p.total_vars() {
                return Err(Error::InvalidParameter(format!(
                    "exponent vector of length {} where {} variables are expected",
                    e.len(),
                    p.total_vars()
                )));
            }
            if c.dim() != dim {
                return Err(Error::ContextMismatch {
                    left: dim,
                    right: c.dim(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// The spatial coordinate with the given index: `x_i` (1-based) for vector
    /// variables, `x_i` (0-based) for unital ones.
    pub fn var(dim: usize, kind: VariableKind, i: usize) -> Self {
        let mut p = Self::zero(dim, kind);
        let slot = match kind {
            VariableKind::Vector => {
                assert!((1..=dim).contains(&i));
                i - 1
            }
            VariableKind::Unital => {
                assert!(i <= dim);
                i
            }
        };
        let n = p.total_vars();
        p.add_term(Monomial::var(n, slot), RMv::one(dim));
        p
    }

    /// Parameter variable `y_i` (1-based) in a polynomial ring with `nparams`
    /// parameters.
    pub fn param(dim: usize, kind: VariableKind, nparams: usize, i: usize) -> Self {
        assert!((1..=nparams).contains(&i));
        let mut p = Self::zero_with_params(dim, kind, nparams);
        let slot = p.nvars() + i - 1;
        let n = p.total_vars();
        p.add_term(Monomial::var(n, slot), RMv::one(dim));
        p
    }

    /// `x = Σ x_j e_j` in vector variables.
    pub fn x_vector(dim: usize) -> Self {
        Self::x_vector_with_params(dim, 0)
    }

    pub fn x_vector_with_params(dim: usize, nparams: usize) -> Self {
        let mut p = Self::zero_with_params(dim, VariableKind::Vector, nparams);
        let n = p.total_vars();
        for j in 0..dim {
            p.add_term(Monomial::var(n, j), RMv::basis(dim, j + 1));
        }
        p
    }

    /// `‖x‖² = Σ x_j²` over the spatial variables (including `x₀` when unital).
    pub fn r_squared_like(&self) -> Self {
        let mut p = self.zero_like();
        let n = p.total_vars();
        for j in 0..self.nvars() {
            p.add_term(Monomial::var(n, j).with(j, 2), RMv::one(self.dim));
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> VariableKind {
        self.kind
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    /// Number of spatial variables.
    pub fn nvars(&self) -> usize {
        match self.kind {
            VariableKind::Vector => self.dim,
            VariableKind::Unital => self.dim + 1,
        }
    }

    pub fn total_vars(&self) -> usize {
        self.nvars() + self.nparams
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RMv)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> RMv {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| RMv::zero(self.dim))
    }

    fn add_term(&mut self, m: Monomial, c: RMv) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn same_shape(&self, other: &Self) {
        assert!(
            self.dim == other.dim && self.kind == other.kind && self.nparams == other.nparams,
            "polynomial shape mismatch"
        );
    }

    /// Spatial degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        let n = self.nvars();
        self.terms.keys().map(|m| m.partial_degree(n)).max()
    }

    pub fn homogeneous_part(&self, k: u32) -> Self {
        let n = self.nvars();
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            if m.partial_degree(n) == k {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    /// Nonzero homogeneous components keyed by spatial degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let n = self.nvars();
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.partial_degree(n))
                .or_insert_with(|| self.zero_like())
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_components().len() <= 1
    }

    pub fn map_coeffs(&self, f: impl Fn(&RMv) -> RMv) -> Self {
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    /// `a · p`.
    pub fn left_mul_mv(&self, a: &RMv) -> Self {
        self.map_coeffs(|c| a * c)
    }

    /// `p · a`.
    pub fn right_mul_mv(&self, a: &RMv) -> Self {
        self.map_coeffs(|c| c * a)
    }

    pub fn conjugation(&self) -> Self {
        self.map_coeffs(|c| c.conjugation())
    }

    pub fn reversion(&self) -> Self {
        self.map_coeffs(|c| c.reversion())
    }

    /// Keeps only grade `k` in every coefficient.
    pub fn grade_part(&self, k: u32) -> Self {
        self.map_coeffs(|c| c.grade_part(k))
    }

    /// Blades occurring in some coefficient.
    pub fn blade_support(&self) -> Vec<Blade> {
        let mut b: Vec<Blade> = self
            .terms
            .values()
            .flat_map(|c| c.terms().iter().map(|t| t.0))
            .collect();
        b.sort_unstable();
        b.dedup();
        b
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.constant_like(RMv::one(self.dim));
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂(variable slot i)`; slots count spatial variables first, then
    /// parameters.
    pub fn partial(&self, slot: usize) -> Self {
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.derive(slot) {
                p.add_term(lowered, c.scale(&Rational::from_integer(e.into())));
            }
        }
        p
    }

    fn require(&self, kind: VariableKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::Unsupported(match kind {
                VariableKind::Vector => "a polynomial in vector variables".into(),
                VariableKind::Unital => "a polynomial in unital variables".into(),
            }))
        }
    }

    /// `D f = Σ e_j ∂_j f`.
    pub fn dirac_left(&self) -> Result<Self> {
        self.require(VariableKind::Vector)?;
        let mut out = self.zero_like();
        for j in 0..self.dim {
            let ej = RMv::basis(self.dim, j + 1);
            out = &out + &self.partial(j).left_mul_mv(&ej);
        }
        Ok(out)
    }

    /// `f D = Σ ∂_j f e_j`.
    pub fn dirac_right(&self) -> Result<Self> {
        self.require(VariableKind::Vector)?;
        let mut out = self.zero_like();
        for j in 0..self.dim {
            let ej = RMv::basis(self.dim, j + 1);
            out = &out + &self.partial(j).right_mul_mv(&ej);
        }
        Ok(out)
    }

    /// `D^k f`.
    pub fn dirac_power(&self, k: u32) -> Result<Self> {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.dirac_left()?;
        }
        Ok(p)
    }

    fn unital_dirac(&self, sign: i64) -> Result<Self> {
        self.require(VariableKind::Unital)?;
        let mut out = self.partial(0);
        for j in 1..=self.dim {
            let ej = RMv::basis(self.dim, j).scale(&Rational::from_integer(sign.into()));
            out = &out + &self.partial(j).left_mul_mv(&ej);
        }
        Ok(out)
    }

    /// `D′ f = ∂₀f + Σ e_j ∂_j f`.
    pub fn dirac_unital(&self) -> Result<Self> {
        self.unital_dirac(1)
    }

    /// `D̄′ f = ∂₀f − Σ e_j ∂_j f`.
    pub fn dirac_unital_bar(&self) -> Result<Self> {
        self.unital_dirac(-1)
    }

    /// `Δ f = Σ ∂_j² f` over all spatial variables.
    pub fn laplacian(&self) -> Self {
        let mut out = self.zero_like();
        for j in 0..self.nvars() {
            out = &out + &self.partial(j).partial(j);
        }
        out
    }

    /// `E f = Σ x_j ∂_j f`.
    pub fn euler(&self) -> Self {
        let n = self.nvars();
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            let d = m.partial_degree(n);
            p.add_term(m.clone(), c.scale(&Rational::from_integer(d.into())));
        }
        p
    }

    /// `Λ f = Σ_{i<k} e_i e_k (x_i ∂_k − x_k ∂_i) f`.
    pub fn angular(&self) -> Result<Self> {
        self.require(VariableKind::Vector)?;
        let mut out = self.zero_like();
        for i in 0..self.dim {
            for k in i + 1..self.dim {
                let eik = &RMv::basis(self.dim, i + 1) * &RMv::basis(self.dim, k + 1);
                let xi = self.slot_var(i);
                let xk = self.slot_var(k);
                let rot = &(&xi * &self.partial(k)) - &(&xk * &self.partial(i));
                out = &out + &rot.left_mul_mv(&eik);
            }
        }
        Ok(out)
    }

    fn slot_var(&self, slot: usize) -> Self {
        let mut p = self.zero_like();
        let n = p.total_vars();
        p.add_term(Monomial::var(n, slot), RMv::one(self.dim));
        p
    }

    /// `x · f` with `x = Σ x_j e_j`.
    pub fn x_times(&self) -> Result<Self> {
        self.require(VariableKind::Vector)?;
        Ok(&Self::x_vector_with_params(self.dim, self.nparams) * self)
    }

    /// Substitutes polynomial `subs[i]` for variable slot `i`. Coefficients
    /// stay on the left of the substituted product, taken in slot order.
    pub fn substitute(&self, subs: &[Self]) -> Self {
        assert_eq!(subs.len(), self.total_vars());
        let target = &subs[0];
        let mut out = target.zero_like();
        let mut cache: BTreeMap<(usize, u32), Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = target.constant_like(c.embed(target.dim).expect("coefficient fits"));
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = cache
                    .entry((i, e))
                    .or_insert_with(|| subs[i].pow(e))
                    .clone();
                term = &term * &factor;
            }
            out = &out + &term;
        }
        out
    }

    /// `p(x + v)`, shifting the spatial variables.
    pub fn shift(&self, v: &[Rational]) -> Self {
        assert_eq!(v.len(), self.nvars());
        let one = RMv::one(self.dim);
        let subs: Vec<Self> = (0..self.total_vars())
            .map(|i| {
                let xi = self.slot_var(i);
                if i < self.nvars() {
                    &xi + &self.constant_like(one.scale(&v[i]))
                } else {
                    xi
                }
            })
            .collect();
        self.substitute(&subs)
    }

    /// Sets the spatial variable in `slot` to zero.
    pub fn restrict_zero(&self, slot: usize) -> Self {
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            if m.0[slot] == 0 {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    /// True when no monomial involves the given slot.
    pub fn independent_of(&self, slot: usize) -> bool {
        self.terms.keys().all(|m| m.0[slot] == 0)
    }

    /// Normal form modulo `‖x‖² − 1`: every power `x_first^e` with `e ≥ 2` is
    /// rewritten using `x_first² = 1 − Σ_{others} x_j²`.
    pub fn reduce_mod_sphere(&self) -> Self {
        let n = self.nvars();
        let mut p = self.clone();
        loop {
            let Some((m, c)) = p
                .terms
                .iter()
                .find(|(m, _)| m.0[0] >= 2)
                .map(|(m, c)| (m.clone(), c.clone()))
            else {
                return p;
            };
            p.terms.remove(&m);
            let lowered = m.with(0, m.0[0] - 2);
            p.add_term(lowered.clone(), c.clone());
            for j in 1..n {
                let mut e = lowered.0.clone();
                e[j] += 2;
                p.add_term(Monomial(e), -c.clone());
            }
        }
    }

    /// Exact quotient by `‖x‖²`, or `None` when it does not divide.
    pub fn div_r_squared(&self) -> Option<Self> {
        let r2 = self.r_squared_like();
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        loop {
            let Some((m, c)) = rem
                .terms
                .iter()
                .filter(|(m, _)| m.0[0] >= 2)
                .max_by_key(|(m, _)| m.0[0])
                .map(|(m, c)| (m.clone(), c.clone()))
            else {
                break;
            };
            let mut q = self.zero_like();
            q.add_term(m.with(0, m.0[0] - 2), c);
            rem = &rem - &(&q * &r2);
            quot = &quot + &q;
        }
        rem.is_zero().then_some(quot)
    }

    /// Exact evaluation at a point giving every variable slot.
    ///
    /// # Panics
    /// If `point` does not have one entry per variable slot.
    pub fn evaluate(&self, point: &[Rational]) -> RMv {
        assert_eq!(point.len(), self.total_vars(), "point dimension");
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut out = RMv::zero(self.dim);
        for (m, c) in &self.terms {
            let mut s = Rational::one();
            for (i, &e) in m.0.iter().enumerate() {
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &point[i];
                    table.push(next);
                }
                s *= &table[e as usize];
            }
            if !s.is_zero() {
                out += &c.scale(&s);
            }
        }
        out
    }

    /// Floating evaluation.
    pub fn evaluate_f64(&self, point: &[f64]) -> Multivector<f64> {
        super::numeric::NumericPoly::new(self).eval(point)
    }

    /// Evaluation at a complex point (the polynomial's holomorphic extension).
    pub fn evaluate_complex(&self, point: &[Complex64]) -> Multivector<Complex64> {
        let mut out = Multivector::<Complex64>::zero(self.dim);
        for (m, c) in &self.terms {
            let mut s = Complex64::new(1.0, 0.0);
            for (v, e) in point.iter().zip(&m.0) {
                s *= v.powu(*e);
            }
            let coeff = crate::algebra::to_complex(&crate::algebra::to_f64(c));
            out += &coeff.scale(&s);
        }
        out
    }
}

impl Add for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn add(self, rhs: Self) -> CliffordPolynomial {
        self.same_shape(rhs);
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Sub for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(self, rhs: Self) -> CliffordPolynomial {
        self.same_shape(rhs);
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), -c);
        }
        p
    }
}

impl Neg for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        self.map_coeffs(|c| -c)
    }
}

/// Product of polynomials; coefficients multiply in the Clifford algebra, so
/// the order of factors matters.
impl Mul for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn mul(self, rhs: Self) -> CliffordPolynomial {
        self.same_shape(rhs);
        let mut p = self.zero_like();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                p.add_term(ma.mul(mb), ca * cb);
            }
        }
        p
    }
}

impl Add for CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn add(self, rhs: Self) -> CliffordPolynomial {
        &self + &rhs
    }
}

impl Sub for CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(self, rhs: Self) -> CliffordPolynomial {
        &self - &rhs
    }
}

impl Mul for CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn mul(self, rhs: Self) -> CliffordPolynomial {
        &self * &rhs
    }
}

impl Neg for CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        -&self
    }
}
