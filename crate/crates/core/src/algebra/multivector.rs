use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::blade::{self, Blade, MAX_DIM};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// An element of `Cl_n` (or its complexification) stored as a sparse,
/// blade-sorted list of nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S> {
    dim: usize,
    terms: Vec<(Blade, S)>,
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(dim))
    }
}

fn normalize<S: Scalar>(mut terms: Vec<(Blade, S)>) -> Vec<(Blade, S)> {
    terms.sort_by_key(|t| t.0);
    let mut out: Vec<(Blade, S)> = Vec::with_capacity(terms.len());
    for (b, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == b => {
                let sum = std::mem::replace(&mut last.1, S::zero()) + c;
                last.1 = sum;
            }
            _ => out.push((b, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl<S: Scalar> Multivector<S> {
    /// # Panics
    /// If `dim` is outside `1..=16`; use [`Multivector::try_zero`] for
    /// unvalidated input.
    pub fn zero(dim: usize) -> Self {
        check_dim(dim).expect("invalid algebra dimension");
        Multivector {
            dim,
            terms: Vec::new(),
        }
    }

    pub fn try_zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Multivector {
            dim,
            terms: Vec::new(),
        })
    }

    pub fn scalar(dim: usize, s: S) -> Self {
        Self::from_terms(dim, [(0, s)])
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    /// Generator `e_i`, 1-based.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!((1..=dim).contains(&i), "generator e{i} not in Cl_{dim}");
        Self::from_terms(dim, [(1 << (i - 1), S::one())])
    }

    /// `Σ v_j e_{j+1}`.
    pub fn vector(dim: usize, coords: &[S]) -> Self {
        assert!(coords.len() <= dim);
        Self::from_terms(
            dim,
            coords
                .iter()
                .enumerate()
                .map(|(j, c)| (1 << j, c.clone())),
        )
    }

    /// # Panics
    /// If a blade does not fit in `Cl_dim`.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        Self::try_from_terms(dim, terms).expect("blade outside algebra")
    }

    pub fn try_from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, S)>) -> Result<Self> {
        check_dim(dim)?;
        let terms: Vec<_> = terms.into_iter().collect();
        if let Some(&(b, _)) = terms.iter().find(|t| t.0 >> dim != 0) {
            return Err(Error::BladeOutOfRange { blade: b, dim });
        }
        Ok(Multivector {
            dim,
            terms: normalize(terms),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(Blade, S)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> S {
        self.terms
            .binary_search_by_key(&b, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| S::zero())
    }

    pub fn scalar_part(&self) -> S {
        self.coeff(0)
    }

    pub fn grade_part(&self, k: u32) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|t| blade::grade(t.0) == k)
                .cloned()
                .collect(),
        }
    }

    /// Grades present with nonzero coefficient.
    pub fn grades(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.terms.iter().map(|t| blade::grade(t.0)).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn is_vector(&self) -> bool {
        self.terms.iter().all(|t| blade::grade(t.0) == 1)
    }

    /// Coordinates of a grade-1 element.
    pub fn vector_coords(&self) -> Result<Vec<S>> {
        if !self.is_vector() {
            return Err(Error::NotAVector);
        }
        Ok((0..self.dim).map(|j| self.coeff(1 << j)).collect())
    }

    /// Re-embeds into `Cl_dim` for `dim ≥` the highest generator used.
    pub fn embed(&self, dim: usize) -> Result<Self> {
        Self::try_from_terms(dim, self.terms.iter().cloned())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector::from_terms(self.dim, self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    pub fn scale(&self, s: &S) -> Self {
        Multivector::from_terms(
            self.dim,
            self.terms.iter().map(|(b, c)| (*b, c.clone() * s.clone())),
        )
    }

    /// Geometric product with dimension check.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::ContextMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (neg, b) = blade::blade_product(*ba, *bb);
                let c = ca.clone() * cb.clone();
                acc.push((b, if neg { -c } else { c }));
            }
        }
        Ok(Multivector {
            dim: self.dim,
            terms: normalize(acc),
        })
    }

    fn signed_by(&self, negates: impl Fn(u32) -> bool) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| {
                    let c = c.clone();
                    (*b, if negates(blade::grade(*b)) { -c } else { c })
                })
                .collect(),
        }
    }

    /// Reverses the order of the factors of every blade (`ã`).
    pub fn reversion(&self) -> Self {
        self.signed_by(blade::reversion_negates)
    }

    /// Clifford conjugation (`ā`): reversion composed with the grade involution.
    pub fn conjugation(&self) -> Self {
        self.signed_by(blade::conjugation_negates)
    }

    pub fn grade_involution(&self) -> Self {
        self.signed_by(blade::grade_involution_negates)
    }

    /// Both involutions at once: `(ã, ā)`.
    pub fn involutions(&self) -> (Self, Self) {
        (self.reversion(), self.conjugation())
    }

    /// `x⁻¹ = −x/‖x‖²` for a nonzero vector.
    pub fn vector_inverse(&self) -> Result<Self> {
        if !self.is_vector() {
            return Err(Error::NotAVector);
        }
        let norm_sq = self
            .terms
            .iter()
            .fold(S::zero(), |acc, (_, c)| acc + c.clone() * c.clone());
        let inv = norm_sq.recip().ok_or(Error::ZeroVector)?;
        Ok(self.scale(&(-inv)))
    }

    /// Inverse of an element whose product with its conjugate is a nonzero
    /// scalar (vectors and products of vectors).
    pub fn versor_inverse(&self) -> Result<Self> {
        let conj = self.conjugation();
        let n = self.geometric_product(&conj)?;
        if n.terms.iter().any(|t| t.0 != 0) {
            return Err(Error::Unsupported("an element with scalar norm".into()));
        }
        let inv = n.scalar_part().recip().ok_or(Error::ZeroVector)?;
        Ok(conj.scale(&inv))
    }

    /// `Σ |c_A|²` over all blades.
    pub fn norm_sq(&self) -> f64 {
        self.terms.iter().map(|t| t.1.abs_sq_f64()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Distance in coefficient space, ‖a − b‖.
    pub fn dist(&self, other: &Self) -> f64 {
        (self - other).norm()
    }

    /// Largest blade index used (0 for scalars).
    pub fn max_generator(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 32 - t.0.leading_zeros() as usize)
            .max()
            .unwrap_or(0)
    }
}

impl Multivector<f64> {

    /// Drops coefficients with magnitude below `eps`.
    pub fn chop(&self, eps: f64) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|t| t.1.abs() > eps)
                .cloned()
                .collect(),
        }
    }

    pub fn from_f64_vector(coords: &[f64]) -> Self {
        Self::vector(coords.len(), coords)
    }
}

fn add_terms<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>, negate_b: bool) -> Multivector<S> {
    assert_eq!(a.dim, b.dim, "context mismatch in multivector sum");
    let terms = a
        .terms
        .iter()
        .cloned()
        .chain(b.terms.iter().map(|(bl, c)| {
            let c = c.clone();
            (*bl, if negate_b { -c } else { c })
        }))
        .collect();
    Multivector {
        dim: a.dim,
        terms: normalize(terms),
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        add_terms(self, rhs, false)
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        add_terms(&self, &rhs, false)
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        add_terms(self, rhs, true)
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        add_terms(&self, &rhs, true)
    }
}

impl<S: Scalar> AddAssign<&Multivector<S>> for Multivector<S> {
    fn add_assign(&mut self, rhs: &Multivector<S>) {
        *self = add_terms(self, rhs, false);
    }
}

impl<S: Scalar> SubAssign<&Multivector<S>> for Multivector<S> {
    fn sub_assign(&mut self, rhs: &Multivector<S>) {
        *self = add_terms(self, rhs, true);
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

/// Geometric product.
///
/// # Panics
/// On a context mismatch; [`Multivector::geometric_product`] returns an error
/// instead.
impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.geometric_product(rhs).expect("context mismatch")
    }
}

impl<S: Scalar> Mul for Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rational, Rational};

    type Mv = Multivector<Rational>;

    fn e(dim: usize, i: usize) -> Mv {
        Mv::basis(dim, i)
    }

    #[test]
    fn defining_relations() {
        let e1 = e(3, 1);
        let e2 = e(3, 2);
        assert_eq!(&e1 * &e1, -Mv::one(3));
        let e12 = &e1 * &e2;
        assert_eq!(&e12 * &e1, e2);
        assert_eq!(&e12 * &e12, -Mv::one(3));
    }

    #[test]
    fn involutions_on_small_cases() {
        let e12 = &e(3, 1) * &e(3, 2);
        assert_eq!(e12.reversion(), -e12.clone());
        assert_eq!(e(3, 1).conjugation(), -e(3, 1));
        let x = Mv::vector(3, &[rational(3, 1), rational(4, 1)]);
        assert_eq!(&x.conjugation() * &x, Mv::scalar(3, rational(25, 1)));
    }

    #[test]
    fn vector_inverse_examples() {
        assert_eq!(e(3, 1).vector_inverse().unwrap(), -e(3, 1));
        let two_e1 = e(3, 1).scale(&rational(2, 1));
        assert_eq!(two_e1.vector_inverse().unwrap(), e(3, 1).scale(&rational(-1, 2)));
        let x = &e(3, 1) + &e(3, 2);
        let inv = x.vector_inverse().unwrap();
        assert_eq!(inv, x.scale(&rational(-1, 2)));
        assert_eq!(&x * &inv, Mv::one(3));
        assert_eq!(&inv * &x, Mv::one(3));
    }

    #[test]
    fn vector_inverse_errors() {
        assert_eq!(Mv::zero(3).vector_inverse(), Ok(Mv::zero(3)).and(Err(Error::ZeroVector)));
        assert_eq!((&e(3, 1) * &e(3, 2)).vector_inverse(), Err(Error::NotAVector));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        assert_eq!(
            e(3, 1).geometric_product(&e(4, 1)),
            Err(Error::ContextMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn dimension_bounds() {
        assert!(Mv::try_zero(0).is_err());
        assert!(Mv::try_zero(17).is_err());
        assert!(Mv::try_zero(16).is_ok());
        assert!(Mv::try_from_terms(2, [(0b100, rational(1, 1))]).is_err());
    }

    #[test]
    fn versor_inverse_of_bivector_rotor() {
        let r = &Mv::one(3) + &(&e(3, 1) * &e(3, 2));
        let inv = r.versor_inverse().unwrap();
        assert_eq!(&r * &inv, Mv::one(3));
    }
}
